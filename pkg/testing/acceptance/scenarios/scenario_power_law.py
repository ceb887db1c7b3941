from netstats.services.powerlaw import fit_power_law, sample_discrete_power_law
from testing.acceptance.base import check, time_limit


def run():
    print("Running: scenario_power_law")
    with time_limit("three fits of 10^5 samples", 10):
        for exponent in (2.0, 2.5, 3.0):
            fit = fit_power_law(sample_discrete_power_law(exponent, 1, 100_000, seed=1), x_min=1)
            print(f"  r={exponent}: fitted {fit.exponent:.4f}")
            check(abs(fit.exponent - exponent) <= 0.1, f"fitted {fit.exponent:.4f} for r={exponent}")
    print("✓ Passed")
