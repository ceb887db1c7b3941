from metric.services.neighborhood import (
    analytic_candidate_count,
    neighborhood_count_report,
    termwise_candidate_count,
)
from testing.acceptance.base import check


def run():
    print("Running: scenario_formula_check")
    for length in range(0, 21):
        for alphabet_size in (10, 26, 62, 95, 256):
            analytic = analytic_candidate_count(length, alphabet_size, 1)
            check(analytic == (2 * length + 1) * alphabet_size, f"#Sp(1) closed form wrong at L={length}, N={alphabet_size}")
            check(
                analytic == termwise_candidate_count(length, alphabet_size, 1),
                f"#Sp(1) closed form and case sum differ at L={length}, N={alphabet_size}",
            )
    # radius 2: reported side by side, equality not expected
    for length in (1, 2):
        for alphabet_size in (2, 3):
            report = neighborhood_count_report(length, alphabet_size, 2)
            print(
                f"  L={length} N={alphabet_size}: analytic={report.analytic_count} "
                f"termwise={report.termwise_count} exact={report.exact_distinct_count}"
            )
            check(report.exact_distinct_count is not None, "exact count missing from a small radius-2 report")
    print("✓ Passed")
