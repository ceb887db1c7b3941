"""
Discrete power law P(k) = k^-r / zeta(r, x_min) for k >= x_min.

fit_power_law maximizes the likelihood over r numerically; the negative
log-likelihood of samples x_1..x_n is r * sum(ln x_i) + n * ln zeta(r, x_min).
"""
import logging
from typing import Iterable

import numpy as np
from django.conf import settings
from scipy.optimize import minimize_scalar
from scipy.special import zeta

from general.errors import ArgumentError, DataError
from netstats import config
from netstats.models import PowerLawFit

logger = logging.getLogger(__name__)


class InsufficientDataError(DataError):
    pass


class DegenerateFitError(DataError):
    pass


def _negative_log_likelihood(exponent: float, log_sum: float, count: int, x_min: int) -> float:
    return exponent * log_sum + count * np.log(zeta(exponent, x_min))


def fit_power_law(samples: Iterable[int], x_min: int = config.DEFAULT_X_MIN, min_samples: int = None) -> PowerLawFit:
    if x_min < 1:
        raise ArgumentError(f"x_min must be >= 1, got {x_min}")
    if min_samples is None:
        min_samples = getattr(settings, "PWNET_POWERLAW_MIN_SAMPLES", config.POWERLAW_MIN_SAMPLES)
    values = np.asarray(list(samples), dtype=np.int64)
    if values.size and values.min() < 1:
        raise ArgumentError("power-law samples must be positive integers")

    kept = values[values >= x_min]
    if kept.size < min_samples:
        raise InsufficientDataError(
            f"{kept.size} samples >= x_min={x_min}; at least {min_samples} are needed for a fit"
        )
    if np.all(kept == kept[0]):
        raise DegenerateFitError(f"all {kept.size} samples equal {kept[0]}; the exponent is not identifiable")

    log_sum = float(np.log(kept).sum())
    result = minimize_scalar(
        _negative_log_likelihood,
        bounds=config.EXPONENT_BOUNDS,
        args=(log_sum, int(kept.size), x_min),
        method="bounded",
        options={"xatol": 1e-6},
    )
    if not result.success:
        raise DegenerateFitError(f"likelihood maximization failed: {result.message}")
    fit = PowerLawFit(
        exponent=float(result.x),
        x_min=x_min,
        sample_count=int(kept.size),
        log_likelihood=float(-result.fun),
    )
    logger.info(f"[fit_power_law] r={fit.exponent:.4f} over {fit.sample_count} samples (x_min={x_min})")
    return fit


def sample_discrete_power_law(exponent: float, x_min: int, size: int, seed: int = config.DEFAULT_SEED) -> np.ndarray:
    """
    Inverse-transform draws. Values below x_min + SAMPLER_TABLE_SIZE come from the exact
    CDF; larger ones from the continuous approximation (x0 - 1/2)(1 - u)^(-1/(r-1)) + 1/2.
    """
    if exponent <= 1:
        raise ArgumentError(f"exponent must be > 1, got {exponent}")
    if x_min < 1 or size < 0:
        raise ArgumentError(f"need x_min >= 1 and size >= 0, got x_min={x_min}, size={size}")
    rng = np.random.default_rng(seed)
    support = np.arange(x_min, x_min + config.SAMPLER_TABLE_SIZE, dtype=np.float64)
    cdf = np.cumsum(support ** -exponent) / zeta(exponent, x_min)

    u = rng.random(size)
    out = np.empty(size, dtype=np.int64)
    head = u < cdf[-1]
    out[head] = support[np.searchsorted(cdf, u[head], side="right")].astype(np.int64)

    tail_count = int((~head).sum())
    if tail_count:
        x0 = x_min + config.SAMPLER_TABLE_SIZE
        v = rng.random(tail_count)
        tail = np.floor((x0 - 0.5) * (1.0 - v) ** (-1.0 / (exponent - 1.0)) + 0.5)
        out[~head] = np.minimum(tail, config.SAMPLER_MAX_VALUE).astype(np.int64)
    return out
