"""Zero-mean AR(1) process: simulation, estimation, residuals, likelihood.

The model is y_t = phi * y_{t-1} + eps_t with eps_t ~ N(0, sigma2) and the
convention y_0 = 0 throughout, so the first observation is pure noise.
All functions are pure; nothing here owns random state.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import DegenerateSeriesError, ParameterDomainError

__all__ = [
    "TimeSeries",
    "Ar1Params",
    "FitResult",
    "simulate_ar1",
    "mle_phi",
    "mle_sigma2",
    "fit",
    "residuals",
    "sse",
    "log_likelihood",
    "log_likelihood_on_grid",
]


@dataclass(frozen=True)
class TimeSeries:
    """An observed or simulated real-valued series under the y_0 = 0 convention.

    ``demeaned`` records whether the sample mean was already subtracted;
    it is bookkeeping only and does not change any formula.
    """

    values: np.ndarray
    demeaned: bool = False

    def __post_init__(self):
        v = np.asarray(self.values, dtype=float)
        if v.ndim != 1 or v.size < 1:
            raise ValueError("series must be a one-dimensional array with n >= 1")
        if not np.all(np.isfinite(v)):
            raise ValueError("series contains non-finite values")
        object.__setattr__(self, "values", v)

    def __len__(self) -> int:
        return self.values.size


@dataclass(frozen=True)
class Ar1Params:
    """Coefficient and innovation variance of an AR(1) process."""

    phi: float
    sigma2: float

    def __post_init__(self):
        if not self.sigma2 > 0:
            raise ParameterDomainError(f"sigma2 must be positive, got {self.sigma2}")


@dataclass(frozen=True)
class FitResult:
    """Maximum likelihood fit of the AR(1) coefficient and noise variance."""

    phi_hat: float
    sigma2_hat: float
    residuals: np.ndarray = field(repr=False)


def simulate_ar1(phi: float, sigma: float, n: int, noise: np.ndarray) -> TimeSeries:
    """Generate y_1 = sigma*eps_1, y_t = phi*y_{t-1} + sigma*eps_t for t = 2..n.

    ``noise`` must supply at least n standard normal deviates; exactly the
    first n are consumed.  Any real ``phi`` is admissible, including the
    unit root and explosive values.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if not sigma > 0:
        raise ParameterDomainError(f"sigma must be positive, got {sigma}")
    eps = np.asarray(noise, dtype=float)
    if eps.size < n:
        raise ValueError(f"noise supplies {eps.size} deviates, need {n}")
    y = np.empty(n)
    prev = 0.0
    for t in range(n):
        prev = phi * prev + sigma * eps[t]
        y[t] = prev
    return TimeSeries(y)


def _lag_sums(y: np.ndarray) -> tuple[float, float]:
    # sum over t=1..n of y_{t-1}*y_t and y_{t-1}^2, with y_0 = 0; the t=1
    # terms vanish, so these equal the sums started at t=2.
    num = float(np.dot(y[:-1], y[1:]))
    den = float(np.dot(y[:-1], y[:-1]))
    return num, den


def mle_phi(series: TimeSeries) -> float:
    """Maximum likelihood estimator sum(y_{t-1} y_t) / sum(y_{t-1}^2), y_0 = 0.

    Raises
    ------
    DegenerateSeriesError
        If all of y_1, ..., y_{n-1} are zero, making the denominator vanish.
    """
    num, den = _lag_sums(series.values)
    if den == 0.0:
        raise DegenerateSeriesError("sum of squared lagged values is zero")
    return num / den


def mle_sigma2(series: TimeSeries) -> float:
    """Maximum likelihood estimator of the innovation variance.

    Computes n^{-1} * (sum_{t=2}^n y_t^2 - (sum_{t=2}^n y_{t-1} y_t)^2
    / sum_{t=2}^n y_{t-1}^2).  The sums start at t = 2, so the y_1^2 term
    is deliberately not included.
    """
    y = series.values
    n = y.size
    num, den = _lag_sums(y)
    if den == 0.0:
        raise DegenerateSeriesError("sum of squared lagged values is zero")
    total = float(np.dot(y[1:], y[1:]))
    return max(total - num * num / den, 0.0) / n


def fit(series: TimeSeries) -> FitResult:
    """Joint MLE of (phi, sigma2) plus the in-sample residuals."""
    phi_hat = mle_phi(series)
    return FitResult(
        phi_hat=phi_hat,
        sigma2_hat=mle_sigma2(series),
        residuals=residuals(series, phi_hat),
    )


def residuals(series: TimeSeries, phi: float) -> np.ndarray:
    """Innovation estimates e_1 = y_1 and e_t = y_t - phi*y_{t-1} for t >= 2.

    Defining e_1 = y_1 keeps the residual vector at full length n, which the
    resampling bootstrap relies on.
    """
    y = series.values
    e = np.empty_like(y)
    e[0] = y[0]
    e[1:] = y[1:] - phi * y[:-1]
    return e


def sse(series: TimeSeries, phi: float) -> float:
    """Sufficient-statistic form of the squared-error sum in the likelihood.

    Returns y_n^2 + sum(y_{t-1}^2) * (1 - 2*phi_hat*phi + phi^2), which
    equals y_1^2 + sum_{t=2}^n (y_t - phi*y_{t-1})^2 exactly.  Uses the MLE
    of phi internally, so a degenerate series raises.
    """
    y = series.values
    phi_hat = mle_phi(series)
    _, den = _lag_sums(y)
    return float(y[-1] ** 2 + den * (1.0 - 2.0 * phi_hat * phi + phi * phi))


def _sum_sq_errors(y: np.ndarray, phi: float) -> float:
    # product-form evaluation y_1^2 + sum (y_t - phi y_{t-1})^2; defined for
    # every series, including ones where the MLE of phi is degenerate
    r = y[1:] - phi * y[:-1]
    return float(y[0] ** 2 + np.dot(r, r))


def log_likelihood(series: TimeSeries, phi: float, sigma2: float) -> float:
    """Gaussian log likelihood -(n/2) log(2 pi sigma2) - A / (2 sigma2).

    A is evaluated in its product form, so the value exists for every
    series; it agrees with :func:`sse` wherever both are defined.
    """
    if not sigma2 > 0:
        raise ParameterDomainError(f"sigma2 must be positive, got {sigma2}")
    y = series.values
    n = y.size
    return -0.5 * n * np.log(2.0 * np.pi * sigma2) - _sum_sq_errors(y, phi) / (2.0 * sigma2)


def log_likelihood_on_grid(series: TimeSeries, phis: np.ndarray, sigma2: float) -> np.ndarray:
    """Vectorized log likelihood over an array of phi values.

    Uses the sufficient-statistic form where available so the cost is O(n)
    plus O(len(phis)), not O(n * len(phis)).
    """
    if not sigma2 > 0:
        raise ParameterDomainError(f"sigma2 must be positive, got {sigma2}")
    y = series.values
    n = y.size
    phis = np.asarray(phis, dtype=float)
    num, den = _lag_sums(y)
    if den == 0.0:
        a = np.array([_sum_sq_errors(y, p) for p in phis])
    else:
        phi_hat = num / den
        a = y[-1] ** 2 + den * (1.0 - 2.0 * phi_hat * phis + phis * phis)
    return -0.5 * n * np.log(2.0 * np.pi * sigma2) - a / (2.0 * sigma2)
