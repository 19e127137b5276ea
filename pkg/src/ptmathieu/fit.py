"""Power-law fit q = A * delta^(-alpha) of an exceptional-line tail, by OLS in log-log."""

from dataclasses import dataclass

import numpy as np

DEFAULT_FIT_RANGE = (2.0, 10.0)


@dataclass(frozen=True)
class FitResult:
    a_coef: float
    alpha: float
    residual_rms: float
    delta_range: tuple
    n_points: int

    def predict(self, delta):
        return self.a_coef * np.asarray(delta, dtype=float) ** (-self.alpha)


def power_law_fit(points, fit_range=DEFAULT_FIT_RANGE):
    """Fit ln q = ln A - alpha * ln delta over the points falling in fit_range.

    points is a sequence of (delta, q) pairs; entries outside fit_range are
    ignored. Requires at least 3 usable points, all with delta > 0 and q > 0
    (an unbounded None inside the range is an error, never a sentinel).
    """
    lo, hi = float(fit_range[0]), float(fit_range[1])
    if not lo < hi:
        raise ValueError(f"empty fit range ({lo}, {hi})")
    selected = [(d, q) for d, q in points if lo <= d <= hi]
    if len(selected) < 3:
        raise ValueError(f"need at least 3 points in range, got {len(selected)}")
    for d, q in selected:
        if q is None or not (d > 0 and q > 0):
            raise ValueError(f"nonpositive or missing value in fit range: ({d}, {q})")
    ln_d = np.log([d for d, _ in selected])
    ln_q = np.log([q for _, q in selected])
    slope, intercept = np.polyfit(ln_d, ln_q, 1)
    residuals = ln_q - (intercept + slope * ln_d)
    return FitResult(
        a_coef=float(np.exp(intercept)),
        alpha=float(-slope),
        residual_rms=float(np.sqrt(np.mean(residuals**2))),
        delta_range=(lo, hi),
        n_points=len(selected),
    )
