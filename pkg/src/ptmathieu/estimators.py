"""Scikit-learn style wrappers around the solver pipeline.

These give the pieces that genuinely have a fit/transform shape a surface
that composes with the wider ecosystem (get_params, clone, pipelines):
spectra as a transform over (q, delta) points, exceptional-line tracing as
a fit over a delta grid, and the power law as a small regressor.
"""

import numpy as np
from sklearn.base import BaseEstimator, RegressorMixin, TransformerMixin
from sklearn.exceptions import NotFittedError

from . import fit as fit_mod
from . import phase
from ._validation import check_grid, check_parameter_points
from .eig import converged_spectrum
from .model import ModelParams


class SpectrumSolver(TransformerMixin, BaseEstimator):
    """Maps (q, delta) parameter points to their k lowest eigenvalues.

    transform(X) takes an (n, 2) array with columns (q, delta) and returns
    an (n, k) complex array ordered by real part per row. Stateless; fit is
    a no-op kept for pipeline compatibility.
    """

    def __init__(self, j=1, bc="neumann", k=6, tol=1e-9, tol_im=1e-7):
        self.j = j
        self.bc = bc
        self.k = k
        self.tol = tol
        self.tol_im = tol_im

    def fit(self, X=None, y=None):
        return self

    def transform(self, X):
        pts = check_parameter_points(X)
        out = np.empty((len(pts), self.k), dtype=complex)
        for i, (q, delta) in enumerate(pts):
            spec = converged_spectrum(
                ModelParams(q=q, delta=delta, j=self.j, bc=self.bc),
                k=self.k,
                tol=self.tol,
                tol_im=self.tol_im,
            )
            out[i] = spec.lowest(self.k)
        return out


class ExceptionalLineTracer(BaseEstimator):
    """Fits the phase boundary q*(delta) over a delta grid.

    After fit(X) with X a 1-D ascending nonnegative delta grid, exposes
    line_ (the traced ExceptionalLine), q_crit_ (array with NaN where the
    unbroken region is unbounded) and jumps_.
    """

    def __init__(
        self,
        j=1,
        bc="neumann",
        k=6,
        side="positive",
        q_max=20.0,
        tol_q=1e-4,
        scan_step=0.02,
        jump_threshold=0.25,
    ):
        self.j = j
        self.bc = bc
        self.k = k
        self.side = side
        self.q_max = q_max
        self.tol_q = tol_q
        self.scan_step = scan_step
        self.jump_threshold = jump_threshold

    def fit(self, X, y=None):
        grid = check_grid(np.ravel(X), name="delta grid", require_nonnegative=True)
        self.line_ = phase.trace_exceptional_line(
            grid,
            j=self.j,
            bc=self.bc,
            k=self.k,
            q_max=self.q_max,
            tol_q=self.tol_q,
            side=self.side,
            jump_threshold=self.jump_threshold,
            scan_step=self.scan_step,
        )
        self.q_crit_ = np.array(
            [np.nan if qc is None else qc for _, qc in self.line_.points]
        )
        self.jumps_ = np.array(self.line_.jumps)
        return self


class PowerLawFit(RegressorMixin, BaseEstimator):
    """Regressor form of the log-log power-law fit q = A * delta^(-alpha)."""

    def __init__(self, delta_range=(2.0, 10.0)):
        self.delta_range = delta_range

    def fit(self, X, y):
        deltas = np.ravel(np.asarray(X, dtype=float))
        qs = np.ravel(np.asarray(y, dtype=float))
        if deltas.shape != qs.shape:
            raise ValueError("X and y must have matching lengths")
        self.result_ = fit_mod.power_law_fit(list(zip(deltas, qs)), self.delta_range)
        self.a_coef_ = self.result_.a_coef
        self.alpha_ = self.result_.alpha
        self.residual_rms_ = self.result_.residual_rms
        return self

    def predict(self, X):
        if not hasattr(self, "result_"):
            raise NotFittedError("PowerLawFit must be fitted before predicting")
        return self.result_.predict(np.ravel(np.asarray(X, dtype=float)))
