"""Dense complex eigensolves, realness classification and truncation escalation."""

from dataclasses import dataclass

import numpy as np
from scipy.optimize import linear_sum_assignment

from .model import DEFAULT_TRUNCATION, ModelParams, OperatorMatrix, assemble_matrix
from ._validation import check_levels, check_positive

DEFAULT_TOL_IM = 1e-7
DEFAULT_LEVELS = 6
DEFAULT_CONVERGENCE_TOL = 1e-9
MAX_TRUNCATION = 512


class ConvergenceError(RuntimeError):
    """A numerical iteration failed to converge; details carried in args."""


class PairingError(RuntimeError):
    """Complex eigenvalues could not be matched into conjugate pairs."""

    def __init__(self, message, leftovers):
        super().__init__(f"{message}: {leftovers!r}")
        self.leftovers = list(leftovers)


@dataclass(frozen=True)
class Spectrum:
    """All eigenvalues at one parameter point, split into real levels and conjugate pairs."""

    params: ModelParams
    n_used: int
    eigenvalues: np.ndarray
    real_levels: tuple
    complex_pairs: tuple
    tol_im: float

    def lowest(self, k):
        """k lowest eigenvalues ordered by real part, ties by imaginary part."""
        return sort_by_level(self.eigenvalues)[:k]


def sort_by_level(values):
    """Ascending by real part, ties broken by ascending imaginary part."""
    values = np.asarray(values, dtype=complex)
    return values[np.lexsort((values.imag, values.real))]


def multiset_distance(a, b):
    """Largest matched distance between two equal-size eigenvalue multisets.

    Matches injectively (minimal total distance), so the metric is immune to
    the arbitrary ordering of conjugate-pair members whose real parts tie up
    to solver noise.
    """
    a = np.asarray(a, dtype=complex).ravel()
    b = np.asarray(b, dtype=complex).ravel()
    if a.shape != b.shape:
        raise ValueError(f"multisets must have equal size, got {a.shape} and {b.shape}")
    cost = np.abs(a[:, None] - b[None, :])
    rows, cols = linear_sum_assignment(cost)
    return float(cost[rows, cols].max())


def eigenvalues(matrix):
    """All eigenvalues (with multiplicity) of a dense complex matrix; no ordering.

    Accepts an OperatorMatrix or a plain square array. LAPACK's balancing +
    Hessenberg + shifted-QR driver does the work; non-convergence is raised,
    never silently truncated.
    """
    entries = matrix.entries if isinstance(matrix, OperatorMatrix) else np.asarray(matrix)
    if entries.ndim != 2 or entries.shape[0] != entries.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {entries.shape}")
    if not np.all(np.isfinite(entries)):
        raise ValueError("matrix entries must be finite")
    try:
        return np.linalg.eigvals(entries.astype(complex))
    except np.linalg.LinAlgError as exc:
        raise ConvergenceError(f"dense eigensolver did not converge: {exc}") from exc


def is_real_level(value, tol_im=DEFAULT_TOL_IM):
    """Realness test |Im| <= tol_im * max(1, |Re|)."""
    return abs(value.imag) <= tol_im * max(1.0, abs(value.real))


def classify_real(raw, tol_im=DEFAULT_TOL_IM):
    """Split a spectrum into (real_levels, complex_pairs).

    Values within tol_im of the real axis (relative to max(1, |Re|)) are
    flagged real with the imaginary part dropped; the rest are greedily
    matched into conjugate pairs by nearest conjugate distance. A leftover
    that cannot be paired raises PairingError with the offending values.
    """
    check_positive(tol_im, "tol_im")
    values = np.asarray(raw, dtype=complex).ravel()
    scale = np.maximum(1.0, np.abs(values.real))
    real_mask = np.abs(values.imag) <= tol_im * scale
    real_levels = sorted(values[real_mask].real.tolist())

    leftover = values[~real_mask]
    order = np.lexsort((leftover.imag, leftover.real))
    leftover = leftover[order]
    m = len(leftover)
    candidates = sorted(
        (abs(leftover[i] - np.conj(leftover[k])), i, k)
        for i in range(m)
        for k in range(i + 1, m)
    )
    used = set()
    pairs = []
    for dist, i, k in candidates:
        if i in used or k in used:
            continue
        zi, zk = leftover[i], leftover[k]
        if dist > 2.0 * tol_im * max(1.0, abs(zi)):
            continue
        plus, minus = (zi, zk) if zi.imag >= zk.imag else (zk, zi)
        pairs.append((plus, minus))
        used.update((i, k))
    if len(used) != m:
        unpaired = [leftover[i] for i in range(m) if i not in used]
        raise PairingError("unpaired complex eigenvalues", unpaired)
    pairs.sort(key=lambda p: (p[0].real, p[0].imag))
    return real_levels, pairs


def converged_spectrum(
    params,
    k=DEFAULT_LEVELS,
    tol=DEFAULT_CONVERGENCE_TOL,
    *,
    n0=DEFAULT_TRUNCATION,
    n_max=MAX_TRUNCATION,
    tol_im=DEFAULT_TOL_IM,
):
    """Spectrum converged in the k lowest levels under truncation doubling.

    Assembles at n0, 2*n0, ... and accepts once each of the k lowest-by-real-
    part eigenvalues moves by less than tol between consecutive truncations.
    High-lying truncated eigenvalues never converge and are not tested.
    """
    k = check_levels(k)
    check_positive(tol, "tol")
    if k > n0:
        raise ValueError(f"k={k} exceeds the initial truncation {n0}")
    history = []
    n = int(n0)
    while n <= n_max:
        values = eigenvalues(assemble_matrix(params, n))
        low = sort_by_level(values)[:k]
        if history and multiset_distance(low, history[-1][1]) < tol:
            real_levels, pairs = classify_real(values, tol_im)
            return Spectrum(
                params=params,
                n_used=n,
                eigenvalues=values,
                real_levels=tuple(real_levels),
                complex_pairs=tuple(pairs),
                tol_im=tol_im,
            )
        history.append((n, low))
        n *= 2
    raise ConvergenceError(
        f"levels did not settle below tol={tol} by N={n_max} for {params}; "
        f"last two iterates: {history[-2:]!r}"
    )
