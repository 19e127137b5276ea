"""Parameter-space types and Galerkin assembly for the deformed Mathieu operator.

The operator is H = -d^2/dx^2 + 2q*(cos(2x) + i*delta*sin(2jx)) on [0, pi].
Neumann endpoints (u'(0) = u'(pi) = 0) select the a_n eigenvalue family and
the cosine basis; Dirichlet endpoints (u(0) = u(pi) = 0) select the b_n
family and the sine basis. In the orthonormalized trigonometric basis the
kinetic part is exactly diag(n^2), so all solver tolerances are scale-free.
"""

from dataclasses import dataclass
from enum import Enum

import numpy as np

DEFAULT_TRUNCATION = 64
MIN_TRUNCATION = 8


class BoundaryCondition(str, Enum):
    NEUMANN = "neumann"
    DIRICHLET = "dirichlet"


class Basis(str, Enum):
    COSINE_NORMALIZED = "cosine-normalized"
    SINE_NORMALIZED = "sine-normalized"
    FINITE_DIFFERENCE = "finite-difference"


@dataclass(frozen=True)
class ModelParams:
    """One point (q, delta, j, bc) of the operator family.

    j is the frequency index of the imaginary sine term and must be a
    positive integer; delta is its strength; q scales the whole potential.
    """

    q: float
    delta: float
    j: int = 1
    bc: BoundaryCondition = BoundaryCondition.NEUMANN

    def __post_init__(self):
        if isinstance(self.j, bool) or int(self.j) != self.j or self.j < 1:
            raise ValueError(f"j must be a positive integer, got {self.j!r}")
        object.__setattr__(self, "j", int(self.j))
        object.__setattr__(self, "q", float(self.q))
        object.__setattr__(self, "delta", float(self.delta))
        object.__setattr__(self, "bc", BoundaryCondition(self.bc))


@dataclass(frozen=True)
class OperatorMatrix:
    """Truncated operator in an explicit basis; entries is an n x n complex array."""

    entries: np.ndarray
    basis: Basis
    n: int
    params: ModelParams


def potential_value(params, x):
    """Complex potential V(x) = 2q*(cos(2x) + i*delta*sin(2jx)); accepts arrays."""
    x = np.asarray(x, dtype=float)
    v = 2.0 * params.q * (np.cos(2.0 * x) + 1j * params.delta * np.sin(2.0 * params.j * x))
    return complex(v) if v.ndim == 0 else v


def basis_indices(bc, n):
    """Harmonic indices of the first n basis functions (from 0 for cosines, 1 for sines)."""
    bc = BoundaryCondition(bc)
    return np.arange(n) if bc is BoundaryCondition.NEUMANN else np.arange(1, n + 1)


def _check_indices(m, n, bc):
    lo = 0 if bc is BoundaryCondition.NEUMANN else 1
    for name, v in (("m", m), ("n", n)):
        if isinstance(v, bool) or int(v) != v or v < lo:
            raise ValueError(f"{name}={v!r} is not a valid {bc.value} basis index (need integer >= {lo})")


def sine_coupling(m, n, j, bc):
    """Un-normalized Galerkin element of sin(2jx) between basis harmonics m and n.

    S_mn = integral over [0, pi] of phi_m(x) * sin(2jx) * phi_n(x) dx with
    phi_n = cos(nx) (Neumann) or sin(nx) (Dirichlet). Vanishes whenever
    m + n is even (parity selection rule).
    """
    bc = BoundaryCondition(bc)
    _check_indices(m, n, bc)
    if isinstance(j, bool) or int(j) != j or j < 1:
        raise ValueError(f"j must be a positive integer, got {j!r}")
    if (m + n) % 2 == 0:
        return 0.0

    # integral of sin(kx)cos(lx) over [0, pi] = k*(1-(-1)^(k+l))/(k^2-l^2);
    # with k = 2j even and l odd it reduces to 4j/(4j^2 - l^2), never singular.
    def half_range(l):
        return 4.0 * j / (4.0 * j * j - l * l)

    if bc is BoundaryCondition.NEUMANN:
        return 0.5 * (half_range(abs(m - n)) + half_range(m + n))
    return 0.5 * (half_range(abs(m - n)) - half_range(m + n))


def cosine_coupling(m, n, bc):
    """Un-normalized Galerkin element of cos(2x): couples |m - n| = 2 and m + n = 2."""
    bc = BoundaryCondition(bc)
    _check_indices(m, n, bc)

    def half_range(l):
        # integral of cos(lx)cos(2x) over [0, pi]
        return np.pi / 2.0 if l == 2 else 0.0

    if bc is BoundaryCondition.NEUMANN:
        return 0.5 * (half_range(abs(m - n)) + half_range(m + n))
    return 0.5 * (half_range(abs(m - n)) - half_range(m + n))


def _normalization(bc, n):
    # e_0 = 1/sqrt(pi), e_n = sqrt(2/pi)*cos(nx) or sqrt(2/pi)*sin(nx)
    c = np.full(n, np.sqrt(2.0 / np.pi))
    if BoundaryCondition(bc) is BoundaryCondition.NEUMANN:
        c[0] = 1.0 / np.sqrt(np.pi)
    return c


def _cosine_matrix(bc, n):
    idx = basis_indices(bc, n)
    m = idx[:, None]
    k = idx[None, :]
    band = (np.abs(m - k) == 2).astype(float)
    low = ((m + k) == 2).astype(float)
    if BoundaryCondition(bc) is BoundaryCondition.NEUMANN:
        raw = 0.5 * (band + low) * (np.pi / 2.0)
    else:
        raw = 0.5 * (band - low) * (np.pi / 2.0)
    c = _normalization(bc, n)
    return c[:, None] * c[None, :] * raw


def _sine_matrix(bc, j, n):
    idx = basis_indices(bc, n)
    m = idx[:, None].astype(float)
    k = idx[None, :].astype(float)
    odd = ((idx[:, None] + idx[None, :]) % 2) == 1

    def half_range(l):
        denom = np.where(odd, 4.0 * j * j - l * l, 1.0)
        return np.where(odd, 4.0 * j / denom, 0.0)

    if BoundaryCondition(bc) is BoundaryCondition.NEUMANN:
        raw = 0.5 * (half_range(np.abs(m - k)) + half_range(m + k))
    else:
        raw = 0.5 * (half_range(np.abs(m - k)) - half_range(m + k))
    c = _normalization(bc, n)
    return c[:, None] * c[None, :] * raw


def assemble_matrix(params, n=DEFAULT_TRUNCATION):
    """Truncated n x n operator in the orthonormal basis for params.bc.

    H = diag(k^2) + 2q*C + 2iq*delta*S with C, S the normalized Galerkin
    matrices of cos(2x) and sin(2jx). Entrywise conj(H(delta)) = H(-delta),
    and D H(delta) D = H(-delta) with D = diag((-1)^k), so the spectrum is
    invariant under delta -> -delta and closed under complex conjugation
    at every truncation.
    """
    if not isinstance(params, ModelParams):
        raise ValueError(f"params must be ModelParams, got {type(params).__name__}")
    if int(n) != n or n < MIN_TRUNCATION:
        raise ValueError(f"truncation must be an integer >= {MIN_TRUNCATION}, got {n!r}")
    n = int(n)
    idx = basis_indices(params.bc, n)
    h = np.diag(idx.astype(float) ** 2).astype(complex)
    h += 2.0 * params.q * _cosine_matrix(params.bc, n)
    h += 2j * params.q * params.delta * _sine_matrix(params.bc, params.j, n)
    basis = (
        Basis.COSINE_NORMALIZED
        if params.bc is BoundaryCondition.NEUMANN
        else Basis.SINE_NORMALIZED
    )
    return OperatorMatrix(entries=h, basis=basis, n=n, params=params)
