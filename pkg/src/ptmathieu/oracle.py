"""Independent reference solvers: finite differences and complex shooting.

Both exist to cross-check the Galerkin spectra through entirely different
discretizations; the shooting route involves no matrix eigensolver at all.
"""

from dataclasses import dataclass

import numpy as np
from scipy.integrate import solve_ivp
from scipy.optimize import linear_sum_assignment

from .eig import DEFAULT_TOL_IM, ConvergenceError, Spectrum, classify_real, eigenvalues, sort_by_level
from .model import BoundaryCondition, Basis, ModelParams, OperatorMatrix, potential_value

MIN_GRID_POINTS = 51


@dataclass(frozen=True)
class ShootResult:
    """Boundary mismatch of the left-normalized solution at a trial eigenvalue.

    residual is u'(pi) for Neumann data (u(0)=1, u'(0)=0) or u(pi) for
    Dirichlet data (u(0)=0, u'(0)=1).
    """

    a: complex
    residual: complex
    params: ModelParams


def fd_matrix(params, m):
    """Second-order central-difference operator on m uniform nodes over [0, pi].

    Dirichlet eliminates the boundary nodes; Neumann closes the ends with
    mirrored ghost points (u_{-1} = u_1), keeping second-order accuracy.
    """
    if int(m) != m or m < MIN_GRID_POINTS or m % 2 == 0:
        raise ValueError(f"grid points must be an odd integer >= {MIN_GRID_POINTS}, got {m!r}")
    m = int(m)
    h = np.pi / (m - 1)
    x = np.linspace(0.0, np.pi, m)
    if params.bc is BoundaryCondition.DIRICHLET:
        x = x[1:-1]
    size = len(x)
    mat = (
        np.diag(np.full(size, 2.0))
        - np.diag(np.ones(size - 1), 1)
        - np.diag(np.ones(size - 1), -1)
    ) / h**2
    mat = mat.astype(complex)
    if params.bc is BoundaryCondition.NEUMANN:
        mat[0, 1] = -2.0 / h**2
        mat[-1, -2] = -2.0 / h**2
    mat += np.diag(potential_value(params, x))
    return OperatorMatrix(entries=mat, basis=Basis.FINITE_DIFFERENCE, n=size, params=params)


def fd_spectrum(params, m, k=6, tol_im=DEFAULT_TOL_IM):
    """k lowest-by-real-part finite-difference eigenvalues as a Spectrum."""
    low = sort_by_level(eigenvalues(fd_matrix(params, m)))[:k]
    real_levels, pairs = classify_real(low, tol_im)
    return Spectrum(
        params=params,
        n_used=len(low),
        eigenvalues=low,
        real_levels=tuple(real_levels),
        complex_pairs=tuple(pairs),
        tol_im=tol_im,
    )


def fd_richardson(params, grids=(201, 401, 801), k=6):
    """Richardson-extrapolated k lowest FD eigenvalues over successively halved steps.

    Assumes the exact O(h^2) leading error of central differences on smooth
    solutions; each grid must double the intervals of the previous one.
    """
    grids = [int(m) for m in grids]
    if len(grids) < 2:
        raise ValueError("need at least two grids to extrapolate")
    for a, b in zip(grids, grids[1:]):
        if b != 2 * a - 1:
            raise ValueError(f"grid {b} does not halve the step of {a} (expected {2 * a - 1})")
    table = [sort_by_level(eigenvalues(fd_matrix(params, m)))[:k] for m in grids]
    # align conjugate-pair ordering across grids before elementwise extrapolation
    for i in range(1, len(table)):
        cost = np.abs(table[i - 1][:, None] - table[i][None, :])
        _, cols = linear_sum_assignment(cost)
        table[i] = table[i][cols]
    order = 2
    while len(table) > 1:
        factor = 2.0**order
        table = [(factor * fine - coarse) / (factor - 1.0) for coarse, fine in zip(table, table[1:])]
        order += 2
    return table[0]


def shoot(params, a):
    """Integrate u'' = (V - a) u across [0, pi] and report the boundary mismatch."""
    a = complex(a)
    if not np.isfinite(a):
        raise ValueError("trial eigenvalue must be finite")

    def rhs(x, y):
        return [y[1], (potential_value(params, x) - a) * y[0]]

    if params.bc is BoundaryCondition.NEUMANN:
        y0 = [1.0 + 0j, 0.0 + 0j]
    else:
        y0 = [0.0 + 0j, 1.0 + 0j]
    sol = solve_ivp(rhs, (0.0, np.pi), y0, method="DOP853", rtol=1e-12, atol=1e-12)
    if not sol.success:
        raise ConvergenceError(f"shooting integration failed at a={a}: {sol.message}")
    u, du = sol.y[0, -1], sol.y[1, -1]
    residual = du if params.bc is BoundaryCondition.NEUMANN else u
    return ShootResult(a=a, residual=complex(residual), params=params)


def shoot_residual(params, a):
    """Right-boundary mismatch at trial eigenvalue a (complex-valued)."""
    return shoot(params, a).residual


def refine_eigenvalue(params, a_seed, *, tol_residual=1e-10, trust_radius=1.0, max_iter=60):
    """Complex secant root of the shooting residual, seeded near one eigenvalue.

    Diverging or wandering beyond |a - a_seed| > trust_radius signals a bad
    seed and raises. Near a coalescence the residual has a double root and
    convergence degrades; callers should expect reduced precision there.
    """
    a0 = complex(a_seed)
    a1 = a0 + 1e-4 * max(1.0, abs(a0))
    r0 = shoot_residual(params, a0)
    r1 = shoot_residual(params, a1)
    for _ in range(max_iter):
        if abs(r1) < tol_residual:
            return a1
        if r1 == r0:
            raise ConvergenceError(f"secant stalled at a={a1} (flat residual)")
        a2 = a1 - r1 * (a1 - a0) / (r1 - r0)
        if abs(a2 - a_seed) > trust_radius:
            raise ConvergenceError(
                f"refinement escaped the trust radius: seed {a_seed}, iterate {a2}"
            )
        a0, r0 = a1, r1
        a1 = a2
        r1 = shoot_residual(params, a1)
    raise ConvergenceError(
        f"secant did not reach |residual| < {tol_residual} in {max_iter} steps "
        f"(last a={a1}, |residual|={abs(r1):.3e})"
    )
