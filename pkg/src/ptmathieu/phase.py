"""Exceptional-line location: the boundary of the PT-unbroken phase connected to q=0.

critical_q walks q away from 0 until any of the k lowest levels turns
complex, then bisects the boundary. Recovery intervals past the first
breaking are deliberately ignored; unbounded means no breaking before
q_max, and the cap is recorded in the traced line.
"""

from dataclasses import dataclass
from enum import Enum

import numpy as np

from ._validation import check_grid, check_levels, check_positive
from .eig import DEFAULT_LEVELS, DEFAULT_TOL_IM, ConvergenceError, eigenvalues, sort_by_level
from .model import DEFAULT_TRUNCATION, BoundaryCondition, ModelParams, assemble_matrix

DEFAULT_Q_MAX = 20.0
DEFAULT_TOL_Q = 1e-4
DEFAULT_SCAN_STEP = 0.02
DEFAULT_JUMP_THRESHOLD = 0.25
_VERIFY_N_MAX = 512


class Side(str, Enum):
    POSITIVE = "positive"
    NEGATIVE = "negative"


@dataclass(frozen=True)
class ExceptionalLine:
    """Sampled boundary q*(delta); q_crit is None where no breaking occurs before q_max."""

    j: int
    bc: BoundaryCondition
    k: int
    side: Side
    points: tuple
    jumps: tuple
    q_max: float
    tol_q: float


@dataclass(frozen=True)
class DominanceReport:
    """Pointwise check that the Dirichlet unbroken region contains the Neumann one."""

    j: int
    side: Side
    n_points: int
    violations: tuple

    @property
    def ok(self):
        return not self.violations


def _all_levels_real(params, k, n, tol_im):
    low = sort_by_level(eigenvalues(assemble_matrix(params, n)))[:k]
    return bool(np.all(np.abs(low.imag) <= tol_im * np.maximum(1.0, np.abs(low.real))))


def _bisect_boundary(predicate, t_true, t_false, tol):
    while abs(t_false - t_true) > tol:
        mid = 0.5 * (t_true + t_false)
        if predicate(mid):
            t_true = mid
        else:
            t_false = mid
    return t_true, t_false


def _scan_for_boundary(predicate, t_max, step, tol):
    """First predicate failure walking t = step, 2*step, ..., t_max; None if none."""
    t_prev = 0.0
    n_steps = int(np.floor(t_max / step + 1e-9))
    targets = [i * step for i in range(1, n_steps + 1)]
    if not targets or targets[-1] < t_max - 1e-12:
        targets.append(t_max)
    for t in targets:
        if not predicate(t):
            return t_prev, t
        t_prev = t
    return None


def _locate_boundary(predicate_at, t_max, step, tol, n0, context):
    """Scan + bisect at truncation n0, verifying the bracket one truncation up.

    A bracket that fails verification is treated as a truncation artifact
    (spurious complexification of a strongly non-normal regime) and the whole
    scan is redone at the doubled truncation; an all-real scan needs no such
    escalation because truncation error can only fake breaking, not hide a
    genuinely complex pair beyond the realness tolerance.
    """
    n = int(n0)
    while True:
        bracket = _scan_for_boundary(predicate_at(n), t_max, step, tol)
        if bracket is None:
            return None
        lo, hi = _bisect_boundary(predicate_at(n), bracket[0], bracket[1], tol)
        check = predicate_at(2 * n)
        if check(lo) and not check(hi):
            return 0.5 * (lo + hi)
        n *= 2
        if 2 * n > _VERIFY_N_MAX:
            raise ConvergenceError(
                f"breaking boundary near {hi:.6g} ({context}) did not stabilize "
                f"under truncation doubling up to N={_VERIFY_N_MAX}"
            )


def critical_q(
    delta,
    j=1,
    bc=BoundaryCondition.NEUMANN,
    k=DEFAULT_LEVELS,
    q_max=DEFAULT_Q_MAX,
    tol_q=DEFAULT_TOL_Q,
    *,
    side=Side.POSITIVE,
    scan_step=DEFAULT_SCAN_STEP,
    n0=DEFAULT_TRUNCATION,
    tol_im=DEFAULT_TOL_IM,
):
    """Boundary of the all-real region connected to q=0, or None if unbounded.

    Coarse scan at scan_step, then bisection to width tol_q. The final
    bracket is re-verified at a doubled truncation; on disagreement the
    bisection is redone there.
    """
    check_positive(q_max, "q_max")
    check_positive(tol_q, "tol_q")
    check_positive(scan_step, "scan_step")
    k = check_levels(k, minimum=2)
    sign = 1.0 if Side(side) is Side.POSITIVE else -1.0

    def predicate_at(n):
        def predicate(t):
            return _all_levels_real(ModelParams(q=sign * t, delta=delta, j=j, bc=bc), k, n, tol_im)

        return predicate

    boundary = _locate_boundary(
        predicate_at, q_max, scan_step, tol_q, n0,
        context=f"|q| scan at delta={delta}, j={j}, bc={BoundaryCondition(bc).value}",
    )
    return None if boundary is None else sign * boundary


def critical_delta(
    q,
    j=1,
    bc=BoundaryCondition.NEUMANN,
    k=DEFAULT_LEVELS,
    delta_max=5.0,
    tol_delta=DEFAULT_TOL_Q,
    *,
    scan_step=DEFAULT_SCAN_STEP,
    n0=DEFAULT_TRUNCATION,
    tol_im=DEFAULT_TOL_IM,
):
    """Breaking deformation strength at fixed q, scanning delta upward from 0."""
    check_positive(delta_max, "delta_max")
    check_positive(tol_delta, "tol_delta")
    k = check_levels(k, minimum=2)

    def predicate_at(n):
        def predicate(t):
            return _all_levels_real(ModelParams(q=q, delta=t, j=j, bc=bc), k, n, tol_im)

        return predicate

    return _locate_boundary(
        predicate_at, delta_max, scan_step, tol_delta, n0,
        context=f"delta scan at q={q}, j={j}, bc={BoundaryCondition(bc).value}",
    )


def trace_exceptional_line(
    delta_grid,
    j=1,
    bc=BoundaryCondition.NEUMANN,
    k=DEFAULT_LEVELS,
    q_max=DEFAULT_Q_MAX,
    tol_q=DEFAULT_TOL_Q,
    *,
    side=Side.POSITIVE,
    jump_threshold=DEFAULT_JUMP_THRESHOLD,
    scan_step=DEFAULT_SCAN_STEP,
    tol_im=DEFAULT_TOL_IM,
):
    """Map critical_q over an ascending nonnegative delta grid and flag jumps.

    A jump is recorded (at the midpoint of the offending cell) when two
    consecutive finite q_crit values differ by more than jump_threshold
    relative to max(1, |earlier|).
    """
    grid = check_grid(delta_grid, name="delta_grid", require_nonnegative=True)
    check_positive(jump_threshold, "jump_threshold")
    points = []
    for d in grid:
        qc = critical_q(
            d, j=j, bc=bc, k=k, q_max=q_max, tol_q=tol_q,
            side=side, scan_step=scan_step, tol_im=tol_im,
        )
        points.append((float(d), qc))
    jumps = []
    for (d0, q0), (d1, q1) in zip(points, points[1:]):
        if q0 is None or q1 is None:
            continue
        if abs(q1 - q0) > jump_threshold * max(1.0, abs(q0)):
            jumps.append(0.5 * (d0 + d1))
    return ExceptionalLine(
        j=int(j),
        bc=BoundaryCondition(bc),
        k=k,
        side=Side(side),
        points=tuple(points),
        jumps=tuple(jumps),
        q_max=float(q_max),
        tol_q=float(tol_q),
    )


def compare_bc_stability(line_neumann, line_dirichlet):
    """Check |q_crit(Dirichlet)| >= |q_crit(Neumann)| pointwise on a shared grid."""
    if line_neumann.bc is not BoundaryCondition.NEUMANN:
        raise ValueError("first line must be the Neumann trace")
    if line_dirichlet.bc is not BoundaryCondition.DIRICHLET:
        raise ValueError("second line must be the Dirichlet trace")
    if line_neumann.j != line_dirichlet.j or line_neumann.side is not line_dirichlet.side:
        raise ValueError("lines must share j and side")
    deltas_n = [d for d, _ in line_neumann.points]
    deltas_d = [d for d, _ in line_dirichlet.points]
    if deltas_n != deltas_d:
        raise ValueError("lines must share the delta grid")
    violations = []
    for (d, qn), (_, qd) in zip(line_neumann.points, line_dirichlet.points):
        if qd is None:
            continue
        if qn is None or abs(qd) < abs(qn):
            violations.append((d, qn, qd))
    return DominanceReport(
        j=line_neumann.j,
        side=line_neumann.side,
        n_points=len(deltas_n),
        violations=tuple(violations),
    )
