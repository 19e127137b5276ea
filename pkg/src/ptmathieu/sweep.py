"""Eigenvalue branch tracking along one-parameter sweeps.

Branches are matched between adjacent grid points by nearest complex
distance; coalescence events (a branch pair switching between two distinct
reals and one conjugate pair) are bracketed by bisection on the sweep
parameter. Event directions are read moving outward from the undeformed
anchor at parameter value 0, so losing a level away from 0 is
real-to-complex and recovering it further out is complex-to-real.
"""

import dataclasses
import logging
from dataclasses import dataclass
from enum import Enum

import numpy as np

from ._validation import check_grid, check_levels, check_positive
from .eig import (
    DEFAULT_LEVELS,
    DEFAULT_TOL_IM,
    converged_spectrum,
    eigenvalues,
    is_real_level,
    sort_by_level,
)
from .model import DEFAULT_TRUNCATION, ModelParams, assemble_matrix

logger = logging.getLogger(__name__)

BRACKET_WIDTH = 1e-6
MATCH_TIE_TOL = 1e-9
# bisection interiors sit arbitrarily close to exceptional points, where the
# square-root eigenvalue sensitivity makes truncation escalation unable to
# settle; a fixed doubled truncation classifies realness there reliably
REFINE_TRUNCATION = 2 * DEFAULT_TRUNCATION
# grid points near a coalescence inherit part of that sensitivity, so sweeps
# accept level movement up to two orders below the realness tolerance
DEFAULT_SWEEP_TOL = 1e-7


class SweepParameter(str, Enum):
    Q = "q"
    DELTA = "delta"


class Direction(str, Enum):
    REAL_TO_COMPLEX = "real-to-complex"
    COMPLEX_TO_REAL = "complex-to-real"


@dataclass(frozen=True)
class LevelCurve:
    """One tracked eigenvalue branch: values[i] follows grid[i]."""

    sweep_param: SweepParameter
    base: ModelParams
    grid: np.ndarray
    values: np.ndarray
    label: int


@dataclass(frozen=True)
class CoalescenceEvent:
    """Parameter value where two branches merge at a common real eigenvalue."""

    param_value: float
    branch_a: int
    branch_b: int
    a_star: float
    direction: Direction


def _at(base, sweep_param, t):
    field = "q" if SweepParameter(sweep_param) is SweepParameter.Q else "delta"
    return dataclasses.replace(base, **{field: float(t)})


def _candidates(base, sweep_param, t, k, tol, tol_im):
    spec = converged_spectrum(_at(base, sweep_param, t), k=k, tol=tol, tol_im=tol_im)
    return sort_by_level(spec.eigenvalues)[: 2 * k + 2]


def _fixed_candidates(base, sweep_param, t, k):
    values = eigenvalues(assemble_matrix(_at(base, sweep_param, t), REFINE_TRUNCATION))
    return sort_by_level(values)[: 2 * k + 2]


def _greedy_match(prev, candidates, t):
    """Assign each tracked value the nearest unused candidate, cheapest pair first."""
    k = len(prev)
    entries = sorted(
        (abs(candidates[c] - prev[b]), b, c) for b in range(k) for c in range(len(candidates))
    )
    assigned = {}
    used = set()
    for pos, (dist, b, c) in enumerate(entries):
        if b in assigned or c in used:
            continue
        for dist2, b2, c2 in entries[pos + 1 :]:
            if dist2 - dist > MATCH_TIE_TOL:
                break
            if b2 == b and c2 not in used and c2 != c:
                logger.warning(
                    "ambiguous branch match at parameter %g (branch %d, cost gap %.2e); "
                    "resolved by label order",
                    t,
                    b,
                    dist2 - dist,
                )
        assigned[b] = c
        used.add(c)
    return np.array([candidates[assigned[b]] for b in range(k)])


def sweep_levels(
    base,
    sweep_param,
    grid,
    k=DEFAULT_LEVELS,
    *,
    tol=DEFAULT_SWEEP_TOL,
    tol_im=DEFAULT_TOL_IM,
):
    """Track the k lowest branches over an ascending parameter grid.

    Labels number the branches by real-part order at the sweep start and
    persist through matching; past a merge they are conventional.
    """
    sweep_param = SweepParameter(sweep_param)
    grid = check_grid(grid)
    k = check_levels(k, minimum=2)
    rows = []
    prev = None
    for t in grid:
        cands = _candidates(base, sweep_param, t, k, tol, tol_im)
        prev = cands[:k] if prev is None else _greedy_match(prev, cands, t)
        rows.append(prev)
    values = np.array(rows)
    return [
        LevelCurve(sweep_param=sweep_param, base=base, grid=grid, values=values[:, b], label=b)
        for b in range(k)
    ]


def _pair_state(v1, v2, tol_im):
    """'real' both on-axis, 'complex' a mutual conjugate pair, else None."""
    r1, r2 = is_real_level(v1, tol_im), is_real_level(v2, tol_im)
    if r1 and r2:
        return "real"
    if not r1 and not r2 and abs(v1 - np.conj(v2)) <= 2.0 * tol_im * max(1.0, abs(v1)):
        return "complex"
    return None


def _matched_pair(curve_a, curve_b, t, refs):
    k_hint = max(curve_a.label, curve_b.label, DEFAULT_LEVELS - 1) + 1
    cands = _fixed_candidates(curve_a.base, curve_a.sweep_param, t, k_hint)
    i1 = int(np.argmin(np.abs(cands - refs[0])))
    rest = np.delete(cands, i1)
    i2 = int(np.argmin(np.abs(rest - refs[1])))
    return cands[i1], rest[i2]


def _bisect_event(curve_a, curve_b, i, tol_im):
    """Bisect the pair-complexness boundary inside grid cell i; return (t*, a*)."""
    grid = curve_a.grid
    t_lo, t_hi = float(grid[i]), float(grid[i + 1])
    state_lo = _pair_state(curve_a.values[i], curve_b.values[i], tol_im)
    refs = {
        t_lo: (curve_a.values[i], curve_b.values[i]),
        t_hi: (curve_a.values[i + 1], curve_b.values[i + 1]),
    }
    complex_lo = state_lo == "complex"
    while t_hi - t_lo > BRACKET_WIDTH:
        mid = 0.5 * (t_lo + t_hi)
        ref_side = t_lo if not complex_lo else t_hi
        pair = _matched_pair(curve_a, curve_b, mid, refs[ref_side])
        mid_complex = not is_real_level(pair[0], tol_im) and not is_real_level(pair[1], tol_im)
        if mid_complex == complex_lo:
            t_lo = mid
            refs[t_lo] = pair
        else:
            t_hi = mid
            refs[t_hi] = pair
    t_star = 0.5 * (t_lo + t_hi)
    pair = _matched_pair(curve_a, curve_b, t_star, refs[t_lo])
    a_star = 0.5 * (pair[0].real + pair[1].real)
    return t_star, a_star


def detect_coalescence(curves, tol_im=DEFAULT_TOL_IM):
    """Locate branch-pair transitions between two reals and one conjugate pair.

    Each event is bracketed to a parameter width of 1e-6. Events lying
    outside the grid (a pair already complex at the first point) cannot be
    bracketed and are not reported.
    """
    check_positive(tol_im, "tol_im")
    if not curves:
        return []
    grid = curves[0].grid
    for c in curves[1:]:
        if not np.array_equal(c.grid, grid) or c.sweep_param is not curves[0].sweep_param:
            raise ValueError("curves must share one sweep grid")
    events = []
    for ia in range(len(curves)):
        for ib in range(ia + 1, len(curves)):
            ca, cb = curves[ia], curves[ib]
            states = [_pair_state(ca.values[i], cb.values[i], tol_im) for i in range(len(grid))]
            for i in range(len(grid) - 1):
                s0, s1 = states[i], states[i + 1]
                if None in (s0, s1) or s0 == s1:
                    continue
                t_star, a_star = _bisect_event(ca, cb, i, tol_im)
                inner_is_lo = abs(grid[i]) <= abs(grid[i + 1])
                inner_state = s0 if inner_is_lo else s1
                direction = (
                    Direction.REAL_TO_COMPLEX
                    if inner_state == "real"
                    else Direction.COMPLEX_TO_REAL
                )
                events.append(
                    CoalescenceEvent(
                        param_value=t_star,
                        branch_a=ca.label,
                        branch_b=cb.label,
                        a_star=a_star,
                        direction=direction,
                    )
                )
    events.sort(key=lambda e: (e.param_value, e.branch_a, e.branch_b))
    return events


def _bisect_branch_real_edge(curve, i_real, i_complex, tol_im):
    """Bisect the realness boundary of one branch between two grid indices."""
    t_real = float(curve.grid[i_real])
    t_complex = float(curve.grid[i_complex])
    ref = curve.values[i_real]
    k_hint = max(curve.label, DEFAULT_LEVELS - 1) + 1
    while abs(t_complex - t_real) > BRACKET_WIDTH:
        mid = 0.5 * (t_real + t_complex)
        cands = _fixed_candidates(curve.base, curve.sweep_param, mid, k_hint)
        val = cands[int(np.argmin(np.abs(cands - ref)))]
        if is_real_level(val, tol_im):
            t_real = mid
            ref = val
        else:
            t_complex = mid
    return 0.5 * (t_real + t_complex)


def real_intervals(curve, tol_im=DEFAULT_TOL_IM):
    """Maximal parameter intervals where the branch is real, edges refined to 1e-6."""
    check_positive(tol_im, "tol_im")
    flags = np.array([is_real_level(v, tol_im) for v in curve.values])
    intervals = []
    n = len(flags)
    i = 0
    while i < n:
        if not flags[i]:
            i += 1
            continue
        start = i
        while i + 1 < n and flags[i + 1]:
            i += 1
        lo = float(curve.grid[start])
        hi = float(curve.grid[i])
        if start > 0:
            lo = _bisect_branch_real_edge(curve, start, start - 1, tol_im)
        if i + 1 < n:
            hi = _bisect_branch_real_edge(curve, i, i + 1, tol_im)
        intervals.append((lo, hi))
        i += 1
    return intervals
