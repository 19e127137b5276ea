import numpy as np
import pytest

from ptmathieu import (
    BoundaryCondition,
    Side,
    compare_bc_stability,
    critical_delta,
    critical_q,
    trace_exceptional_line,
)

# brute-force oracle value: fine scan at step 1e-3 + bisection to 1e-6
Q_CRIT_DELTA2_J1 = 0.275027


class TestCriticalQ:
    def test_unbounded_below_delta_one(self):
        assert critical_q(0.5, j=1, bc="neumann", q_max=20.0) is None

    def test_delta_two_matches_fine_scan_oracle(self):
        qc = critical_q(2.0, j=1, bc="neumann")
        assert qc == pytest.approx(Q_CRIT_DELTA2_J1, abs=2e-4)
        # consistent with the reported power law 0.72 * 2^-1.37 ~ 0.28
        assert qc == pytest.approx(0.72 * 2.0**-1.37, abs=0.01)

    def test_negative_side_finite_at_small_delta(self):
        qc = critical_q(0.1, j=1, bc="neumann", side=Side.NEGATIVE)
        assert qc is not None
        assert qc < 0

    def test_step_independence(self):
        a = critical_q(2.0, j=1, bc="neumann", scan_step=0.02)
        b = critical_q(2.0, j=1, bc="neumann", scan_step=0.007)
        assert a == pytest.approx(b, abs=2e-4)

    def test_delta_reflection(self):
        for d in (1.4, 2.5):
            plus = critical_q(d, j=1, bc="neumann")
            # the library stores delta >= 0 only, but the scan itself is symmetric
            minus = critical_q(-d, j=1, bc="neumann")
            assert plus == pytest.approx(minus, abs=1e-9)

    def test_hermitian_line_unbounded(self):
        for side in (Side.POSITIVE, Side.NEGATIVE):
            assert critical_q(0.0, j=1, bc="neumann", q_max=10.0, side=side) is None

    def test_rejects_bad_args(self):
        with pytest.raises(ValueError):
            critical_q(1.0, q_max=-1.0)
        with pytest.raises(ValueError):
            critical_q(1.0, tol_q=0.0)
        with pytest.raises(ValueError):
            critical_q(1.0, k=1)


class TestCriticalDelta:
    def test_breaking_delta_at_q_two(self):
        d = critical_delta(2.0, j=1, bc="neumann", delta_max=2.0)
        assert d == pytest.approx(1.00, abs=0.02)

    def test_free_case_unbounded(self):
        assert critical_delta(0.0, j=1, bc="neumann", delta_max=2.0) is None


class TestTraceExceptionalLine:
    def test_j1_wall_at_delta_one(self):
        grid = [0.5, 0.9, 1.1, 1.5, 2.0]
        line = trace_exceptional_line(grid, j=1, bc="neumann", q_max=10.0)
        values = dict(line.points)
        assert values[0.5] is None and values[0.9] is None
        assert values[1.1] is not None and values[2.0] is not None
        assert line.bc is BoundaryCondition.NEUMANN
        assert line.side is Side.POSITIVE
        assert line.q_max == 10.0

    def test_j2_jump_location(self):
        grid = np.round(np.arange(0.70, 0.8201, 0.005), 10)
        line = trace_exceptional_line(grid, j=2, bc="neumann")
        assert len(line.jumps) == 1
        assert line.jumps[0] == pytest.approx(0.76, abs=0.02)

    def test_j3_no_jump_from_six_level_merge(self):
        # breaking stays on the 3rd/4th pair across the range where the
        # first six levels merge into one loop
        grid = np.round(np.arange(0.75, 2.1001, 0.05), 10)
        line = trace_exceptional_line(grid, j=3, bc="neumann")
        assert line.jumps == ()
        qs = [q for _, q in line.points]
        assert all(q is not None for q in qs)
        assert all(b < a for a, b in zip(qs, qs[1:]))  # smooth decay

    def test_rejects_negative_grid(self):
        with pytest.raises(ValueError):
            trace_exceptional_line([-0.5, 0.5], j=1)


class TestCompareBcStability:
    def test_identical_lines_have_no_violations(self):
        grid = [1.2, 1.6, 2.0]
        line_n = trace_exceptional_line(grid, j=1, bc="neumann", q_max=5.0)
        line_d = trace_exceptional_line(grid, j=1, bc="dirichlet", q_max=5.0)
        report = compare_bc_stability(line_n, line_d)
        assert report.ok
        assert report.n_points == 3

    def test_negative_side_dominance(self):
        grid = [0.3, 0.8, 1.4]
        line_n = trace_exceptional_line(grid, j=2, bc="neumann", q_max=10.0, side=Side.NEGATIVE)
        line_d = trace_exceptional_line(grid, j=2, bc="dirichlet", q_max=10.0, side=Side.NEGATIVE)
        report = compare_bc_stability(line_n, line_d)
        assert report.ok

    def test_grid_mismatch_rejected(self):
        line_n = trace_exceptional_line([1.5, 2.0], j=1, bc="neumann", q_max=3.0)
        line_d = trace_exceptional_line([1.5, 2.5], j=1, bc="dirichlet", q_max=3.0)
        with pytest.raises(ValueError):
            compare_bc_stability(line_n, line_d)

    def test_bc_roles_enforced(self):
        line_n = trace_exceptional_line([1.5, 2.0], j=1, bc="neumann", q_max=3.0)
        with pytest.raises(ValueError):
            compare_bc_stability(line_n, line_n)


class TestHierarchy:
    def test_negative_q_region_grows_with_j(self):
        values = [
            abs(critical_q(0.5, j=j, bc="neumann", side=Side.NEGATIVE)) for j in (1, 2, 3, 4)
        ]
        assert all(b > a for a, b in zip(values, values[1:]))
