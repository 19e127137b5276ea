import numpy as np
import pytest
from scipy.integrate import quad

from ptmathieu import (
    Basis,
    BoundaryCondition,
    ModelParams,
    assemble_matrix,
    cosine_coupling,
    potential_value,
    sine_coupling,
)


def basis_fn(bc, n):
    if BoundaryCondition(bc) is BoundaryCondition.NEUMANN:
        return lambda x: np.cos(n * x)
    return lambda x: np.sin(n * x)


def quad_sine_coupling(m, n, j, bc):
    phi_m, phi_n = basis_fn(bc, m), basis_fn(bc, n)
    val, _ = quad(lambda x: phi_m(x) * np.sin(2 * j * x) * phi_n(x), 0.0, np.pi, limit=400)
    return val


def quad_matrix_element(params, m, n):
    neumann = params.bc is BoundaryCondition.NEUMANN
    norm_m = 1 / np.sqrt(np.pi) if (neumann and m == 0) else np.sqrt(2 / np.pi)
    norm_n = 1 / np.sqrt(np.pi) if (neumann and n == 0) else np.sqrt(2 / np.pi)
    phi_m, phi_n = basis_fn(params.bc, m), basis_fn(params.bc, n)
    re, _ = quad(lambda x: phi_m(x) * 2 * params.q * np.cos(2 * x) * phi_n(x), 0, np.pi, limit=400)
    im, _ = quad(
        lambda x: phi_m(x) * 2 * params.q * params.delta * np.sin(2 * params.j * x) * phi_n(x),
        0, np.pi, limit=400,
    )
    return (m * m if m == n else 0.0) + norm_m * norm_n * (re + 1j * im)


class TestModelParams:
    def test_rejects_non_integer_j(self):
        with pytest.raises(ValueError):
            ModelParams(q=1.0, delta=0.1, j=0.5)

    def test_rejects_nonpositive_j(self):
        with pytest.raises(ValueError):
            ModelParams(q=1.0, delta=0.1, j=0)

    def test_accepts_integral_float_j(self):
        assert ModelParams(q=1.0, delta=0.1, j=2.0).j == 2

    def test_bc_coercion(self):
        assert ModelParams(q=0, delta=0, bc="dirichlet").bc is BoundaryCondition.DIRICHLET


class TestPotential:
    def test_at_zero(self):
        p = ModelParams(q=1.0, delta=0.5, j=1)
        assert potential_value(p, 0.0) == pytest.approx(2.0 + 0j)

    def test_at_half_pi(self):
        p = ModelParams(q=1.0, delta=0.5, j=1)
        assert potential_value(p, np.pi / 2) == pytest.approx(-2.0 + 0j, abs=1e-14)

    def test_exponential_form_at_delta_one(self):
        # at delta=1, j=1 the potential is 2q*exp(2ix)
        for q in (0.7, -2.3):
            p = ModelParams(q=q, delta=1.0, j=1)
            x = np.pi / 4
            assert potential_value(p, x) == pytest.approx(2 * q * np.exp(2j * x), abs=1e-13)

    def test_array_input(self):
        p = ModelParams(q=0.5, delta=2.0, j=3)
        x = np.linspace(0, np.pi, 7)
        np.testing.assert_allclose(
            potential_value(p, x),
            2 * 0.5 * (np.cos(2 * x) + 2j * np.sin(6 * x)),
            atol=1e-14,
        )


class TestSineCoupling:
    def test_parity_zero(self):
        assert sine_coupling(0, 2, 1, "neumann") == 0.0

    def test_spot_values(self):
        assert sine_coupling(0, 1, 1, "neumann") == pytest.approx(4 / 3, abs=1e-14)
        assert sine_coupling(1, 2, 1, "neumann") == pytest.approx(4 / 15, abs=1e-14)

    def test_invalid_indices(self):
        with pytest.raises(ValueError):
            sine_coupling(0, 1, 1, "dirichlet")
        with pytest.raises(ValueError):
            sine_coupling(-1, 2, 1, "neumann")

    def test_parity_selection_rule_exhaustive(self):
        for j in range(1, 5):
            for m in range(0, 65, 7):
                for n in range(0, 65, 6):
                    if (m + n) % 2 == 0 and m >= 1 and n >= 1:
                        assert sine_coupling(m, n, j, "neumann") == 0.0
                        assert sine_coupling(m, n, j, "dirichlet") == 0.0

    @pytest.mark.parametrize("bc", ["neumann", "dirichlet"])
    def test_matches_quadrature(self, bc):
        rng = np.random.default_rng(7)
        lo = 0 if bc == "neumann" else 1
        for _ in range(25):
            m = int(rng.integers(lo, 20))
            n = int(rng.integers(lo, 20))
            j = int(rng.integers(1, 5))
            assert sine_coupling(m, n, j, bc) == pytest.approx(
                quad_sine_coupling(m, n, j, bc), abs=1e-10
            )


class TestAssembly:
    def test_free_particle_is_diagonal(self):
        for bc, start in (("neumann", 0), ("dirichlet", 1)):
            mat = assemble_matrix(ModelParams(q=0.0, delta=3.0, j=2, bc=bc), 16)
            expected = np.diag(np.arange(start, start + 16, dtype=float) ** 2)
            np.testing.assert_allclose(mat.entries, expected, atol=0)

    def test_basis_tagging(self):
        assert assemble_matrix(ModelParams(q=1, delta=0, bc="neumann"), 8).basis is Basis.COSINE_NORMALIZED
        assert assemble_matrix(ModelParams(q=1, delta=0, bc="dirichlet"), 8).basis is Basis.SINE_NORMALIZED

    def test_dirichlet_lowest_diagonal_vanishes_at_q_one(self):
        # diagonal entry for n=1 is 1 + 2*(2/pi)*integral(cos 2x sin^2 x) = 1 - q
        mat = assemble_matrix(ModelParams(q=1.0, delta=0.0, j=1, bc="dirichlet"), 12)
        assert mat.entries[0, 0] == pytest.approx(0.0, abs=1e-14)
        assert mat.entries[0, 2] == pytest.approx(1.0, abs=1e-14)
        assert mat.entries[3, 1] == pytest.approx(1.0, abs=1e-14)

    def test_rejects_small_truncation(self):
        with pytest.raises(ValueError):
            assemble_matrix(ModelParams(q=1, delta=0), 4)

    def test_conjugation_flips_delta(self):
        rng = np.random.default_rng(3)
        for bc in ("neumann", "dirichlet"):
            for _ in range(5):
                q, d, j = rng.uniform(-5, 5), rng.uniform(0, 2), int(rng.integers(1, 5))
                h_plus = assemble_matrix(ModelParams(q=q, delta=d, j=j, bc=bc), 24).entries
                h_minus = assemble_matrix(ModelParams(q=q, delta=-d, j=j, bc=bc), 24).entries
                np.testing.assert_array_equal(np.conj(h_plus), h_minus)

    def test_alternating_similarity_flips_delta(self):
        # D H(delta) D = H(-delta) with D = diag((-1)^index), exactly
        rng = np.random.default_rng(4)
        sign = np.diag((-1.0) ** np.arange(24))
        for bc in ("neumann", "dirichlet"):
            for _ in range(5):
                q, d, j = rng.uniform(-5, 5), rng.uniform(0, 2), int(rng.integers(1, 5))
                h_plus = assemble_matrix(ModelParams(q=q, delta=d, j=j, bc=bc), 24).entries
                h_minus = assemble_matrix(ModelParams(q=q, delta=-d, j=j, bc=bc), 24).entries
                np.testing.assert_array_equal(sign @ h_plus @ sign, h_minus)

    @pytest.mark.parametrize("bc", ["neumann", "dirichlet"])
    @pytest.mark.parametrize("j", [1, 2, 3])
    def test_entries_match_quadrature(self, bc, j):
        params = ModelParams(q=1.3, delta=0.7, j=j, bc=bc)
        mat = assemble_matrix(params, 10)
        start = 0 if bc == "neumann" else 1
        for a in range(10):
            for b in range(10):
                ref = quad_matrix_element(params, start + a, start + b)
                assert mat.entries[a, b] == pytest.approx(ref, abs=1e-10)

    def test_cosine_coupling_quadrature(self):
        rng = np.random.default_rng(11)
        for bc in ("neumann", "dirichlet"):
            lo = 0 if bc == "neumann" else 1
            for _ in range(15):
                m, n = int(rng.integers(lo, 16)), int(rng.integers(lo, 16))
                phi_m, phi_n = basis_fn(bc, m), basis_fn(bc, n)
                ref, _ = quad(lambda x: phi_m(x) * np.cos(2 * x) * phi_n(x), 0, np.pi, limit=400)
                assert cosine_coupling(m, n, bc) == pytest.approx(ref, abs=1e-12)
