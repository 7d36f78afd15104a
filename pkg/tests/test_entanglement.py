"""Pure/mixed concurrence, depolarizing channel, X-state closed form."""

import math
import random

import numpy as np
import pytest

from pacsent.embedding import QubitCoefficients, SuperpositionSpec, qubit_coefficients
from pacsent.entanglement import (
    check_density_matrix,
    concurrence_mixed,
    concurrence_pure,
    concurrence_x_state,
    depolarize,
)
from pacsent.errors import RangeError, XShapeError

INV_SQRT2 = 1 / math.sqrt(2)

BELL = QubitCoefficients(0j, complex(INV_SQRT2), complex(-INV_SQRT2), 0j)
PRODUCT = QubitCoefficients(1 + 0j, 0j, 0j, 0j)

# Computational-basis projector of the maximally entangled (|01>-|10>)/sqrt(2).
MAX_ENTANGLED_PROJECTOR = np.array(
    [
        [0.0, 0.0, 0.0, 0.0],
        [0.0, 0.5, -0.5, 0.0],
        [0.0, -0.5, 0.5, 0.0],
        [0.0, 0.0, 0.0, 0.0],
    ]
)


def random_opposite_weight_spec(rng: random.Random) -> SuperpositionSpec:
    u = complex(INV_SQRT2)
    while True:
        spec = SuperpositionSpec(
            alpha=complex(rng.uniform(-3, 3), rng.uniform(-3, 3)),
            beta=complex(rng.uniform(-3, 3), rng.uniform(-3, 3)),
            u=u,
            v=-u,
            m=rng.randint(0, 8),
            n=rng.randint(0, 8),
        )
        if not spec.is_degenerate:
            return spec


class TestConcurrencePure:
    def test_bell_state(self):
        assert concurrence_pure(BELL) == pytest.approx(1.0)

    def test_product_state(self):
        assert concurrence_pure(PRODUCT) == 0.0

    def test_displaced_superposition_value(self):
        spec = SuperpositionSpec(0, 0, INV_SQRT2, INV_SQRT2, 0, 0, gamma=1)
        z2 = math.exp(-4.0)
        assert concurrence_pure(qubit_coefficients(spec)) == pytest.approx(
            (1 - z2) / (1 + z2), rel=1e-12
        )

    def test_requires_normalized(self):
        with pytest.raises(ValueError):
            concurrence_pure(QubitCoefficients(0.5 + 0j, 0j, 0j, 0j))


class TestDepolarize:
    def test_p_zero_is_projector(self):
        rho = depolarize(BELL, 0.0)
        vec = BELL.as_vector()
        np.testing.assert_allclose(rho, np.outer(vec, vec.conj()), atol=1e-15)

    def test_full_mixing_is_identity_over_four(self):
        rho = depolarize(BELL, 0.75)
        np.testing.assert_allclose(rho, np.eye(4) / 4, atol=1e-15)

    def test_quarter_mixing_matrix(self):
        # At p = 1/4 the Bell projector mixes to inner diagonal (3-2p)/6 = 5/12,
        # inner off-diagonal (4p-3)/6 = -1/3, corners p/3 = 1/12.
        rho = depolarize(BELL, 0.25)
        expected = np.array(
            [
                [1 / 12, 0, 0, 0],
                [0, 5 / 12, -1 / 3, 0],
                [0, -1 / 3, 5 / 12, 0],
                [0, 0, 0, 1 / 12],
            ]
        )
        np.testing.assert_allclose(rho, expected, atol=1e-15)

    def test_output_satisfies_density_invariants(self):
        rng = random.Random(7)
        for _ in range(20):
            spec = random_opposite_weight_spec(rng)
            rho = depolarize(qubit_coefficients(spec), rng.uniform(0, 0.75))
            check_density_matrix(rho)

    def test_range_error(self):
        for p in (-0.01, 0.76, 1.0):
            with pytest.raises(RangeError):
                depolarize(BELL, p)


class TestConcurrenceMixed:
    def test_maximally_mixed_is_zero(self):
        assert concurrence_mixed(np.eye(4) / 4) == 0.0

    def test_bell_projector_is_one(self):
        assert concurrence_mixed(depolarize(BELL, 0.0)) == pytest.approx(1.0, abs=1e-12)

    def test_werner_curve(self):
        for p in np.linspace(0.0, 0.75, 101):
            got = concurrence_mixed(depolarize(BELL, float(p)))
            assert got == pytest.approx(max(0.0, 1 - 2 * p), abs=1e-9)

    def test_validation(self):
        bad = np.eye(4) / 4
        bad = bad.astype(complex)
        bad[0, 1] = 0.1  # not Hermitian
        with pytest.raises(ValueError):
            concurrence_mixed(bad)
        with pytest.raises(ValueError):
            concurrence_mixed(np.eye(4))  # trace 4
        spiky = np.diag([0.6, 0.5, 0.0, -0.1]).astype(complex)
        with pytest.raises(ValueError):
            concurrence_mixed(spiky)  # negative eigenvalue

    def test_endpoint_matches_pure(self):
        rng = random.Random(11)
        for _ in range(25):
            spec = random_opposite_weight_spec(rng)
            coeffs = qubit_coefficients(spec)
            assert concurrence_mixed(depolarize(coeffs, 0.0)) == pytest.approx(
                concurrence_pure(coeffs), abs=1e-9
            )

    def test_monotone_in_p(self):
        rng = random.Random(13)
        for _ in range(5):
            spec = random_opposite_weight_spec(rng)
            coeffs = qubit_coefficients(spec)
            values = [
                concurrence_mixed(depolarize(coeffs, float(p)))
                for p in np.linspace(0.0, 0.75, 100)
            ]
            for earlier, later in zip(values, values[1:]):
                assert later <= earlier + 1e-12

    def test_output_in_unit_interval(self):
        rng = random.Random(17)
        for _ in range(50):
            spec = random_opposite_weight_spec(rng)
            value = concurrence_mixed(
                depolarize(qubit_coefficients(spec), rng.uniform(0, 0.75))
            )
            assert 0.0 <= value <= 1.0


class TestConcurrenceXState:
    @staticmethod
    def symmetric_x(u_corner: float, w: float, z: float) -> np.ndarray:
        rho = np.diag([u_corner, w, w, u_corner]).astype(complex)
        rho[1, 2] = rho[2, 1] = z
        return rho

    def test_closed_form_value(self):
        # Corner product u+ u- = 0.04, z = 0.3: C = 2 (0.3 - 0.2) = 0.2,
        # and the eigenvalue route agrees on the same matrix.
        rho = self.symmetric_x(0.2, 0.3, 0.3)
        assert concurrence_x_state(rho) == pytest.approx(0.2, rel=1e-12)
        assert concurrence_mixed(rho) == pytest.approx(0.2, rel=1e-9)
        # Corners 0.04 each instead: C = 2 (0.3 - 0.04) = 0.52.
        rho = self.symmetric_x(0.04, 0.46, 0.3)
        assert concurrence_x_state(rho) == pytest.approx(0.52, rel=1e-12)
        assert concurrence_mixed(rho) == pytest.approx(0.52, rel=1e-11)

    def test_maximally_mixed(self):
        assert concurrence_x_state(np.eye(4) / 4) == 0.0

    def test_depolarized_bell_family(self):
        # u+/- = p/3 and z = (4p-3)/6 give C = max(0, 1-2p).
        for p in np.linspace(0.0, 0.75, 40):
            rho = depolarize(BELL, float(p))
            assert rho[0, 0].real == pytest.approx(p / 3, abs=1e-14)
            assert rho[1, 2].real == pytest.approx((4 * p - 3) / 6, abs=1e-14)
            assert concurrence_x_state(rho) == pytest.approx(
                max(0.0, 1 - 2 * p), abs=1e-12
            )

    def test_shape_errors(self):
        rho = np.eye(4, dtype=complex) / 4
        rho[0, 1] = rho[1, 0] = 0.01
        with pytest.raises(XShapeError):
            concurrence_x_state(rho)
        asym = np.diag([0.1, 0.5, 0.3, 0.1]).astype(complex)
        with pytest.raises(XShapeError):
            concurrence_x_state(asym)
        complex_inner = self.symmetric_x(0.04, 0.46, 0.0)
        complex_inner[1, 2] = 0.2j
        complex_inner[2, 1] = -0.2j
        with pytest.raises(XShapeError):
            concurrence_x_state(complex_inner)
        cornered = self.symmetric_x(0.1, 0.4, 0.1)
        cornered[0, 3] = cornered[3, 0] = 0.05
        with pytest.raises(XShapeError):
            concurrence_x_state(cornered)

    def test_route_agreement_on_depolarized_specs(self):
        rng = random.Random(23)
        for _ in range(100):
            spec = random_opposite_weight_spec(rng)
            rho = depolarize(qubit_coefficients(spec), rng.uniform(0, 0.75))
            assert abs(concurrence_x_state(rho) - concurrence_mixed(rho)) < 1e-9


class TestMaximallyEntangledFamily:
    def test_projector_is_parameter_independent(self):
        rng = random.Random(29)
        for _ in range(30):
            spec = random_opposite_weight_spec(rng)
            coeffs = qubit_coefficients(spec)
            assert concurrence_pure(coeffs) == pytest.approx(1.0, abs=1e-9)
            rho = depolarize(coeffs, 0.0)
            np.testing.assert_allclose(rho, MAX_ENTANGLED_PROJECTOR, atol=1e-10)
