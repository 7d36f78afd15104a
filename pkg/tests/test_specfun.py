"""Special functions: scaled representation, Laguerre, log-gamma, 1F1~, overlap."""

import cmath
import math
import random
from fractions import Fraction

import mpmath as mp
import pytest

from pacsent import fock
from pacsent.errors import ConvergenceError, RangeError
from pacsent.specfun import (
    ScaledComplex,
    laguerre,
    log_gamma,
    pacs_overlap,
    regularized_1f1,
)

mp.mp.dps = 50


def laguerre_direct(m: int, x: Fraction) -> Fraction:
    """Exact-rational evaluation of the defining sum of L_m."""
    return sum(
        Fraction((-1) ** k * math.comb(m, k), math.factorial(k)) * Fraction(x) ** k
        for k in range(m + 1)
    )


def reg1f1_reference(a: int, b: int, z: complex, terms: int = 400) -> complex:
    """Extended-precision defining sum of 1F1~ (rgamma handles b + k <= 0)."""
    z = mp.mpc(z)
    total = mp.mpc(0)
    for k in range(terms + int(8 * abs(z))):
        total += mp.rf(a, k) * z**k * mp.rgamma(b + k) / mp.factorial(k)
    return complex(total)


class TestScaledComplex:
    def test_round_trip_preserves_log_magnitude(self):
        rng = random.Random(11)
        for _ in range(200):
            w = cmath.rect(math.exp(rng.uniform(-300, 300)), rng.uniform(-math.pi, math.pi))
            sc = ScaledComplex.from_complex(w)
            back = ScaledComplex.from_complex(sc.to_complex())
            assert back.log_magnitude == pytest.approx(sc.log_magnitude, rel=1e-12)

    def test_zero_round_trips(self):
        sc = ScaledComplex.from_complex(0)
        assert sc.is_zero
        assert sc.to_complex() == 0
        assert ScaledComplex.from_complex(sc.to_complex()).is_zero

    def test_phase_canonical_interval(self):
        sc = ScaledComplex(0.0, 3 * math.pi)
        assert -math.pi < sc.phase <= math.pi
        assert sc.phase == pytest.approx(math.pi)

    def test_arithmetic_matches_complex(self):
        rng = random.Random(5)
        for _ in range(100):
            w1 = complex(rng.uniform(-3, 3), rng.uniform(-3, 3))
            w2 = complex(rng.uniform(-3, 3), rng.uniform(-3, 3))
            if w2 == 0:
                continue
            a, b = ScaledComplex.from_complex(w1), ScaledComplex.from_complex(w2)
            assert (a * b).to_complex() == pytest.approx(w1 * w2, rel=1e-12)
            assert (a / b).to_complex() == pytest.approx(w1 / w2, rel=1e-12)
            assert (a + b).to_complex() == pytest.approx(w1 + w2, rel=1e-12, abs=1e-12)
            assert (-a).to_complex() == pytest.approx(-w1, rel=1e-12)
            assert a.conjugate().to_complex() == pytest.approx(w1.conjugate(), rel=1e-12)

    def test_overflowing_magnitude(self):
        sc = ScaledComplex(1000.0, 0.0)
        assert not sc.representable
        with pytest.raises(OverflowError):
            sc.to_complex()

    def test_power(self):
        sc = ScaledComplex.from_complex(4.0)
        assert (sc ** -0.5).to_complex() == pytest.approx(0.5)


class TestLaguerre:
    def test_order_zero_is_one(self):
        for x in (-10.0, 0.0, 0.5, 40.0):
            assert laguerre(0, x) == 1.0

    def test_order_one(self):
        assert laguerre(1, -1.0) == pytest.approx(2.0)

    def test_order_two_matches_direct_summation(self):
        # Exact sum: 1 - 2x + x^2/2 at x = -1 gives 7/2.
        assert laguerre_direct(2, Fraction(-1)) == Fraction(7, 2)
        assert laguerre(2, -1.0) == pytest.approx(3.5, rel=1e-10)

    def test_recurrence_matches_direct_summation_to_order_20(self):
        xs = [Fraction(-100), Fraction(-15, 2), Fraction(-1), Fraction(0),
              Fraction(3, 10), Fraction(5), Fraction(60)]
        for m in range(21):
            for x in xs:
                exact = laguerre_direct(m, x)
                if exact == 0:
                    continue
                assert laguerre(m, float(x)) == pytest.approx(
                    float(exact), rel=1e-10
                ), f"m={m}, x={x}"

    def test_validation(self):
        with pytest.raises(ValueError):
            laguerre(-1, 0.0)
        with pytest.raises(ValueError):
            laguerre(2, math.inf)


class TestLogGamma:
    def test_gamma_of_one(self):
        assert log_gamma(1.0) == 0.0

    def test_gamma_of_five(self):
        assert log_gamma(5.0) == pytest.approx(math.log(24), rel=1e-14)

    def test_gamma_of_21_is_log_20_factorial(self):
        assert log_gamma(21.0) == pytest.approx(math.log(math.factorial(20)), rel=1e-13)

    def test_relative_error_over_working_range(self):
        for x in [1.0, 1.5, 2.0, 3.7, 10.0, 25.5, 60.0, 120.0, 200.0]:
            ref = float(mp.loggamma(x))
            if ref == 0.0:
                continue
            assert log_gamma(x) == pytest.approx(ref, rel=1e-12)

    def test_domain_error(self):
        for x in (0.0, -1.0, -0.5):
            with pytest.raises(ValueError):
                log_gamma(x)


class TestRegularized1F1:
    def test_a_equals_b_is_exponential(self):
        for z in (0.3, -2.0, 1.5 + 2.5j, -4.0 - 3.0j, 25.0):
            got = regularized_1f1(1, 1, z).to_complex()
            assert got == pytest.approx(cmath.exp(z), rel=1e-13)

    def test_argument_zero(self):
        for b in range(1, 8):
            got = regularized_1f1(3, b, 0).to_complex()
            assert got == pytest.approx(1 / math.gamma(b), rel=1e-13)
        for b in (0, -1, -5):
            assert regularized_1f1(3, b, 0).is_zero

    def test_b_zero_collapses_to_z_exp_z(self):
        # Defining sum in extended precision (50 terms dominate for z = 2).
        ref = reg1f1_reference(1, 0, 2.0, terms=50)
        assert complex(ref) == pytest.approx(2 * math.e**2, rel=1e-14)
        got = regularized_1f1(1, 0, 2.0).to_complex()
        assert got == pytest.approx(2 * math.e**2, rel=1e-12)

    def test_matches_extended_precision_reference(self):
        rng = random.Random(31)
        for _ in range(120):
            a = rng.randint(1, 12)
            b = rng.randint(-8, 16)
            z = complex(rng.uniform(-25, 25), rng.uniform(-8, 8))
            got = regularized_1f1(a, b, z)
            ref = reg1f1_reference(a, b, z)
            if abs(ref) < 1e-280:
                assert got.is_zero or got.log_magnitude < -600
                continue
            assert got.to_complex() == pytest.approx(ref, rel=1e-9), (a, b, z)

    def test_nonpositive_b_leading_terms_skipped(self):
        # b = -3: terms k <= 3 vanish, so the value is O(z^4) near 0.
        small = regularized_1f1(2, -3, 1e-6)
        assert small.log_magnitude < math.log(1e-20)

    def test_convergence_error_far_outside_range(self):
        with pytest.raises(ConvergenceError):
            regularized_1f1(1, 5, 1e6)

    def test_validation(self):
        with pytest.raises(ValueError):
            regularized_1f1(0, 1, 1.0)
        with pytest.raises(ValueError):
            regularized_1f1(2, 1, complex(math.nan, 0))


class TestPacsOverlap:
    def test_coherent_state_overlap(self):
        rng = random.Random(3)
        for _ in range(50):
            a = complex(rng.uniform(-4, 4), rng.uniform(-4, 4))
            b = complex(rng.uniform(-4, 4), rng.uniform(-4, 4))
            expected = cmath.exp(
                -0.5 * (abs(a) ** 2 + abs(b) ** 2) + a.conjugate() * b
            )
            got = pacs_overlap(a, b, 0, 0).to_complex()
            assert got == pytest.approx(expected, rel=1e-12)

    def test_self_overlap_is_factorial_times_laguerre(self):
        # Norm consistency between the defining normalization and the closed form.
        for m in (0, 1, 3, 7, 15, 20):
            for amp in (0.3, 1.0, 4.0, 10.0):
                got = pacs_overlap(amp, amp, m, m)
                ref_log = math.lgamma(m + 1) + math.log(laguerre(m, -amp * amp))
                assert got.phase == pytest.approx(0.0, abs=1e-12)
                assert got.log_magnitude == pytest.approx(ref_log, abs=1e-12)

    def test_norm_positivity(self):
        # <A|A> = m! L_m(-|a|^2) >= m! since L_m(-y) >= 1 for y >= 0.
        rng = random.Random(17)
        for _ in range(100):
            m = rng.randint(0, 12)
            amp = complex(rng.uniform(-4, 4), rng.uniform(-4, 4))
            got = pacs_overlap(amp, amp, m, m)
            assert got.phase == pytest.approx(0.0, abs=1e-10)
            assert got.log_magnitude >= math.lgamma(m + 1) - 1e-10

    def test_single_case_against_fock_oracle(self):
        # <alpha| a^1 a^dag^2 |beta> at alpha=1, beta=2 in a 128-level space.
        closed = pacs_overlap(1, 2, 1, 2).to_complex()
        bra = fock.create(fock.coherent_fock(1, 128), 1)
        ket = fock.create(fock.coherent_fock(2, 128), 2)
        oracle = fock.inner(bra, ket)
        assert closed == pytest.approx(oracle, rel=1e-10)

    def test_oracle_equivalence_random(self):
        # 1e-9 relative agreement, floored at the oracle's own rounding scale:
        # a double-precision Fock sum certifies an inner product only to
        # O(eps * ||A|| * ||B||), so exponentially suppressed overlaps cannot
        # be resolved value-relatively by either side.
        import numpy as np

        rng = random.Random(23)
        for _ in range(80):
            a = cmath.rect(4 * math.sqrt(rng.random()), rng.uniform(-math.pi, math.pi))
            b = cmath.rect(4 * math.sqrt(rng.random()), rng.uniform(-math.pi, math.pi))
            m, n = rng.randint(0, 12), rng.randint(0, 12)
            closed = pacs_overlap(a, b, m, n).to_complex()
            dim = int(16 + 10 * 4 + 50 + m + n)
            bra = fock.create(fock.coherent_fock(a, dim), m)
            ket = fock.create(fock.coherent_fock(b, dim), n)
            oracle = fock.inner(bra, ket)
            floor = 1e-13 * float(np.linalg.norm(bra) * np.linalg.norm(ket))
            tol = 1e-9 * max(abs(closed), abs(oracle)) + floor
            assert abs(closed - oracle) <= tol, (a, b, m, n)

    def test_conjugate_symmetry(self):
        rng = random.Random(41)
        for _ in range(200):
            a = complex(rng.uniform(-5, 5), rng.uniform(-5, 5))
            b = complex(rng.uniform(-5, 5), rng.uniform(-5, 5))
            m, n = rng.randint(0, 10), rng.randint(0, 10)
            lhs = pacs_overlap(a, b, m, n)
            rhs = pacs_overlap(b, a, n, m).conjugate()
            assert lhs.log_magnitude == pytest.approx(rhs.log_magnitude, abs=1e-10)
            assert cmath.exp(1j * lhs.phase) == pytest.approx(
                cmath.exp(1j * rhs.phase), abs=1e-10
            )

    def test_beta_zero_corners(self):
        # n > m: single surviving photon-number term n!/(n-m)! conj(alpha)^(n-m) e^{-|alpha|^2/2}
        got = pacs_overlap(2 + 1j, 0, 1, 3).to_complex()
        expected = (
            math.factorial(3)
            / math.factorial(2)
            * (2 + 1j).conjugate() ** 2
            * math.exp(-0.5 * abs(2 + 1j) ** 2)
        )
        assert got == pytest.approx(expected, rel=1e-12)
        # m > n: a^m kills the n-photon ket
        assert pacs_overlap(1.5, 0, 3, 1).is_zero
        # m = n: m! e^{-|alpha|^2/2}
        got = pacs_overlap(1.5, 0, 2, 2).to_complex()
        assert got == pytest.approx(2 * math.exp(-0.5 * 1.5**2), rel=1e-12)
        # both vacuum: m! delta_{mn}
        assert pacs_overlap(0, 0, 2, 2).to_complex() == pytest.approx(2.0)
        assert pacs_overlap(0, 0, 2, 3).is_zero

    def test_range_error(self):
        with pytest.raises(RangeError):
            pacs_overlap(60, 0, 0, 0)
        with pytest.raises(RangeError):
            pacs_overlap(0, 51j, 1, 1)

    def test_validation(self):
        with pytest.raises(ValueError):
            pacs_overlap(1, 1, -1, 0)
        with pytest.raises(ValueError):
            pacs_overlap(1, 1, 0, 2.5)
