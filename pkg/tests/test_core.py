import cmath
import math
import random

import mpmath
import pytest

from gammalab.core import beta, gamma, log_gamma, pochhammer, pole_distance
from gammalab.errors import DomainError, PoleError


def _mp_gamma(z: complex) -> complex:
    return complex(mpmath.gamma(mpmath.mpc(z.real, z.imag)))


class TestGammaKnownValues:
    def test_integers(self):
        facts = [1, 1, 2, 6, 24, 120, 720, 5040]
        for n, f in enumerate(facts, start=1):
            assert gamma(float(n)) == pytest.approx(f, rel=1e-14)

    def test_half_integers(self):
        sq = math.sqrt(math.pi)
        assert gamma(0.5) == pytest.approx(sq, rel=1e-14)
        assert gamma(1.5) == pytest.approx(0.5 * sq, rel=1e-14)
        assert gamma(-0.5) == pytest.approx(-2.0 * sq, rel=1e-14)
        assert gamma(2.5) == pytest.approx(0.75 * sq, rel=1e-14)

    def test_quarter(self):
        # Gamma(1/4), 30-digit reference
        assert gamma(0.25) == pytest.approx(3.625609908221908311930685155867672, rel=1e-14)

    def test_real_return_type(self):
        assert isinstance(gamma(2.5), float)
        assert isinstance(gamma(complex(2.5, 0.0)), complex)


class TestGammaComplex:
    def test_against_mpmath_grid(self):
        rng = random.Random(42)
        worst = 0.0
        for _ in range(300):
            z = complex(rng.uniform(-6, 6), rng.uniform(-6, 6))
            if pole_distance(z) < 0.05:
                continue
            ref = _mp_gamma(z)
            worst = max(worst, abs(gamma(z) - ref) / abs(ref))
        assert worst < 5e-13

    def test_conjugate_symmetry_bitwise(self):
        rng = random.Random(7)
        for _ in range(200):
            z = complex(rng.uniform(-5, 5), rng.uniform(0.1, 5))
            if pole_distance(z) < 0.05:
                continue
            assert gamma(z.conjugate()) == gamma(z).conjugate()

    def test_large_imaginary(self):
        z = complex(0.5, 120.0)
        ref = _mp_gamma(z)
        assert abs(gamma(z) - ref) / abs(ref) < 1e-11

    def test_nonfinite_rejected(self):
        with pytest.raises(DomainError):
            gamma(float("nan"))
        with pytest.raises(DomainError):
            gamma(complex(math.inf, 0.0))


class TestPoles:
    @pytest.mark.parametrize("n", [0, -1, -2, -7, -30])
    def test_exact_pole_raises(self, n):
        with pytest.raises(PoleError):
            gamma(float(n))
        with pytest.raises(PoleError):
            gamma(complex(n, 0.0))

    def test_pole_distance(self):
        assert pole_distance(0.3) == pytest.approx(0.3)
        assert pole_distance(-1.75) == pytest.approx(0.25)
        assert pole_distance(complex(-2.0, 0.5)) == pytest.approx(0.5)
        assert pole_distance(5.0) == pytest.approx(5.0)

    def test_near_pole_blows_up_but_finite(self):
        v = gamma(-3.0 + 1e-9)
        assert math.isfinite(v)
        assert abs(v) > 1e8


class TestLogGamma:
    def test_matches_log_of_gamma(self):
        rng = random.Random(3)
        for _ in range(200):
            z = complex(rng.uniform(0.05, 20), rng.uniform(-20, 20))
            lg = log_gamma(z)
            ref = mpmath.loggamma(mpmath.mpc(z.real, z.imag))
            assert abs(lg - complex(ref)) < 1e-11 * max(1.0, abs(complex(ref)))

    def test_huge_argument_no_overflow(self):
        lg = log_gamma(complex(500.5, 300.0))
        ref = complex(mpmath.loggamma(mpmath.mpc(500.5, 300.0)))
        assert abs(lg - ref) / abs(ref) < 1e-12

    def test_left_half_plane_rejected(self):
        with pytest.raises(DomainError):
            log_gamma(complex(-1.5, 0.3))

    def test_real_positive(self):
        assert log_gamma(10.0) == pytest.approx(math.lgamma(10.0), rel=1e-14)


class TestBetaPochhammer:
    def test_beta_symmetry_and_value(self):
        assert beta(2.5, 3.5) == pytest.approx(beta(3.5, 2.5), rel=1e-14)
        # B(1/2, 1/2) = pi
        assert beta(0.5, 0.5) == pytest.approx(math.pi, rel=1e-13)

    def test_beta_vs_gamma_ratio(self):
        rng = random.Random(11)
        for _ in range(50):
            a = rng.uniform(0.2, 6.0)
            b = rng.uniform(0.2, 6.0)
            ref = gamma(a) * gamma(b) / gamma(a + b)
            assert beta(a, b) == pytest.approx(ref, rel=1e-12)

    def test_pochhammer_integers(self):
        assert pochhammer(3.0, 4) == pytest.approx(3 * 4 * 5 * 6)
        assert pochhammer(1.0, 6) == pytest.approx(math.factorial(6))
        assert pochhammer(2.5, 0) == 1.0

    def test_pochhammer_negative_count_rejected(self):
        with pytest.raises(DomainError):
            pochhammer(1.0, -1)

    def test_pochhammer_complex(self):
        z = complex(0.3, 1.1)
        direct = z * (z + 1) * (z + 2)
        assert abs(pochhammer(z, 3) - direct) < 1e-14 * abs(direct)
