import cmath
import math

import numpy as np
import pytest

from trisum.closedform import (
    REGISTRY,
    C_mirror,
    C_of,
    closed_sum,
    reference_constant,
)
from trisum.errors import DomainError, NonConvergent, UnknownConstant
from trisum.quadrature import tanh_sinh
from trisum.series import sum_series
from trisum.specfun import dilog

S7 = math.sqrt(7.0)

# printed values of every registry constant, frozen from an independent
# multiprecision evaluation of the same expressions
PRINTED = {
    "a1-z2-m0": 0.52395769463509576811,
    "a1-zneg4-m0-dilog": 0.24451533246720645487,
    "a1-zneg4-m0-quot": 0.24451533246720645487,
    "a1-z2-m1": 0.025439294973341518365,
    "a1-z2-m2": 0.0015815120242416486072,
    "a1-z2-m3": 0.00010694677094500705135,
    "a2-z2-m1": 0.27469849480421864324,
    "a2-z2-m2": 0.14410444915150511336,
    "a2-z2-m3": 0.07564088279984878451,
    "b1-z2-m0": 0.011160300964506508307,
    "b1-zneg4-m0": -0.0025201356719520862809,
    "b1-z2-m1": 0.011956674253145060752,
    "b1-z2-m2": 0.00085292160104632310038,
    "b1-zneg4-m1": -0.0024387891811687766523,
    "b1-zneg4-m2": 0.00015749816001318015982,
    "b2-z2-m1": 0.01155848760882578453,
    "b2-z2-m2": 0.008981642767960738228,
}

LAM_GRID = [2.0, -1.0, 1j, -1j, complex(1.5, S7 / 2), complex(1.5, -S7 / 2),
            3.0, complex(-2, 1)]


class TestBasisIntegral:
    def test_order_zero_is_dilog(self):
        assert C_of(0, 2.0) == dilog(0.5)
        v = C_of(0, -1j)
        assert v.real == pytest.approx(-math.pi ** 2 / 48, rel=1e-14)
        assert v.imag == pytest.approx(0.91596559417721901505, rel=1e-14)

    def test_order_one_at_two(self):
        assert C_of(1, 2.0) == pytest.approx(-math.log(2) / 2, rel=1e-15)

    @pytest.mark.parametrize("lam", LAM_GRID)
    @pytest.mark.parametrize("r", [0, 1, 2, 3, 4])
    def test_against_quadrature(self, r, lam):
        want = tanh_sinh(lambda x, xc: np.log(x) / (x - lam) ** (r + 1), tol=1e-13)
        got = C_of(r, lam)
        assert abs(got - complex(want)) <= 1e-12 * max(1.0, abs(complex(want)))

    def test_derivative_ladder(self):
        # (r+1) C_{r+1}(lam) is the lam-derivative of C_r(lam)
        lam = complex(1.7, 0.9)
        h = 1e-6
        for r in range(3):
            num = (C_of(r, lam + h) - C_of(r, lam - h)) / (2 * h)
            assert abs(num - (r + 1) * C_of(r + 1, lam)) <= 1e-7

    def test_pole_in_unit_interval_rejected(self):
        for lam in (0.0, 0.5, 1.0):
            with pytest.raises(DomainError):
                C_of(0, lam)

    def test_bad_order(self):
        with pytest.raises(DomainError):
            C_of(-1, 2.0)


class TestMirror:
    def test_minus_one(self):
        assert C_mirror(0, -1.0).real == pytest.approx(-0.5 * math.log(2) ** 2, rel=1e-14)
        assert C_mirror(0, -1.0).imag == pytest.approx(0.0, abs=1e-15)

    @pytest.mark.parametrize("lam", LAM_GRID)
    def test_order_zero_closed_identity(self, lam):
        # C_0(lam) + C_0(1-lam) = -log((lam-1)/lam)^2 / 2 on the cut plane
        want = -0.5 * cmath.log((lam - 1.0) / lam) ** 2
        assert abs(C_mirror(0, lam) - want) <= 1e-13 * max(1.0, abs(want))

    @pytest.mark.parametrize("lam", [2.0, -1j, complex(1.5, S7 / 2)])
    @pytest.mark.parametrize("r", [1, 2, 3])
    def test_higher_orders_against_quadrature(self, r, lam):
        f = lambda x, xc: (np.log(x) - np.log(xc)) / (x - lam) ** (r + 1)
        want = tanh_sinh(f, tol=1e-13)
        assert abs(C_mirror(r, lam) - complex(want)) <= 1e-12 * max(1.0, abs(complex(want)))


class TestClosedSum:
    def test_reference_total(self):
        got = closed_sum("A1", 2.0, 0)
        assert got.total == pytest.approx(PRINTED["a1-z2-m0"], rel=1e-13)
        assert got.imag_residual <= 1e-15

    def test_orientation_at_negative_z(self):
        # the alternating printed form at z = -4 flips the sign
        got = closed_sum("A1", -4.0, 0)
        assert got.total == pytest.approx(-PRINTED["a1-zneg4-m0-dilog"], rel=1e-13)

    def test_against_series_sample(self):
        for family, z, m in [("A1", 3.0, 1), ("A2", -2.0, 2), ("B1", 5.0, 3),
                             ("B2", -8.0, 4), ("B1", -4.0, 2)]:
            got = closed_sum(family, z, m).total
            want = sum_series(family, z, m, tol=1e-13)
            assert abs(got - want) <= 1e-12 * max(1.0, abs(want))

    def test_conjugate_contributions(self):
        bd = closed_sum("B1", -4.0, 2)
        pair = [c for c, r in zip(bd.contributions, bd.roots.roots) if r.imag != 0.0]
        assert len(pair) == 2
        assert pair[0] == pytest.approx(pair[1].conjugate(), rel=1e-12)
        assert bd.imag_residual <= 1e-11 * max(1.0, abs(bd.total))

    def test_breakdown_recombines(self):
        bd = closed_sum("A2", 2.0, 3)
        grand = sum(bd.contributions, start=0j)
        sign = -1.0 if bd.m % 2 else 1.0
        assert (sign * grand).real == pytest.approx(bd.total, rel=1e-15)

    def test_no_closed_form_for_alternating(self):
        with pytest.raises(DomainError):
            closed_sum("C1", 0.5, 0)

    def test_domain(self):
        with pytest.raises(NonConvergent):
            closed_sum("A1", 0.5, 0)
        with pytest.raises(DomainError):
            closed_sum("A1", 2.0, -1)
        with pytest.raises(DomainError):
            closed_sum("A1", math.inf, 0)


class TestRegistry:
    def test_size(self):
        assert len(REGISTRY) == 17

    def test_printed_values(self):
        # expressions with cancelling terms round at the size of the
        # largest term, not of the result
        for cid, want in PRINTED.items():
            got = reference_constant(cid)
            assert abs(got - want) <= 1e-15, cid

    def test_scale_orientation(self):
        # every registry value equals scale times the family normal form
        for entry in REGISTRY.values():
            total = closed_sum(entry.family, entry.z, entry.m).total
            got = float(entry.scale) * total
            want = entry.value()
            assert abs(got - want) <= 1e-11 * max(1.0, abs(want)), entry.id

    def test_series_reproduces_constants(self):
        for entry in REGISTRY.values():
            got = float(entry.scale) * sum_series(entry.family, entry.z, entry.m, tol=1e-13)
            assert abs(got - entry.value()) <= 1e-10 * max(1.0, abs(entry.value())), entry.id

    def test_cross_form_equality(self):
        assert reference_constant("a1-zneg4-m0-dilog") == pytest.approx(
            reference_constant("a1-zneg4-m0-quot"), rel=1e-14)

    def test_unknown_constant(self):
        with pytest.raises(UnknownConstant):
            reference_constant("nope")

    def test_expressions_render(self):
        expr = REGISTRY["a1-z2-m0"].expression()
        assert "pi*pi" in expr and "G" in expr
        assert REGISTRY["a1-z2-m2"].expression().startswith("(3/100)")
        for entry in REGISTRY.values():
            assert entry.expression()
