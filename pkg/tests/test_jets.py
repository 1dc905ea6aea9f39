"""Order-4 truncated Taylor arithmetic against hand-computed series."""

import math

import pytest
from hypothesis import given, strategies as st

from curvelab import jets
from curvelab.errors import DivisionNearZero, SqrtNonPositive
from curvelab.jets import Jet

EPS = 2.220446049250313e-16

points = st.floats(min_value=-2.0, max_value=2.0, allow_nan=False)


def jet_close(a: Jet, b: Jet, n=8):
    for x, y in zip(a.coeffs, b.coeffs):
        scale = max(abs(x), abs(y), 1.0)
        if abs(x - y) > n * EPS * scale:
            return False
    return True


def test_variable_and_constant():
    t = jets.variable(1.5)
    assert t.coeffs == (1.5, 1.0, 0.0, 0.0, 0.0)
    c = jets.constant(3.0)
    assert c.coeffs == (3.0, 0.0, 0.0, 0.0, 0.0)


def test_square_of_variable():
    t = jets.variable(3.0)
    sq = t * t
    # (t_0 + h)^2 = 9 + 6h + h^2
    assert sq.coeffs == (9.0, 6.0, 1.0, 0.0, 0.0)
    assert sq.derivative(1) == 6.0
    assert sq.derivative(2) == 2.0
    assert sq.derivative(3) == 0.0


def test_exp_matches_its_own_derivatives():
    j = jets.exp(jets.variable(0.7))
    v = math.exp(0.7)
    for k in range(5):
        assert math.isclose(j.derivative(k), v, rel_tol=8 * EPS)


def test_sin_cos_maclaurin():
    s, c = jets.sincos(jets.variable(0.0))
    assert jet_close(s, Jet((0.0, 1.0, 0.0, -1.0 / 6.0, 0.0)))
    assert jet_close(c, Jet((1.0, 0.0, -0.5, 0.0, 1.0 / 24.0)))


def test_sinh_cosh_derivative_chain():
    # d() loses the top order, so compare coefficients 0..3 only
    sh, ch = jets.sinhcosh(jets.variable(0.4))
    assert sh.d().coeffs[:4] == ch.coeffs[:4]
    assert ch.d().coeffs[:4] == sh.coeffs[:4]


def test_division_reciprocal():
    t = jets.variable(2.0)
    r = jets.constant(1.0) / t
    # d^k (1/t) = (-1)^k k! / t^(k+1)
    for k in range(5):
        want = (-1.0) ** k * math.factorial(k) / 2.0 ** (k + 1)
        assert math.isclose(r.derivative(k), want, rel_tol=8 * EPS)


def test_division_near_zero_raises():
    t = jets.variable(0.0)
    with pytest.raises(DivisionNearZero):
        jets.constant(1.0) / t


def test_sqrt_of_square():
    t = jets.variable(1.3)
    assert jet_close(jets.sqrt(t * t), t)
    with pytest.raises(SqrtNonPositive):
        jets.sqrt(jets.variable(0.0))
    with pytest.raises(SqrtNonPositive):
        jets.sqrt(jets.constant(-4.0))


def test_powi():
    t = jets.variable(1.1)
    assert jet_close(jets.powi(t, 3), t * t * t)
    assert jet_close(jets.powi(t, 0), jets.constant(1.0))


@given(points)
def test_compose_chain_rule(t0):
    # f(g(t)) with f = exp, g = sin: compare against the analytic derivatives
    g = jets.sin(jets.variable(t0))
    f = jets.exp(jets.variable(g.value))
    h = jets.compose(f, g)
    s, c = math.sin(t0), math.cos(t0)
    e = math.exp(s)
    want = (e,
            e * c,
            e * (c * c - s),
            e * (c ** 3 - 3 * s * c - c),
            e * (c ** 4 - 6 * s * c * c - 4 * c * c + 3 * s * s + s))
    for k in range(5):
        assert abs(h.derivative(k) - want[k]) <= 64 * EPS * max(
            1.0, abs(want[k]))


@given(st.floats(min_value=0.3, max_value=2.0))
def test_reversion_round_trip(t0):
    # s(t) = sinh(t) is invertible; composing s with its reversion about t0
    # must reproduce the identity jet at s0 = sinh(t0)
    s_jet = jets.sinh(jets.variable(t0))
    t_jet = jets.reverse(s_jet, at=t0)
    ident = jets.compose(s_jet, t_jet)
    assert jet_close(ident, jets.variable(s_jet.value), n=64)


def test_reversion_known_coefficients():
    # reversion of s = 2h + h^2 (about 0): t = s/2 - s^2/8 + s^3/16 - ...
    s_jet = Jet((0.0, 2.0, 1.0, 0.0, 0.0))
    t_jet = jets.reverse(s_jet, at=0.0)
    assert jet_close(t_jet, Jet((0.0, 0.5, -0.125, 1.0 / 16.0, -5.0 / 128.0)))


def test_value_accessor_and_arithmetic():
    a = jets.variable(2.0)
    b = 3.0 * a - 1.0
    assert b.value == 5.0
    assert b.derivative(1) == 3.0
    assert (a - a).coeffs == (0.0,) * 5
    assert (-a).value == -2.0
