"""Metric-level invariants of the Vec4 algebra."""

import math

import pytest
from hypothesis import given, strategies as st

from curvelab.lorentz import (
    CausalCharacter,
    Vec4,
    causal_character,
    euclidean_norm,
    minkowski_dot,
    on_hyperbolic_sphere,
    pseudo_norm,
)

EPS = 2.220446049250313e-16

finite = st.floats(min_value=-1e6, max_value=1e6, allow_nan=False,
                   allow_infinity=False)
vec4s = st.builds(Vec4, finite, finite, finite, finite)


def ulps_close(a, b, n):
    scale = max(abs(a), abs(b), 1e-300)
    return abs(a - b) <= n * EPS * scale


@given(vec4s, vec4s)
def test_dot_symmetric(u, v):
    assert minkowski_dot(u, v) == minkowski_dot(v, u)


@given(vec4s, vec4s, vec4s, st.floats(min_value=-100, max_value=100))
def test_dot_bilinear(u, v, w, k):
    # absolute bound: cancellation can leave a tiny result of large operands
    lhs = minkowski_dot(u + k * v, w)
    rhs = minkowski_dot(u, w) + k * minkowski_dot(v, w)
    scale = (euclidean_norm(u) + abs(k) * euclidean_norm(v)) * \
        euclidean_norm(w)
    assert abs(lhs - rhs) <= 16 * EPS * max(scale, 1e-300)


def test_signature():
    basis = [Vec4(1, 0, 0, 0), Vec4(0, 1, 0, 0),
             Vec4(0, 0, 1, 0), Vec4(0, 0, 0, 1)]
    signs = [minkowski_dot(e, e) for e in basis]
    assert signs == [-1.0, 1.0, 1.0, 1.0]
    for i in range(4):
        for j in range(i + 1, 4):
            assert minkowski_dot(basis[i], basis[j]) == 0.0


@given(vec4s)
def test_pseudo_norm_squares_back(v):
    p = pseudo_norm(v)
    assert p >= 0.0
    assert ulps_close(p * p, abs(minkowski_dot(v, v)), 2)


@given(vec4s)
def test_causal_partition(v):
    # exactly one of the three characters, and the zero vector is spacelike
    ch = causal_character(v)
    assert ch in (CausalCharacter.SPACELIKE, CausalCharacter.TIMELIKE,
                  CausalCharacter.NULL)
    if v.is_zero():
        assert ch is CausalCharacter.SPACELIKE


def test_causal_examples():
    assert causal_character(Vec4(0, 3, 4, 0)) is CausalCharacter.SPACELIKE
    assert causal_character(Vec4(5, 3, 0, 0)) is CausalCharacter.TIMELIKE
    assert causal_character(Vec4(5, 3, 4, 0)) is CausalCharacter.NULL
    assert causal_character(Vec4(0, 0, 0, 0)) is CausalCharacter.SPACELIKE


def test_causal_tolerance_band_is_relative():
    # a vector that is null up to roundoff classifies as null, not spacelike
    v = Vec4(1e8, 1e8 * (1 + 1e-14), 0.0, 0.0)
    assert causal_character(v) is CausalCharacter.NULL
    assert causal_character(v, tol=1e-30) is CausalCharacter.SPACELIKE


def test_pseudo_norm_examples():
    assert pseudo_norm(Vec4(0, 3, 4, 0)) == 5.0
    assert pseudo_norm(Vec4(5, 3, 4, 0)) == 0.0
    assert math.isclose(pseudo_norm(Vec4(2, 1, 0, 0)), math.sqrt(3.0))


def test_hyperbolic_sphere_membership():
    t = 0.83
    p = Vec4(math.cosh(t), 0.0, math.sinh(t), 0.0)
    assert on_hyperbolic_sphere(p, 1e-12)
    assert not on_hyperbolic_sphere(Vec4(0, 1, 0, 0), 1e-12)


def test_vec4_rejects_nonfinite():
    with pytest.raises(ValueError):
        Vec4(float("nan"), 0, 0, 0)
    with pytest.raises(ValueError):
        Vec4(0, float("inf"), 0, 0)


def test_vector_ops():
    u = Vec4(1, 2, 3, 4)
    v = Vec4(4, 3, 2, 1)
    assert (u + v).components == (5, 5, 5, 5)
    assert (u - v).components == (-3, -1, 1, 3)
    assert (2.0 * u).components == (2, 4, 6, 8)
    assert (-u).components == (-1, -2, -3, -4)
