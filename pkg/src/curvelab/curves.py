"""The analytic curve catalog and jet evaluation of curves.

Curves are named closed forms with parameters, not a parsed expression
language: each catalog entry builds its four coordinate jets from the
elementary jet operations, so every derivative up to order 4 is exact up to
roundoff.

Constructed curves (Theorem-style products of a radius function with a
spherical curve, and sampled syntheses) are registered at runtime under
generated ids and addressed exactly like static catalog entries.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from enum import Enum
from typing import Callable, Mapping

from . import jets
from .errors import (DivisionNearZero, NonSpacelikeVelocity, OutOfDomain,
                     PoleEncountered, SqrtNonPositive)
from .jets import Jet
from .lorentz import Vec4

__all__ = [
    "Parameterization",
    "CurveSpec",
    "CurveJet",
    "eval_curve",
    "speed",
    "speed_jet",
    "register_curve",
    "catalog_ids",
    "make_spec",
]

DOMAIN_SLACK = 1e-9
POLE_GUARD = 1e-6


class Parameterization(Enum):
    ARBITRARY = "arbitrary"
    ARCLENGTH = "arclength"


@dataclass(frozen=True)
class CurveSpec:
    """A named curve with parameter values and a closed domain interval."""

    catalog_id: str
    params: Mapping[str, float]
    domain: tuple[float, float]
    parameterization: Parameterization = Parameterization.ARBITRARY

    def __post_init__(self):
        lo, hi = self.domain
        if not (math.isfinite(lo) and math.isfinite(hi)) or not lo < hi:
            raise OutOfDomain(f"domain must be a nonempty interval, got {self.domain}")
        entry = _lookup(self.catalog_id)
        merged = dict(entry.default_params)
        merged.update(self.params)
        object.__setattr__(self, "params", merged)
        entry.validate(merged, self.domain)

    def contains(self, t: float) -> bool:
        lo, hi = self.domain
        span = hi - lo
        return lo - DOMAIN_SLACK * span <= t <= hi + DOMAIN_SLACK * span


@dataclass(frozen=True)
class CurveJet:
    """Four coordinate jets of a curve at one parameter value."""

    t: float
    jets: tuple[Jet, Jet, Jet, Jet]

    def position(self) -> Vec4:
        return Vec4(*(j.value for j in self.jets))

    def derivative(self, k: int) -> Vec4:
        """k-th parameter derivative vector, k in 0..4."""
        return Vec4(*(j.derivative(k) for j in self.jets))


@dataclass(frozen=True)
class CatalogEntry:
    build: Callable[[Jet, Mapping[str, float]], tuple[Jet, Jet, Jet, Jet]]
    default_params: Mapping[str, float] = field(default_factory=dict)
    default_domain: tuple[float, float] = (0.0, 1.0)
    # raises on invalid parameter values / domains (poles inside the range)
    validate: Callable[[Mapping[str, float], tuple[float, float]], None] = \
        lambda params, domain: None


# -- static catalog -----------------------------------------------------------

def _paper_example(tj: Jet, p) -> tuple[Jet, ...]:
    sh, ch = jets.sinhcosh(tj)
    rho = p["a"] / jets.sin(tj + p["s0"])
    zero = jets.constant(0.0)
    return (rho * ch, zero, rho * sh, zero)


def _paper_example_validate(p, domain):
    if p["a"] == 0.0:
        raise ValueError("paper_example requires a != 0")
    _require_no_sin_zero(domain, p["s0"])


def _require_no_sin_zero(domain, shift):
    """Reject a domain containing (or grazing) a zero of sin(t + shift)."""
    lo, hi = domain[0] + shift, domain[1] + shift
    if hi - lo >= math.pi:
        raise PoleEncountered("domain spans a full period of the pole lattice")
    k_lo = math.ceil(lo / math.pi - POLE_GUARD)
    k_hi = math.floor(hi / math.pi + POLE_GUARD)
    if k_lo <= k_hi:
        raise PoleEncountered(
            f"sin(t + {shift}) vanishes inside the requested domain")


def _hyperbolic_geodesic(tj: Jet, p) -> tuple[Jet, ...]:
    sh, ch = jets.sinhcosh(tj)
    zero = jets.constant(0.0)
    return (ch, zero, sh, zero)


def _hyperbolic_clelia(tj: Jet, p) -> tuple[Jet, ...]:
    sh, ch = jets.sinhcosh(tj)
    sn, cn = jets.sincos(tj)
    return (ch, sh * cn, sh * sn * cn, sh * sn * sn)


def _lorentz_helix(tj: Jet, p) -> tuple[Jet, ...]:
    sh, ch = jets.sinhcosh(p["p"] * tj)
    sn, cn = jets.sincos(p["q"] * tj)
    return (p["A"] * sh, p["A"] * ch, p["B"] * cn, p["B"] * sn)


_CATALOG: dict[str, CatalogEntry] = {
    "paper_example": CatalogEntry(
        build=_paper_example,
        default_params={"a": 1.0, "s0": 0.0},
        default_domain=(0.9, 2.2),
        validate=_paper_example_validate,
    ),
    "hyperbolic_geodesic": CatalogEntry(
        build=_hyperbolic_geodesic,
        default_domain=(0.0, 2.0),
    ),
    "hyperbolic_clelia": CatalogEntry(
        build=_hyperbolic_clelia,
        default_domain=(0.25, 2.4),
    ),
    "lorentz_helix": CatalogEntry(
        build=_lorentz_helix,
        default_params={"A": 1.0, "p": 1.0, "B": math.sqrt(2.0), "q": 1.0},
        default_domain=(0.0, 3.0),
    ),
}

_RUNTIME: dict[str, CatalogEntry] = {}
_counter = itertools.count(1)


def _lookup(catalog_id: str) -> CatalogEntry:
    try:
        return _CATALOG[catalog_id]
    except KeyError:
        pass
    try:
        return _RUNTIME[catalog_id]
    except KeyError:
        raise KeyError(f"unknown curve id {catalog_id!r}") from None


def catalog_ids() -> list[str]:
    return list(_CATALOG) + list(_RUNTIME)


def register_curve(entry: CatalogEntry, prefix: str = "generic_rectifying") -> str:
    """Register a runtime-built curve; returns its generated id."""
    cid = f"{prefix}:{next(_counter):04d}"
    _RUNTIME[cid] = entry
    return cid


def make_spec(catalog_id: str, params: Mapping[str, float] | None = None,
              domain: tuple[float, float] | None = None) -> CurveSpec:
    """Spec with catalog defaults filled in for omitted params/domain."""
    entry = _lookup(catalog_id)
    return CurveSpec(catalog_id, dict(params or {}),
                     tuple(domain) if domain else tuple(entry.default_domain))


def eval_curve(spec: CurveSpec, t: float) -> CurveJet:
    """Position and exact derivatives up to order 4 of the curve at ``t``."""
    if not spec.contains(t):
        raise OutOfDomain(f"t={t} outside domain {spec.domain} of {spec.catalog_id}")
    entry = _lookup(spec.catalog_id)
    try:
        coords = entry.build(jets.variable(t), spec.params)
    except (DivisionNearZero, SqrtNonPositive) as exc:
        raise PoleEncountered(
            f"{spec.catalog_id} hit a pole at t={t}: {exc}") from exc
    return CurveJet(t=t, jets=tuple(coords))


def speed_jet(spec: CurveSpec, t: float) -> Jet:
    """Jet of the speed v(t) = ||alpha'(t)||; requires a spacelike velocity.

    Valid to order 3 (one differentiation of the coordinate jets).
    """
    cj = eval_curve(spec, t)
    d = [j.d() for j in cj.jets]
    g = -d[0] * d[0] + d[1] * d[1] + d[2] * d[2] + d[3] * d[3]
    if g.value <= 0.0:
        raise NonSpacelikeVelocity(
            f"g(alpha', alpha') = {g.value} at t={t} on {spec.catalog_id}")
    return jets.sqrt(g)


def speed(spec: CurveSpec, t: float) -> float:
    return speed_jet(spec, t).value
