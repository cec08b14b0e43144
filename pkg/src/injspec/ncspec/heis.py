"""Enveloping algebra ``H = k[z]<p, q | [p, q] = z>`` of the Heisenberg Lie algebra.

The spectrum splits into fibres over ``z = alpha``: for ``alpha != 0`` the
fibre ``H_alpha`` is a Weyl algebra (a 1-critical ring: one generic, closed
points otherwise), at ``alpha = 0`` it is ``k[p, q]``. Localising at
``k[z] - 0`` gives the line of generics, which contains ``E(H)`` on top and
points ``E_{f/g} = E(H / (g(z) p - f(z)) H)``.

``E_{f/g}`` specialises to the closed point cut out by ``p - f(a)/g(a)`` in
every fibre ``a != 0`` with ``g(a) != 0``, and, when ``g(0) != 0``, to the
line ``g(0) p - f(0)`` in ``k[p, q]`` and everything below it. The same holds
with ``q`` in place of ``p``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import FrozenSet, Iterable, List, Optional, Union

from ..commspec import CommPoint, CommRing
from ..commspec import specializes as comm_specializes
from ..errors import BadParameter
from ..polycomm import MultiPoly, PolyIdeal, PolyRing, groebner

Z_RING = PolyRing(("z",))
FIBER0_RING = CommRing.polynomial("p", "q")


def zpoly(f) -> MultiPoly:
    if isinstance(f, MultiPoly):
        return f.in_ring(Z_RING)
    if isinstance(f, (int, Fraction)):
        return Z_RING.constant(f)
    return Z_RING.parse(str(f))


@dataclass(frozen=True)
class BigGeneric:
    def __str__(self):
        return "E(H)"


@dataclass(frozen=True)
class FiberGeneric:
    alpha: Fraction

    def __post_init__(self):
        object.__setattr__(self, "alpha", Fraction(self.alpha))
        if self.alpha == 0:
            raise BadParameter("the fibre at 0 is k[p,q]; use Fiber0Point with the zero prime")

    def __str__(self):
        return f"E(H_{self.alpha})"


@dataclass(frozen=True)
class Fiber0Point:
    point: CommPoint

    def __str__(self):
        mark = "*" if self.point.asserted else ""
        return f"E(H_0/{self.point.prime}){mark}"


@dataclass(frozen=True)
class PFamily:
    c: Fraction

    def __post_init__(self):
        object.__setattr__(self, "c", Fraction(self.c))


@dataclass(frozen=True)
class QFamily:
    c: Fraction

    def __post_init__(self):
        object.__setattr__(self, "c", Fraction(self.c))


@dataclass(frozen=True)
class Opaque:
    label: str


Family = Union[PFamily, QFamily, Opaque]


@dataclass(frozen=True)
class FiberClosed:
    """Closed point of the fibre ``H_alpha`` (``alpha != 0``)."""

    alpha: Fraction
    family: Family

    def __post_init__(self):
        object.__setattr__(self, "alpha", Fraction(self.alpha))
        if self.alpha == 0:
            raise BadParameter("closed fibre points need alpha != 0")

    def __str__(self):
        fam = self.family
        if isinstance(fam, PFamily):
            return f"E(H_{self.alpha}/(p - {fam.c}))"
        if isinstance(fam, QFamily):
            return f"E(H_{self.alpha}/(q - {fam.c}))"
        return f"E(H_{self.alpha}:{fam.label})"


def _exact_quotient(f: MultiPoly, d: MultiPoly) -> MultiPoly:
    """``f / d`` for univariate ``d`` dividing ``f``, by long division."""
    q, r = Z_RING.zero(), f
    (dn,), dc = d.lead()
    while not r.is_zero():
        (rn,), rc = r.lead()
        if rn < dn:
            raise BadParameter(f"{d} does not divide {f}")
        t = Z_RING.monomial((rn - dn,), rc / dc)
        q, r = q + t, r - t * d
    return q


def _lowest_terms(f, g):
    """Cancel the gcd (the reduced basis of ``(f, g)``) and make ``g`` monic."""
    f, g = zpoly(f), zpoly(g)
    if g.is_zero():
        raise BadParameter("denominator must be nonzero")
    (gcd,) = groebner([f, g], Z_RING) if not f.is_zero() else (g.monic(),)
    f, g = _exact_quotient(f, gcd), _exact_quotient(g, gcd)
    lc = g.lc()
    return f * (1 / lc), g * (1 / lc)


@dataclass(frozen=True)
class GLRationalP:
    """``E_{f/g}`` for the right ideal ``(g(z) p - f(z))``; stored in lowest terms with ``g`` monic."""

    f: MultiPoly
    g: MultiPoly

    def __post_init__(self):
        f, g = _lowest_terms(self.f, self.g)
        object.__setattr__(self, "f", f)
        object.__setattr__(self, "g", g)

    def __str__(self):
        return f"E_p[({self.f})/({self.g})]"


@dataclass(frozen=True)
class GLRationalQ:
    f: MultiPoly
    g: MultiPoly

    def __post_init__(self):
        f, g = _lowest_terms(self.f, self.g)
        object.__setattr__(self, "f", f)
        object.__setattr__(self, "g", g)

    def __str__(self):
        return f"E_q[({self.f})/({self.g})]"


@dataclass(frozen=True)
class GLOpaque:
    """A point of the line of generics known only by its declared specialisations."""

    label: str
    targets: FrozenSet["HeisPoint"] = field(default_factory=frozenset)

    def __str__(self):
        return f"E_gl[{self.label}]"


HeisPoint = Union[BigGeneric, FiberGeneric, Fiber0Point, FiberClosed, GLRationalP, GLRationalQ, GLOpaque]


def fiber0(*gens, asserted: bool = False) -> Fiber0Point:
    return Fiber0Point(FIBER0_RING.point(*gens, asserted=asserted))


def fiber_of(pt: HeisPoint) -> Optional[Fraction]:
    if isinstance(pt, (FiberGeneric, FiberClosed)):
        return pt.alpha
    if isinstance(pt, Fiber0Point):
        return Fraction(0)
    return None


def _line_ideal(var: str, f: MultiPoly, g: MultiPoly) -> PolyIdeal:
    R = FIBER0_RING.poly_ring
    g0, f0 = g(0), f(0)
    return PolyIdeal(R, (R.var(var) * g0 - f0,))


def _gl_specializes(var: str, family, a, b: HeisPoint) -> bool:
    if isinstance(b, FiberClosed):
        if not isinstance(b.family, family):
            return False
        g_at = a.g(b.alpha)
        return g_at != 0 and b.family.c == a.f(b.alpha) / g_at
    if isinstance(b, Fiber0Point):
        if a.g(0) == 0:
            return False
        line = CommPoint.make(FIBER0_RING, _line_ideal(var, a.f, a.g))
        return comm_specializes(line, b.point)
    return False


def specializes(a: HeisPoint, b: HeisPoint) -> bool:
    if a == b or isinstance(a, BigGeneric):
        return True
    if isinstance(a, FiberGeneric):
        return fiber_of(b) == a.alpha
    if isinstance(a, Fiber0Point):
        return isinstance(b, Fiber0Point) and comm_specializes(a.point, b.point)
    if isinstance(a, GLRationalP):
        return _gl_specializes("p", PFamily, a, b)
    if isinstance(a, GLRationalQ):
        return _gl_specializes("q", QFamily, a, b)
    if isinstance(a, GLOpaque):
        return b in a.targets
    return False


def closure_gl(f, g, sample: Iterable[HeisPoint]) -> List[HeisPoint]:
    """Members of ``sample`` in the closure of ``E_{f/g}``."""
    pt = GLRationalP(zpoly(f), zpoly(g))
    return [b for b in sample if specializes(pt, b)]


class HeisBackend:
    name = "heis"

    def specializes(self, a: HeisPoint, b: HeisPoint) -> bool:
        return specializes(a, b)

    def label(self, pt: HeisPoint) -> str:
        return str(pt)
