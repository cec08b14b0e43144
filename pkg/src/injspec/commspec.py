"""Commutative noetherian backend.

Points of the injective spectrum of ``Q[x]/I0`` are the hulls ``E(R/p)`` for
primes ``p`` containing ``I0`` (Matlis). A prime is stored as an ideal of the
ambient polynomial ring.

For a cyclic module ``R/J``, ``Hom(R/J, E(R/p))`` is nonzero exactly when
``J`` is contained in ``p``: a nonzero map has image a nonzero submodule of
``E(R/p)``, every such submodule meets ``R/p`` and has ``p``-primary
associated prime, so ``J`` kills an element with annihilator ``p`` up to
localisation; conversely ``R/J -> R/p`` composed with the inclusion is
nonzero. Hence the closure of ``E(R/p)`` is ``V(p)`` and specialisation is
ideal containment.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, List, Sequence

from .errors import MixedRings, NotADomain, NotAQuotient, NotInImage, NotMonomial, NotPrime, Unsupported
from .polycomm import (
    MultiPoly,
    PolyIdeal,
    PolyRing,
    ideal_contains,
    ideal_dim,
    ideal_intersect,
    is_linear_prime,
    is_variable_prime,
    minimal_primes_monomial,
    normal_form,
)


class Provenance(enum.Enum):
    MONOMIAL = "fromMonomialMinimalPrimes"
    LINEAR = "linearGenerators"
    ASSERTED = "userAssertedPrime"


@dataclass(frozen=True)
class CommRing:
    """``Q[variables] / base``; ``domain`` records that ``base`` is prime."""

    poly_ring: PolyRing
    base: PolyIdeal
    domain: bool = False

    def __post_init__(self):
        if self.base.ring.variables != self.poly_ring.variables:
            raise MixedRings("base ideal lives in another ring")
        if self.base.is_unit():
            raise NotADomain("the base ideal is the unit ideal; the ring is zero")

    @classmethod
    def polynomial(cls, *variables: str) -> "CommRing":
        R = PolyRing(tuple(variables))
        return cls(R, PolyIdeal(R, ()), domain=True)

    @classmethod
    def quotient(cls, variables: Sequence[str], relations: Iterable = (), domain: bool | None = None) -> "CommRing":
        R = PolyRing(tuple(variables))
        base = PolyIdeal.of(R, *relations)
        if domain is None:
            domain = is_variable_prime(base) or is_linear_prime(base)
        return cls(R, base, domain)

    @property
    def variables(self):
        return self.poly_ring.variables

    def ideal(self, *gens) -> PolyIdeal:
        return PolyIdeal.of(self.poly_ring, *gens)

    def point(self, *gens, asserted: bool = False) -> "CommPoint":
        return CommPoint.make(self, self.ideal(*gens), asserted=asserted)

    def module(self, *gens) -> "CyclicModule":
        """The cyclic module ``R/J`` with ``J`` generated by ``gens`` and the base ideal."""
        return CyclicModule(self, self.ideal(*gens))

    def __str__(self):
        if self.base.is_zero():
            return str(self.poly_ring)
        return f"{self.poly_ring}/{self.base}"


@dataclass(frozen=True, eq=False)
class CommPoint:
    ring: CommRing
    prime: PolyIdeal
    provenance: Provenance

    @classmethod
    def make(cls, ring: CommRing, prime: PolyIdeal, asserted: bool = False) -> "CommPoint":
        """Certify ``prime`` or accept it on the caller's word when ``asserted``."""
        if prime.ring.variables != ring.variables:
            raise MixedRings("prime lives in another ring")
        if prime.is_unit():
            raise NotPrime("the unit ideal is not prime")
        if not ideal_contains(prime, ring.base):
            raise NotPrime(f"{prime} does not contain the base ideal {ring.base}")
        if is_variable_prime(prime):
            provenance = Provenance.MONOMIAL
        elif is_linear_prime(prime):
            provenance = Provenance.LINEAR
        elif asserted:
            provenance = Provenance.ASSERTED
        elif all(g.is_monomial() for g in prime.gb):
            raise NotPrime(f"{prime} is a monomial ideal that is not generated by variables")
        else:
            raise Unsupported(f"cannot certify primality of {prime}; pass asserted=True")
        return cls(ring, prime, provenance)

    @property
    def asserted(self) -> bool:
        return self.provenance is Provenance.ASSERTED

    def __eq__(self, other):
        if not isinstance(other, CommPoint):
            return NotImplemented
        return self.ring.variables == other.ring.variables and self.prime.gb == other.prime.gb

    def __hash__(self):
        return hash((self.ring.variables, self.prime.gb))

    def __str__(self):
        mark = "*" if self.asserted else ""
        return f"E(R/{self.prime}){mark}"


@dataclass(frozen=True)
class CyclicModule:
    ring: CommRing
    ideal: PolyIdeal


def _same(a: CommPoint, b: CommPoint) -> None:
    if a.ring.variables != b.ring.variables:
        raise MixedRings(f"points over {a.ring} and {b.ring}")


def specializes(p: CommPoint, q: CommPoint) -> bool:
    """``E(R/p)`` specialises to ``E(R/q)`` iff ``p`` is contained in ``q``."""
    _same(p, q)
    return ideal_contains(q.prime, p.prime)


def in_basic_closed(m: CyclicModule, p: CommPoint) -> bool:
    if m.ideal.ring.variables != p.ring.variables:
        raise MixedRings("module and point over different rings")
    return ideal_contains(p.prime, m.ideal)


def closure_point(p: CommPoint, working_set: Sequence[CommPoint]) -> List[CommPoint]:
    return [q for q in working_set if specializes(p, q)]


def critical_dimension(p: CommPoint) -> int:
    return ideal_dim(p.prime)


def support_of_extension(a: CyclicModule, b: CyclicModule) -> PolyIdeal:
    """Ideal cutting out the union of the supports of ``R/I`` and ``R/J``."""
    if a.ring.variables != b.ring.variables:
        raise MixedRings("modules over different rings")
    return ideal_intersect(a.ideal, b.ideal)


def maximal_cd_points(ring: CommRing, I: PolyIdeal) -> List[CommPoint]:
    """Points of ``V(I)`` of maximal critical dimension (monomial ``I`` only)."""
    if not I.is_monomial():
        raise NotMonomial(f"{I} has non-monomial generators")
    primes = minimal_primes_monomial(I)
    if not primes:
        return []
    top = ideal_dim(I)
    return [CommPoint.make(ring, p) for p in primes if ideal_dim(p) == top]


def generic_point(ring: CommRing) -> CommPoint:
    if not ring.domain:
        raise NotADomain(f"{ring} is not known to be a domain")
    return CommPoint.make(ring, ring.base, asserted=True)


def induced_quotient_embedding(source: CommRing, quotient: CommRing, q: CommPoint) -> CommPoint:
    """Image of a point of ``source/K`` in the spectrum of ``source``.

    Points of the quotient are already ideals of the ambient polynomial ring
    containing the kernel, so the contraction is the same ideal.
    """
    if source.variables != quotient.variables:
        raise NotAQuotient("rings have different variables")
    if not ideal_contains(quotient.base, source.base):
        raise NotAQuotient(f"{quotient} is not a quotient of {source}")
    if q.ring.variables != quotient.variables:
        raise MixedRings("point does not belong to the quotient ring")
    kernel = quotient.base.generators
    contracted = PolyIdeal(source.poly_ring, q.prime.generators + kernel)
    return CommPoint.make(source, contracted, asserted=q.asserted)


def induced_localization_embedding(ring: CommRing, f: MultiPoly, p: CommPoint) -> CommPoint:
    """Image of a point of ``R[1/f]``, represented by a prime of ``R`` avoiding ``f``.

    For a prime, ``f`` avoids ``p`` iff every power does, so one membership
    test suffices.
    """
    if p.ring.variables != ring.variables:
        raise MixedRings("point does not belong to the ring")
    if normal_form(f, p.prime).is_zero():
        raise NotInImage(f"{f} lies in {p.prime}; the point is not in the localisation")
    return CommPoint(ring, p.prime, p.provenance)


class CommBackend:
    """Topology-engine adapter for a fixed :class:`CommRing`."""

    name = "comm"

    def __init__(self, ring: CommRing):
        self.ring = ring

    def specializes(self, a: CommPoint, b: CommPoint) -> bool:
        return specializes(a, b)

    def critical_dimension(self, pt: CommPoint) -> int:
        return critical_dimension(pt)

    def in_basic_closed(self, m: CyclicModule, pt: CommPoint) -> bool:
        return in_basic_closed(m, pt)

    def label(self, pt: CommPoint) -> str:
        return str(pt.prime) + ("*" if pt.asserted else "")
