"""Gabriel-Rentschler deviation of symbolically presented posets.

Only a closed family of descriptors is supported: finite posets, well-ordered
chains, reversed well-ordered chains, the rational interval, disjoint sums and
order duals. Krull dimension of a module is the deviation of its lattice of
submodules, so :func:`submodule_lattice_krull` is the same computation.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import total_ordering
from typing import Tuple, Union

from .errors import InvalidPoset
from .ordinal import ONE, Ordinal, ZERO, as_ordinal

__all__ = [
    "FinitePoset",
    "OrdinalChain",
    "ReversedOrdinalChain",
    "DenseInterval",
    "DisjointSum",
    "OrderDual",
    "PosetDescriptor",
    "MinusOne",
    "Value",
    "Undefined",
    "DeviationResult",
    "MINUS_ONE",
    "UNDEFINED",
    "deviation",
    "submodule_lattice_krull",
]


@dataclass(frozen=True)
class FinitePoset:
    """Finite poset given by labels and pairs ``(a, b)`` meaning ``a < b``.

    The pairs need not be covering relations; only their reflexive-transitive
    closure matters.
    """

    elements: Tuple[str, ...]
    covers: Tuple[Tuple[str, str], ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "elements", tuple(self.elements))
        object.__setattr__(self, "covers", tuple(tuple(p) for p in self.covers))

    def strict_order(self) -> set:
        """Transitive closure of the strict relation, validated antisymmetric."""
        index = set(self.elements)
        if len(index) != len(self.elements):
            raise InvalidPoset("duplicate element labels")
        succ = {e: set() for e in self.elements}
        for a, b in self.covers:
            if a not in index or b not in index:
                raise InvalidPoset(f"pair ({a}, {b}) mentions an unknown element")
            if a != b:
                succ[a].add(b)
        strict = set()
        for a in self.elements:
            stack, seen = list(succ[a]), set()
            while stack:
                b = stack.pop()
                if b in seen:
                    continue
                seen.add(b)
                stack.extend(succ[b])
            if a in seen:
                raise InvalidPoset(f"relation is not antisymmetric at {a!r}")
            strict.update((a, b) for b in seen)
        return strict


@dataclass(frozen=True)
class OrdinalChain:
    beta: Ordinal

    def __post_init__(self):
        object.__setattr__(self, "beta", as_ordinal(self.beta))


@dataclass(frozen=True)
class ReversedOrdinalChain:
    beta: Ordinal

    def __post_init__(self):
        object.__setattr__(self, "beta", as_ordinal(self.beta))


@dataclass(frozen=True)
class DenseInterval:
    """The rationals in [0, 1]; contains a dense linear order."""


@dataclass(frozen=True)
class DisjointSum:
    parts: Tuple["PosetDescriptor", ...]

    def __post_init__(self):
        object.__setattr__(self, "parts", tuple(self.parts))
        if not self.parts:
            raise InvalidPoset("disjoint sum needs at least one part")


@dataclass(frozen=True)
class OrderDual:
    inner: "PosetDescriptor"


PosetDescriptor = Union[FinitePoset, OrdinalChain, ReversedOrdinalChain, DenseInterval, DisjointSum, OrderDual]


@total_ordering
@dataclass(frozen=True)
class MinusOne:
    def __lt__(self, other):
        if isinstance(other, (MinusOne, Value)):
            return isinstance(other, Value)
        return NotImplemented

    def __str__(self):
        return "-1"


@total_ordering
@dataclass(frozen=True)
class Value:
    alpha: Ordinal

    def __post_init__(self):
        object.__setattr__(self, "alpha", as_ordinal(self.alpha))

    def __lt__(self, other):
        if isinstance(other, MinusOne):
            return False
        if isinstance(other, Value):
            return self.alpha < other.alpha
        return NotImplemented

    def __str__(self):
        return str(self.alpha)


@dataclass(frozen=True)
class Undefined:
    def __str__(self):
        return "undefined"


DeviationResult = Union[MinusOne, Value, Undefined]
MINUS_ONE = MinusOne()
UNDEFINED = Undefined()


def _dual(p: PosetDescriptor) -> PosetDescriptor:
    if isinstance(p, OrdinalChain):
        return ReversedOrdinalChain(p.beta)
    if isinstance(p, ReversedOrdinalChain):
        return OrdinalChain(p.beta)
    if isinstance(p, OrderDual):
        return p.inner
    if isinstance(p, DisjointSum):
        return DisjointSum(tuple(OrderDual(q) for q in p.parts))
    if isinstance(p, FinitePoset):
        return FinitePoset(p.elements, tuple((b, a) for a, b in p.covers))
    return p


def deviation(p: PosetDescriptor) -> DeviationResult:
    if isinstance(p, FinitePoset):
        # finite posets always satisfy DCC
        return Value(ZERO) if p.strict_order() else MINUS_ONE
    if isinstance(p, OrdinalChain):
        return MINUS_ONE if p.beta <= ONE else Value(ZERO)
    if isinstance(p, ReversedOrdinalChain):
        if p.beta <= ONE:
            return MINUS_ONE
        if p.beta.is_finite():
            return Value(ZERO)
        return Value(p.beta.leading_exponent())
    if isinstance(p, DenseInterval):
        return UNDEFINED
    if isinstance(p, DisjointSum):
        results = [deviation(q) for q in p.parts]
        if any(isinstance(r, Undefined) for r in results):
            return UNDEFINED
        return max(results)
    if isinstance(p, OrderDual):
        return deviation(_dual(p.inner))
    raise InvalidPoset(f"unsupported poset descriptor {p!r}")


def submodule_lattice_krull(lattice: PosetDescriptor) -> DeviationResult:
    """Krull dimension of a module presented by its submodule lattice."""
    return deviation(lattice)
