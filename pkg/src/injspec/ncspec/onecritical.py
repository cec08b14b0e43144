"""Spectrum of a ring ``R`` with ``R_R`` 1-critical.

Points are ``E(R_R)`` and the hulls of the simple modules. Nonempty open sets
are exactly the cofinite sets containing ``E(R_R)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import FrozenSet, Iterable, Optional, Tuple, Union

from ..errors import MalformedSet, UnknownPoint

GENERIC_LABEL = "E(R_R)"


@dataclass(frozen=True)
class OCGeneric:
    def __str__(self):
        return GENERIC_LABEL


@dataclass(frozen=True)
class OCSimple:
    label: str

    def __str__(self):
        return f"E({self.label})"


OneCriticalPoint = Union[OCGeneric, OCSimple]
GENERIC = OCGeneric()


@dataclass(frozen=True)
class OneCriticalSpace:
    """``labels`` is an explicit tuple of simple-hull labels, or None for a countably infinite family."""

    labels: Optional[Tuple[str, ...]] = None

    def __post_init__(self):
        if self.labels is not None:
            object.__setattr__(self, "labels", tuple(self.labels))
            if GENERIC_LABEL in self.labels:
                raise MalformedSet("the generic point cannot be a simple label")

    @property
    def is_finite(self) -> bool:
        return self.labels is not None

    def contains(self, pt: OneCriticalPoint) -> bool:
        if isinstance(pt, OCGeneric):
            return True
        return self.labels is None or pt.label in self.labels


@dataclass(frozen=True)
class PointSet:
    """Either the finite set ``labels`` or its complement, plus the generic flag."""

    labels: FrozenSet[str]
    cofinite: bool
    contains_generic: bool

    @classmethod
    def finite(cls, labels: Iterable[str] = (), contains_generic: bool = False) -> "PointSet":
        return cls(frozenset(labels), False, contains_generic)

    @classmethod
    def complement_of(cls, labels: Iterable[str] = (), contains_generic: bool = True) -> "PointSet":
        return cls(frozenset(labels), True, contains_generic)

    def is_empty(self, space: OneCriticalSpace) -> bool:
        if self.contains_generic:
            return False
        if not self.cofinite:
            return not self.labels
        return space.is_finite and set(space.labels) <= self.labels

    def __contains__(self, pt: OneCriticalPoint) -> bool:
        if isinstance(pt, OCGeneric):
            return self.contains_generic
        return (pt.label in self.labels) != self.cofinite


def _check(space: OneCriticalSpace, s: PointSet) -> None:
    if not isinstance(s, PointSet):
        raise MalformedSet(f"not a set descriptor: {s!r}")
    if GENERIC_LABEL in s.labels:
        raise MalformedSet("the generic point is given by the flag, not as a label")
    if space.is_finite:
        unknown = s.labels - set(space.labels)
        if unknown:
            raise MalformedSet(f"labels not in the space: {sorted(unknown)}")


def is_open(space: OneCriticalSpace, s: PointSet) -> bool:
    _check(space, s)
    if s.is_empty(space):
        return True
    # in a finite label space every subset of the simples is also cofinite
    return s.contains_generic and (s.cofinite or space.is_finite)


def is_closed(space: OneCriticalSpace, s: PointSet) -> bool:
    _check(space, s)
    complement = PointSet(s.labels, not s.cofinite, not s.contains_generic)
    return is_open(space, complement)


def closure(space: OneCriticalSpace, pt: OneCriticalPoint) -> PointSet:
    if not space.contains(pt):
        raise UnknownPoint(f"{pt} is not a point of the space")
    if isinstance(pt, OCGeneric):
        if space.is_finite:
            return PointSet.finite(space.labels, True)
        return PointSet.complement_of((), True)
    return PointSet.finite((pt.label,), False)


def specializes(a: OneCriticalPoint, b: OneCriticalPoint) -> bool:
    return a == b or isinstance(a, OCGeneric)


def critical_dimension(pt: OneCriticalPoint) -> int:
    return 1 if isinstance(pt, OCGeneric) else 0


class OneCriticalBackend:
    name = "onecritical"

    def __init__(self, space: OneCriticalSpace = OneCriticalSpace()):
        self.space = space

    def specializes(self, a, b) -> bool:
        for p in (a, b):
            if not self.space.contains(p):
                raise UnknownPoint(f"{p} is not a point of the space")
        return specializes(a, b)

    def critical_dimension(self, pt) -> int:
        return critical_dimension(pt)

    def label(self, pt) -> str:
        return str(pt)
