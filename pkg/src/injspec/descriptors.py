"""JSON descriptors for posets, rings, algebras, modules and spectrum points.

Every loader accepts already-decoded JSON (dicts, lists, strings) and raises
:class:`ParseError` on malformed input, so the CLI can map it to exit code 2.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Any, List, Tuple

from .commspec import CommBackend, CommPoint, CommRing
from .deviation import DenseInterval, DisjointSum, FinitePoset, OrderDual, OrdinalChain, ReversedOrdinalChain
from .errors import ParseError
from .fdalg import (
    Algebra,
    FdBackend,
    Representation,
    VertexPoint,
    indecomposable_injective,
    indecomposable_projective,
    simple,
)
from .ncspec import heis
from .ncspec.onecritical import GENERIC, OCSimple, OneCriticalBackend
from .ncspec.qplane import QuantumPlane
from .ordinal import parse_ordinal


def load_json(text: str) -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc.msg}", exc.pos) from exc


def _get(d: Any, key: str, kind: str = "descriptor"):
    if not isinstance(d, dict):
        raise ParseError(f"{kind} must be a JSON object, got {d!r}")
    if key not in d:
        raise ParseError(f"{kind} is missing {key!r}")
    return d[key]


def fraction(x) -> Fraction:
    if isinstance(x, bool):
        raise ParseError(f"not a rational number: {x!r}")
    try:
        return Fraction(x) if not isinstance(x, float) else Fraction(str(x))
    except (TypeError, ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"not a rational number: {x!r}") from exc


# -- posets ----------------------------------------------------------------


def _ordinal(x):
    return parse_ordinal(str(x))


def poset(d):
    kind = _get(d, "kind", "poset")
    if kind == "finite":
        covers = [tuple(map(str, p)) for p in d.get("covers", [])]
        return FinitePoset(tuple(map(str, _get(d, "elements", "poset"))), tuple(covers))
    if kind == "ordinal":
        return OrdinalChain(_ordinal(_get(d, "beta", "poset")))
    if kind == "revOrdinal":
        return ReversedOrdinalChain(_ordinal(_get(d, "beta", "poset")))
    if kind == "dense":
        return DenseInterval()
    if kind == "sum":
        return DisjointSum(tuple(poset(p) for p in _get(d, "parts", "poset")))
    if kind == "dual":
        return OrderDual(poset(_get(d, "inner", "poset")))
    raise ParseError(f"unknown poset kind {kind!r}")


# -- commutative -----------------------------------------------------------


def comm_ring(d) -> CommRing:
    variables = [str(v) for v in _get(d, "vars", "ring")]
    mod = d.get("mod", [])
    if not mod:
        return CommRing.polynomial(*variables)
    return CommRing.quotient(variables, [str(g) for g in mod], d.get("domain"))


def comm_point(ring: CommRing, d) -> CommPoint:
    if isinstance(d, list):
        return ring.point(*map(str, d))
    return ring.point(*map(str, _get(d, "prime", "point")), asserted=bool(d.get("asserted", False)))


# -- quiver algebras -------------------------------------------------------


def algebra(d) -> Algebra:
    arrows = []
    for a in d.get("arrows", []):
        if isinstance(a, dict):
            arrows.append((_get(a, "name", "arrow"), _get(a, "from", "arrow"), _get(a, "to", "arrow")))
        else:
            arrows.append(tuple(a))
    return Algebra.build(
        [str(v) for v in _get(d, "vertices", "algebra")],
        arrows,
        [str(r) for r in d.get("relations", [])],
        d.get("field", "Q"),
    )


def representation(alg: Algebra, d) -> Representation:
    """``{"simple": v}``, ``{"injective": v}``, ``{"projective": v}`` or explicit ``dims``/``maps``."""
    if not isinstance(d, dict):
        raise ParseError(f"representation must be a JSON object, got {d!r}")
    for key, make in (("simple", simple), ("injective", indecomposable_injective), ("projective", indecomposable_projective)):
        if key in d:
            return make(alg, str(d[key]))
    maps = {k: [[fraction(x) for x in row] for row in m] for k, m in d.get("maps", {}).items()}
    return Representation(alg, {str(k): int(v) for k, v in _get(d, "dims", "representation").items()}, maps)


# -- noncommutative points -------------------------------------------------


def qplane_point(qp: QuantumPlane, d):
    kind = _get(d, "kind", "qplane point")
    if kind == "generic":
        return qp.generic
    if kind == "weightHull":
        return qp.weight_hull(fraction(_get(d, "lambda", "weightHull")))
    if kind == "simple":
        return qp.simple(fraction(_get(d, "mu", "simple")))
    raise ParseError(f"unknown qplane point kind {kind!r}")


def _family(d):
    kind = _get(d, "family", "fiberClosed")
    if kind == "p":
        return heis.PFamily(fraction(_get(d, "c", "fiberClosed")))
    if kind == "q":
        return heis.QFamily(fraction(_get(d, "c", "fiberClosed")))
    if kind == "opaque":
        return heis.Opaque(str(_get(d, "label", "fiberClosed")))
    raise ParseError(f"unknown family {kind!r}")


def heis_point(d):
    kind = _get(d, "kind", "heis point")
    if kind == "big":
        return heis.BigGeneric()
    if kind == "fiberGeneric":
        return heis.FiberGeneric(fraction(_get(d, "alpha", kind)))
    if kind == "fiber0":
        return heis.fiber0(*map(str, _get(d, "prime", kind)), asserted=bool(d.get("asserted", False)))
    if kind == "fiberClosed":
        return heis.FiberClosed(fraction(_get(d, "alpha", kind)), _family(d))
    if kind in ("glP", "glQ"):
        f, g = heis.zpoly(str(_get(d, "f", kind))), heis.zpoly(str(d.get("g", "1")))
        return (heis.GLRationalP if kind == "glP" else heis.GLRationalQ)(f, g)
    if kind == "glOpaque":
        targets = frozenset(heis_point(t) for t in d.get("targets", []))
        return heis.GLOpaque(str(_get(d, "label", kind)), targets)
    raise ParseError(f"unknown heis point kind {kind!r}")


def onecritical_point(d):
    kind = _get(d, "kind", "onecritical point")
    if kind == "generic":
        return GENERIC
    if kind == "simple":
        return OCSimple(str(_get(d, "label", "simple")))
    raise ParseError(f"unknown onecritical point kind {kind!r}")


# -- working sets ----------------------------------------------------------


def working_set(data) -> Tuple[Any, List[Any]]:
    """Backend and point list from a working-set document.

    Accepted shapes: ``{"backend": name, <context>, "points": [...]}`` or a
    list of point objects each tagged with the same ``backend`` (context keys
    such as ``ring`` or ``q`` are read from the first entry).
    """
    if isinstance(data, list):
        if not data:
            raise ParseError("empty working set needs the object form to name its backend")
        names = {_get(p, "backend", "point") for p in data}
        if len(names) != 1:
            raise ParseError(f"working set mixes backends {sorted(map(str, names))}")
        ctx = dict(data[0])
        ctx["points"] = [p.get("point", p) for p in data]
        data = ctx
    name = _get(data, "backend", "working set")
    raw = _get(data, "points", "working set")
    if not isinstance(raw, list):
        raise ParseError("points must be a list")
    if name == "comm":
        ring = comm_ring(_get(data, "ring", "working set"))
        return CommBackend(ring), [comm_point(ring, p) for p in raw]
    if name == "fdalg":
        alg = algebra(_get(data, "algebra", "working set"))
        return FdBackend(alg), [VertexPoint(str(p.get("vertex") if isinstance(p, dict) else p)) for p in raw]
    if name == "qplane":
        qp = QuantumPlane(fraction(_get(data, "q", "working set")))
        return qp, [qplane_point(qp, p) for p in raw]
    if name == "heis":
        return heis.HeisBackend(), [heis_point(p) for p in raw]
    if name == "onecritical":
        return OneCriticalBackend(), [onecritical_point(p) for p in raw]
    raise ParseError(f"unknown backend {name!r}")
