"""Backend-generic engine for the specialisation order on a finite working set.

A backend is any object with ``specializes(a, b)`` and ``label(pt)``;
``critical_dimension(pt)`` is optional. Spectra here are infinite, so every
operation acts on an explicit list of points chosen by the caller.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from graphlib import CycleError, TopologicalSorter
from typing import Any, Dict, Hashable, List, Optional, Protocol, Sequence, Tuple

from .errors import CdUnavailable, NotT0


class SpectrumBackend(Protocol):
    def specializes(self, a: Any, b: Any) -> bool: ...

    def label(self, pt: Any) -> str: ...


@dataclass
class SpecDAG:
    nodes: List[Hashable]
    edges: List[Tuple[Hashable, Hashable]]
    labels: Dict[Hashable, str] = field(default_factory=dict)

    def successors(self, a) -> List[Hashable]:
        return [b for x, b in self.edges if x == a]

    def predecessors(self, b) -> List[Hashable]:
        return [a for a, y in self.edges if y == b]

    def label(self, pt) -> str:
        return self.labels.get(pt, str(pt))


def specialization_dag(backend: SpectrumBackend, points: Sequence, workers: int = 1) -> SpecDAG:
    """Complete specialisation relation on ``points`` (edge ``a -> b`` iff ``a`` specialises to ``b``)."""
    points = list(points)
    if len(set(points)) != len(points):
        raise ValueError("working set contains equal points")
    pairs = [(a, b) for a in points for b in points if a != b]
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            answers = list(pool.map(lambda p: backend.specializes(*p), pairs))
    else:
        answers = [backend.specializes(a, b) for a, b in pairs]
    edges = [p for p, ok in zip(pairs, answers) if ok]
    labels = {p: backend.label(p) for p in points}
    return SpecDAG(points, edges, labels)


def check_t0(dag: SpecDAG) -> Tuple[bool, List[Tuple[Hashable, Hashable]]]:
    """Kolmogorov check: no two distinct points specialise to each other."""
    edge_set = set(dag.edges)
    violations = []
    for a, b in dag.edges:
        if (b, a) in edge_set and dag.nodes.index(a) < dag.nodes.index(b):
            violations.append((a, b))
    return not violations, violations


def check_transitive(dag: SpecDAG) -> List[Tuple[Hashable, Hashable, Hashable]]:
    """Triples ``a -> b -> c`` lacking ``a -> c``."""
    edge_set = set(dag.edges)
    missing = []
    for a, b in dag.edges:
        for x, c in dag.edges:
            if x == b and a != c and (a, c) not in edge_set:
                missing.append((a, b, c))
    return missing


def closed_points_in(dag: SpecDAG) -> List[Hashable]:
    sources = {a for a, _ in dag.edges}
    return [p for p in dag.nodes if p not in sources]


def generic_in(dag: SpecDAG) -> Optional[Hashable]:
    """The point specialising to every other node, if any."""
    n = len(dag.nodes)
    found = [p for p in dag.nodes if len(set(dag.successors(p))) == n - 1]
    return found[0] if len(found) == 1 else None


def longest_chain(dag: SpecDAG) -> int:
    """Number of points on the longest specialisation chain."""
    ok, violations = check_t0(dag)
    if not ok:
        raise NotT0(violations)
    graph = {p: set() for p in dag.nodes}
    for a, b in dag.edges:
        graph[b].add(a)
    try:
        order = list(TopologicalSorter(graph).static_order())
    except CycleError as exc:
        raise NotT0(exc.args[1] if len(exc.args) > 1 else []) from exc
    depth = {}
    for p in order:
        depth[p] = 1 + max((depth[a] for a in graph[p]), default=0)
    return max(depth.values(), default=0)


def check_chain_bound(dag: SpecDAG, d: int) -> bool:
    return longest_chain(dag) <= d + 1


def check_cd_monotone(backend, dag: SpecDAG) -> Tuple[bool, List[Tuple[Hashable, Hashable]]]:
    """Every proper specialisation strictly lowers critical dimension."""
    cd = getattr(backend, "critical_dimension", None)
    if cd is None:
        raise CdUnavailable(f"backend {getattr(backend, 'name', backend)!r} has no critical dimension")
    values = {p: cd(p) for p in dag.nodes}
    bad = [(a, b) for a, b in dag.edges if not values[a] > values[b]]
    return not bad, bad


def _quote(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def dot_export(dag: SpecDAG, name: str = "") -> str:
    """Deterministic Graphviz text; nodes and edges sorted by label."""
    lines = [f"digraph {_quote(name)} {{" if name else "digraph {"]
    for lab in sorted(dag.label(p) for p in dag.nodes):
        lines.append(f"  {_quote(lab)};")
    for a, b in sorted((dag.label(a), dag.label(b)) for a, b in dag.edges):
        lines.append(f"  {_quote(a)} -> {_quote(b)};")
    lines.append("}")
    return "\n".join(lines) + "\n"
