"""Finite-dimensional algebras ``kQ/I`` and their representations.

Conventions: representations are right modules, vectors are rows, and an
arrow ``a: s -> t`` acts by a ``dim(s) x dim(t)`` matrix. A path is a tuple
of arrow names read left to right, so the path ``(a, b)`` acts as
``M_a @ M_b``.

The algebra is made finite by locating the least ``L`` with every path of
length ``L`` in ``I``. That test is exact for acyclic quivers and for
quivers whose relations are homogeneous in path length; other presentations
are rejected.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from functools import cached_property
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

from .errors import InvalidAlgebra, InvalidRepresentation, MixedAlgebras
from .linalg import Field, Matrix, QuotientSpace, coordinates, identity, intersect_spaces, left_kernel, matmul, nullspace, rank, row_space, zeros

Path = Tuple[str, ...]

DEFAULT_CAP = 12


@dataclass(frozen=True)
class Arrow:
    name: str
    source: str
    target: str


@dataclass(frozen=True)
class Relation:
    """Linear combination of parallel paths, as ``((coeff, path), ...)``."""

    terms: Tuple[Tuple[Fraction, Path], ...]

    @classmethod
    def parse(cls, text: str) -> "Relation":
        """Parse ``"a*b - 2*c*d"``; arrows are separated by ``*``."""
        terms = []
        pos = 0
        s = text.strip()
        pattern = re.compile(r"\s*([+-])?\s*(?:(\d+(?:/\d+)?)\s*\*\s*)?([A-Za-z_]\w*(?:\s*\*\s*[A-Za-z_]\w*)*)\s*")
        first = True
        while pos < len(s):
            m = pattern.match(s, pos)
            if not m or m.end() == pos or (not first and not m.group(1)):
                raise InvalidAlgebra(f"cannot parse relation {text!r} at position {pos}")
            sign = -1 if m.group(1) == "-" else 1
            coeff = Fraction(m.group(2)) if m.group(2) else Fraction(1)
            path = tuple(p.strip() for p in m.group(3).split("*"))
            terms.append((sign * coeff, path))
            pos = m.end()
            first = False
        if not terms:
            raise InvalidAlgebra("empty relation")
        return cls(tuple(terms))

    def __str__(self):
        out = []
        for c, p in self.terms:
            body = "*".join(p)
            mag = abs(c)
            body = body if mag == 1 else f"{mag}*{body}"
            out.append(("-" if c < 0 else "+") + body)
        s = " ".join(out)
        return s[1:] if s.startswith("+") else s


@dataclass(frozen=True, eq=False)
class Algebra:
    """Quiver algebra ``kQ/I`` over ``Q`` or a prime field."""

    vertices: Tuple[str, ...]
    arrows: Tuple[Arrow, ...] = ()
    relations: Tuple[Relation, ...] = ()
    field: Field = dc_field(default_factory=Field)
    cap: int = DEFAULT_CAP

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(str(v) for v in self.vertices))
        object.__setattr__(self, "arrows", tuple(self.arrows))
        object.__setattr__(
            self, "relations", tuple(r if isinstance(r, Relation) else Relation.parse(r) for r in self.relations)
        )
        self._validate()
        # fail early on non-nilpotent arrow ideals
        self.structure

    @classmethod
    def build(cls, vertices, arrows=(), relations=(), field="Q", cap=DEFAULT_CAP) -> "Algebra":
        """``arrows`` as ``(name, source, target)`` triples, relations as strings."""
        arrs = tuple(a if isinstance(a, Arrow) else Arrow(*map(str, a)) for a in arrows)
        fld = field if isinstance(field, Field) else Field.parse(field)
        return cls(tuple(vertices), arrs, tuple(relations), fld, cap)

    def _validate(self) -> None:
        if len(set(self.vertices)) != len(self.vertices):
            raise InvalidAlgebra("duplicate vertex names")
        names = [a.name for a in self.arrows]
        if len(set(names)) != len(names):
            raise InvalidAlgebra("duplicate arrow names")
        for a in self.arrows:
            if a.source not in self.vertices or a.target not in self.vertices:
                raise InvalidAlgebra(f"arrow {a.name} has an unknown endpoint")
        lengths = set()
        for rel in self.relations:
            ends = set()
            for c, path in rel.terms:
                if len(path) < 2:
                    raise InvalidAlgebra(f"relation {rel} has a term of length < 2")
                ends.add(self.path_ends(path))
                lengths.add(len(path))
            if len(ends) != 1:
                raise InvalidAlgebra(f"relation {rel} is not a combination of parallel paths")
            rel_lengths = {len(p) for _, p in rel.terms}
            if len(rel_lengths) > 1 and self.has_cycle():
                raise InvalidAlgebra(
                    f"relation {rel} mixes path lengths on a quiver with oriented cycles; unsupported"
                )

    @cached_property
    def arrow(self) -> Dict[str, Arrow]:
        return {a.name: a for a in self.arrows}

    def path_ends(self, path: Path) -> Tuple[str, str]:
        for name in path:
            if name not in self.arrow:
                raise InvalidAlgebra(f"unknown arrow {name!r}")
        for x, y in zip(path, path[1:]):
            if self.arrow[x].target != self.arrow[y].source:
                raise InvalidAlgebra(f"arrows {x} and {y} do not compose")
        return self.arrow[path[0]].source, self.arrow[path[-1]].target

    def has_cycle(self) -> bool:
        succ = {v: [a.target for a in self.arrows if a.source == v] for v in self.vertices}
        state: Dict[str, int] = {}

        def visit(v):
            state[v] = 1
            for w in succ[v]:
                if state.get(w) == 1 or (w not in state and visit(w)):
                    return True
            state[v] = 2
            return False

        return any(visit(v) for v in self.vertices if v not in state)

    def paths_between(self, max_len: int) -> Dict[Tuple[str, str], List[Path]]:
        """All paths of length ``< max_len``, grouped by endpoints (trivial paths are ``()``)."""
        out: Dict[Tuple[str, str], List[Path]] = {(u, v): [] for u in self.vertices for v in self.vertices}
        frontier = [((), v, v) for v in self.vertices]
        for length in range(max_len):
            nxt = []
            for path, s, t in frontier:
                out[(s, t)].append(path)
                if length + 1 < max_len:
                    for a in self.arrows:
                        if a.source == t:
                            nxt.append((path + (a.name,), s, a.target))
            frontier = nxt
        return out

    @cached_property
    def structure(self) -> "_Structure":
        return _build_structure(self)

    @property
    def nilpotency(self) -> int:
        """Least ``L`` with every path of length ``L`` zero in the algebra."""
        return self.structure.L

    @property
    def dimension(self) -> int:
        return sum(q.dim for q in self.structure.blocks.values())

    def __eq__(self, other):
        if not isinstance(other, Algebra):
            return NotImplemented
        return (self.vertices, self.arrows, self.relations, self.field) == (
            other.vertices,
            other.arrows,
            other.relations,
            other.field,
        )

    def __hash__(self):
        return hash((self.vertices, self.arrows, self.relations, self.field))


@dataclass
class _Block:
    paths: List[Path]
    quotient: QuotientSpace

    @property
    def dim(self) -> int:
        return self.quotient.dim

    @property
    def basis(self) -> List[Path]:
        return [self.paths[c] for c in self.quotient.free]

    def coords(self, path: Path, L: int):
        v = [self.quotient.field.zero] * len(self.paths)
        if len(path) < L:
            v[self.paths.index(path)] = self.quotient.field.one
        return self.quotient.coords(v)


@dataclass
class _Structure:
    L: int
    blocks: Dict[Tuple[str, str], _Block]


def _ideal_span(alg: Algebra, N: int, paths: Dict[Tuple[str, str], List[Path]]):
    """Span of ``u * rho * w`` truncated below length ``N``, grouped by endpoints."""
    F = alg.field
    index = {key: {p: i for i, p in enumerate(ps)} for key, ps in paths.items()}
    rows: Dict[Tuple[str, str], List[List]] = {key: [] for key in paths}
    for rel in alg.relations:
        s, t = alg.path_ends(rel.terms[0][1])
        shortest = min(len(p) for _, p in rel.terms)
        for u_src in alg.vertices:
            for u in paths[(u_src, s)]:
                for w_tgt in alg.vertices:
                    for w in paths[(t, w_tgt)]:
                        if len(u) + shortest + len(w) >= N:
                            continue
                        key = (u_src, w_tgt)
                        vec = [F.zero] * len(paths[key])
                        for c, p in rel.terms:
                            full = u + p + w
                            if len(full) < N:
                                i = index[key][full]
                                vec[i] = vec[i] + F(c)
                        if any(vec):
                            rows[key].append(vec)
    return rows


def _build_structure(alg: Algebra) -> _Structure:
    F = alg.field
    if not alg.arrows:
        paths = alg.paths_between(1)
        return _Structure(1, {k: _Block(ps, QuotientSpace(F, [], len(ps))) for k, ps in paths.items()})
    for L in range(2, alg.cap + 1):
        N = L + 1
        paths = alg.paths_between(N)
        span = _ideal_span(alg, N, paths)
        ok = True
        for key, ps in paths.items():
            q = QuotientSpace(F, span[key], len(ps))
            for i, p in enumerate(ps):
                if len(p) == L:
                    e = [F.zero] * len(ps)
                    e[i] = F.one
                    if not q.contains(e):
                        ok = False
                        break
            if not ok:
                break
        if not ok:
            continue
        blocks = {}
        for key, ps in paths.items():
            keep = [i for i, p in enumerate(ps) if len(p) < L]
            short = [ps[i] for i in keep]
            rows = [[r[i] for i in keep] for r in span[key]]
            blocks[key] = _Block(short, QuotientSpace(F, rows, len(short)))
        return _Structure(L, blocks)
    raise InvalidAlgebra(f"arrow ideal not nilpotent modulo the relations up to path length {alg.cap}")


class Representation:
    """Finite-dimensional right module given by vertex dimensions and arrow matrices."""

    def __init__(self, algebra: Algebra, dims: Mapping[str, int], maps: Optional[Mapping[str, Sequence]] = None, check: bool = True):
        self.algebra = algebra
        F = algebra.field
        self.dims = {v: int(dims.get(v, 0)) for v in algebra.vertices}
        if any(d < 0 for d in self.dims.values()):
            raise InvalidRepresentation("negative dimension")
        maps = dict(maps or {})
        self.maps: Dict[str, Matrix] = {}
        for a in algebra.arrows:
            r, c = self.dims[a.source], self.dims[a.target]
            m = maps.pop(a.name, None)
            if m is None:
                self.maps[a.name] = zeros(F, r, c)
                continue
            m = tuple(tuple(F(x) for x in row) for row in m)
            if len(m) != r or any(len(row) != c for row in m):
                raise InvalidRepresentation(f"arrow {a.name} needs a {r}x{c} matrix")
            self.maps[a.name] = m
        if maps:
            raise InvalidRepresentation(f"unknown arrows {sorted(maps)}")
        if check:
            for rel in algebra.relations:
                if any(any(x for x in row) for row in self.evaluate(rel)):
                    raise InvalidRepresentation(f"relation {rel} does not vanish")

    @property
    def field(self) -> Field:
        return self.algebra.field

    def dim_vector(self) -> Tuple[int, ...]:
        return tuple(self.dims[v] for v in self.algebra.vertices)

    @property
    def total_dim(self) -> int:
        return sum(self.dims.values())

    def path_matrix(self, path: Path) -> Matrix:
        s, _ = self.algebra.path_ends(path)
        m = identity(self.field, self.dims[s])
        for name in path:
            m = matmul(self.field, m, self.maps[name], self.dims[self.algebra.arrow[name].target])
        return m

    def evaluate(self, rel: Relation) -> Matrix:
        s, t = self.algebra.path_ends(rel.terms[0][1])
        F = self.field
        acc = [[F.zero] * self.dims[t] for _ in range(self.dims[s])]
        for c, p in rel.terms:
            pm = self.path_matrix(p)
            for i in range(self.dims[s]):
                for j in range(self.dims[t]):
                    acc[i][j] = acc[i][j] + F(c) * pm[i][j]
        return tuple(tuple(r) for r in acc)

    def is_zero(self) -> bool:
        return self.total_dim == 0

    def __eq__(self, other):
        if not isinstance(other, Representation):
            return NotImplemented
        return self.algebra == other.algebra and self.dims == other.dims and self.maps == other.maps

    def __repr__(self):
        return f"Representation(dims={self.dim_vector()})"


@dataclass
class SubRepresentation:
    """A subrepresentation with its inclusion: rows of ``inclusion[v]`` span it inside ``ambient``."""

    module: Representation
    inclusion: Dict[str, Tuple[Tuple, ...]]
    ambient: Representation

    @property
    def dims(self) -> Dict[str, int]:
        return self.module.dims

    def dim_vector(self) -> Tuple[int, ...]:
        return self.module.dim_vector()


def _same_algebra(m: Representation, n: Representation) -> None:
    if m.algebra != n.algebra:
        raise MixedAlgebras("representations of different algebras")


def subrepresentation(m: Representation, bases: Mapping[str, Sequence[Sequence]]) -> SubRepresentation:
    F = m.field
    alg = m.algebra
    basis = {v: tuple(tuple(r) for r in row_space(F, bases.get(v, []), m.dims[v])) for v in alg.vertices}
    maps = {}
    for a in alg.arrows:
        rows = []
        for b in basis[a.source]:
            img = matmul(F, (b,), m.maps[a.name], m.dims[a.target])[0]
            c = coordinates(F, basis[a.target], img, m.dims[a.target])
            if c is None:
                raise InvalidRepresentation("subspaces are not closed under the arrows")
            rows.append(c)
        maps[a.name] = rows
    sub = Representation(alg, {v: len(basis[v]) for v in alg.vertices}, maps, check=False)
    return SubRepresentation(sub, basis, m)


def socle(m: Representation) -> SubRepresentation:
    """Largest subrepresentation killed by every arrow."""
    F = m.field
    alg = m.algebra
    bases = {}
    for v in alg.vertices:
        space = [tuple(F.one if i == j else F.zero for j in range(m.dims[v])) for i in range(m.dims[v])]
        for a in alg.arrows:
            if a.source == v:
                space = intersect_spaces(F, space, left_kernel(F, m.maps[a.name], m.dims[v], m.dims[a.target]), m.dims[v])
        bases[v] = space
    return subrepresentation(m, bases)


def radical(m: Representation) -> SubRepresentation:
    """Subrepresentation spanned by the images of all arrows."""
    bases = {v: [] for v in m.algebra.vertices}
    for a in m.algebra.arrows:
        bases[a.target].extend(m.maps[a.name])
    return subrepresentation(m, bases)


def direct_sum(m: Representation, n: Representation) -> Representation:
    _same_algebra(m, n)
    F = m.field
    maps = {}
    for a in m.algebra.arrows:
        mt, nt = m.dims[a.target], n.dims[a.target]
        rows = [tuple(r) + (F.zero,) * nt for r in m.maps[a.name]]
        rows += [(F.zero,) * mt + tuple(r) for r in n.maps[a.name]]
        maps[a.name] = rows
    return Representation(m.algebra, {v: m.dims[v] + n.dims[v] for v in m.algebra.vertices}, maps, check=False)


def _hom_system(m: Representation, n: Representation):
    _same_algebra(m, n)
    F = m.field
    alg = m.algebra
    offset = {}
    count = 0
    for v in alg.vertices:
        offset[v] = count
        count += m.dims[v] * n.dims[v]

    def var(v, i, j):
        return offset[v] + i * n.dims[v] + j

    rows = []
    for a in alg.arrows:
        s, t = a.source, a.target
        Ma, Na = m.maps[a.name], n.maps[a.name]
        # M_a @ Phi_t - Phi_s @ N_a = 0
        for i in range(m.dims[s]):
            for j in range(n.dims[t]):
                row = [F.zero] * count
                for k in range(m.dims[t]):
                    if Ma[i][k]:
                        row[var(t, k, j)] = row[var(t, k, j)] + Ma[i][k]
                for k in range(n.dims[s]):
                    if Na[k][j]:
                        row[var(s, i, k)] = row[var(s, i, k)] - Na[k][j]
                if any(row):
                    rows.append(row)
    return rows, count, var


def hom_space_dim(m: Representation, n: Representation) -> int:
    rows, count, _ = _hom_system(m, n)
    return count - rank(m.field, rows, count)


def hom_space_basis(m: Representation, n: Representation) -> List[Dict[str, Matrix]]:
    """Basis of intertwiners as per-vertex matrices ``Phi_v`` (``dim M_v x dim N_v``)."""
    rows, count, var = _hom_system(m, n)
    out = []
    for sol in nullspace(m.field, rows, count):
        phi = {}
        for v in m.algebra.vertices:
            phi[v] = tuple(tuple(sol[var(v, i, j)] for j in range(n.dims[v])) for i in range(m.dims[v]))
        out.append(phi)
    return out


def simple(alg: Algebra, v: str) -> Representation:
    if v not in alg.vertices:
        raise InvalidAlgebra(f"unknown vertex {v!r}")
    return Representation(alg, {v: 1})


def simples(alg: Algebra) -> List[Representation]:
    return [simple(alg, v) for v in alg.vertices]


def indecomposable_projective(alg: Algebra, v: str) -> Representation:
    """``e_v A``: at vertex ``u`` the paths from ``v`` to ``u``; arrows act by right multiplication."""
    st = alg.structure
    maps = {}
    for a in alg.arrows:
        src, tgt = st.blocks[(v, a.source)], st.blocks[(v, a.target)]
        maps[a.name] = [tgt.coords(p + (a.name,), st.L) for p in src.basis]
    return Representation(alg, {u: st.blocks[(v, u)].dim for u in alg.vertices}, maps)


def indecomposable_injective(alg: Algebra, v: str) -> Representation:
    """``D(A e_v)``: at vertex ``u`` the dual of the paths from ``u`` to ``v``.

    An arrow ``a: u -> w`` acts as the transpose of left multiplication
    ``e_w A e_v -> e_u A e_v, p -> a p``.
    """
    if v not in alg.vertices:
        raise InvalidAlgebra(f"unknown vertex {v!r}")
    st = alg.structure
    maps = {}
    for a in alg.arrows:
        at_u, at_w = st.blocks[(a.source, v)], st.blocks[(a.target, v)]
        left = [at_u.coords((a.name,) + p, st.L) for p in at_w.basis]
        maps[a.name] = [tuple(left[j][i] for j in range(at_w.dim)) for i in range(at_u.dim)]
    return Representation(alg, {u: st.blocks[(u, v)].dim for u in alg.vertices}, maps)


def is_simple_socle_at(m: Representation, v: str) -> bool:
    """True iff the socle of ``m`` is isomorphic to the simple at ``v``."""
    soc = socle(m)
    return all(soc.dims[u] == (1 if u == v else 0) for u in m.algebra.vertices)


@dataclass(frozen=True)
class VertexPoint:
    """The indecomposable injective ``E(S(v))``."""

    vertex: str

    def __str__(self):
        return f"E(S({self.vertex}))"


@dataclass
class InjectiveSpectrum:
    points: List[VertexPoint]
    injectives: Dict[str, Representation]
    topology: str = "discrete"


def injective_spectrum(alg: Algebra) -> InjectiveSpectrum:
    """One closed point per vertex, each certified by socle and separation.

    ``(S(v))`` meets the spectrum in exactly ``E(S(v))``, so every point is
    closed; a finite space of closed points is discrete.
    """
    inj = {v: indecomposable_injective(alg, v) for v in alg.vertices}
    for v in alg.vertices:
        if not is_simple_socle_at(inj[v], v):
            raise InvalidAlgebra(f"injective at {v} does not have simple socle S({v})")
        for w in alg.vertices:
            if (hom_space_dim(simple(alg, v), inj[w]) != 0) != (v == w):
                raise InvalidAlgebra(f"simple S({v}) separates {w} unexpectedly")
    return InjectiveSpectrum([VertexPoint(v) for v in alg.vertices], inj)


class FdBackend:
    """Topology-engine adapter; specialisation is read off Hom into the injectives."""

    name = "fdalg"

    def __init__(self, alg: Algebra):
        self.algebra = alg

    @cached_property
    def _injectives(self) -> Dict[str, Representation]:
        return {v: indecomposable_injective(self.algebra, v) for v in self.algebra.vertices}

    def specializes(self, a: VertexPoint, b: VertexPoint) -> bool:
        # a ~> b forces Hom(S(a), E(b)) != 0, and S(a) has simple socle
        return hom_space_dim(simple(self.algebra, a.vertex), self._injectives[b.vertex]) != 0

    def critical_dimension(self, pt: VertexPoint) -> int:
        return 0

    def in_basic_closed(self, m: Representation, pt: VertexPoint) -> bool:
        return hom_space_dim(m, self._injectives[pt.vertex]) != 0

    def label(self, pt: VertexPoint) -> str:
        return str(pt)
