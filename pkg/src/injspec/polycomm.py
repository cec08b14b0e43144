"""Sparse multivariate polynomials over the rationals and their ideals.

Polynomials live in a :class:`PolyRing` (an ordered tuple of variable names
plus a monomial order). Terms are a dict from exponent tuples to nonzero
``Fraction`` coefficients. Reduced Groebner bases are computed by Buchberger's
algorithm with the product and chain criteria.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from itertools import combinations
from typing import Callable, Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

from .errors import MixedRings, NotMonomial

Exponent = Tuple[int, ...]

NEG_INFINITY = -math.inf

ORDERS = ("degrevlex", "lex", "deglex")


def _degrevlex_key(e: Exponent):
    return (sum(e), tuple(-x for x in reversed(e)))


def _order_key(order: str) -> Callable[[Exponent], tuple]:
    if order == "degrevlex":
        return _degrevlex_key
    if order == "lex":
        return tuple
    if order == "deglex":
        return lambda e: (sum(e), e)
    if order.startswith("elim:"):
        # two blocks: the first k variables lex-dominate the degrevlex rest
        k = int(order[5:])
        return lambda e: (_degrevlex_key(e[:k]), _degrevlex_key(e[k:]))
    raise ValueError(f"unknown monomial order {order!r}")


@dataclass(frozen=True)
class PolyRing:
    variables: Tuple[str, ...]
    order: str = "degrevlex"

    def __post_init__(self):
        object.__setattr__(self, "variables", tuple(self.variables))
        if len(set(self.variables)) != len(self.variables):
            raise ValueError("duplicate variable names")
        _order_key(self.order)

    @property
    def nvars(self) -> int:
        return len(self.variables)

    @cached_property
    def key(self) -> Callable[[Exponent], tuple]:
        return _order_key(self.order)

    def with_order(self, order: str) -> "PolyRing":
        return PolyRing(self.variables, order)

    def zero(self) -> "MultiPoly":
        return MultiPoly(self, {})

    def one(self) -> "MultiPoly":
        return self.constant(1)

    def constant(self, c) -> "MultiPoly":
        return MultiPoly(self, {(0,) * self.nvars: Fraction(c)})

    def var(self, name: str) -> "MultiPoly":
        i = self.variables.index(name)
        e = [0] * self.nvars
        e[i] = 1
        return MultiPoly(self, {tuple(e): Fraction(1)})

    def gens(self) -> List["MultiPoly"]:
        return [self.var(v) for v in self.variables]

    def monomial(self, exps: Exponent, coeff=1) -> "MultiPoly":
        return MultiPoly(self, {tuple(exps): Fraction(coeff)})

    def parse(self, text: str) -> "MultiPoly":
        from .polyparse import parse_polynomial

        return parse_polynomial(text, self)

    def __str__(self):
        return f"Q[{', '.join(self.variables)}]"


def same_variables(a: PolyRing, b: PolyRing) -> None:
    if a.variables != b.variables:
        raise MixedRings(f"{a} and {b} have different variables")


class MultiPoly:
    __slots__ = ("ring", "terms", "_lead")

    def __init__(self, ring: PolyRing, terms: Mapping[Exponent, Fraction]):
        self.ring = ring
        clean = {}
        for e, c in terms.items():
            if len(e) != ring.nvars:
                raise ValueError(f"exponent {e} has wrong length for {ring}")
            if c:
                clean[tuple(e)] = c if isinstance(c, Fraction) else Fraction(c)
        self.terms = clean
        self._lead = None

    # -- structure -------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and not any(next(iter(self.terms))))

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def total_degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def support(self) -> frozenset:
        """Indices of the variables that occur."""
        return frozenset(i for e in self.terms for i, x in enumerate(e) if x)

    def lead(self) -> Tuple[Exponent, Fraction]:
        if self._lead is None:
            if not self.terms:
                raise ValueError("zero polynomial has no leading term")
            e = max(self.terms, key=self.ring.key)
            self._lead = (e, self.terms[e])
        return self._lead

    def lm(self) -> Exponent:
        return self.lead()[0]

    def lc(self) -> Fraction:
        return self.lead()[1]

    def sorted_terms(self) -> List[Tuple[Exponent, Fraction]]:
        return sorted(self.terms.items(), key=lambda t: self.ring.key(t[0]), reverse=True)

    def monic(self) -> "MultiPoly":
        if not self.terms:
            return self
        lc = self.lc()
        if lc == 1:
            return self
        return MultiPoly(self.ring, {e: c / lc for e, c in self.terms.items()})

    def in_ring(self, ring: PolyRing) -> "MultiPoly":
        """Same polynomial viewed in ``ring``, which may reorder or add variables."""
        if ring == self.ring:
            return self
        pos = {v: i for i, v in enumerate(ring.variables)}
        missing = [v for v in self.ring.variables if v not in pos]
        terms = {}
        for e, c in self.terms.items():
            if any(e[self.ring.variables.index(v)] for v in missing):
                raise MixedRings(f"{self} uses variables absent from {ring}")
            ne = [0] * ring.nvars
            for v, x in zip(self.ring.variables, e):
                if v in pos:
                    ne[pos[v]] = x
            terms[tuple(ne)] = c
        return MultiPoly(ring, terms)

    def evaluate(self, values: Mapping[str, Fraction]) -> "MultiPoly":
        """Substitute rationals for some variables; result stays in this ring."""
        idx = {self.ring.variables.index(v): Fraction(x) for v, x in values.items()}
        out: Dict[Exponent, Fraction] = {}
        for e, c in self.terms.items():
            ne = list(e)
            for i, x in idx.items():
                c = c * x ** ne[i]
                ne[i] = 0
            key = tuple(ne)
            out[key] = out.get(key, 0) + c
        return MultiPoly(self.ring, out)

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise ValueError(f"{self} is not constant")
        return next(iter(self.terms.values()), Fraction(0))

    def __call__(self, *args) -> Fraction:
        """Evaluate at a full point; univariate shorthand ``f(3)``."""
        if len(args) != self.ring.nvars:
            raise TypeError(f"expected {self.ring.nvars} arguments")
        return self.evaluate(dict(zip(self.ring.variables, args))).constant_value()

    # -- arithmetic ------------------------------------------------------

    def _coerce(self, other) -> "MultiPoly":
        if isinstance(other, MultiPoly):
            same_variables(self.ring, other.ring)
            return other if other.ring == self.ring else other.in_ring(self.ring)
        if isinstance(other, (int, Fraction)):
            return self.ring.constant(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return MultiPoly(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly(self.ring, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return MultiPoly(self.ring, {e: c * other for e, c in self.terms.items()})
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: Dict[Exponent, Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return MultiPoly(self.ring, out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative exponent")
        result = self.ring.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def mul_term(self, exps: Exponent, coeff: Fraction) -> "MultiPoly":
        return MultiPoly(
            self.ring, {tuple(a + b for a, b in zip(e, exps)): c * coeff for e, c in self.terms.items()}
        )

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.terms == ({} if other == 0 else {(0,) * self.ring.nvars: Fraction(other)})
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self.ring.variables == other.ring.variables and self.terms == other.terms

    def __hash__(self):
        return hash((self.ring.variables, frozenset(self.terms.items())))

    def __repr__(self):
        return f"MultiPoly({str(self)!r}, {self.ring})"

    def __str__(self):
        return render_polynomial(self)


def _render_coeff(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def render_polynomial(f: MultiPoly) -> str:
    """Surface syntax accepted back by the parser, e.g. ``3/2*x^2*y - z + 1``."""
    if f.is_zero():
        return "0"
    pieces = []
    for e, c in f.sorted_terms():
        factors = []
        for v, x in zip(f.ring.variables, e):
            if x == 1:
                factors.append(v)
            elif x > 1:
                factors.append(f"{v}^{x}")
        mag = abs(c)
        if not factors:
            body = _render_coeff(mag)
        elif mag == 1:
            body = "*".join(factors)
        else:
            body = "*".join([_render_coeff(mag)] + factors)
        if not pieces:
            pieces.append(("-" if c < 0 else "") + body)
        else:
            pieces.append(("- " if c < 0 else "+ ") + body)
    return " ".join(pieces)


# -- Groebner machinery ---------------------------------------------------


def _divides(a: Exponent, b: Exponent) -> bool:
    return all(x <= y for x, y in zip(a, b))


def _lcm(a: Exponent, b: Exponent) -> Exponent:
    return tuple(max(x, y) for x, y in zip(a, b))


def _common_ring(polys: Sequence[MultiPoly], ring: Optional[PolyRing]) -> Optional[PolyRing]:
    for f in polys:
        if ring is None:
            ring = f.ring
        else:
            same_variables(ring, f.ring)
    return ring


def reduce_full(f: MultiPoly, basis: Sequence[MultiPoly]) -> MultiPoly:
    """Remainder of multivariate division of ``f`` by ``basis`` (all terms reduced)."""
    ring = f.ring
    key = ring.key
    leads = [(g.lm(), g.lc(), g) for g in basis if not g.is_zero()]
    p = dict(f.terms)
    rem: Dict[Exponent, Fraction] = {}
    while p:
        e = max(p, key=key)
        c = p[e]
        for lm, lc, g in leads:
            if _divides(lm, e):
                q = tuple(x - y for x, y in zip(e, lm))
                factor = c / lc
                for ge, gc in g.terms.items():
                    te = tuple(a + b for a, b in zip(ge, q))
                    v = p.get(te, 0) - factor * gc
                    if v:
                        p[te] = v
                    else:
                        p.pop(te, None)
                break
        else:
            rem[e] = c
            del p[e]
    return MultiPoly(ring, rem)


def _spoly(f: MultiPoly, g: MultiPoly) -> MultiPoly:
    (ef, cf), (eg, cg) = f.lead(), g.lead()
    l = _lcm(ef, eg)
    a = f.mul_term(tuple(x - y for x, y in zip(l, ef)), 1 / cf)
    b = g.mul_term(tuple(x - y for x, y in zip(l, eg)), 1 / cg)
    return a - b


def _interreduce(basis: List[MultiPoly]) -> List[MultiPoly]:
    basis = [g.monic() for g in basis if not g.is_zero()]
    minimal = []
    for i, g in enumerate(basis):
        lm = g.lm()
        redundant = False
        for j, h in enumerate(basis):
            if j == i:
                continue
            hm = h.lm()
            if _divides(hm, lm) and (hm != lm or j < i):
                redundant = True
                break
        if not redundant:
            minimal.append(g)
    reduced = []
    for i, g in enumerate(minimal):
        others = minimal[:i] + minimal[i + 1:]
        lead_e, _ = g.lead()
        tail = MultiPoly(g.ring, {e: c for e, c in g.terms.items() if e != lead_e})
        r = reduce_full(tail, others)
        reduced.append((g.ring.monomial(lead_e) + r))
    reduced.sort(key=lambda g: g.ring.key(g.lm()), reverse=True)
    return reduced


def groebner(gens: Iterable[MultiPoly], ring: Optional[PolyRing] = None, strategy: str = "normal") -> List[MultiPoly]:
    """Reduced monic Groebner basis of the ideal generated by ``gens``.

    ``strategy`` is ``"normal"`` (smallest lcm first) or ``"sugar"``.
    The result is sorted by decreasing leading monomial, so equal ideals give
    identical lists.
    """
    gens = list(gens)
    ring = _common_ring(gens, ring)
    if ring is None:
        return []
    G = [f.in_ring(ring).monic() for f in gens if not f.is_zero()]
    if not G:
        return []
    if any(g.is_constant() for g in G):
        return [ring.one()]
    key = ring.key
    sugar = [g.total_degree() for g in G]
    pairs = set(combinations(range(len(G)), 2))

    def pair_key(p):
        i, j = p
        l = _lcm(G[i].lm(), G[j].lm())
        if strategy == "sugar":
            s = max(sugar[i] + sum(l) - sum(G[i].lm()), sugar[j] + sum(l) - sum(G[j].lm()))
            return (s, key(l), p)
        return (key(l), p)

    while pairs:
        i, j = min(pairs, key=pair_key)
        pairs.discard((i, j))
        li, lj = G[i].lm(), G[j].lm()
        l = _lcm(li, lj)
        # product criterion: coprime leading monomials
        if all(not (a and b) for a, b in zip(li, lj)):
            continue
        # chain criterion
        if any(
            k not in (i, j)
            and _divides(G[k].lm(), l)
            and (min(i, k), max(i, k)) not in pairs
            and (min(j, k), max(j, k)) not in pairs
            for k in range(len(G))
        ):
            continue
        s = _spoly(G[i], G[j])
        h = reduce_full(s, G)
        if h.is_zero():
            continue
        h = h.monic()
        if h.is_constant():
            return [ring.one()]
        if strategy == "sugar":
            sugar.append(max(sugar[i] + sum(l) - sum(li), sugar[j] + sum(l) - sum(lj)))
        else:
            sugar.append(h.total_degree())
        G.append(h)
        n = len(G) - 1
        pairs.update((k, n) for k in range(n))
    return _interreduce(G)


@dataclass(frozen=True, eq=False)
class PolyIdeal:
    """Ideal of a :class:`PolyRing`; the reduced basis is computed once, on demand."""

    ring: PolyRing
    generators: Tuple[MultiPoly, ...] = field(default=())

    def __post_init__(self):
        for g in self.generators:
            same_variables(self.ring, g.ring)
        object.__setattr__(self, "generators", tuple(g.in_ring(self.ring) for g in self.generators))

    @classmethod
    def of(cls, ring: PolyRing, *gens) -> "PolyIdeal":
        """Convenience constructor accepting polynomials or surface-syntax strings."""
        polys = [ring.parse(g) if isinstance(g, str) else g for g in gens]
        return cls(ring, tuple(polys))

    @cached_property
    def gb(self) -> Tuple[MultiPoly, ...]:
        return tuple(groebner(self.generators, self.ring))

    def is_unit(self) -> bool:
        return len(self.gb) == 1 and self.gb[0].is_constant()

    def is_zero(self) -> bool:
        return not self.gb

    def is_monomial(self) -> bool:
        return all(g.is_monomial() for g in self.generators if not g.is_zero())

    def __contains__(self, f: MultiPoly) -> bool:
        return normal_form(f, self).is_zero()

    def __eq__(self, other):
        if not isinstance(other, PolyIdeal):
            return NotImplemented
        if self.ring.variables != other.ring.variables:
            return False
        if self.ring.order == other.ring.order:
            return self.gb == other.gb
        return ideal_contains(self, other) and ideal_contains(other, self)

    def __hash__(self):
        canonical = self if self.ring.order == "degrevlex" else PolyIdeal(self.ring.with_order("degrevlex"), self.generators)
        return hash((self.ring.variables, canonical.gb))

    def __str__(self):
        if self.is_zero():
            return "(0)"
        return "(" + ", ".join(str(g) for g in self.gb) + ")"

    def __repr__(self):
        return f"PolyIdeal{str(self)}"


def _check_same(I: PolyIdeal, J: PolyIdeal) -> None:
    same_variables(I.ring, J.ring)


def normal_form(f: MultiPoly, I: PolyIdeal) -> MultiPoly:
    same_variables(f.ring, I.ring)
    return reduce_full(f.in_ring(I.ring), I.gb)


def ideal_contains(I: PolyIdeal, J: PolyIdeal) -> bool:
    """True iff ``J`` is contained in ``I``."""
    _check_same(I, J)
    return all(normal_form(g, I).is_zero() for g in J.generators)


def ideal_sum(I: PolyIdeal, J: PolyIdeal) -> PolyIdeal:
    _check_same(I, J)
    return PolyIdeal(I.ring, I.generators + J.generators)


def ideal_intersect(I: PolyIdeal, J: PolyIdeal) -> PolyIdeal:
    """``I`` meet ``J`` by eliminating ``t`` from ``t*I + (1-t)*J``."""
    _check_same(I, J)
    ring = I.ring
    if I.is_zero() or J.is_zero():
        return PolyIdeal(ring, ())
    t = "_t"
    while t in ring.variables:
        t += "_"
    big = PolyRing((t,) + ring.variables, "elim:1")
    tv = big.var(t)
    gens = [tv * g.in_ring(big) for g in I.generators]
    gens += [(1 - tv) * g.in_ring(big) for g in J.generators]
    kept = [g for g in groebner(gens, big) if g.lm()[0] == 0]
    return PolyIdeal(ring, tuple(g.in_ring(ring) for g in kept))


def leading_monomials(I: PolyIdeal) -> List[Exponent]:
    return [g.lm() for g in I.gb]


def ideal_dim(I: PolyIdeal):
    """Krull dimension of ``R/I``; ``NEG_INFINITY`` for the unit ideal.

    Largest set of variables containing no leading monomial of the reduced
    basis in their subring.
    """
    if I.is_unit():
        return NEG_INFINITY
    n = I.ring.nvars
    supports = [frozenset(i for i, x in enumerate(e) if x) for e in leading_monomials(I)]
    for size in range(n, -1, -1):
        for subset in combinations(range(n), size):
            s = frozenset(subset)
            if not any(sup <= s for sup in supports):
                return size
    return 0


def _minimal_transversals(edges: List[frozenset], n: int) -> List[frozenset]:
    found: List[frozenset] = []
    for size in range(n + 1):
        for subset in combinations(range(n), size):
            s = frozenset(subset)
            if any(f <= s for f in found):
                continue
            if all(e & s for e in edges):
                found.append(s)
    return found


def variable_prime(ring: PolyRing, indices: Iterable[int]) -> PolyIdeal:
    return PolyIdeal(ring, tuple(ring.var(ring.variables[i]) for i in sorted(indices)))


def minimal_primes_monomial(I: PolyIdeal) -> List[PolyIdeal]:
    """Minimal primes of a monomial ideal: minimal variable sets meeting every generator."""
    gens = [g for g in I.generators if not g.is_zero()]
    for g in gens:
        if not g.is_monomial():
            raise NotMonomial(f"{g} is not a monomial")
    if any(g.is_constant() for g in gens):
        return []
    edges = [g.support() for g in gens]
    return [variable_prime(I.ring, s) for s in _minimal_transversals(edges, I.ring.nvars)]


def monomial_radical(I: PolyIdeal) -> PolyIdeal:
    """Radical of a monomial ideal: each generator replaced by its squarefree part."""
    out = []
    for g in I.generators:
        if g.is_zero():
            continue
        if not g.is_monomial():
            raise NotMonomial(f"{g} is not a monomial")
        e = g.lm()
        out.append(I.ring.monomial(tuple(1 if x else 0 for x in e)))
    return PolyIdeal(I.ring, tuple(out))


def is_variable_prime(I: PolyIdeal) -> bool:
    """True when the reduced basis consists of distinct variables (or is empty)."""
    return all(g.is_monomial() and sum(g.lm()) == 1 for g in I.gb)


def is_linear_prime(I: PolyIdeal) -> bool:
    """Proper ideals generated by polynomials of degree at most one are prime."""
    return not I.is_unit() and all(g.total_degree() <= 1 for g in I.gb)
