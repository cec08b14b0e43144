"""The quantum plane ``A_q = k<x, y | xy = q yx>`` over Q.

Three families of indecomposable injectives are modelled:

* ``QGeneric`` -- ``E(A_q)``;
* ``WeightHull(lam)`` -- ``E(M_lam)``, where ``M_lam`` has basis ``v_0, v_1, ...``
  with ``v_i x = q^-i lam v_i`` and ``v_i y = v_(i+1)``;
* ``QSimple(mu)`` -- ``E(k_mu)``, with ``x`` acting by ``mu`` and ``y`` by zero.

Since ``M_lam^(n) = v_n A_q`` is isomorphic to ``M_(lam q^-n)``, weight hulls
are normalised inside their ``q``-orbit: with ``p`` the least prime dividing
``q``'s numerator or denominator, the representative has ``p``-adic valuation
in ``[0, |v_p(q)|)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Tuple, Union

from ..errors import BadParameter, BadRange, EliminationFailure
from ..linalg import Field, left_kernel, matmul

QQ = Field(0)


@dataclass(frozen=True)
class QGeneric:
    def __str__(self):
        return "E(A_q)"


@dataclass(frozen=True)
class WeightHull:
    lam: Fraction

    def __str__(self):
        return f"E(M_{self.lam})"


@dataclass(frozen=True)
class QSimple:
    mu: Fraction

    def __str__(self):
        return f"E(k_{self.mu})"


QPlanePoint = Union[QGeneric, WeightHull, QSimple]


def _least_prime(n: int) -> Optional[int]:
    n = abs(n)
    d = 2
    while d * d <= n:
        if n % d == 0:
            return d
        d += 1
    return n if n > 1 else None


def valuation(x: Fraction, p: int) -> int:
    if x == 0:
        raise ValueError("valuation of zero")
    v = 0
    num, den = x.numerator, x.denominator
    while num % p == 0:
        num //= p
        v += 1
    while den % p == 0:
        den //= p
        v -= 1
    return v


@dataclass(frozen=True)
class Truncation:
    """``M_lam^(n) / M_lam^(N)`` in the basis ``v_n .. v_(N-1)``."""

    lam: Fraction
    n: int
    N: int
    x: Tuple[Tuple[Fraction, ...], ...]
    y: Tuple[Tuple[Fraction, ...], ...]

    @property
    def size(self) -> int:
        return self.N - self.n

    def eigenvalue(self, i: int) -> Fraction:
        return self.x[i - self.n][i - self.n]


class QuantumPlane:
    """Decision procedures for a fixed rational ``q`` with ``q`` not in ``{0, 1, -1}``."""

    name = "qplane"

    def __init__(self, q):
        q = Fraction(q)
        if q in (0, 1, -1):
            raise BadParameter(f"q = {q} is zero or a root of unity")
        self.q = q
        self.prime = _least_prime(q.numerator) or _least_prime(q.denominator)
        self.step = valuation(q, self.prime)

    # -- orbits ----------------------------------------------------------

    def orbit_exponent(self, ratio: Fraction) -> Optional[int]:
        """The integer ``k`` with ``ratio == q^k``, or None."""
        ratio = Fraction(ratio)
        if ratio == 0:
            return None
        v = valuation(ratio, self.prime)
        if v % self.step:
            return None
        k = v // self.step
        return k if self.q ** k == ratio else None

    def canonical_weight(self, lam) -> Fraction:
        lam = Fraction(lam)
        if lam == 0:
            raise BadParameter("weight modules need a nonzero weight")
        s = abs(self.step)
        k = valuation(lam, self.prime) // s
        base = self.q if self.step > 0 else 1 / self.q
        return lam / base ** k

    def weight_hull(self, lam) -> WeightHull:
        return WeightHull(self.canonical_weight(lam))

    def simple(self, mu) -> QSimple:
        return QSimple(Fraction(mu))

    generic = QGeneric()

    # -- modules ---------------------------------------------------------

    def weight_truncation(self, lam, n: int, N: int) -> Truncation:
        lam = Fraction(lam)
        if N <= n or n < 0:
            raise BadRange(f"need 0 <= n < N, got n={n}, N={N}")
        size = N - n
        x = tuple(
            tuple(lam / self.q ** (n + i) if i == j else Fraction(0) for j in range(size)) for i in range(size)
        )
        y = tuple(tuple(Fraction(1 if j == i + 1 else 0) for j in range(size)) for i in range(size))
        return Truncation(lam, n, N, x, y)

    def relation_residual(self, t: Truncation):
        """``x y - q y x`` on the truncation; zero for every valid module."""
        s = t.size
        xy = matmul(QQ, t.x, t.y, s)
        yx = matmul(QQ, t.y, t.x, s)
        return tuple(tuple(a - self.q * b for a, b in zip(r1, r2)) for r1, r2 in zip(xy, yx))

    def truncation_socle(self, t: Truncation) -> List[Tuple[Tuple, Optional[Fraction]]]:
        """Socle basis of the truncation (kernel of ``y``), each with its ``x``-eigenvalue if any."""
        s = t.size
        out = []
        for v in left_kernel(QQ, t.y, s, s):
            vx = matmul(QQ, (v,), t.x, s)[0]
            i = next(i for i, c in enumerate(v) if c)
            mu = vx[i] / v[i]
            out.append((v, mu if all(a == mu * b for a, b in zip(vx, v)) else None))
        return out

    def cyclic_submodule_start(self, lam, N: int, vec) -> int:
        """Index ``j`` with ``vec * A_q = span{v_j, ..., v_(N-1)}`` inside ``M_lam / M_lam^(N)``.

        Applies ``x - q^-m lam`` for each other index ``m`` in the support to
        isolate the lowest basis vector, then ``y`` sweeps out the rest.
        """
        lam = Fraction(lam)
        t = self.weight_truncation(lam, 0, N)
        v = [Fraction(c) for c in vec]
        support = [i for i, c in enumerate(v) if c]
        if not support:
            raise EliminationFailure("the zero vector generates the zero submodule")
        j = support[0]
        for m in support[1:]:
            shift = t.eigenvalue(m)
            v = [c * (t.eigenvalue(i) - shift) for i, c in enumerate(v)]
        if [i for i, c in enumerate(v) if c] != [j]:
            raise EliminationFailure(f"elimination did not isolate v_{j}; eigenvalues collide")
        return j

    def verify_uniserial_truncation(self, lam, N: int, samples=None) -> List[int]:
        """Certify ``M_lam / M_lam^(N)`` is uniserial; return the submodule dimension chain.

        Pairwise distinct eigenvalues make the elimination valid for every
        vector; it is also run on ``samples`` (default: all 0/1 vectors for
        ``N <= 8``, else the unit and all-ones vectors).
        """
        lam = Fraction(lam)
        if lam == 0:
            raise EliminationFailure("weight zero: all eigenvalues coincide")
        t = self.weight_truncation(lam, 0, N)
        eig = [t.eigenvalue(i) for i in range(N)]
        if len(set(eig)) != N:
            raise EliminationFailure("eigenvalues q^-i lam are not pairwise distinct")
        if samples is None:
            if N <= 8:
                samples = [[(b >> i) & 1 for i in range(N)] for b in range(1, 2 ** N)]
            else:
                samples = [[int(i == k) for i in range(N)] for k in range(N)] + [[1] * N]
        for vec in samples:
            self.cyclic_submodule_start(lam, N, vec)
        return list(range(N + 1))

    # -- topology --------------------------------------------------------

    def hom_to_simple_hull(self, lam, n: int, mu) -> bool:
        """``Hom(M_lam^(n), E(k_mu)) != 0`` iff ``mu = lam q^-j`` for some ``j >= n``."""
        lam, mu = Fraction(lam), Fraction(mu)
        if mu == 0 or lam == 0:
            return False
        k = self.orbit_exponent(lam / mu)
        return k is not None and k >= n

    def in_basic_closed(self, lam, n: int, pt: QPlanePoint) -> bool:
        """Membership of ``pt`` in the basic closed set ``(M_lam^(n))``."""
        if isinstance(pt, QSimple):
            return self.hom_to_simple_hull(lam, n, pt.mu)
        if isinstance(pt, WeightHull):
            return self.canonical_weight(lam) == self.canonical_weight(pt.lam)
        # the torsionfree hull E(A_q) receives no map from a 1-critical module
        return False

    def specializes(self, a: QPlanePoint, b: QPlanePoint) -> bool:
        if isinstance(a, QGeneric):
            return True
        if isinstance(a, WeightHull) and isinstance(b, WeightHull):
            return self.canonical_weight(a.lam) == self.canonical_weight(b.lam)
        return a == b

    def critical_dimension(self, pt: QPlanePoint) -> int:
        if isinstance(pt, QSimple):
            return 0
        if isinstance(pt, WeightHull):
            return 1
        return 2

    def descending_chain_witness(self, lam, N: int) -> List[Tuple[str, QSimple]]:
        """Witnesses that ``(M_lam^(0)) > (M_lam^(1)) > ...`` is strictly decreasing.

        Entry ``n`` is the descriptor of ``(M_lam^(n))`` and ``E(k_(lam q^-n))``,
        which lies in it but not in ``(M_lam^(n+1))``. ``E(M_lam)`` is
        checked to lie in every level.
        """
        lam = Fraction(lam)
        hull = self.weight_hull(lam)
        out = []
        for n in range(N):
            mu = lam / self.q ** n
            w = QSimple(mu)
            if not self.in_basic_closed(lam, n, w) or self.in_basic_closed(lam, n + 1, w):
                raise EliminationFailure(f"step {n} of the chain is not strict")
            if not self.in_basic_closed(lam, n, hull):
                raise EliminationFailure(f"{hull} missing from level {n}")
            out.append((f"(M_{lam}^({n}))", w))
        return out

    def label(self, pt: QPlanePoint) -> str:
        return str(pt)
