"""Exact dense linear algebra over Q (``Fraction``) or a prime field.

Matrices are tuples of row tuples. Vectors are rows; a matrix acts on the
right, ``v -> v @ M``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Sequence, Tuple

Matrix = Tuple[Tuple[object, ...], ...]


class Fp:
    """Element of the prime field with ``p`` elements."""

    __slots__ = ("v", "p")

    def __init__(self, v, p: int):
        if isinstance(v, Fraction):
            v = v.numerator * pow(v.denominator, -1, p)
        self.v = int(v) % p
        self.p = p

    def _lift(self, other):
        if isinstance(other, Fp):
            if other.p != self.p:
                raise ValueError("elements of different prime fields")
            return other.v
        if isinstance(other, (int, Fraction)):
            return Fp(other, self.p).v
        return None

    def __add__(self, other):
        o = self._lift(other)
        return NotImplemented if o is None else Fp(self.v + o, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._lift(other)
        return NotImplemented if o is None else Fp(self.v - o, self.p)

    def __rsub__(self, other):
        o = self._lift(other)
        return NotImplemented if o is None else Fp(o - self.v, self.p)

    def __mul__(self, other):
        o = self._lift(other)
        return NotImplemented if o is None else Fp(self.v * o, self.p)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        if o == 0:
            raise ZeroDivisionError("division by zero in F_p")
        return Fp(self.v * pow(o, -1, self.p), self.p)

    def __rtruediv__(self, other):
        return Fp(other, self.p) / self

    def __neg__(self):
        return Fp(-self.v, self.p)

    def __eq__(self, other):
        o = self._lift(other)
        return NotImplemented if o is None else self.v == o

    def __hash__(self):
        return hash((self.v, self.p))

    def __bool__(self):
        return self.v != 0

    def __repr__(self):
        return f"{self.v} (mod {self.p})"

    def __str__(self):
        return str(self.v)


@dataclass(frozen=True)
class Field:
    """``characteristic == 0`` means the rationals."""

    characteristic: int = 0

    @classmethod
    def parse(cls, tag: str) -> "Field":
        t = tag.strip().upper().replace("_", "")
        if t in ("Q", "QQ"):
            return cls(0)
        for prefix in ("GF(", "F"):
            if t.startswith(prefix):
                p = int(t[len(prefix):].rstrip(")"))
                if p < 2 or any(p % d == 0 for d in range(2, int(p ** 0.5) + 1)):
                    raise ValueError(f"{p} is not prime")
                return cls(p)
        raise ValueError(f"unknown field {tag!r}")

    def __call__(self, x):
        if self.characteristic == 0:
            return Fraction(x)
        return Fp(x, self.characteristic)

    @property
    def zero(self):
        return self(0)

    @property
    def one(self):
        return self(1)

    def elements(self):
        if self.characteristic == 0:
            raise ValueError("Q is infinite")
        return [self(i) for i in range(self.characteristic)]

    def __str__(self):
        return "Q" if self.characteristic == 0 else f"F{self.characteristic}"


def zeros(field: Field, rows: int, cols: int) -> Matrix:
    z = field.zero
    return tuple(tuple(z for _ in range(cols)) for _ in range(rows))


def identity(field: Field, n: int) -> Matrix:
    return tuple(tuple(field.one if i == j else field.zero for j in range(n)) for i in range(n))


def matmul(field: Field, a: Matrix, b: Matrix, inner_cols: int) -> Matrix:
    """``a @ b``; ``inner_cols`` is the column count of ``b`` (needed when ``b`` has no rows)."""
    n = len(b)
    z = field.zero
    out = []
    for row in a:
        new = [z] * inner_cols
        for k in range(n):
            x = row[k]
            if x:
                brow = b[k]
                for j in range(inner_cols):
                    if brow[j]:
                        new[j] = new[j] + x * brow[j]
        out.append(tuple(new))
    return tuple(out)


def rref(field: Field, rows: Sequence[Sequence], ncols: int) -> Tuple[List[List], List[int]]:
    """Reduced row echelon form; returns (nonzero rows, pivot columns)."""
    m = [list(r) for r in rows]
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][c]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = field.one / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def rank(field: Field, rows: Sequence[Sequence], ncols: int) -> int:
    return len(rref(field, rows, ncols)[1])


def nullspace(field: Field, rows: Sequence[Sequence], ncols: int) -> List[Tuple]:
    """Basis of ``{x : A x = 0}`` for ``A`` given by ``rows``."""
    red, pivots = rref(field, rows, ncols)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        x = [field.zero] * ncols
        x[f] = field.one
        for row, p in zip(red, pivots):
            x[p] = -row[f]
        basis.append(tuple(x))
    return basis


def left_kernel(field: Field, m: Matrix, nrows: int, ncols: int) -> List[Tuple]:
    """Basis of ``{v : v @ m = 0}``."""
    transpose = [[m[i][j] for i in range(nrows)] for j in range(ncols)]
    return nullspace(field, transpose, nrows)


def row_space(field: Field, rows: Sequence[Sequence], ncols: int) -> List[Tuple]:
    return [tuple(r) for r in rref(field, rows, ncols)[0]]


def intersect_spaces(field: Field, a: Sequence[Sequence], b: Sequence[Sequence], n: int) -> List[Tuple]:
    """Intersection of two row spaces inside ``field^n``."""
    if not a or not b:
        return []
    # x @ A = y @ B  <=>  (x, -y) in the left kernel of [A; B]
    stacked = [tuple(r) for r in a] + [tuple(r) for r in b]
    combos = left_kernel(field, tuple(stacked), len(stacked), n)
    vecs = []
    for c in combos:
        v = [field.zero] * n
        for coeff, row in zip(c[: len(a)], a):
            if coeff:
                v = [x + coeff * y for x, y in zip(v, row)]
        vecs.append(v)
    return row_space(field, vecs, n)


def coordinates(field: Field, basis: Sequence[Sequence], v: Sequence, n: int):
    """Coefficients expressing ``v`` in the independent rows ``basis``; None if outside."""
    k = len(basis)
    if k == 0:
        return () if not any(v) else None
    cols = [[basis[i][j] for i in range(k)] + [v[j]] for j in range(n)]
    red, pivots = rref(field, cols, k + 1)
    if k in pivots:
        return None
    sol = [field.zero] * k
    for row, p in zip(red, pivots):
        sol[p] = row[k]
    return tuple(sol)


class QuotientSpace:
    """``field^n / U`` with coordinates on the non-pivot columns of ``rref(U)``."""

    def __init__(self, field: Field, sub_rows: Sequence[Sequence], n: int):
        self.field = field
        self.n = n
        self.red, self.pivots = rref(field, sub_rows, n)
        self.free = [c for c in range(n) if c not in self.pivots]

    @property
    def dim(self) -> int:
        return len(self.free)

    def reduce(self, v: Sequence) -> List:
        v = list(v)
        for row, p in zip(self.red, self.pivots):
            if v[p]:
                f = v[p]
                v = [x - f * y for x, y in zip(v, row)]
        return v

    def coords(self, v: Sequence) -> Tuple:
        r = self.reduce(v)
        return tuple(r[c] for c in self.free)

    def contains(self, v: Sequence) -> bool:
        return not any(self.reduce(v))
