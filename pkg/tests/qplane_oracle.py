"""Brute-force Hom test for the quantum plane via truncated weight modules.

A nonzero map from ``M^(n)`` to ``E(k_mu)`` has a proper quotient
``M^(n)/M^(m)`` as image, and that quotient's socle must be ``k_mu``. The
socle is computed with sympy from explicit matrices for ``x`` and ``y``.
"""

from functools import lru_cache

import sympy


def truncation_matrices(lam, q, n, m):
    size = m - n
    lam, q = sympy.Rational(lam), sympy.Rational(q)
    x = sympy.diag(*[lam * q ** (-(n + i)) for i in range(size)])
    y = sympy.zeros(size, size)
    for i in range(size - 1):
        y[i, i + 1] = 1
    return x, y


def socle_weights(x, y):
    """x-eigenvalues on the socle (row vectors killed by y), or None if not a weight socle."""
    weights = []
    for v in y.T.nullspace():
        row = v.T
        image = row * x
        k = next(i for i in range(row.cols) if row[i] != 0)
        mu = image[k] / row[k]
        if image != mu * row:
            return None
        weights.append(mu)
    return weights


@lru_cache(maxsize=None)
def socle_table(lam, q, n, horizon):
    """Socle weights of ``M^(n)/M^(m)`` for ``n < m <= horizon``."""
    out = []
    for m in range(n + 1, horizon + 1):
        x, y = truncation_matrices(lam, q, n, m)
        assert x * y == sympy.Rational(q) * y * x
        out.append(socle_weights(x, y))
    return tuple(tuple(w) if w is not None else None for w in out)


def hom_nonzero(lam, q, n, mu, horizon=12):
    mu = sympy.Rational(mu)
    return any(w == (mu,) for w in socle_table(str(lam), str(q), n, horizon))
