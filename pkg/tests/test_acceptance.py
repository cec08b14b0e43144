"""Acceptance criteria, one test each, with wall-clock limits.

Each test records a PASS/FAIL line; they are printed in the terminal summary
(see conftest.py) and also when this file is run as a script.
"""

import itertools
import random
import subprocess
import sys
import time
from fractions import Fraction

from conftest import seed_value
from deviation_oracle import oracle_rev, to_ordinal
from polyhelpers import random_ideal_gens, random_monomial, random_poly
from qplane_oracle import hom_nonzero

from injspec.commspec import CommBackend, CommRing, in_basic_closed
from injspec.deviation import DenseInterval, FinitePoset, MinusOne, OrdinalChain, ReversedOrdinalChain, Undefined, Value, deviation
from injspec.fdalg import Algebra, FdBackend, injective_spectrum, is_simple_socle_at, socle
from injspec.ncspec import heis
from injspec.ncspec.qplane import QGeneric, QSimple, QuantumPlane, WeightHull
from injspec.ordinal import Ordinal
from injspec.polycomm import PolyIdeal, PolyRing, groebner, ideal_contains, ideal_intersect, minimal_primes_monomial, normal_form
from injspec.topology import check_cd_monotone, check_t0, closed_points_in, generic_in, longest_chain, specialization_dag

RESULTS = []


def record(number, title, limit, body):
    """Run ``body`` under a time limit and store a one-line verdict."""
    start = time.perf_counter()
    error = None
    try:
        body()
    except AssertionError as exc:
        error = exc
    elapsed = time.perf_counter() - start
    ok = error is None and elapsed < limit
    note = "" if error is None else f" ({error})" if str(error) else " (assertion failed)"
    if error is None and not ok:
        note = f" (over the {limit:g}s limit)"
    line = f"[{'PASS' if ok else 'FAIL'}] {number:>2}. {title}: {elapsed:.3f}s{note}"
    RESULTS.append(line)
    print(line)
    if error is not None:
        raise error
    assert ok, line


# 1 ---------------------------------------------------------------------------


def test_01_matlis_zariski_agreement():
    def body():
        R = CommRing.polynomial("x", "y")
        subsets = [(), ("x",), ("y",), ("x", "y")]
        pts = {s: R.point(*s) for s in subsets}
        dag = specialization_dag(CommBackend(R), list(pts.values()))
        # oracle: variable-subset primes are ordered by inclusion of the subsets
        expected = {(pts[a], pts[b]) for a in subsets for b in subsets if a != b and set(a) <= set(b)}
        assert set(dag.edges) == expected
        assert generic_in(dag) == pts[()]
        assert check_t0(dag)[0]
        assert longest_chain(dag) == 3 == 2 + 1

    record(1, "Matlis/Zariski agreement on Q[x,y]", 1.0, body)


# 2 ---------------------------------------------------------------------------


def test_02_semisimple_examples():
    def body():
        one = Algebra.build(["1"])
        two = Algebra.build(["1", "2"])
        for alg, n in ((one, 1), (two, 2)):
            spec = injective_spectrum(alg)
            assert len(spec.points) == n and spec.topology == "discrete"
            dag = specialization_dag(FdBackend(alg), spec.points)
            assert dag.edges == [] and closed_points_in(dag) == spec.points

    record(2, "one- and two-point discrete spectra", 1.0, body)


# 3 ---------------------------------------------------------------------------

ALGEBRAS = {
    "A2": (["1", "2"], [("a", "1", "2")], []),
    "A3, ab=0": (["1", "2", "3"], [("a", "1", "2"), ("b", "2", "3")], ["a*b"]),
    "Kronecker": (["1", "2"], [("a", "1", "2"), ("b", "1", "2")], []),
    "k[a]/a^2": (["1"], [("a", "1", "1")], ["a*a"]),
    "loop+line": (["1", "2", "3"], [("a", "1", "1"), ("b", "1", "2"), ("c", "2", "3")], ["a*a", "b*c"]),
}


def test_03_artinian_discreteness():
    def body():
        for name, (vs, arrows, rels) in ALGEBRAS.items():
            alg = Algebra.build(vs, arrows, rels)
            assert len(vs) <= 3 and len(arrows) <= 3
            spec = injective_spectrum(alg)
            assert len(spec.points) == len(vs), name
            dag = specialization_dag(FdBackend(alg), spec.points)
            assert dag.edges == [], name
            for v in vs:
                inj = spec.injectives[v]
                assert is_simple_socle_at(inj, v), name
                assert socle(inj).module.dim_vector() == tuple(int(u == v) for u in vs), name

    record(3, "artinian algebras have finite discrete spectra", 5.0, body)


# 4 ---------------------------------------------------------------------------


def test_04_deviation_table():
    def body():
        assert isinstance(deviation(FinitePoset(("a", "b", "c"))), MinusOne)
        assert deviation(FinitePoset(("a", "b", "c"), (("a", "b"), ("b", "c")))) == Value(0)
        assert deviation(OrdinalChain(Ordinal.omega_power(3))) == Value(0)
        assert deviation(OrdinalChain(Ordinal.omega_power(Ordinal.omega_power(1)))) == Value(0)
        for k in (1, 2, 3):
            assert deviation(ReversedOrdinalChain(Ordinal.omega_power(k))) == Value(k)
        assert isinstance(deviation(DenseInterval()), Undefined)
        for beta in ({0: 1}, {0: 5}, {1: 1}, {1: 2, 0: 1}, {2: 1}, {2: 3, 1: 1}, {3: 1}, {4: 2}):
            got = deviation(ReversedOrdinalChain(to_ordinal(beta)))
            assert (-1 if isinstance(got, MinusOne) else int(got.alpha)) == oracle_rev(beta), beta

    record(4, "deviation table and definition oracle", 1.0, body)


# 5 ---------------------------------------------------------------------------


def test_05_quantum_plane_chain():
    def body():
        qp = QuantumPlane(2)
        chain = qp.descending_chain_witness(1, 50)
        assert len(chain) == 50
        hull = WeightHull(Fraction(1))
        for n, (_, w) in enumerate(chain):
            assert w == QSimple(Fraction(1, 2 ** n))
            assert qp.in_basic_closed(1, n, w) and not qp.in_basic_closed(1, n + 1, w)
            assert qp.in_basic_closed(1, n, hull)

    record(5, "strictly descending chain of 50 basic closed sets", 1.0, body)


# 6 ---------------------------------------------------------------------------


def _off_orbit(lam, mu):
    """lam/mu is a power of 2 (possibly negative exponent) exactly when on-orbit for q = 2."""
    r = lam / mu
    if r <= 0:
        return True
    n, d = r.numerator, r.denominator
    return not (n & (n - 1) == 0 and d & (d - 1) == 0)


def test_06_quantum_plane_oracle():
    def body():
        q, lam = 2, Fraction(1)
        qp = QuantumPlane(q)
        rng = random.Random(seed_value())
        # the truncation oracle sees weights lam q^-j only for j < 12
        on_orbit = [lam / Fraction(q) ** j for j in range(-3, 12)]
        off_orbit = []
        while len(off_orbit) < 20:
            mu = Fraction(rng.randint(-40, 40), rng.randint(1, 40))
            if mu and _off_orbit(lam, mu) and mu not in off_orbit:
                off_orbit.append(mu)
        for n in range(7):
            for mu in on_orbit + off_orbit:
                assert qp.hom_to_simple_hull(lam, n, mu) == hom_nonzero(lam, q, n, mu, horizon=12), (n, mu)

    record(6, "q-plane Hom agrees with truncation brute force", 10.0, body)


# 7 ---------------------------------------------------------------------------


def test_07_closed_point_of_cd_one():
    def body():
        qp = QuantumPlane(2)
        hull = qp.weight_hull(1)
        simples = [QSimple(Fraction(1, 2 ** j)) for j in range(11)]
        dag = specialization_dag(qp, [QGeneric(), hull] + simples)
        assert hull in closed_points_in(dag)
        assert not any(qp.specializes(hull, s) for s in simples)
        assert check_cd_monotone(qp, dag)[0]
        assert qp.critical_dimension(hull) == 1

    record(7, "weight hull is a closed point of critical dimension 1", 1.0, body)


# 8 ---------------------------------------------------------------------------


def test_08_heisenberg_closure():
    def body():
        line = heis.fiber0("p - 1")
        sample = [heis.FiberClosed(a, heis.PFamily(a * a + d)) for a in (1, 2, 3) for d in (1, 2)] + [line]
        kept = heis.closure_gl("z^2 + 1", "1", sample)
        expected = [heis.FiberClosed(a, heis.PFamily(a * a + 1)) for a in (1, 2, 3)] + [line]
        assert kept == expected
        fiber0_sample = [heis.fiber0(), heis.fiber0("p"), heis.fiber0("p - 1"), heis.fiber0("p", "q"), heis.fiber0("q")]
        assert heis.closure_gl("1", "z", fiber0_sample) == []

    record(8, "Heisenberg closure of E_{z^2+1} and of E_{1/z}", 1.0, body)


# 9 ---------------------------------------------------------------------------


def test_09_union_law():
    def body():
        rng = random.Random(seed_value())
        for _ in range(20):
            nv = rng.randint(1, 3)
            C = CommRing.polynomial(*("x", "y", "z")[:nv])
            ring = C.poly_ring
            I = PolyIdeal(ring, tuple(random_monomial(ring, rng) for _ in range(rng.randint(1, 3))))
            J = PolyIdeal(ring, tuple(random_monomial(ring, rng) for _ in range(rng.randint(1, 3))))
            K = ideal_intersect(I, J)
            # support over all monomial primes
            for size in range(nv + 1):
                for vs in itertools.combinations(C.variables, size):
                    p = C.point(*vs)
                    in_k = in_basic_closed(C.module(*K.generators), p)
                    assert in_k == (in_basic_closed(C.module(*I.generators), p) or in_basic_closed(C.module(*J.generators), p))
            union = set(minimal_primes_monomial(I)) | set(minimal_primes_monomial(J))
            minimal = {p for p in union if not any(q != p and ideal_contains(p, q) for q in union)}
            assert set(minimal_primes_monomial(K)) == minimal

    record(9, "support of an intersection is the union", 5.0, body)


# 10 --------------------------------------------------------------------------


def test_10_groebner_soundness():
    def body():
        rng = random.Random(seed_value())
        for _ in range(50):
            nv = rng.randint(1, 3)
            ring = PolyRing(("x", "y", "z")[:nv])
            gens = random_ideal_gens(ring, rng, max_gens=3, max_deg=3, max_terms=4)
            base = groebner(gens, ring)
            for perm in itertools.permutations(gens):
                assert groebner(list(perm), ring) == base
            I = PolyIdeal(ring, tuple(gens))
            for g in gens + base:
                assert normal_form(g, I).is_zero()
            for _ in range(3):
                f = random_poly(ring, rng)
                nf = normal_form(f, I)
                assert normal_form(nf, I) == nf
                assert normal_form(f - nf, I).is_zero()
                assert (f * gens[0]) in I
                # no term of a normal form is divisible by a leading monomial
                for e in nf.terms:
                    assert not any(all(a <= b for a, b in zip(g.lm(), e)) for g in base)

    record(10, "reduced Groebner bases are unique and normal forms sound", 30.0, body)


if __name__ == "__main__":
    sys.exit(subprocess.call([sys.executable, "-m", "pytest", __file__, "-q", "-p", "no:cacheprovider"]))
