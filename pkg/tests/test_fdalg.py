import itertools
import random

import pytest
from hypothesis import given, settings, strategies as st

from injspec.errors import InvalidAlgebra, InvalidRepresentation, MixedAlgebras
from injspec.fdalg import (
    Algebra,
    FdBackend,
    Representation,
    VertexPoint,
    direct_sum,
    hom_space_basis,
    hom_space_dim,
    indecomposable_injective,
    indecomposable_projective,
    injective_spectrum,
    is_simple_socle_at,
    radical,
    simple,
    simples,
    socle,
)


def A2(field="Q"):
    return Algebra.build(["1", "2"], [("a", "1", "2")], field=field)


def A3_zero(field="Q"):
    return Algebra.build(["1", "2", "3"], [("a", "1", "2"), ("b", "2", "3")], ["a*b"], field)


def kronecker(field="Q"):
    return Algebra.build(["1", "2"], [("a", "1", "2"), ("b", "1", "2")], field=field)


def dual_numbers(field="Q"):
    return Algebra.build(["1"], [("a", "1", "1")], ["a*a"], field)


def loop_and_line(field="Q"):
    return Algebra.build(
        ["1", "2", "3"], [("a", "1", "1"), ("b", "1", "2"), ("c", "2", "3")], ["a*a", "b*c"], field
    )


def two_cycle(field="Q"):
    return Algebra.build(["1", "2"], [("a", "1", "2"), ("b", "2", "1")], ["a*b", "b*a"], field)


ALGEBRAS = [A2, A3_zero, kronecker, dual_numbers, loop_and_line, two_cycle]
# dimension = number of paths not killed by the relations, counted by hand
DIMS = {A2: 3, A3_zero: 5, kronecker: 4, dual_numbers: 2, loop_and_line: 7, two_cycle: 4}


@pytest.mark.parametrize("make", ALGEBRAS, ids=lambda f: f.__name__)
def test_algebra_dimension(make):
    assert make().dimension == DIMS[make]


def test_a2_injectives():
    alg = A2()
    i2 = indecomposable_injective(alg, "2")
    assert i2.dim_vector() == (1, 1) and i2.maps["a"] == ((1,),)
    assert indecomposable_injective(alg, "1") == simple(alg, "1")


def test_socle_and_radical_of_a2_module():
    alg = A2()
    m = Representation(alg, {"1": 1, "2": 1}, {"a": [[1]]})
    assert socle(m).module.dim_vector() == (0, 1)
    assert radical(m).module.dim_vector() == (0, 1)
    assert hom_space_dim(m, simple(alg, "1")) == 1
    assert hom_space_dim(simple(alg, "1"), m) == 0


def test_kronecker_hom_between_preprojectives():
    alg = kronecker()
    p1 = indecomposable_projective(alg, "1")
    p2 = indecomposable_projective(alg, "2")
    assert p1.dim_vector() == (1, 2)
    assert hom_space_dim(p2, p1) == 2
    assert hom_space_dim(p1, p2) == 0


def test_invalid_input():
    with pytest.raises(InvalidAlgebra):
        Algebra.build(["1"], [("a", "1", "2")])
    with pytest.raises(InvalidAlgebra):
        Algebra.build(["1", "2"], [("a", "1", "2"), ("b", "2", "1")], ["a - a*b*a"])
    with pytest.raises(InvalidAlgebra):
        Algebra.build(["1"], [("a", "1", "1")])  # not nilpotent
    with pytest.raises(InvalidRepresentation):
        Representation(A3_zero(), {"1": 1, "2": 1, "3": 1}, {"a": [[1]], "b": [[1]]})
    with pytest.raises(InvalidRepresentation):
        Representation(A2(), {"1": 1, "2": 1}, {"a": [[1, 0]]})
    with pytest.raises(MixedAlgebras):
        hom_space_dim(simple(A2(), "1"), simple(kronecker(), "1"))


@pytest.mark.parametrize("make", ALGEBRAS, ids=lambda f: f.__name__)
def test_injectives_have_simple_socle_and_discrete_spectrum(make):
    alg = make()
    spec = injective_spectrum(alg)
    assert [p.vertex for p in spec.points] == list(alg.vertices)
    assert spec.topology == "discrete"
    for v in alg.vertices:
        assert is_simple_socle_at(spec.injectives[v], v)
    backend = FdBackend(alg)
    for a in alg.vertices:
        for b in alg.vertices:
            assert backend.specializes(VertexPoint(a), VertexPoint(b)) == (a == b)
            assert backend.in_basic_closed(simple(alg, a), VertexPoint(b)) == (a == b)


@pytest.mark.parametrize("make", ALGEBRAS, ids=lambda f: f.__name__)
def test_cartan_dimensions(make):
    alg = make()
    total_p = sum(indecomposable_projective(alg, v).total_dim for v in alg.vertices)
    total_i = sum(indecomposable_injective(alg, v).total_dim for v in alg.vertices)
    assert total_p == total_i == alg.dimension
    for v in alg.vertices:
        for u in alg.vertices:
            # e_v A e_u is seen from both sides
            assert indecomposable_projective(alg, v).dims[u] == indecomposable_injective(alg, u).dims[v]


# -- random representations and the brute-force oracle over F2 ---------------


def random_rep(alg, rng, max_dim=2, tries=200):
    for _ in range(tries):
        dims = {v: rng.randint(0, max_dim) for v in alg.vertices}
        maps = {
            a.name: [[rng.randint(0, 1) for _ in range(dims[a.target])] for _ in range(dims[a.source])]
            for a in alg.arrows
        }
        try:
            return Representation(alg, dims, maps)
        except InvalidRepresentation:
            continue
    return Representation(alg, {})


def brute_force_hom_dim_f2(m, n):
    """Count intertwiners over F2 by enumeration; the count is 2^dim."""
    alg = m.algebra
    slots = [(v, i, j) for v in alg.vertices for i in range(m.dims[v]) for j in range(n.dims[v])]
    mats = {a.name: ([[int(x.v) for x in r] for r in m.maps[a.name]], [[int(x.v) for x in r] for r in n.maps[a.name]]) for a in alg.arrows}
    count = 0
    for bits in itertools.product((0, 1), repeat=len(slots)):
        phi = {v: [[0] * n.dims[v] for _ in range(m.dims[v])] for v in alg.vertices}
        for (v, i, j), b in zip(slots, bits):
            phi[v][i][j] = b
        ok = True
        for a in alg.arrows:
            s, t = a.source, a.target
            Ma, Na = mats[a.name]
            for i in range(m.dims[s]):
                for j in range(n.dims[t]):
                    lhs = sum(Ma[i][k] * phi[t][k][j] for k in range(m.dims[t])) % 2
                    rhs = sum(phi[s][i][k] * Na[k][j] for k in range(n.dims[s])) % 2
                    if lhs != rhs:
                        ok = False
                        break
                if not ok:
                    break
            if not ok:
                break
        count += ok
    return count.bit_length() - 1


seeds = st.integers(0, 10**6)


@settings(max_examples=40)
@given(seeds, st.sampled_from(ALGEBRAS))
def test_hom_dim_matches_f2_enumeration(s, make):
    rng = random.Random(s)
    alg = make("F2")
    m, n = random_rep(alg, rng), random_rep(alg, rng)
    assert hom_space_dim(m, n) == brute_force_hom_dim_f2(m, n)


@settings(max_examples=40)
@given(seeds, st.sampled_from(ALGEBRAS))
def test_projectives_and_injectives_represent_vertex_spaces(s, make):
    rng = random.Random(s)
    alg = make()
    m = random_rep(alg, rng)
    for v in alg.vertices:
        assert hom_space_dim(indecomposable_projective(alg, v), m) == m.dims[v]
        assert hom_space_dim(m, indecomposable_injective(alg, v)) == m.dims[v]


@settings(max_examples=30)
@given(seeds, st.sampled_from(ALGEBRAS))
def test_hom_is_additive(s, make):
    rng = random.Random(s)
    alg = make()
    a, b, c = random_rep(alg, rng), random_rep(alg, rng), random_rep(alg, rng)
    assert hom_space_dim(direct_sum(a, b), c) == hom_space_dim(a, c) + hom_space_dim(b, c)


@settings(max_examples=30)
@given(seeds, st.sampled_from(ALGEBRAS))
def test_socle_is_hom_from_simples(s, make):
    rng = random.Random(s)
    alg = make()
    m = random_rep(alg, rng)
    soc = socle(m).module
    for S, v in zip(simples(alg), alg.vertices):
        assert soc.dims[v] == hom_space_dim(S, m)
        # radical quotient at v is Hom(M, S(v))
        assert m.dims[v] - radical(m).module.dims[v] == hom_space_dim(m, S)


@settings(max_examples=20)
@given(seeds, st.sampled_from(ALGEBRAS))
def test_hom_basis_elements_intertwine(s, make):
    rng = random.Random(s)
    alg = make()
    m, n = random_rep(alg, rng), random_rep(alg, rng)
    for phi in hom_space_basis(m, n):
        for a in alg.arrows:
            lhs = [[sum(m.maps[a.name][i][k] * phi[a.target][k][j] for k in range(m.dims[a.target])) for j in range(n.dims[a.target])] for i in range(m.dims[a.source])]
            rhs = [[sum(phi[a.source][i][k] * n.maps[a.name][k][j] for k in range(n.dims[a.source])) for j in range(n.dims[a.target])] for i in range(m.dims[a.source])]
            assert lhs == rhs
