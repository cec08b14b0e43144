from fractions import Fraction

import pytest

from injspec.errors import BadParameter
from injspec.ncspec.heis import (
    BigGeneric,
    FiberClosed,
    FiberGeneric,
    GLOpaque,
    GLRationalP,
    GLRationalQ,
    HeisBackend,
    PFamily,
    QFamily,
    closure_gl,
    fiber0,
    specializes,
    zpoly,
)


def gl(f, g="1"):
    return GLRationalP(zpoly(f), zpoly(g))


def test_lowest_terms():
    assert gl("z^2 - 1", "z - 1") == gl("z + 1")
    assert gl("2*z", "2") == gl("z")
    with pytest.raises(BadParameter):
        gl("z", "0")


def test_gl_point_specialises_along_fibres():
    e = gl("z^2 + 1")
    for alpha in (1, 2, 3, Fraction(1, 2)):
        assert specializes(e, FiberClosed(alpha, PFamily(alpha ** 2 + 1)))
        assert not specializes(e, FiberClosed(alpha, PFamily(alpha ** 2 + 2)))
        assert not specializes(e, FiberClosed(alpha, QFamily(alpha ** 2 + 1)))
    assert specializes(e, fiber0("p - 1"))
    assert specializes(e, fiber0("p - 1", "q - 7"))
    assert not specializes(e, fiber0("p - 2"))
    assert not specializes(e, fiber0())


def test_poles_are_skipped():
    e = gl("1", "z")
    assert not specializes(e, fiber0("p"))
    assert not specializes(e, fiber0("p", "q"))
    assert specializes(e, FiberClosed(2, PFamily(Fraction(1, 2))))
    e2 = gl("1", "z - 3")
    assert not any(specializes(e2, FiberClosed(3, PFamily(c))) for c in range(-5, 6))


def test_q_family():
    e = GLRationalQ(zpoly("z"), zpoly("1"))
    assert specializes(e, FiberClosed(5, QFamily(5)))
    assert specializes(e, fiber0("q"))
    assert not specializes(e, fiber0("p"))


def test_generics():
    big = BigGeneric()
    sample = [FiberGeneric(2), FiberClosed(2, PFamily(1)), fiber0("p", "q"), gl("z")]
    assert all(specializes(big, b) for b in sample)
    assert specializes(FiberGeneric(2), FiberClosed(2, QFamily(9)))
    assert not specializes(FiberGeneric(2), FiberClosed(3, QFamily(9)))
    assert specializes(fiber0(), fiber0("p - 4"))
    assert not specializes(fiber0("p - 4"), fiber0())
    with pytest.raises(BadParameter):
        FiberGeneric(0)


def test_opaque_gl_points():
    target = FiberClosed(1, PFamily(3))
    o = GLOpaque("I", frozenset([target]))
    assert specializes(o, target) and not specializes(o, FiberClosed(2, PFamily(3)))


def test_closure_over_sample():
    sample = [FiberClosed(a, PFamily(a * a + d)) for a in (1, 2, 3) for d in (1, 2)] + [fiber0("p - 1")]
    kept = closure_gl("z^2 + 1", "1", sample)
    assert [b.family.c for b in kept if isinstance(b, FiberClosed)] == [2, 5, 10]
    assert fiber0("p - 1") in kept
    assert HeisBackend().label(BigGeneric()) == "E(H)"
