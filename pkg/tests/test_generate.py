"""Builders for the standard table families."""

import pytest

from schreier.errors import ShapeError, SizeLimit
from schreier.generate import (
    cyclic_group,
    cyclic_monoid,
    full_transformation,
    generate,
    klein_four,
    quaternion_group,
    truncated_addition,
)
from schreier.monoid import cyclic_data, units


def test_cyclic_group_point():
    assert cyclic_group(1).order == 1


def test_cyclic_group_law():
    g = cyclic_group(5)
    assert g.is_group() and g.is_commutative
    assert g.mul(3, 4) == 2


def test_cyclic_monoid_tail_and_loop():
    m = cyclic_monoid(3, 3)
    assert m.order == 6
    # after the tail of length 3, products wrap around a 3-cycle
    assert m.mul(4, 5) == 3 + ((4 + 5 - 3) % 3)
    assert cyclic_data(m, 1) == (3, 3)
    assert not m.is_group()


def test_cyclic_monoid_degenerate_cases():
    assert cyclic_monoid(1, 1).order == 2
    with pytest.raises(ShapeError):
        cyclic_monoid(0, 4)


def test_klein_four():
    k = klein_four()
    assert k.order == 4 and k.is_group() and k.is_commutative
    assert all(k.mul(x, x) == 0 for x in range(4))
    assert k.names == ("1", "x", "y", "xy")


def test_quaternions():
    q = quaternion_group()
    assert q.order == 8 and q.is_group() and not q.is_commutative
    assert [cyclic_data(q, x)[1] for x in range(8)] == [1, 2, 4, 4, 4, 4, 4, 4]
    # i * j = k and j * i = -k
    assert q.mul(2, 4) == 6
    assert q.mul(4, 2) == 7
    assert q.names[6] == "k" and q.names[7] == "-k"


def test_truncated_addition():
    t = truncated_addition(2)
    assert t.order == 3
    assert t.mul(1, 2) == 2
    assert units(t).elements == (0,)


def test_full_transformation_orders():
    assert full_transformation(1).order == 1
    assert full_transformation(2).order == 4
    t3 = full_transformation(3)
    assert t3.order == 27
    assert len(units(t3).elements) == 6
    assert t3.identity == 5


def test_full_transformation_composition_order():
    t2 = full_transformation(2)
    # table rows are lexicographically sorted image tuples
    assert t2.identity == 1
    assert t2.table == ((0, 0, 3, 3), (0, 1, 2, 3), (0, 2, 1, 3), (0, 3, 0, 3))


def test_full_transformation_gate():
    with pytest.raises(SizeLimit):
        full_transformation(4)


def test_generate_dispatch():
    e = generate("cyclic-monoid", (3, 3))
    assert e.id == "c3_3"
    assert e.kind == "monoid"
    assert e.payload.order == 6
    assert generate("q8", ()).payload.names == ("1", "-1", "i", "-i", "j", "-j", "k", "-k")
    assert generate("truncated-add", (2,)).id == "trunc2"
    assert generate("full-transformation", (3,)).id == "t3"


def test_generate_arg_validation():
    with pytest.raises(ShapeError):
        generate("cyclic-group", ())
    with pytest.raises(ShapeError):
        generate("klein4", (1,))
    with pytest.raises(ShapeError):
        generate("no-such-kind", ())
