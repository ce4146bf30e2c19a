"""Cayley-table monoid core: construction audits, homomorphisms, products."""

import pytest

from schreier import (
    Submonoid,
    compose,
    find_isomorphism,
    identity_hom,
    kernel,
    make_hom,
    make_monoid,
    opposite,
    product_monoid,
    pullback,
    trivial_hom,
    units,
)
from schreier.errors import (
    BadIdentity,
    ComposabilityError,
    NotAHomomorphism,
    NotAssociative,
    ShapeError,
    SizeLimit,
)
from schreier.monoid import (
    automorphism_group,
    cyclic_data,
    generating_set,
    opposite_hom,
    permutations_fixing_identity,
)

C2 = make_monoid(((0, 1), (1, 0)), identity=0)
C3 = make_monoid(((0, 1, 2), (1, 2, 0), (2, 0, 1)), identity=0)
C4 = make_monoid(tuple(tuple((i + j) % 4 for j in range(4)) for i in range(4)), identity=0)
# additive monoid on {0,1,2} with saturation at 2
TRUNC2 = make_monoid(((0, 1, 2), (1, 2, 2), (2, 2, 2)), identity=0)


def test_construction_and_multiplication():
    assert C3.order == 3
    assert C3.mul(1, 2) == 0
    assert C3.prod([1, 1, 1]) == 0
    assert C3.prod([]) == C3.identity


def test_identity_not_forced_to_zero():
    m = make_monoid(((1, 0), (0, 1)), identity=1)
    assert m.identity == 1
    assert m.mul(0, 0) == 1
    assert m.is_group()


def test_rejects_non_associative_table():
    # (1*1)*2 = 2 but 1*(1*2) = 0
    with pytest.raises(NotAssociative):
        make_monoid(((0, 1, 2), (1, 0, 1), (2, 1, 1)), identity=0)


def test_rejects_bad_identity():
    with pytest.raises(BadIdentity):
        make_monoid(((0, 1), (1, 0)), identity=1)


def test_rejects_ragged_table():
    with pytest.raises(ShapeError):
        make_monoid(((0, 1), (1,)), identity=0)


def test_rejects_out_of_range_entry():
    with pytest.raises(ShapeError):
        make_monoid(((0, 5), (1, 0)), identity=0)


def test_size_limit():
    from schreier.generate import cyclic_group

    big = cyclic_group(65)
    with pytest.raises(SizeLimit):
        product_monoid(big, big)


def test_units_and_inverses():
    assert units(C4).elements == (0, 1, 2, 3)
    assert C4.inverse(1) == 3
    assert units(TRUNC2).elements == (0,)
    assert TRUNC2.is_unit(0) and not TRUNC2.is_unit(1)
    with pytest.raises(ValueError):
        TRUNC2.inverse(1)
    assert not TRUNC2.is_group()
    assert C4.is_group()


def test_commutativity_flags():
    assert C4.is_commutative
    q8 = _quaternions()
    assert not q8.is_commutative
    assert q8.is_group()


def _quaternions():
    from schreier.generate import quaternion_group

    return quaternion_group()


def test_cyclic_data_and_generators():
    q8 = _quaternions()
    assert [cyclic_data(q8, x)[1] for x in range(8)] == [1, 2, 4, 4, 4, 4, 4, 4]
    assert generating_set(q8) == (1, 2, 4)
    # index where the cycle re-enters, period of the loop
    assert cyclic_data(TRUNC2, 1) == (2, 1)


def test_submonoid_dense_reindex():
    sub = Submonoid(C4, (0, 2))
    assert sub.monoid.order == 2
    assert sub.monoid.mul(1, 1) == 0
    assert sub.inclusion.map == (0, 2)
    with pytest.raises(Exception):
        Submonoid(C4, (1, 2))


def test_hom_audit():
    h = make_hom(C4, C2, (0, 1, 0, 1))
    assert h.is_surjective()
    assert not h.is_injective()
    with pytest.raises(NotAHomomorphism):
        make_hom(C4, C2, (0, 1, 1, 0))


def test_hom_inverse():
    h = make_hom(C2, C2, (0, 1))
    assert h.is_bijective()
    assert h.inverse_hom().map == (0, 1)


def test_identity_and_trivial_homs():
    assert identity_hom(C3).map == (0, 1, 2)
    assert trivial_hom(C3, C2).map == (0, 0, 0)


def test_compose_order():
    f = make_hom(C4, C2, (0, 1, 0, 1))
    g = make_hom(C2, C2, (0, 1))
    assert compose(g, f).map == (0, 1, 0, 1)
    with pytest.raises(ComposabilityError):
        compose(f, g)


def test_kernel():
    h = make_hom(C4, C2, (0, 1, 0, 1))
    assert kernel(h).elements == (0, 2)
    assert kernel(h).monoid.order == 2


def test_product_monoid():
    p = product_monoid(C2, C3)
    assert p.monoid.order == 6
    assert p.onto_first.map == (0, 0, 0, 1, 1, 1)
    assert p.onto_second.map == (0, 1, 2, 0, 1, 2)
    # componentwise: (1,1)*(1,2) = (0,0)
    assert p.monoid.mul(4, 5) == 0


def test_pullback_square():
    f = make_hom(C4, C2, (0, 1, 0, 1))
    g = make_hom(C2, C2, (0, 1))
    pb = pullback(f, g)
    assert pb.pairs == ((0, 0), (1, 1), (2, 0), (3, 1))
    assert compose(f, pb.onto_first).map == compose(g, pb.onto_second).map
    with pytest.raises(ComposabilityError):
        pullback(f, make_hom(C3, C3, (0, 1, 2)))


def test_opposite():
    q8 = _quaternions()
    op = opposite(q8)
    assert op.mul(2, 4) == q8.mul(4, 2)
    assert opposite(op).table == q8.table
    h = make_hom(C4, C2, (0, 1, 0, 1))
    assert opposite_hom(h).map == h.map


def test_find_isomorphism():
    shifted = make_monoid(((1, 0), (0, 1)), identity=1)
    iso = find_isomorphism(C2, shifted)
    assert iso is not None and iso.map == (1, 0)
    assert find_isomorphism(C4, product_monoid(C2, C2).monoid) is None


def test_automorphism_counts():
    assert len(automorphism_group(C4)) == 2
    assert len(automorphism_group(_quaternions())) == 24
    k4 = product_monoid(C2, C2).monoid
    assert len(automorphism_group(k4)) == 6
    assert len(automorphism_group(TRUNC2)) == 1


def test_permutations_fixing_identity():
    perms = list(permutations_fixing_identity(3, 0))
    assert len(perms) == 2
    assert all(p[0] == 0 for p in perms)


def test_names_carried_but_ignored_for_equality():
    a = make_monoid(((0, 1), (1, 0)), identity=0, names=("e", "t"))
    b = make_monoid(((0, 1), (1, 0)), identity=0)
    assert a == b
    assert a.name_of(1) == "t"
