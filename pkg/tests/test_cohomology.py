"""Normalized cocycles, class partitions, extensions, exact sequences."""

import pytest

from schreier import (
    Cocycle2,
    NModule,
    analyze,
    aut_subgroups,
    cohomologous,
    enumerate_cocycles,
    extension_from_cocycle,
    extension_module,
    find_isomorphism,
    h2,
    make_monoid,
    trivial_cocycle,
    trivial_module,
    verify_exact_sequences,
    verify_h2_bijection,
    z1_cocycles,
    z1_iso,
)
from schreier.cohomology import (
    Cocycle1,
    c1_group,
    c2_group,
    class_index,
    coboundary_shift,
    congruent,
    lambda1,
    lambda2,
    twist_automorphism,
    verify_round_trip,
)
from schreier.errors import (
    ComposabilityError,
    InvalidCocycle,
    NotAnAction,
    NotRegularSchreier,
)

C2 = make_monoid(((0, 1), (1, 0)), identity=0)

COCYCLE_COUNTS = {
    "mod_c2_c2_trivial": (2, 2, [1, 1], 2),
    "mod_klein4_c2_trivial": (16, 8, [2] * 8, 8),
    "mod_c2_c4_inv": (2, 2, [1, 1], 2),
    "mod_c2_c4_trivial": (4, 2, [2, 2], 2),
    "mod_c2s": (2, 2, [1, 1], 2),
}


def test_module_requires_commutative_carrier():
    from schreier.generate import quaternion_group

    with pytest.raises(NotRegularSchreier):
        NModule(C2, quaternion_group(), phi=tuple((a, a) for a in range(8)))


def test_module_requires_genuine_action():
    with pytest.raises(NotAnAction):
        NModule(C2, C2, phi=((0, 1), (1, 1)))


def test_trivial_module():
    mod = trivial_module(C2, C2)
    assert mod.phi == ((0, 0), (1, 1))
    assert mod.phi_of(1, 1) == 1


@pytest.mark.parametrize("mod_id", sorted(COCYCLE_COUNTS))
def test_frozen_cocycle_and_class_counts(catalog, mod_id):
    n_cocycles, n_classes, sizes, n_regular = COCYCLE_COUNTS[mod_id]
    mod = catalog[mod_id]
    cocs = enumerate_cocycles(mod)
    assert len(cocs) == n_cocycles
    classes = h2(mod)
    assert len(classes) == n_classes
    assert sorted(c.size for c in classes) == sizes
    assert len(h2(mod, regular_only=True)) == n_regular


def test_two_class_representatives(catalog):
    classes = h2(catalog["mod_c2_c2_trivial"])
    tables = [c.representative.table for c in classes]
    assert ((0, 0), (0, 0)) in tables
    assert ((0, 0), (0, 1)) in tables


def test_cocycle_must_be_normalized(catalog):
    mod = catalog["mod_c2_c2_trivial"]
    with pytest.raises(InvalidCocycle):
        Cocycle2(mod, ((0, 1), (0, 0)))


def test_cocycle_triple_identity_enforced(catalog):
    mod = catalog["mod_klein4_c2_trivial"]
    # normalized but incoherent across a triple of base elements
    with pytest.raises(InvalidCocycle):
        Cocycle2(mod, ((0, 0, 0, 0), (0, 1, 0, 0), (0, 0, 0, 0), (0, 0, 0, 0)))


def test_trivial_cocycle_regular(catalog):
    c = trivial_cocycle(catalog["mod_c2_c2_trivial"])
    assert c.table == ((0, 0), (0, 0))
    assert c.is_regular


def test_shift_then_relate(catalog):
    mod = catalog["mod_c2_c4_trivial"]
    for c in enumerate_cocycles(mod):
        for tau in [(0, 1), (0, 3)]:
            shifted = coboundary_shift(c, tau)
            assert cohomologous(c, shifted) is not None


def test_cohomologous_rejects_cross_module(catalog):
    c1 = trivial_cocycle(catalog["mod_c2_c2_trivial"])
    c2 = trivial_cocycle(catalog["mod_c2_c4_trivial"])
    with pytest.raises(ComposabilityError):
        cohomologous(c1, c2)


def test_distinct_classes_not_related(catalog):
    classes = h2(catalog["mod_c2_c2_trivial"])
    a, b = classes[0].representative, classes[1].representative
    assert cohomologous(a, b) is None


def test_class_index(catalog):
    mod = catalog["mod_klein4_c2_trivial"]
    classes = h2(mod)
    for i, cls in enumerate(classes):
        for table in cls.members:
            assert class_index(Cocycle2(mod, table), classes) == i


def test_extension_totals_for_two_classes(catalog):
    classes = h2(catalog["mod_c2_c2_trivial"])
    totals = [extension_from_cocycle(c.representative).total for c in classes]
    k4 = catalog["klein4"]
    c4 = catalog["c4"]
    tags = set()
    for t in totals:
        if find_isomorphism(t, c4) is not None:
            tags.add("cyclic")
        if find_isomorphism(t, k4) is not None:
            tags.add("split")
    assert tags == {"cyclic", "split"}


def test_extension_record_verdicts(catalog):
    rec = extension_from_cocycle(trivial_cocycle(catalog["mod_c2_c2_trivial"]))
    keys = {v.key for v in rec.verdicts}
    assert keys == {
        "extension-projects-kernel-to-unit",
        "extension-prefibration",
        "extension-kernel-image",
        "extension-commutation",
        "regular-iff-fibration",
    }
    assert all(v.passed for v in rec.verdicts)
    assert analyze(rec.projection).is_fibration


def test_extension_module_frozen(catalog):
    mod, coc = extension_module(catalog["c4_to_c2"])
    assert mod.phi == ((0, 0), (1, 1))
    assert coc.table == ((0, 0), (0, 1))
    mod2, coc2 = extension_module(catalog["q8_over_klein4"])
    assert mod2.phi == ((0, 0, 0, 0), (1, 1, 1, 1))
    assert coc2.table == ((0, 0, 0, 0), (0, 1, 0, 1), (0, 1, 1, 0), (0, 0, 1, 1))


def test_extension_module_requires_regular(catalog):
    with pytest.raises(NotRegularSchreier):
        extension_module(catalog["c33_to_c3"])


def test_round_trip_verdicts(catalog):
    for hid in ("c4_to_c2", "q8_over_klein4", "trunc1_to_c1", "q8_to_c2"):
        v = verify_round_trip(catalog[hid])
        assert v.key == "extraction-round-trip"
        assert v.passed, hid


def test_congruence_within_class(catalog):
    mod = catalog["mod_c2_c4_trivial"]
    classes = h2(mod)
    for cls in classes:
        members = [Cocycle2(mod, t) for t in cls.members]
        e1 = extension_from_cocycle(members[0])
        e2 = extension_from_cocycle(members[-1])
        assert congruent(e1, e2) is not None


def test_congruence_separates_classes(catalog):
    classes = h2(catalog["mod_c2_c2_trivial"])
    e1 = extension_from_cocycle(classes[0].representative)
    e2 = extension_from_cocycle(classes[1].representative)
    assert congruent(e1, e2) is None


def test_h2_bijection_verdicts(catalog):
    for mid in sorted(COCYCLE_COUNTS):
        classes, verdicts = verify_h2_bijection(catalog[mid])
        assert {v.key for v in verdicts} == {
            "classes-partition-cocycles",
            "h2-matches-congruence",
            "extensions-recover-their-class",
        }
        assert all(v.passed for v in verdicts), mid


SUBGROUP_COUNTS = {
    # all, fix_both, fix_base, fix_kernel, c1, c2, z1
    "c4_to_c2": (2, 2, 2, 2, 1, 1, 2),
    "q8_over_klein4": (24, 4, 4, 24, 1, 6, 4),
    "c6_to_c2": (2, 1, 2, 1, 2, 1, 1),
    "prod_c2_c2_to_c2": (2, 2, 2, 2, 1, 1, 2),
    "trunc1_to_c1": (1, 1, 1, 1, 1, 1, 1),
    "c4_to_c2s": (2, 2, 2, 2, 1, 1, 2),
}


@pytest.mark.parametrize("hom_id", sorted(SUBGROUP_COUNTS))
def test_frozen_subgroup_counts(catalog, hom_id):
    n_all, n_both, n_base, n_kernel, n_c1, n_c2, n_z1 = SUBGROUP_COUNTS[hom_id]
    h = catalog[hom_id]
    sub = aut_subgroups(h)
    assert len(sub.all_triples) == n_all
    assert len(sub.fix_both) == n_both
    assert len(sub.fix_base) == n_base
    assert len(sub.fix_kernel) == n_kernel
    assert len(sub.c1) == n_c1
    assert len(sub.c2) == n_c2
    mod, _ = extension_module(h)
    assert len(z1_cocycles(mod)) == n_z1


def test_c_groups_standalone(catalog):
    mod, _ = extension_module(catalog["q8_over_klein4"])
    assert len(c1_group(mod)) == 1
    assert len(c2_group(mod)) == 6


def test_lambda_maps_produce_cocycles(catalog):
    h = catalog["q8_over_klein4"]
    mod, coc = extension_module(h)
    for theta in c1_group(mod):
        out = lambda1(coc, theta)
        assert isinstance(out, Cocycle2)
    for eta in c2_group(mod):
        out = lambda2(coc, eta)
        assert isinstance(out, Cocycle2)


def test_twist_automorphisms_are_distinct(catalog):
    h = catalog["c4_to_c2"]
    mod, _ = extension_module(h)
    perms = {twist_automorphism(h, xi).map for xi in z1_cocycles(mod)}
    assert len(perms) == 2


def test_z1_iso(catalog):
    for hid in ("c4_to_c2", "q8_over_klein4", "c6_to_c2"):
        pairs, verdict = z1_iso(catalog[hid])
        assert verdict.key == "z1-isomorphism"
        assert verdict.passed, hid
        sub = aut_subgroups(catalog[hid])
        assert {p.map for _, p in pairs} == {
            tuple(perm) for perm in (t.perm for t in sub.fix_both)
        }


def test_exact_sequence_verdicts(catalog):
    data, verdicts = verify_exact_sequences(catalog["q8_over_klein4"])
    assert {v.key for v in verdicts} == {
        "c-subgroups-closed",
        "inclusion-injective",
        "first-sequence-exact-at-aut",
        "first-sequence-exact-at-c1",
        "second-sequence-exact-at-aut",
        "second-sequence-exact-at-c2",
        "z1-isomorphism",
        "lambda-cleavage-independent",
    }
    assert all(v.passed for v in verdicts)
    assert len(data.z1) == 4


def test_exact_sequences_require_regular(catalog):
    with pytest.raises(NotRegularSchreier):
        verify_exact_sequences(catalog["c33_to_c3"])


def test_one_cocycle_audit(catalog):
    mod, _ = extension_module(catalog["q8_over_klein4"])
    with pytest.raises(InvalidCocycle):
        Cocycle1(mod, (0, 1, 0, 0))
