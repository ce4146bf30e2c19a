"""Actions with a measuring family: validation, morphisms, cells."""

import pytest

from schreier import (
    LaxAction,
    LaxHom,
    TwoCell,
    compose_lax_homs,
    identity_lax_hom,
    make_hom,
    make_monoid,
    strictify,
    trivial_action,
    validate_lax,
    validate_two_cell,
    vertical_composite,
)
from schreier.errors import InvalidLaxHom, NotAnAction, ShapeError

C2 = make_monoid(((0, 1), (1, 0)), identity=0)
C3 = make_monoid(((0, 1, 2), (1, 2, 0), (2, 0, 1)), identity=0)


def test_catalog_actions_validate(catalog):
    for aid in ("quaternion_action", "c33_lax", "c22_lax", "inv_c3_by_c2",
                "trivial_c2_on_c2", "trivial_c2_on_trunc1", "shifted_action"):
        audit = validate_lax(catalog[aid])
        assert audit.ok, (aid, audit.failing())


def test_pseudo_flag(catalog):
    assert validate_lax(catalog["quaternion_action"]).is_pseudo
    assert validate_lax(catalog["trivial_c2_on_c2"]).is_pseudo
    # saturating coefficients are not invertible
    assert not validate_lax(catalog["c33_lax"]).is_pseudo
    assert not validate_lax(catalog["c22_lax"]).is_pseudo


def test_axiom_keys(catalog):
    audit = validate_lax(catalog["quaternion_action"])
    assert [v.key for v in audit.verdicts] == [
        "lax-axiom-i", "lax-axiom-ii", "lax-axiom-iii",
        "lax-axiom-iv", "lax-axiom-v",
    ]


def test_bad_gamma_fails_audit():
    act = LaxAction(C2, C2, phi=((0, 0), (1, 1)), gamma=((0, 1), (1, 1)))
    audit = validate_lax(act)
    assert not audit.ok
    assert audit.failing()


def test_carrier_unit_must_be_fixed():
    act = LaxAction(C2, C2, phi=((0, 1), (1, 0)), gamma=((0, 0), (0, 0)))
    assert not validate_lax(act).ok


def test_shape_checks():
    with pytest.raises(ShapeError):
        LaxAction(C2, C2, phi=((0, 0),), gamma=((0, 0), (0, 0)))
    with pytest.raises(ShapeError):
        LaxAction(C2, C2, phi=((0, 0), (1, 5)), gamma=((0, 0), (0, 0)))


def test_trivial_action_is_pseudo():
    act = trivial_action(C3, C2)
    audit = validate_lax(act)
    assert audit.ok and audit.is_pseudo
    assert act.phi == ((0, 0, 0), (1, 1, 1))
    assert act.gamma == ((0, 0, 0), (0, 0, 0), (0, 0, 0))


def test_strictify_from_action_table():
    # the two-element group inverting the three-cycle
    table = ((0, 0), (1, 2), (2, 1))
    act = strictify(C2, C3, table)
    audit = validate_lax(act)
    assert audit.ok and audit.is_pseudo
    assert act.phi == table


def test_strictify_rejects_broken_table():
    with pytest.raises(NotAnAction):
        strictify(C2, C3, ((0, 1), (1, 2), (2, 0)))


def test_phi_gamma_accessors(catalog):
    act = catalog["quaternion_action"]
    assert act.phi_of(1, 1) == 1
    assert act.gamma_of(2, 2) == 1
    assert act.gamma_of(0, 3) == 0


def test_identity_lax_hom_round_trip(catalog):
    act = catalog["quaternion_action"]
    f = identity_lax_hom(act)
    g = compose_lax_homs(f, f)
    assert g.alpha.map == f.alpha.map
    assert g.tau == f.tau


def test_lax_hom_rejects_bad_tau(catalog):
    act = catalog["quaternion_action"]
    f = identity_lax_hom(act)
    with pytest.raises(InvalidLaxHom):
        LaxHom(act, act, f.alpha, tau=(1, 0, 0, 0))


def test_lax_hom_between_trivial_actions():
    a = trivial_action(C2, C2)
    alpha = make_hom(C2, C2, (0, 1))
    f = LaxHom(a, a, alpha, tau=(0, 0))
    assert f.tau == (0, 0)


def test_identity_cell(catalog):
    act = catalog["quaternion_action"]
    f = identity_lax_hom(act)
    cell = TwoCell(f, f, c=act.carrier.identity)
    audit = validate_two_cell(cell)
    assert audit.ok and audit.is_pseudo
    assert {v.key for v in audit.verdicts} == {
        "cell-intertwines-carrier-maps", "cell-intertwines-tau",
    }
    again = vertical_composite(cell, cell)
    assert again.c == cell.c


def test_non_central_cell_fails():
    from schreier.generate import quaternion_group

    act = trivial_action(C2, quaternion_group())
    f = identity_lax_hom(act)
    audit = validate_two_cell(TwoCell(f, f, c=2))
    assert not audit.ok
    failed = [v.key for v in audit.verdicts if not v.passed]
    assert failed == ["cell-intertwines-carrier-maps"]
    # the central element -1 still works
    assert validate_two_cell(TwoCell(f, f, c=1)).ok


def test_shifted_action_uses_nonzero_identity(catalog):
    act = catalog["shifted_action"]
    assert act.carrier.identity == 1
    assert validate_lax(act).ok
