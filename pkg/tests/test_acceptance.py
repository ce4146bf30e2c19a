"""Top-level acceptance gate.

Each test checks one numbered criterion end to end and prints exactly one
pass/fail line, so a bare run shows the full scorecard.
"""

import time

from schreier import (
    analyze,
    aut_subgroups,
    canonical_cleavage,
    enumerate_cleavages,
    extract_action,
    find_isomorphism,
    groth,
    h2,
    matches_up_to_unit_twist,
    reconstruct,
    validate_lax,
    verify_exact_sequences,
    verify_h2_bijection,
    z1_iso,
)
from schreier.automorphism import aut_A, brute_force_aut
from schreier.cohomology import extension_from_cocycle
from schreier.monoid import compose, kernel, units
from schreier.suite import run_suite

ACTION_IDS = ("quaternion_action", "c33_lax", "c22_lax", "inv_c3_by_c2",
              "trivial_c2_on_c2", "trivial_c2_on_trunc1", "shifted_action")


def _verdict(number, label, ok):
    print("criterion %02d (%s): %s" % (number, label, "PASS" if ok else "FAIL"))
    assert ok, "criterion %02d (%s) failed" % (number, label)


def _hom_entries(entries):
    return [e.payload for e in entries.values() if e.kind == "hom"]


def _is_regular_extension(h):
    return analyze(h).is_fibration and kernel(h).monoid.is_commutative


def test_criterion_01_quaternion_total(catalog):
    act = catalog["quaternion_action"]
    g = groth(act)
    iso = find_isomorphism(g.underlying, catalog["q8"])
    ok = (g.underlying.order == 8
          and iso is not None
          and analyze(g.projection).is_fibration)
    _verdict(1, "quaternion total monoid", ok)


def _oracle_pcar_car(h):
    """From-scratch factorization search, independent of the library."""
    m, n = h.source, h.target
    ker = [a for a in m.elements() if h.map[a] == n.identity]
    pcar, car = set(), set()
    for x in m.elements():
        if all(sum(1 for a in ker if m.mul(x, a) == z) == 1
               for z in m.elements() if h.map[z] == h.map[x]):
            pcar.add(x)
        good = True
        for z in m.elements():
            for v in n.elements():
                if n.mul(h.map[x], v) != h.map[z]:
                    continue
                if sum(1 for y in m.elements()
                       if h.map[y] == v and m.mul(x, y) == z) != 1:
                    good = False
        if good:
            car.add(x)
    return pcar, car


def test_criterion_02_index_three_cyclic(catalog):
    h = catalog["c33_to_c3"]
    report = analyze(h)
    pcar, car = _oracle_pcar_car(h)
    ok = (report.is_prefibration
          and not report.is_fibration
          and set(report.pcar) == pcar == {0, 1, 2}
          and set(report.car) == car == {0})
    _verdict(2, "partial lifts on the tailed cycle", ok)


def test_criterion_03_catalog_breadth(entries):
    homs = _hom_entries(entries)
    start = time.monotonic()
    verdicts = run_suite(scope="fibration-analysis")
    elapsed = time.monotonic() - start
    ok = (len(homs) >= 20
          and all(h.source.order <= 12 for h in homs)
          and all(v.passed for v in verdicts)
          and elapsed <= 60.0)
    _verdict(3, "catalog breadth and closure laws", ok)


def test_criterion_04_round_trip_rebuild(entries):
    ok = True
    for e in entries.values():
        if e.kind != "hom":
            continue
        h = e.payload
        if not analyze(h).is_prefibration:
            continue
        cl = canonical_cleavage(h)
        bar = reconstruct(cl)
        g = groth(extract_action(cl))
        if not bar.is_bijective():
            ok = False
        if compose(h, bar).map != g.projection.map:
            ok = False
    _verdict(4, "rebuild from canonical lifts", ok)


def test_criterion_05_round_trip_extraction(catalog):
    ok = True
    for aid in ACTION_IDS:
        act = catalog[aid]
        g = groth(act)
        back = extract_action(canonical_cleavage(g.projection))
        if matches_up_to_unit_twist(act, back) is None:
            ok = False
    _verdict(5, "re-extraction up to a unit twist", ok)


def test_criterion_06_pseudo_iff_fibration(catalog):
    ok = True
    for aid in ACTION_IDS:
        act = catalog[aid]
        pseudo = validate_lax(act).is_pseudo
        fib = analyze(groth(act).projection).is_fibration
        if pseudo != fib:
            ok = False
    _verdict(6, "invertible twists match full lifting", ok)


def test_criterion_07_two_classes(catalog):
    mod = catalog["mod_c2_c2_trivial"]
    regular = h2(mod, regular_only=True)
    classes, verdicts = verify_h2_bijection(mod)
    totals = [extension_from_cocycle(c.representative).total for c in classes]
    tags = set()
    for t in totals:
        if find_isomorphism(t, catalog["c4"]) is not None:
            tags.add("cyclic")
        if find_isomorphism(t, catalog["klein4"]) is not None:
            tags.add("split")
    ok = (len(regular) == 2
          and len(classes) == 2
          and all(v.passed for v in verdicts)
          and tags == {"cyclic", "split"})
    _verdict(7, "two classes over the two-element group", ok)


def test_criterion_08_parametric_equals_brute(entries):
    checked = 0
    ok = True
    for e in entries.values():
        if e.kind != "hom":
            continue
        h = e.payload
        if h.source.order > 8 or not _is_regular_extension(h):
            continue
        parametric = {t.perm for t in aut_A(h)}
        brute = set(brute_force_aut(h))
        if parametric != brute:
            ok = False
        checked += 1
    ok = ok and checked >= 10
    _verdict(8, "parametrized search equals raw search", ok)


def test_criterion_09_exact_sequences(catalog, entries):
    targets = ["q8_over_klein4", "c4_to_c2"]
    targets += sorted(i for i in entries if entries[i].kind == "hom"
                      and i.startswith("prod_"))
    ok = True
    for hid in targets:
        h = catalog[hid]
        cl = canonical_cleavage(h)
        full = len(enumerate_cleavages(h))
        data, verdicts = verify_exact_sequences(h, max_cleavages=4096)
        if not all(v.passed for v in verdicts):
            ok = False
        sweep = next(v for v in verdicts
                     if v.key == "lambda-cleavage-independent")
        if sweep.detail != "%d cleavages checked" % full:
            ok = False
    _verdict(9, "exact sequences with a full sweep", ok)


def test_criterion_10_unit_crossed_maps(catalog, entries):
    ok = True
    for e in entries.values():
        if e.kind != "hom" or not _is_regular_extension(e.payload):
            continue
        pairs, verdict = z1_iso(e.payload)
        if not verdict.passed:
            ok = False
    pairs, _ = z1_iso(catalog["c4_to_c2"])
    sub = aut_subgroups(catalog["c4_to_c2"])
    ok = ok and len(pairs) == 2 and len(sub.fix_both) == 2
    _verdict(10, "crossed unit maps classify the fixers", ok)
