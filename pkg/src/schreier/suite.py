"""Catalog-wide law checks.

run_suite replays every promised law of the toolkit over a catalog:
table and map audits, the precartesian closure lemmas with their
stability under composition, products, and pullbacks, total-monoid
facts, cleavage round trips and transport, the parametrized
automorphism enumeration against brute force, and the cohomology
package.  Each returned verdict aggregates one law over all applicable
instances; its witness names the first instance that broke.
"""

from __future__ import annotations

import json
import random

from .automorphism import aut_A, brute_force_aut, compute_C, rho
from .catalog import entries_of_kind, standard_catalog
from .cleavage import (
    Cleavage,
    canonical_cleavage,
    cleavage_change,
    enumerate_cleavages,
    extract_action,
    extract_lax_hom,
    matches_up_to_unit_twist,
    reconstruct,
    transport,
    transport_tau,
)
from .cohomology import (
    enumerate_cocycles,
    extension_from_cocycle,
    verify_exact_sequences,
    verify_h2_bijection,
    verify_round_trip,
)
from .errors import ShapeError, ToolkitError
from .fibration import analyze, check_closure_lemmas, compose_check
from .generate import generate
from .groth import groth, groth_on_hom, groth_projection_report
from .laxaction import (
    TwoCell,
    compose_lax_homs,
    identity_lax_hom,
    validate_lax,
    validate_two_cell,
    vertical_composite,
)
from .monoid import (
    FiniteMonoid,
    MonoidHom,
    automorphism_group,
    compose,
    cyclic_data,
    identity_hom,
    kernel,
    opposite,
    product_monoid,
    pullback,
    units,
)
from .serialize import dumps, payload_from_json
from .verdict import Verdict

SCOPES = ("monoid-core", "fibration-analysis", "lax-action", "grothendieck",
          "cleavage-transport", "automorphism", "cohomology-extensions",
          "cli-toolkit")


def as_dict(entries) -> dict:
    out = {}
    for e in entries:
        if e.id in out:
            raise ShapeError("duplicate catalog id %r" % e.id)
        out[e.id] = e
    return out


def _combine(key: str, results) -> Verdict:
    results = list(results)
    bad = next(((lbl, w) for lbl, okd, w in results if not okd), None)
    return Verdict(key, bad is None, bad, detail="%d instances" % len(results))


def _agg(results) -> list[Verdict]:
    """Group (label, Verdict) pairs by verdict key and combine each group."""
    groups: dict[str, list] = {}
    for lbl, v in results:
        groups.setdefault(v.key, []).append((lbl, v.passed, (lbl, v.witness) if not v.passed else None))
    return [_combine(k, [(l, okd, w) for l, okd, w in rs])
            for k, rs in groups.items()]


def _try(fn):
    try:
        fn()
        return True, None
    except ToolkitError as exc:
        return False, "%s: %s" % (type(exc).__name__, exc)


def _have(cat, *ids) -> bool:
    return all(i in cat for i in ids)


def _is_regular_extension(h: MonoidHom) -> bool:
    rep = analyze(h)
    return rep.is_fibration and kernel(h).monoid.is_commutative


def _perm_closed(perms, degree) -> bool:
    pset = set(perms)
    if tuple(range(degree)) not in pset:
        return False
    return all(tuple(p[v] for v in q) in pset for p in pset for q in pset)


def _scope_monoid_core(cat, seed):
    monoids = entries_of_kind(cat, "monoid")
    homs = entries_of_kind(cat, "hom")
    out = []
    res = []
    for e in monoids:
        m = e.payload
        ok, w = _try(lambda m=m: FiniteMonoid(m.table, m.identity, m.names))
        res.append((e.id, ok, w))
    out.append(_combine("tables-pass-reconstruction", res))
    out.append(_combine("units-form-a-group",
                        [(e.id, units(e.payload).monoid.is_group(), None)
                         for e in monoids]))
    res = []
    for e in homs:
        h = e.payload
        k = kernel(h)
        elems = k.elements
        ok = (h.source.identity in elems
              and all(h.map[x] == h.target.identity for x in elems)
              and all(h.source.mul(x, y) in k for x in elems for y in elems))
        res.append((e.id, ok, None))
    out.append(_combine("kernels-are-submonoids", res))
    res = []
    for e in homs:
        h = e.payload
        ok = (compose(identity_hom(h.target), h).map == h.map
              and compose(h, identity_hom(h.source)).map == h.map)
        res.append((e.id, ok, None))
    out.append(_combine("identity-maps-are-neutral", res))
    out.append(_combine("opposite-involution",
                        [(e.id, opposite(opposite(e.payload)) == e.payload, None)
                         for e in monoids]))
    res = []
    for e in monoids:
        if e.payload.order > 8:
            continue
        res.append((e.id, _perm_closed(automorphism_group(e.payload),
                                       e.payload.order), None))
    out.append(_combine("automorphism-groups-closed", res))
    res = []
    for a, b in (("c2", "c3"), ("c4", "c2"), ("klein4", "c2")):
        if not _have(cat, a, b):
            continue
        p = product_monoid(cat[a].payload, cat[b].payload)
        ok = (p.onto_first.is_surjective() and p.onto_second.is_surjective()
              and p.monoid.order == cat[a].payload.order * cat[b].payload.order)
        res.append(("%s*%s" % (a, b), ok, None))
    out.append(_combine("product-projections-valid", res))
    res = []
    for fa, ga in (("c4_to_c2", "c6_to_c2"), ("q8_to_c2", "klein4_to_c2_x")):
        if not _have(cat, fa, ga):
            continue
        f, g = cat[fa].payload, cat[ga].payload
        pb = pullback(f, g)
        ok = (all(f.map[k_] == g.map[n] for k_, n in pb.pairs)
              and compose(f, pb.onto_first).map == compose(g, pb.onto_second).map)
        res.append(("%s|%s" % (fa, ga), ok, None))
    out.append(_combine("pullback-square-commutes", res))
    return out


def _product_hom(h1: MonoidHom, h2: MonoidHom) -> MonoidHom:
    ps = product_monoid(h1.source, h2.source)
    pt = product_monoid(h1.target, h2.target)
    b_src, b_tgt = h2.source.order, h2.target.order
    mapping = tuple(h1.map[x // b_src] * b_tgt + h2.map[x % b_src]
                    for x in ps.monoid.elements())
    return MonoidHom(ps.monoid, pt.monoid, mapping)


def _scope_fibration(cat, seed):
    homs = entries_of_kind(cat, "hom")
    out = []
    lemma_results = []
    res_car, res_epi, res_eq = [], [], []
    for e in homs:
        h = e.payload
        rep = analyze(h)
        for v in check_closure_lemmas(h, rep):
            lemma_results.append((e.id, v))
        res_car.append((e.id, rep.car <= rep.pcar, None))
        if h.source.is_group() and h.target.is_group() and h.is_surjective():
            res_epi.append((e.id, rep.is_fibration, None))
        if rep.is_fibration:
            res_eq.append((e.id, rep.car == rep.pcar, None))
    out.extend(_agg(lemma_results))
    out.append(_combine("car-subset-pcar", res_car))
    out.append(_combine("group-epi-is-fibration", res_epi))
    out.append(_combine("fibration-car-equals-pcar", res_eq))
    comp_results = []
    for e1 in homs:
        for e2 in homs:
            if e1.payload.target == e2.payload.source:
                cc = compose_check(e1.payload, e2.payload)
                for v in cc.verdicts:
                    comp_results.append(("%s;%s" % (e1.id, e2.id), v))
    out.extend(_agg(comp_results))
    res_fib, res_pre, res_elt = [], [], []
    prod_pairs = (("c4_to_c2", "c6_to_c3"), ("klein4_to_c2_x", "c4_to_c2"),
                  ("c33_to_c3", "c4_to_c2"), ("c4_to_c2s", "c2s_to_c1"))
    for ia, ib in prod_pairs:
        if not _have(cat, ia, ib):
            continue
        h1, h2 = cat[ia].payload, cat[ib].payload
        label = "%s*%s" % (ia, ib)
        big = _product_hom(h1, h2)
        rep_big = analyze(big)
        r1, r2 = analyze(h1), analyze(h2)
        if r1.is_fibration and r2.is_fibration:
            res_fib.append((label, rep_big.is_fibration, None))
        if r1.is_prefibration and r2.is_prefibration:
            res_pre.append((label, rep_big.is_prefibration, None))
        b = h2.source.order
        ok = all(x * b + y in rep_big.pcar for x in r1.pcar for y in r2.pcar)
        res_elt.append((label, ok, None))
    out.append(_combine("product-hom-preserves-fibration", res_fib))
    out.append(_combine("product-hom-preserves-prefibration", res_pre))
    out.append(_combine("product-of-precartesians-precartesian", res_elt))
    res_fib, res_pre = [], []
    pull_pairs = (("c4_to_c2", "c6_to_c2"), ("q8_to_c2", "klein4_to_c2_x"),
                  ("c33_to_c3", "c6_to_c3"), ("c22_to_c2", "c4_to_c2"))
    for fa, ga in pull_pairs:
        if not _have(cat, fa, ga):
            continue
        f, g = cat[fa].payload, cat[ga].payload
        label = "%s|%s" % (fa, ga)
        rep = analyze(pullback(f, g).onto_second)
        rf = analyze(f)
        if rf.is_fibration:
            res_fib.append((label, rep.is_fibration, None))
        if rf.is_prefibration:
            res_pre.append((label, rep.is_prefibration, None))
    out.append(_combine("pullback-preserves-fibration", res_fib))
    out.append(_combine("pullback-preserves-prefibration", res_pre))
    return out


def _scope_lax(cat, seed):
    acts = entries_of_kind(cat, "action")
    out = []
    res_valid, res_pseudo, res_unit, res_cell, res_stack = [], [], [], [], []
    for e in acts:
        act = e.payload
        audit = validate_lax(act)
        res_valid.append((e.id, audit.ok, tuple(audit.failing()) or None))
        unit_set = set(units(act.carrier).elements)
        expect = all(v in unit_set for row in act.gamma for v in row)
        res_pseudo.append((e.id, audit.is_pseudo == expect, None))
        f = identity_lax_hom(act)
        ff = compose_lax_homs(f, f)
        res_unit.append((e.id, ff.alpha.map == f.alpha.map and ff.tau == f.tau, None))
        cell = TwoCell(f, f, act.carrier.identity)
        ca = validate_two_cell(cell)
        stacked = vertical_composite(cell, cell)
        res_cell.append((e.id, ca.ok, None))
        res_stack.append((e.id, stacked.c == cell.c, None))
    out.append(_combine("catalog-actions-valid", res_valid))
    out.append(_combine("pseudo-detection", res_pseudo))
    out.append(_combine("identity-lax-hom-neutral", res_unit))
    out.append(_combine("identity-cell-valid", res_cell))
    out.append(_combine("identity-cell-idempotent", res_stack))
    return out


def _scope_groth(cat, seed):
    acts = entries_of_kind(cat, "action")
    out = []
    res_rep, res_dich, res_idf, res_twist = [], [], [], []
    for e in acts:
        act = e.payload
        g = groth(act)
        ok, w = _try(lambda g=g: groth_projection_report(g))
        res_rep.append((e.id, ok, w))
        if not ok:
            continue
        rep = analyze(g.projection)
        res_dich.append((e.id, validate_lax(act).is_pseudo == rep.is_fibration, None))
        gid = groth_on_hom(identity_lax_hom(act), g, g)
        res_idf.append((e.id, gid.map == tuple(range(g.underlying.order)), None))
        act2 = extract_action(canonical_cleavage(g.projection))
        ok = (act2.carrier == act.carrier and act2.acting == act.acting
              and matches_up_to_unit_twist(act, act2) is not None)
        res_twist.append((e.id, ok, None))
    out.append(_combine("projection-report-valid", res_rep))
    out.append(_combine("pseudo-iff-fibration", res_dich))
    out.append(_combine("identity-maps-to-identity", res_idf))
    out.append(_combine("extraction-matches-up-to-unit-twist", res_twist))
    return out


def _some_cleavages(h: MonoidHom, seed: int, cap: int = 4):
    """Canonical cleavage first, then a deterministic sample of others."""
    cl = canonical_cleavage(h)
    ker = cl.kernel
    unit_idx = sorted(units(cl.kernel_monoid).elements)
    positions = [n for n in h.target.elements() if n != h.target.identity]
    total = len(unit_idx) ** len(positions)
    if total <= 16:
        cls = enumerate_cleavages(h)
        return cls, total
    rng = random.Random(seed)
    cls = [cl]
    for _ in range(cap):
        kappa = list(cl.kappa)
        for pos in positions:
            u = rng.choice(unit_idx)
            kappa[pos] = h.source.mul(cl.kappa[pos], ker.elements[u])
        cls.append(Cleavage(h, tuple(kappa)))
    return cls, total


def _scope_cleavage(cat, seed):
    homs = [e for e in entries_of_kind(cat, "hom")
            if analyze(e.payload).is_prefibration]
    out = []
    res_recon, res_extr, res_count = [], [], []
    move_results = []
    res_tau = []
    for e in homs:
        h = e.payload
        cl = canonical_cleavage(h)
        ok, w = _try(lambda cl=cl: extract_action(cl))
        res_extr.append((e.id, ok, w))
        ok, w = _try(lambda cl=cl: reconstruct(cl))
        res_recon.append((e.id, ok, w))
        cls, total = _some_cleavages(h, seed)
        if total <= 16:
            res_count.append((e.id, len(cls) == total,
                              "%d != %d" % (len(cls), total)))
        for other in cls[1:4]:
            change = cleavage_change(cl, other)
            _, _, verdicts = transport(change)
            for v in verdicts:
                move_results.append((e.id, v))
        act = extract_action(cl)
        g = groth(act)
        bar = reconstruct(cl)
        clg_all, _ = _some_cleavages(g.projection, seed)
        clg = clg_all[0]
        clg_t = clg_all[1] if len(clg_all) > 1 else clg
        clh_t = cls[1] if len(cls) > 1 else cl
        ok, w = _try(lambda: extract_lax_hom(bar, clg, cl))
        if ok:
            v = transport_tau(bar, clg, clg_t, cl, clh_t)
            ok, w = v.passed, v.witness
        res_tau.append((e.id, ok, w))
    out.append(_combine("extracted-action-valid", res_extr))
    out.append(_combine("reconstruction-isomorphism", res_recon))
    out.append(_combine("cleavage-count-matches-torsor", res_count))
    out.extend(_agg(move_results))
    out.append(_combine("tau-transport", res_tau))
    return out


def _scope_automorphism(cat, seed):
    homs = [e for e in entries_of_kind(cat, "hom")
            if analyze(e.payload).is_prefibration]
    out = []
    res_param, res_rho, res_sub, res_eq = [], [], [], []
    for e in homs:
        h = e.payload
        ok, w = _try(lambda h=h: aut_A(h))
        res_param.append((e.id, ok, w))
        if not ok:
            continue
        triples = aut_A(h)
        cg = compute_C(h)
        ok, w = _try(lambda: rho(triples, cg))
        res_rho.append((e.id, ok, w))
        if h.source.order <= 8:
            brute = set(brute_force_aut(h))
            param = {t.perm for t in triples}
            res_sub.append((e.id, param <= brute,
                            tuple(sorted(param - brute))[:2] or None))
            if _is_regular_extension(h):
                res_eq.append((e.id, param == brute,
                               "|param|=%d |brute|=%d" % (len(param), len(brute))))
    out.append(_combine("parametric-aut-valid", res_param))
    out.append(_combine("rho-is-homomorphism", res_rho))
    out.append(_combine("parametric-subset-of-brute", res_sub))
    out.append(_combine("aut-matches-brute-force", res_eq))
    return out


def _scope_cohomology(cat, seed):
    homs = entries_of_kind(cat, "hom")
    out = []
    regulars = [e for e in homs if _is_regular_extension(e.payload)]
    res_rt = []
    seq_results = []
    for e in regulars:
        h = e.payload
        try:
            v = verify_round_trip(h)
            res_rt.append((e.id, v.passed, v.witness))
        except ToolkitError as exc:
            res_rt.append((e.id, False, str(exc)))
        try:
            _, verdicts = verify_exact_sequences(h, seed=seed)
            for v in verdicts:
                seq_results.append((e.id, v))
        except ToolkitError as exc:
            seq_results.append((e.id, Verdict("exact-sequence-run", False, str(exc))))
    out.append(_combine("extraction-round-trip", res_rt))
    out.extend(_agg(seq_results))
    mods = entries_of_kind(cat, "module")
    bij_results = []
    res_sch = []
    for e in mods:
        try:
            _, verdicts = verify_h2_bijection(e.payload)
            for v in verdicts:
                bij_results.append((e.id, v))
        except ToolkitError as exc:
            bij_results.append((e.id, Verdict("h2-matches-congruence", False, str(exc))))
        for i, c in enumerate(enumerate_cocycles(e.payload)):
            ok, w = _try(lambda c=c: extension_from_cocycle(c))
            res_sch.append(("%s[%d]" % (e.id, i), ok, w))
    out.extend(_agg(bij_results))
    out.append(_combine("cocycle-extensions-satisfy-schreier", res_sch))
    return out


def _scope_cli(cat, seed):
    out = []
    res = []
    for eid in sorted(cat):
        e = cat[eid]
        blob = dumps(e.to_json())
        obj = json.loads(blob)
        kind, payload = payload_from_json(obj, lambda r: cat[r].payload)
        ok = kind == e.kind and payload == e.payload and dumps(obj) == blob
        res.append((eid, ok, None))
    out.append(_combine("serialization-round-trip", res))
    res = []
    ent = generate("cyclic-group", (1,))
    res.append(("cyclic-group 1", ent.payload.order == 1, None))
    ent = generate("cyclic-monoid", (3, 3))
    res.append(("cyclic-monoid 3 3", ent.payload.order == 6, None))
    ent = generate("q8", ())
    periods = sorted(cyclic_data(ent.payload, x)[1] for x in ent.payload.elements())
    res.append(("q8", periods == [1, 2, 4, 4, 4, 4, 4, 4], tuple(periods)))
    ent = generate("full-transformation", (3,))
    res.append(("full-transformation 3", ent.payload.order == 27, None))
    out.append(_combine("generator-examples", res))
    return out


_RUNNERS = {
    "monoid-core": _scope_monoid_core,
    "fibration-analysis": _scope_fibration,
    "lax-action": _scope_lax,
    "grothendieck": _scope_groth,
    "cleavage-transport": _scope_cleavage,
    "automorphism": _scope_automorphism,
    "cohomology-extensions": _scope_cohomology,
    "cli-toolkit": _scope_cli,
}


def run_suite(cat=None, scope: str = "all", seed: int = 0) -> list[Verdict]:
    """Run one scope (or all of them) over a catalog dict; returns the
    aggregated verdicts in a stable order."""
    if cat is None:
        cat = as_dict(standard_catalog())
    if scope == "all":
        names = SCOPES
    elif scope in _RUNNERS:
        names = (scope,)
    else:
        raise ShapeError("unknown scope %r (expected all or one of %s)"
                         % (scope, ", ".join(SCOPES)))
    verdicts: list[Verdict] = []
    for name in names:
        verdicts.extend(_RUNNERS[name](cat, seed))
    return verdicts
