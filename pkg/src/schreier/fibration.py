"""Precartesian / cartesian element calculus for monoid homomorphisms.

All predicates are definitional scans over the finite data; they double as
their own oracles.  ``analyze`` packages the full classification of a
homomorphism and the derived prefibration / fibration verdicts.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import NamedTuple

from .errors import ComposabilityError, TriangleError, VerificationError
from .monoid import MonoidHom, compose, kernel, units
from .verdict import Verdict


def fiber_index(h: MonoidHom) -> dict[int, tuple[int, ...]]:
    """Map each target element to the sorted tuple of its preimages."""
    fibers: dict[int, list[int]] = {n: [] for n in h.target.elements()}
    for x in h.source.elements():
        fibers[h.map[x]].append(x)
    return {n: tuple(sorted(v)) for n, v in fibers.items()}


def is_precartesian(h: MonoidHom, x: int) -> bool:
    """Every z in the fiber of h(x) factors as z = x*y for exactly one
    kernel element y."""
    ker = kernel(h).elements
    t = h.source.table
    row = t[x]
    target = h.map[x]
    for z in h.source.elements():
        if h.map[z] != target:
            continue
        count = 0
        for y in ker:
            if row[y] == z:
                count += 1
                if count > 1:
                    return False
        if count != 1:
            return False
    return True


def is_cartesian(h: MonoidHom, x: int) -> bool:
    """Definitional check of the two cartesian conditions.

    i)  whenever h(z) = h(x)*v there is y with z = x*y and h(y) = v;
    ii) x*y1 = x*y2 and h(y1) = h(y2) force y1 = y2.
    """
    src, tgt = h.source, h.target
    row = src.table[x]
    hx = h.map[x]
    for z in src.elements():
        hz = h.map[z]
        for v in tgt.elements():
            if tgt.table[hx][v] != hz:
                continue
            if not any(row[y] == z and h.map[y] == v for y in src.elements()):
                return False
    seen: dict[tuple[int, int], int] = {}
    for y in src.elements():
        key = (row[y], h.map[y])
        if key in seen and seen[key] != y:
            return False
        seen[key] = y
    return True


@dataclass(frozen=True, eq=False)
class CartesianReport:
    """Full classification of a homomorphism's elements."""

    hom: MonoidHom
    pcar: frozenset
    car: frozenset
    is_prefibration: bool
    is_fibration: bool
    fibers: dict

    def __post_init__(self):
        # cheap re-audit of facts the theory guarantees
        if not self.car <= self.pcar:
            raise VerificationError("cartesian element outside the precartesian set")
        if not frozenset(units(self.hom.source).elements) <= self.car:
            raise VerificationError("invertible element not cartesian")
        if self.is_fibration and self.car != self.pcar:
            raise VerificationError("fibration with car != pcar")
        if self.is_fibration and not self.is_prefibration:
            raise VerificationError("fibration that is not a prefibration")

    def as_json(self):
        return {
            "prefibration": self.is_prefibration,
            "fibration": self.is_fibration,
            "pcar": sorted(self.pcar),
            "car": sorted(self.car),
            "kernel": list(kernel(self.hom).elements),
            "fibers": {str(n): list(v) for n, v in sorted(self.fibers.items())},
        }


@lru_cache(maxsize=None)
def analyze(h: MonoidHom) -> CartesianReport:
    """Classify every element of the source and derive the verdicts."""
    fibers = fiber_index(h)
    pcar = frozenset(x for x in h.source.elements() if is_precartesian(h, x))
    car = frozenset(x for x in pcar if is_cartesian(h, x))
    covered_p = {h.map[x] for x in pcar}
    covered_c = {h.map[x] for x in car}
    every = set(h.target.elements())
    return CartesianReport(
        hom=h,
        pcar=pcar,
        car=car,
        is_prefibration=covered_p == every,
        is_fibration=covered_c == every,
        fibers=fibers,
    )


def weak_cancellation_holds(h: MonoidHom, report: CartesianReport | None = None):
    """x precartesian, u, v in the kernel, x*u = x*v imply u = v.
    Returns None or a witness (x, u, v)."""
    rep = report or analyze(h)
    ker = kernel(h).elements
    t = h.source.table
    for x in rep.pcar:
        row = t[x]
        seen: dict[int, int] = {}
        for u in ker:
            z = row[u]
            if z in seen and seen[z] != u:
                return (x, seen[z], u)
            seen[z] = u
    return None


def check_closure_lemmas(h: MonoidHom, report: CartesianReport | None = None) -> list[Verdict]:
    """Machine-check the closure facts for one homomorphism.

    Emits one verdict per fact; vacuous hypotheses pass with a note.
    """
    rep = report or analyze(h)
    src = h.source
    t = src.table
    verdicts = []

    bad = next(((x, y) for x in sorted(rep.car) for y in sorted(rep.car)
                if t[x][y] not in rep.car), None)
    verdicts.append(Verdict("car-product-closed", bad is None, bad))

    bad = next(((x, y) for x in sorted(rep.car) for y in sorted(rep.pcar)
                if t[x][y] not in rep.pcar), None)
    verdicts.append(Verdict("car-times-pcar-in-pcar", bad is None, bad))

    if rep.is_prefibration:
        open_pair = next(((x, y) for x in sorted(rep.pcar) for y in sorted(rep.pcar)
                          if t[x][y] not in rep.pcar), None)
        closed = open_pair is None
        ok = closed == rep.is_fibration
        detail = ("pcar product-closed" if closed else
                  "pcar not product-closed at %s" % (open_pair,))
        verdicts.append(Verdict("prefibration-closure-iff-fibration", ok,
                                open_pair, detail))
    else:
        verdicts.append(Verdict("prefibration-closure-iff-fibration", True,
                                None, "vacuous: not a prefibration"))

    ker = kernel(h)
    ok = True
    witness = None
    for x in sorted(rep.pcar):
        for y in sorted(rep.pcar):
            if h.map[x] != h.map[y]:
                continue
            connectors = [u for u in ker.elements if t[x][u] == y]
            if len(connectors) != 1:
                ok, witness = False, (x, y, len(connectors))
                break
            u = connectors[0]
            if not (src.is_unit(u) and src.inverse(u) in ker):
                ok, witness = False, (x, y, u)
                break
        if not ok:
            break
    verdicts.append(Verdict("pcar-connector-unique-invertible", ok, witness))

    w = weak_cancellation_holds(h, rep)
    verdicts.append(Verdict("pcar-weak-cancellation", w is None, w))

    surjective = len(h.image) == h.target.order
    if surjective and rep.is_prefibration and ker.monoid.is_group():
        all_pcar = rep.pcar == frozenset(src.elements())
        verdicts.append(Verdict("group-kernel-gives-all-pcar", all_pcar and rep.is_fibration,
                                None if all_pcar else tuple(sorted(set(src.elements()) - rep.pcar))[:1]))
    else:
        verdicts.append(Verdict("group-kernel-gives-all-pcar", True, None,
                                "vacuous: hypotheses not met"))

    if surjective and rep.pcar == frozenset(src.elements()):
        good = ker.monoid.is_group() and rep.is_fibration
        verdicts.append(Verdict("all-pcar-gives-group-kernel", good))
    else:
        verdicts.append(Verdict("all-pcar-gives-group-kernel", True, None,
                                "vacuous: hypotheses not met"))

    return verdicts


class ComposeCheck(NamedTuple):
    report: CartesianReport
    verdicts: list


def compose_check(rho: MonoidHom, sigma: MonoidHom) -> ComposeCheck:
    """Analyze sigma after rho and check the composition closure facts."""
    if rho.target != sigma.source:
        raise ComposabilityError("rho target does not match sigma source")
    rep_rho = analyze(rho)
    rep_sigma = analyze(sigma)
    comp = analyze(compose(sigma, rho))
    verdicts = []
    if rep_rho.is_fibration and rep_sigma.is_prefibration:
        verdicts.append(Verdict("composite-prefibration-when-expected",
                                comp.is_prefibration))
    else:
        verdicts.append(Verdict("composite-prefibration-when-expected", True, None,
                                "vacuous: hypotheses not met"))
    if rep_rho.is_fibration and rep_sigma.is_fibration:
        verdicts.append(Verdict("composite-fibration-when-expected", comp.is_fibration))
    else:
        verdicts.append(Verdict("composite-fibration-when-expected", True, None,
                                "vacuous: hypotheses not met"))
    return ComposeCheck(comp, verdicts)


def is_cartesian_morphism(alpha: MonoidHom, sigma: MonoidHom, sigma_prime: MonoidHom) -> bool:
    """Does alpha send precartesian elements of sigma into those of
    sigma_prime?  Requires the evident triangle to commute."""
    if alpha.source != sigma.source or alpha.target != sigma_prime.source:
        raise ComposabilityError("alpha does not connect the two projections")
    if sigma.target != sigma_prime.target:
        raise ComposabilityError("projections have different bases")
    if compose(sigma_prime, alpha).map != sigma.map:
        raise TriangleError("alpha does not commute with the projections")
    rep = analyze(sigma)
    rep_p = analyze(sigma_prime)
    return all(alpha.map[x] in rep_p.pcar for x in rep.pcar)
