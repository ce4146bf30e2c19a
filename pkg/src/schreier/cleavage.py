"""Cleavages of prefibrations and the action calculus they induce.

A cleavage picks one precartesian element kappa(n) above each base
element, normalized so the base unit lifts to the unit.  Every source
element then factors uniquely as kappa(sigma(x)) * (kernel element); the
kernel part is the cocleavage xi.  From (kappa, xi) one reads off a lax
action of the base on the kernel, and different cleavages give actions
related by a pointed family of kernel units.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property

from .errors import (
    ComposabilityError,
    NotPrefibration,
    ShapeError,
    TriangleError,
    VerificationError,
)
from .fibration import analyze, is_cartesian_morphism
from .groth import GrothMonoid, groth
from .laxaction import LaxAction, LaxHom, validate_lax
from .monoid import FiniteMonoid, MonoidHom, Submonoid, compose, kernel, units
from .verdict import Verdict


def pointed_unit_maps(base: FiniteMonoid, unit_elements, unit_identity: int):
    """All maps from the base into the given unit list, pinning the base
    identity to ``unit_identity``.  Yielded in lexicographic order over
    the non-identity positions."""
    positions = [n for n in base.elements() if n != base.identity]
    for combo in itertools.product(sorted(unit_elements), repeat=len(positions)):
        out = [unit_identity] * base.order
        for pos, val in zip(positions, combo):
            out[pos] = val
        yield tuple(out)


@dataclass(frozen=True, eq=False)
class Cleavage:
    """A choice of precartesian lift above each base element.

    kappa[n] is the chosen lift; xi[x] is the dense kernel index of the
    unique kernel element with x = kappa[sigma(x)] * it.
    """

    hom: MonoidHom
    kappa: tuple[int, ...]
    xi: tuple[int, ...] = field(default=())

    def __post_init__(self):
        object.__setattr__(self, "kappa", tuple(int(v) for v in self.kappa))
        h = self.hom
        report = analyze(h)
        if not report.is_prefibration:
            raise NotPrefibration("cleavages only exist over prefibrations")
        if len(self.kappa) != h.target.order:
            raise ShapeError("kappa must list one lift per base element")
        for n, x in enumerate(self.kappa):
            if h.map[x] != n:
                raise ShapeError("kappa[%d] = %d is not in the fiber" % (n, x))
            if x not in report.pcar:
                raise ShapeError("kappa[%d] = %d is not precartesian" % (n, x))
        if self.kappa[h.target.identity] != h.source.identity:
            raise ShapeError("the base unit must lift to the source unit")
        xi = self._compute_xi()
        object.__setattr__(self, "xi", xi)

    def _compute_xi(self) -> tuple[int, ...]:
        h = self.hom
        t = h.source.table
        ker = self.kernel.elements
        xi = []
        for x in h.source.elements():
            lift = self.kappa[h.map[x]]
            hits = [i for i, k in enumerate(ker) if t[lift][k] == x]
            if len(hits) != 1:
                raise VerificationError(
                    "factorization through the lift is not unique", witness=(x, len(hits)))
            xi.append(hits[0])
        return tuple(xi)

    @cached_property
    def kernel(self) -> Submonoid:
        return kernel(self.hom)

    @cached_property
    def kernel_monoid(self) -> FiniteMonoid:
        return self.kernel.monoid

    def kernel_element(self, dense_index: int) -> int:
        """Parent-monoid element for a dense kernel index."""
        return self.kernel.elements[dense_index]

    def decompose(self, x: int) -> tuple[int, int]:
        """x as (base element, dense kernel index)."""
        return self.hom.map[x], self.xi[x]


def canonical_cleavage(h: MonoidHom) -> Cleavage:
    """Least-index precartesian lift per fiber, unit lifted to unit."""
    report = analyze(h)
    if not report.is_prefibration:
        raise NotPrefibration("no precartesian element above some base element")
    kappa = []
    for n in h.target.elements():
        if n == h.target.identity:
            kappa.append(h.source.identity)
        else:
            kappa.append(min(x for x in report.fibers[n] if x in report.pcar))
    return Cleavage(h, tuple(kappa))


def cleavage_from_kappa(h: MonoidHom, kappa) -> Cleavage:
    return Cleavage(h, tuple(kappa))


def enumerate_cleavages(h: MonoidHom, limit: int | None = None) -> list[Cleavage]:
    """All cleavages of h, as unit twists of the canonical one.

    Two lifts above the same base element differ by a unique invertible
    kernel element, so the cleavage set is swept exactly by multiplying
    the canonical lift with every pointed family of kernel units; the
    count is |kernel units| ** (base order - 1) when below the limit.
    """
    base_cl = canonical_cleavage(h)
    ker = base_cl.kernel
    a_mon = base_cl.kernel_monoid
    unit_idx = sorted(units(a_mon).elements)
    src = h.source
    out = []
    positions = [n for n in h.target.elements() if n != h.target.identity]
    for combo in itertools.product(unit_idx, repeat=len(positions)):
        kappa = list(base_cl.kappa)
        for pos, u in zip(positions, combo):
            kappa[pos] = src.mul(base_cl.kappa[pos], ker.elements[u])
        out.append(Cleavage(h, tuple(kappa)))
        if limit is not None and len(out) >= limit:
            break
    return out


def extract_action(cl: Cleavage) -> LaxAction:
    """Read the induced lax action of the base on the kernel off a cleavage.

    phi_n(a) is the cocleavage of a * kappa(n); the twist for (m, n) is the
    cocleavage of kappa(m) * kappa(n).  The result is re-audited against
    the lax axioms, and is pseudo exactly when the map is a fibration.
    """
    h = cl.hom
    src = h.source
    ker = cl.kernel
    a_mon = cl.kernel_monoid
    n_mon = h.target
    phi = tuple(
        tuple(cl.xi[src.mul(ker.elements[a], cl.kappa[n])] for n in n_mon.elements())
        for a in range(a_mon.order))
    gamma = tuple(
        tuple(cl.xi[src.mul(cl.kappa[m], cl.kappa[n])] for n in n_mon.elements())
        for m in n_mon.elements())
    act = LaxAction(n_mon, a_mon, phi, gamma)
    audit = validate_lax(act)
    if not audit.ok:
        raise VerificationError("extracted action fails axioms: %s" % ", ".join(audit.failing()))
    fib = analyze(h).is_fibration
    if audit.is_pseudo != fib:
        raise VerificationError("pseudo/fibration dichotomy violated",
                                witness=(audit.is_pseudo, fib))
    return act


def reconstruct(cl: Cleavage) -> MonoidHom:
    """Isomorphism from the total monoid of the extracted action back to
    the source, (m, a) -> kappa(m) * a, checked to be bijective, over the
    base, and cartesian."""
    h = cl.hom
    act = extract_action(cl)
    g = groth(act)
    src = h.source
    ker = cl.kernel
    mapping = []
    for idx in range(g.underlying.order):
        m, a = g.decode(idx)
        mapping.append(src.mul(cl.kappa[m], ker.elements[a]))
    bar = MonoidHom(g.underlying, src, tuple(mapping))
    if not bar.is_bijective():
        raise VerificationError("reconstruction is not bijective")
    if compose(h, bar).map != g.projection.map:
        raise VerificationError("reconstruction does not live over the base")
    if not is_cartesian_morphism(bar, g.projection, h):
        raise VerificationError("reconstruction is not cartesian")
    return bar


def extract_lax_hom(alpha_bar: MonoidHom, cl: Cleavage, cl_prime: Cleavage) -> LaxHom:
    """Lax hom induced between extracted actions by a map over the base.

    alpha is the kernel restriction of alpha_bar; tau[n] is the cocleavage
    of alpha_bar(kappa(n)) in the target cleavage.  Construction re-audits
    the lax-hom identities.
    """
    h, hp = cl.hom, cl_prime.hom
    if alpha_bar.source != h.source or alpha_bar.target != hp.source:
        raise ComposabilityError("map does not connect the two prefibrations")
    if h.target != hp.target:
        raise ComposabilityError("prefibrations have different bases")
    if compose(hp, alpha_bar).map != h.map:
        raise TriangleError("map does not commute with the projections")
    ker, kerp = cl.kernel, cl_prime.kernel
    alpha = MonoidHom(cl.kernel_monoid, cl_prime.kernel_monoid,
                      tuple(kerp.index_of(alpha_bar.map[ker.elements[a]])
                            for a in range(ker.order)))
    tau = tuple(cl_prime.xi[alpha_bar.map[cl.kappa[n]]] for n in h.target.elements())
    return LaxHom(extract_action(cl), extract_action(cl_prime), alpha, tau)


@dataclass(frozen=True, eq=False)
class CleavageChange:
    """Two cleavages of one prefibration and the pointed family of kernel
    units eta relating their lifts: new kappa(n) = old kappa(n) * eta(n)."""

    source: Cleavage
    target: Cleavage
    eta: tuple[int, ...]


def cleavage_change(frm: Cleavage, to: Cleavage) -> CleavageChange:
    if frm.hom != to.hom:
        raise ComposabilityError("cleavage change needs a common prefibration")
    src = frm.hom.source
    a_mon = frm.kernel_monoid
    eta = []
    for n in frm.hom.target.elements():
        u = frm.xi[to.kappa[n]]
        if src.mul(frm.kappa[n], frm.kernel.elements[u]) != to.kappa[n]:
            raise VerificationError("cocleavage factorization failed", witness=(n,))
        if not a_mon.is_unit(u):
            raise VerificationError("lifts differ by a non-invertible kernel element",
                                    witness=(n, u))
        eta.append(u)
    if eta[frm.hom.target.identity] != a_mon.identity:
        raise VerificationError("eta must be pointed")
    return CleavageChange(frm, to, tuple(eta))


def transport(change: CleavageChange):
    """Extract the action for both cleavages and verify, cell by cell, the
    unit-conjugation formulas relating them.  Returns the two actions with
    the verdicts."""
    act = extract_action(change.source)
    act_t = extract_action(change.target)
    a_mon = act.carrier
    amul = a_mon.mul
    inv = a_mon.inverse
    eta = change.eta
    n_mon = act.acting
    w = None
    for n in n_mon.elements():
        for a in a_mon.elements():
            want = amul(amul(inv(eta[n]), act.phi[a][n]), eta[n])
            if act_t.phi[a][n] != want:
                w = (n, a)
                break
        if w:
            break
    verdicts = [Verdict("conjugation-transport", w is None, w)]
    w = None
    for m in n_mon.elements():
        for n in n_mon.elements():
            mn = n_mon.mul(m, n)
            want = amul(amul(amul(inv(eta[mn]), act.gamma[m][n]),
                             act.phi[eta[m]][n]), eta[n])
            if act_t.gamma[m][n] != want:
                w = (m, n)
                break
        if w:
            break
    verdicts.append(Verdict("cocycle-transport", w is None, w))
    return act, act_t, verdicts


def transport_tau(alpha_bar: MonoidHom, cl: Cleavage, cl_t: Cleavage,
                  cl_prime: Cleavage, cl_prime_t: Cleavage) -> Verdict:
    """How the comparison family tau of a map over the base changes when
    both cleavages move: new tau(n) = eta'(n)^-1 * tau(n) * alpha(eta(n))."""
    eta = cleavage_change(cl, cl_t).eta
    eta_p = cleavage_change(cl_prime, cl_prime_t).eta
    f = extract_lax_hom(alpha_bar, cl, cl_prime)
    f_t = extract_lax_hom(alpha_bar, cl_t, cl_prime_t)
    ap = cl_prime.kernel_monoid
    amul, inv = ap.mul, ap.inverse
    w = None
    for n in cl.hom.target.elements():
        want = amul(amul(inv(eta_p[n]), f.tau[n]), f.alpha.map[eta[n]])
        if f_t.tau[n] != want:
            w = (n,)
            break
    return Verdict("tau-transport", w is None, w)


def matches_up_to_unit_twist(act: LaxAction, other: LaxAction):
    """Least pointed unit family eta relating two actions on the same
    carrier and base by both transport rules, or None.

    The rules solved for are other.phi(a, n) = eta(n)^-1 * phi(a, n) * eta(n)
    and other.gamma(m, n) = eta(mn)^-1 * gamma(m, n) * phi(eta(m), n) * eta(n).
    """
    if other.acting != act.acting or other.carrier != act.carrier:
        raise ComposabilityError("actions do not share a base and carrier")
    a_mon, n_mon = act.carrier, act.acting
    amul, inv = a_mon.mul, a_mon.inverse
    unit_idx = sorted(units(a_mon).elements)
    for eta in pointed_unit_maps(n_mon, unit_idx, a_mon.identity):
        ok = all(
            other.phi[a][n] == amul(inv(eta[n]), amul(act.phi[a][n], eta[n]))
            for a in a_mon.elements() for n in n_mon.elements())
        if not ok:
            continue
        ok = all(
            other.gamma[m][n] == amul(
                amul(inv(eta[n_mon.mul(m, n)]), act.gamma[m][n]),
                amul(act.phi[eta[m]][n], eta[n]))
            for m in n_mon.elements() for n in n_mon.elements())
        if ok:
            return eta
    return None
