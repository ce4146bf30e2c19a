"""Kernel-preserving automorphisms of a prefibration's source monoid.

The automorphisms considered here permute the source, carry the kernel
onto itself, and push fibers around along an automorphism of the base.
Relative to a cleavage they are parametrized by triples: an automorphism
theta of the kernel, an automorphism eta of the base, and a pointed
family xi of kernel units, subject to two compatibility identities
against the extracted action.  The group is computed both through that
parametrization and, for small monoids, by brute force over raw
permutations so the two can be compared.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import NamedTuple

from .cleavage import Cleavage, canonical_cleavage, extract_action
from .errors import (
    NotCartesian,
    NotKernelPreserving,
    SizeLimit,
    VerificationError,
)
from .fibration import analyze
from .monoid import (
    FiniteMonoid,
    MonoidHom,
    automorphism_group,
    kernel,
    permutations_fixing_identity,
    units,
)

_BRUTE_LIMIT = 8


def _materialize(cl: Cleavage, theta, eta, xi) -> tuple[int, ...]:
    """Permutation of the source determined by a parameter triple:
    kappa(n) * a  ->  kappa(eta(n)) * xi(n) * theta(a)."""
    src = cl.hom.source
    ker = cl.kernel
    out = [0] * src.order
    for x in src.elements():
        n, a = cl.decompose(x)
        lift = src.mul(cl.kappa[eta[n]], ker.elements[xi[n]])
        out[x] = src.mul(lift, ker.elements[theta[a]])
    return tuple(out)


@dataclass(frozen=True, eq=False)
class AutTriple:
    """One parametrized automorphism: (theta, eta, xi) over a cleavage."""

    theta: tuple[int, ...]
    eta: tuple[int, ...]
    xi: tuple[int, ...]
    cleavage: Cleavage = field(repr=False)

    @cached_property
    def perm(self) -> tuple[int, ...]:
        return _materialize(self.cleavage, self.theta, self.eta, self.xi)

    @cached_property
    def hom(self) -> MonoidHom:
        src = self.cleavage.hom.source
        return MonoidHom(src, src, self.perm)

    @property
    def pair(self) -> tuple[tuple[int, ...], tuple[int, ...]]:
        return (self.theta, self.eta)


def _xi_candidates(act, theta, eta, unit_idx):
    """Per base element, units u with phi_{eta(n)}(theta(a)) * u =
    u * theta(phi_n(a)) for every kernel element a."""
    amul = act.carrier.mul
    cand = {}
    for n in act.acting.elements():
        ok = [u for u in unit_idx
              if all(amul(act.phi[theta[a]][eta[n]], u) == amul(u, theta[act.phi[a][n]])
                     for a in act.carrier.elements())]
        cand[n] = ok
    return cand


def _xi_assignments(act, theta, eta, cand):
    """Backtracking sweep of pointed unit families satisfying the twist
    identity gamma_{eta m, eta n} phi_{eta n}(xi m) xi n = xi(mn) theta(gamma_{m,n})."""
    n_mon = act.acting
    amul = act.carrier.mul
    one_n = n_mon.identity
    positions = [n for n in n_mon.elements() if n != one_n]
    step_of = {one_n: -1}
    for j, n in enumerate(positions):
        step_of[n] = j
    sched = [[] for _ in positions]
    for m in n_mon.elements():
        for n in n_mon.elements():
            mn = n_mon.mul(m, n)
            j = max(step_of[m], step_of[n], step_of[mn])
            if j >= 0:
                sched[j].append((m, n, mn))
    xi = [None] * n_mon.order
    xi[one_n] = act.carrier.identity
    results = []

    def twist_ok(m, n, mn):
        lhs = amul(amul(act.gamma[eta[m]][eta[n]], act.phi[xi[m]][eta[n]]), xi[n])
        return lhs == amul(xi[mn], theta[act.gamma[m][n]])

    def walk(j):
        if j == len(positions):
            results.append(tuple(xi))
            return
        n = positions[j]
        for u in cand[n]:
            xi[n] = u
            if all(twist_ok(*trip) for trip in sched[j]):
                walk(j + 1)
        xi[n] = None

    walk(0)
    return results


def aut_A(h: MonoidHom, cleavage: Cleavage | None = None) -> tuple[AutTriple, ...]:
    """The group of kernel-preserving automorphisms of h's source lying
    over automorphisms of the base, via the triple parametrization.

    Every returned triple is re-audited: the materialized map must be a
    multiplicative bijection, restrict to theta on the kernel, descend to
    eta on the base, and carry precartesian elements onto precartesian
    elements; the materialized set must be closed under composition and
    contain the identity.  Sorted by materialized permutation.
    """
    cl = cleavage if cleavage is not None else canonical_cleavage(h)
    act = extract_action(cl)
    a_mon, n_mon = act.carrier, act.acting
    unit_idx = sorted(units(a_mon).elements)
    triples = []
    for theta in automorphism_group(a_mon):
        for eta in automorphism_group(n_mon):
            cand = _xi_candidates(act, theta, eta, unit_idx)
            if any(not cand[n] for n in n_mon.elements()):
                continue
            for xi in _xi_assignments(act, theta, eta, cand):
                triples.append(AutTriple(theta, eta, xi, cl))
    for t in triples:
        _audit_triple(t, h)
    perms = [t.perm for t in triples]
    pset = set(perms)
    if len(pset) != len(perms):
        raise VerificationError("distinct triples materialized the same map")
    if tuple(range(h.source.order)) not in pset:
        raise VerificationError("identity automorphism missing")
    for p in perms:
        for q in perms:
            if tuple(p[v] for v in q) not in pset:
                raise VerificationError("automorphism set not closed under composition")
    return tuple(sorted(triples, key=lambda t: t.perm))


def _audit_triple(t: AutTriple, h: MonoidHom) -> None:
    psi = t.hom
    if not psi.is_bijective():
        raise VerificationError("materialized map is not a bijection")
    theta, eta = restrict_and_descend(t.perm, h)
    if theta.map != t.theta or eta.map != t.eta:
        raise VerificationError("materialized map restricts to the wrong pair",
                                witness=(theta.map, eta.map))
    pcar = analyze(h).pcar
    moved = {t.perm[x] for x in pcar}
    if moved != pcar:
        raise NotCartesian("automorphism does not preserve precartesian elements")


def restrict_and_descend(perm, h: MonoidHom) -> tuple[MonoidHom, MonoidHom]:
    """Split a source permutation into its kernel restriction and the base
    map it induces on fibers.

    Raises NotKernelPreserving if the kernel is not carried into itself,
    VerificationError if two elements of one fiber land in different
    fibers or either induced map fails to be an automorphism.  The input
    map itself is not assumed multiplicative; only the two induced maps
    are audited.
    """
    ker = kernel(h)
    for k in ker.elements:
        if perm[k] not in ker:
            raise NotKernelPreserving("kernel element %d escapes the kernel" % k)
    a_mon = ker.monoid
    theta = MonoidHom(a_mon, a_mon,
                      tuple(ker.index_of(perm[k]) for k in ker.elements))
    if not theta.is_bijective():
        raise VerificationError("kernel restriction is not a bijection")
    n_mon = h.target
    eta_map = [None] * n_mon.order
    for x in h.source.elements():
        n, n2 = h.map[x], h.map[perm[x]]
        if eta_map[n] is None:
            eta_map[n] = n2
        elif eta_map[n] != n2:
            raise VerificationError("map does not descend to the base", witness=(n,))
    if any(v is None for v in eta_map):
        raise VerificationError("some base element has an empty fiber")
    eta = MonoidHom(n_mon, n_mon, tuple(eta_map))
    if not eta.is_bijective():
        raise VerificationError("descended base map is not a bijection")
    return theta, eta


def brute_force_aut(h: MonoidHom) -> tuple[tuple[int, ...], ...]:
    """Oracle: all kernel-preserving automorphisms over base automorphisms,
    found by filtering raw permutations of the source.  Only for small
    monoids; quadratic-factorial and intentionally naive."""
    src = h.source
    if src.order > _BRUTE_LIMIT:
        raise SizeLimit("brute-force automorphism scan capped at order %d" % _BRUTE_LIMIT)
    ker_set = frozenset(kernel(h).elements)
    t = src.table
    found = []
    for perm in permutations_fixing_identity(src.order, src.identity):
        if any(perm[t[x][y]] != t[perm[x]][perm[y]]
               for x in src.elements() for y in src.elements()):
            continue
        if {perm[k] for k in ker_set} != ker_set:
            continue
        try:
            restrict_and_descend(perm, h)
        except (NotKernelPreserving, VerificationError):
            continue
        found.append(perm)
    return tuple(sorted(found))


class CGroup(NamedTuple):
    """Pairs (theta, eta) compatible with the action up to a unit, with
    the least witnessing unit per base element."""

    pairs: tuple
    witnesses: dict


def compute_C(h: MonoidHom, cleavage: Cleavage | None = None) -> CGroup:
    """All (theta, eta) in Aut(kernel) x Aut(base) such that for every
    base element n some kernel unit u intertwines phi_{eta(n)} . theta
    with theta . phi_n.  Witness search is independent per n; the least
    unit is recorded.  The pair set is re-audited to be a subgroup."""
    cl = cleavage if cleavage is not None else canonical_cleavage(h)
    act = extract_action(cl)
    a_mon, n_mon = act.carrier, act.acting
    unit_idx = sorted(units(a_mon).elements)
    pairs = []
    witnesses = {}
    for theta in automorphism_group(a_mon):
        for eta in automorphism_group(n_mon):
            cand = _xi_candidates(act, theta, eta, unit_idx)
            if any(not cand[n] for n in n_mon.elements()):
                continue
            pairs.append((theta, eta))
            witnesses[(theta, eta)] = tuple(cand[n][0] for n in n_mon.elements())
    pset = set(pairs)
    ident = (tuple(range(a_mon.order)), tuple(range(n_mon.order)))
    if ident not in pset:
        raise VerificationError("compatible pairs miss the identity pair")
    for p in pairs:
        for q in pairs:
            comp = (tuple(p[0][v] for v in q[0]), tuple(p[1][v] for v in q[1]))
            if comp not in pset:
                raise VerificationError("compatible pairs not closed under composition")
    return CGroup(tuple(sorted(pairs)), witnesses)


def rho(triples, c_group: CGroup | None = None):
    """Project parametrized automorphisms to their (theta, eta) pairs.

    Re-derives each pair from the materialized permutation, checks the
    assignment is multiplicative on composites, and (when given) checks
    the image lies in the compatible-pair group.  Returns the pairs in
    the order the triples were given.
    """
    out = []
    for t in triples:
        h = t.cleavage.hom
        theta, eta = restrict_and_descend(t.perm, h)
        if (theta.map, eta.map) != t.pair:
            raise VerificationError("pair mismatch on re-derivation")
        if c_group is not None and t.pair not in set(c_group.pairs):
            raise VerificationError("projected pair escapes the compatible-pair group")
        out.append(t.pair)
    for s in triples:
        for t in triples:
            comp_perm = tuple(s.perm[v] for v in t.perm)
            h = s.cleavage.hom
            theta, eta = restrict_and_descend(comp_perm, h)
            want = (tuple(s.theta[v] for v in t.theta),
                    tuple(s.eta[v] for v in t.eta))
            if (theta.map, eta.map) != want:
                raise VerificationError("projection is not multiplicative")
    return tuple(out)
