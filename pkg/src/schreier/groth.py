"""Total monoid of a lax action: pairs (n, a) with twisted multiplication.

The product is (m, a)(n, b) = (mn, gamma[m][n] * phi_n(a) * b) with all
right-hand products taken in the carrier.  Pairs are encoded densely as
n * |A| + a.  The projection onto the base and the inclusion of the
carrier are packaged with the monoid, and the construction re-audits
associativity and the kernel identification even though the theory
guarantees both.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    ComposabilityError,
    InvalidAction,
    InvalidCell,
    SizeLimit,
    VerificationError,
)
from .fibration import analyze, CartesianReport, is_cartesian_morphism
from .laxaction import LaxAction, LaxHom, TwoCell, validate_lax, validate_two_cell
from .monoid import FiniteMonoid, MonoidHom, compose, kernel, size_limit, units


@dataclass(frozen=True, eq=False)
class GrothMonoid:
    underlying: FiniteMonoid
    projection: MonoidHom
    inclusion: MonoidHom
    action: LaxAction

    def encode(self, n: int, a: int) -> int:
        return n * self.action.carrier.order + a

    def decode(self, idx: int) -> tuple[int, int]:
        return divmod(idx, self.action.carrier.order)


def groth(act: LaxAction) -> GrothMonoid:
    """Build the total monoid of a validated lax action."""
    audit = validate_lax(act)
    if not audit.ok:
        raise InvalidAction("action fails axioms: %s" % ", ".join(audit.failing()),
                            failing=audit.failing())
    n_mon, a_mon = act.acting, act.carrier
    total = n_mon.order * a_mon.order
    if total > size_limit():
        raise SizeLimit("total order %d exceeds bound %d" % (total, size_limit()))
    amul = a_mon.mul
    b = a_mon.order
    table = []
    for m in n_mon.elements():
        for a in a_mon.elements():
            row = []
            for n in n_mon.elements():
                twist = act.gamma[m][n]
                left = amul(twist, act.phi[a][n])
                base = n_mon.mul(m, n) * b
                for bb in a_mon.elements():
                    row.append(base + amul(left, bb))
            table.append(tuple(row))
    names = None
    if n_mon.names is not None and a_mon.names is not None:
        names = tuple("(%s,%s)" % (n_mon.names[m], a_mon.names[a])
                      for m in n_mon.elements() for a in a_mon.elements())
    underlying = FiniteMonoid(tuple(table), n_mon.identity * b + a_mon.identity, names)
    projection = MonoidHom(underlying, n_mon, tuple(i // b for i in range(total)))
    inclusion = MonoidHom(a_mon, underlying,
                          tuple(n_mon.identity * b + a for a in a_mon.elements()))
    g = GrothMonoid(underlying, projection, inclusion, act)
    ker = set(kernel(projection).elements)
    img = set(inclusion.map)
    if ker != img:
        raise VerificationError("projection kernel differs from the carrier image")
    if len(img) != a_mon.order:
        raise VerificationError("carrier inclusion is not injective")
    return g


def groth_projection_report(g: GrothMonoid) -> CartesianReport:
    """Analyze the projection and re-audit the facts the theory promises:
    it is a prefibration, its precartesian elements are exactly the pairs
    with invertible carrier part, and pseudo actions give fibrations."""
    report = analyze(g.projection)
    if not report.is_prefibration:
        raise VerificationError("projection of a total monoid must be a prefibration")
    unit_set = set(units(g.action.carrier).elements)
    expected = frozenset(g.encode(m, a)
                         for m in g.action.acting.elements() for a in unit_set)
    if report.pcar != expected:
        raise VerificationError("precartesian set is not the unit-part pairs",
                                witness=tuple(sorted(report.pcar ^ expected))[:3])
    if validate_lax(g.action).is_pseudo and not report.is_fibration:
        raise VerificationError("pseudo action must give a fibration")
    return report


def groth_on_hom(f: LaxHom, source: GrothMonoid | None = None,
                 target: GrothMonoid | None = None) -> MonoidHom:
    """Total-monoid map of a lax hom: (m, a) -> (m, tau[m] * alpha(a)).

    The result is re-audited as a homomorphism by construction and checked
    to commute with the two projections.
    """
    gs = source if source is not None else groth(f.source)
    gt = target if target is not None else groth(f.target)
    if gs.action != f.source or gt.action != f.target:
        raise ComposabilityError("materialized monoids do not match the lax hom's actions")
    amul = f.target.carrier.mul
    mapping = []
    for idx in range(gs.underlying.order):
        m, a = gs.decode(idx)
        mapping.append(gt.encode(m, amul(f.tau[m], f.alpha.map[a])))
    h = MonoidHom(gs.underlying, gt.underlying, tuple(mapping))
    if compose(gt.projection, h).map != gs.projection.map:
        raise VerificationError("total-monoid map does not live over the base")
    return h


def groth_on_cell(cell: TwoCell, source: GrothMonoid | None = None,
                  target: GrothMonoid | None = None) -> int:
    """Element (unit, c) of the target total monoid attached to a 2-cell.

    Validates the cell, then certifies exhaustively that the element
    conjugates one total-monoid map into the other; returns its index.
    """
    audit = validate_two_cell(cell)
    if not audit.ok:
        bad = next(v for v in audit.verdicts if not v.passed)
        raise InvalidCell("cell fails %s" % bad.key, witness=bad.witness)
    f, g = cell.source, cell.target
    gs = source if source is not None else groth(f.source)
    gt = target if target is not None else groth(f.target)
    fbar = groth_on_hom(f, gs, gt)
    gbar = groth_on_hom(g, gs, gt)
    elt = gt.encode(f.source.acting.identity, cell.c)
    t = gt.underlying.table
    for x in range(gs.underlying.order):
        if t[elt][fbar.map[x]] != t[gbar.map[x]][elt]:
            raise VerificationError("cell element fails to conjugate the maps",
                                    witness=(x,))
    return elt


def groth_is_over_base(g: GrothMonoid, other: GrothMonoid, h: MonoidHom) -> bool:
    """Convenience: does h commute with the projections and stay cartesian?"""
    return is_cartesian_morphism(h, g.projection, other.projection)
