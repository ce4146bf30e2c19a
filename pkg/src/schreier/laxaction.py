"""Lax actions of a monoid on a monoid, their morphisms, and 2-cells.

A lax action of N on A is a family of endomorphisms phi_n of A together
with twisting values gamma[m][n] in A measuring how far phi fails to be a
genuine right action.  ``phi[a][n]`` stores the action of n on a;
``gamma[m][n]`` the twist for the pair (m, n).  When every gamma value is
invertible the action is called pseudo.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from .errors import (
    ComposabilityError,
    InvalidLaxHom,
    NotAnAction,
    ShapeError,
)
from .monoid import FiniteMonoid, MonoidHom, compose, units
from .verdict import Verdict


@dataclass(frozen=True)
class LaxAction:
    """Shape-checked container; run validate_lax for the axiom audit."""

    acting: FiniteMonoid
    carrier: FiniteMonoid
    phi: tuple[tuple[int, ...], ...]
    gamma: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        phi = tuple(tuple(int(v) for v in row) for row in self.phi)
        gamma = tuple(tuple(int(v) for v in row) for row in self.gamma)
        object.__setattr__(self, "phi", phi)
        object.__setattr__(self, "gamma", gamma)
        na, nn = self.carrier.order, self.acting.order
        if len(phi) != na or any(len(r) != nn for r in phi):
            raise ShapeError("phi must be carrier-order x acting-order")
        if len(gamma) != nn or any(len(r) != nn for r in gamma):
            raise ShapeError("gamma must be acting-order x acting-order")
        for row in phi:
            for v in row:
                if not 0 <= v < na:
                    raise ShapeError("phi value out of carrier range")
        for row in gamma:
            for v in row:
                if not 0 <= v < na:
                    raise ShapeError("gamma value out of carrier range")

    def phi_of(self, n: int, a: int) -> int:
        """Action of the base element n on the carrier element a."""
        return self.phi[a][n]

    def gamma_of(self, m: int, n: int) -> int:
        return self.gamma[m][n]


class LaxAudit(NamedTuple):
    verdicts: tuple
    is_pseudo: bool

    @property
    def ok(self) -> bool:
        return all(v.passed for v in self.verdicts)

    def failing(self):
        return tuple(v.key for v in self.verdicts if not v.passed)


def validate_lax(act: LaxAction) -> LaxAudit:
    """Audit all five axioms, reporting every failure (not just the first)."""
    n_mon, a_mon = act.acting, act.carrier
    e_n, e_a = n_mon.identity, a_mon.identity
    amul = a_mon.mul
    phi, gamma = act.phi, act.gamma
    verdicts = []

    w = next(((a,) for a in a_mon.elements() if phi[a][e_n] != a), None)
    verdicts.append(Verdict("lax-axiom-i", w is None, w,
                            "unit of the base must act as the identity map"))

    w = None
    for m in n_mon.elements():
        for n in n_mon.elements():
            g = gamma[m][n]
            mn = n_mon.mul(m, n)
            for a in a_mon.elements():
                if amul(g, phi[phi[a][m]][n]) != amul(phi[a][mn], g):
                    w = (m, n, a)
                    break
            if w:
                break
        if w:
            break
    verdicts.append(Verdict("lax-axiom-ii", w is None, w,
                            "gamma must intertwine iterated and collapsed action"))

    w = None
    for m in n_mon.elements():
        for n in n_mon.elements():
            for k in n_mon.elements():
                lhs = amul(gamma[n_mon.mul(m, n)][k], phi[gamma[m][n]][k])
                rhs = amul(gamma[m][n_mon.mul(n, k)], gamma[n][k])
                if lhs != rhs:
                    w = (m, n, k)
                    break
            if w:
                break
        if w:
            break
    verdicts.append(Verdict("lax-axiom-iii", w is None, w,
                            "twisting values must satisfy the associativity constraint"))

    w = next(((m,) for m in n_mon.elements()
              if gamma[e_n][m] != e_a or gamma[m][e_n] != e_a), None)
    verdicts.append(Verdict("lax-axiom-iv", w is None, w,
                            "twists against the base unit must be trivial"))

    w = None
    for n in n_mon.elements():
        if phi[e_a][n] != e_a:
            w = (n, e_a)
            break
        for a in a_mon.elements():
            for b in a_mon.elements():
                if phi[amul(a, b)][n] != amul(phi[a][n], phi[b][n]):
                    w = (n, a, b)
                    break
            if w:
                break
        if w:
            break
    verdicts.append(Verdict("lax-axiom-v", w is None, w,
                            "each base element must act by a carrier endomorphism"))

    unit_set = set(units(a_mon).elements)
    pseudo = all(v in unit_set for row in gamma for v in row)
    return LaxAudit(tuple(verdicts), pseudo)


def strictify(acting: FiniteMonoid, carrier: FiniteMonoid, action_table) -> LaxAction:
    """Wrap a genuine right action (given as action_table[a][n]) as a lax
    action with trivial twists.

    The table is audited against the strict axioms first: the base unit
    acts as the identity, actions compose contravariantly-in-order
    (act(act(a,m),n) = act(a,mn)), and every base element acts by an
    endomorphism.  NotAnAction carries the first witness.
    """
    table = tuple(tuple(int(v) for v in row) for row in action_table)
    na, nn = carrier.order, acting.order
    if len(table) != na or any(len(r) != nn for r in table):
        raise ShapeError("action table must be carrier-order x acting-order")
    for row in table:
        for v in row:
            if not 0 <= v < na:
                raise ShapeError("action value out of carrier range")
    e_n, e_a = acting.identity, carrier.identity
    for a in carrier.elements():
        if table[a][e_n] != a:
            raise NotAnAction("base unit does not act trivially", witness=(a,))
    for a in carrier.elements():
        for m in acting.elements():
            for n in acting.elements():
                if table[table[a][m]][n] != table[a][acting.mul(m, n)]:
                    raise NotAnAction("action does not respect base products",
                                      witness=(a, m, n))
    for n in acting.elements():
        if table[e_a][n] != e_a:
            raise NotAnAction("action does not fix the carrier unit", witness=(n,))
        for a in carrier.elements():
            for b in carrier.elements():
                if table[carrier.mul(a, b)][n] != carrier.mul(table[a][n], table[b][n]):
                    raise NotAnAction("action is not by endomorphisms",
                                      witness=(n, a, b))
    gamma = tuple(tuple(e_a for _ in acting.elements()) for _ in acting.elements())
    return LaxAction(acting, carrier, table, gamma)


def trivial_action(acting: FiniteMonoid, carrier: FiniteMonoid) -> LaxAction:
    """Every base element acts as the identity, all twists trivial."""
    table = tuple(tuple(a for _ in acting.elements()) for a in carrier.elements())
    return strictify(acting, carrier, table)


@dataclass(frozen=True)
class LaxHom:
    """Morphism of lax actions over the same base: a carrier homomorphism
    alpha together with comparison values tau[m] in the target carrier.

    Fully audited on construction (InvalidLaxHom with a witness): tau is
    normalized at the unit, tau intertwines the two actions, and tau is
    compatible with both twist families.
    """

    source: LaxAction
    target: LaxAction
    alpha: MonoidHom
    tau: tuple[int, ...]

    def __post_init__(self):
        tau = tuple(int(v) for v in self.tau)
        object.__setattr__(self, "tau", tau)
        if self.source.acting != self.target.acting:
            raise ComposabilityError("lax homs need a common acting monoid")
        if self.alpha.source != self.source.carrier or self.alpha.target != self.target.carrier:
            raise ComposabilityError("alpha must map source carrier to target carrier")
        n_mon = self.source.acting
        a_tgt = self.target.carrier
        if len(tau) != n_mon.order:
            raise ShapeError("tau length must equal the acting order")
        for v in tau:
            if not 0 <= v < a_tgt.order:
                raise ShapeError("tau value out of target carrier range")
        if tau[n_mon.identity] != a_tgt.identity:
            raise InvalidLaxHom("tau at the base unit must be the carrier unit",
                                witness=(n_mon.identity,))
        amul = a_tgt.mul
        alpha = self.alpha.map
        phi_s, phi_t = self.source.phi, self.target.phi
        for m in n_mon.elements():
            for a in self.source.carrier.elements():
                if amul(phi_t[alpha[a]][m], tau[m]) != amul(tau[m], alpha[phi_s[a][m]]):
                    raise InvalidLaxHom("tau does not intertwine the actions",
                                        witness=(m, a))
        g_s, g_t = self.source.gamma, self.target.gamma
        for m in n_mon.elements():
            for n in n_mon.elements():
                lhs = amul(amul(g_t[m][n], phi_t[tau[m]][n]), tau[n])
                rhs = amul(tau[n_mon.mul(m, n)], alpha[g_s[m][n]])
                if lhs != rhs:
                    raise InvalidLaxHom("tau is not compatible with the twists",
                                        witness=(m, n))

    def __call__(self, a: int) -> int:
        return self.alpha.map[a]


def identity_lax_hom(act: LaxAction) -> LaxHom:
    from .monoid import identity_hom
    tau = tuple(act.carrier.identity for _ in act.acting.elements())
    return LaxHom(act, act, identity_hom(act.carrier), tau)


def compose_lax_homs(outer: LaxHom, inner: LaxHom) -> LaxHom:
    """outer after inner; the composite is re-audited by construction."""
    if inner.target != outer.source:
        raise ComposabilityError("inner target does not match outer source")
    amul = outer.target.carrier.mul
    tau = tuple(amul(outer.tau[m], outer.alpha.map[inner.tau[m]])
                for m in inner.source.acting.elements())
    return LaxHom(inner.source, outer.target, compose(outer.alpha, inner.alpha), tau)


@dataclass(frozen=True)
class TwoCell:
    """A 2-cell between parallel lax homs, given by one element c of the
    target carrier.  Shape-checked only; validate_two_cell reports the
    identities."""

    source: LaxHom
    target: LaxHom
    c: int

    def __post_init__(self):
        if self.source.source != self.target.source or self.source.target != self.target.target:
            raise ComposabilityError("2-cells need a parallel pair of lax homs")
        if not 0 <= int(self.c) < self.source.target.carrier.order:
            raise ShapeError("cell value out of target carrier range")
        object.__setattr__(self, "c", int(self.c))


class CellAudit(NamedTuple):
    verdicts: tuple
    is_pseudo: bool

    @property
    def ok(self) -> bool:
        return all(v.passed for v in self.verdicts)


def validate_two_cell(cell: TwoCell) -> CellAudit:
    f, g = cell.source, cell.target
    a_tgt = f.target.carrier
    amul = a_tgt.mul
    c = cell.c
    w = next(((a,) for a in f.source.carrier.elements()
              if amul(c, f.alpha.map[a]) != amul(g.alpha.map[a], c)), None)
    verdicts = [Verdict("cell-intertwines-carrier-maps", w is None, w)]
    phi_t = f.target.phi
    w = next(((m,) for m in f.source.acting.elements()
              if amul(phi_t[c][m], f.tau[m]) != amul(g.tau[m], c)), None)
    verdicts.append(Verdict("cell-intertwines-tau", w is None, w))
    return CellAudit(tuple(verdicts), a_tgt.is_unit(c))


def vertical_composite(upper: TwoCell, lower: TwoCell) -> TwoCell:
    """Stack cells f => g => h into f => h via the carrier product."""
    if lower.target != upper.source:
        raise ComposabilityError("cells are not stackable")
    a_tgt = lower.source.target.carrier
    return TwoCell(lower.source, upper.target, a_tgt.mul(upper.c, lower.c))
