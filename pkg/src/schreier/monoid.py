"""Finite monoids presented by full multiplication tables.

Elements are indices 0..order-1 and ``table[x][y]`` is the product x*y
(row = left factor).  The identity is an explicit field: imported tables
keep their own numbering and index 0 is never assumed special.  Every
construction is audited eagerly (associativity, identity, homomorphism
certificates); nothing downstream trusts unvalidated data.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property
from typing import NamedTuple, Optional, Sequence

import numpy as np

from .errors import (
    BadIdentity,
    ComposabilityError,
    NotAHomomorphism,
    NotASubmonoid,
    NotAssociative,
    ShapeError,
    SizeLimit,
)

_SIZE_LIMIT = 4096


def set_size_limit(bound: int) -> None:
    """Set the global bound on the order of constructed monoids."""
    global _SIZE_LIMIT
    if int(bound) < 1:
        raise ValueError("size limit must be positive")
    _SIZE_LIMIT = int(bound)


def size_limit() -> int:
    return _SIZE_LIMIT


def _audit_associativity(arr: np.ndarray) -> None:
    # (x*y)*z vs x*(y*z), vectorized; blocked so big tables stay in memory
    n = arr.shape[0]
    if n == 0:
        return
    block = max(1, (1 << 23) // max(n * n, 1))
    for start in range(0, n, block):
        rows = arr[start:start + block]
        left = arr[rows]          # left[x,y,z] = t[t[x,y], z]
        right = rows[:, arr]      # right[x,y,z] = t[x, t[y,z]]
        if not np.array_equal(left, right):
            x, y, z = np.argwhere(left != right)[0]
            raise NotAssociative(int(x) + start, int(y), int(z))


@dataclass(frozen=True)
class FiniteMonoid:
    """A finite monoid given by its multiplication table.

    Construction validates shape, the identity law, and associativity
    (raising ShapeError / BadIdentity / NotAssociative with a witness).
    Instances are immutable; ``names`` is display-only and ignored by
    equality.
    """

    table: tuple[tuple[int, ...], ...]
    identity: int
    names: Optional[tuple[str, ...]] = field(default=None, compare=False)

    def __post_init__(self):
        table = tuple(tuple(int(v) for v in row) for row in self.table)
        object.__setattr__(self, "table", table)
        n = len(table)
        if n == 0:
            raise ShapeError("monoid table must be nonempty")
        if n > _SIZE_LIMIT:
            raise SizeLimit("order %d exceeds the configured bound %d" % (n, _SIZE_LIMIT))
        for x, row in enumerate(table):
            if len(row) != n:
                raise ShapeError("table row %d has length %d, expected %d" % (x, len(row), n))
            for v in row:
                if not 0 <= v < n:
                    raise ShapeError("table entry %d out of range 0..%d" % (v, n - 1))
        e = int(self.identity)
        object.__setattr__(self, "identity", e)
        if not 0 <= e < n:
            raise ShapeError("identity index %d out of range" % e)
        for x in range(n):
            if table[e][x] != x or table[x][e] != x:
                raise BadIdentity(e, x)
        _audit_associativity(np.array(table, dtype=np.int64))
        if self.names is not None:
            names = tuple(str(s) for s in self.names)
            object.__setattr__(self, "names", names)
            if len(names) != n or len(set(names)) != n:
                raise ShapeError("names must be %d distinct strings" % n)

    @property
    def order(self) -> int:
        return len(self.table)

    def elements(self) -> range:
        return range(len(self.table))

    def mul(self, x: int, y: int) -> int:
        return self.table[x][y]

    def prod(self, xs) -> int:
        acc = self.identity
        for x in xs:
            acc = self.table[acc][x]
        return acc

    @cached_property
    def _inverses(self) -> dict:
        inv = {}
        e = self.identity
        for x in self.elements():
            for y in self.elements():
                if self.table[x][y] == e and self.table[y][x] == e:
                    inv[x] = y
                    break
        return inv

    def is_unit(self, x: int) -> bool:
        return x in self._inverses

    def inverse(self, x: int) -> int:
        try:
            return self._inverses[x]
        except KeyError:
            raise ValueError("element %d is not invertible" % x) from None

    @cached_property
    def is_commutative(self) -> bool:
        t = self.table
        n = len(t)
        return all(t[x][y] == t[y][x] for x in range(n) for y in range(x + 1, n))

    def is_group(self) -> bool:
        return len(self._inverses) == self.order

    def name_of(self, x: int) -> str:
        return self.names[x] if self.names is not None else str(x)

    def __repr__(self):
        return "FiniteMonoid(order=%d, identity=%d)" % (self.order, self.identity)


def make_monoid(table, identity, names=None) -> FiniteMonoid:
    """Validate and build a FiniteMonoid from any nested int sequence."""
    return FiniteMonoid(tuple(tuple(row) for row in table), identity,
                        None if names is None else tuple(names))


@dataclass(frozen=True)
class Submonoid:
    """A subset of a parent monoid, checked to contain the identity and be
    closed under the parent's product."""

    parent: FiniteMonoid
    elements: tuple[int, ...]

    def __post_init__(self):
        elts = tuple(sorted(set(int(x) for x in self.elements)))
        object.__setattr__(self, "elements", elts)
        for x in elts:
            if not 0 <= x < self.parent.order:
                raise ShapeError("submonoid element %d out of range" % x)
        if self.parent.identity not in elts:
            raise NotASubmonoid("identity %d missing" % self.parent.identity)
        inside = set(elts)
        for x in elts:
            for y in elts:
                if self.parent.table[x][y] not in inside:
                    raise NotASubmonoid(
                        "not closed: %d * %d = %d escapes" % (x, y, self.parent.table[x][y]))

    @property
    def order(self) -> int:
        return len(self.elements)

    def __contains__(self, x) -> bool:
        return x in self._index

    @cached_property
    def _index(self) -> dict:
        return {x: i for i, x in enumerate(self.elements)}

    def index_of(self, parent_element: int) -> int:
        """Dense index of a parent element inside this submonoid."""
        return self._index[parent_element]

    def parent_of(self, dense_index: int) -> int:
        return self.elements[dense_index]

    @cached_property
    def monoid(self) -> FiniteMonoid:
        """The submonoid re-indexed densely as a standalone FiniteMonoid."""
        idx = self._index
        table = tuple(
            tuple(idx[self.parent.table[x][y]] for y in self.elements)
            for x in self.elements)
        names = None
        if self.parent.names is not None:
            names = tuple(self.parent.names[x] for x in self.elements)
        return FiniteMonoid(table, idx[self.parent.identity], names)

    @cached_property
    def inclusion(self) -> "MonoidHom":
        return MonoidHom(self.monoid, self.parent, self.elements)


@dataclass(frozen=True)
class MonoidHom:
    """A monoid homomorphism, audited on construction.

    ``map[x]`` is the image of x.  Identity preservation and full
    multiplicativity are certified eagerly (NotAHomomorphism names the
    first bad pair).
    """

    source: FiniteMonoid
    target: FiniteMonoid
    map: tuple[int, ...]

    def __post_init__(self):
        m = tuple(int(v) for v in self.map)
        object.__setattr__(self, "map", m)
        if len(m) != self.source.order:
            raise ShapeError("map length %d != source order %d" % (len(m), self.source.order))
        for v in m:
            if not 0 <= v < self.target.order:
                raise ShapeError("map value %d out of target range" % v)
        if m[self.source.identity] != self.target.identity:
            raise NotAHomomorphism(
                "identity %d maps to %d, not the target identity %d"
                % (self.source.identity, m[self.source.identity], self.target.identity),
                witness=self.source.identity)
        arr = np.array(m, dtype=np.int64)
        ts = np.array(self.source.table, dtype=np.int64)
        tt = np.array(self.target.table, dtype=np.int64)
        lhs = arr[ts]
        rhs = tt[arr[:, None], arr[None, :]]
        if not np.array_equal(lhs, rhs):
            x, y = np.argwhere(lhs != rhs)[0]
            raise NotAHomomorphism(
                "map(%d*%d) != map(%d)*map(%d)" % (x, y, x, y), witness=(int(x), int(y)))

    def __call__(self, x: int) -> int:
        return self.map[x]

    @cached_property
    def image(self) -> frozenset:
        return frozenset(self.map)

    def is_injective(self) -> bool:
        return len(self.image) == self.source.order

    def is_surjective(self) -> bool:
        return len(self.image) == self.target.order

    def is_bijective(self) -> bool:
        return self.is_injective() and self.is_surjective()

    def inverse_hom(self) -> "MonoidHom":
        if not self.is_bijective():
            raise ValueError("not an isomorphism")
        inv = [0] * self.target.order
        for x, y in enumerate(self.map):
            inv[y] = x
        return MonoidHom(self.target, self.source, tuple(inv))

    def __repr__(self):
        return "MonoidHom(%d -> %d)" % (self.source.order, self.target.order)


def make_hom(source, target, mapping) -> MonoidHom:
    return MonoidHom(source, target, tuple(mapping))


def identity_hom(m: FiniteMonoid) -> MonoidHom:
    return MonoidHom(m, m, tuple(range(m.order)))


def trivial_hom(source: FiniteMonoid, target: FiniteMonoid) -> MonoidHom:
    """The homomorphism collapsing everything to the target identity."""
    return MonoidHom(source, target, tuple(target.identity for _ in source.elements()))


def compose(outer: MonoidHom, inner: MonoidHom) -> MonoidHom:
    """outer after inner."""
    if inner.target != outer.source:
        raise ComposabilityError("inner target does not match outer source")
    return MonoidHom(inner.source, outer.target,
                     tuple(outer.map[v] for v in inner.map))


def units(m: FiniteMonoid) -> Submonoid:
    """The group of two-sided invertible elements."""
    return Submonoid(m, tuple(sorted(m._inverses)))


def kernel(h: MonoidHom) -> Submonoid:
    """Preimage of the target identity."""
    e = h.target.identity
    return Submonoid(h.source, tuple(x for x in h.source.elements() if h.map[x] == e))


class Product(NamedTuple):
    monoid: FiniteMonoid
    onto_first: MonoidHom
    onto_second: MonoidHom


def product_monoid(m: FiniteMonoid, n: FiniteMonoid) -> Product:
    """Direct product on pairs encoded as a*|N|+b, with both projections."""
    if m.order * n.order > _SIZE_LIMIT:
        raise SizeLimit("product order %d exceeds bound %d" % (m.order * n.order, _SIZE_LIMIT))
    b = n.order
    table = []
    for x1 in m.elements():
        for y1 in n.elements():
            row = []
            for x2 in m.elements():
                for y2 in n.elements():
                    row.append(m.table[x1][x2] * b + n.table[y1][y2])
            table.append(tuple(row))
    names = None
    if m.names is not None and n.names is not None:
        names = tuple("(%s,%s)" % (m.names[x], n.names[y])
                      for x in m.elements() for y in n.elements())
    prod = FiniteMonoid(tuple(table), m.identity * b + n.identity, names)
    p1 = MonoidHom(prod, m, tuple(i // b for i in range(prod.order)))
    p2 = MonoidHom(prod, n, tuple(i % b for i in range(prod.order)))
    return Product(prod, p1, p2)


class PullbackResult(NamedTuple):
    monoid: FiniteMonoid
    onto_first: MonoidHom
    onto_second: MonoidHom
    pairs: tuple


def pullback(f: MonoidHom, g: MonoidHom) -> PullbackResult:
    """Fiber product of f: K -> L and g: N -> L over their common target.

    Elements are the pairs (k, n) with f(k) = g(n), densely re-indexed in
    lexicographic order, with the two coordinate projections.
    """
    if f.target != g.target:
        raise ComposabilityError("pullback needs a common target")
    pairs = [(k, n) for k in f.source.elements() for n in g.source.elements()
             if f.map[k] == g.map[n]]
    if len(pairs) > _SIZE_LIMIT:
        raise SizeLimit("pullback order %d exceeds bound %d" % (len(pairs), _SIZE_LIMIT))
    idx = {p: i for i, p in enumerate(pairs)}
    table = tuple(
        tuple(idx[(f.source.table[k1][k2], g.source.table[n1][n2])]
              for (k2, n2) in pairs)
        for (k1, n1) in pairs)
    names = None
    if f.source.names is not None and g.source.names is not None:
        names = tuple("(%s,%s)" % (f.source.names[k], g.source.names[n]) for (k, n) in pairs)
    mono = FiniteMonoid(table, idx[(f.source.identity, g.source.identity)], names)
    to_k = MonoidHom(mono, f.source, tuple(k for (k, _) in pairs))
    to_n = MonoidHom(mono, g.source, tuple(n for (_, n) in pairs))
    return PullbackResult(mono, to_k, to_n, tuple(pairs))


def opposite(m: FiniteMonoid) -> FiniteMonoid:
    """Same elements, reversed multiplication."""
    table = tuple(tuple(m.table[y][x] for y in m.elements()) for x in m.elements())
    return FiniteMonoid(table, m.identity, m.names)


def opposite_hom(h: MonoidHom) -> MonoidHom:
    """The same map viewed between the opposite monoids."""
    return MonoidHom(opposite(h.source), opposite(h.target), h.map)


def cyclic_data(m: FiniteMonoid, x: int) -> tuple[int, int]:
    """(index, period) of the cyclic submonoid generated by x."""
    seen = {m.identity: 0}
    seq = [m.identity]
    cur = m.identity
    while True:
        cur = m.table[cur][x]
        if cur in seen:
            first = seen[cur]
            return first, len(seq) - first
        seen[cur] = len(seq)
        seq.append(cur)


def _profile(m: FiniteMonoid, x: int):
    # isomorphism-invariant fingerprint used to prune the image search
    idx, per = cyclic_data(m, x)
    right = len(set(m.table[x]))
    left = len(set(m.table[y][x] for y in m.elements()))
    return (idx, per, right, left, m.is_unit(x))


def _closure_defs(m: FiniteMonoid, gens: Sequence[int]):
    """BFS closure of <gens> with, for each element, the pair (prev, gen
    position) that first produced it.  The identity is the root."""
    e = m.identity
    order = [e]
    defs = {e: None}
    i = 0
    while i < len(order):
        u = order[i]
        i += 1
        for j, g in enumerate(gens):
            v = m.table[u][g]
            if v not in defs:
                defs[v] = (u, j)
                order.append(v)
    return order, defs


def generating_set(m: FiniteMonoid) -> tuple[int, ...]:
    """Greedy minimal generating set: sweep indices ascending, keep any
    element not yet generated."""
    gens: list[int] = []
    reached = {m.identity}
    for x in m.elements():
        if x not in reached:
            gens.append(x)
            reached = set(_closure_defs(m, gens)[0])
    return tuple(gens)


def _iso_search(m: FiniteMonoid, n: FiniteMonoid, find_all: bool) -> list[tuple[int, ...]]:
    if m.order != n.order:
        return []
    pm = [_profile(m, x) for x in m.elements()]
    pn = [_profile(n, y) for y in n.elements()]
    if sorted(pm) != sorted(pn):
        return []
    gens = generating_set(m)
    if not gens:
        return [(n.identity,)] if m.order == 1 else []
    prefix = [_closure_defs(m, gens[:i + 1]) for i in range(len(gens))]
    candidates = [sorted(y for y in n.elements() if pn[y] == pm[g]) for g in gens]
    results: list[tuple[int, ...]] = []
    gen_images = [0] * len(gens)

    def level(i: int) -> bool:
        order, defs = prefix[i]
        for y in candidates[i]:
            gen_images[i] = y
            img = {m.identity: n.identity}
            ok = True
            for elt in order[1:]:
                prev, j = defs[elt]
                img[elt] = n.table[img[prev]][gen_images[j]]
            if len(set(img.values())) != len(img):
                continue
            for u in order:
                iu = img[u]
                for v in order:
                    if img[m.table[u][v]] != n.table[iu][img[v]]:
                        ok = False
                        break
                if not ok:
                    break
            if not ok:
                continue
            if i + 1 == len(gens):
                results.append(tuple(img[x] for x in m.elements()))
                if not find_all:
                    return True
            else:
                if level(i + 1) and not find_all:
                    return True
        return False

    level(0)
    return results


def find_isomorphism(m: FiniteMonoid, n: FiniteMonoid) -> Optional[MonoidHom]:
    """Search for a monoid isomorphism m -> n.

    Deterministic: generators are the greedy minimal set, candidate images
    are tried in ascending index order, and the first (lexicographically
    least) complete assignment wins.  Returns None when no isomorphism
    exists.
    """
    found = _iso_search(m, n, find_all=False)
    if not found:
        return None
    h = MonoidHom(m, n, found[0])
    if not h.is_bijective():
        raise ShapeError("internal: isomorphism search produced a non-bijection")
    return h


def automorphism_group(m: FiniteMonoid) -> tuple[tuple[int, ...], ...]:
    """All automorphisms of m as permutation tuples, sorted."""
    return tuple(sorted(_iso_search(m, m, find_all=True)))


def permutations_fixing_identity(order: int, identity: int):
    """All permutations of 0..order-1 fixing the identity (oracle helper)."""
    rest = [x for x in range(order) if x != identity]
    for perm in itertools.permutations(rest):
        full = [0] * order
        full[identity] = identity
        for slot, val in zip(rest, perm):
            full[slot] = val
        yield tuple(full)
