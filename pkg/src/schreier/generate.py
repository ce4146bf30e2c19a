"""Constructors for the standard example monoids.

Everything here is a plain Cayley table; the generate() dispatcher wraps
the result as a catalog entry with a note describing the construction.
"""

from __future__ import annotations

from itertools import product

from .errors import ShapeError, SizeLimit
from .monoid import FiniteMonoid, make_monoid
from .serialize import CatalogEntry


def cyclic_group(k: int) -> FiniteMonoid:
    """Integers mod k under addition."""
    if k < 1:
        raise ShapeError("cyclic group order must be positive")
    table = [[(i + j) % k for j in range(k)] for i in range(k)]
    names = tuple("t%d" % i for i in range(k))
    return make_monoid(table, identity=0, names=names)


def cyclic_monoid(k: int, n: int) -> FiniteMonoid:
    """Single generator with index k and period n: order k + n, and
    exponents at or past k wrap into the terminal cycle of length n."""
    if k < 1 or n < 1:
        raise ShapeError("index and period must be positive")
    size = k + n

    def reduce(e: int) -> int:
        return e if e < size else k + ((e - k) % n)

    table = [[reduce(i + j) for j in range(size)] for i in range(size)]
    names = tuple("t%d" % i for i in range(size))
    return make_monoid(table, identity=0, names=names)


def klein_four() -> FiniteMonoid:
    """Elementary abelian group of order 4 (bitwise xor on two bits)."""
    table = [[i ^ j for j in range(4)] for i in range(4)]
    return make_monoid(table, identity=0, names=("1", "x", "y", "xy"))


_AXIS_MUL = (
    ((0, 0), (0, 1), (0, 2), (0, 3)),
    ((0, 1), (1, 0), (0, 3), (1, 2)),
    ((0, 2), (1, 3), (1, 0), (0, 1)),
    ((0, 3), (0, 2), (1, 1), (1, 0)),
)


def quaternion_group() -> FiniteMonoid:
    """Order-8 group of unit quaternions.

    Element 2a + s is the axis a in (1, i, j, k) with sign bit s;
    products combine signs with the axis table above.
    """
    def mul(x: int, y: int) -> int:
        s1, a1 = x % 2, x // 2
        s2, a2 = y % 2, y // 2
        s, a = _AXIS_MUL[a1][a2]
        return 2 * a + ((s1 + s2 + s) % 2)

    table = [[mul(x, y) for y in range(8)] for x in range(8)]
    names = ("1", "-1", "i", "-i", "j", "-j", "k", "-k")
    return make_monoid(table, identity=0, names=names)


def truncated_addition(k: int) -> FiniteMonoid:
    """Addition on 0..k capped at k."""
    if k < 0:
        raise ShapeError("cap must be nonnegative")
    table = [[min(i + j, k) for j in range(k + 1)] for i in range(k + 1)]
    names = tuple(str(i) for i in range(k + 1))
    return make_monoid(table, identity=0, names=names)


def full_transformation(n: int) -> FiniteMonoid:
    """All self-maps of an n-point set under left-to-right composition.

    Maps are ordered lexicographically by their image tuples; refuses
    n above 3 (order n^n grows too fast for table work).
    """
    if n < 1:
        raise ShapeError("need at least one point")
    if n > 3:
        raise SizeLimit("full transformation monoid only built up to 3 points")
    maps = sorted(product(range(n), repeat=n))
    index = {f: i for i, f in enumerate(maps)}
    table = [[index[tuple(g[f[i]] for i in range(n))] for g in maps] for f in maps]
    names = tuple("".join(str(v) for v in f) for f in maps)
    return make_monoid(table, identity=index[tuple(range(n))], names=names)


_KINDS = ("cyclic-group", "cyclic-monoid", "klein4", "q8",
          "truncated-add", "full-transformation")


def generate(kind: str, args=()) -> CatalogEntry:
    """Build one of the standard monoids by kind name.

    Kinds and their integer arguments: cyclic-group k, cyclic-monoid k n,
    klein4, q8, truncated-add k, full-transformation n.
    """
    args = tuple(int(a) for a in args)

    def want(count: int) -> None:
        if len(args) != count:
            raise ShapeError("%s takes %d integer argument%s"
                             % (kind, count, "" if count == 1 else "s"))

    if kind == "cyclic-group":
        want(1)
        return CatalogEntry("c%d" % args[0], "monoid", cyclic_group(args[0]),
                            "cyclic group of order %d" % args[0])
    if kind == "cyclic-monoid":
        want(2)
        return CatalogEntry("c%d_%d" % args, "monoid", cyclic_monoid(*args),
                            "one generator, index %d and period %d" % args)
    if kind == "klein4":
        want(0)
        return CatalogEntry("klein4", "monoid", klein_four(),
                            "product of two 2-element groups via xor")
    if kind == "q8":
        want(0)
        return CatalogEntry("q8", "monoid", quaternion_group(),
                            "unit quaternions with signed-axis encoding")
    if kind == "truncated-add":
        want(1)
        return CatalogEntry("trunc%d" % args[0], "monoid",
                            truncated_addition(args[0]),
                            "addition on 0..%d capped at %d" % (args[0], args[0]))
    if kind == "full-transformation":
        want(1)
        return CatalogEntry("t%d" % args[0], "monoid",
                            full_transformation(args[0]),
                            "all self-maps of %d points" % args[0])
    raise ShapeError("unknown kind %r (expected one of %s)" % (kind, ", ".join(_KINDS)))
