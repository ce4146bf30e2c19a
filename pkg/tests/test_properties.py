"""Property-based checks over randomly generated instances."""

from hypothesis import given, settings, strategies as st

from schreier import analyze, make_hom
from schreier.cleavage import canonical_cleavage, extract_action, reconstruct
from schreier.cohomology import (
    coboundary_shift,
    cohomologous,
    enumerate_cocycles,
    extension_from_cocycle,
    trivial_module,
)
from schreier.generate import cyclic_group, cyclic_monoid, truncated_addition
from schreier.laxaction import validate_lax
from schreier.monoid import find_isomorphism, units
from schreier.serialize import monoid_from_json, monoid_to_json

small = st.integers(min_value=1, max_value=6)


@st.composite
def cyclic_monoids(draw):
    k = draw(st.integers(min_value=1, max_value=4))
    n = draw(st.integers(min_value=1, max_value=4))
    return cyclic_monoid(k, n)


@st.composite
def residue_maps(draw):
    """A cyclic group epimorphism determined by a divisor of the order."""
    n = draw(st.integers(min_value=1, max_value=12))
    divisors = [d for d in range(1, n + 1) if n % d == 0]
    d = draw(st.sampled_from(divisors))
    return make_hom(cyclic_group(n), cyclic_group(d),
                    tuple(x % d for x in range(n)))


# 1. group epimorphisms always lift: every element distinguished
@given(residue_maps())
@settings(max_examples=40, deadline=None)
def test_group_epi_fully_cartesian(h):
    report = analyze(h)
    assert report.is_fibration
    assert set(report.car) == set(h.source.elements())


# 2. the cartesian set always sits inside the precartesian set
@given(st.integers(min_value=1, max_value=4), st.integers(min_value=1, max_value=4))
@settings(max_examples=20, deadline=None)
def test_car_subset_pcar(k, n):
    m = cyclic_monoid(k, n)
    h = make_hom(m, cyclic_group(1), tuple(0 for _ in m.elements()))
    report = analyze(h)
    assert set(report.car) <= set(report.pcar)


# 3. serialization round-trips any table the builders produce
@given(cyclic_monoids())
@settings(max_examples=30, deadline=None)
def test_json_round_trip(m):
    assert monoid_from_json(monoid_to_json(m)) == m


# 4. saturating monoids over the point: the unit is the only lift,
#    and it is always a fully distinguished one
@given(st.integers(min_value=1, max_value=5))
@settings(max_examples=10, deadline=None)
def test_saturating_over_point(k):
    t = truncated_addition(k)
    h = make_hom(t, cyclic_group(1), tuple(0 for _ in t.elements()))
    report = analyze(h)
    assert report.is_fibration
    assert sorted(report.pcar) == [0]


# 5. extraction and rebuilding are mutually inverse on residue maps
@given(residue_maps())
@settings(max_examples=25, deadline=None)
def test_extract_reconstruct_inverse(h):
    cl = canonical_cleavage(h)
    act = extract_action(cl)
    assert validate_lax(act).ok
    bar = reconstruct(cl)
    assert bar.is_bijective()


# 6. shifting by a pointed unit family never changes the class
@given(st.sampled_from(["trivial", "inverted"]), st.integers(min_value=0, max_value=3))
@settings(max_examples=20, deadline=None)
def test_shift_stays_in_class(which, pick):
    mod = trivial_module(cyclic_group(2), cyclic_group(4))
    cocs = enumerate_cocycles(mod)
    c = cocs[pick % len(cocs)]
    u = units(mod.carrier).elements
    tau = (mod.carrier.identity, u[pick % len(u)])
    shifted = coboundary_shift(c, tau)
    assert cohomologous(c, shifted) is not None


# 7. every enumerated cocycle builds a working extension
@given(st.integers(min_value=0, max_value=15))
@settings(max_examples=16, deadline=None)
def test_cocycles_build_extensions(idx):
    from schreier.generate import klein_four

    mod = trivial_module(klein_four(), cyclic_group(2))
    cocs = enumerate_cocycles(mod)
    c = cocs[idx % len(cocs)]
    rec = extension_from_cocycle(c)
    assert all(v.passed for v in rec.verdicts)
    assert rec.total.order == 8


# 8. isomorphic presentations produced independently are detected
@given(st.integers(min_value=1, max_value=6))
@settings(max_examples=12, deadline=None)
def test_iso_detection_on_rebuilt_tables(n):
    g = cyclic_group(n)
    relabeled = monoid_from_json(monoid_to_json(g))
    assert find_isomorphism(g, relabeled) is not None
