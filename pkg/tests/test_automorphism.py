"""Kernel-preserving automorphisms over a fixed projection.

The parametric search walks (carrier map, base map, unit family) triples;
brute_force_aut filters raw permutations instead, so agreement between the
two is a real cross-check.
"""

import pytest

from schreier.automorphism import (
    AutTriple,
    aut_A,
    brute_force_aut,
    compute_C,
    restrict_and_descend,
    rho,
)
from schreier.errors import SizeLimit
from schreier.generate import cyclic_group
from schreier.monoid import trivial_hom

FROZEN_COUNTS = {
    "c4_to_c2": (2, 1, 2),
    "c6_to_c3": (2, 2, 2),
    "c6_to_c2": (2, 2, 2),
    "q8_over_klein4": (24, 6, 24),
    "q8_to_c2": (8, 2, 8),
    "c33_to_c3": (1, 2, 1),
    "c22_to_c2": (1, 1, 1),
    "trunc1_to_c1": (1, 1, 1),
    "klein4_to_c2_x": (2, 1, 2),
    "prod_c2_c2_to_c2": (2, 1, 2),
    "prod_c2_c4_to_c2": (4, 2, 4),
    "prod_c2_c4_to_c4": (4, 2, 4),
    "c4_to_c2s": (2, 1, 2),
}


@pytest.mark.parametrize("hom_id", sorted(FROZEN_COUNTS))
def test_frozen_counts(catalog, hom_id):
    n_triples, n_compatible, n_brute = FROZEN_COUNTS[hom_id]
    h = catalog[hom_id]
    triples = aut_A(h)
    assert len(triples) == n_triples
    assert len(compute_C(h).pairs) == n_compatible
    assert len(brute_force_aut(h)) == n_brute


@pytest.mark.parametrize("hom_id", sorted(FROZEN_COUNTS))
def test_parametric_matches_brute(catalog, hom_id):
    h = catalog[hom_id]
    parametric = {t.perm for t in aut_A(h)}
    brute = set(brute_force_aut(h))
    assert parametric == brute


def test_brute_force_gate():
    big = cyclic_group(10)
    with pytest.raises(SizeLimit):
        brute_force_aut(trivial_hom(big, cyclic_group(1)))


def test_triples_compose_and_invert(catalog):
    h = catalog["q8_over_klein4"]
    perms = {t.perm for t in aut_A(h)}
    n = h.source.order
    for p in perms:
        inverse = tuple(sorted(range(n), key=lambda i: p[i]))
        assert inverse in perms
        for q in perms:
            assert tuple(q[p[i]] for i in range(n)) in perms


def test_restrict_and_descend(catalog):
    h = catalog["q8_over_klein4"]
    for t in aut_A(h):
        theta, eta = restrict_and_descend(t.perm, h)
        assert theta.map == t.theta
        assert eta.map == t.eta


def test_rho_lands_in_compatible_pairs(catalog):
    h = catalog["q8_over_klein4"]
    triples = aut_A(h)
    cg = compute_C(h)
    pairs = rho(triples, cg)
    assert len(pairs) == len(triples)
    allowed = set(cg.pairs)
    assert set(pairs) <= allowed
    # every compatible pair is hit for this projection
    assert set(pairs) == allowed


def test_rho_fibers_have_equal_size(catalog):
    h = catalog["q8_over_klein4"]
    triples = aut_A(h)
    pairs = rho(triples, compute_C(h))
    from collections import Counter

    sizes = Counter(pairs)
    assert set(sizes.values()) == {4}


def test_identity_triple_present(catalog):
    h = catalog["c4_to_c2"]
    ids = tuple(h.source.elements())
    assert any(t.perm == ids for t in aut_A(h))


def test_witnesses_stored_per_pair(catalog):
    h = catalog["c4_to_c2"]
    cg = compute_C(h)
    assert set(cg.witnesses) == set(cg.pairs)
