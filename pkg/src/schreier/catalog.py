"""The standard catalog: a few dozen small worked instances.

Table sources come from the generate module; maps, actions, and modules
are built on top of them.  Entries reference shared monoids by id so the
on-disk catalog stays readable.  Everything here has source order at
most 12 and is cheap to re-audit from scratch.
"""

from __future__ import annotations

from pathlib import Path

from .cohomology import NModule, trivial_module
from .errors import ShapeError
from .generate import (
    cyclic_group,
    cyclic_monoid,
    full_transformation,
    klein_four,
    quaternion_group,
    truncated_addition,
)
from .laxaction import LaxAction, trivial_action
from .monoid import FiniteMonoid, MonoidHom, identity_hom, make_monoid, product_monoid
from .serialize import CatalogEntry, DirectoryResolver, entry_from_file, write_entry


def _shifted_c2() -> FiniteMonoid:
    # two-element group written with its unit at index 1
    return make_monoid(((1, 0), (0, 1)), identity=1, names=("t", "1"))


def _hom(id, src_id, dst_id, mapping, note, monoids) -> CatalogEntry:
    h = MonoidHom(monoids[src_id], monoids[dst_id], tuple(mapping))
    return CatalogEntry(id, "hom", h, note, {"source": src_id, "target": dst_id})


def _action(id, acting_id, carrier_id, act: LaxAction, note) -> CatalogEntry:
    return CatalogEntry(id, "action", act, note,
                        {"acting": acting_id, "carrier": carrier_id})


def _module(id, acting_id, carrier_id, mod: NModule, note) -> CatalogEntry:
    return CatalogEntry(id, "module", mod, note,
                        {"acting": acting_id, "carrier": carrier_id})


def standard_catalog() -> list[CatalogEntry]:
    mono: dict[str, FiniteMonoid] = {
        "c1": cyclic_group(1),
        "c2": cyclic_group(2),
        "c2s": _shifted_c2(),
        "c3": cyclic_group(3),
        "c4": cyclic_group(4),
        "c6": cyclic_group(6),
        "c12": cyclic_group(12),
        "klein4": klein_four(),
        "q8": quaternion_group(),
        "c33": cyclic_monoid(3, 3),
        "c22": cyclic_monoid(2, 2),
        "trunc1": truncated_addition(1),
        "trunc2": truncated_addition(2),
        "t2": full_transformation(2),
    }
    prod_cc = product_monoid(mono["c2"], mono["c2"])
    prod_c3c2 = product_monoid(mono["c3"], mono["c2"])
    prod_k4c2 = product_monoid(mono["klein4"], mono["c2"])
    prod_c2c4 = product_monoid(mono["c2"], mono["c4"])
    mono["prod_c2_c2"] = prod_cc.monoid
    mono["prod_c3_c2"] = prod_c3c2.monoid
    mono["prod_klein4_c2"] = prod_k4c2.monoid
    mono["prod_c2_c4"] = prod_c2c4.monoid

    notes = {
        "c1": "cyclic group of order 1",
        "c2": "cyclic group of order 2",
        "c2s": "two-element group with the unit stored at index 1",
        "c3": "cyclic group of order 3",
        "c4": "cyclic group of order 4",
        "c6": "cyclic group of order 6",
        "c12": "cyclic group of order 12",
        "klein4": "product of two 2-element groups via xor",
        "q8": "unit quaternions with signed-axis encoding",
        "c33": "one generator, index 3 and period 3",
        "c22": "one generator, index 2 and period 2",
        "trunc1": "addition on 0..1 capped at 1",
        "trunc2": "addition on 0..2 capped at 2",
        "t2": "all self-maps of 2 points",
        "prod_c2_c2": "direct product of c2 with c2, pairs packed row-major",
        "prod_c3_c2": "direct product of c3 with c2, pairs packed row-major",
        "prod_klein4_c2": "direct product of klein4 with c2, pairs packed row-major",
        "prod_c2_c4": "direct product of c2 with c4, pairs packed row-major",
    }
    entries = [CatalogEntry(i, "monoid", mono[i], notes[i]) for i in sorted(mono)]

    def residue(src, mod_by):
        return [i % mod_by for i in range(mono[src].order)]

    homs = [
        _hom("c4_to_c2", "c4", "c2", residue("c4", 2),
             "reduce exponents mod 2", mono),
        _hom("c6_to_c3", "c6", "c3", residue("c6", 3),
             "reduce exponents mod 3", mono),
        _hom("c6_to_c2", "c6", "c2", residue("c6", 2),
             "reduce exponents mod 2", mono),
        _hom("c12_to_c6", "c12", "c6", residue("c12", 6),
             "reduce exponents mod 6", mono),
        _hom("q8_over_klein4", "q8", "klein4", (0, 0, 1, 1, 2, 2, 3, 3),
             "forget signs, keeping the axis", mono),
        _hom("q8_to_c2", "q8", "c2", (0, 0, 0, 0, 1, 1, 1, 1),
             "send j and k off the i-axis subgroup", mono),
        _hom("klein4_to_c2_x", "klein4", "c2", (0, 0, 1, 1),
             "second xor bit", mono),
        _hom("klein4_to_c2_y", "klein4", "c2", (0, 1, 0, 1),
             "first xor bit", mono),
        _hom("prod_c2_c2_to_c2", "prod_c2_c2", "c2",
             prod_cc.onto_first.map, "projection onto the left factor", mono),
        _hom("prod_c3_c2_to_c3", "prod_c3_c2", "c3",
             prod_c3c2.onto_first.map, "projection onto the left factor", mono),
        _hom("prod_klein4_c2_to_klein4", "prod_klein4_c2", "klein4",
             prod_k4c2.onto_first.map, "projection onto the left factor", mono),
        _hom("prod_c2_c4_to_c2", "prod_c2_c4", "c2",
             prod_c2c4.onto_first.map, "projection onto the left factor", mono),
        _hom("prod_c2_c4_to_c4", "prod_c2_c4", "c4",
             prod_c2c4.onto_second.map, "projection onto the right factor", mono),
        _hom("c33_to_c3", "c33", "c3", residue("c33", 3),
             "reduce exponents mod 3 across the cycle boundary", mono),
        _hom("c22_to_c2", "c22", "c2", residue("c22", 2),
             "reduce exponents mod 2 across the cycle boundary", mono),
        _hom("trunc2_to_trunc1", "trunc2", "trunc1", (0, 1, 1),
             "cap the sum one step earlier", mono),
        _hom("t2_to_flag", "t2", "trunc1", (1, 0, 0, 1),
             "0 on the invertible maps, 1 on the constants", mono),
        _hom("id_klein4", "klein4", "klein4", identity_hom(mono["klein4"]).map,
             "identity map", mono),
        _hom("id_c33", "c33", "c33", identity_hom(mono["c33"]).map,
             "identity map", mono),
        _hom("c33_twist", "c33", "c33", (0, 4, 5, 3, 4, 5),
             "generator to its fourth power", mono),
        _hom("trunc1_to_c1", "trunc1", "c1", (0, 0),
             "collapse to a point", mono),
        _hom("c4_to_c1", "c4", "c1", (0, 0, 0, 0),
             "collapse to a point", mono),
        _hom("c4_to_c2s", "c4", "c2s", (1, 0, 1, 0),
             "reduce exponents mod 2, unit stored at index 1", mono),
        _hom("c2s_to_c1", "c2s", "c1", (0, 0),
             "collapse to a point", mono),
        _hom("c2_into_c4", "c2", "c4", (0, 2),
             "generator to the square, not onto", mono),
    ]

    quaternion_gamma = (
        (0, 0, 0, 0),
        (0, 1, 0, 1),
        (0, 1, 1, 0),
        (0, 0, 1, 1),
    )
    actions = [
        _action("quaternion_action", "klein4", "c2",
                LaxAction(mono["klein4"], mono["c2"],
                          ((0, 0, 0, 0), (1, 1, 1, 1)), quaternion_gamma),
                "trivial sign action with the anticommutation twist table"),
        _action("c33_lax", "c3", "trunc1",
                LaxAction(mono["c3"], mono["trunc1"],
                          ((0, 0, 0), (1, 1, 1)),
                          ((0, 0, 0), (0, 0, 1), (0, 1, 1))),
                "trivial action, twist records exponent overflow past the cycle"),
        _action("c22_lax", "c2", "trunc1",
                LaxAction(mono["c2"], mono["trunc1"],
                          ((0, 0), (1, 1)), ((0, 0), (0, 1))),
                "trivial action, twist records exponent overflow past the cycle"),
        _action("inv_c3_by_c2", "c2", "c3",
                LaxAction(mono["c2"], mono["c3"],
                          ((0, 0), (1, 2), (2, 1)), ((0, 0), (0, 0))),
                "the flip inverts the 3-cycle, no twist"),
        _action("trivial_c2_on_c2", "c2", "c2",
                trivial_action(mono["c2"], mono["c2"]),
                "trivial action, no twist"),
        _action("trivial_c2_on_trunc1", "c2", "trunc1",
                trivial_action(mono["c2"], mono["trunc1"]),
                "trivial action on a carrier with an absorbing element"),
        _action("shifted_action", "c2", "c2s",
                LaxAction(mono["c2"], mono["c2s"],
                          ((0, 0), (1, 1)), ((1, 1), (1, 1))),
                "trivial action written against a carrier with unit at index 1"),
    ]

    modules = [
        _module("mod_c2_c2_trivial", "c2", "c2",
                trivial_module(mono["c2"], mono["c2"]),
                "trivial action of the flip on a 2-element group"),
        _module("mod_klein4_c2_trivial", "klein4", "c2",
                trivial_module(mono["klein4"], mono["c2"]),
                "trivial action of the xor square on a 2-element group"),
        _module("mod_c2_c4_inv", "c2", "c4",
                NModule(mono["c2"], mono["c4"],
                        ((0, 0), (1, 3), (2, 2), (3, 1))),
                "the flip negates exponents mod 4"),
        _module("mod_c2_c4_trivial", "c2", "c4",
                trivial_module(mono["c2"], mono["c4"]),
                "trivial action of the flip on a 4-element group"),
        _module("mod_c2s", "c2", "c2s",
                trivial_module(mono["c2"], mono["c2s"]),
                "trivial action on a carrier with unit at index 1"),
    ]
    return entries + homs + actions + modules


def write_catalog(directory) -> list[Path]:
    return [write_entry(e, directory) for e in standard_catalog()]


def load_catalog(directory=None) -> dict[str, CatalogEntry]:
    """Read every JSON file in a catalog directory into entries keyed by id."""
    resolver = DirectoryResolver(directory)
    directory = resolver.directory
    if not directory.is_dir():
        raise ShapeError("catalog directory %s does not exist" % directory)
    out = {}
    for path in sorted(directory.glob("*.json")):
        entry = entry_from_file(path, resolver)
        out[entry.id] = entry
    return out


def entries_of_kind(cat: dict, kind: str) -> list[CatalogEntry]:
    return [cat[i] for i in sorted(cat) if cat[i].kind == kind]
