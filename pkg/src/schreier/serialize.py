"""JSON formats for tables, maps, actions, and modules.

A monoid file carries order, identity, table, and optional names.  Maps
and actions either inline their monoids or reference them by catalog id
(the file stem inside the catalog directory).  All dumps are sorted and
newline-terminated so byte-identical output is reproducible.
"""

from __future__ import annotations

import hashlib
import json
import os
from dataclasses import dataclass, field
from pathlib import Path

from .cohomology import NModule
from .errors import ShapeError
from .laxaction import LaxAction
from .monoid import FiniteMonoid, MonoidHom

CATALOG_ENV = "SCHREIER_CATALOG"


def default_catalog_dir() -> Path:
    return Path(os.environ.get(CATALOG_ENV, "catalog"))


def dumps(data) -> str:
    return json.dumps(data, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def digest_bytes(raw: bytes) -> str:
    return hashlib.sha256(raw).hexdigest()


def digest_file(path) -> str:
    return digest_bytes(Path(path).read_bytes())


def load_json(path):
    try:
        raw = Path(path).read_text()
    except OSError as exc:
        raise ShapeError("cannot read %s: %s" % (path, exc)) from exc
    try:
        return json.loads(raw)
    except json.JSONDecodeError as exc:
        raise ShapeError("malformed JSON in %s: %s" % (path, exc)) from exc


class DirectoryResolver:
    """Resolves monoid references (catalog ids) against a directory of
    JSON files, one entry per file, named by the id."""

    def __init__(self, directory=None):
        self.directory = Path(directory) if directory else default_catalog_dir()
        self._cache: dict[str, FiniteMonoid] = {}

    def __call__(self, ref: str) -> FiniteMonoid:
        if ref not in self._cache:
            path = self.directory / (ref + ".json")
            if not path.is_file():
                raise ShapeError("no catalog entry %r under %s" % (ref, self.directory))
            obj = load_json(path)
            if kind_of(obj) != "monoid":
                raise ShapeError("catalog entry %r is not a monoid" % ref)
            self._cache[ref] = monoid_from_json(obj)
        return self._cache[ref]


def kind_of(obj) -> str:
    if not isinstance(obj, dict):
        raise ShapeError("expected a JSON object at the top level")
    if "map" in obj:
        return "hom"
    if "gamma" in obj:
        return "action"
    if "phi" in obj:
        return "module"
    if "table" in obj:
        return "monoid"
    raise ShapeError("object has none of the recognized keys (table, map, phi, gamma)")


def monoid_to_json(m: FiniteMonoid) -> dict:
    out = {
        "order": m.order,
        "identity": m.identity,
        "table": [list(row) for row in m.table],
    }
    if m.names is not None:
        out["names"] = list(m.names)
    return out


def monoid_from_json(obj) -> FiniteMonoid:
    for key in ("order", "identity", "table"):
        if key not in obj:
            raise ShapeError("monoid object is missing %r" % key)
    table = obj["table"]
    if not isinstance(table, list) or len(table) != obj["order"]:
        raise ShapeError("declared order %r does not match the table" % obj["order"])
    names = obj.get("names")
    if names is not None:
        names = tuple(str(v) for v in names)
    return FiniteMonoid(tuple(tuple(int(v) for v in row) for row in table),
                        int(obj["identity"]), names=names)


def _monoid_ref(value, resolver) -> FiniteMonoid:
    if isinstance(value, str):
        if resolver is None:
            raise ShapeError("reference %r needs a catalog directory" % value)
        return resolver(value)
    if isinstance(value, dict):
        return monoid_from_json(value)
    raise ShapeError("expected a monoid object or a catalog id string")


def _ref_json(m: FiniteMonoid, ref: str | None):
    return ref if ref is not None else monoid_to_json(m)


def hom_to_json(h: MonoidHom, source_ref: str | None = None,
                target_ref: str | None = None) -> dict:
    return {
        "source": _ref_json(h.source, source_ref),
        "target": _ref_json(h.target, target_ref),
        "map": list(h.map),
    }


def hom_from_json(obj, resolver=None) -> MonoidHom:
    for key in ("source", "target", "map"):
        if key not in obj:
            raise ShapeError("hom object is missing %r" % key)
    src = _monoid_ref(obj["source"], resolver)
    dst = _monoid_ref(obj["target"], resolver)
    return MonoidHom(src, dst, tuple(int(v) for v in obj["map"]))


def action_to_json(act: LaxAction, acting_ref: str | None = None,
                   carrier_ref: str | None = None) -> dict:
    return {
        "acting": _ref_json(act.acting, acting_ref),
        "carrier": _ref_json(act.carrier, carrier_ref),
        "phi": [list(row) for row in act.phi],
        "gamma": [list(row) for row in act.gamma],
    }


def action_from_json(obj, resolver=None) -> LaxAction:
    for key in ("acting", "carrier", "phi", "gamma"):
        if key not in obj:
            raise ShapeError("action object is missing %r" % key)
    return LaxAction(
        _monoid_ref(obj["acting"], resolver),
        _monoid_ref(obj["carrier"], resolver),
        tuple(tuple(int(v) for v in row) for row in obj["phi"]),
        tuple(tuple(int(v) for v in row) for row in obj["gamma"]))


def module_to_json(mod: NModule, acting_ref: str | None = None,
                   carrier_ref: str | None = None) -> dict:
    return {
        "acting": _ref_json(mod.acting, acting_ref),
        "carrier": _ref_json(mod.carrier, carrier_ref),
        "phi": [list(row) for row in mod.phi],
    }


def module_from_json(obj, resolver=None) -> NModule:
    for key in ("acting", "carrier", "phi"):
        if key not in obj:
            raise ShapeError("module object is missing %r" % key)
    return NModule(
        _monoid_ref(obj["acting"], resolver),
        _monoid_ref(obj["carrier"], resolver),
        tuple(tuple(int(v) for v in row) for row in obj["phi"]))


@dataclass(frozen=True)
class CatalogEntry:
    """One named object with a note on how it was built.

    refs maps slot names (source, target, acting, carrier) to the ids of
    other entries so files can share monoids instead of inlining them.
    """

    id: str
    kind: str
    payload: object
    note: str = ""
    refs: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        r = self.refs
        if self.kind == "monoid":
            out = monoid_to_json(self.payload)
        elif self.kind == "hom":
            out = hom_to_json(self.payload, r.get("source"), r.get("target"))
        elif self.kind == "action":
            out = action_to_json(self.payload, r.get("acting"), r.get("carrier"))
        elif self.kind == "module":
            out = module_to_json(self.payload, r.get("acting"), r.get("carrier"))
        else:
            raise ShapeError("unknown entry kind %r" % self.kind)
        if self.note:
            out["note"] = self.note
        return out


def payload_from_json(obj, resolver=None):
    kind = kind_of(obj)
    builder = {"monoid": monoid_from_json, "hom": hom_from_json,
               "action": action_from_json, "module": module_from_json}[kind]
    if kind == "monoid":
        return kind, builder(obj)
    return kind, builder(obj, resolver)


def entry_from_file(path, resolver=None) -> CatalogEntry:
    path = Path(path)
    obj = load_json(path)
    kind, payload = payload_from_json(obj, resolver)
    refs = {k: obj[k] for k in ("source", "target", "acting", "carrier")
            if isinstance(obj.get(k), str)}
    return CatalogEntry(path.stem, kind, payload, obj.get("note", ""), refs)


def write_entry(entry: CatalogEntry, directory) -> Path:
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    path = directory / (entry.id + ".json")
    path.write_text(dumps(entry.to_json()))
    return path
