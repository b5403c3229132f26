"""JSON rack artifacts and sparse matrix files.

Scalars are always strings (``"3/4"``, ``"1"``), entries are listed in
(row, col) order and JSON keys are sorted, so writing the same object
twice gives the same bytes.
"""

from __future__ import annotations

import csv
import io
import json
import re
import warnings
from dataclasses import dataclass

from caryb.constructions import ConstructionDescriptor
from caryb.groups import GroupTable
from caryb.hopf import HopfAlgebra
from caryb.linalg import UNIT, Atom, BasedSpace, LinMap
from caryb.modcoalg import AugmentedRack, ModuleCoalgebra, make_augmented_rack
from caryb.report import Report
from caryb.scalars import field_from_name

RACK_FORMAT = "caryb-rack/1"
MATRIX_FORMAT = "caryb-matrix/1"


class ArtifactError(ValueError):
    """Malformed artifact; ``where`` locates the problem when known."""

    def __init__(self, msg, where=None):
        self.where = where
        super().__init__(msg if where is None else "%s: %s" % (where, msg))


def _dumps(obj) -> str:
    text = json.dumps(obj, ensure_ascii=False, sort_keys=True, indent=1)
    # one line per sparse entry
    text = re.sub(r'\[\s*(-?\d+),\s*(-?\d+),\s*("[^"]*")\s*\]', r"[\1, \2, \3]", text)
    return text + "\n"


def _loads(text: str, where="input"):
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise ArtifactError("invalid JSON (%s)" % e.msg, "%s:%d:%d" % (where, e.lineno, e.colno)) from None


def space_to_json(V: BasedSpace) -> list:
    return [{"name": a.name, "labels": list(a.labels)} for a in V.factors]


def space_from_json(d) -> BasedSpace:
    return BasedSpace(tuple(Atom(a["name"], tuple(a["labels"])) for a in d))


def map_to_json(f: LinMap) -> list:
    fmt = f.field.format
    return [[i, j, fmt(v)] for i, j, v in f.entries()]


def map_from_json(entries, source, target, field, where="map") -> LinMap:
    try:
        triples = [(int(i), int(j), field.parse(str(v))) for i, j, v in entries]
    except (TypeError, ValueError) as e:
        raise ArtifactError("bad entry (%s)" % e, where) from None
    for i, j, _ in triples:
        if not (0 <= i < target.dim and 0 <= j < source.dim):
            raise ArtifactError("entry (%d, %d) outside %dx%d" % (i, j, target.dim, source.dim), where)
    return LinMap(source, target, triples, field)


# -- racks ---------------------------------------------------------------------

_HOPF_MAPS = ("mu", "eta", "delta", "epsilon", "antipode")
_RACK_MAPS = ("delta", "epsilon", "action", "nu")


def rack_to_json(R: AugmentedRack) -> dict:
    H = R.hopf
    desc = R.descriptor.to_dict() if R.descriptor is not None else None
    return {
        "format": RACK_FORMAT,
        "scalar": R.field.name,
        "descriptor": desc,
        "hopf": {
            "name": H.name,
            "kind": H.kind,
            "group": H.group.to_json() if H.group is not None else None,
            "space": space_to_json(H.space),
            "maps": {k: map_to_json(getattr(H, k)) for k in _HOPF_MAPS},
        },
        "rack": {
            "name": R.name,
            "space": space_to_json(R.space),
            "maps": {
                "delta": map_to_json(R.X.delta),
                "epsilon": map_to_json(R.X.epsilon),
                "action": map_to_json(R.X.action),
                "nu": map_to_json(R.nu),
            },
        },
        "certification": R.certification.to_dict(),
    }


def dumps_rack(R: AugmentedRack) -> str:
    return _dumps(rack_to_json(R))


def save_rack(R: AugmentedRack, path):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps_rack(R))


@dataclass
class RackArtifact:
    rack: AugmentedRack
    embedded: Report | None
    data: dict


def rack_from_json(d, where="artifact") -> RackArtifact:
    """Rebuild and re-certify a rack. Certification failures are kept, not raised."""
    if not isinstance(d, dict) or d.get("format") != RACK_FORMAT:
        raise ArtifactError("not a %s document" % RACK_FORMAT, where)
    try:
        F = field_from_name(d["scalar"])
        h, r = d["hopf"], d["rack"]
        V = space_from_json(h["space"])
        roles = {"mu": (V * V, V), "eta": (UNIT, V), "delta": (V, V * V), "epsilon": (V, UNIT), "antipode": (V, V)}
        hm = {k: map_from_json(h["maps"][k], *roles[k], F, "%s:hopf.%s" % (where, k)) for k in _HOPF_MAPS}
        G = GroupTable.from_json(h["group"]) if h.get("group") else None
        H = HopfAlgebra(h["name"], V, field=F, group=G, kind=h.get("kind"), **hm)
        X = space_from_json(r["space"])
        roles = {"delta": (X, X * X), "epsilon": (X, UNIT), "action": (X * V, X), "nu": (X, V)}
        rm = {k: map_from_json(r["maps"][k], *roles[k], F, "%s:rack.%s" % (where, k)) for k in _RACK_MAPS}
    except KeyError as e:
        raise ArtifactError("missing field %s" % e, where) from None
    desc = ConstructionDescriptor.from_dict(d["descriptor"]) if d.get("descriptor") else None
    M = ModuleCoalgebra(r["name"], X, rm["delta"], rm["epsilon"], rm["action"], H)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        R = make_augmented_rack(M, rm["nu"], desc, strict=False)
    embedded = Report.from_dict(d["certification"]) if d.get("certification") else None
    return RackArtifact(R, embedded, d)


def load_rack(path) -> RackArtifact:
    with open(path, encoding="utf-8") as fh:
        text = fh.read()
    return rack_from_json(_loads(text, str(path)), str(path))


# -- matrices ------------------------------------------------------------------


def matrix_header(f: LinMap, provenance=None) -> dict:
    return {
        "format": MATRIX_FORMAT,
        "rows": f.target.dim,
        "cols": f.source.dim,
        "source": space_to_json(f.source),
        "target": space_to_json(f.target),
        "scalar": f.field.name,
        "provenance": provenance,
    }


def dumps_matrix(f: LinMap, provenance=None, fmt: str = "json") -> str:
    head = matrix_header(f, provenance)
    if fmt == "json":
        head["entries"] = map_to_json(f)
        return _dumps(head)
    if fmt == "csv":
        out = io.StringIO()
        out.write("# %s\n" % MATRIX_FORMAT)
        out.write("# %s\n" % json.dumps(head, ensure_ascii=False, sort_keys=True))
        w = csv.writer(out, lineterminator="\n")
        w.writerow(["row", "col", "value"])
        w.writerows(map_to_json(f))
        return out.getvalue()
    raise ValueError("unknown matrix format %r" % fmt)


def loads_matrix(text: str, where="matrix"):
    """Parse either matrix format; returns ``(LinMap, header)``."""
    if text.startswith("#"):
        lines = text.splitlines()
        comments = [ln[1:].strip() for ln in lines if ln.startswith("#")]
        heads = [c for c in comments if c.startswith("{")]
        if not heads:
            raise ArtifactError("CSV matrix lacks a JSON header comment", where)
        head = _loads(heads[0], where + ":header")
        body = [ln for ln in lines if not ln.startswith("#")]
        rows = list(csv.reader(body))
        if not rows or rows[0] != ["row", "col", "value"]:
            raise ArtifactError("expected a row,col,value header", where)
        entries = rows[1:]
    else:
        head = _loads(text, where)
        if not isinstance(head, dict) or "entries" not in head:
            raise ArtifactError("missing entries", where)
        entries = head.pop("entries")
    if head.get("format") != MATRIX_FORMAT:
        raise ArtifactError("not a %s document" % MATRIX_FORMAT, where)
    F = field_from_name(head["scalar"])
    src, tgt = space_from_json(head["source"]), space_from_json(head["target"])
    if src.dim != head["cols"] or tgt.dim != head["rows"]:
        raise ArtifactError("header dimensions disagree with the basis labels", where)
    return map_from_json(entries, src, tgt, F, where), head


def save_matrix(f: LinMap, path, provenance=None, fmt: str = "json"):
    with open(path, "w", encoding="utf-8", newline="") as fh:
        fh.write(dumps_matrix(f, provenance, fmt))


def load_matrix(path):
    with open(path, encoding="utf-8") as fh:
        return loads_matrix(fh.read(), str(path))
