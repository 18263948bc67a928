"""Loading and saving of dataset and relation files.

One JSON object per file. All numbers travel as decimal strings so no
binary-float representation error can enter the pipeline. A dataset file
looks like:

    {
      "universe": ["s1", "s2"],
      "parameters": [
        {"name": "result", "preference": "0.7",
         "values": {"s1": {"mu": "0.8", "nu": "0.1"},
                    "s2": {"mu": "0.9", "nu": "0.05"}}}
      ]
    }

A relation file names its parents either inline (a nested dataset object)
or as a path relative to the relation file, records the norm pair under
"norms", and lists one entry per parameter pair:

    {
      "source": "f.json",
      "target": {...},
      "norms": "product",
      "entries": [
        {"source_param": "r", "target_param": "c", "degree": "0.3",
         "values": {"s1": {"mu": "0.5", "nu": "0.3"}, ...}}
      ]
    }
"""

from __future__ import annotations

import json
from pathlib import Path

from .degrees import Degree
from .errors import DatasetError, DatasetParseError, DegreeError, GifssError
from .norms import pair_from_name
from .relations import Gifsr
from .sets import Gifss, IfSet, IfsValue, Universe


def _degree(raw, where: str) -> Degree:
    if isinstance(raw, float):
        raise DatasetError(
            f"{where}: binary float {raw!r} not accepted, use a decimal string"
        )
    if not isinstance(raw, (str, int)):
        raise DatasetError(f"{where}: expected a decimal string, got {type(raw).__name__}")
    try:
        return Degree(raw)
    except DegreeError as e:
        raise DatasetError(f"{where}: {e}") from None


def _ifs_value(raw, where: str, allow_invalid: bool) -> IfsValue:
    if not isinstance(raw, dict) or set(raw) != {"mu", "nu"}:
        raise DatasetError(f"{where}: expected an object with keys mu and nu")
    mu = _degree(raw["mu"], f"{where}: mu")
    nu = _degree(raw["nu"], f"{where}: nu")
    if allow_invalid:
        return IfsValue.unchecked(mu, nu)
    try:
        return IfsValue(mu, nu)
    except GifssError as e:
        raise DatasetError(f"{where}: {e}") from None


def _ifset(universe: Universe, raw, where: str, allow_invalid: bool) -> IfSet:
    if not isinstance(raw, dict):
        raise DatasetError(f"{where}: values must be an object keyed by element")
    unknown = sorted(set(raw) - set(universe.elements))
    if unknown:
        raise DatasetError(f"{where}: values for unknown elements {unknown}")
    missing = [x for x in universe if x not in raw]
    if missing:
        raise DatasetError(f"{where}: values missing for elements {missing}")
    return IfSet(
        universe,
        tuple(
            _ifs_value(raw[x], f"{where}: element {x!r}", allow_invalid)
            for x in universe
        ),
    )


def gifss_from_dict(obj, allow_invalid: bool = False) -> Gifss:
    if not isinstance(obj, dict):
        raise DatasetError("dataset must be a single JSON object")
    if "universe" not in obj or "parameters" not in obj:
        raise DatasetError("dataset needs 'universe' and 'parameters' fields")
    raw_universe = obj["universe"]
    if not isinstance(raw_universe, list) or not all(
        isinstance(x, str) for x in raw_universe
    ):
        raise DatasetError("'universe' must be a list of element names")
    try:
        universe = Universe(raw_universe)
    except GifssError as e:
        raise DatasetError(str(e)) from None
    if not isinstance(obj["parameters"], list):
        raise DatasetError("'parameters' must be a list")
    entries = []
    for k, rec in enumerate(obj["parameters"]):
        if not isinstance(rec, dict) or "name" not in rec:
            raise DatasetError(f"parameter record {k} needs a 'name'")
        name = rec["name"]
        where = f"parameter {name!r}"
        if not isinstance(name, str) or not name:
            raise DatasetError(f"parameter record {k}: name must be a non-empty string")
        if "preference" not in rec or "values" not in rec:
            raise DatasetError(f"{where}: needs 'preference' and 'values'")
        pref = _degree(rec["preference"], f"{where}: preference")
        ifset = _ifset(universe, rec["values"], where, allow_invalid)
        entries.append((name, ifset, pref))
    try:
        return Gifss(universe, entries)
    except GifssError as e:
        raise DatasetError(str(e)) from None


def gifss_to_dict(g: Gifss) -> dict:
    return {
        "universe": list(g.universe),
        "parameters": [
            {
                "name": p,
                "preference": str(pref),
                "values": {
                    x: {"mu": str(v.mu), "nu": str(v.nu)} for x, v in ifset.items()
                },
            }
            for p, ifset, pref in g.entries()
        ],
    }


def _read_json(path: Path):
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as e:
        raise DatasetParseError(f"cannot read {path}: {e}") from None
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise DatasetParseError(f"{path} is not well-formed JSON: {e}") from None


def load_gifss(path, allow_invalid: bool = False) -> Gifss:
    return gifss_from_dict(_read_json(Path(path)), allow_invalid)


def save_gifss(g: Gifss, path) -> None:
    Path(path).write_text(
        json.dumps(gifss_to_dict(g), indent=2) + "\n", encoding="utf-8"
    )


def relation_from_dict(obj, base_dir=None, allow_invalid: bool = False) -> Gifsr:
    if not isinstance(obj, dict):
        raise DatasetError("relation must be a single JSON object")
    for key in ("source", "target", "norms", "entries"):
        if key not in obj:
            raise DatasetError(f"relation needs a {key!r} field")

    def parent(raw, label: str) -> Gifss:
        if isinstance(raw, str):
            root = Path(base_dir) if base_dir is not None else Path(".")
            return load_gifss(root / raw, allow_invalid)
        if isinstance(raw, dict):
            return gifss_from_dict(raw, allow_invalid)
        raise DatasetError(f"{label} must be a path string or an inline dataset")

    source = parent(obj["source"], "source")
    target = parent(obj["target"], "target")
    if not isinstance(obj["norms"], str):
        raise DatasetError("'norms' must be a norm pair name")
    pair = pair_from_name(obj["norms"])
    if not isinstance(obj["entries"], list):
        raise DatasetError("'entries' must be a list")
    entries = {}
    for k, rec in enumerate(obj["entries"]):
        if not isinstance(rec, dict):
            raise DatasetError(f"relation entry {k} must be an object")
        for key in ("source_param", "target_param", "degree", "values"):
            if key not in rec:
                raise DatasetError(f"relation entry {k} needs a {key!r} field")
        a, b = rec["source_param"], rec["target_param"]
        where = f"relation entry ({a!r}, {b!r})"
        if (a, b) in entries:
            raise DatasetError(f"{where}: duplicated")
        degree = _degree(rec["degree"], f"{where}: degree")
        ifset = _ifset(source.universe, rec["values"], where, allow_invalid)
        entries[(a, b)] = (ifset, degree)
    return Gifsr(source, target, entries, pair)


def relation_to_dict(r: Gifsr) -> dict:
    return {
        "source": gifss_to_dict(r.source),
        "target": gifss_to_dict(r.target),
        "norms": r.pair.name,
        "entries": [
            {
                "source_param": a,
                "target_param": b,
                "degree": str(degree),
                "values": {
                    x: {"mu": str(v.mu), "nu": str(v.nu)} for x, v in ifset.items()
                },
            }
            for a, b, ifset, degree in r.cells()
        ],
    }


def load_relation(path, allow_invalid: bool = False) -> Gifsr:
    p = Path(path)
    return relation_from_dict(_read_json(p), p.parent, allow_invalid)


def save_relation(r: Gifsr, path) -> None:
    Path(path).write_text(
        json.dumps(relation_to_dict(r), indent=2) + "\n", encoding="utf-8"
    )
