"""Canonical JSON forms for exact values, fusion rings and modular data.

The schema shipped at data/schema.json documents these shapes; every CLI
command emits them, and loading the output back yields equal in-memory values.
"""

from __future__ import annotations

import json
from importlib import resources

import numpy as np

from .cyclo import CycNum
from .ring import FusionRing, ModularData


def cyc_to_json(x: CycNum) -> dict:
    return {"order": x.order, "num": list(x.num), "den": x.den}


def cyc_from_json(obj: dict) -> CycNum:
    return CycNum(obj["order"], obj["num"], obj["den"])


def ring_to_json(r: FusionRing) -> dict:
    return {
        "labels": list(r.labels),
        "unit": r.unit,
        "dual": list(r.dual),
        "N": r.N.tolist(),
    }


def ring_from_json(obj: dict) -> FusionRing:
    return FusionRing(
        tuple(obj["labels"]),
        obj["unit"],
        tuple(obj["dual"]),
        np.asarray(obj["N"], dtype=np.int64),
    )


def modular_to_json(md: ModularData, include_s: bool = True) -> dict:
    out = {
        "ring": ring_to_json(md.ring),
        "dims": [cyc_to_json(d) for d in md.dims],
        "twists": [cyc_to_json(t) for t in md.twists],
    }
    if include_s:
        out["S"] = [[cyc_to_json(x) for x in row] for row in md.s_matrix()]
    return out


def modular_from_json(obj: dict) -> ModularData:
    S = None
    if "S" in obj:
        S = [[cyc_from_json(x) for x in row] for row in obj["S"]]
    return ModularData(
        ring_from_json(obj["ring"]),
        tuple(cyc_from_json(d) for d in obj["dims"]),
        tuple(cyc_from_json(t) for t in obj["twists"]),
        S,
    )


def condensed_to_json(cat) -> dict:
    return {
        "algebra": [list(w) for w in cat.algebra],
        "level": cat.spec.level,
        "series": cat.spec.series,
        "simples": [
            {
                "kind": lab.kind,
                "orbit_rep": list(lab.orbit_rep),
                "split_index": lab.split_index,
                "ambient": [list(w) for w in cat.ambient_map[lab]],
            }
            for lab in cat.simples
        ],
        "modular": modular_to_json(cat.md),
    }


def dumps(obj: dict) -> str:
    return json.dumps(obj, indent=2, sort_keys=True, ensure_ascii=False) + "\n"


def load_schema() -> dict:
    text = resources.files("fusionkit").joinpath("data/schema.json").read_text()
    return json.loads(text)
