"""Reading dot files and formatting reports.

Input is CSV with one "x,y" pair per line; an optional header line is
detected by a non-numeric first field, blank lines are ignored.  Output
tables round to 4 decimals (trailing zeros trimmed) with the literal "inf"
for deaths that never happen; JSON keeps full precision, spelling infinity
as the string "inf" since JSON has no literal for it.
"""
from __future__ import annotations

import json
import math
import os
import sys
from pathlib import Path

from .analysis import BettiProfile, SignatureGroup
from .geometry import Point2, PointCloud, dedupe
from .persistence import Barcode, PersistencePair


class ParseError(Exception):
    """A dot file could not be parsed; the message names the line."""


def read_points_csv(path: str | os.PathLike) -> PointCloud:
    """Ingest a dot file, deduplicating exact repeats."""
    raw: list[Point2] = []
    first_data_line = True
    with open(path, encoding="utf-8-sig") as fh:
        for lineno, line in enumerate(fh, start=1):
            line = line.strip()
            if not line:
                continue
            fields = [f.strip() for f in line.split(",")]
            if first_data_line:
                first_data_line = False
                try:
                    float(fields[0])
                except ValueError:
                    continue  # header
            if len(fields) != 2:
                raise ParseError(f"{path}: line {lineno}: expected 2 fields, got {len(fields)}")
            try:
                x, y = float(fields[0]), float(fields[1])
            except ValueError:
                raise ParseError(f"{path}: line {lineno}: not a number pair: {line!r}") from None
            if not (math.isfinite(x) and math.isfinite(y)):
                raise ParseError(f"{path}: line {lineno}: non-finite coordinate: {line!r}")
            raw.append(Point2(x, y))
    if not raw:
        raise ParseError(f"{path}: no data rows")
    cloud, _ = dedupe(raw, provenance=str(path))
    return cloud


def fmt(x: float) -> str:
    """4-decimal rendering with trailing zeros trimmed; inf stays 'inf'."""
    if math.isinf(x):
        return "inf"
    s = f"{x:.4f}".rstrip("0").rstrip(".")
    return s if s else "0"


def betti_csv(p: BettiProfile) -> str:
    lines = ["radius,pieces,holes"]
    for r, sig in p.entries:
        lines.append(f"{fmt(r)},{sig.pieces},{sig.holes}")
    return "\n".join(lines) + "\n"


def betti_json(p: BettiProfile) -> str:
    doc = {
        "source": p.source,
        "mode": p.mode,
        "rows": [
            {"radius": r, "pieces": sig.pieces, "holes": sig.holes}
            for r, sig in p.entries
        ],
    }
    return json.dumps(doc, indent=2) + "\n"


def _reported(b: Barcode, include_zero_length: bool) -> list[PersistencePair]:
    if include_zero_length:
        return list(b.pairs)
    return [p for p in b.pairs if not p.is_zero_length]


def barcode_csv(b: Barcode, include_zero_length: bool = False) -> str:
    lines = ["dimension,birth,death"]
    for p in _reported(b, include_zero_length):
        lines.append(f"{p.dimension},{fmt(p.birth)},{fmt(p.death)}")
    return "\n".join(lines) + "\n"


def barcode_json(b: Barcode, include_zero_length: bool = False) -> str:
    doc = {
        "mode": b.mode,
        "r_max": b.r_max,
        "point_count": b.point_count,
        "pairs": [
            {
                "dimension": p.dimension,
                "birth": p.birth,
                "death": "inf" if p.is_infinite else p.death,
            }
            for p in _reported(b, include_zero_length)
        ],
    }
    return json.dumps(doc, indent=2) + "\n"


def groups_json(groups: list[SignatureGroup]) -> str:
    doc = {
        "groups": [
            {
                "signature": {"pieces": g.signature.pieces, "holes": g.signature.holes},
                "members": list(g.members),
            }
            for g in groups
        ]
    }
    return json.dumps(doc, indent=2) + "\n"


def points_csv(cloud: PointCloud) -> str:
    lines = ["x,y"]
    for p in cloud:
        lines.append(f"{p.x:.6f},{p.y:.6f}")
    return "\n".join(lines) + "\n"


def write_text(text: str, out: str | os.PathLike | None) -> None:
    """Write to a file, or stdout when no path is given."""
    if out is None:
        sys.stdout.write(text)
    else:
        Path(out).write_text(text, encoding="utf-8")
