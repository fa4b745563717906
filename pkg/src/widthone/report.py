"""Deterministic JSON / CSV / plain renderings. Integers always travel as decimal strings."""

from __future__ import annotations

import csv
import hashlib
import io
import json
from typing import Any, Iterable, Sequence

from .poset import DenseTensor
from .polynomial import IntPolynomial


def tensor_entries(t: DenseTensor) -> list[dict[str, Any]]:
    return [{"index": list(x), "value": str(v)} for x, v in t.items()]


def sum_document(n: Sequence[int], s: int, method: str, t: DenseTensor, agreement: bool) -> dict[str, Any]:
    return {
        "n": list(n),
        "s": s,
        "method": method,
        "entries": tensor_entries(t),
        "total": str(t.total()),
        "agreement": agreement,
    }


def dumps(doc: Any) -> str:
    """JSON with one top-level key per line and one list element per line."""
    if not isinstance(doc, dict) or not doc:
        return json.dumps(doc) + "\n"
    lines = []
    for key, value in doc.items():
        if isinstance(value, list) and value and all(isinstance(v, dict) for v in value):
            items = ",\n".join("    " + json.dumps(v) for v in value)
            rendered = "[\n" + items + "\n  ]"
        else:
            rendered = json.dumps(value)
        lines.append(f"  {json.dumps(key)}: {rendered}")
    return "{\n" + ",\n".join(lines) + "\n}\n"


def digest(t: DenseTensor) -> str:
    """SHA-256 of the canonical serialization of shape and entries."""
    payload = json.dumps({"shape": list(t.shape), "entries": [str(v) for v in t.entries]},
                         separators=(",", ":"))
    return hashlib.sha256(payload.encode()).hexdigest()


def tensor_csv(t: DenseTensor) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow([f"x{i}" for i in range(1, len(t.shape) + 1)] + ["value"])
    for x, v in t.items():
        w.writerow(list(x) + [str(v)])
    return buf.getvalue()


def tensor_plain(t: DenseTensor) -> str:
    width = max(len(str(v)) for v in t.entries)
    last = t.shape[-1]
    lines = []
    for start in range(0, len(t.entries), last):
        row = t.entries[start:start + last]
        label = f"{tuple(_prefix(t.shape, start // last))} " if len(t.shape) > 1 else ""
        lines.append(label + " ".join(str(v).rjust(width) for v in row))
    return "\n".join(lines) + "\n"


def _prefix(shape: Sequence[int], row: int) -> list[int]:
    coords = []
    for ni in reversed(shape[:-1]):
        row, r = divmod(row, ni)
        coords.append(r + 1)
    return list(reversed(coords))


def poly_strings(p: IntPolynomial | Iterable[int]) -> list[str]:
    coeffs = list(p)
    return [str(c) for c in coeffs] or ["0"]


def rows_csv(header: Sequence[str], rows: Iterable[Sequence[Any]]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    for row in rows:
        w.writerow(row)
    return buf.getvalue()
