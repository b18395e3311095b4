"""Tabular sweep results with provenance, bound for CSV or JSON output.

Numbers are rendered with 17 significant digits so that every float
round-trips exactly; rows keep a deterministic order fixed by the producer.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field


def format_float(x: float) -> str:
    return f"{float(x):.17g}"


@dataclass(frozen=True)
class SweepResult:
    columns: tuple[str, ...]
    rows: list[tuple[float, ...]]
    provenance: dict = field(default_factory=dict)

    def __post_init__(self):
        for row in self.rows:
            if len(row) != len(self.columns):
                raise ValueError("ragged sweep table")

    def to_csv(self) -> str:
        lines = [",".join(self.columns)]
        lines.extend(",".join(format_float(v) for v in row) for row in self.rows)
        return "\n".join(lines) + "\n"

    def to_json(self) -> str:
        payload = {
            "columns": list(self.columns),
            "rows": [[float(v) for v in row] for row in self.rows],
            "provenance": self.provenance,
        }
        return json.dumps(payload, sort_keys=True, indent=2) + "\n"
