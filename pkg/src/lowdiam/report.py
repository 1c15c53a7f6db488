"""JSON reports binding a partition or cover to its input and bound.

Edges are referenced by 0-based index into the input's edge order.
Infinite diameters are written as ``null``.  Reading rejects unknown and
missing fields.
"""

from __future__ import annotations

import json
import math
from dataclasses import asdict, dataclass, field, fields
from pathlib import Path

SCHEMA = "ldd/1"


@dataclass
class Report:
    kind: str  # "partition" or "cover"
    input: dict
    algorithm: str
    epsilon: str | None
    diam: int
    parts: list[list[int]]
    e0: list[int]
    diameters: list[int | None]
    part_count: int
    e0_size: int
    bound: float | None
    within_bound: bool | None
    fallback_parts: int = 0
    raw_parts: int | None = None
    seed: int | None = None
    elapsed_ms: float = 0.0
    schema: str = field(default=SCHEMA)

    def to_dict(self) -> dict:
        return asdict(self)

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True)

    @classmethod
    def from_dict(cls, data: dict) -> Report:
        names = {f.name for f in fields(cls)}
        unknown = set(data) - names
        if unknown:
            raise ValueError(f"unknown report fields: {sorted(unknown)}")
        missing = names - set(data)
        if missing:
            raise ValueError(f"missing report fields: {sorted(missing)}")
        if data["schema"] != SCHEMA:
            raise ValueError(f"unsupported schema {data['schema']!r}, expected {SCHEMA!r}")
        return cls(**data)

    @classmethod
    def from_json(cls, text: str) -> Report:
        return cls.from_dict(json.loads(text))

    def write(self, path: str | Path) -> None:
        Path(path).write_text(self.to_json() + "\n")

    @classmethod
    def read(cls, path: str | Path) -> Report:
        return cls.from_json(Path(path).read_text())


def encode_diameter(d) -> int | None:
    return None if d == math.inf else int(d)


def decode_diameter(d: int | None):
    return math.inf if d is None else d
