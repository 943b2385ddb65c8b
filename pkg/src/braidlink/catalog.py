"""
Known forced extensions of a base braid, with their expected linking numbers.

Forcedness is recorded as an attested fact (``source``), not computed here.
Catalog files are JSON::

    {"records": [{"name": "alpha1", "n": 3, "m": 2,
                  "base_word": "1 -2", "extension_word": "1 -2 -3 -3 -4",
                  "base_strands": [1, 2, 3], "expected_lk": -1,
                  "source": "..."}]}
"""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass
from pathlib import Path
from typing import NamedTuple, Optional

from .braid import (BraidError, BraidWord, closure_components, delete_strands,
                    free_cancel, parse_braid)

SUBBRAID = "sub-braid"
TWO_COMPONENTS = "two-components"
SHAPE = "shape"


class CatalogError(ValueError):
    pass


@dataclass(frozen=True)
class ExtensionRecord:
    name: str
    n: int
    m: int
    base_word: str
    extension_word: str
    base_strands: tuple[int, ...]
    expected_lk: Optional[int]
    source: str = ""

    def __post_init__(self):
        object.__setattr__(self, "base_strands", tuple(sorted(self.base_strands)))

    @property
    def base(self) -> BraidWord:
        return parse_braid(self.base_word, self.n)

    @property
    def extension(self) -> BraidWord:
        return parse_braid(self.extension_word, self.n + self.m)

    def to_json(self) -> dict:
        d = asdict(self)
        d["base_strands"] = list(self.base_strands)
        return d

    @classmethod
    def from_json(cls, d: dict) -> ExtensionRecord:
        try:
            return cls(
                name=str(d["name"]),
                n=int(d["n"]),
                m=int(d["m"]),
                base_word=str(d["base_word"]),
                extension_word=str(d["extension_word"]),
                base_strands=tuple(int(x) for x in d["base_strands"]),
                expected_lk=None if d.get("expected_lk") is None else int(d["expected_lk"]),
                source=str(d.get("source", "")),
            )
        except (KeyError, TypeError, ValueError) as exc:
            raise CatalogError(f"malformed record {d!r}: {exc}") from None


class Problem(NamedTuple):
    invariant: str
    reason: str


def validate_record(rec: ExtensionRecord) -> list[Problem]:
    """Return the violated record invariants (empty when the record is sound)."""
    try:
        base, ext = rec.base, rec.extension
    except BraidError as exc:
        return [Problem(SHAPE, str(exc))]
    if len(rec.base_strands) != rec.n or not set(rec.base_strands) <= set(range(1, ext.n + 1)):
        return [Problem(SHAPE, f"base_strands {list(rec.base_strands)} do not name {rec.n} "
                               f"strands of {ext.n}")]
    problems = []
    comps = closure_components(ext)
    if frozenset(rec.base_strands) not in comps:
        problems.append(Problem(TWO_COMPONENTS,
                                f"base strands {list(rec.base_strands)} are not a closure component"))
        return problems
    if len(comps) != 2:
        problems.append(Problem(TWO_COMPONENTS,
                                f"closure has {len(comps)} components "
                                f"{[sorted(c) for c in comps]}, expected 2"))
    sub = free_cancel(delete_strands(ext, rec.base_strands))
    if sub != free_cancel(base):
        problems.append(Problem(SUBBRAID, f"deleting the other strands leaves {sub}, "
                                          f"not the base word {rec.base_word!r}"))
    return problems


_SOURCE_2 = "forced extension of LR, period 2 (Jiang-Zheng, Example 6.4)"
_SOURCE_J = "forced extension of LR from Jiang's list"

_BUILTIN = (
    ExtensionRecord("alpha1", 3, 2, "1 -2", "1 -2 -3 -3 -4", (1, 2, 3), -1, _SOURCE_2),
    ExtensionRecord("alpha2", 3, 2, "1 -2", "1 -2 4 3 2 1 1 -2 -3", (1, 2, 3), 1,
                    "second period-2 extension of LR"),
    ExtensionRecord("gamma1", 3, 3, "1 -2",
                    "1 -2 3 4 5 2 3 4 1 2 3 1 2 3 -4 -5 1 2 -3 -4 1 -2 -3 -3 -3 -4",
                    (1, 2, 3), 2, _SOURCE_J + ", period 3"),
    ExtensionRecord("delta1", 3, 4, "1 -2",
                    "1 -2 4 5 6 3 4 5 2 3 4 1 2 3 1 2 1 3 2 1 "
                    "-4 -3 -2 -5 -4 -3 -6 -5 -4 -3 -4 -3 -4 -3 -4",
                    (1, 2, 3), 1, _SOURCE_J + ", period 4"),
)


def builtin_records() -> list[ExtensionRecord]:
    return list(_BUILTIN)


def dumps_catalog(records: list[ExtensionRecord]) -> str:
    return json.dumps({"records": [r.to_json() for r in records]}, indent=2)


def save_catalog(records: list[ExtensionRecord], path) -> None:
    Path(path).write_text(dumps_catalog(records) + "\n")


def read_catalog(path) -> list[ExtensionRecord]:
    """Parse a catalog file without validating the records."""
    try:
        data = json.loads(Path(path).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise CatalogError(f"cannot read catalog {path}: {exc}") from None
    if not isinstance(data, dict) or not isinstance(data.get("records"), list):
        raise CatalogError(f"{path}: expected an object with a 'records' list")
    return [ExtensionRecord.from_json(d) for d in data["records"]]


class LoadResult(NamedTuple):
    records: list[ExtensionRecord]
    rejected: list[tuple[ExtensionRecord, list[Problem]]]


def load_catalog(path) -> LoadResult:
    valid, rejected = [], []
    for rec in read_catalog(path):
        problems = validate_record(rec)
        if problems:
            rejected.append((rec, problems))
        else:
            valid.append(rec)
    return LoadResult(valid, rejected)
