"""Datasheet comparison: diffs, comparability keys, and the registry index.

Whether two experiments measure the same thing is decided from the six
single-choice criterion/mode properties (4.1.1-4.2.3), distilled into a
ComparabilityKey per criterion block. Criterion names (4.3.1) are compared
separately: names alone are unreliable, the key carries the meaning.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from enum import Enum
from pathlib import Path
from typing import Dict, List, Optional, Tuple, Union

from .document import (
    Datasheet,
    CriterionBlock,
    Text,
    SingleChoice,
    encode_value,
    parse_canonical,
)
from .errors import HedsError, IncompleteCriterionError, VersionMismatchError
from .schema import QuestionId, Sentinel
from .validate import validate

_KEY_FIELDS: Tuple[Tuple[str, str, Tuple[str, ...]], ...] = (
    ("quality_type", "4.1.1", ("correctness", "goodness", "features")),
    ("aspect", "4.1.2", ("form", "content", "both")),
    ("frame", "4.1.3", ("own-right", "relative-to-input", "external-frame")),
    ("judgment", "4.2.1", ("objective", "subjective")),
    ("presentation", "4.2.2", ("absolute", "relative")),
    ("scope", "4.2.3", ("intrinsic", "extrinsic")),
)

KEY_QUESTION_PATHS = tuple(path for _, path, _vals in _KEY_FIELDS)


@dataclass(frozen=True)
class ComparabilityKey:
    """The 6-tuple of criterion and evaluation-mode properties."""

    quality_type: str
    aspect: str
    frame: str
    judgment: str
    presentation: str
    scope: str

    def __post_init__(self) -> None:
        for (field_name, _path, allowed) in _KEY_FIELDS:
            value = getattr(self, field_name)
            if value not in allowed:
                raise ValueError(f"{field_name} must be one of {allowed}, got {value!r}")

    def as_tuple(self) -> Tuple[str, str, str, str, str, str]:
        return (
            self.quality_type,
            self.aspect,
            self.frame,
            self.judgment,
            self.presentation,
            self.scope,
        )

    @property
    def criterion_part(self) -> Tuple[str, str, str]:
        return self.as_tuple()[:3]

    @property
    def mode_part(self) -> Tuple[str, str, str]:
        return self.as_tuple()[3:]


class Level(Enum):
    """How comparable two criterion blocks are."""

    SAME_CRITERION = "same-criterion"
    SAME_ASPECT = "same-aspect"
    MODE_MATCH_ONLY = "mode-match-only"
    UNRELATED = "unrelated"


def criterion_key(block: CriterionBlock) -> ComparabilityKey:
    """Derive the comparability key of one criterion block."""
    values: Dict[str, str] = {}
    missing: List[str] = []
    for field_name, path, _allowed in _KEY_FIELDS:
        answer = block.answers.get(path)
        if isinstance(answer, SingleChoice):
            values[field_name] = answer.option
        else:
            missing.append(path)
    if missing:
        raise IncompleteCriterionError(block.index, missing)
    return ComparabilityKey(**values)


def classify(a: ComparabilityKey, b: ComparabilityKey) -> Level:
    """Comparability level of two keys; the four levels are exclusive."""
    if a.as_tuple() == b.as_tuple():
        return Level.SAME_CRITERION
    if a.criterion_part == b.criterion_part:
        return Level.SAME_ASPECT
    if a.mode_part == b.mode_part:
        return Level.MODE_MATCH_ONLY
    return Level.UNRELATED


def criterion_name(block: CriterionBlock) -> Optional[str]:
    answer = block.answers.get("4.3.1")
    if isinstance(answer, Text):
        return answer.content.strip()
    return None


@dataclass(frozen=True)
class PairComparison:
    a_index: int
    b_index: int
    level: Level
    name_match: bool
    a_name: Optional[str] = None
    b_name: Optional[str] = None


@dataclass(frozen=True)
class ComparabilityReport:
    pairs: Tuple[PairComparison, ...]

    def to_json_dict(self) -> dict:
        return {
            "pairs": [
                {
                    "a": p.a_index,
                    "b": p.b_index,
                    "level": p.level.value,
                    "name_match": p.name_match,
                    "a_name": p.a_name,
                    "b_name": p.b_name,
                }
                for p in self.pairs
            ]
        }

    def to_text(self) -> str:
        lines = []
        for p in self.pairs:
            names = ""
            if p.a_name or p.b_name:
                names = f" ({p.a_name or '?'} vs {p.b_name or '?'})"
            match = " [name match]" if p.name_match else ""
            lines.append(f"criterion {p.a_index} vs {p.b_index}: {p.level.value}{names}{match}")
        return "".join(line + "\n" for line in lines)


def comparability(a: Datasheet, b: Datasheet) -> ComparabilityReport:
    """Classify every pair of criterion blocks across two sheets."""
    keys_a = [criterion_key(block) for block in a.criteria]
    keys_b = [criterion_key(block) for block in b.criteria]
    pairs = []
    for i, (block_a, key_a) in enumerate(zip(a.criteria, keys_a), start=1):
        for j, (block_b, key_b) in enumerate(zip(b.criteria, keys_b), start=1):
            name_a = criterion_name(block_a)
            name_b = criterion_name(block_b)
            name_match = (
                name_a is not None
                and name_b is not None
                and name_a.casefold() == name_b.casefold()
            )
            pairs.append(
                PairComparison(
                    a_index=i,
                    b_index=j,
                    level=classify(key_a, key_b),
                    name_match=name_match,
                    a_name=name_a,
                    b_name=name_b,
                )
            )
    return ComparabilityReport(pairs=tuple(pairs))


# --- diff --------------------------------------------------------------------

@dataclass(frozen=True)
class DiffEntry:
    id: QuestionId
    a: Optional[object]  # AnswerValue or None
    b: Optional[object]


def diff(a: Datasheet, b: Datasheet) -> List[DiffEntry]:
    """Exactly the paths whose answers differ, in document order.

    Criterion blocks are aligned by index; a block present on one side only
    contributes all its answered paths as present-vs-absent entries.
    """
    if a.schema_version != b.schema_version:
        raise VersionMismatchError(a.schema_version, b.schema_version)
    entries: List[DiffEntry] = []
    for path in set(a.fixed_answers) | set(b.fixed_answers):
        va, vb = a.fixed_answers.get(path), b.fixed_answers.get(path)
        if va != vb:
            entries.append(DiffEntry(QuestionId(path), va, vb))
    for i in range(1, max(len(a.criteria), len(b.criteria)) + 1):
        block_a = a.criteria[i - 1].answers if i <= len(a.criteria) else {}
        block_b = b.criteria[i - 1].answers if i <= len(b.criteria) else {}
        for path in set(block_a) | set(block_b):
            va, vb = block_a.get(path), block_b.get(path)
            if va != vb:
                entries.append(DiffEntry(QuestionId(path, i), va, vb))
    entries.sort(key=lambda e: e.id.sort_key)
    return entries


def diff_to_json_dict(entries: List[DiffEntry]) -> list:
    return [
        {
            "at": str(e.id),
            "a": None if e.a is None else encode_value(e.a),
            "b": None if e.b is None else encode_value(e.b),
        }
        for e in entries
    ]


def diff_to_text(entries: List[DiffEntry]) -> str:
    out = []
    for e in entries:
        left = "(unanswered)" if e.a is None else json.dumps(encode_value(e.a), ensure_ascii=False)
        right = "(unanswered)" if e.b is None else json.dumps(encode_value(e.b), ensure_ascii=False)
        out.append(f"{e.id}: {left} -> {right}")
    return "".join(line + "\n" for line in out)


# --- registry index ----------------------------------------------------------

@dataclass(frozen=True)
class IndexEntry:
    file: str
    paper_link: Optional[str]
    criterion_names: Tuple[Optional[str], ...]
    keys: Tuple[Optional[ComparabilityKey], ...]
    error_count: int


@dataclass(frozen=True)
class IndexFailure:
    file: str
    error: str


@dataclass(frozen=True)
class RegistryIndex:
    entries: Tuple[IndexEntry, ...]
    failures: Tuple[IndexFailure, ...]

    def with_scope(self, scope: str) -> List[IndexEntry]:
        """Entries with at least one criterion key of the given scope."""
        return [
            e for e in self.entries
            if any(k is not None and k.scope == scope for k in e.keys)
        ]

    def to_json_dict(self) -> dict:
        return {
            "entries": [
                {
                    "file": e.file,
                    "paper_link": e.paper_link,
                    "criterion_names": list(e.criterion_names),
                    "keys": [
                        None if k is None else list(k.as_tuple()) for k in e.keys
                    ],
                    "errors": e.error_count,
                }
                for e in self.entries
            ],
            "failures": [{"file": f.file, "error": f.error} for f in self.failures],
        }

    def to_markdown(self) -> str:
        lines = [
            "| File | Paper | Criteria | Keys | Errors |",
            "| --- | --- | --- | --- | --- |",
        ]
        for e in self.entries:
            names = ", ".join(n or "(unnamed)" for n in e.criterion_names) or "-"
            keys = "; ".join(
                "(" + ", ".join(k.as_tuple()) + ")" if k else "(incomplete)"
                for k in e.keys
            ) or "-"
            link = e.paper_link or "-"
            lines.append(f"| {e.file} | {link} | {names} | {keys} | {e.error_count} |")
        if self.failures:
            lines.append("")
            lines.append("Unreadable files:")
            for f in self.failures:
                lines.append(f"- {f.file}: {f.error}")
        return "".join(line + "\n" for line in lines)


def _paper_link(d: Datasheet) -> Optional[str]:
    v = d.fixed_answers.get("1.1")
    if isinstance(v, Text):
        return v.content
    if isinstance(v, Sentinel):
        return v.text
    return None


def build_index(directory: Union[str, Path]) -> RegistryIndex:
    """Index every ``*.heds.json`` file in a directory (sorted by name)."""
    directory = Path(directory)
    entries: List[IndexEntry] = []
    failures: List[IndexFailure] = []
    for file in sorted(directory.glob("*.heds.json")):
        try:
            d = parse_canonical(file.read_bytes())
        except (HedsError, OSError) as exc:
            failures.append(IndexFailure(file=file.name, error=str(exc)))
            continue
        keys: List[Optional[ComparabilityKey]] = []
        for block in d.criteria:
            try:
                keys.append(criterion_key(block))
            except IncompleteCriterionError:
                keys.append(None)
        entries.append(
            IndexEntry(
                file=file.name,
                paper_link=_paper_link(d),
                criterion_names=tuple(criterion_name(b) for b in d.criteria),
                keys=tuple(keys),
                error_count=validate(d).error_count,
            )
        )
    return RegistryIndex(entries=tuple(entries), failures=tuple(failures))
