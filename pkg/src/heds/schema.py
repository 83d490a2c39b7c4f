"""Question-tree data model for HEDS 1.0 datasheets.

A Schema is the immutable question inventory: four fixed parts (1, 2, 3, 5)
plus the repeatable quality-criterion block (part 4) that a datasheet may
instantiate up to ``max_criteria`` times. The built-in HEDS 1.0 inventory
itself lives in :mod:`heds.heds10`; this module defines the types and the
lookup operations over them.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from enum import Enum
from functools import lru_cache
from typing import Dict, Iterator, List, Optional, Tuple

from .errors import NotAChoiceQuestionError, UnknownQuestionError

SCHEMA_VERSION = "1.0"
MAX_CRITERIA = 10

CRITERION_PART_ID = 4

_PATH_RE = re.compile(r"^\d+(\.\d+){1,2}$")


class QuestionKind(Enum):
    """Structural answer type of a question."""

    FREE_TEXT = "free-text"
    INTEGER_TEXT = "integer"
    SINGLE_CHOICE = "single-choice"
    MULTI_CHOICE = "multi-choice"


class Sentinel(Enum):
    """Special answer strings a question may permit instead of content.

    The enum value is the exact, case-sensitive string used on disk and in
    rendered templates.
    """

    NA = "N/A"
    CONTINUOUS = "continuous"
    FOR_PREREGISTRATION = "for preregistration"
    NONE = "None"

    @property
    def text(self) -> str:
        return self.value


@dataclass(frozen=True)
class OptionDef:
    """One selectable option of a choice question.

    ``key`` is the stable machine identifier (lowercase hyphenated slug);
    ``label`` is the display text shown on forms and templates;
    ``requires_text`` marks options that demand an accompanying free-text
    detail ("please specify"-style options).
    """

    key: str
    label: str
    requires_text: bool = False


@dataclass(frozen=True)
class Question:
    path: str
    prompt: str
    kind: QuestionKind
    options: Tuple[OptionDef, ...] = ()
    sentinels: Tuple[Sentinel, ...] = ()
    help: str = ""

    def __post_init__(self) -> None:
        if not _PATH_RE.match(self.path):
            raise ValueError(f"malformed question path: {self.path!r}")
        if self.kind in (QuestionKind.SINGLE_CHOICE, QuestionKind.MULTI_CHOICE):
            if len(self.options) < 2:
                raise ValueError(f"choice question {self.path} needs at least 2 options")
        elif self.options:
            raise ValueError(f"non-choice question {self.path} must not carry options")
        keys = [o.key for o in self.options]
        if len(keys) != len(set(keys)):
            raise ValueError(f"duplicate option keys in question {self.path}")

    @property
    def allows_na(self) -> bool:
        return Sentinel.NA in self.sentinels

    @property
    def is_choice(self) -> bool:
        return self.kind in (QuestionKind.SINGLE_CHOICE, QuestionKind.MULTI_CHOICE)

    def option(self, key: str) -> OptionDef:
        for opt in self.options:
            if opt.key == key:
                return opt
        raise KeyError(key)

    def option_by_label(self, label: str) -> Optional[OptionDef]:
        for opt in self.options:
            if opt.label == label:
                return opt
        return None


@dataclass(frozen=True)
class Part:
    id: int
    title: str
    questions: Tuple[Question, ...]

    def __post_init__(self) -> None:
        prefix = f"{self.id}."
        for q in self.questions:
            if not q.path.startswith(prefix):
                raise ValueError(f"question {q.path} does not belong to part {self.id}")


@dataclass(frozen=True)
class QuestionId:
    """Address of a question, optionally pinned to one criterion block.

    ``criterion_index`` (1-based) only makes sense for part-4 paths; it is
    required wherever a concrete datasheet cell is addressed and absent when
    referring to the schema question in the abstract.
    """

    path: str
    criterion_index: Optional[int] = None

    def __post_init__(self) -> None:
        if not _PATH_RE.match(self.path):
            raise ValueError(f"malformed question path: {self.path!r}")
        if self.criterion_index is not None:
            if not is_criterion_path(self.path):
                raise ValueError(f"{self.path} is not in the repeatable block")
            if not 1 <= self.criterion_index <= MAX_CRITERIA:
                raise ValueError(f"criterion index out of range: {self.criterion_index}")

    def __str__(self) -> str:
        if self.criterion_index is None:
            return self.path
        return f"{self.path}[{self.criterion_index}]"

    @property
    def sort_key(self) -> Tuple[int, ...]:
        segs = [int(s) for s in self.path.split(".")]
        return (segs[0], self.criterion_index or 0, *segs[1:])


def is_criterion_path(path: str) -> bool:
    return path.startswith(f"{CRITERION_PART_ID}.")


@dataclass(frozen=True)
class Schema:
    """The full question inventory for one HEDS version."""

    version: str
    parts: Tuple[Part, ...]
    criterion_block: Part
    max_criteria: int = MAX_CRITERIA
    _by_path: Dict[str, Question] = field(default_factory=dict, compare=False, repr=False)

    def __post_init__(self) -> None:
        if [p.id for p in self.parts] != [1, 2, 3, 5]:
            raise ValueError("fixed parts must be exactly 1, 2, 3 and 5")
        if self.criterion_block.id != CRITERION_PART_ID:
            raise ValueError("the repeatable block must be part 4")
        index: Dict[str, Question] = {}
        for q in self.all_questions():
            if q.path in index:
                raise ValueError(f"duplicate question path: {q.path}")
            index[q.path] = q
        self._by_path.update(index)

    def all_questions(self) -> Iterator[Question]:
        for part in self.parts:
            yield from part.questions
        yield from self.criterion_block.questions

    def fixed_questions(self) -> List[Question]:
        return [q for part in self.parts for q in part.questions]

    def criterion_questions(self) -> List[Question]:
        return list(self.criterion_block.questions)

    def has_question(self, path: str) -> bool:
        return path in self._by_path

    def parts_in_order(self) -> List[Part]:
        """All five parts in document order (criterion block in position 4)."""
        ordered = [p for p in self.parts if p.id < CRITERION_PART_ID]
        ordered.append(self.criterion_block)
        ordered.extend(p for p in self.parts if p.id > CRITERION_PART_ID)
        return ordered


def question(schema: Schema, id: "str | QuestionId") -> Question:
    """Look up a question by path; any criterion index is ignored."""
    path = id.path if isinstance(id, QuestionId) else id
    try:
        return schema._by_path[path]
    except KeyError:
        raise UnknownQuestionError(path) from None


def options_of(schema: Schema, id: "str | QuestionId") -> Tuple[OptionDef, ...]:
    """Option list of a choice question, in form order."""
    q = question(schema, id)
    if not q.is_choice:
        raise NotAChoiceQuestionError(q.path)
    return q.options


@lru_cache(maxsize=1)
def builtin_schema() -> Schema:
    """The built-in HEDS 1.0 schema; identical on every call."""
    from .heds10 import build_schema

    return build_schema()


def schema_to_json(schema: Schema) -> dict:
    """JSON-friendly encoding of a schema, as served to the authoring UI."""
    def enc_q(q: Question) -> dict:
        return {
            "path": q.path,
            "prompt": q.prompt,
            "kind": q.kind.value,
            "options": [
                {"key": o.key, "label": o.label, "requires_text": o.requires_text}
                for o in q.options
            ],
            "sentinels": [s.text for s in q.sentinels],
            "help": q.help,
        }

    return {
        "schema_version": schema.version,
        "max_criteria": schema.max_criteria,
        "parts": [
            {
                "id": part.id,
                "title": part.title,
                "repeatable": part.id == CRITERION_PART_ID,
                "questions": [enc_q(q) for q in part.questions],
            }
            for part in schema.parts_in_order()
        ],
    }
