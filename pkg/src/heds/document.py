"""Datasheet instances and the canonical on-disk format.

A Datasheet is one completed (or partially completed) HEDS sheet: answers for
the fixed questions plus an ordered list of quality-criterion blocks. Values
are immutable; every mutating operation returns a new sheet.

The canonical format is a UTF-8 JSON document (extension ``.heds.json``) with
the exact top-level keys ``schema_version``, ``answers``, ``criteria`` and
``provenance``. Serialization is deterministic: answer keys in question-path
order, criterion blocks in index order, multi-choice selections in form
order, newline-terminated output. ``parse_canonical(serialize_canonical(d))``
recovers ``d`` exactly.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field, replace
from typing import Dict, List, Mapping, Optional, Tuple, Union

from . import schema as _schema
from .errors import (
    CriterionLimitError,
    CriterionOutOfRangeError,
    KindMismatchError,
    ParseError,
    UnknownQuestionError,
    UnsupportedSchemaVersionError,
)
from .schema import (
    Question,
    QuestionId,
    QuestionKind,
    Schema,
    Sentinel,
    builtin_schema,
    is_criterion_path,
    question,
)


def _strip_trailing_newlines(text: str) -> str:
    # Trailing newlines cannot survive the fenced-block template format, so
    # they are normalised away at construction time.
    return text.rstrip("\r\n")


@dataclass(frozen=True)
class Text:
    """Free-text answer. Never empty; trailing newlines are normalised away."""

    content: str

    def __post_init__(self) -> None:
        object.__setattr__(self, "content", _strip_trailing_newlines(self.content))
        if not self.content:
            raise ValueError("text answers must not be empty; omit the answer instead")


@dataclass(frozen=True)
class IntegerAnswer:
    value: int

    def __post_init__(self) -> None:
        if not isinstance(self.value, int) or isinstance(self.value, bool) or self.value < 0:
            raise ValueError(f"integer answers must be non-negative integers: {self.value!r}")


@dataclass(frozen=True)
class SingleChoice:
    option: str
    other_text: Optional[str] = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "other_text", _normalise_other(self.other_text))


@dataclass(frozen=True)
class MultiChoice:
    options: Tuple[str, ...]
    other_text: Optional[str] = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "options", tuple(self.options))
        if not self.options:
            raise ValueError("multi-choice answers must select at least one option")
        if len(set(self.options)) != len(self.options):
            raise ValueError("multi-choice answers must not repeat options")
        object.__setattr__(self, "other_text", _normalise_other(self.other_text))


def _normalise_other(text: Optional[str]) -> Optional[str]:
    if text is None:
        return None
    text = _strip_trailing_newlines(text)
    return text or None


AnswerValue = Union[Text, IntegerAnswer, SingleChoice, MultiChoice, Sentinel]


@dataclass(frozen=True)
class CriterionBlock:
    """Answers for one instantiation of the repeatable part-4 block."""

    index: int
    answers: Mapping[str, AnswerValue] = field(default_factory=dict)

    def __post_init__(self) -> None:
        object.__setattr__(self, "answers", dict(self.answers))


@dataclass(frozen=True)
class Datasheet:
    schema_version: str
    fixed_answers: Mapping[str, AnswerValue] = field(default_factory=dict)
    criteria: Tuple[CriterionBlock, ...] = ()
    provenance: Optional[str] = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "fixed_answers", dict(self.fixed_answers))
        object.__setattr__(self, "criteria", tuple(self.criteria))
        if self.provenance is not None:
            prov = _strip_trailing_newlines(self.provenance) or None
            object.__setattr__(self, "provenance", prov)
        if len(self.criteria) > _schema.MAX_CRITERIA:
            raise CriterionLimitError(_schema.MAX_CRITERIA)
        for pos, block in enumerate(self.criteria, start=1):
            if block.index != pos:
                raise ValueError("criterion blocks must be numbered contiguously from 1")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Datasheet):
            return NotImplemented
        return (
            self.schema_version == other.schema_version
            and dict(self.fixed_answers) == dict(other.fixed_answers)
            and self.criteria == other.criteria
            and self.provenance == other.provenance
        )


def new_empty(schema: Optional[Schema] = None) -> Datasheet:
    """A datasheet with no answers and a single empty criterion block."""
    schema = schema or builtin_schema()
    return Datasheet(schema_version=schema.version, criteria=(CriterionBlock(index=1),))


def add_criterion(d: Datasheet) -> Datasheet:
    """Append an empty criterion block; at most ``MAX_CRITERIA`` blocks fit."""
    if len(d.criteria) >= _schema.MAX_CRITERIA:
        raise CriterionLimitError(_schema.MAX_CRITERIA)
    blocks = d.criteria + (CriterionBlock(index=len(d.criteria) + 1),)
    return replace(d, criteria=blocks)


def _resolve_id(
    id: Union[str, QuestionId], criterion: Optional[int]
) -> Tuple[str, Optional[int]]:
    if isinstance(id, QuestionId):
        if criterion is not None and id.criterion_index is not None and criterion != id.criterion_index:
            raise CriterionOutOfRangeError("conflicting criterion indices given")
        return id.path, id.criterion_index if criterion is None else criterion
    return id, criterion


def check_kind(q: Question, value: AnswerValue) -> None:
    """Raise KindMismatchError unless ``value`` structurally fits ``q``."""
    if isinstance(value, Sentinel):
        if value not in q.sentinels:
            raise KindMismatchError(q.path, f"sentinel {value.text!r} not permitted here")
        return
    if q.kind is QuestionKind.FREE_TEXT:
        if not isinstance(value, Text):
            raise KindMismatchError(q.path, "expected free text")
    elif q.kind is QuestionKind.INTEGER_TEXT:
        if not isinstance(value, IntegerAnswer):
            raise KindMismatchError(q.path, "expected an integer")
    elif q.kind is QuestionKind.SINGLE_CHOICE:
        if not isinstance(value, SingleChoice):
            raise KindMismatchError(q.path, "expected a single selected option")
        _check_option_keys(q, (value.option,))
    elif q.kind is QuestionKind.MULTI_CHOICE:
        if not isinstance(value, MultiChoice):
            raise KindMismatchError(q.path, "expected a list of selected options")
        _check_option_keys(q, value.options)


def _check_option_keys(q: Question, keys: Tuple[str, ...]) -> None:
    known = {o.key for o in q.options}
    for key in keys:
        if key not in known:
            raise KindMismatchError(q.path, f"unknown option key {key!r}")


def _schema_order(q: Question, keys: Tuple[str, ...]) -> Tuple[str, ...]:
    order = {o.key: i for i, o in enumerate(q.options)}
    return tuple(sorted(keys, key=order.__getitem__))


def _normalise_value(q: Question, value: AnswerValue) -> AnswerValue:
    # Text that spells an allowed sentinel exactly becomes that sentinel, and
    # multi-choice selections take form order, so equal sheets serialise
    # byte-identically.
    if isinstance(value, Text):
        for s in q.sentinels:
            if value.content == s.text:
                return s
    if isinstance(value, MultiChoice):
        return MultiChoice(_schema_order(q, value.options), value.other_text)
    return value


def set_answer(
    d: Datasheet,
    id: Union[str, QuestionId],
    value: AnswerValue,
    *,
    criterion: Optional[int] = None,
    schema: Optional[Schema] = None,
) -> Datasheet:
    """Return a copy of ``d`` with the answer at ``id`` replaced.

    Part-4 questions must be addressed with a criterion index (either through
    a QuestionId or the ``criterion`` keyword) no larger than the number of
    blocks currently in the sheet.
    """
    schema = schema or builtin_schema()
    path, crit = _resolve_id(id, criterion)
    q = question(schema, path)
    check_kind(q, value)
    value = _normalise_value(q, value)
    if is_criterion_path(path):
        if crit is None:
            raise CriterionOutOfRangeError(f"question {path} needs a criterion index")
        if not 1 <= crit <= len(d.criteria):
            raise CriterionOutOfRangeError(
                f"criterion index {crit} out of range (sheet has {len(d.criteria)} block(s))"
            )
        block = d.criteria[crit - 1]
        answers = dict(block.answers)
        answers[path] = value
        blocks = list(d.criteria)
        blocks[crit - 1] = CriterionBlock(index=block.index, answers=answers)
        return replace(d, criteria=tuple(blocks))
    if crit is not None:
        raise CriterionOutOfRangeError(f"question {path} is not in the repeatable block")
    answers = dict(d.fixed_answers)
    answers[path] = value
    return replace(d, fixed_answers=answers)


def get_answer(
    d: Datasheet,
    id: Union[str, QuestionId],
    *,
    criterion: Optional[int] = None,
) -> Optional[AnswerValue]:
    path, crit = _resolve_id(id, criterion)
    if is_criterion_path(path):
        if crit is None or not 1 <= crit <= len(d.criteria):
            return None
        return d.criteria[crit - 1].answers.get(path)
    return d.fixed_answers.get(path)


# --- canonical JSON encoding ------------------------------------------------

def _path_key(path: str) -> Tuple[int, ...]:
    return tuple(int(s) for s in path.split("."))


def encode_value(value: AnswerValue) -> object:
    """JSON encoding of one answer value (shared with diff/index output)."""
    if isinstance(value, Sentinel):
        return value.text
    if isinstance(value, Text):
        return value.content
    if isinstance(value, IntegerAnswer):
        return value.value
    if isinstance(value, SingleChoice):
        if value.other_text is None:
            return value.option
        return {"option": value.option, "other_text": value.other_text}
    if isinstance(value, MultiChoice):
        if value.other_text is None:
            return list(value.options)
        return {"options": list(value.options), "other_text": value.other_text}
    raise TypeError(f"not an answer value: {value!r}")


def decode_value(q: Question, raw: object) -> AnswerValue:
    """Inverse of :func:`encode_value` for question ``q``; kind-checked."""
    try:
        value = _decode_raw(q, raw)
    except ValueError as exc:
        raise KindMismatchError(q.path, str(exc)) from None
    check_kind(q, value)
    return _normalise_value(q, value)


def _decode_raw(q: Question, raw: object) -> AnswerValue:
    if isinstance(raw, str):
        for s in q.sentinels:
            if raw == s.text:
                return s
        if q.kind is QuestionKind.INTEGER_TEXT:
            if raw.isdigit():
                return IntegerAnswer(int(raw))
            raise ValueError(f"expected an integer, got {raw!r}")
        if q.kind is QuestionKind.SINGLE_CHOICE:
            return SingleChoice(raw)
        return Text(raw)
    if isinstance(raw, bool):
        raise ValueError("booleans are not valid answers")
    if isinstance(raw, int):
        return IntegerAnswer(raw)
    if isinstance(raw, list):
        if not all(isinstance(k, str) for k in raw):
            raise ValueError("option lists must contain strings")
        return MultiChoice(tuple(raw))
    if isinstance(raw, dict):
        extra = set(raw) - {"option", "options", "other_text"}
        if extra:
            raise ValueError(f"unknown answer fields: {sorted(extra)}")
        other = raw.get("other_text")
        if other is not None and not isinstance(other, str):
            raise ValueError("other_text must be a string")
        if "option" in raw:
            if not isinstance(raw["option"], str):
                raise ValueError("option must be a string")
            return SingleChoice(raw["option"], other)
        if "options" in raw:
            if not isinstance(raw["options"], list) or not all(
                isinstance(k, str) for k in raw["options"]
            ):
                raise ValueError("options must be a list of strings")
            return MultiChoice(tuple(raw["options"]), other)
        raise ValueError("answer object needs 'option' or 'options'")
    raise ValueError(f"unsupported answer value: {raw!r}")


def serialize_canonical(d: Datasheet) -> bytes:
    """Deterministic canonical bytes; equal sheets give identical output."""
    doc = {
        "schema_version": d.schema_version,
        "answers": {
            path: encode_value(d.fixed_answers[path])
            for path in sorted(d.fixed_answers, key=_path_key)
        },
        "criteria": [
            {
                path: encode_value(block.answers[path])
                for path in sorted(block.answers, key=_path_key)
            }
            for block in d.criteria
        ],
        "provenance": d.provenance,
    }
    return (json.dumps(doc, ensure_ascii=False, indent=2) + "\n").encode("utf-8")


def parse_canonical(data: Union[bytes, str], schema: Optional[Schema] = None) -> Datasheet:
    """Parse canonical bytes into a structurally well-formed datasheet.

    Schema-path existence and value kinds are enforced here; cross-question
    semantics are the validator's job. Unknown top-level keys are rejected.
    """
    schema = schema or builtin_schema()
    if isinstance(data, bytes):
        try:
            data = data.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise ParseError(f"not valid UTF-8: {exc}") from None
    try:
        doc = json.loads(data)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, line=exc.lineno, column=exc.colno) from None
    if not isinstance(doc, dict):
        raise ParseError("top level must be a JSON object")
    allowed = {"schema_version", "answers", "criteria", "provenance"}
    unknown = set(doc) - allowed
    if unknown:
        raise ParseError(f"unknown top-level keys: {sorted(unknown)}")

    version = doc.get("schema_version")
    if not isinstance(version, str):
        raise ParseError("missing or non-string 'schema_version'")
    if version != schema.version:
        raise UnsupportedSchemaVersionError(version)

    raw_answers = doc.get("answers", {})
    if not isinstance(raw_answers, dict):
        raise ParseError("'answers' must be an object keyed by question path")
    fixed: Dict[str, AnswerValue] = {}
    for path, raw in raw_answers.items():
        q = _fixed_question(schema, path)
        fixed[path] = decode_value(q, raw)

    raw_criteria = doc.get("criteria", [])
    if not isinstance(raw_criteria, list):
        raise ParseError("'criteria' must be an array of per-block answer objects")
    if len(raw_criteria) > schema.max_criteria:
        raise ParseError(
            f"too many criterion blocks: {len(raw_criteria)} (maximum {schema.max_criteria})"
        )
    blocks: List[CriterionBlock] = []
    for i, raw_block in enumerate(raw_criteria, start=1):
        if not isinstance(raw_block, dict):
            raise ParseError(f"criterion block {i} must be an object keyed by question path")
        answers: Dict[str, AnswerValue] = {}
        for path, raw in raw_block.items():
            q = _criterion_question(schema, path)
            answers[path] = decode_value(q, raw)
        blocks.append(CriterionBlock(index=i, answers=answers))

    provenance = doc.get("provenance")
    if provenance is not None and not isinstance(provenance, str):
        raise ParseError("'provenance' must be a string or null")

    return Datasheet(
        schema_version=version,
        fixed_answers=fixed,
        criteria=tuple(blocks),
        provenance=provenance,
    )


def _fixed_question(schema: Schema, path: str) -> Question:
    if not isinstance(path, str) or not schema.has_question(path):
        raise UnknownQuestionError(str(path))
    if is_criterion_path(path):
        raise UnknownQuestionError(f"{path} (belongs under 'criteria')")
    return question(schema, path)


def _criterion_question(schema: Schema, path: str) -> Question:
    if not isinstance(path, str) or not schema.has_question(path):
        raise UnknownQuestionError(str(path))
    if not is_criterion_path(path):
        raise UnknownQuestionError(f"{path} (belongs under 'answers')")
    return question(schema, path)
