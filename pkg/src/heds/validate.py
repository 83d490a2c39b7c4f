"""Completeness and consistency checks over a datasheet.

Twelve rules cover everything the template constrains beyond per-answer
structure: required answers, integer fields, the rating-instrument gate,
scale/value-list agreement, evaluator-type pairs, the criterion-count cap,
language names, task/input/output compatibility, required 'Other' details,
link fields, and preregistration cross-flags. ``validate`` is a pure
function of (datasheet, schema): findings are returned as data, never
raised.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from enum import Enum
from typing import Dict, List, Optional, Sequence, Tuple

from .document import (
    AnswerValue,
    CriterionBlock,
    Datasheet,
    IntegerAnswer,
    MultiChoice,
    SingleChoice,
    Text,
)
from .languages import unknown_language_names
from .schema import (
    Question,
    QuestionId,
    Schema,
    Sentinel,
    builtin_schema,
    question,
)


class Severity(Enum):
    ERROR = "error"
    WARNING = "warning"
    INFO = "info"


@dataclass(frozen=True)
class Diagnostic:
    """One validation finding."""

    rule: str
    severity: Severity
    at: Tuple[QuestionId, ...]
    message: str

    def render(self) -> str:
        paths = ",".join(str(q) for q in self.at)
        return f"{self.severity.value} {self.rule} {paths}: {self.message}"


@dataclass(frozen=True)
class ValidationReport:
    diagnostics: Tuple[Diagnostic, ...]

    @property
    def error_count(self) -> int:
        return sum(1 for d in self.diagnostics if d.severity is Severity.ERROR)

    @property
    def warning_count(self) -> int:
        return sum(1 for d in self.diagnostics if d.severity is Severity.WARNING)

    def by_rule(self, rule: str) -> List[Diagnostic]:
        return [d for d in self.diagnostics if d.rule == rule]

    def to_json_dict(self) -> dict:
        return {
            "diagnostics": [
                {
                    "rule": d.rule,
                    "severity": d.severity.value,
                    "at": [str(q) for q in d.at],
                    "message": d.message,
                }
                for d in self.diagnostics
            ],
            "errors": self.error_count,
            "warnings": self.warning_count,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), ensure_ascii=False, indent=2) + "\n"

    def to_text(self) -> str:
        if not self.diagnostics:
            return "ok: no findings\n"
        return "".join(d.render() + "\n" for d in self.diagnostics)


RULES: Tuple[Tuple[str, str, Severity], ...] = (
    (
        "R-REQ",
        "Every question in the sheet has an answer; questions that permit 'N/A' "
        "are satisfied by it.",
        Severity.ERROR,
    ),
    (
        "R-INT",
        "Output sample size (3.1.1) and evaluator count (3.2.1) are positive "
        "integers.",
        Severity.ERROR,
    ),
    (
        "R-SCALE-SIZE",
        "Rating instrument size (4.3.3) is an integer of at least 2, "
        "'continuous', or 'N/A'.",
        Severity.ERROR,
    ),
    (
        "R-SCALE-VALUES",
        "The value list/range (4.3.4) has exactly the size given in 4.3.3; with "
        "no instrument both are 'N/A'.",
        Severity.ERROR,
    ),
    (
        "R-INSTRUMENT-GATE",
        "4.3.3, 4.3.4 and 4.3.5 agree on whether a rating instrument exists, and "
        "4.3.6 describes the task if and only if there is none.",
        Severity.ERROR,
    ),
    (
        "R-EVAL-PAIRS",
        "Evaluator types (3.2.2) pick exactly one of each opposing pair "
        "(experts/non-experts, paid/not paid, previously known/not, includes/"
        "excludes authors), or explain under 'Other'.",
        Severity.ERROR,
    ),
    (
        "R-CRIT-COUNT",
        "The sheet documents between 1 and 10 quality criteria.",
        Severity.ERROR,
    ),
    (
        "R-LANG",
        "Input/output languages (2.4, 2.5) are standardised full ISO 639-1 "
        "language names, or 'N/A'.",
        Severity.WARNING,
    ),
    (
        "R-TASK-IO",
        "Task selections (2.3) are compatible with the declared input (2.1) and "
        "output (2.2) types.",
        Severity.WARNING,
    ),
    (
        "R-OTHER-TEXT",
        "Selected 'please specify'-style options carry a non-empty detail text, "
        "and detail text only appears with such an option.",
        Severity.ERROR,
    ),
    (
        "R-LINK",
        "Paper and resource fields (1.1, 1.2) contain a link, or their permitted "
        "special value.",
        Severity.WARNING,
    ),
    (
        "R-PREREG",
        "A sheet completed for preregistration has results-bearing answers "
        "(4.3.9-4.3.11) flagged for review.",
        Severity.INFO,
    ),
)


def rule_catalogue() -> List[Tuple[str, str, Severity]]:
    """The fixed rule catalogue: (rule id, description, nominal severity)."""
    return list(RULES)


def validate(d: Datasheet, schema: Optional[Schema] = None) -> ValidationReport:
    """Run every rule over ``d`` and return the ordered report."""
    schema = schema or builtin_schema()
    diags: List[Diagnostic] = []
    diags += _rule_req(d, schema)
    diags += _rule_int(d, schema)
    diags += _rule_scale_size(d)
    diags += _rule_scale_values(d)
    diags += _rule_instrument_gate(d)
    diags += _rule_eval_pairs(d, schema)
    diags += _rule_crit_count(d, schema)
    diags += _rule_lang(d)
    diags += _rule_task_io(d)
    diags += _rule_other_text(d, schema)
    diags += _rule_link(d)
    diags += _rule_prereg(d)
    diags.sort(key=lambda diag: (diag.at[0].sort_key, diag.rule))
    return ValidationReport(diagnostics=tuple(diags))


def _diag(rule: str, severity: Severity, at: Sequence[QuestionId], message: str) -> Diagnostic:
    return Diagnostic(rule=rule, severity=severity, at=tuple(at), message=message)


def _qid(path: str, crit: Optional[int] = None) -> QuestionId:
    return QuestionId(path, crit)


# --- individual rules --------------------------------------------------------

def _rule_req(d: Datasheet, schema: Schema) -> List[Diagnostic]:
    out = []
    for q in schema.fixed_questions():
        if q.path not in d.fixed_answers:
            out.append(_req_diag(q, None))
    for block in d.criteria:
        for q in schema.criterion_questions():
            if q.path not in block.answers:
                out.append(_req_diag(q, block.index))
    return out


def _req_diag(q: Question, crit: Optional[int]) -> Diagnostic:
    where = f" (criterion {crit})" if crit is not None else ""
    hint = " 'N/A' is accepted here." if q.allows_na else ""
    return _diag(
        "R-REQ",
        Severity.ERROR,
        [_qid(q.path, crit)],
        f"question {q.path}{where} is unanswered.{hint}",
    )


def _rule_int(d: Datasheet, schema: Schema) -> List[Diagnostic]:
    out = []
    for path in ("3.1.1", "3.2.1"):
        v = d.fixed_answers.get(path)
        if isinstance(v, IntegerAnswer) and v.value < 1:
            prompt_hint = question(schema, path).prompt.split("?")[0]
            out.append(
                _diag(
                    "R-INT",
                    Severity.ERROR,
                    [_qid(path)],
                    f"{prompt_hint}? must be a positive integer, got {v.value}.",
                )
            )
    return out


def _rule_scale_size(d: Datasheet) -> List[Diagnostic]:
    out = []
    for block in d.criteria:
        v = block.answers.get("4.3.3")
        if isinstance(v, IntegerAnswer) and v.value < 2:
            out.append(
                _diag(
                    "R-SCALE-SIZE",
                    Severity.ERROR,
                    [_qid("4.3.3", block.index)],
                    f"instrument size must be an integer of at least 2, 'continuous' "
                    f"or 'N/A'; got {v.value}.",
                )
            )
    return out


_RANGE_RE = re.compile(r"^\s*(-?\d+)\s*(?:--|-|–|—)\s*(-?\d+)\s*$")


def list_or_range_size(text: str) -> Optional[int]:
    """Number of values named by a 4.3.4 entry: a numeric range or a comma list."""
    m = _RANGE_RE.match(text)
    if m:
        lo, hi = int(m.group(1)), int(m.group(2))
        if hi >= lo:
            return hi - lo + 1
    parts = [p for p in text.split(",") if p.strip()]
    return len(parts) if parts else None


def _rule_scale_values(d: Datasheet) -> List[Diagnostic]:
    out = []
    for block in d.criteria:
        size = block.answers.get("4.3.3")
        values = block.answers.get("4.3.4")
        if size is None or values is None:
            continue
        at = [_qid("4.3.3", block.index), _qid("4.3.4", block.index)]
        if isinstance(size, IntegerAnswer) and isinstance(values, Text):
            found = list_or_range_size(values.content)
            if found != size.value:
                out.append(
                    _diag(
                        "R-SCALE-VALUES",
                        Severity.ERROR,
                        at,
                        f"the list or range should be of the size specified in "
                        f"question 4.3.3 ({size.value}); found "
                        f"{'no values' if found is None else found}.",
                    )
                )
        elif size is Sentinel.NA and not _is_na(values):
            out.append(
                _diag(
                    "R-SCALE-VALUES",
                    Severity.ERROR,
                    at,
                    "with no rating instrument (4.3.3 = 'N/A'), 4.3.4 must be 'N/A'.",
                )
            )
    return out


def _is_na(v: Optional[AnswerValue]) -> bool:
    return v is Sentinel.NA


def _rule_instrument_gate(d: Datasheet) -> List[Diagnostic]:
    out = []
    for block in d.criteria:
        size = block.answers.get("4.3.3")
        if size is None:
            continue
        no_instrument = _is_na(size)
        values = block.answers.get("4.3.4")
        presentation = block.answers.get("4.3.5")
        task = block.answers.get("4.3.6")
        i = block.index
        if values is not None and _is_na(values) != no_instrument:
            out.append(
                _gate_diag(i, "4.3.4", no_instrument, "the value list must be 'N/A'",
                           "the value list must not be 'N/A'")
            )
        if isinstance(presentation, SingleChoice):
            if (presentation.option == "na-no-instrument") != no_instrument:
                out.append(
                    _gate_diag(
                        i, "4.3.5", no_instrument,
                        "4.3.5 must select 'N/A (there is no rating instrument)'",
                        "4.3.5 must name how the instrument is presented",
                    )
                )
        if task is not None:
            if no_instrument and _is_na(task):
                out.append(
                    _gate_diag(i, "4.3.6", no_instrument,
                               "4.3.6 must describe the task evaluators perform", "")
                )
            if not no_instrument and not _is_na(task):
                out.append(
                    _gate_diag(i, "4.3.6", no_instrument, "",
                               "4.3.6 must be 'N/A'")
                )
    return out


def _gate_diag(crit: int, other_path: str, no_instrument: bool,
               if_absent: str, if_present: str) -> Diagnostic:
    state = "there is no rating instrument" if no_instrument else "a rating instrument exists"
    requirement = if_absent if no_instrument else if_present
    return _diag(
        "R-INSTRUMENT-GATE",
        Severity.ERROR,
        [_qid("4.3.3", crit), _qid(other_path, crit)],
        f"4.3.3 says {state}, so {requirement}.",
    )


_OPPOSING_PAIRS = (
    ("experts", "non-experts"),
    ("paid", "not-paid"),
    ("previously-known", "not-previously-known"),
    ("includes-authors", "excludes-authors"),
)


def _rule_eval_pairs(d: Datasheet, schema: Schema) -> List[Diagnostic]:
    v = d.fixed_answers.get("3.2.2")
    if not isinstance(v, MultiChoice):
        return []
    selected = set(v.options)
    broken = []
    for a, b in _OPPOSING_PAIRS:
        if len(selected & {a, b}) != 1:
            broken.append(f"{a}/{b}")
    if not broken:
        return []
    explained = "other" in selected and v.other_text is not None
    severity = Severity.INFO if explained else Severity.ERROR
    note = " Explained under 'Other'." if explained else ""
    return [
        _diag(
            "R-EVAL-PAIRS",
            severity,
            [_qid("3.2.2")],
            f"you should be able to tick exactly one of each opposing pair; "
            f"unresolved: {', '.join(broken)}.{note}",
        )
    ]


def _rule_crit_count(d: Datasheet, schema: Schema) -> List[Diagnostic]:
    n = len(d.criteria)
    if 1 <= n <= schema.max_criteria:
        return []
    return [
        _diag(
            "R-CRIT-COUNT",
            Severity.ERROR,
            [_qid("4.1.1")],
            f"a sheet documents between 1 and {schema.max_criteria} quality "
            f"criteria; this one has {n}.",
        )
    ]


def _rule_lang(d: Datasheet) -> List[Diagnostic]:
    out = []
    for path in ("2.4", "2.5"):
        v = d.fixed_answers.get(path)
        if isinstance(v, Text):
            unknown = unknown_language_names(v.content)
            if unknown:
                out.append(
                    _diag(
                        "R-LANG",
                        Severity.WARNING,
                        [_qid(path)],
                        f"not standardised full ISO 639-1 language names: "
                        f"{', '.join(repr(u) for u in unknown)}.",
                    )
                )
    return out


# Task key -> input keys of which at least one must be selected in 2.1.
_TASK_NEEDS_INPUT: Dict[str, Tuple[str, ...]] = {
    "surface-realisation": ("slr",),
    "deep-generation": ("raw-structured-data", "dlr"),
    "data-to-text": ("raw-structured-data",),
    "feature-controlled": ("control-feature",),
    "image-video-description": ("visual",),
}

# Tasks whose output is not text (2.2 must not select a text:* type).
_TASK_NON_TEXT_OUTPUT = ("content-selection", "content-ordering")


def _rule_task_io(d: Datasheet) -> List[Diagnostic]:
    tasks = d.fixed_answers.get("2.3")
    if not isinstance(tasks, MultiChoice):
        return []
    inputs = d.fixed_answers.get("2.1")
    outputs = d.fixed_answers.get("2.2")
    out = []
    for task in tasks.options:
        needed = _TASK_NEEDS_INPUT.get(task)
        if needed and isinstance(inputs, MultiChoice):
            if not set(needed) & set(inputs.options):
                alts = " or ".join(f"'{k}'" for k in needed)
                out.append(
                    _diag(
                        "R-TASK-IO",
                        Severity.WARNING,
                        [_qid("2.3"), _qid("2.1")],
                        f"task '{task}' expects the input to include {alts}.",
                    )
                )
        if task in _TASK_NON_TEXT_OUTPUT and isinstance(outputs, MultiChoice):
            text_outputs = [k for k in outputs.options if k.startswith("text-")]
            if text_outputs:
                out.append(
                    _diag(
                        "R-TASK-IO",
                        Severity.WARNING,
                        [_qid("2.3"), _qid("2.2")],
                        f"for task '{task}' the output is not text, but the output "
                        f"type includes {', '.join(repr(k) for k in text_outputs)}.",
                    )
                )
    return out


def _rule_other_text(d: Datasheet, schema: Schema) -> List[Diagnostic]:
    out = []
    for path, value, crit in _all_answers(d):
        if not isinstance(value, (SingleChoice, MultiChoice)):
            continue
        q = question(schema, path)
        keys = (value.option,) if isinstance(value, SingleChoice) else value.options
        needs_text = [k for k in keys if q.option(k).requires_text]
        if needs_text and value.other_text is None:
            out.append(
                _diag(
                    "R-OTHER-TEXT",
                    Severity.ERROR,
                    [_qid(path, crit)],
                    f"option {needs_text[0]!r} asks you to describe it; provide the "
                    f"detail text.",
                )
            )
        elif value.other_text is not None and not needs_text:
            out.append(
                _diag(
                    "R-OTHER-TEXT",
                    Severity.ERROR,
                    [_qid(path, crit)],
                    "detail text given, but no selected option calls for one.",
                )
            )
    return out


def _all_answers(d: Datasheet):
    for path, value in d.fixed_answers.items():
        yield path, value, None
    for block in d.criteria:
        for path, value in block.answers.items():
            yield path, value, block.index


_URL_RE = re.compile(r"https?://\S+")


def _rule_link(d: Datasheet) -> List[Diagnostic]:
    out = []
    for path in ("1.1", "1.2"):
        v = d.fixed_answers.get(path)
        if isinstance(v, Text) and not _URL_RE.search(v.content):
            out.append(
                _diag(
                    "R-LINK",
                    Severity.WARNING,
                    [_qid(path)],
                    f"question {path} asks for a link; no http(s) URL found.",
                )
            )
    return out


_RESULT_PATHS = ("4.3.9", "4.3.10", "4.3.11")


def _rule_prereg(d: Datasheet) -> List[Diagnostic]:
    if d.fixed_answers.get("1.1") is not Sentinel.FOR_PREREGISTRATION:
        return []
    out = []
    for block in d.criteria:
        for path in _RESULT_PATHS:
            v = block.answers.get(path)
            if isinstance(v, Text):
                out.append(
                    _diag(
                        "R-PREREG",
                        Severity.INFO,
                        [_qid("1.1"), _qid(path, block.index)],
                        f"sheet is completed for preregistration, but {path} "
                        f"(criterion {block.index}) already reports results; "
                        f"double-check before registering.",
                    )
                )
    return out
