"""Markdown and LaTeX views of a datasheet, and the Markdown importer.

Markdown is the editable template format and round-trips exactly:
``parse_markdown(render_markdown(d)) == d``. Question headings embed the
question id (``### Q4.3.3: ...``) so importing keys on ids, never on prompt
wording; free-text answers live in fenced blocks whose fence length adapts
to the content, and choice questions use task-list checkboxes with verbatim
option labels. LaTeX (article class, no extra packages) is export-only.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from enum import Enum
from typing import Dict, List, Optional, Tuple

from .document import (
    AnswerValue,
    Datasheet,
    IntegerAnswer,
    MultiChoice,
    SingleChoice,
    Text,
    add_criterion,
    new_empty,
    set_answer,
)
from .errors import KindMismatchError, MalformedTemplateError
from .schema import (
    CRITERION_PART_ID,
    Question,
    QuestionKind,
    Schema,
    builtin_schema,
    question as schema_question,
)

TITLE = "Human Evaluation Datasheet 1.0"


class RenderFormat(Enum):
    MARKDOWN = "markdown"
    LATEX = "latex"


class RenderMode(Enum):
    BLANK_TEMPLATE = "blank-template"
    COMPLETED = "completed"


@dataclass(frozen=True)
class RenderTarget:
    format: RenderFormat
    mode: RenderMode = RenderMode.COMPLETED


def render(
    d: Optional[Datasheet],
    schema: Optional[Schema] = None,
    target: RenderTarget = RenderTarget(RenderFormat.MARKDOWN),
) -> str:
    """Render ``d`` (or a blank template when mode says so / d is None)."""
    schema = schema or builtin_schema()
    if target.mode is RenderMode.BLANK_TEMPLATE or d is None:
        d = new_empty(schema)
    if target.format is RenderFormat.MARKDOWN:
        return render_markdown(d, schema)
    return render_latex(d, schema)


# --- markdown ----------------------------------------------------------------

def _fence_for(content: str) -> str:
    longest = 0
    for run in re.findall(r"`+", content):
        longest = max(longest, len(run))
    return "`" * max(3, longest + 1)


def _emit_fenced(lines: List[str], content: str) -> None:
    fence = _fence_for(content)
    lines.append(fence)
    if content:
        lines.extend(content.split("\n"))
    lines.append(fence)
    lines.append("")


def _answer_text(q: Question, value: Optional[AnswerValue]) -> str:
    if value is None:
        return ""
    if isinstance(value, Text):
        return value.content
    if isinstance(value, IntegerAnswer):
        return str(value.value)
    return value.text  # sentinel


def _emit_question_md(lines: List[str], q: Question, value: Optional[AnswerValue]) -> None:
    lines.append(f"### Q{q.path}: {q.prompt}")
    lines.append("")
    if q.is_choice:
        selected: Tuple[str, ...] = ()
        other: Optional[str] = None
        if isinstance(value, SingleChoice):
            selected, other = (value.option,), value.other_text
        elif isinstance(value, MultiChoice):
            selected, other = value.options, value.other_text
        for opt in q.options:
            mark = "x" if opt.key in selected else " "
            lines.append(f"- [{mark}] {opt.label}")
        lines.append("")
        if other is not None:
            lines.append("Other:")
            lines.append("")
            _emit_fenced(lines, other)
    else:
        _emit_fenced(lines, _answer_text(q, value))


def render_markdown(d: Datasheet, schema: Optional[Schema] = None) -> str:
    schema = schema or builtin_schema()
    lines: List[str] = [f"# {TITLE}", ""]
    if d.provenance is not None:
        lines.append("Provenance:")
        lines.append("")
        _emit_fenced(lines, d.provenance)
    for part in schema.parts:
        if part.id > CRITERION_PART_ID:
            break
        _emit_part_md(lines, part.id, part.title, part.questions, d.fixed_answers)
    for block in d.criteria:
        _emit_part_md(
            lines,
            CRITERION_PART_ID,
            f"{schema.criterion_block.title} {block.index}",
            schema.criterion_block.questions,
            block.answers,
        )
    for part in schema.parts:
        if part.id > CRITERION_PART_ID:
            _emit_part_md(lines, part.id, part.title, part.questions, d.fixed_answers)
    return "\n".join(lines)


def _emit_part_md(lines, part_id, title, questions, answers) -> None:
    lines.append(f"## Part {part_id}: {title}")
    lines.append("")
    for q in questions:
        _emit_question_md(lines, q, answers.get(q.path))


_PART_RE = re.compile(r"^## Part (\d+): (.*)$")
_QUESTION_RE = re.compile(r"^### Q(\d+(?:\.\d+){1,2}):")
_OPTION_RE = re.compile(r"^- \[([ xX])\] (.*)$")
_FENCE_RE = re.compile(r"^(`{3,})\s*$")
_CRITERION_TITLE_RE = re.compile(r"(\d+)\s*$")


class _Slot:
    """Everything collected for one question instance while scanning."""

    def __init__(self, question: Question, crit: Optional[int]):
        self.question = question
        self.crit = crit
        self.checked: List[str] = []
        self.main: Optional[str] = None
        self.other: Optional[str] = None
        self.awaiting_other = False


def parse_markdown(text: str, schema: Optional[Schema] = None) -> Datasheet:
    """Recover a datasheet from a rendered (possibly edited) Markdown template."""
    schema = schema or builtin_schema()
    lines = text.split("\n")
    slots: Dict[Tuple[str, int], _Slot] = {}
    current: Optional[_Slot] = None
    part_scope: Optional[int] = None
    n_blocks = 0
    provenance: Optional[str] = None
    awaiting_provenance = False

    i = 0
    while i < len(lines):
        line = lines[i]
        fence = _FENCE_RE.match(line)
        if fence:
            content, i = _read_fence(lines, i, fence.group(1))
            if awaiting_provenance:
                provenance = content or None
                awaiting_provenance = False
            elif current is None:
                raise MalformedTemplateError("answer block outside any question")
            elif current.question.is_choice:
                if not current.awaiting_other:
                    raise MalformedTemplateError(
                        "answer block without an 'Other:' marker", current.question.path
                    )
                current.other = content or None
                current.awaiting_other = False
            else:
                if current.main is not None:
                    raise MalformedTemplateError(
                        "duplicated answer block", current.question.path
                    )
                current.main = content
            continue

        part = _PART_RE.match(line)
        if part:
            pid = int(part.group(1))
            if pid == CRITERION_PART_ID:
                m = _CRITERION_TITLE_RE.search(part.group(2))
                if not m or int(m.group(1)) != n_blocks + 1:
                    raise MalformedTemplateError(
                        f"criterion blocks must be numbered in order; got {line!r}"
                    )
                n_blocks += 1
            part_scope = pid
            current = None
            i += 1
            continue

        qmatch = _QUESTION_RE.match(line)
        if qmatch:
            path = qmatch.group(1)
            if not schema.has_question(path):
                raise MalformedTemplateError("unknown question heading", path)
            if part_scope is None or not path.startswith(f"{part_scope}."):
                raise MalformedTemplateError(
                    f"question outside its part (current part: {part_scope})", path
                )
            crit = n_blocks if part_scope == CRITERION_PART_ID else 0
            key = (path, crit)
            if key in slots:
                raise MalformedTemplateError("duplicated question heading", path)
            current = _Slot(schema_question(schema, path), crit or None)
            slots[key] = current
            i += 1
            continue

        opt = _OPTION_RE.match(line)
        if opt and current is not None and current.question.is_choice:
            label = opt.group(2)
            option = current.question.option_by_label(label)
            if option is None:
                raise MalformedTemplateError(
                    f"unknown option label {label!r}", current.question.path
                )
            if opt.group(1) in "xX":
                current.checked.append(option.key)
            i += 1
            continue

        if line.strip() == "Other:" and current is not None and current.question.is_choice:
            current.awaiting_other = True
            i += 1
            continue
        if line.strip() == "Provenance:" and part_scope is None:
            awaiting_provenance = True
            i += 1
            continue
        i += 1

    _check_coverage(schema, slots, n_blocks)
    return _assemble(schema, slots, n_blocks, provenance)


def _read_fence(lines: List[str], start: int, fence: str) -> Tuple[str, int]:
    body: List[str] = []
    i = start + 1
    while i < len(lines):
        if lines[i] == fence:
            return "\n".join(body), i + 1
        body.append(lines[i])
        i += 1
    raise MalformedTemplateError("unterminated answer block")


def _check_coverage(schema: Schema, slots, n_blocks: int) -> None:
    for q in schema.fixed_questions():
        if (q.path, 0) not in slots:
            raise MalformedTemplateError("missing question heading", q.path)
    for b in range(1, n_blocks + 1):
        for q in schema.criterion_questions():
            if (q.path, b) not in slots:
                raise MalformedTemplateError(
                    f"missing question heading in criterion block {b}", q.path
                )


def _assemble(schema, slots, n_blocks, provenance) -> Datasheet:
    d = Datasheet(schema_version=schema.version, provenance=provenance)
    for _ in range(n_blocks):
        d = add_criterion(d)
    for (path, crit), slot in slots.items():
        value = _slot_value(slot)
        if value is not None:
            d = set_answer(d, path, value, criterion=crit or None, schema=schema)
    return d


def _slot_value(slot: _Slot) -> Optional[AnswerValue]:
    q = slot.question
    if q.is_choice:
        if not slot.checked:
            if slot.other is not None:
                raise MalformedTemplateError(
                    "detail text without any selected option", q.path
                )
            return None
        if q.kind is QuestionKind.SINGLE_CHOICE:
            if len(slot.checked) > 1:
                raise KindMismatchError(q.path, "select exactly one option")
            return SingleChoice(slot.checked[0], slot.other)
        return MultiChoice(tuple(slot.checked), slot.other)
    if not slot.main:
        return None
    for s in q.sentinels:
        if slot.main == s.text:
            return s
    if q.kind is QuestionKind.INTEGER_TEXT:
        if slot.main.isdigit():
            return IntegerAnswer(int(slot.main))
        raise KindMismatchError(q.path, f"expected an integer, got {slot.main!r}")
    return Text(slot.main)


# --- latex -------------------------------------------------------------------

_LATEX_MAP = {
    "\\": r"\textbackslash{}",
    "&": r"\&",
    "%": r"\%",
    "$": r"\$",
    "#": r"\#",
    "_": r"\_",
    "{": r"\{",
    "}": r"\}",
    "~": r"\textasciitilde{}",
    "^": r"\textasciicircum{}",
    "§": r"\S{}",
}


def latex_escape(text: str) -> str:
    return "".join(_LATEX_MAP.get(ch, ch) for ch in text)


_PREAMBLE = """\\documentclass{article}
\\setlength{\\parindent}{0pt}
\\newenvironment{answerbox}{\\begin{quotation}\\noindent}{\\end{quotation}}
"""


def _emit_answer_tex(lines: List[str], content: str) -> None:
    lines.append(r"\begin{answerbox}")
    if content:
        for piece in content.split("\n"):
            if piece.strip():
                lines.append(latex_escape(piece))
                lines.append("")
    else:
        lines.append(r"(unanswered)")
        lines.append("")
    lines.append(r"\end{answerbox}")
    lines.append("")


def _emit_question_tex(lines: List[str], q: Question, value: Optional[AnswerValue]) -> None:
    lines.append(rf"\subsection*{{Q{q.path}: {latex_escape(q.prompt)}}}")
    lines.append("")
    if q.is_choice:
        selected: Tuple[str, ...] = ()
        other: Optional[str] = None
        if isinstance(value, SingleChoice):
            selected, other = (value.option,), value.other_text
        elif isinstance(value, MultiChoice):
            selected, other = value.options, value.other_text
        lines.append(r"\begin{itemize}")
        for opt in q.options:
            mark = "[x]" if opt.key in selected else "[ ]"
            lines.append(rf"  \item[{{{mark}}}] {latex_escape(opt.label)}")
        lines.append(r"\end{itemize}")
        lines.append("")
        if other is not None:
            lines.append("Other:")
            lines.append("")
            _emit_answer_tex(lines, other)
    else:
        _emit_answer_tex(lines, _answer_text(q, value))


def render_latex(d: Datasheet, schema: Optional[Schema] = None) -> str:
    schema = schema or builtin_schema()
    lines: List[str] = [_PREAMBLE, r"\begin{document}", ""]
    lines.append(rf"\section*{{{latex_escape(TITLE)}}}")
    lines.append("")
    if d.provenance is not None:
        lines.append("Provenance:")
        lines.append("")
        _emit_answer_tex(lines, d.provenance)

    def emit_part(part_id: int, title: str, questions, answers) -> None:
        lines.append(rf"\section*{{Part {part_id}: {latex_escape(title)}}}")
        lines.append("")
        for q in questions:
            _emit_question_tex(lines, q, answers.get(q.path))

    for part in schema.parts:
        if part.id > CRITERION_PART_ID:
            break
        emit_part(part.id, part.title, part.questions, d.fixed_answers)
    for block in d.criteria:
        emit_part(
            CRITERION_PART_ID,
            f"{schema.criterion_block.title} {block.index}",
            schema.criterion_block.questions,
            block.answers,
        )
    for part in schema.parts:
        if part.id > CRITERION_PART_ID:
            emit_part(part.id, part.title, part.questions, d.fixed_answers)
    lines.append(r"\end{document}")
    lines.append("")
    return "\n".join(lines)
