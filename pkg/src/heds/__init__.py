"""Machine-readable Human Evaluation Datasheets (HEDS 1.0).

The pieces:
  schema    the immutable question tree and the built-in HEDS 1.0 inventory
  document  datasheet values and the canonical .heds.json format
  validate  the twelve-rule consistency checker
  render    Markdown/LaTeX export and Markdown import
  compare   diffs, comparability keys, registry indexing
  cli       `heds` command-line tool and the local HTTP API
"""

from .document import (
    AnswerValue,
    CriterionBlock,
    Datasheet,
    IntegerAnswer,
    MultiChoice,
    SingleChoice,
    Text,
    add_criterion,
    get_answer,
    new_empty,
    parse_canonical,
    serialize_canonical,
    set_answer,
)
from .schema import (
    OptionDef,
    Part,
    Question,
    QuestionId,
    QuestionKind,
    Schema,
    Sentinel,
    builtin_schema,
    options_of,
    question,
    schema_to_json,
)
from .validate import Diagnostic, Severity, ValidationReport, rule_catalogue, validate
from .compare import (
    ComparabilityKey,
    ComparabilityReport,
    Level,
    build_index,
    classify,
    comparability,
    criterion_key,
    diff,
)
from .render import (
    RenderFormat,
    RenderMode,
    RenderTarget,
    parse_markdown,
    render,
    render_latex,
    render_markdown,
)

__version__ = "1.0.0"

__all__ = [
    "AnswerValue",
    "ComparabilityKey",
    "ComparabilityReport",
    "CriterionBlock",
    "Datasheet",
    "Diagnostic",
    "IntegerAnswer",
    "Level",
    "MultiChoice",
    "OptionDef",
    "Part",
    "Question",
    "QuestionId",
    "QuestionKind",
    "RenderFormat",
    "RenderMode",
    "RenderTarget",
    "Schema",
    "Sentinel",
    "Severity",
    "SingleChoice",
    "Text",
    "ValidationReport",
    "add_criterion",
    "build_index",
    "builtin_schema",
    "classify",
    "comparability",
    "criterion_key",
    "diff",
    "get_answer",
    "new_empty",
    "options_of",
    "parse_canonical",
    "parse_markdown",
    "question",
    "render",
    "render_latex",
    "render_markdown",
    "rule_catalogue",
    "schema_to_json",
    "serialize_canonical",
    "set_answer",
    "validate",
]
