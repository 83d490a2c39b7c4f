"""Seeded random datasheet generator for round-trip property tests.

Sheets are built through the public API (set_answer / add_criterion), so
generated values go through the same normalisation as user input. Text
answers deliberately include fence lines, heading-like lines, option-like
lines and LaTeX-special characters to stress the template round trip.
"""

from __future__ import annotations

import random
from typing import Optional

from heds import (
    Datasheet,
    IntegerAnswer,
    MultiChoice,
    Schema,
    SingleChoice,
    Text,
    add_criterion,
    builtin_schema,
    new_empty,
    set_answer,
)
from heds.schema import QuestionKind

_FRAGMENTS = [
    "plain words",
    "numbers 12, 34 and 5",
    "specials & % $ # _ { } ~ ^ and a back\\slash",
    "`inline code`",
    "```",
    "````",
    "#### looks like a heading",
    "### Q1.1: not a real heading",
    "- [x] experts",
    "- [ ] non-experts",
    "Other:",
    "## Part 4: Quality Criterion 1",
    "unicode üñïçødé ✓ § dashes – —",
    "A better, B better",
    "1--100",
    "   three leading spaces",
    "three trailing spaces   ",
    "N/A",  # only a sentinel where the question permits it
    "carriage\rreturn mid-line",
    "a very long line " + "x" * 120,
]

_SEPARATORS = [" ", "\n", "\n\n", " / ", "\n   "]


def _random_text(rng: random.Random) -> str:
    while True:
        n = rng.randint(1, 4)
        parts = [rng.choice(_FRAGMENTS) for _ in range(n)]
        text = ""
        for i, part in enumerate(parts):
            if i:
                text += rng.choice(_SEPARATORS)
            text += part
        text = text.rstrip("\r\n")
        if text:
            return text


def _random_answer(rng: random.Random, q) -> object:
    if q.sentinels and rng.random() < 0.25:
        return rng.choice(q.sentinels)
    if q.kind is QuestionKind.FREE_TEXT:
        return Text(_random_text(rng))
    if q.kind is QuestionKind.INTEGER_TEXT:
        return IntegerAnswer(rng.randint(0, 1000))
    keys = [o.key for o in q.options]
    if q.kind is QuestionKind.SINGLE_CHOICE:
        key = rng.choice(keys)
        other = _random_text(rng) if rng.random() < 0.3 else None
        return SingleChoice(key, other)
    count = rng.randint(1, min(4, len(keys)))
    picked = rng.sample(keys, count)
    other = _random_text(rng) if rng.random() < 0.3 else None
    return MultiChoice(tuple(picked), other)


def random_datasheet(rng: random.Random, schema: Optional[Schema] = None) -> Datasheet:
    """A structurally well-formed (often semantically messy) random sheet."""
    schema = schema or builtin_schema()
    n_criteria = rng.choice((0, 1, 1, 1, 2, 2, 3, 5, 10))
    if n_criteria == 0:
        d = Datasheet(schema_version=schema.version)
    else:
        d = new_empty(schema)
        for _ in range(n_criteria - 1):
            d = add_criterion(d)
    fill = rng.uniform(0.2, 1.0)
    for q in schema.fixed_questions():
        if rng.random() < fill:
            d = set_answer(d, q.path, _random_answer(rng, q), schema=schema)
    for block_index in range(1, n_criteria + 1):
        for q in schema.criterion_questions():
            if rng.random() < fill:
                d = set_answer(
                    d, q.path, _random_answer(rng, q),
                    criterion=block_index, schema=schema,
                )
    if rng.random() < 0.4:
        d = Datasheet(d.schema_version, d.fixed_answers, d.criteria, _random_text(rng))
    return d
