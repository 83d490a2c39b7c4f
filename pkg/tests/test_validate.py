"""Rule engine behaviour: the golden sheet is clean, each rule fires alone."""

import random

import pytest

from heds import (
    Datasheet,
    IntegerAnswer,
    MultiChoice,
    Sentinel,
    SingleChoice,
    Text,
    builtin_schema,
    new_empty,
    rule_catalogue,
    set_answer,
    validate,
)
from heds.validate import Severity, list_or_range_size
from gensheets import random_datasheet
from golden import golden_datasheet, golden_with, rule_fixtures

ALL_RULES = [r for r, _, _ in rule_catalogue()]


class TestCatalogue:
    def test_twelve_rules(self):
        assert len(rule_catalogue()) == 12

    def test_unique_ids(self):
        assert len(set(ALL_RULES)) == 12

    def test_known_severities(self):
        severities = {rule: sev for rule, _, sev in rule_catalogue()}
        assert severities["R-CRIT-COUNT"] is Severity.ERROR
        assert severities["R-TASK-IO"] is Severity.WARNING
        assert severities["R-LANG"] is Severity.WARNING
        assert severities["R-LINK"] is Severity.WARNING
        assert severities["R-PREREG"] is Severity.INFO


class TestGolden:
    def test_no_findings_at_all(self):
        report = validate(golden_datasheet())
        assert report.diagnostics == ()
        assert report.error_count == 0
        assert report.warning_count == 0

    def test_empty_sheet_reports_every_required_question(self):
        report = validate(new_empty(builtin_schema()))
        req = report.by_rule("R-REQ")
        assert len(req) == 28 + 17
        assert all(d.severity is Severity.ERROR for d in req)

    def test_determinism(self):
        d = rule_fixtures()["R-INSTRUMENT-GATE"]
        assert validate(d) == validate(d)


class TestRuleFixtures:
    @pytest.mark.parametrize("rule", ALL_RULES)
    def test_fixture_triggers_only_its_rule(self, rule):
        fixtures = rule_fixtures()
        report = validate(fixtures[rule])
        assert report.by_rule(rule), f"{rule} did not fire"
        other_errors = [
            d for d in report.diagnostics
            if d.rule != rule and d.severity is Severity.ERROR
        ]
        assert other_errors == [], f"{rule} fixture also raised {other_errors}"

    def test_instrument_gate_names_both_questions(self):
        report = validate(rule_fixtures()["R-INSTRUMENT-GATE"])
        paths = {tuple(str(q) for q in d.at) for d in report.by_rule("R-INSTRUMENT-GATE")}
        assert ("4.3.3[1]", "4.3.5[1]") in paths

    def test_scale_values_names_both_questions(self):
        report = validate(rule_fixtures()["R-SCALE-VALUES"])
        (diag,) = report.by_rule("R-SCALE-VALUES")
        assert [str(q) for q in diag.at] == ["4.3.3[1]", "4.3.4[1]"]


class TestScaleRules:
    @pytest.mark.parametrize(
        "size,values",
        [
            (5, "1, 2, 3, 4, 5"),        # 5-point Likert
            (2, "A better, B better"),    # forced choice
            (3, "A better, B better, neither"),
            (100, "1--100"),              # slider
        ],
    )
    def test_worked_instruments_are_consistent(self, size, values):
        d = golden_with(criterion={
            "4.3.3": IntegerAnswer(size),
            "4.3.4": Text(values),
        })
        assert validate(d).error_count == 0

    @pytest.mark.parametrize("text,expected", [
        ("1, 2, 3", 3),
        ("A better, B better", 2),
        ("1--100", 100),
        ("1-5", 5),
        ("0–9", 10),
        ("only one", 1),
        ("-2--2", 5),
    ])
    def test_list_or_range_size(self, text, expected):
        assert list_or_range_size(text) == expected

    def test_size_mismatch_is_an_error(self):
        d = golden_with(criterion={"4.3.3": IntegerAnswer(7)})
        report = validate(d)
        assert len(report.by_rule("R-SCALE-VALUES")) == 1

    def test_continuous_instrument_skips_value_count(self):
        d = golden_with(criterion={
            "4.3.3": Sentinel.CONTINUOUS,
            "4.3.4": Text("0.0 to 1.0"),
        })
        assert validate(d).by_rule("R-SCALE-VALUES") == []

    def test_na_size_with_listed_values(self):
        d = golden_with(criterion={
            "4.3.3": Sentinel.NA,
            "4.3.5": SingleChoice("na-no-instrument"),
            "4.3.6": Text("Evaluators post-edit the outputs."),
        })
        # 4.3.4 still lists values: both the size rule and the gate have a say
        report = validate(d)
        assert report.by_rule("R-SCALE-VALUES")
        assert report.by_rule("R-INSTRUMENT-GATE")

    def test_consistent_no_instrument_block_is_clean(self):
        d = golden_with(criterion={
            "4.3.3": Sentinel.NA,
            "4.3.4": Sentinel.NA,
            "4.3.5": SingleChoice("na-no-instrument"),
            "4.3.6": Text("Evaluators correct the text; edits are recorded."),
            "4.3.8": SingleChoice("post-editing-annotation"),
        })
        assert validate(d).error_count == 0


class TestEvalPairs:
    def test_error_without_explanation(self):
        report = validate(rule_fixtures()["R-EVAL-PAIRS"])
        (diag,) = report.by_rule("R-EVAL-PAIRS")
        assert diag.severity is Severity.ERROR
        assert "experts/non-experts" in diag.message

    def test_info_when_explained_under_other(self):
        d = golden_with(fixed={
            "3.2.2": MultiChoice(
                ("paid", "not-previously-known", "excludes-authors", "other"),
                "expertise of the participants is unknown",
            )
        })
        report = validate(d)
        (diag,) = report.by_rule("R-EVAL-PAIRS")
        assert diag.severity is Severity.INFO
        assert report.error_count == 0


class TestTaskIo:
    def test_data_to_text_needs_structured_input(self):
        report = validate(rule_fixtures()["R-TASK-IO"])
        (diag,) = report.by_rule("R-TASK-IO")
        assert [str(q) for q in diag.at] == ["2.3", "2.1"]

    def test_content_selection_output_must_not_be_text(self):
        d = golden_with(fixed={
            "2.1": MultiChoice(("raw-structured-data",)),
            "2.3": MultiChoice(("content-selection",)),
        })
        report = validate(d)
        (diag,) = report.by_rule("R-TASK-IO")
        assert [str(q) for q in diag.at] == ["2.3", "2.2"]

    def test_satisfied_constraints_stay_silent(self):
        d = golden_with(fixed={
            "2.1": MultiChoice(("slr",)),
            "2.3": MultiChoice(("surface-realisation",)),
        })
        assert validate(d).by_rule("R-TASK-IO") == []

    def test_image_description_needs_visual_input(self):
        d = golden_with(fixed={"2.3": MultiChoice(("image-video-description",))})
        assert len(validate(d).by_rule("R-TASK-IO")) == 1


class TestLanguageRule:
    def test_comma_and_lists_accepted(self):
        d = golden_with(fixed={"2.4": Text("English, Herero and Hindi")})
        assert validate(d).by_rule("R-LANG") == []

    def test_case_insensitive(self):
        d = golden_with(fixed={"2.4": Text("german")})
        assert validate(d).by_rule("R-LANG") == []

    def test_unknown_name_warns(self):
        report = validate(golden_with(fixed={"2.5": Text("English, Klingon")}))
        (diag,) = report.by_rule("R-LANG")
        assert "Klingon" in diag.message
        assert diag.severity is Severity.WARNING

    def test_na_accepted(self):
        d = golden_with(fixed={"2.4": Sentinel.NA})
        assert validate(d).by_rule("R-LANG") == []


class TestLinkAndPrereg:
    def test_missing_url_warns(self):
        report = validate(rule_fixtures()["R-LINK"])
        (diag,) = report.by_rule("R-LINK")
        assert diag.severity is Severity.WARNING

    def test_url_with_note_accepted(self):
        d = golden_with(fixed={"1.1": Text("https://example.org/x.pdf, experiment 2")})
        assert validate(d).by_rule("R-LINK") == []

    def test_prereg_flags_each_results_answer(self):
        report = validate(rule_fixtures()["R-PREREG"])
        flagged = report.by_rule("R-PREREG")
        assert len(flagged) == 3
        assert {str(d.at[1]) for d in flagged} == {
            "4.3.9[1]", "4.3.10[1]", "4.3.11[1]",
        }
        assert report.error_count == 0

    def test_prereg_ignores_none_sentinel(self):
        d = golden_with(
            fixed={"1.1": Sentinel.FOR_PREREGISTRATION},
            criterion={"4.3.10": Sentinel.NONE},
        )
        assert len(validate(d).by_rule("R-PREREG")) == 2


class TestOtherText:
    def test_detail_required(self):
        report = validate(rule_fixtures()["R-OTHER-TEXT"])
        (diag,) = report.by_rule("R-OTHER-TEXT")
        assert str(diag.at[0]) == "3.3.3"

    def test_detail_present_is_fine(self):
        d = golden_with(fixed={
            "3.3.3": MultiChoice(("other",), "responses are spot-checked weekly")
        })
        assert validate(d).error_count == 0

    def test_unexpected_detail_flagged(self):
        d = golden_with(fixed={
            "3.3.3": MultiChoice(("native-speakers",), "stray note")
        })
        (diag,) = validate(d).by_rule("R-OTHER-TEXT")
        assert "no selected option" in diag.message

    def test_single_choice_other_needs_detail(self):
        d = golden_with(fixed={"3.3.7": SingleChoice("other")})
        assert len(validate(d).by_rule("R-OTHER-TEXT")) == 1


class TestCritCount:
    def test_zero_blocks_flagged(self):
        report = validate(rule_fixtures()["R-CRIT-COUNT"])
        (diag,) = report.by_rule("R-CRIT-COUNT")
        assert diag.severity is Severity.ERROR


class TestReportShape:
    def test_ordering_by_path_then_rule(self):
        d = new_empty(builtin_schema())
        report = validate(d)
        keys = [(diag.at[0].sort_key, diag.rule) for diag in report.diagnostics]
        assert keys == sorted(keys)

    def test_json_shape(self):
        report = validate(rule_fixtures()["R-INT"])
        doc = report.to_json_dict()
        assert doc["errors"] == report.error_count
        assert doc["diagnostics"][0].keys() == {"rule", "severity", "at", "message"}

    def test_text_line_format(self):
        report = validate(rule_fixtures()["R-INT"])
        line = report.to_text().splitlines()[0]
        assert line.startswith("error R-INT 3.2.1: ")

    def test_monotonicity_of_completion(self):
        rng = random.Random(7)
        schema = builtin_schema()
        for _ in range(25):
            d = random_datasheet(rng)
            before = len(validate(d).by_rule("R-REQ"))
            unanswered = [
                q.path for q in schema.fixed_questions() if q.path not in d.fixed_answers
            ]
            if not unanswered:
                continue
            d2 = set_answer(d, unanswered[0], _any_answer(schema, unanswered[0]))
            after = len(validate(d2).by_rule("R-REQ"))
            assert after <= before


def _any_answer(schema, path):
    from heds.schema import QuestionKind, question

    q = question(schema, path)
    if q.kind is QuestionKind.FREE_TEXT:
        return Text("filled in")
    if q.kind is QuestionKind.INTEGER_TEXT:
        return IntegerAnswer(3)
    if q.kind is QuestionKind.SINGLE_CHOICE:
        return SingleChoice(q.options[0].key)
    return MultiChoice((q.options[0].key,))
