"""The built-in HEDS 1.0 question inventory.

Four fixed parts (28 questions) plus the repeatable quality-criterion block
(17 questions). Prompts and option labels are carried verbatim from the HEDS
1.0 template; option keys are stable lowercase slugs chosen by this package.
Access goes through :func:`heds.schema.builtin_schema`.
"""

from __future__ import annotations

from .schema import (
    OptionDef,
    Part,
    Question,
    QuestionKind,
    Schema,
    Sentinel,
)

FREE = QuestionKind.FREE_TEXT
INT = QuestionKind.INTEGER_TEXT
ONE = QuestionKind.SINGLE_CHOICE
MANY = QuestionKind.MULTI_CHOICE

NA = Sentinel.NA


def _opt(key: str, label: str, requires_text: bool = False) -> OptionDef:
    return OptionDef(key=key, label=label, requires_text=requires_text)


# Input types (Q2.1). Output types (Q2.2) reuse these minus the control
# feature and human-generation entries, with human-generated stand-ins added.
_IO_COMMON = [
    _opt("raw-structured-data", "raw/structured data"),
    _opt("dlr", "deep linguistic representation (DLR)"),
    _opt("slr", "shallow linguistic representation (SLR)"),
    _opt("text-subsentential", "text: subsentential unit of text"),
    _opt("text-sentence", "text: sentence"),
    _opt("text-multiple-sentences", "text: multiple sentences"),
    _opt("text-document", "text: document"),
    _opt("text-dialogue", "text: dialogue"),
    _opt("text-other", "text: other"),
    _opt("speech", "speech"),
    _opt("visual", "visual"),
    _opt("multi-modal", "multi-modal"),
]

INPUT_OPTIONS = _IO_COMMON + [
    _opt("control-feature", "control feature"),
    _opt("no-input-human-generation", "no input (human generation)"),
    _opt("other", "other (please specify)", True),
]

OUTPUT_OPTIONS = _IO_COMMON + [
    _opt("human-generated-outputs", "human-generated 'outputs'"),
    _opt("other", "other (please specify)", True),
]

TASK_OPTIONS = [
    _opt("content-selection", "content selection/determination"),
    _opt("content-ordering", "content ordering/structuring"),
    _opt("aggregation", "aggregation"),
    _opt("referring-expression-generation", "referring expression generation"),
    _opt("lexicalisation", "lexicalisation"),
    _opt("deep-generation", "deep generation"),
    _opt("surface-realisation", "surface realisation (SLR to text)"),
    _opt("feature-controlled", "feature-controlled text generation"),
    _opt("data-to-text", "data-to-text generation"),
    _opt("dialogue-turn-generation", "dialogue turn generation"),
    _opt("question-generation", "question generation"),
    _opt("question-answering", "question answering"),
    _opt("paraphrasing", "paraphrasing/lossless simplification"),
    _opt("compression", "compression/lossy simplification"),
    _opt("machine-translation", "machine translation"),
    _opt("summarisation", "summarisation (text-to-text)"),
    _opt("end-to-end-text-generation", "end-to-end text generation"),
    _opt("image-video-description", "image/video description"),
    _opt("post-editing-correction", "post-editing/correction"),
    _opt("other", "other (please specify)", True),
]


def _part1() -> Part:
    return Part(
        id=1,
        title="Paper and Resources",
        questions=(
            Question(
                path="1.1",
                prompt=(
                    "Link to paper reporting the evaluation experiment. If the paper "
                    "reports more than one experiment, state which experiment you're "
                    "completing this sheet for. Or, if applicable, enter 'for "
                    "preregistration'."
                ),
                kind=FREE,
                sentinels=(Sentinel.FOR_PREREGISTRATION,),
                help=(
                    "A link to an online copy of the main reference for the human "
                    "evaluation experiment, identifying which of the experiments the "
                    "form is being completed for if there are several. If the "
                    "experiment hasn't been run yet, and the form is being completed "
                    "for the purpose of submitting it for preregistration, simply "
                    "enter 'for preregistration'."
                ),
            ),
            Question(
                path="1.2",
                prompt=(
                    "Link to website providing resources used in the evaluation "
                    "experiment (e.g. system outputs, evaluation tools, etc.). If "
                    "there isn't one, enter 'N/A'."
                ),
                kind=FREE,
                sentinels=(NA,),
                help=(
                    "Link(s) to any resources used in the evaluation experiment, such "
                    "as system outputs, evaluation tools, etc. If there aren't any "
                    "publicly shared resources (yet), enter 'N/A'."
                ),
            ),
            Question(
                path="1.3",
                prompt=(
                    "Name, affiliation and email address of person completing this "
                    "sheet, and of contact author if different."
                ),
                kind=FREE,
                help="Names, affiliations and email addresses as appropriate.",
            ),
        ),
    )


def _part2() -> Part:
    return Part(
        id=2,
        title="Evaluated System",
        questions=(
            Question(
                path="2.1",
                prompt=(
                    "What type of input do the evaluated system(s) take? Select all "
                    "that apply. If none match, select 'Other' and describe."
                ),
                kind=MANY,
                options=tuple(INPUT_OPTIONS),
                help=(
                    "Describe the type of input, where input refers to the "
                    "representations and/or data structures shared by all evaluated "
                    "systems. This question is about input type, regardless of "
                    "number. E.g. if the input is a set of documents, you would still "
                    "select 'text: document'."
                ),
            ),
            Question(
                path="2.2",
                prompt=(
                    "What type of output do the evaluated system(s) generate? Select "
                    "all that apply. If none match, select 'Other' and describe."
                ),
                kind=MANY,
                options=tuple(OUTPUT_OPTIONS),
                # The guidance under 2.2 repeats the input wording of 2.1; it is
                # carried as-is rather than corrected.
                help=(
                    "Describe the type of input, where input refers to the "
                    "representations and/or data structures shared by all evaluated "
                    "systems. This question is about input type, regardless of "
                    "number. Note that the options for outputs are the same as for "
                    "inputs minus the 'control feature' option."
                ),
            ),
            Question(
                path="2.3",
                prompt=(
                    "How would you describe the task that the evaluated system(s) "
                    "perform in mapping the inputs in Q2.1 to the outputs in Q2.2? "
                    "Occasionally, more than one of the options below may apply. If "
                    "none match, select 'Other' and describe."
                ),
                kind=MANY,
                options=tuple(TASK_OPTIONS),
                help=(
                    "This field records the task performed by the system(s) being "
                    "evaluated. This is independent of the application domain "
                    "(financial reporting, weather forecasting, etc.), or the "
                    "specific method (rule-based, neural, etc.) implemented in the "
                    "system. There are mutual constraints between inputs, outputs and "
                    "task for some of the options."
                ),
            ),
            Question(
                path="2.4",
                prompt="Input Language(s), or 'N/A'.",
                kind=FREE,
                sentinels=(NA,),
                help=(
                    "Any language name(s) that apply, mapped to standardised full "
                    "language names in ISO 639-1. E.g. English, Herero, Hindi. If no "
                    "language is accepted as (part of) the input, enter 'N/A'."
                ),
            ),
            Question(
                path="2.5",
                prompt="Output Language(s), or 'N/A'.",
                kind=FREE,
                sentinels=(NA,),
                help=(
                    "Any language name(s) that apply, mapped to standardised full "
                    "language names in ISO 639-1. E.g. English, Herero, Hindi. If no "
                    "language is generated, enter 'N/A'."
                ),
            ),
        ),
    )


def _part3() -> Part:
    return Part(
        id=3,
        title="Output Sample, Evaluators and Experimental Design",
        questions=(
            Question(
                path="3.1.1",
                prompt=(
                    "How many system outputs (or other evaluation items) are "
                    "evaluated per system in the evaluation experiment? Answer should "
                    "be an integer."
                ),
                kind=INT,
                help=(
                    "The number of system outputs (or other evaluation items) that "
                    "are evaluated per system by at least one evaluator in the "
                    "experiment, as an integer."
                ),
            ),
            Question(
                path="3.1.2",
                prompt=(
                    "How are system outputs (or other evaluation items) selected for "
                    "inclusion in the evaluation experiment? If none match, select "
                    "'Other' and describe."
                ),
                kind=ONE,
                options=(
                    _opt(
                        "automatic-random",
                        "by an automatic random process from a larger set",
                    ),
                    _opt(
                        "stratified-random",
                        "by an automatic random process but using stratified sampling "
                        "over given properties",
                    ),
                    _opt("manual-arbitrary", "by manual, arbitrary selection"),
                    _opt(
                        "manual-balanced",
                        "by manual selection aimed at achieving balance or variety "
                        "relative to given properties",
                    ),
                    _opt("other", "Other (please specify)", True),
                ),
            ),
            Question(
                path="3.1.3",
                prompt="What is the statistical power of the sample size?",
                kind=FREE,
                help=(
                    "The results of a statistical power calculation on the output "
                    "sample: provide numerical results and a link to the script used "
                    "(or another way of identifying the script)."
                ),
            ),
            Question(
                path="3.2.1",
                prompt=(
                    "How many evaluators are there in this experiment? Answer should "
                    "be an integer."
                ),
                kind=INT,
                help=(
                    "The total number of evaluators participating in the experiment, "
                    "as an integer."
                ),
            ),
            Question(
                path="3.2.2",
                prompt=(
                    "What kind of evaluators are in this experiment? Select all that "
                    "apply. If none match, select 'Other' and describe. In all cases, "
                    "provide details in the text box under 'Other'."
                ),
                kind=MANY,
                options=(
                    _opt("experts", "experts"),
                    _opt("non-experts", "non-experts"),
                    _opt(
                        "paid",
                        "paid (including non-monetary compensation such as course "
                        "credits)",
                    ),
                    _opt("not-paid", "not paid"),
                    _opt("previously-known", "previously known to authors"),
                    _opt("not-previously-known", "not previously known to authors"),
                    _opt(
                        "includes-authors",
                        "evaluators include one or more of the authors",
                    ),
                    _opt(
                        "excludes-authors",
                        "evaluators do not include any of the authors",
                    ),
                    _opt("other", "Other (fewer than 4 of the above apply)", True),
                ),
                help=(
                    "You should be able to tick 4 options of the above. If that's not "
                    "the case, use the 'Other' box to explain."
                ),
            ),
            Question(
                path="3.2.3",
                prompt="How are evaluators recruited?",
                kind=FREE,
                help=(
                    "Please explain how your evaluators are recruited. Do you send "
                    "emails to a given list? Do you post invitations on social media? "
                    "Posters on university walls? Were there any gatekeepers "
                    "involved? What are the exclusion/inclusion criteria?"
                ),
            ),
            Question(
                path="3.2.4",
                prompt=(
                    "What training and/or practice are evaluators given before "
                    "starting on the evaluation itself?"
                ),
                kind=FREE,
                help=(
                    "Describe any training evaluators were given as part of the "
                    "experiment to prepare them for the evaluation task, including "
                    "any practice evaluations they did."
                ),
            ),
            Question(
                path="3.2.5",
                prompt=(
                    "What other characteristics do the evaluators have, known either "
                    "because these were qualifying criteria, or from information "
                    "gathered as part of the evaluation?"
                ),
                kind=FREE,
                help=(
                    "List any characteristics not covered in previous questions that "
                    "the evaluators are known to have. This might include geographic "
                    "location of IP address, educational level, or demographic "
                    "information such as gender, age, etc. Where characteristics "
                    "differ among evaluators, also give numbers for each subgroup."
                ),
            ),
            Question(
                path="3.3.1",
                prompt=(
                    "Has the experimental design been preregistered? If yes, on which "
                    "registry?"
                ),
                kind=FREE,
                help=(
                    "State 'Yes' or 'No'; if 'Yes' also give the name of the registry "
                    "and a link to the registration page for the experiment."
                ),
            ),
            Question(
                path="3.3.2",
                prompt=(
                    "How are responses collected? E.g. paper forms, online survey "
                    "tool, etc."
                ),
                kind=FREE,
                help=(
                    "Describe how you collected responses, e.g. paper forms, Google "
                    "forms, SurveyMonkey, Mechanical Turk, CrowdFlower, audio/video "
                    "recording, etc."
                ),
            ),
            Question(
                path="3.3.3",
                prompt=(
                    "What quality assurance methods are used? Select all that apply. "
                    "If none match, select 'Other' and describe. In all cases, "
                    "provide details in the text box under 'Other'."
                ),
                kind=MANY,
                options=(
                    _opt(
                        "native-speakers",
                        "evaluators are required to be native speakers of the "
                        "language they evaluate",
                    ),
                    _opt(
                        "automatic-checks",
                        "automatic quality checking methods are used during/post "
                        "evaluation",
                    ),
                    _opt(
                        "manual-checks",
                        "manual quality checking methods are used during/post "
                        "evaluation",
                    ),
                    _opt(
                        "evaluators-excluded",
                        "evaluators are excluded if they fail quality checks (often "
                        "or badly enough)",
                    ),
                    _opt(
                        "evaluations-excluded",
                        "some evaluations are excluded because of failed quality "
                        "checks",
                    ),
                    _opt("none-of-the-above", "none of the above"),
                    _opt("other", "Other (please specify)", True),
                ),
            ),
            Question(
                path="3.3.4",
                prompt=(
                    "What do evaluators see when carrying out evaluations? Link to "
                    "screenshot(s) and/or describe the evaluation interface(s)."
                ),
                kind=FREE,
                help=(
                    "Describe the interface, paper form, etc. that evaluators see "
                    "when they carry out the evaluation. Link to a screenshot/copy if "
                    "possible."
                ),
            ),
            Question(
                path="3.3.5",
                prompt=(
                    "How free are evaluators regarding when and how quickly to carry "
                    "out evaluations? Select all that apply. In all cases, provide "
                    "details in the text box under 'Other'."
                ),
                kind=MANY,
                options=(
                    _opt(
                        "timed-assessments",
                        "evaluators have to complete each individual assessment "
                        "within a set time",
                    ),
                    _opt(
                        "single-sitting",
                        "evaluators have to complete the whole evaluation in one "
                        "sitting",
                    ),
                    _opt("neither-of-the-above", "neither of the above"),
                    _opt("other", "Other (please specify)", True),
                ),
            ),
            Question(
                path="3.3.6",
                prompt=(
                    "Are evaluators told they can ask questions about the evaluation "
                    "and/or provide feedback? Select all that apply. In all cases, "
                    "provide details in the text box under 'Other'."
                ),
                kind=MANY,
                options=(
                    _opt(
                        "questions-before-start",
                        "evaluators are told they can ask any questions during/after "
                        "receiving initial training/instructions, and before the "
                        "start of the evaluation",
                    ),
                    _opt(
                        "questions-during",
                        "evaluators are told they can ask any questions during the "
                        "evaluation",
                    ),
                    _opt(
                        "feedback-after",
                        "evaluators are asked for feedback and/or comments after the "
                        "evaluation, e.g. via an exit questionnaire or a comment box",
                    ),
                    _opt("none-of-the-above", "None of the above"),
                    _opt("other", "Other (please specify)", True),
                ),
            ),
            Question(
                path="3.3.7",
                prompt=(
                    "What are the experimental conditions in which evaluators carry "
                    "out the evaluations? If none match, select 'Other' and describe."
                ),
                kind=ONE,
                options=(
                    _opt(
                        "own-choosing",
                        "evaluation carried out by evaluators at a place of their own "
                        "choosing, e.g. online, using a paper form, etc.",
                    ),
                    _opt(
                        "lab-same-conditions",
                        "evaluation carried out in a lab, and conditions are the same "
                        "for each evaluator",
                    ),
                    _opt(
                        "lab-varying-conditions",
                        "evaluation carried out in a lab, and conditions vary for "
                        "different evaluators",
                    ),
                    _opt(
                        "real-life-same-conditions",
                        "evaluation carried out in a real-life situation, and "
                        "conditions are the same for each evaluator",
                    ),
                    _opt(
                        "real-life-varying-conditions",
                        "evaluation carried out in a real-life situation, and "
                        "conditions vary for different evaluators",
                    ),
                    _opt(
                        "simulated-same-conditions",
                        "evaluation carried out outside of the lab, in a situation "
                        "designed to resemble a real-life situation, and conditions "
                        "are the same for each evaluator",
                    ),
                    _opt(
                        "simulated-varying-conditions",
                        "evaluation carried out outside of the lab, in a situation "
                        "designed to resemble a real-life situation, and conditions "
                        "vary for different evaluators",
                    ),
                    _opt("other", "Other (please specify)", True),
                ),
            ),
            Question(
                path="3.3.8",
                prompt=(
                    "Unless the evaluation is carried out at a place of the "
                    "evaluators' own choosing, briefly describe the (range of "
                    "different) conditions in which evaluators carry out the "
                    "evaluations."
                ),
                kind=FREE,
                help=(
                    "Describe the variations in the conditions in which evaluators "
                    "carry out the evaluation, for both situations where those "
                    "variations are controlled, and situations where they are not "
                    "controlled."
                ),
            ),
        ),
    )


def _criterion_block() -> Part:
    return Part(
        id=4,
        title="Quality Criterion",
        questions=(
            Question(
                path="4.1.1",
                prompt="What type of quality is assessed by the quality criterion?",
                kind=ONE,
                options=(
                    _opt("correctness", "Correctness"),
                    _opt("goodness", "Goodness"),
                    _opt("features", "Features"),
                ),
                help=(
                    "Correctness: it is possible to state, generally for all outputs, "
                    "the conditions under which outputs are maximally correct. "
                    "Goodness: there is no single, general mechanism for deciding "
                    "when outputs are maximally good, only for deciding for two "
                    "outputs which is better and which is worse. Features: depending "
                    "on evaluation context, more of the captured property may be "
                    "better or less may be better."
                ),
            ),
            Question(
                path="4.1.2",
                prompt=(
                    "Which aspect of system outputs is assessed by the quality "
                    "criterion?"
                ),
                kind=ONE,
                options=(
                    _opt("form", "Form of output"),
                    _opt("content", "Content of output"),
                    _opt("both", "Both form and content of output"),
                ),
                help=(
                    "E.g. Grammaticality is only about the form; Meaning Preservation "
                    "only assesses output content; Coherence is a property of outputs "
                    "as a whole."
                ),
            ),
            Question(
                path="4.1.3",
                prompt=(
                    "Is each output assessed for quality in its own right, or with "
                    "reference to a system-internal or external frame of reference?"
                ),
                kind=ONE,
                options=(
                    _opt("own-right", "Quality of output in its own right"),
                    _opt("relative-to-input", "Quality of output relative to the input"),
                    _opt(
                        "external-frame",
                        "Quality of output relative to a system-external frame of "
                        "reference",
                    ),
                ),
                help=(
                    "E.g. Poeticness is assessed by considering just the output; "
                    "Answerability is the degree to which the output question can be "
                    "answered from information in the input; Factual Accuracy "
                    "assesses outputs relative to a source of real-world knowledge."
                ),
            ),
            Question(
                path="4.2.1",
                prompt=(
                    "Does an individual assessment involve an objective or a "
                    "subjective judgment?"
                ),
                kind=ONE,
                options=(
                    _opt("objective", "Objective"),
                    _opt("subjective", "Subjective"),
                ),
                help=(
                    "Repeated assessments of the same output with an objective-mode "
                    "evaluation method always yield the same score/result; subjective "
                    "assessments involve ratings, opinions and preferences by "
                    "evaluators."
                ),
            ),
            Question(
                path="4.2.2",
                prompt="Are outputs assessed in absolute or relative terms?",
                kind=ONE,
                options=(
                    _opt("absolute", "Absolute"),
                    _opt("relative", "Relative"),
                ),
                help=(
                    "Absolute: evaluators are shown outputs from a single system "
                    "during each individual assessment. Relative: evaluators are "
                    "shown outputs from multiple systems at the same time."
                ),
            ),
            Question(
                path="4.2.3",
                prompt="Is the evaluation intrinsic or extrinsic?",
                kind=ONE,
                options=(
                    _opt("intrinsic", "Intrinsic"),
                    _opt("extrinsic", "Extrinsic"),
                ),
                help=(
                    "Intrinsic: quality of outputs is assessed without considering "
                    "their effect on something external to the system. Extrinsic: "
                    "quality is assessed in terms of that effect, e.g. the "
                    "performance of an embedding system or of a user at a task."
                ),
            ),
            Question(
                path="4.3.1",
                prompt=(
                    "What do you call the quality criterion in explanations/"
                    "interfaces to evaluators? Enter 'N/A' if criterion not named."
                ),
                kind=FREE,
                sentinels=(NA,),
                help=(
                    "Examples of quality criterion names include Fluency, Clarity, "
                    "Meaning Preservation. If no name is used, state 'N/A'."
                ),
            ),
            Question(
                path="4.3.2",
                prompt=(
                    "What definition do you give for the quality criterion in "
                    "explanations/interfaces to evaluators? Enter 'N/A' if no "
                    "definition given."
                ),
                kind=FREE,
                sentinels=(NA,),
                help=(
                    "Copy and paste the verbatim definition you give to evaluators to "
                    "explain the quality criterion they're assessing. If you don't "
                    "give any definition, state 'N/A'."
                ),
            ),
            Question(
                path="4.3.3",
                prompt=(
                    "Size of scale or other rating instrument (i.e. how many "
                    "different possible values there are). Answer should be an "
                    "integer or 'continuous' (if it's not possible to state how many "
                    "possible responses there are). Enter 'N/A' if there is no rating "
                    "instrument."
                ),
                kind=INT,
                sentinels=(Sentinel.CONTINUOUS, NA),
                help=(
                    "The number of different response values for this quality "
                    "criterion. E.g. for a 5-point Likert scale, the size to enter is "
                    "5. For two-way forced-choice preference judgments, it is 2; if "
                    "there's also a no-preference option, enter 3. For a slider that "
                    "is mapped to 100 different values for the purpose of recording "
                    "assessments, the size to enter is 100. If no rating instrument "
                    "is used, enter 'N/A'."
                ),
            ),
            Question(
                path="4.3.4",
                prompt=(
                    "List or range of possible values of the scale or other rating "
                    "instrument. Enter 'N/A', if there is no rating instrument."
                ),
                kind=FREE,
                sentinels=(NA,),
                help=(
                    "List, or give the range of, the possible values of the rating "
                    "instrument. The list or range should be of the size specified in "
                    "Question 4.3.3. If there are too many to list, use a range. E.g. "
                    "for two-way forced-choice preference judgments, the list entered "
                    "might be 'A better, B better'; if there's also a no-preference "
                    "option, the list might be 'A better, B better, neither'. For a "
                    "slider that is mapped to 100 different values, the range '1--100' "
                    "might be entered. If no rating instrument is used, enter 'N/A'."
                ),
            ),
            Question(
                path="4.3.5",
                prompt=(
                    "How is the scale or other rating instrument presented to "
                    "evaluators? If none match, select 'Other' and describe."
                ),
                kind=ONE,
                options=(
                    _opt("multiple-choice", "Multiple-choice options"),
                    _opt("check-boxes", "Check-boxes"),
                    _opt("slider", "Slider"),
                    _opt("na-no-instrument", "N/A (there is no rating instrument)"),
                    _opt("other", "Other (please specify)", True),
                ),
            ),
            Question(
                path="4.3.6",
                prompt=(
                    "If there is no rating instrument, describe briefly what task the "
                    "evaluators perform (e.g. ranking multiple outputs, finding "
                    "information, playing a game, etc.), and what information is "
                    "recorded. Enter 'N/A' if there is a rating instrument."
                ),
                kind=FREE,
                sentinels=(NA,),
                help=(
                    "If (and only if) there is no rating instrument, i.e. you entered "
                    "'N/A' for Questions 4.3.3--4.3.5, describe the task evaluators "
                    "perform in this space. Otherwise, here enter 'N/A' if there is a "
                    "rating instrument."
                ),
            ),
            Question(
                path="4.3.7",
                prompt=(
                    "What is the verbatim question, prompt or instruction given to "
                    "evaluators (visible to them during each individual assessment)?"
                ),
                kind=FREE,
                help=(
                    "Copy and paste the verbatim text that evaluators see during each "
                    "assessment, that is intended to convey the evaluation task to "
                    "them."
                ),
            ),
            Question(
                path="4.3.8",
                prompt=(
                    "Form of response elicitation. If none match, select 'Other' and "
                    "describe."
                ),
                kind=ONE,
                options=(
                    _opt(
                        "agreement-with-quality-statement",
                        "(dis)agreement with quality statement",
                    ),
                    _opt("direct-quality-estimation", "direct quality estimation"),
                    _opt(
                        "relative-quality-estimation",
                        "relative quality estimation (including ranking)",
                    ),
                    _opt("counting-occurrences", "counting occurrences in text"),
                    _opt(
                        "qualitative-feedback",
                        "qualitative feedback (e.g. via comments entered in a text "
                        "box)",
                    ),
                    _opt(
                        "post-editing-annotation",
                        "evaluation through post-editing/annotation",
                    ),
                    _opt(
                        "output-classification",
                        "output classification or labelling",
                    ),
                    _opt(
                        "user-text-interaction",
                        "user-text interaction measurements",
                    ),
                    _opt("task-performance", "task performance measurements"),
                    _opt(
                        "user-system-interaction",
                        "user-system interaction measurements",
                    ),
                    _opt("other", "Other (please specify)", True),
                ),
            ),
            Question(
                path="4.3.9",
                prompt=(
                    "How are raw responses from participants aggregated or otherwise "
                    "processed to obtain reported scores for this quality criterion? "
                    "State if no scores reported."
                ),
                kind=FREE,
                help=(
                    "Describe the method(s) used to convert the separate assessments "
                    "collected from evaluators into the results as reported, e.g. "
                    "macro-averages or micro-averages computed from numerical scores."
                ),
            ),
            Question(
                path="4.3.10",
                prompt=(
                    "Method(s) used for determining effect size and significance of "
                    "findings for this quality criterion."
                ),
                kind=FREE,
                sentinels=(Sentinel.NONE,),
                help=(
                    "A list of methods used for calculating the effect size and "
                    "significance of any results for this quality criterion. If none "
                    "calculated, state 'None'."
                ),
            ),
            Question(
                path="4.3.11",
                prompt=(
                    "Has the inter-annotator and intra-annotator agreement between "
                    "evaluators for this quality criterion been measured? If yes, "
                    "what method was used, and what are the agreement scores?"
                ),
                kind=FREE,
                help=(
                    "The methods used to compute, and results obtained from, any "
                    "measures of inter-annotator and intra-annotator agreement "
                    "obtained for the quality criterion."
                ),
            ),
        ),
    )


def _part5() -> Part:
    return Part(
        id=5,
        title="Ethics",
        questions=(
            Question(
                path="5.1",
                prompt=(
                    "Has the evaluation experiment this sheet is being completed for, "
                    "or the larger study it is part of, been approved by a research "
                    "ethics committee? If yes, which research ethics committee?"
                ),
                kind=FREE,
                help=(
                    "Provide the name of the body that approved the experiment, or "
                    "state 'No' if approval has not (yet) been obtained."
                ),
            ),
            Question(
                path="5.2",
                prompt=(
                    "Do any of the system outputs (or human-authored stand-ins) "
                    "evaluated, or do any of the responses collected, in the "
                    "experiment contain personal data (as defined in GDPR Art. 4, "
                    "§1: https://gdpr.eu/article-4-definitions/)? If yes, "
                    "describe data and state how addressed."
                ),
                kind=FREE,
                help=(
                    "State 'No' if no personal data as defined by GDPR was recorded "
                    "or collected, otherwise explain how conformity with GDPR "
                    "requirements such as privacy and security was ensured."
                ),
            ),
            Question(
                path="5.3",
                prompt=(
                    "Do any of the system outputs (or human-authored stand-ins) "
                    "evaluated, or do any of the responses collected, in the "
                    "experiment contain special category information (as defined in "
                    "GDPR Art. 9, §1: https://gdpr.eu/article-9-processing-"
                    "special-categories-of-personal-data-prohibited/)? If yes, "
                    "describe data and state how addressed."
                ),
                kind=FREE,
                help=(
                    "State 'No' if no special-category data as defined by GDPR was "
                    "recorded or collected, otherwise explain how conformity with "
                    "GDPR requirements relating to special-category data was ensured."
                ),
            ),
            Question(
                path="5.4",
                prompt=(
                    "Have any impact assessments been carried out for the evaluation "
                    "experiment, and/or any data collected/evaluated in connection "
                    "with it? If yes, summarise approach(es) and outcomes."
                ),
                kind=FREE,
                help=(
                    "Describe any ex ante or ex post impact assessments that have "
                    "been carried out in relation to the evaluation experiment, such "
                    "as data protection impact assessments under GDPR, or "
                    "environmental and social impact assessments."
                ),
            ),
        ),
    )


def build_schema() -> Schema:
    """Assemble the full HEDS 1.0 schema."""
    return Schema(
        version="1.0",
        parts=(_part1(), _part2(), _part3(), _part5()),
        criterion_block=_criterion_block(),
    )
