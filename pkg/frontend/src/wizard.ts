// Wizard state machine: one step per question plus an end-of-criterion
// routing step after each quality-criterion block. Pure logic, no DOM.
//
// Gating:
//   - answering 4.3.3 with "N/A" auto-fills 4.3.4/4.3.5 (no instrument) and
//     routes straight to 4.3.6;
//   - the end-of-criterion step appends a new block on "yes" (capped at the
//     schema maximum) and proceeds to the Ethics part on "no".

import { Draft } from "./draft.js";
import type { AnswerValue, Question, SchemaDoc } from "./types.js";

export type Step =
  | { kind: "question"; path: string; criterion?: number }
  | { kind: "end-of-criterion"; criterion: number }
  | { kind: "done" };

export const END_OF_CRITERION_PROMPT =
  "Is there another quality criterion in the evaluation experiment that you " +
  "haven't completed this section for yet?";

const NO_INSTRUMENT_OPTION = "na-no-instrument";

export class Wizard {
  readonly draft: Draft;
  cursor: Step;

  constructor(draft: Draft, cursor?: Step) {
    this.draft = draft;
    this.cursor = cursor ?? this.steps()[0]!;
  }

  /** Every step currently visible, in document order. */
  steps(): Step[] {
    const steps: Step[] = [];
    for (const part of this.draft.schema.parts) {
      if (part.repeatable) {
        for (let c = 1; c <= this.draft.criteria.length; c++) {
          for (const q of part.questions) {
            steps.push({ kind: "question", path: q.path, criterion: c });
          }
          steps.push({ kind: "end-of-criterion", criterion: c });
        }
      } else {
        for (const q of part.questions) {
          steps.push({ kind: "question", path: q.path });
        }
      }
    }
    steps.push({ kind: "done" });
    return steps;
  }

  currentQuestion(): Question | null {
    return this.cursor.kind === "question" ? this.draft.question(this.cursor.path) : null;
  }

  canAddCriterion(): boolean {
    return this.draft.canAddCriterion();
  }

  /** Store an answer at the cursor and move it per the gating rules. */
  advance(answer: AnswerValue): Step {
    if (this.cursor.kind !== "question") {
      throw new Error("advance(answer) only applies to question steps");
    }
    const { path, criterion } = this.cursor;
    this.draft.setAnswer(path, answer, criterion);
    if (path === "4.3.3" && answer.kind === "sentinel" && answer.token === "N/A") {
      this.draft.setAnswer("4.3.4", { kind: "sentinel", token: "N/A" }, criterion);
      this.draft.setAnswer(
        "4.3.5",
        { kind: "single", option: NO_INSTRUMENT_OPTION },
        criterion,
      );
      this.cursor = { kind: "question", path: "4.3.6", criterion };
      return this.cursor;
    }
    this.cursor = this.nextStep(this.cursor);
    return this.cursor;
  }

  /** Resolve the end-of-criterion routing question. */
  answerEndOfCriterion(anotherCriterion: boolean): Step {
    if (this.cursor.kind !== "end-of-criterion") {
      throw new Error("not at an end-of-criterion step");
    }
    if (anotherCriterion) {
      if (!this.draft.canAddCriterion()) {
        throw new Error("the criterion limit is reached; 'yes' is disabled");
      }
      const index = this.draft.addCriterion();
      this.cursor = { kind: "question", path: this.firstCriterionPath(), criterion: index };
    } else {
      this.cursor = { kind: "question", path: this.firstEthicsPath() };
    }
    return this.cursor;
  }

  /**
   * Jump the cursor. Backward jumps are free; forward jumps stop at the
   * first unanswered question so authors cannot skip ahead blindly.
   */
  goTo(target: Step): Step {
    const steps = this.steps();
    const targetIndex = steps.findIndex((s) => sameStep(s, target));
    if (targetIndex < 0) throw new Error("no such step");
    const limit = this.firstUnansweredIndex(steps);
    this.cursor = steps[Math.min(targetIndex, limit)]!;
    return this.cursor;
  }

  private firstUnansweredIndex(steps: Step[]): number {
    for (let i = 0; i < steps.length; i++) {
      const step = steps[i]!;
      if (step.kind === "question" && !this.draft.getAnswer(step.path, step.criterion)) {
        return i;
      }
    }
    return steps.length - 1;
  }

  private nextStep(current: Step): Step {
    const steps = this.steps();
    const index = steps.findIndex((s) => sameStep(s, current));
    return steps[Math.min(index + 1, steps.length - 1)]!;
  }

  private firstCriterionPath(): string {
    const part = this.draft.schema.parts.find((p) => p.repeatable)!;
    return part.questions[0]!.path;
  }

  private firstEthicsPath(): string {
    const repeatableIndex = this.draft.schema.parts.findIndex((p) => p.repeatable);
    const after = this.draft.schema.parts[repeatableIndex + 1]!;
    return after.questions[0]!.path;
  }
}

export function sameStep(a: Step, b: Step): boolean {
  if (a.kind !== b.kind) return false;
  if (a.kind === "question" && b.kind === "question") {
    return a.path === b.path && (a.criterion ?? 0) === (b.criterion ?? 0);
  }
  if (a.kind === "end-of-criterion" && b.kind === "end-of-criterion") {
    return a.criterion === b.criterion;
  }
  return true;
}

/** Re-open a saved draft at the first unanswered question. */
export function resume(schema: SchemaDoc, draft: Draft): Wizard {
  const wizard = new Wizard(draft);
  const steps = wizard.steps();
  for (const step of steps) {
    if (step.kind === "question" && !draft.getAnswer(step.path, step.criterion)) {
      wizard.cursor = step;
      return wizard;
    }
  }
  wizard.cursor = steps[steps.length - 1]!;
  return wizard;
}
