import { beforeAll, describe, expect, it } from "vitest";

import { Draft } from "../src/draft.js";
import { Wizard, resume } from "../src/wizard.js";
import type { SchemaDoc } from "../src/types.js";
import { GOLDEN_CRITERION, GOLDEN_FIXED, loadSchemaSync } from "./helpers.js";

let schema: SchemaDoc;

beforeAll(() => {
  schema = loadSchemaSync();
});

function wizardAt(path: string, criterion?: number): Wizard {
  return new Wizard(new Draft(schema), { kind: "question", path, criterion });
}

describe("cursor flow", () => {
  it("starts at question 1.1", () => {
    const wizard = new Wizard(new Draft(schema));
    expect(wizard.cursor).toEqual({ kind: "question", path: "1.1" });
  });

  it("moves to the next question in document order", () => {
    const wizard = wizardAt("3.1.1");
    wizard.advance({ kind: "integer", value: 100 });
    expect(wizard.cursor).toEqual({ kind: "question", path: "3.1.2" });
  });

  it("reaches the end-of-criterion step after 4.3.11", () => {
    const wizard = wizardAt("4.3.11", 1);
    wizard.advance({ kind: "text", content: "alpha = 0.7" });
    expect(wizard.cursor).toEqual({ kind: "end-of-criterion", criterion: 1 });
  });
});

describe("no-instrument gating", () => {
  it("auto-fills 4.3.4/4.3.5 and routes to 4.3.6 when 4.3.3 is N/A", () => {
    const wizard = wizardAt("4.3.3", 1);
    wizard.advance({ kind: "sentinel", token: "N/A" });
    expect(wizard.cursor).toEqual({ kind: "question", path: "4.3.6", criterion: 1 });
    expect(wizard.draft.getAnswer("4.3.4", 1)).toEqual({ kind: "sentinel", token: "N/A" });
    expect(wizard.draft.getAnswer("4.3.5", 1)).toEqual({
      kind: "single",
      option: "na-no-instrument",
      otherText: undefined,
    });
  });

  it("takes the normal route when an instrument exists", () => {
    const wizard = wizardAt("4.3.3", 1);
    wizard.advance({ kind: "integer", value: 5 });
    expect(wizard.cursor).toEqual({ kind: "question", path: "4.3.4", criterion: 1 });
    expect(wizard.draft.getAnswer("4.3.5", 1)).toBeUndefined();
  });
});

describe("end-of-criterion routing", () => {
  it("yes appends a block and jumps to its first question", () => {
    const wizard = new Wizard(new Draft(schema), { kind: "end-of-criterion", criterion: 1 });
    wizard.answerEndOfCriterion(true);
    expect(wizard.draft.criteria.length).toBe(2);
    expect(wizard.cursor).toEqual({ kind: "question", path: "4.1.1", criterion: 2 });
  });

  it("no proceeds to the Ethics part", () => {
    const wizard = new Wizard(new Draft(schema), { kind: "end-of-criterion", criterion: 1 });
    wizard.answerEndOfCriterion(false);
    expect(wizard.cursor).toEqual({ kind: "question", path: "5.1" });
  });

  it("yes is unavailable at ten blocks", () => {
    const draft = new Draft(schema, 10);
    const wizard = new Wizard(draft, { kind: "end-of-criterion", criterion: 10 });
    expect(wizard.canAddCriterion()).toBe(false);
    expect(() => wizard.answerEndOfCriterion(true)).toThrow(/limit/);
    expect(draft.criteria.length).toBe(10);
  });
});

describe("jumping", () => {
  it("allows backward jumps and clamps forward jumps to the answered region", () => {
    const wizard = new Wizard(new Draft(schema));
    wizard.advance({ kind: "text", content: "https://example.org/p.pdf" });
    expect(wizard.cursor).toEqual({ kind: "question", path: "1.2" });
    wizard.goTo({ kind: "question", path: "5.4" });
    expect(wizard.cursor).toEqual({ kind: "question", path: "1.2" });
    wizard.goTo({ kind: "question", path: "1.1" });
    expect(wizard.cursor).toEqual({ kind: "question", path: "1.1" });
  });

  it("resume lands on the first unanswered question", () => {
    const draft = new Draft(schema);
    draft.setAnswer("1.1", GOLDEN_FIXED["1.1"]!);
    draft.setAnswer("1.2", GOLDEN_FIXED["1.2"]!);
    const wizard = resume(schema, draft);
    expect(wizard.cursor).toEqual({ kind: "question", path: "1.3" });
  });
});

describe("full scripted pass", () => {
  it("walks every step and never produces a kind-incorrect draft", () => {
    const wizard = new Wizard(new Draft(schema));
    let guard = 0;
    while (wizard.cursor.kind !== "done" && guard++ < 500) {
      const step = wizard.cursor;
      if (step.kind === "question") {
        const table = step.criterion === undefined ? GOLDEN_FIXED : GOLDEN_CRITERION;
        wizard.advance(table[step.path]!);
      } else if (step.kind === "end-of-criterion") {
        wizard.answerEndOfCriterion(false);
      }
    }
    expect(wizard.cursor).toEqual({ kind: "done" });
    const doc = wizard.draft.toCanonical();
    expect(Object.keys(doc.answers)).toHaveLength(28);
    expect(doc.criteria).toHaveLength(1);
    expect(Object.keys(doc.criteria[0]!)).toHaveLength(17);
  });
});
