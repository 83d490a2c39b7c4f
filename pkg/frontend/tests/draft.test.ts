import { beforeAll, describe, expect, it } from "vitest";

import { Draft, KindMismatch, firstUnanswered, sortedPaths } from "../src/draft.js";
import type { SchemaDoc } from "../src/types.js";
import { loadSchemaSync } from "./helpers.js";

let schema: SchemaDoc;

beforeAll(() => {
  schema = loadSchemaSync();
});

describe("schema document", () => {
  it("carries all five parts and 45 questions", () => {
    expect(schema.parts.map((p) => p.id)).toEqual([1, 2, 3, 4, 5]);
    const total = schema.parts.reduce((n, p) => n + p.questions.length, 0);
    expect(total).toBe(45);
    expect(schema.max_criteria).toBe(10);
  });
});

describe("Draft answers", () => {
  it("stores kind-correct values", () => {
    const draft = new Draft(schema);
    draft.setAnswer("3.1.1", { kind: "integer", value: 50 });
    draft.setAnswer("4.1.1", { kind: "single", option: "goodness" }, 1);
    expect(draft.getAnswer("3.1.1")).toEqual({ kind: "integer", value: 50 });
    expect(draft.getAnswer("4.1.1", 1)).toEqual({
      kind: "single",
      option: "goodness",
      otherText: undefined,
    });
  });

  it("rejects values of the wrong kind", () => {
    const draft = new Draft(schema);
    expect(() => draft.setAnswer("3.1.1", { kind: "text", content: "many" }))
      .toThrow(KindMismatch);
    expect(() => draft.setAnswer("4.2.1", { kind: "single", option: "sideways" }, 1))
      .toThrow(KindMismatch);
    expect(() => draft.setAnswer("1.3", { kind: "sentinel", token: "N/A" }))
      .toThrow(KindMismatch);
    expect(() => draft.setAnswer("1.3", { kind: "text", content: "" }))
      .toThrow(KindMismatch);
  });

  it("normalises text that spells a permitted sentinel", () => {
    const draft = new Draft(schema);
    draft.setAnswer("1.2", { kind: "text", content: "N/A" });
    expect(draft.getAnswer("1.2")).toEqual({ kind: "sentinel", token: "N/A" });
  });

  it("orders multi-choice selections by the form order", () => {
    const draft = new Draft(schema);
    draft.setAnswer("3.2.2", { kind: "multi", options: ["paid", "experts"] });
    expect(draft.getAnswer("3.2.2")).toEqual({
      kind: "multi",
      options: ["experts", "paid"],
      otherText: undefined,
    });
  });

  it("caps criterion blocks at the schema maximum", () => {
    const draft = new Draft(schema);
    while (draft.canAddCriterion()) draft.addCriterion();
    expect(draft.criteria.length).toBe(10);
    expect(() => draft.addCriterion()).toThrow();
  });
});

describe("canonical form", () => {
  it("sorts answer keys numerically by path", () => {
    expect(sortedPaths(["4.3.11", "4.3.9", "4.3.10", "1.1"])).toEqual([
      "1.1", "4.3.9", "4.3.10", "4.3.11",
    ]);
  });

  it("round-trips through fromCanonical", () => {
    const draft = new Draft(schema);
    draft.setAnswer("1.1", { kind: "sentinel", token: "for preregistration" });
    draft.setAnswer("2.1", { kind: "multi", options: ["speech", "other"], otherText: "field recordings" });
    draft.setAnswer("4.3.3", { kind: "integer", value: 7 }, 1);
    draft.provenance = "made by tests";
    const back = Draft.fromCanonical(schema, draft.toCanonical());
    expect(back.toCanonicalJson()).toBe(draft.toCanonicalJson());
  });

  it("keeps the exact top-level key set", () => {
    const draft = new Draft(schema);
    expect(Object.keys(draft.toCanonical())).toEqual([
      "schema_version", "answers", "criteria", "provenance",
    ]);
  });

  it("reports the first unanswered question in document order", () => {
    const draft = new Draft(schema);
    expect(firstUnanswered(draft)).toEqual({ path: "1.1" });
    draft.setAnswer("1.1", { kind: "text", content: "https://example.org/p.pdf" });
    expect(firstUnanswered(draft)).toEqual({ path: "1.2" });
  });
});
