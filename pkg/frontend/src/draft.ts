// Draft datasheet model: kind-correct answer storage plus conversion to and
// from the canonical .heds.json form. The canonical text produced here is
// byte-identical to what the API's registry would store, so exports and
// server round trips agree exactly.

import type {
  AnswerValue,
  CanonicalDatasheet,
  CanonicalValue,
  Question,
  SchemaDoc,
} from "./types.js";

export class KindMismatch extends Error {
  constructor(public path: string, reason: string) {
    super(`answer for ${path} does not fit the question: ${reason}`);
  }
}

export class Draft {
  readonly schema: SchemaDoc;
  readonly answers: Map<string, AnswerValue> = new Map();
  readonly criteria: Map<string, AnswerValue>[] = [];
  provenance: string | null = null;

  private readonly byPath: Map<string, Question> = new Map();

  constructor(schema: SchemaDoc, criteriaCount = 1) {
    this.schema = schema;
    for (const part of schema.parts) {
      for (const q of part.questions) {
        this.byPath.set(q.path, q);
      }
    }
    for (let i = 0; i < criteriaCount; i++) {
      this.criteria.push(new Map());
    }
  }

  question(path: string): Question {
    const q = this.byPath.get(path);
    if (!q) throw new Error(`unknown question: ${path}`);
    return q;
  }

  isCriterionPath(path: string): boolean {
    return path.startsWith("4.");
  }

  canAddCriterion(): boolean {
    return this.criteria.length < this.schema.max_criteria;
  }

  addCriterion(): number {
    if (!this.canAddCriterion()) {
      throw new Error(`a datasheet holds at most ${this.schema.max_criteria} criteria`);
    }
    this.criteria.push(new Map());
    return this.criteria.length;
  }

  getAnswer(path: string, criterion?: number): AnswerValue | undefined {
    if (this.isCriterionPath(path)) {
      if (!criterion || criterion < 1 || criterion > this.criteria.length) return undefined;
      return this.criteria[criterion - 1]!.get(path);
    }
    return this.answers.get(path);
  }

  setAnswer(path: string, value: AnswerValue, criterion?: number): void {
    const q = this.question(path);
    const normalised = normaliseValue(q, value);
    if (this.isCriterionPath(path)) {
      if (!criterion || criterion < 1 || criterion > this.criteria.length) {
        throw new Error(`criterion index out of range for ${path}: ${criterion}`);
      }
      this.criteria[criterion - 1]!.set(path, normalised);
    } else {
      this.answers.set(path, normalised);
    }
  }

  clearAnswer(path: string, criterion?: number): void {
    if (this.isCriterionPath(path)) {
      if (criterion && criterion >= 1 && criterion <= this.criteria.length) {
        this.criteria[criterion - 1]!.delete(path);
      }
    } else {
      this.answers.delete(path);
    }
  }

  toCanonical(): CanonicalDatasheet {
    const answers: Record<string, CanonicalValue> = {};
    for (const path of sortedPaths([...this.answers.keys()])) {
      answers[path] = encodeValue(this.answers.get(path)!);
    }
    const criteria = this.criteria.map((block) => {
      const encoded: Record<string, CanonicalValue> = {};
      for (const path of sortedPaths([...block.keys()])) {
        encoded[path] = encodeValue(block.get(path)!);
      }
      return encoded;
    });
    return {
      schema_version: this.schema.schema_version,
      answers,
      criteria,
      provenance: this.provenance,
    };
  }

  toCanonicalJson(): string {
    return JSON.stringify(this.toCanonical(), null, 2) + "\n";
  }

  static fromCanonical(schema: SchemaDoc, doc: CanonicalDatasheet): Draft {
    if (doc.schema_version !== schema.schema_version) {
      throw new Error(`unsupported schema version: ${doc.schema_version}`);
    }
    const draft = new Draft(schema, doc.criteria.length);
    for (const [path, raw] of Object.entries(doc.answers ?? {})) {
      draft.setAnswer(path, decodeValue(draft.question(path), raw));
    }
    doc.criteria.forEach((block, i) => {
      for (const [path, raw] of Object.entries(block)) {
        draft.setAnswer(path, decodeValue(draft.question(path), raw), i + 1);
      }
    });
    draft.provenance = doc.provenance ?? null;
    return draft;
  }
}

export function sortedPaths(paths: string[]): string[] {
  const key = (p: string) => p.split(".").map(Number);
  return [...paths].sort((a, b) => {
    const ka = key(a);
    const kb = key(b);
    for (let i = 0; i < Math.max(ka.length, kb.length); i++) {
      const diff = (ka[i] ?? -1) - (kb[i] ?? -1);
      if (diff !== 0) return diff;
    }
    return 0;
  });
}

function stripTrailingNewlines(text: string): string {
  return text.replace(/[\r\n]+$/, "");
}

export function normaliseValue(q: Question, value: AnswerValue): AnswerValue {
  switch (value.kind) {
    case "sentinel": {
      if (!q.sentinels.includes(value.token)) {
        throw new KindMismatch(q.path, `sentinel ${JSON.stringify(value.token)} not permitted here`);
      }
      return value;
    }
    case "text": {
      if (q.kind !== "free-text") throw new KindMismatch(q.path, "free text not expected");
      const content = stripTrailingNewlines(value.content);
      if (!content) throw new KindMismatch(q.path, "text answers must not be empty");
      if (q.sentinels.includes(content)) return { kind: "sentinel", token: content };
      return { kind: "text", content };
    }
    case "integer": {
      if (q.kind !== "integer") throw new KindMismatch(q.path, "integer not expected");
      if (!Number.isInteger(value.value) || value.value < 0) {
        throw new KindMismatch(q.path, "expected a non-negative integer");
      }
      return value;
    }
    case "single": {
      if (q.kind !== "single-choice") throw new KindMismatch(q.path, "single choice not expected");
      requireKnownOptions(q, [value.option]);
      return { kind: "single", option: value.option, otherText: cleanOther(value.otherText) };
    }
    case "multi": {
      if (q.kind !== "multi-choice") throw new KindMismatch(q.path, "multi choice not expected");
      if (value.options.length === 0) throw new KindMismatch(q.path, "select at least one option");
      if (new Set(value.options).size !== value.options.length) {
        throw new KindMismatch(q.path, "options must not repeat");
      }
      requireKnownOptions(q, value.options);
      const order = new Map(q.options.map((o, i) => [o.key, i]));
      const sorted = [...value.options].sort((a, b) => order.get(a)! - order.get(b)!);
      return { kind: "multi", options: sorted, otherText: cleanOther(value.otherText) };
    }
  }
}

function cleanOther(text: string | undefined): string | undefined {
  if (text === undefined) return undefined;
  const cleaned = stripTrailingNewlines(text);
  return cleaned ? cleaned : undefined;
}

function requireKnownOptions(q: Question, keys: string[]): void {
  const known = new Set(q.options.map((o) => o.key));
  for (const key of keys) {
    if (!known.has(key)) throw new KindMismatch(q.path, `unknown option key ${JSON.stringify(key)}`);
  }
}

export function encodeValue(value: AnswerValue): CanonicalValue {
  switch (value.kind) {
    case "sentinel":
      return value.token;
    case "text":
      return value.content;
    case "integer":
      return value.value;
    case "single":
      return value.otherText === undefined
        ? value.option
        : { option: value.option, other_text: value.otherText };
    case "multi":
      return value.otherText === undefined
        ? value.options
        : { options: value.options, other_text: value.otherText };
  }
}

export function decodeValue(q: Question, raw: CanonicalValue): AnswerValue {
  if (typeof raw === "string") {
    if (q.sentinels.includes(raw)) return { kind: "sentinel", token: raw };
    if (q.kind === "integer") {
      if (/^\d+$/.test(raw)) return { kind: "integer", value: Number(raw) };
      throw new KindMismatch(q.path, `expected an integer, got ${JSON.stringify(raw)}`);
    }
    if (q.kind === "single-choice") return { kind: "single", option: raw };
    return { kind: "text", content: raw };
  }
  if (typeof raw === "number") return { kind: "integer", value: raw };
  if (Array.isArray(raw)) return { kind: "multi", options: raw };
  if ("option" in raw) return { kind: "single", option: raw.option, otherText: raw.other_text };
  return { kind: "multi", options: raw.options, otherText: raw.other_text };
}

/** First unanswered question, scanning parts and criterion blocks in order. */
export function firstUnanswered(draft: Draft): { path: string; criterion?: number } | null {
  for (const part of draft.schema.parts) {
    if (part.repeatable) {
      for (let c = 1; c <= draft.criteria.length; c++) {
        for (const q of part.questions) {
          if (!draft.getAnswer(q.path, c)) return { path: q.path, criterion: c };
        }
      }
    } else {
      for (const q of part.questions) {
        if (!draft.getAnswer(q.path)) return { path: q.path };
      }
    }
  }
  return null;
}
