// Wire formats shared with the heds HTTP API (GET /schema, POST /validate).

export type QuestionKind = "free-text" | "integer" | "single-choice" | "multi-choice";

export interface OptionDef {
  key: string;
  label: string;
  requires_text: boolean;
}

export interface Question {
  path: string;
  prompt: string;
  kind: QuestionKind;
  options: OptionDef[];
  sentinels: string[];
  help: string;
}

export interface SchemaPart {
  id: number;
  title: string;
  repeatable: boolean;
  questions: Question[];
}

export interface SchemaDoc {
  schema_version: string;
  max_criteria: number;
  parts: SchemaPart[];
}

export interface Diagnostic {
  rule: string;
  severity: "error" | "warning" | "info";
  at: string[];
  message: string;
}

export interface ValidationReport {
  diagnostics: Diagnostic[];
  errors: number;
  warnings: number;
}

// In-memory answer values; `encodeValue` maps these onto the canonical JSON
// encodings used on disk and over the wire.
export type AnswerValue =
  | { kind: "text"; content: string }
  | { kind: "integer"; value: number }
  | { kind: "single"; option: string; otherText?: string }
  | { kind: "multi"; options: string[]; otherText?: string }
  | { kind: "sentinel"; token: string };

export type CanonicalValue =
  | string
  | number
  | string[]
  | { option: string; other_text: string }
  | { options: string[]; other_text: string };

export interface CanonicalDatasheet {
  schema_version: string;
  answers: Record<string, CanonicalValue>;
  criteria: Record<string, CanonicalValue>[];
  provenance: string | null;
}
