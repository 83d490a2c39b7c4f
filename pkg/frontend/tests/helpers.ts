// Test plumbing: load the schema without HTTP, start the real local API as a
// child process, and mirror the fully consistent example sheet.

import { execFileSync, spawn, ChildProcess } from "node:child_process";
import { mkdtempSync } from "node:fs";
import { tmpdir } from "node:os";
import { join } from "node:path";
import type { AnswerValue, SchemaDoc } from "../src/types.js";

export const PYTHON = process.env.HEDS_PYTHON ?? "python3";

export function loadSchemaSync(): SchemaDoc {
  const out = execFileSync(PYTHON, [
    "-c",
    "import json; from heds import builtin_schema, schema_to_json;" +
      "print(json.dumps(schema_to_json(builtin_schema())))",
  ]);
  return JSON.parse(out.toString()) as SchemaDoc;
}

export interface RunningServer {
  baseUrl: string;
  registryDir: string;
  stop(): void;
}

export async function startServer(): Promise<RunningServer> {
  const registryDir = mkdtempSync(join(tmpdir(), "heds-registry-"));
  const child: ChildProcess = spawn(
    PYTHON,
    ["-m", "heds", "serve", "--port", "0", "--registry", registryDir],
    { stdio: ["ignore", "pipe", "pipe"] },
  );
  const baseUrl = await new Promise<string>((resolve, reject) => {
    const timer = setTimeout(() => reject(new Error("server did not start")), 15000);
    let buffer = "";
    child.stdout!.on("data", (chunk: Buffer) => {
      buffer += chunk.toString();
      const match = buffer.match(/serving on (http:\/\/[^\s]+)/);
      if (match) {
        clearTimeout(timer);
        resolve(match[1]!);
      }
    });
    child.on("exit", (code) => {
      clearTimeout(timer);
      reject(new Error(`server exited early with code ${code}`));
    });
  });
  return {
    baseUrl,
    registryDir,
    stop: () => {
      child.kill("SIGINT");
    },
  };
}

// A consistent, complete sheet (mirrors the Python test fixture): answering
// every question with these values validates with zero findings.
export const GOLDEN_FIXED: Record<string, AnswerValue> = {
  "1.1": { kind: "text", content: "https://example.org/papers/mt-eval-2021.pdf (experiment 1)" },
  "1.2": { kind: "text", content: "https://example.org/mt-eval/resources" },
  "1.3": { kind: "text", content: "Jane Doe, Example University, jane.doe@example.org" },
  "2.1": { kind: "multi", options: ["text-sentence"] },
  "2.2": { kind: "multi", options: ["text-sentence"] },
  "2.3": { kind: "multi", options: ["machine-translation"] },
  "2.4": { kind: "text", content: "German" },
  "2.5": { kind: "text", content: "English" },
  "3.1.1": { kind: "integer", value: 100 },
  "3.1.2": { kind: "single", option: "automatic-random" },
  "3.1.3": {
    kind: "text",
    content: "Power 0.82 for a medium effect at alpha=0.05; script: https://example.org/mt-eval/power.py",
  },
  "3.2.1": { kind: "integer", value: 10 },
  "3.2.2": { kind: "multi", options: ["non-experts", "paid", "not-previously-known", "excludes-authors"] },
  "3.2.3": { kind: "text", content: "Recruited through university mailing lists; fluent in German and English." },
  "3.2.4": { kind: "text", content: "A 15-minute briefing followed by three practice items." },
  "3.2.5": { kind: "text", content: "Translation-studies students aged 20 to 35; 6 women, 4 men." },
  "3.3.1": { kind: "text", content: "No" },
  "3.3.2": { kind: "text", content: "Online survey implemented in LimeSurvey." },
  "3.3.3": { kind: "multi", options: ["native-speakers", "manual-checks"] },
  "3.3.4": { kind: "text", content: "Source sentence, one translation and a 1-5 scale; screenshot: https://example.org/ui.png" },
  "3.3.5": { kind: "multi", options: ["single-sitting"] },
  "3.3.6": { kind: "multi", options: ["questions-before-start", "feedback-after"] },
  "3.3.7": { kind: "single", option: "own-choosing" },
  "3.3.8": { kind: "text", content: "Evaluations happen online at a place of the evaluators' own choosing." },
  "5.1": { kind: "text", content: "Yes, the Example University research ethics board (ref 2021-042)." },
  "5.2": { kind: "text", content: "No" },
  "5.3": { kind: "text", content: "No" },
  "5.4": { kind: "text", content: "No impact assessments were carried out." },
};

export const GOLDEN_CRITERION: Record<string, AnswerValue> = {
  "4.1.1": { kind: "single", option: "goodness" },
  "4.1.2": { kind: "single", option: "both" },
  "4.1.3": { kind: "single", option: "own-right" },
  "4.2.1": { kind: "single", option: "subjective" },
  "4.2.2": { kind: "single", option: "absolute" },
  "4.2.3": { kind: "single", option: "intrinsic" },
  "4.3.1": { kind: "text", content: "Fluency" },
  "4.3.2": { kind: "text", content: "How fluent and natural the translation reads." },
  "4.3.3": { kind: "integer", value: 5 },
  "4.3.4": { kind: "text", content: "1, 2, 3, 4, 5" },
  "4.3.5": { kind: "single", option: "multiple-choice" },
  "4.3.6": { kind: "sentinel", token: "N/A" },
  "4.3.7": { kind: "text", content: "How fluent is this translation? 1=not at all fluent, 5=very fluent" },
  "4.3.8": { kind: "single", option: "direct-quality-estimation" },
  "4.3.9": { kind: "text", content: "Per-system macro-average of the per-item mean ratings." },
  "4.3.10": { kind: "text", content: "Wilcoxon signed-rank tests with Bonferroni correction." },
  "4.3.11": { kind: "text", content: "Krippendorff's alpha = 0.71; intra-annotator not measured." },
};
