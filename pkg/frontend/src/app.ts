// Browser shell around the wizard core: one question per screen, a sidebar
// tree of the five parts, live validation badges, draft persistence in
// localStorage, and canonical/Markdown export through the local API.

import { HedsApi } from "./api.js";
import { Draft, firstUnanswered } from "./draft.js";
import { LocalStorageStore } from "./storage.js";
import type { SavedDraft } from "./storage.js";
import {
  END_OF_CRITERION_PROMPT,
  Step,
  Wizard,
  resume,
  sameStep,
} from "./wizard.js";
import type {
  AnswerValue,
  Diagnostic,
  Question,
  SchemaDoc,
  ValidationReport,
} from "./types.js";

const API_BASE =
  new URLSearchParams(location.search).get("api") ?? "http://127.0.0.1:8399";

const api = new HedsApi(API_BASE);
const store = new LocalStorageStore(localStorage);

let schema: SchemaDoc;
let wizard: Wizard;
let draftId: string;
let report: ValidationReport | null = null;
let offline = false;

function el<K extends keyof HTMLElementTagNameMap>(
  tag: K,
  attrs: Record<string, string> = {},
  ...children: (Node | string)[]
): HTMLElementTagNameMap[K] {
  const node = document.createElement(tag);
  for (const [key, value] of Object.entries(attrs)) {
    if (key === "class") node.className = value;
    else node.setAttribute(key, value);
  }
  node.append(...children);
  return node;
}

function byId(id: string): HTMLElement {
  return document.getElementById(id)!;
}

async function init(): Promise<void> {
  draftId = location.hash.slice(1) || `draft-${Date.now().toString(36)}`;
  location.hash = draftId;
  try {
    schema = await api.schema();
  } catch {
    byId("app").replaceChildren(
      el("div", { class: "banner error" },
        `Cannot reach the heds API at ${API_BASE}. Start it with: heds serve`),
    );
    return;
  }
  const saved = store.load(draftId);
  if (saved) {
    const draft = Draft.fromCanonical(schema, saved.sheet);
    wizard = new Wizard(draft, saved.cursor);
  } else {
    wizard = new Wizard(new Draft(schema));
  }
  render();
  void liveValidate();
}

function persist(): void {
  const saved: SavedDraft = {
    sheet: wizard.draft.toCanonical(),
    cursor: wizard.cursor,
    savedAt: new Date().toISOString(),
  };
  store.save(draftId, saved);
}

async function liveValidate(): Promise<void> {
  try {
    report = await api.validate(wizard.draft.toCanonicalJson());
    offline = false;
  } catch {
    offline = true;
  }
  renderStatus();
  renderSidebar();
  renderDiagnosticsPanel();
}

function diagnosticsFor(step: Step): Diagnostic[] {
  if (!report || step.kind !== "question") return [];
  const label =
    step.criterion !== undefined ? `${step.path}[${step.criterion}]` : step.path;
  return report.diagnostics.filter((d) => d.at.includes(label));
}

// --- rendering ---------------------------------------------------------------

function render(): void {
  byId("app").replaceChildren(
    el("header", { id: "status" }),
    el("div", { class: "layout" },
      el("nav", { id: "sidebar" }),
      el("main", { id: "main" }),
      el("aside", { id: "diagnostics" }),
    ),
    el("footer", { id: "tools" }),
  );
  renderStatus();
  renderSidebar();
  renderMain();
  renderDiagnosticsPanel();
  renderTools();
}

function renderStatus(): void {
  const parts: (Node | string)[] = [el("strong", {}, "HEDS 1.0 wizard"), ` draft ${draftId}`];
  if (offline) {
    parts.push(el("span", { class: "banner error" },
      "offline: validation paused, answers are kept locally"));
  } else if (report) {
    const cls = report.errors > 0 ? "badge error" : "badge ok";
    const text = report.errors > 0
      ? `${report.errors} error(s), ${report.warnings} warning(s)`
      : "zero errors";
    parts.push(el("span", { class: cls }, text));
  }
  byId("status").replaceChildren(...parts);
}

function renderSidebar(): void {
  const nav = byId("sidebar");
  nav.replaceChildren();
  for (const part of schema.parts) {
    const blocks = part.repeatable
      ? Array.from({ length: wizard.draft.criteria.length }, (_, i) => i + 1)
      : [undefined];
    for (const criterion of blocks) {
      const title = criterion === undefined
        ? `Part ${part.id}: ${part.title}`
        : `Part ${part.id}: ${part.title} ${criterion}`;
      const list = el("ul", {});
      for (const q of part.questions) {
        const step: Step = { kind: "question", path: q.path, criterion };
        const answered = wizard.draft.getAnswer(q.path, criterion) !== undefined;
        const flagged = diagnosticsFor(step).length > 0;
        const classes = [
          "q",
          answered ? "answered" : "",
          flagged ? "flagged" : "",
          sameStep(step, wizard.cursor) ? "current" : "",
        ].join(" ");
        const item = el("li", { class: classes }, `Q${q.path}`);
        item.addEventListener("click", () => {
          try {
            wizard.goTo(step);
          } catch {
            return;
          }
          persist();
          render();
        });
        list.append(item);
      }
      nav.append(el("details", { open: "" }, el("summary", {}, title), list));
    }
  }
}

function renderMain(): void {
  const main = byId("main");
  main.replaceChildren();
  const step = wizard.cursor;
  if (step.kind === "done") {
    main.append(
      el("h2", {}, "All questions answered"),
      el("p", {}, "Use the tools below to export or store the datasheet."),
    );
    return;
  }
  if (step.kind === "end-of-criterion") {
    main.append(el("h2", {}, END_OF_CRITERION_PROMPT));
    const yes = el("button", {}, "Yes") as HTMLButtonElement;
    if (!wizard.canAddCriterion()) {
      yes.disabled = true;
      yes.title = `The maximum number of criteria is ${schema.max_criteria}.`;
    }
    yes.addEventListener("click", () => {
      wizard.answerEndOfCriterion(true);
      afterAnswer();
    });
    const no = el("button", {}, "No");
    no.addEventListener("click", () => {
      wizard.answerEndOfCriterion(false);
      afterAnswer();
    });
    main.append(el("div", { class: "controls" }, yes, no));
    return;
  }
  const q = wizard.draft.question(step.path);
  const where = step.criterion !== undefined ? ` (criterion ${step.criterion})` : "";
  main.append(el("h2", {}, `Q${q.path}${where}`), el("p", { class: "prompt" }, q.prompt));
  if (q.help) main.append(el("p", { class: "help" }, q.help));
  main.append(buildInput(q, step));
  for (const diag of diagnosticsFor(step)) {
    main.append(el("p", { class: `inline-diag ${diag.severity}` },
      `${diag.severity} ${diag.rule}: ${diag.message}`));
  }
}

function buildInput(q: Question, step: Step & { kind: "question" }): HTMLElement {
  const current = wizard.draft.getAnswer(q.path, step.criterion);
  const box = el("div", { class: "input" });
  const submit = (value: AnswerValue) => {
    try {
      wizard.advance(value);
    } catch (err) {
      showInlineError(box, String(err));
      return;
    }
    afterAnswer();
  };

  if (q.kind === "free-text" || q.kind === "integer") {
    const area = el("textarea", { rows: q.kind === "integer" ? "1" : "5" }) as HTMLTextAreaElement;
    if (current?.kind === "text") area.value = current.content;
    if (current?.kind === "integer") area.value = String(current.value);
    if (current?.kind === "sentinel") area.value = current.token;
    box.append(area);
    for (const sentinel of q.sentinels) {
      const btn = el("button", { class: "sentinel" }, sentinel);
      btn.addEventListener("click", () => submit({ kind: "sentinel", token: sentinel }));
      box.append(btn);
    }
    const next = el("button", { class: "primary" }, "Save & next");
    next.addEventListener("click", () => {
      const text = area.value;
      if (q.sentinels.includes(text.trim())) {
        submit({ kind: "sentinel", token: text.trim() });
      } else if (q.kind === "integer") {
        submit({ kind: "integer", value: Number(text.trim()) });
      } else {
        submit({ kind: "text", content: text });
      }
    });
    box.append(next);
    return box;
  }

  const multi = q.kind === "multi-choice";
  const chosen = new Set<string>(
    current?.kind === "single" ? [current.option]
    : current?.kind === "multi" ? current.options : [],
  );
  const inputs: HTMLInputElement[] = [];
  for (const opt of q.options) {
    const input = el("input", {
      type: multi ? "checkbox" : "radio",
      name: `opt-${q.path}`,
      value: opt.key,
    }) as HTMLInputElement;
    input.checked = chosen.has(opt.key);
    input.addEventListener("change", () => toggleOther());
    inputs.push(input);
    box.append(el("label", { class: "option" }, input, ` ${opt.label}`));
  }
  const otherArea = el("textarea", { rows: "2", placeholder: "Details for 'Other'" }) as HTMLTextAreaElement;
  const otherText = current?.kind === "single" || current?.kind === "multi"
    ? current.otherText ?? "" : "";
  otherArea.value = otherText;
  const otherWrap = el("div", { class: "other hidden" }, otherArea);
  box.append(otherWrap);

  const requiresText = new Set(q.options.filter((o) => o.requires_text).map((o) => o.key));
  const toggleOther = () => {
    const selected = inputs.filter((i) => i.checked).map((i) => i.value);
    const needed = selected.some((k) => requiresText.has(k));
    otherWrap.className = needed ? "other" : "other hidden";
  };
  toggleOther();

  const next = el("button", { class: "primary" }, "Save & next");
  next.addEventListener("click", () => {
    const selected = inputs.filter((i) => i.checked).map((i) => i.value);
    const other = otherArea.value.trim() ? otherArea.value : undefined;
    if (selected.length === 0) {
      showInlineError(box, "select an option first");
      return;
    }
    if (multi) {
      submit({ kind: "multi", options: selected, otherText: other });
    } else {
      submit({ kind: "single", option: selected[0]!, otherText: other });
    }
  });
  box.append(next);
  return box;
}

function showInlineError(box: HTMLElement, message: string): void {
  box.querySelector(".inline-error")?.remove();
  box.append(el("p", { class: "inline-error" }, message));
}

function afterAnswer(): void {
  persist();
  render();
  void liveValidate();
}

function renderDiagnosticsPanel(): void {
  const aside = byId("diagnostics");
  aside.replaceChildren(el("h3", {}, "Findings"));
  if (!report || report.diagnostics.length === 0) {
    aside.append(el("p", { class: "ok" }, offline ? "validation offline" : "none"));
    return;
  }
  const list = el("ul", {});
  for (const diag of report.diagnostics) {
    const item = el("li", { class: diag.severity },
      `${diag.severity} ${diag.rule} ${diag.at.join(", ")}: ${diag.message}`);
    list.append(item);
  }
  aside.append(list);
}

function renderTools(): void {
  const tools = byId("tools");
  tools.replaceChildren();

  const exportJson = el("button", {}, "Export .heds.json");
  exportJson.addEventListener("click", () => {
    download(`${draftId}.heds.json`, wizard.draft.toCanonicalJson(), "application/json");
  });

  const exportMd = el("button", {}, "Export Markdown");
  exportMd.addEventListener("click", async () => {
    try {
      const text = await api.render(wizard.draft.toCanonicalJson(), "markdown");
      download(`${draftId}.heds.md`, text, "text/markdown");
    } catch {
      offline = true;
      renderStatus();
    }
  });

  const storeBtn = el("button", {}, "Store in registry");
  storeBtn.addEventListener("click", async () => {
    try {
      await api.putRegistry(draftId, wizard.draft.toCanonicalJson());
      storeBtn.textContent = "Stored ✓";
    } catch (err) {
      storeBtn.textContent = `Store failed: ${String(err)}`;
    }
  });

  const importInput = el("input", { type: "file", accept: ".json" }) as HTMLInputElement;
  importInput.addEventListener("change", async () => {
    const file = importInput.files?.[0];
    if (!file) return;
    const draft = Draft.fromCanonical(schema, JSON.parse(await file.text()));
    wizard = resume(schema, draft);
    persist();
    render();
    void liveValidate();
    const pending = firstUnanswered(draft);
    if (pending) {
      wizard.goTo({ kind: "question", ...pending });
      render();
    }
  });

  tools.append(exportJson, exportMd, storeBtn,
    el("label", {}, " import: ", importInput));
}

function download(name: string, content: string, type: string): void {
  const url = URL.createObjectURL(new Blob([content], { type }));
  const link = el("a", { href: url, download: name });
  document.body.append(link);
  link.click();
  link.remove();
  URL.revokeObjectURL(url);
}

void init();
