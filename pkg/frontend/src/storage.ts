// Draft persistence. The browser app uses localStorage (one key per draft
// id, so a refresh loses nothing); tests use the in-memory store.

import type { CanonicalDatasheet } from "./types.js";
import type { Step } from "./wizard.js";

export interface SavedDraft {
  sheet: CanonicalDatasheet;
  cursor: Step;
  savedAt: string;
}

export interface DraftStore {
  save(id: string, draft: SavedDraft): void;
  load(id: string): SavedDraft | null;
  list(): string[];
  remove(id: string): void;
}

const PREFIX = "heds-draft:";

export class LocalStorageStore implements DraftStore {
  constructor(private readonly backing: Storage) {}

  save(id: string, draft: SavedDraft): void {
    this.backing.setItem(PREFIX + id, JSON.stringify(draft));
  }

  load(id: string): SavedDraft | null {
    const raw = this.backing.getItem(PREFIX + id);
    if (raw === null) return null;
    try {
      return JSON.parse(raw) as SavedDraft;
    } catch {
      return null;
    }
  }

  list(): string[] {
    const ids: string[] = [];
    for (let i = 0; i < this.backing.length; i++) {
      const key = this.backing.key(i);
      if (key && key.startsWith(PREFIX)) ids.push(key.slice(PREFIX.length));
    }
    return ids.sort();
  }

  remove(id: string): void {
    this.backing.removeItem(PREFIX + id);
  }
}

export class MemoryStore implements DraftStore {
  private readonly drafts = new Map<string, string>();

  save(id: string, draft: SavedDraft): void {
    this.drafts.set(id, JSON.stringify(draft));
  }

  load(id: string): SavedDraft | null {
    const raw = this.drafts.get(id);
    return raw === undefined ? null : (JSON.parse(raw) as SavedDraft);
  }

  list(): string[] {
    return [...this.drafts.keys()].sort();
  }

  remove(id: string): void {
    this.drafts.delete(id);
  }
}
