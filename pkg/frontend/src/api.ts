// Client for the local heds API; the wizard's only network surface.

import type { SchemaDoc, ValidationReport } from "./types.js";

export class ApiError extends Error {
  constructor(public status: number, message: string) {
    super(message);
  }
}

export class HedsApi {
  constructor(
    readonly baseUrl: string,
    private readonly fetchImpl: typeof fetch = fetch,
  ) {}

  private async request(path: string, init?: RequestInit): Promise<Response> {
    const response = await this.fetchImpl(`${this.baseUrl}${path}`, init);
    if (!response.ok) {
      let detail = `${response.status}`;
      try {
        const body = (await response.json()) as { error?: string };
        if (body.error) detail = body.error;
      } catch {
        // non-JSON error body; keep the status text
      }
      throw new ApiError(response.status, detail);
    }
    return response;
  }

  async schema(): Promise<SchemaDoc> {
    const response = await this.request("/schema");
    return (await response.json()) as SchemaDoc;
  }

  async validate(canonicalJson: string): Promise<ValidationReport> {
    const response = await this.request("/validate", {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: canonicalJson,
    });
    return (await response.json()) as ValidationReport;
  }

  async render(canonicalJson: string, target: "markdown" | "latex"): Promise<string> {
    const response = await this.request(`/render?target=${target}`, {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: canonicalJson,
    });
    return await response.text();
  }

  async registryIndex(): Promise<unknown> {
    const response = await this.request("/registry");
    return await response.json();
  }

  async fetchRegistry(name: string): Promise<string> {
    const response = await this.request(`/registry/${encodeURIComponent(name)}`);
    return await response.text();
  }

  async putRegistry(name: string, canonicalJson: string): Promise<{ stored: string }> {
    const response = await this.request(`/registry/${encodeURIComponent(name)}`, {
      method: "PUT",
      headers: { "Content-Type": "application/json" },
      body: canonicalJson,
    });
    return (await response.json()) as { stored: string };
  }
}
