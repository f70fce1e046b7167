import type { AttemptFeedback, PracticeItem } from "./types.js";

// Thin client for the /api/v1 service. Configuration is just the base URL.

export class ApiError extends Error {
  constructor(
    public status: number,
    public code: string,
  ) {
    super(`${status}: ${code}`);
  }
}

async function getJson(url: string): Promise<unknown> {
  const resp = await fetch(url);
  if (!resp.ok) {
    const body = await resp.json().catch(() => ({}));
    throw new ApiError(resp.status, (body as { error?: string }).error ?? "request_failed");
  }
  return resp.json();
}

export class ApiClient {
  constructor(private baseUrl: string = "") {}

  randomItem(): Promise<PracticeItem> {
    return getJson(`${this.baseUrl}/api/v1/items/random`) as Promise<PracticeItem>;
  }

  item(id: string): Promise<PracticeItem> {
    return getJson(`${this.baseUrl}/api/v1/items/${encodeURIComponent(id)}`) as Promise<PracticeItem>;
  }

  assetUrl(ref: string): string {
    return `${this.baseUrl}/api/v1/assets/${ref}`;
  }

  async submitAttempt(
    itemId: string,
    wav: ArrayBuffer,
    hypothesisText?: string,
  ): Promise<AttemptFeedback> {
    const form = new FormData();
    form.append("audio", new Blob([wav], { type: "audio/wav" }), "attempt.wav");
    if (hypothesisText !== undefined) {
      form.append("hypothesis_text", hypothesisText);
    }
    const resp = await fetch(
      `${this.baseUrl}/api/v1/items/${encodeURIComponent(itemId)}/attempts`,
      { method: "POST", body: form },
    );
    if (!resp.ok) {
      const body = await resp.json().catch(() => ({}));
      throw new ApiError(resp.status, (body as { error?: string }).error ?? "attempt_failed");
    }
    return resp.json() as Promise<AttemptFeedback>;
  }
}
