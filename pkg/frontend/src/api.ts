import type { Bucket, CategoryInfo, TallyEntry, VoteResponse } from "./types.js";

export type FetchLike = (input: string, init?: RequestInit) => Promise<Response>;

/** Thin client over the survey service JSON API. Never fabricates data:
 * every method returns exactly what the server said. */
export class ApiClient {
  constructor(
    private readonly baseUrl: string = "",
    private readonly fetchFn: FetchLike = (input, init) => fetch(input, init),
  ) {}

  async getCategories(): Promise<CategoryInfo[]> {
    const resp = await this.fetchFn(`${this.baseUrl}/api/categories`);
    if (!resp.ok) {
      throw new Error(`categories unavailable (HTTP ${resp.status})`);
    }
    return (await resp.json()) as CategoryInfo[];
  }

  async getTally(): Promise<TallyEntry[]> {
    const resp = await this.fetchFn(`${this.baseUrl}/api/tally`);
    if (!resp.ok) {
      throw new Error(`tally unavailable (HTTP ${resp.status})`);
    }
    return (await resp.json()) as TallyEntry[];
  }

  /** Submit one vote. HTTP errors are returned, not thrown, so the caller can
   * map 201/409/422/403 to ballot states; only transport failures reject. */
  async submitVote(subjectId: string, categoryId: string, bucket: Bucket): Promise<VoteResponse> {
    const resp = await this.fetchFn(`${this.baseUrl}/api/votes`, {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify({ subject_id: subjectId, category_id: categoryId, bucket }),
    });
    let body: VoteResponse["body"] = {};
    try {
      body = await resp.json();
    } catch {
      body = {};
    }
    return { status: resp.status, body };
  }
}
