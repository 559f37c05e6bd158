import { describe, expect, it } from "vitest";

import { ApiClient } from "../src/api.js";

function jsonResponse(status: number, payload: unknown): Response {
  return new Response(JSON.stringify(payload), {
    status,
    headers: { "Content-Type": "application/json" },
  });
}

describe("ApiClient", () => {
  it("fetches categories from the right endpoint", async () => {
    const seen: string[] = [];
    const api = new ApiClient("http://host:1", async (input) => {
      seen.push(input);
      return jsonResponse(200, [{ category_id: "c", label: "c", members: [], sample_snippets: [] }]);
    });
    const cats = await api.getCategories();
    expect(seen).toEqual(["http://host:1/api/categories"]);
    expect(cats[0].category_id).toBe("c");
  });

  it("throws on category errors so the UI can show the empty state", async () => {
    const api = new ApiClient("", async () => jsonResponse(404, { error: "no survey configured" }));
    await expect(api.getCategories()).rejects.toThrow("404");
  });

  it("posts votes and returns HTTP errors instead of throwing", async () => {
    let body: unknown = null;
    const api = new ApiClient("", async (_input, init) => {
      body = JSON.parse(String(init?.body));
      return jsonResponse(409, { error: "already voted" });
    });
    const resp = await api.submitVote("s1", "video_call", "delighter");
    expect(body).toEqual({ subject_id: "s1", category_id: "video_call", bucket: "delighter" });
    expect(resp.status).toBe(409);
    expect(resp.body.error).toBe("already voted");
  });

  it("parses tally payloads", async () => {
    const api = new ApiClient("", async () =>
      jsonResponse(200, [
        {
          category_id: "c",
          tally: { must_have: 1, one_dimensional: 0, delighter: 0, indifferent: 0, reverse: 0 },
          total_votes: 1,
          assigned_bucket: "must_have",
          tied: false,
        },
      ]),
    );
    const tally = await api.getTally();
    expect(tally[0].total_votes).toBe(1);
  });
});
