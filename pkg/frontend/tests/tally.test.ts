import { describe, expect, it } from "vitest";

import { tallyRowView } from "../src/tally.js";
import type { TallyEntry } from "../src/types.js";

function entry(overrides: Partial<TallyEntry> = {}): TallyEntry {
  return {
    category_id: "video_call",
    tally: { must_have: 20, one_dimensional: 0, delighter: 11, indifferent: 0, reverse: 0 },
    total_votes: 31,
    assigned_bucket: "must_have",
    tied: false,
    ...overrides,
  };
}

describe("tallyRowView", () => {
  it("mirrors the payload without inventing numbers", () => {
    const view = tallyRowView(entry());
    expect(view.totalVotes).toBe(31);
    expect(view.winner).toBe("must_have");
    expect(view.tied).toBe(false);
    const counts = Object.fromEntries(view.segments.map((s) => [s.bucket, s.count]));
    expect(counts).toEqual({ must_have: 20, one_dimensional: 0, delighter: 11, indifferent: 0, reverse: 0 });
  });

  it("shares sum to one when votes exist", () => {
    const view = tallyRowView(entry());
    const total = view.segments.reduce((acc, s) => acc + s.share, 0);
    expect(total).toBeCloseTo(1, 9);
  });

  it("marks zero-vote categories as awaiting", () => {
    const view = tallyRowView(
      entry({
        tally: { must_have: 0, one_dimensional: 0, delighter: 0, indifferent: 0, reverse: 0 },
        total_votes: 0,
        assigned_bucket: null,
      }),
    );
    expect(view.awaitingVotes).toBe(true);
    expect(view.winner).toBeNull();
    expect(view.segments.every((s) => s.share === 0)).toBe(true);
  });

  it("carries the tie flag through", () => {
    const view = tallyRowView(
      entry({
        tally: { must_have: 10, one_dimensional: 0, delighter: 10, indifferent: 0, reverse: 0 },
        total_votes: 20,
        assigned_bucket: "must_have",
        tied: true,
      }),
    );
    expect(view.tied).toBe(true);
    expect(view.winner).toBe("must_have");
  });
});
