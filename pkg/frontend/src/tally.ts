import type { ApiClient } from "./api.js";
import { BUCKETS, type Bucket, type TallyEntry } from "./types.js";

export interface TallyRowView {
  categoryId: string;
  totalVotes: number;
  winner: Bucket | null;
  tied: boolean;
  awaitingVotes: boolean;
  // one segment per bucket, share in [0,1] of this category's votes
  segments: { bucket: Bucket; count: number; share: number }[];
}

/** Pure projection of one tally payload entry into what the table shows.
 * Never invents numbers: counts and winner come straight from the server. */
export function tallyRowView(entry: TallyEntry): TallyRowView {
  const total = entry.total_votes;
  return {
    categoryId: entry.category_id,
    totalVotes: total,
    winner: entry.assigned_bucket,
    tied: entry.tied,
    awaitingVotes: total === 0,
    segments: BUCKETS.map((bucket) => {
      const count = entry.tally[bucket] ?? 0;
      return { bucket, count, share: total > 0 ? count / total : 0 };
    }),
  };
}

/** Polls /api/tally on an interval and hands each payload to the listener. */
export class TallyPoller {
  private timer: ReturnType<typeof setInterval> | null = null;

  constructor(
    private readonly api: ApiClient,
    private readonly onUpdate: (rows: TallyRowView[]) => void,
    private readonly onError: (message: string) => void = () => {},
    private readonly intervalMs: number = 2000,
  ) {}

  async tick(): Promise<void> {
    try {
      const entries = await this.api.getTally();
      this.onUpdate(entries.map(tallyRowView));
    } catch (err) {
      this.onError(err instanceof Error ? err.message : String(err));
    }
  }

  start(): void {
    if (this.timer !== null) {
      return;
    }
    void this.tick();
    this.timer = setInterval(() => void this.tick(), this.intervalMs);
  }

  stop(): void {
    if (this.timer !== null) {
      clearInterval(this.timer);
      this.timer = null;
    }
  }
}
