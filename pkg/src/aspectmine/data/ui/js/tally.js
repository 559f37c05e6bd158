import { BUCKETS } from "./types.js";
/** Pure projection of one tally payload entry into what the table shows.
 * Never invents numbers: counts and winner come straight from the server. */
export function tallyRowView(entry) {
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
    constructor(api, onUpdate, onError = () => { }, intervalMs = 2000) {
        this.api = api;
        this.onUpdate = onUpdate;
        this.onError = onError;
        this.intervalMs = intervalMs;
        this.timer = null;
    }
    async tick() {
        try {
            const entries = await this.api.getTally();
            this.onUpdate(entries.map(tallyRowView));
        }
        catch (err) {
            this.onError(err instanceof Error ? err.message : String(err));
        }
    }
    start() {
        if (this.timer !== null) {
            return;
        }
        void this.tick();
        this.timer = setInterval(() => void this.tick(), this.intervalMs);
    }
    stop() {
        if (this.timer !== null) {
            clearInterval(this.timer);
            this.timer = null;
        }
    }
}
