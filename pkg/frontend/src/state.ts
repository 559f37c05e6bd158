import type { ApiClient } from "./api.js";
import type { Bucket, CategoryInfo } from "./types.js";

/** Lifecycle of one category on a ballot. Submitted and already-voted cards
 * are locked: no reselection, no resubmission. */
export type CardStatus =
  | "unset"
  | "selected"
  | "pending"
  | "submitted"
  | "already_voted"
  | "rejected"
  | "queued";

export interface CardState {
  info: CategoryInfo;
  selected: Bucket | null;
  status: CardStatus;
  message: string;
}

const LOCKED: ReadonlySet<CardStatus> = new Set(["pending", "submitted", "already_voted"]);

export class BallotState {
  readonly subjectId: string;
  private readonly cards = new Map<string, CardState>();

  constructor(subjectId: string, categories: CategoryInfo[]) {
    if (!subjectId.trim()) {
      throw new Error("subject id must be non-empty");
    }
    this.subjectId = subjectId.trim();
    for (const info of categories) {
      this.cards.set(info.category_id, { info, selected: null, status: "unset", message: "" });
    }
  }

  card(categoryId: string): CardState {
    const card = this.cards.get(categoryId);
    if (!card) {
      throw new Error(`unknown category ${categoryId}`);
    }
    return card;
  }

  list(): CardState[] {
    return [...this.cards.values()];
  }

  isLocked(categoryId: string): boolean {
    return LOCKED.has(this.card(categoryId).status);
  }

  /** Selecting a bucket on a locked card is a no-op; returns acceptance. */
  select(categoryId: string, bucket: Bucket): boolean {
    const card = this.card(categoryId);
    if (this.isLocked(categoryId)) {
      return false;
    }
    card.selected = bucket;
    card.status = "selected";
    card.message = "";
    return true;
  }

  canSubmit(categoryId: string): boolean {
    const card = this.card(categoryId);
    return card.selected !== null && !this.isLocked(categoryId);
  }

  progress(): { done: number; total: number } {
    let done = 0;
    for (const card of this.cards.values()) {
      if (card.status === "submitted" || card.status === "already_voted") {
        done += 1;
      }
    }
    return { done, total: this.cards.size };
  }

  allDone(): boolean {
    const { done, total } = this.progress();
    return total > 0 && done === total;
  }
}

/** Submit the selected bucket for one card through the API and apply the
 * server's verdict to the ballot. The pending guard makes double-clicks
 * idempotent: the second call returns the in-flight status without posting. */
export async function submitSelection(
  api: ApiClient,
  ballot: BallotState,
  categoryId: string,
): Promise<CardStatus> {
  const card = ballot.card(categoryId);
  if (!ballot.canSubmit(categoryId)) {
    return card.status;
  }
  const bucket = card.selected as Bucket;
  card.status = "pending";
  card.message = "";
  let status: number;
  let error: string | undefined;
  try {
    const resp = await api.submitVote(ballot.subjectId, categoryId, bucket);
    status = resp.status;
    error = resp.body.error;
  } catch {
    // transport failure: keep the selection, offer a retry
    card.status = "queued";
    card.message = "offline — vote kept locally, retry when connected";
    return card.status;
  }
  if (status === 201) {
    card.status = "submitted";
  } else if (status === 409) {
    card.status = "already_voted";
    card.message = "this subject already voted on this category";
  } else {
    card.status = "rejected";
    card.message = error ?? `rejected (HTTP ${status})`;
  }
  return card.status;
}
