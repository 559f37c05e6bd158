export const BUCKETS = [
  "must_have",
  "one_dimensional",
  "delighter",
  "indifferent",
  "reverse",
] as const;

export type Bucket = (typeof BUCKETS)[number];

export const BUCKET_LABELS: Record<Bucket, string> = {
  must_have: "Must-have",
  one_dimensional: "One-dimensional",
  delighter: "Delighter",
  indifferent: "Indifferent",
  reverse: "Reverse",
};

// One-line descriptions shown next to each choice on a ballot card.
export const BUCKET_HINTS: Record<Bucket, string> = {
  must_have: "Taken for granted when present; causes dissatisfaction when missing.",
  one_dimensional: "Satisfaction rises and falls with how well it works.",
  delighter: "Unexpected bonus; delights when present, no harm when absent.",
  indifferent: "Users do not care either way.",
  reverse: "Some users actively dislike having this.",
};

export interface CategoryInfo {
  category_id: string;
  label: string;
  members: string[];
  sample_snippets: string[];
}

export interface TallyEntry {
  category_id: string;
  tally: Record<Bucket, number>;
  total_votes: number;
  assigned_bucket: Bucket | null;
  tied: boolean;
}

export interface VoteResponse {
  status: number;
  body: { status?: string; error?: string };
}
