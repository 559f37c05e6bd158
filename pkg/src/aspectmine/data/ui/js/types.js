export const BUCKETS = [
    "must_have",
    "one_dimensional",
    "delighter",
    "indifferent",
    "reverse",
];
export const BUCKET_LABELS = {
    must_have: "Must-have",
    one_dimensional: "One-dimensional",
    delighter: "Delighter",
    indifferent: "Indifferent",
    reverse: "Reverse",
};
// One-line descriptions shown next to each choice on a ballot card.
export const BUCKET_HINTS = {
    must_have: "Taken for granted when present; causes dissatisfaction when missing.",
    one_dimensional: "Satisfaction rises and falls with how well it works.",
    delighter: "Unexpected bonus; delights when present, no harm when absent.",
    indifferent: "Users do not care either way.",
    reverse: "Some users actively dislike having this.",
};
