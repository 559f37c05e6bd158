"""Independent reference implementations used to check the real ones.

These stay deliberately naive: exhaustive enumeration for itemsets and rule
splits, and a triple loop over (sentiment token, occurrence, aspect token)
for distance-weighted scoring.
"""

from fractions import Fraction
from itertools import combinations


def brute_force_frequent(transactions, min_support):
    universe = sorted({i for t in transactions for i in t.items})
    total = len(transactions)
    counts = {}
    for r in range(1, len(universe) + 1):
        for combo in combinations(universe, r):
            s = frozenset(combo)
            count = sum(1 for t in transactions if s <= t.items)
            if total and count / total >= min_support:
                counts[s] = count
    return counts


def brute_force_rules(freq_counts, min_confidence):
    rules = set()
    for s, c in freq_counts.items():
        if len(s) < 2:
            continue
        for r in range(1, len(s)):
            for ante in combinations(sorted(s), r):
                a = frozenset(ante)
                conf = c / freq_counts[a]
                if conf >= min_confidence:
                    rules.add((tuple(sorted(a)), tuple(sorted(s - a)), conf))
    return rules


def brute_force_score(norms, aspect_words, lexicon):
    occurrences = []
    k = len(aspect_words)
    for i in range(len(norms) - k + 1):
        if list(norms[i : i + k]) == list(aspect_words):
            occurrences.append(list(range(i, i + k)))
    if not occurrences:
        return Fraction(0), Fraction(0)
    inside = {p for occ in occurrences for p in occ}
    pos = Fraction(0)
    neg = Fraction(0)
    for j, word in enumerate(norms):
        if j in inside:
            continue
        if word in lexicon.positive:
            sign = 1
        elif word in lexicon.negative:
            sign = -1
        else:
            continue
        best = None
        for occ in occurrences:
            for p in occ:
                d = abs(j - p)
                if best is None or d < best:
                    best = d
        if best < 1:
            best = 1
        if sign > 0:
            pos += Fraction(1, best)
        else:
            neg += Fraction(1, best)
    return pos, neg
