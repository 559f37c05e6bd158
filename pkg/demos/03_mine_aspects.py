#!/usr/bin/env python3
"""Mine aspect terms from the bundled synthetic corpus, step by step:
noun phrases -> transactions -> frequent itemsets -> rules -> pruned terms."""

from aspectmine import data_path
from aspectmine.corpus import ingest
from aspectmine.miner import build_transactions, extract_aspects, generate_rules, mine_frequent
from aspectmine.tagger import extract_noun_phrases

corpus = ingest(data_path("synthetic", "reviews.jsonl"))
sentences = corpus.build_sentences()
print(f"{sum(corpus.review_counts().values())} reviews, {len(sentences)} sentences")

phrases = extract_noun_phrases(sentences)
print(f"{len(phrases)} noun phrases; first five: {[list(np.terms) for np in phrases[:5]]}")

transactions = build_transactions(phrases)
itemsets = mine_frequent(transactions, min_support=0.0004)
rules = generate_rules(itemsets, min_confidence=0.6)
print(f"{len(transactions)} transactions -> {len(itemsets)} frequent itemsets -> {len(rules)} rules")

print("\nhighest-support itemsets:")
for it in sorted(itemsets, key=lambda i: -i.support_count)[:8]:
    print(f"  {set(it.items)}  count={it.support_count}  support={it.support:.4f}")

print("\nsample rules:")
for rule in sorted(rules, key=lambda r: -r.confidence)[:8]:
    print(f"  {set(rule.antecedent)} -> {set(rule.consequent)}  conf={rule.confidence:.2f}")

terms = extract_aspects(rules, sentences, frequent=itemsets, threshold=3)
print(f"\n{len(terms)} aspect terms after pruning and order validation:")
for term in terms:
    print(f"  {' '.join(term.words):30s} in {term.occurrence_count} sentences")
