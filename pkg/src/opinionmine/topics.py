"""Most frequent terms of a term-document matrix (wordcloud data)."""

from __future__ import annotations

import json

from opinionmine.vectorize import TermDocumentMatrix


def term_frequencies(tdm: TermDocumentMatrix) -> list:
    """``(word, total_count)`` rows, count descending then word ascending."""
    totals = tdm.row_sums()
    rows = [(word, int(totals[k])) for k, word in enumerate(tdm.vocabulary.words)]
    rows.sort(key=lambda r: (-r[1], r[0]))
    return rows


def top_k(table: list, k: int) -> list:
    if k < 1:
        raise ValueError(f"k must be positive, got {k}")
    return table[:k]


def wordcloud_json(table: list) -> str:
    return json.dumps([{"word": w, "count": c} for w, c in table], ensure_ascii=False)
