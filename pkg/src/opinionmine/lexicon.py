"""Lexicon-based polarity and subjectivity scoring."""

from __future__ import annotations

import math
from dataclasses import dataclass
from importlib import resources
from pathlib import Path
from typing import Iterable, Sequence

from opinionmine.corpus_io import CLASSES
from opinionmine.errors import InputError

NEUTRAL_TOL = 1e-12


@dataclass(frozen=True)
class SentimentScore:
    polarity: float
    subjectivity: float
    scored_word_count: int
    label: str


def parse_lexicon(content: str, source: str = "<lexicon>") -> dict:
    lexicon = {}
    for lineno, line in enumerate(content.splitlines(), start=1):
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        parts = line.split("\t")
        if len(parts) != 3:
            raise InputError(f"{source}: line {lineno}: expected word<TAB>polarity<TAB>subjectivity")
        word = parts[0].strip().lower()
        try:
            pol, subj = float(parts[1]), float(parts[2])
        except ValueError as exc:
            raise InputError(f"{source}: line {lineno}: non-numeric score") from exc
        if not (math.isfinite(pol) and -1.0 <= pol <= 1.0):
            raise InputError(f"{source}: line {lineno}: polarity {pol} outside [-1, 1]")
        if not (math.isfinite(subj) and 0.0 <= subj <= 1.0):
            raise InputError(f"{source}: line {lineno}: subjectivity {subj} outside [0, 1]")
        if word in lexicon:
            raise InputError(f"{source}: line {lineno}: duplicate word {word!r}")
        lexicon[word] = (pol, subj)
    return lexicon


def load_lexicon(path=None) -> dict:
    """Read a ``word<TAB>polarity<TAB>subjectivity`` file into a dict.

    With no path the bundled demonstration lexicon is returned.
    """
    if path is None:
        content = resources.files("opinionmine.data").joinpath("demo_lexicon.tsv").read_text(encoding="utf-8")
        return parse_lexicon(content, "demo_lexicon.tsv")
    path = Path(path)
    if not path.is_file():
        raise InputError(f"lexicon file not found: {path}")
    return parse_lexicon(path.read_text(encoding="utf-8"), str(path))


def polarity_label(polarity: float) -> str:
    if polarity > NEUTRAL_TOL:
        return "positive"
    if polarity < -NEUTRAL_TOL:
        return "negative"
    return "neutral"


def score_document(tokens: Sequence[str], lexicon: dict) -> SentimentScore:
    # Mean over scored occurrences; words missing from the lexicon do not dilute.
    # fsum keeps the result independent of token order.
    hits = [lexicon[tok] for tok in tokens if tok in lexicon]
    n = len(hits)
    if n == 0:
        return SentimentScore(0.0, 0.0, 0, "neutral")
    pol_total = math.fsum(h[0] for h in hits)
    subj_total = math.fsum(h[1] for h in hits)
    pol = min(1.0, max(-1.0, pol_total / n))
    if abs(pol) <= NEUTRAL_TOL:
        pol = 0.0
    subj = min(1.0, max(0.0, subj_total / n))
    return SentimentScore(pol, subj, n, polarity_label(pol))


def label_distribution(scores: Iterable[SentimentScore]) -> dict:
    counts = dict.fromkeys(CLASSES, 0)
    for s in scores:
        counts[s.label] += 1
    return counts
