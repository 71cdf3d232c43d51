"""Tweet cleaning pipeline and vocabulary construction.

Pipeline order: strip entities, translate, normalize (symbols, digits,
case, accents, letter runs), tokenize, drop stopwords.
"""

from __future__ import annotations

import hashlib
import re
import unicodedata
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path
from typing import Iterable, Optional, Sequence

from opinionmine.errors import InputError

URL_RE = re.compile(r"https?://\S+|\bt\.co/\S+", re.IGNORECASE)
ENTITY_RE = re.compile(r"#\w+|@\w+")
NON_LETTER_RE = re.compile(r"[^a-z]+")
RUN_RE = re.compile(r"(.)\1{2,}")
WS_RE = re.compile(r"\s+")


def strip_entities(text: str) -> str:
    """Remove URLs, hashtags and @mentions, collapsing leftover whitespace."""
    text = URL_RE.sub(" ", text)
    text = ENTITY_RE.sub(" ", text)
    return WS_RE.sub(" ", text).strip()


def load_translation_table(path) -> dict:
    """Read a ``source<TAB>target`` phrase table."""
    table = {}
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            line = line.rstrip("\r\n")
            if not line.strip() or line.lstrip().startswith("#"):
                continue
            parts = line.split("\t")
            if len(parts) != 2:
                raise InputError(f"{path}: line {lineno}: expected source<TAB>target")
            table[parts[0]] = parts[1]
    return table


def translate_hook(text: str, mapping: Optional[dict] = None) -> str:
    if not mapping:
        return text
    return mapping.get(text, text)


def normalize(text: str) -> str:
    """Lowercase ASCII letters only, accents folded, runs of 3+ cut to 2.

    Anything without a Latin letter decomposition (punctuation, digits,
    emoji, other scripts) becomes a word break.
    """
    text = unicodedata.normalize("NFKD", text.lower()).lower()
    text = "".join(ch for ch in text if not unicodedata.combining(ch))
    text = NON_LETTER_RE.sub(" ", text)
    text = RUN_RE.sub(r"\1\1", text)
    return " ".join(text.split())


def tokenize(text: str) -> list:
    return text.split()


def remove_stopwords(tokens: Sequence[str], stoplist) -> list:
    return [t for t in tokens if t not in stoplist]


def load_stopwords(path=None) -> frozenset:
    """Stopword set from a one-word-per-line file; the bundled English list by default."""
    if path is None:
        content = resources.files("opinionmine.data").joinpath("stopwords_en.txt").read_text(encoding="utf-8")
    else:
        content = Path(path).read_text(encoding="utf-8")
    words = set()
    for line in content.splitlines():
        line = line.split("#", 1)[0].strip().lower()
        if line:
            words.add(line)
    return frozenset(words)


@dataclass(frozen=True)
class PreprocessConfig:
    stopwords: frozenset = field(default_factory=load_stopwords)
    translation: Optional[dict] = None


def preprocess_post(text: str, config: Optional[PreprocessConfig] = None) -> list:
    if config is None:
        config = PreprocessConfig()
    text = strip_entities(text)
    text = translate_hook(text, config.translation)
    return remove_stopwords(tokenize(normalize(text)), config.stopwords)


@dataclass
class Vocabulary:
    words: list
    index: dict

    def __len__(self) -> int:
        return len(self.words)

    def __contains__(self, word) -> bool:
        return word in self.index

    @classmethod
    def from_words(cls, words: Iterable[str]) -> "Vocabulary":
        words = list(words)
        index = {w: i for i, w in enumerate(words)}
        if len(index) != len(words):
            raise ValueError("vocabulary words must be distinct")
        return cls(words, index)

    def checksum(self) -> str:
        return hashlib.sha256("\n".join(self.words).encode("utf-8")).hexdigest()


def build_vocabulary(docs: Iterable[Sequence[str]]) -> Vocabulary:
    """Distinct words in order of first appearance across ``docs``."""
    words = []
    index = {}
    for doc in docs:
        for tok in doc:
            if tok not in index:
                index[tok] = len(words)
                words.append(tok)
    return Vocabulary(words, index)
