"""Count vectors and the term-document matrix."""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np
import scipy.sparse as sp

from opinionmine.preprocess import Vocabulary


def vectorize_doc(tokens: Sequence[str], vocab: Vocabulary) -> np.ndarray:
    """Length-N vector of word counts; tokens outside ``vocab`` are dropped."""
    vec = np.zeros(len(vocab), dtype=np.int64)
    for tok in tokens:
        k = vocab.index.get(tok)
        if k is not None:
            vec[k] += 1
    return vec


@dataclass
class TermDocumentMatrix:
    """Words x documents count matrix (CSC, so each column is one document)."""

    counts: sp.csc_matrix
    vocabulary: Vocabulary
    doc_ids: list

    @property
    def shape(self) -> tuple:
        return self.counts.shape

    def column(self, j: int) -> np.ndarray:
        return self.counts[:, j].toarray().ravel()

    def doc_matrix(self) -> sp.csr_matrix:
        """Documents x words view, the layout the classifiers consume."""
        return self.counts.T.tocsr()

    def to_dense(self) -> np.ndarray:
        return self.counts.toarray()

    def row_sums(self) -> np.ndarray:
        return np.asarray(self.counts.sum(axis=1)).ravel().astype(np.int64)

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["word", *self.doc_ids])
        dense = self.to_dense()
        for k, word in enumerate(self.vocabulary.words):
            writer.writerow([word, *dense[k].tolist()])
        return buf.getvalue()

    def to_sparse_json(self) -> str:
        coo = self.counts.tocoo()
        order = np.lexsort((coo.row, coo.col))
        triples = [
            {"word": self.vocabulary.words[int(coo.row[i])], "doc_index": int(coo.col[i]), "count": int(coo.data[i])}
            for i in order
        ]
        return json.dumps(triples)


def build_tdm(docs: Sequence[Sequence[str]], vocab: Vocabulary, doc_ids: Optional[list] = None) -> TermDocumentMatrix:
    rows, cols, vals = [], [], []
    for j, doc in enumerate(docs):
        col: dict = {}
        for tok in doc:
            k = vocab.index.get(tok)
            if k is not None:
                col[k] = col.get(k, 0) + 1
        for k in sorted(col):
            rows.append(k)
            cols.append(j)
            vals.append(col[k])
    counts = sp.csc_matrix(
        (np.asarray(vals, dtype=np.int64), (np.asarray(rows, dtype=np.int64), np.asarray(cols, dtype=np.int64))),
        shape=(len(vocab), len(docs)),
        dtype=np.int64,
    )
    if doc_ids is None:
        doc_ids = [str(j) for j in range(len(docs))]
    return TermDocumentMatrix(counts, vocab, list(doc_ids))
