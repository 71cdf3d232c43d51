from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np
import scipy.sparse as sp

from opinionmine.corpus_io import CLASSES

# Scores closer than this (relative to their magnitude) count as tied.
TIE_RTOL = 1e-9


def as_csr(X) -> sp.csr_matrix:
    if sp.issparse(X):
        return sp.csr_matrix(X)
    X = np.asarray(X)
    if X.ndim == 1:
        X = X[None, :]
    return sp.csr_matrix(X)


def as_row(x) -> np.ndarray:
    """A single count vector as a dense 1-D float array."""
    if sp.issparse(x):
        x = x.toarray()
    return np.asarray(x, dtype=np.float64).ravel()


def argmax_first(scores: np.ndarray) -> int:
    """Index of the best score; near-ties go to the lowest index."""
    best = float(np.max(scores))
    tol = TIE_RTOL * max(1.0, abs(best))
    return int(np.flatnonzero(scores >= best - tol)[0])


def check_dim(n_features: int, x) -> None:
    dim = x.shape[-1]
    if dim != n_features:
        raise ValueError(f"dimension mismatch: model has {n_features} features, input has {dim}")


@dataclass
class LabeledDataset:
    vectors: sp.csr_matrix
    labels: list
    class_set: list

    def __post_init__(self):
        self.vectors = as_csr(self.vectors)
        self.labels = list(self.labels)
        if self.vectors.shape[0] != len(self.labels):
            raise ValueError(f"{self.vectors.shape[0]} vectors but {len(self.labels)} labels")
        unknown = sorted(set(self.labels) - set(self.class_set))
        if unknown:
            raise ValueError(f"labels outside class set: {unknown}")

    @classmethod
    def from_labels(cls, vectors, labels: Sequence[str], class_set: Optional[Sequence[str]] = None):
        """Class set defaults to the labels present, in canonical class order."""
        if class_set is None:
            present = set(labels)
            class_set = [c for c in CLASSES if c in present] + sorted(present - set(CLASSES))
        return cls(vectors, labels, list(class_set))

    @property
    def n_features(self) -> int:
        return self.vectors.shape[1]

    def label_indices(self) -> np.ndarray:
        pos = {c: i for i, c in enumerate(self.class_set)}
        return np.array([pos[l] for l in self.labels], dtype=np.int64)
