"""k-nearest-neighbour voting under Euclidean distance."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
import scipy.sparse as sp

from opinionmine.classifiers.base import LabeledDataset, as_csr, check_dim

WEIGHTINGS = ("uniform", "inverse")
INVERSE_EPS = 1e-9


@dataclass
class KNNModel:
    vectors: sp.csr_matrix
    labels: np.ndarray  # class indices
    classes: list
    k: int = 3
    weighting: str = "uniform"

    def __post_init__(self):
        self._sq_norms = np.asarray(self.vectors.multiply(self.vectors).sum(axis=1)).ravel()

    @property
    def n_features(self) -> int:
        return self.vectors.shape[1]

    def squared_distances(self, X) -> np.ndarray:
        """(n_queries, n_stored) squared distances; exact for integer counts."""
        X = as_csr(X)
        check_dim(self.n_features, X)
        q_norms = np.asarray(X.multiply(X).sum(axis=1)).ravel()
        cross = (X @ self.vectors.T).toarray()
        d2 = q_norms[:, None] + self._sq_norms[None, :] - 2 * cross
        return np.maximum(d2, 0)

    def _vote(self, d2_row: np.ndarray) -> str:
        # stable sort: equal distances keep training order
        nearest = np.argsort(d2_row, kind="stable")[: self.k]
        votes = np.zeros(len(self.classes), dtype=np.float64)
        for j in nearest:
            if self.weighting == "uniform":
                votes[self.labels[j]] += 1.0
            else:
                votes[self.labels[j]] += 1.0 / (np.sqrt(d2_row[j]) + INVERSE_EPS)
        return self.classes[int(np.argmax(votes))]

    def predict(self, X, batch_size: int = 512) -> list:
        X = as_csr(X)
        out = []
        for start in range(0, X.shape[0], batch_size):
            d2 = self.squared_distances(X[start : start + batch_size])
            out.extend(self._vote(row) for row in d2)
        return out

    def predict_one(self, x) -> str:
        return self.predict(x)[0]


def train_knn(data: LabeledDataset, k: int = 3, weighting: str = "uniform") -> KNNModel:
    if weighting not in WEIGHTINGS:
        raise ValueError(f"unknown k-NN weighting {weighting!r}")
    n = data.vectors.shape[0]
    if n == 0:
        raise ValueError("k-NN needs at least one stored vector")
    if not 1 <= k <= n:
        raise ValueError(f"k must lie in [1, {n}], got {k}")
    return KNNModel(data.vectors.copy(), data.label_indices(), list(data.class_set), int(k), weighting)


def predict_knn(model: KNNModel, x) -> str:
    return model.predict_one(x)
