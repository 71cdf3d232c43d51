"""One-vs-rest linear SVM trained by seeded stochastic subgradient descent.

Each binary problem minimises

    lambda/2 * ||w||^2 + mean_i max(0, 1 - y_i * (w . x_i + b))

with step size 1 / (lambda * t). The bias is the weight of a constant
feature and is regularised with the rest of ``w``. The returned weights
are the average of the iterates of the final epoch.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
import scipy.sparse as sp

from opinionmine.classifiers.base import LabeledDataset, argmax_first, as_csr, check_dim
from opinionmine.seeding import fork_rng


@dataclass
class SVMModel:
    classes: list
    weights: np.ndarray  # (K, N)
    biases: np.ndarray  # (K,)
    lam: float
    epochs: int
    seed: int
    normalize: bool = False
    history: dict = field(default_factory=dict)

    @property
    def n_features(self) -> int:
        return self.weights.shape[1]

    def decision_function(self, X) -> np.ndarray:
        X = as_csr(X).astype(np.float64)
        check_dim(self.n_features, X)
        if self.normalize:
            X = l2_normalize(X)
        return np.asarray(X @ self.weights.T) + self.biases

    def predict(self, X) -> list:
        return [self.classes[argmax_first(row)] for row in self.decision_function(X)]

    def predict_one(self, x) -> str:
        return self.predict(x)[0]


def l2_normalize(X: sp.csr_matrix) -> sp.csr_matrix:
    norms = np.sqrt(np.asarray(X.multiply(X).sum(axis=1)).ravel())
    norms[norms == 0] = 1.0
    return sp.csr_matrix(sp.diags(1.0 / norms) @ X)


def hinge_objective(w: np.ndarray, b: float, X: sp.csr_matrix, y: np.ndarray, lam: float) -> float:
    margins = y * (np.asarray(X @ w).ravel() + b)
    return 0.5 * lam * (float(w @ w) + b * b) + float(np.mean(np.maximum(0.0, 1.0 - margins)))


def _train_binary(X: sp.csr_matrix, y: np.ndarray, lam: float, epochs: int, rng: np.random.Generator):
    n, n_words = X.shape
    indptr, indices, data = X.indptr, X.indices, X.data
    w = np.zeros(n_words)
    b = 0.0
    t = 0
    objectives = []
    for _ in range(epochs):
        w_sum = np.zeros(n_words)
        b_sum = 0.0
        for i in rng.permutation(n):
            t += 1
            eta = 1.0 / (lam * t)
            lo, hi = indptr[i], indptr[i + 1]
            idx, vals = indices[lo:hi], data[lo:hi]
            margin = y[i] * (float(w[idx] @ vals) + b)
            shrink = 1.0 - eta * lam
            w *= shrink
            b *= shrink
            if margin < 1.0:
                w[idx] += eta * y[i] * vals
                b += eta * y[i]
            w_sum += w
            b_sum += b
        w_avg, b_avg = w_sum / n, b_sum / n
        objectives.append(hinge_objective(w_avg, b_avg, X, y, lam))
    return w_avg, b_avg, objectives


def train_svm(data: LabeledDataset, lam: float = 1e-4, epochs: int = 20, seed: int = 0, normalize: bool = False) -> SVMModel:
    if not lam > 0:
        raise ValueError(f"lambda must be positive, got {lam}")
    if int(epochs) < 1:
        raise ValueError(f"epochs must be positive, got {epochs}")
    labels = data.label_indices()
    present = np.unique(labels)
    if len(present) < 2:
        raise ValueError("SVM training needs at least two distinct classes")
    X = data.vectors.astype(np.float64)
    if normalize:
        X = l2_normalize(X)
    X = sp.csr_matrix(X)

    k = len(data.class_set)
    weights = np.zeros((k, X.shape[1]))
    biases = np.zeros(k)
    history = {}
    for ci, cls in enumerate(data.class_set):
        y = np.where(labels == ci, 1.0, -1.0)
        rng = fork_rng(seed, f"svm-class-{cls}")
        weights[ci], biases[ci], history[cls] = _train_binary(X, y, lam, int(epochs), rng)
    return SVMModel(list(data.class_set), weights, biases, float(lam), int(epochs), int(seed), normalize, history)


def predict_svm(model: SVMModel, x) -> str:
    return model.predict_one(x)
