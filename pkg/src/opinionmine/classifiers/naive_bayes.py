"""Multinomial naive Bayes over word counts, Laplace-smoothed, in log space."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from opinionmine.classifiers.base import LabeledDataset, argmax_first, as_csr, as_row, check_dim


@dataclass
class NBModel:
    classes: list
    class_log_priors: np.ndarray  # (K,)
    word_log_likelihoods: np.ndarray  # (K, N)
    alpha: float

    @property
    def n_features(self) -> int:
        return self.word_log_likelihoods.shape[1]

    def joint_log_likelihood(self, X) -> np.ndarray:
        X = as_csr(X)
        check_dim(self.n_features, X)
        return np.asarray(X @ self.word_log_likelihoods.T) + self.class_log_priors

    def predict_one(self, x) -> str:
        x = as_row(x)
        check_dim(self.n_features, x)
        scores = self.class_log_priors + self.word_log_likelihoods @ x
        return self.classes[argmax_first(scores)]

    def predict(self, X) -> list:
        jll = self.joint_log_likelihood(X)
        return [self.classes[argmax_first(row)] for row in jll]


def train_nb(data: LabeledDataset, alpha: float = 1.0) -> NBModel:
    """Fit class priors and smoothed per-class word distributions.

    P(c)   = n_docs(c) / n_docs
    P(w|c) = (count(w, c) + alpha) / (tokens(c) + alpha * N)
    """
    if not alpha > 0:
        raise ValueError(f"alpha must be positive, got {alpha}")
    y = data.label_indices()
    k = len(data.class_set)
    doc_counts = np.bincount(y, minlength=k)
    missing = [c for c, n in zip(data.class_set, doc_counts) if n == 0]
    if missing:
        raise ValueError(f"no training examples for classes: {missing}")

    n_words = data.n_features
    X = data.vectors
    word_counts = np.zeros((k, n_words), dtype=np.float64)
    for ci in range(k):
        rows = X[y == ci]
        word_counts[ci] = np.asarray(rows.sum(axis=0)).ravel()
    smoothed = word_counts + alpha
    log_lik = np.log(smoothed) - np.log(smoothed.sum(axis=1, keepdims=True))
    log_prior = np.log(doc_counts) - np.log(doc_counts.sum())
    return NBModel(list(data.class_set), log_prior, log_lik, float(alpha))


def predict_nb(model: NBModel, x) -> str:
    return model.predict_one(x)
