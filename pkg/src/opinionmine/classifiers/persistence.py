"""Versioned JSON save/load for trained models."""

from __future__ import annotations

import json
from pathlib import Path

import numpy as np
import scipy.sparse as sp

from opinionmine.classifiers.knn import KNNModel
from opinionmine.classifiers.naive_bayes import NBModel
from opinionmine.classifiers.svm import SVMModel
from opinionmine.errors import InputError

FORMAT_VERSION = 1


def model_to_dict(model, vocabulary_checksum: str) -> dict:
    out = {"format_version": FORMAT_VERSION, "vocabulary_checksum": vocabulary_checksum, "classes": model.classes}
    if isinstance(model, NBModel):
        out.update(
            kind="naive_bayes",
            hyperparameters={"alpha": model.alpha},
            class_log_priors=model.class_log_priors.tolist(),
            word_log_likelihoods=model.word_log_likelihoods.tolist(),
        )
    elif isinstance(model, SVMModel):
        out.update(
            kind="linear_svm",
            hyperparameters={"lambda": model.lam, "epochs": model.epochs, "seed": model.seed, "normalize": model.normalize},
            weights=model.weights.tolist(),
            biases=model.biases.tolist(),
        )
    elif isinstance(model, KNNModel):
        X = model.vectors.tocsr()
        out.update(
            kind="knn",
            hyperparameters={"k": model.k, "weighting": model.weighting},
            n_features=X.shape[1],
            vectors=[
                {"indices": X.indices[X.indptr[i] : X.indptr[i + 1]].tolist(), "values": X.data[X.indptr[i] : X.indptr[i + 1]].tolist()}
                for i in range(X.shape[0])
            ],
            labels=[model.classes[j] for j in model.labels],
        )
    else:
        raise TypeError(f"cannot serialise {type(model).__name__}")
    return out


def model_from_dict(payload: dict, vocabulary_checksum=None):
    if payload.get("format_version") != FORMAT_VERSION:
        raise InputError(f"unsupported model format version {payload.get('format_version')!r}")
    if vocabulary_checksum is not None and payload.get("vocabulary_checksum") != vocabulary_checksum:
        raise InputError("model was trained on a different vocabulary (checksum mismatch)")
    kind = payload.get("kind")
    classes = list(payload["classes"])
    hp = payload["hyperparameters"]
    if kind == "naive_bayes":
        return NBModel(classes, np.array(payload["class_log_priors"]), np.array(payload["word_log_likelihoods"]), hp["alpha"])
    if kind == "linear_svm":
        w = np.array(payload["weights"], dtype=np.float64).reshape(len(classes), -1)
        return SVMModel(classes, w, np.array(payload["biases"]), hp["lambda"], hp["epochs"], hp["seed"], hp["normalize"])
    if kind == "knn":
        rows = payload["vectors"]
        indptr = np.cumsum([0] + [len(r["indices"]) for r in rows])
        indices = np.array([i for r in rows for i in r["indices"]], dtype=np.int64)
        values = np.array([v for r in rows for v in r["values"]])
        X = sp.csr_matrix((values, indices, indptr), shape=(len(rows), payload["n_features"]))
        pos = {c: i for i, c in enumerate(classes)}
        labels = np.array([pos[l] for l in payload["labels"]], dtype=np.int64)
        return KNNModel(X, labels, classes, hp["k"], hp["weighting"])
    raise InputError(f"unknown model kind {kind!r}")


def save_model(model, path, vocabulary_checksum: str) -> None:
    Path(path).write_text(json.dumps(model_to_dict(model, vocabulary_checksum)) + "\n", encoding="utf-8")


def load_model(path, vocabulary_checksum=None):
    """Load a saved model; with a checksum given, reject models from another vocabulary."""
    try:
        payload = json.loads(Path(path).read_text(encoding="utf-8"))
    except (OSError, json.JSONDecodeError) as exc:
        raise InputError(f"cannot read model {path}: {exc}") from exc
    return model_from_dict(payload, vocabulary_checksum)
