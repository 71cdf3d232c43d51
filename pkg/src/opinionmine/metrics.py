"""Confusion matrices and per-class / averaged accuracy and precision.

Per class i, with C the confusion matrix (rows = true, columns = predicted):

    TP_i = C[i, i]
    FP_i = column i sum - TP_i
    FN_i = row i sum - TP_i
    TN_i = trace - TP_i                     ("paper" convention, default)
    TN_i = total - TP_i - FP_i - FN_i       ("standard" convention)

    accuracy_i  = (TP_i + TN_i) / (TP_i + TN_i + FP_i + FN_i)
    precision_i = TP_i / (TP_i + FP_i)

Any 0/0 rate is reported as 0 and listed in ``undefined``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

TN_CONVENTIONS = ("paper", "standard")


@dataclass
class ConfusionMatrix:
    classes: list
    counts: np.ndarray

    @property
    def total(self) -> int:
        return int(self.counts.sum())


def confusion_matrix(truth: Sequence, pred: Sequence, classes: Sequence) -> ConfusionMatrix:
    if len(truth) != len(pred):
        raise ValueError(f"length mismatch: {len(truth)} true labels vs {len(pred)} predictions")
    pos = {c: i for i, c in enumerate(classes)}
    counts = np.zeros((len(classes), len(classes)), dtype=np.int64)
    for t, p in zip(truth, pred):
        if t not in pos or p not in pos:
            bad = t if t not in pos else p
            raise ValueError(f"unknown label {bad!r}")
        counts[pos[t], pos[p]] += 1
    return ConfusionMatrix(list(classes), counts)


@dataclass
class ClassStats:
    tp: int
    fp: int
    fn: int
    tn: int
    accuracy: float
    precision: float
    undefined: list = field(default_factory=list)


def _rate(num, den, name, undefined):
    if den == 0:
        undefined.append(name)
        return 0.0
    return num / den


def per_class_stats(cm: ConfusionMatrix, i: int, tn_convention: str = "paper") -> ClassStats:
    if tn_convention not in TN_CONVENTIONS:
        raise ValueError(f"unknown TN convention {tn_convention!r}")
    c = cm.counts
    k = c.shape[0]
    if not 0 <= i < k:
        raise IndexError(f"class index {i} out of range for {k} classes")
    tp = int(c[i, i])
    fp = int(c[:, i].sum()) - tp
    fn = int(c[i, :].sum()) - tp
    if tn_convention == "paper":
        tn = int(np.trace(c)) - tp
    else:
        tn = int(c.sum()) - tp - fp - fn
    undefined: list = []
    acc = _rate(tp + tn, tp + tn + fp + fn, "accuracy", undefined)
    prec = _rate(tp, tp + fp, "precision", undefined)
    return ClassStats(tp, fp, fn, tn, acc, prec, undefined)


@dataclass
class EvaluationReport:
    classes: list
    confusion: list
    per_class: dict
    support: dict
    overall_accuracy: float
    micro_accuracy: float
    macro_accuracy: float
    micro_precision: float
    macro_precision: float
    tn_convention: str
    undefined: list

    def to_dict(self) -> dict:
        return {
            "classes": self.classes,
            "confusion_matrix": self.confusion,
            "tn_convention": self.tn_convention,
            "support": self.support,
            "per_class": {
                c: {
                    "tp": s.tp, "fp": s.fp, "fn": s.fn, "tn": s.tn,
                    "accuracy": s.accuracy, "precision": s.precision,
                    "undefined": s.undefined,
                }
                for c, s in self.per_class.items()
            },
            "overall_accuracy": self.overall_accuracy,
            "micro_accuracy": self.micro_accuracy,
            "macro_accuracy": self.macro_accuracy,
            "micro_precision": self.micro_precision,
            "macro_precision": self.macro_precision,
            "undefined": self.undefined,
        }


def aggregate(cm: ConfusionMatrix, tn_convention: str = "paper") -> EvaluationReport:
    """Per-class stats plus macro (equal class weight) and micro (item-level) averages.

    Micro figures pool the per-class counts before dividing, so every test
    item weighs the same. For precision the pooled denominator is the number
    of predictions, which makes micro precision equal to trace / total.
    """
    k = len(cm.classes)
    total = cm.total
    if k == 0 or total == 0:
        raise ValueError("cannot aggregate an empty confusion matrix")
    stats = {c: per_class_stats(cm, i, tn_convention) for i, c in enumerate(cm.classes)}
    undefined = [f"{c}.{name}" for c, s in stats.items() for name in s.undefined]
    tp = sum(s.tp for s in stats.values())
    fp = sum(s.fp for s in stats.values())
    fn = sum(s.fn for s in stats.values())
    tn = sum(s.tn for s in stats.values())
    support = {c: int(cm.counts[i, :].sum()) for i, c in enumerate(cm.classes)}
    return EvaluationReport(
        classes=list(cm.classes),
        confusion=cm.counts.tolist(),
        per_class=stats,
        support=support,
        overall_accuracy=int(np.trace(cm.counts)) / total,
        micro_accuracy=(tp + tn) / (tp + tn + fp + fn) if tp + tn + fp + fn else 0.0,
        macro_accuracy=sum(s.accuracy for s in stats.values()) / k,
        micro_precision=tp / (tp + fp),
        macro_precision=sum(s.precision for s in stats.values()) / k,
        tn_convention=tn_convention,
        undefined=undefined,
    )


REPORT_COLUMNS = ("Accuracy", "Precision micro", "Precision macro")


def _row_values(report: EvaluationReport) -> list:
    return [report.overall_accuracy, report.micro_precision, report.macro_precision]


def render_report(reports: dict) -> str:
    """Aligned plain-text table, one row per classifier, percentages to 2 decimals."""
    header = ["Classifier", *REPORT_COLUMNS]
    rows = [[name, *(f"{100 * v:.2f}" for v in _row_values(r))] for name, r in reports.items()]
    widths = [max(len(str(row[j])) for row in [header, *rows]) for j in range(len(header))]

    def fmt(row):
        first = str(row[0]).ljust(widths[0])
        rest = [str(v).rjust(w) for v, w in zip(row[1:], widths[1:])]
        return "  ".join([first, *rest]).rstrip()

    lines = [fmt(header), "  ".join("-" * w for w in widths)]
    lines += [fmt(row) for row in rows]
    return "\n".join(lines) + "\n"


def report_json(reports: dict) -> str:
    payload = {
        "columns": list(REPORT_COLUMNS),
        "table": {name: [round(100 * v, 2) for v in _row_values(r)] for name, r in reports.items()},
        "classifiers": {name: r.to_dict() for name, r in reports.items()},
    }
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"
