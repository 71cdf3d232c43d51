import json
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from opinionmine.metrics import ConfusionMatrix, aggregate, confusion_matrix, per_class_stats, render_report, report_json

P, N = "positive", "negative"


def cm_of(rows, classes=None):
    rows = np.array(rows)
    classes = classes or [f"c{i}" for i in range(len(rows))]
    return ConfusionMatrix(classes, rows)


def test_confusion_matrix_counts():
    assert confusion_matrix([P, N], [P, N], [P, N]).counts.tolist() == [[1, 0], [0, 1]]
    assert confusion_matrix([P, P, N], [N, P, N], [P, N]).counts.tolist() == [[1, 1], [0, 1]]
    assert confusion_matrix([], [], [P, N]).counts.tolist() == [[0, 0], [0, 0]]


def test_confusion_matrix_errors():
    with pytest.raises(ValueError, match="length"):
        confusion_matrix([P], [], [P, N])
    with pytest.raises(ValueError, match="unknown"):
        confusion_matrix([P], ["meh"], [P, N])


def test_per_class_hand_example():
    s = per_class_stats(cm_of([[5, 1], [2, 4]]), 0)
    assert (s.tp, s.fp, s.fn, s.tn) == (5, 2, 1, 4)
    assert s.accuracy == pytest.approx(9 / 12)
    assert s.precision == pytest.approx(5 / 7)
    assert s.undefined == []


def test_tn_conventions_differ_for_three_classes():
    cm = cm_of([[3, 1, 0], [2, 4, 1], [0, 1, 5]])
    paper = per_class_stats(cm, 0, "paper")
    standard = per_class_stats(cm, 0, "standard")
    assert paper.tn == 4 + 5
    assert standard.tn == 4 + 1 + 1 + 5
    assert paper.accuracy == pytest.approx((3 + 9) / (3 + 9 + 2 + 1))
    assert standard.accuracy == pytest.approx((3 + 11) / 17)


def test_identity_matrix_perfect():
    cm = cm_of(np.eye(3, dtype=int))
    for i in range(3):
        s = per_class_stats(cm, i)
        assert s.accuracy == 1.0 and s.precision == 1.0
    r = aggregate(cm)
    assert (r.overall_accuracy, r.micro_accuracy, r.macro_accuracy, r.micro_precision, r.macro_precision) == (1, 1, 1, 1, 1)


def test_never_predicted_class_flags_zero_division():
    s = per_class_stats(cm_of([[3, 0], [2, 0]]), 1)
    assert s.precision == 0.0
    assert "precision" in s.undefined
    r = aggregate(cm_of([[3, 0], [2, 0]]))
    assert r.undefined == ["c1.precision"]


def test_aggregate_hand_example():
    r = aggregate(cm_of([[5, 1], [2, 4]]))
    assert r.macro_precision == pytest.approx((5 / 7 + 4 / 5) / 2)
    # item-level pooling: sum TP / number of predictions
    assert r.micro_precision == pytest.approx(9 / 12)
    assert r.overall_accuracy == pytest.approx(0.75)
    assert r.support == {"c0": 6, "c1": 6}


def test_single_class_degenerate():
    r = aggregate(cm_of([[7]]))
    s = r.per_class["c0"]
    assert r.macro_precision == r.micro_precision == s.precision
    assert r.macro_accuracy == r.micro_accuracy == s.accuracy


def test_aggregate_rejects_empty():
    with pytest.raises(ValueError):
        aggregate(cm_of([[0, 0], [0, 0]]))


def test_render_report_layout():
    perfect = aggregate(cm_of(np.eye(2, dtype=int)))
    text = render_report({"NB": perfect, "k-NN": perfect, "Linear SVM": perfect})
    lines = text.splitlines()
    assert lines[0].split() == ["Classifier", "Accuracy", "Precision", "micro", "Precision", "macro"]
    rows = lines[2:]
    assert len(rows) == 3
    for row in rows:
        assert row.split()[-3:] == ["100.00", "100.00", "100.00"]
    assert render_report({}).splitlines()[0].startswith("Classifier")
    assert len(render_report({}).splitlines()) == 2


def test_report_json_two_decimals():
    r = aggregate(cm_of([[5, 1], [2, 4]]))
    payload = json.loads(report_json({"NB": r}))
    assert payload["columns"] == ["Accuracy", "Precision micro", "Precision macro"]
    assert payload["table"]["NB"] == [75.0, 75.0, 75.71]
    assert payload["classifiers"]["NB"]["tn_convention"] == "paper"


random_cms = st.integers(1, 5).flatmap(
    lambda k: st.lists(st.lists(st.integers(0, 30), min_size=k, max_size=k), min_size=k, max_size=k)
).filter(lambda rows: sum(map(sum, rows)) > 0)


@settings(max_examples=300, deadline=None)
@given(random_cms, st.sampled_from(["paper", "standard"]))
def test_aggregate_properties(rows, conv):
    cm = cm_of(rows)
    r = aggregate(cm, conv)
    total = cm.counts.sum()
    trace = np.trace(cm.counts)
    assert trace <= total
    assert r.micro_precision == pytest.approx(float(Fraction(int(trace), int(total))), abs=1e-12)
    for v in (r.overall_accuracy, r.micro_accuracy, r.macro_accuracy, r.micro_precision, r.macro_precision):
        assert 0.0 <= v <= 1.0
    for s in r.per_class.values():
        assert 0.0 <= s.accuracy <= 1.0 and 0.0 <= s.precision <= 1.0
        assert min(s.tp, s.fp, s.fn, s.tn) >= 0
