"""Loading, saving and splitting collections of posts."""

from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import dataclass
from datetime import date, datetime, time, timezone
from pathlib import Path
from typing import Iterable, Optional, Sequence

import numpy as np

from opinionmine.errors import InputError

CLASSES = ("positive", "neutral", "negative")
CSV_HEADER = ["id", "timestamp", "dataset_tag", "label", "text"]


@dataclass(frozen=True)
class PostRecord:
    id: str
    timestamp: datetime
    text: str
    dataset_tag: str
    gold_label: Optional[str] = None


@dataclass(frozen=True)
class DatasetSplit:
    train: list
    test: list
    seed: int
    ratio: float


def parse_timestamp(value: str) -> datetime:
    """Parse an ISO-8601 timestamp into an aware UTC datetime.

    Date-only strings map to midnight UTC, naive datetimes are taken as UTC.
    """
    value = value.strip()
    if value.endswith(("Z", "z")):
        value = value[:-1] + "+00:00"
    try:
        ts = datetime.fromisoformat(value)
    except ValueError:
        ts = datetime.combine(date.fromisoformat(value), time())
    if ts.tzinfo is None:
        return ts.replace(tzinfo=timezone.utc)
    return ts.astimezone(timezone.utc)


def _make_record(raw: dict, lineno: int) -> PostRecord:
    for key in ("id", "timestamp", "text", "dataset_tag"):
        if key not in raw or raw[key] is None:
            raise InputError(f"line {lineno}: missing field {key!r}")
    rid = str(raw["id"])
    if not rid:
        raise InputError(f"line {lineno}: empty id")
    label = raw.get("label")
    if label == "":
        label = None
    if label is not None and label not in CLASSES:
        raise InputError(f"line {lineno}: unknown label {label!r} (expected one of {', '.join(CLASSES)})")
    try:
        ts = parse_timestamp(str(raw["timestamp"]))
    except ValueError as exc:
        raise InputError(f"line {lineno}: bad timestamp {raw['timestamp']!r}") from exc
    return PostRecord(rid, ts, str(raw["text"]), str(raw["dataset_tag"]), label)


def _read_jsonl(fh) -> Iterable[tuple]:
    for lineno, line in enumerate(fh, start=1):
        if not line.strip():
            continue
        try:
            obj = json.loads(line)
        except json.JSONDecodeError as exc:
            raise InputError(f"line {lineno}: invalid JSON ({exc.msg})") from exc
        if not isinstance(obj, dict):
            raise InputError(f"line {lineno}: expected a JSON object")
        yield lineno, obj


def _read_csv(fh) -> Iterable[tuple]:
    reader = csv.reader(fh)
    try:
        header = next(reader)
    except StopIteration:
        return
    except csv.Error as exc:
        raise InputError(f"line 1: {exc}") from exc
    if [h.strip() for h in header] != CSV_HEADER:
        raise InputError(f"line 1: expected header {','.join(CSV_HEADER)}")
    while True:
        try:
            row = next(reader)
        except StopIteration:
            return
        except csv.Error as exc:
            raise InputError(f"line {reader.line_num}: {exc}") from exc
        if not row:
            continue
        if len(row) != len(CSV_HEADER):
            raise InputError(f"line {reader.line_num}: expected {len(CSV_HEADER)} fields, got {len(row)}")
        yield reader.line_num, dict(zip(CSV_HEADER, row))


def load_posts(path, format: Optional[str] = None) -> list:
    """Read post records from a JSONL or CSV export, in file order.

    The format defaults to the file extension. Raises ``InputError`` on
    parse problems, unknown labels and duplicate ids.
    """
    path = Path(path)
    if format is None:
        format = "csv" if path.suffix.lower() == ".csv" else "jsonl"
    if format not in ("jsonl", "csv"):
        raise InputError(f"unknown posts format {format!r}")
    if not path.is_file():
        raise InputError(f"posts file not found: {path}")

    records = []
    first_line = {}
    dupes = {}
    with open(path, encoding="utf-8", newline="") as fh:
        rows = _read_jsonl(fh) if format == "jsonl" else _read_csv(fh)
        for lineno, raw in rows:
            rec = _make_record(raw, lineno)
            if rec.id in first_line:
                dupes.setdefault(rec.id, [first_line[rec.id]]).append(lineno)
            else:
                first_line[rec.id] = lineno
            records.append(rec)
    if dupes:
        detail = "; ".join(f"{rid!r} on lines {', '.join(map(str, lines))}" for rid, lines in dupes.items())
        raise InputError(f"duplicate ids: {detail}")
    return records


def _record_dict(rec: PostRecord) -> dict:
    out = {
        "id": rec.id,
        "timestamp": rec.timestamp.isoformat(),
        "text": rec.text,
        "dataset_tag": rec.dataset_tag,
    }
    if rec.gold_label is not None:
        out["label"] = rec.gold_label
    return out


def save_posts(records: Sequence[PostRecord], path, format: Optional[str] = None) -> None:
    path = Path(path)
    if format is None:
        format = "csv" if path.suffix.lower() == ".csv" else "jsonl"
    if format == "jsonl":
        with open(path, "w", encoding="utf-8") as fh:
            for rec in records:
                fh.write(json.dumps(_record_dict(rec), ensure_ascii=False) + "\n")
    elif format == "csv":
        buf = io.StringIO()
        # RFC 4180 "\r\n" terminator: fields holding a bare "\r" then get quoted
        writer = csv.writer(buf)
        writer.writerow(CSV_HEADER)
        for rec in records:
            if "\x00" in rec.text or "\x00" in rec.id:
                raise InputError(f"record {rec.id!r}: NUL characters cannot be stored in CSV")
            writer.writerow([rec.id, rec.timestamp.isoformat(), rec.dataset_tag, rec.gold_label or "", rec.text])
        with open(path, "w", encoding="utf-8", newline="") as fh:
            fh.write(buf.getvalue())
    else:
        raise InputError(f"unknown posts format {format!r}")


def train_size(total: int, ratio: float) -> int:
    """Number of training items: ratio * total rounded half up."""
    return int(math.floor(ratio * total + 0.5))


def split_train_test(records: Sequence, ratio: float = 0.85, seed: int = 0, rng=None) -> DatasetSplit:
    """Shuffle ``records`` with a seeded permutation and cut off a training prefix.

    ``rng`` lets a caller pass an already forked generator; otherwise one is
    built from ``seed``.
    """
    if not 0.0 < ratio < 1.0:
        raise ValueError(f"split ratio must lie in (0, 1), got {ratio}")
    if len(records) < 2:
        raise ValueError("need at least two records to split")
    if rng is None:
        rng = np.random.default_rng(seed)
    order = rng.permutation(len(records))
    n_train = train_size(len(records), ratio)
    train = [records[i] for i in order[:n_train]]
    test = [records[i] for i in order[n_train:]]
    return DatasetSplit(train, test, seed, ratio)


def group_by_tag(records: Iterable[PostRecord]) -> dict:
    """Records bucketed by dataset tag, tags in first-appearance order."""
    groups: dict = {}
    for rec in records:
        groups.setdefault(rec.dataset_tag, []).append(rec)
    return groups
