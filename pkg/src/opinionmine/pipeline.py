"""The batch commands: score, topics, evaluate, preprocess, vectorize.

Each ``run_*`` function takes a validated ``RunConfig``, writes its files
under ``config.out`` and returns a small summary dict.
"""

from __future__ import annotations

import csv
import io
import json
import logging
import re
from dataclasses import asdict
from pathlib import Path

from opinionmine import __version__
from opinionmine.classifiers import LabeledDataset, save_model, train_knn, train_nb, train_svm
from opinionmine.config import RunConfig
from opinionmine.corpus_io import CLASSES, load_posts, split_train_test
from opinionmine.errors import ConfigError, InputError
from opinionmine.lexicon import label_distribution, load_lexicon, score_document
from opinionmine.metrics import aggregate, confusion_matrix, render_report, report_json
from opinionmine.preprocess import PreprocessConfig, build_vocabulary, load_stopwords, load_translation_table, preprocess_post
from opinionmine.seeding import fork_rng
from opinionmine.topics import term_frequencies, top_k, wordcloud_json
from opinionmine.vectorize import build_tdm

log = logging.getLogger(__name__)

CLASSIFIER_NAMES = {"naive_bayes": "NB", "knn": "k-NN", "linear_svm": "Linear SVM"}


def tag_filename(tag: str) -> str:
    return re.sub(r"[^A-Za-z0-9_.-]", "_", tag) or "_"


def _write(path: Path, text: str) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(text, encoding="utf-8")


def _preprocess_config(config: RunConfig) -> PreprocessConfig:
    if config.stopwords is not None and not Path(config.stopwords).is_file():
        raise InputError(f"stopword file not found: {config.stopwords}")
    translation = None
    if config.translate_table is not None:
        if not Path(config.translate_table).is_file():
            raise InputError(f"translation table not found: {config.translate_table}")
        translation = load_translation_table(config.translate_table)
    return PreprocessConfig(load_stopwords(config.stopwords), translation)


def load_corpus(config: RunConfig):
    """Records and their token lists, in file order."""
    if config.posts is None:
        raise ConfigError("no posts file configured (--posts)")
    records = load_posts(config.posts, config.format)
    pcfg = _preprocess_config(config)
    tokens = [preprocess_post(r.text, pcfg) for r in records]
    log.info("loaded %d posts from %s", len(records), config.posts)
    return records, tokens


def _tokens_by_tag(records, tokens) -> dict:
    by_tag: dict = {}
    for rec, toks in zip(records, tokens):
        by_tag.setdefault(rec.dataset_tag, []).append(toks)
    return by_tag


def _vocab_sizes(records, tokens) -> dict:
    return {tag: len(build_vocabulary(docs)) for tag, docs in _tokens_by_tag(records, tokens).items()}


def write_manifest(config: RunConfig, command: str, vocab_sizes: dict, outputs: list, **extra) -> None:
    out = Path(config.out)
    manifest = {
        "command": command,
        "config": asdict(config),
        "config_hash": config.digest(),
        "library_version": __version__,
        "vocabulary_size": vocab_sizes,
        "outputs": sorted(outputs),
        **extra,
    }
    _write(out / "run_manifest.json", json.dumps(manifest, indent=2, sort_keys=True) + "\n")


def run_score(config: RunConfig) -> dict:
    if config.lexicon is None:
        raise ConfigError("no lexicon configured (--lexicon)")
    lexicon = load_lexicon(config.lexicon)
    records, tokens = load_corpus(config)
    scores = [score_document(t, lexicon) for t in tokens]

    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["doc_id", "polarity", "subjectivity", "label", "scored_word_count"])
    for rec, s in zip(records, scores):
        writer.writerow([rec.id, repr(s.polarity), repr(s.subjectivity), s.label, s.scored_word_count])

    rows = []
    by_tag: dict = {}
    for rec, s in zip(records, scores):
        by_tag.setdefault(rec.dataset_tag, []).append(s)
    for tag, tag_scores in by_tag.items():
        counts = label_distribution(tag_scores)
        rows.append({"dataset_tag": tag, **counts, "total": len(tag_scores)})
    totals = label_distribution(scores)
    distribution = {"by_tag": rows, "total": {**totals, "total": len(scores)}}

    out = Path(config.out)
    _write(out / "scores" / "scores.csv", buf.getvalue())
    _write(out / "scores" / "label_distribution.json", json.dumps(distribution, indent=2) + "\n")
    outputs = ["scores/scores.csv", "scores/label_distribution.json"]
    write_manifest(config, "score", _vocab_sizes(records, tokens), outputs)
    return {"scores": scores, "distribution": distribution}


def run_topics(config: RunConfig) -> dict:
    records, tokens = load_corpus(config)
    out = Path(config.out)
    outputs = []
    tables = {}
    for tag, docs in _tokens_by_tag(records, tokens).items():
        vocab = build_vocabulary(docs)
        table = top_k(term_frequencies(build_tdm(docs, vocab)), config.top_k)
        tables[tag] = table
        rel = f"topics/{tag_filename(tag)}.json"
        _write(out / rel, wordcloud_json(table) + "\n")
        outputs.append(rel)
    write_manifest(config, "topics", _vocab_sizes(records, tokens), outputs)
    return {"tables": tables}


def _training_labels(config: RunConfig, records, tokens):
    """Label per record (None = unusable) under the configured label source."""
    if config.label_source == "gold":
        labels = [r.gold_label for r in records]
        if not any(l is not None for l in labels):
            raise ConfigError("label source is 'gold' but no post carries a gold label")
        return labels
    if config.lexicon is None:
        raise ConfigError("label source is 'lexicon' but no lexicon is configured (--lexicon)")
    lexicon = load_lexicon(config.lexicon)
    return [r.gold_label or score_document(t, lexicon).label for r, t in zip(records, tokens)]


def run_evaluate(config: RunConfig) -> dict:
    records, tokens = load_corpus(config)
    labels = _training_labels(config, records, tokens)
    items = [(r, t, l) for r, t, l in zip(records, tokens, labels) if l is not None]
    if len(items) < 2:
        raise ConfigError("need at least two labelled posts to evaluate")
    split = split_train_test(items, config.split_ratio, config.seed, rng=fork_rng(config.seed, "split"))
    if not split.test:
        raise ConfigError("test split is empty; lower --split-ratio or add posts")

    train_tokens = [t for _, t, _ in split.train]
    vocab = build_vocabulary(train_tokens)
    if len(vocab) == 0:
        raise ConfigError("training vocabulary is empty")
    X_train = build_tdm(train_tokens, vocab).doc_matrix()
    X_test = build_tdm([t for _, t, _ in split.test], vocab).doc_matrix()
    y_train = [l for _, _, l in split.train]
    y_test = [l for _, _, l in split.test]
    data = LabeledDataset.from_labels(X_train, y_train)
    if len(data.class_set) < 2:
        raise ConfigError(f"training data holds a single class ({data.class_set[0]}); cannot train classifiers")

    k = min(config.k, X_train.shape[0])
    models = {
        "naive_bayes": train_nb(data, config.alpha),
        "knn": train_knn(data, k, config.knn_weighting),
        "linear_svm": train_svm(data, config.lam, config.epochs, config.seed, config.svm_normalize),
    }
    out = Path(config.out)
    outputs = []
    reports = {}
    checksum = vocab.checksum()
    for key, model in models.items():
        pred = model.predict(X_test)
        cm = confusion_matrix(y_test, pred, list(CLASSES))
        reports[CLASSIFIER_NAMES[key]] = aggregate(cm, config.tn_convention)
        rel = f"models/{key}.json"
        (out / "models").mkdir(parents=True, exist_ok=True)
        save_model(model, out / rel, checksum)
        outputs.append(rel)

    _write(out / "reports" / "evaluation.txt", render_report(reports))
    _write(out / "reports" / "evaluation.json", report_json(reports))
    outputs += ["reports/evaluation.txt", "reports/evaluation.json"]
    write_manifest(
        config, "evaluate", _vocab_sizes(records, tokens), outputs,
        train_vocabulary_size=len(vocab), split={"train": len(split.train), "test": len(split.test)},
    )
    return {"reports": reports, "models": models, "vocabulary": vocab, "split": split}


def run_preprocess(config: RunConfig) -> dict:
    records, tokens = load_corpus(config)
    lines = [json.dumps({"id": r.id, "dataset_tag": r.dataset_tag, "tokens": t}, ensure_ascii=False) for r, t in zip(records, tokens)]
    _write(Path(config.out) / "preprocess" / "tokens.jsonl", "".join(l + "\n" for l in lines))
    write_manifest(config, "preprocess", _vocab_sizes(records, tokens), ["preprocess/tokens.jsonl"])
    return {"tokens": tokens}


def run_vectorize(config: RunConfig) -> dict:
    records, tokens = load_corpus(config)
    by_tag: dict = {}
    for rec, toks in zip(records, tokens):
        by_tag.setdefault(rec.dataset_tag, ([], []))
        by_tag[rec.dataset_tag][0].append(rec.id)
        by_tag[rec.dataset_tag][1].append(toks)
    out = Path(config.out)
    outputs = []
    tdms = {}
    for tag, (ids, docs) in by_tag.items():
        tdm = build_tdm(docs, build_vocabulary(docs), ids)
        tdms[tag] = tdm
        stem = f"tdm/{tag_filename(tag)}"
        _write(out / f"{stem}.csv", tdm.to_csv())
        _write(out / f"{stem}.json", tdm.to_sparse_json() + "\n")
        outputs += [f"{stem}.csv", f"{stem}.json"]
    write_manifest(config, "vectorize", _vocab_sizes(records, tokens), outputs)
    return {"tdms": tdms}


COMMANDS = {
    "score": run_score,
    "topics": run_topics,
    "evaluate": run_evaluate,
    "preprocess": run_preprocess,
    "vectorize": run_vectorize,
}
