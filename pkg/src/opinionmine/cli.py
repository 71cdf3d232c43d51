"""Command-line entry point: ``opinionmine <command> [options]``."""

from __future__ import annotations

import argparse
import json
import logging
import sys

from opinionmine import __version__
from opinionmine.config import load_config
from opinionmine.errors import ConfigError, OpinionMineError
from opinionmine.pipeline import COMMANDS


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", help="TOML run configuration; flags override its values")
    common.add_argument("--posts", help="posts file (JSONL or CSV)")
    common.add_argument("--format", choices=["jsonl", "csv"], help="posts file format (default: by extension)")
    common.add_argument("--stopwords", help="stopword file, one word per line")
    common.add_argument("--lexicon", help="lexicon TSV: word, polarity, subjectivity")
    common.add_argument("--translate-table", dest="translate_table", help="TSV phrase table source<TAB>target")
    common.add_argument("--split-ratio", dest="split_ratio", type=float, help="training fraction (default 0.85)")
    common.add_argument("--seed", type=int, help="run seed (default 0)")
    common.add_argument("--alpha", type=float, help="naive Bayes smoothing (default 1.0)")
    common.add_argument("--lambda", dest="lam", type=float, help="SVM regularisation (default 1e-4)")
    common.add_argument("--epochs", type=int, help="SVM epochs (default 20)")
    common.add_argument("--k", type=int, help="k-NN neighbours (default 3)")
    common.add_argument("--knn-weighting", dest="knn_weighting", choices=["uniform", "inverse"])
    common.add_argument("--tn-convention", dest="tn_convention", choices=["paper", "standard"])
    common.add_argument("--label-source", dest="label_source", choices=["lexicon", "gold"])
    common.add_argument("--svm-normalize", dest="svm_normalize", action="store_const", const=True,
                        help="L2-normalise count vectors for the SVM")
    common.add_argument("--top-k", dest="top_k", type=int, help="terms per wordcloud file (default 100)")
    common.add_argument("--out", help="output directory (default ./out)")
    common.add_argument("-v", "--verbose", action="store_true")

    parser = argparse.ArgumentParser(prog="opinionmine", description=__doc__)
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)
    helps = {
        "score": "lexicon polarity/subjectivity per post and label counts per dataset tag",
        "topics": "most frequent terms per dataset tag (wordcloud JSON)",
        "evaluate": "train NB, k-NN and linear SVM; write the evaluation report and models",
        "preprocess": "dump cleaned token lists",
        "vectorize": "dump the term-document matrix per dataset tag",
    }
    for name in COMMANDS:
        sub.add_parser(name, parents=[common], help=helps[name])
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s %(message)s")
    overrides = {k: v for k, v in vars(args).items() if k not in ("command", "config", "verbose")}
    try:
        config = load_config(args.config, overrides)
        COMMANDS[args.command](config)
    except (OpinionMineError, ValueError, OSError) as exc:
        kind = "config" if isinstance(exc, ConfigError) else type(exc).__name__
        json.dump({"status": "error", "command": args.command, "error": kind, "message": str(exc)}, sys.stderr)
        sys.stderr.write("\n")
        return 2 if isinstance(exc, ConfigError) else 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
