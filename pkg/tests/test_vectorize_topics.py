import json
from collections import Counter

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from opinionmine.preprocess import build_vocabulary
from opinionmine.topics import term_frequencies, top_k, wordcloud_json
from opinionmine.vectorize import build_tdm, vectorize_doc

T1 = ["authorities", "wait", "declare", "mandatory", "quarantine", "colombia"]
T2 = ["control", "measures", "italy", "colombia", "trapped", "italy", "outside", "colombia"]


@pytest.fixture
def two_tweets():
    vocab = build_vocabulary([T1, T2])
    return vocab, build_tdm([T1, T2], vocab, ["T1", "T2"])


def test_vectorize_two_tweets(two_tweets):
    vocab, _ = two_tweets
    assert vectorize_doc(T1, vocab).tolist() == [1, 1, 1, 1, 1, 1, 0, 0, 0, 0, 0]
    assert vectorize_doc(T2, vocab).tolist() == [0, 0, 0, 0, 0, 2, 1, 1, 2, 1, 1]
    assert vectorize_doc([], vocab).tolist() == [0] * 11


def test_out_of_vocabulary_dropped(two_tweets):
    vocab, _ = two_tweets
    assert vectorize_doc(["colombia", "unseen", "colombia"], vocab).sum() == 2


def test_tdm_two_tweets(two_tweets):
    vocab, tdm = two_tweets
    assert tdm.shape == (11, 2)
    assert tdm.column(0).tolist() == vectorize_doc(T1, vocab).tolist()
    assert tdm.column(1).tolist() == vectorize_doc(T2, vocab).tolist()
    assert tdm.to_dense().dtype.kind == "i"


def test_tdm_edge_cases(two_tweets):
    vocab, _ = two_tweets
    assert build_tdm([], vocab).shape == (11, 0)
    tdm = build_tdm([T2, T2, T2], vocab)
    dense = tdm.to_dense()
    assert (dense[:, 0] == dense[:, 1]).all() and (dense[:, 1] == dense[:, 2]).all()


def test_tdm_exports(two_tweets):
    _, tdm = two_tweets
    lines = tdm.to_csv().splitlines()
    assert lines[0] == "word,T1,T2"
    assert lines[6] == "colombia,1,2"
    assert lines[9] == "italy,0,2"
    triples = json.loads(tdm.to_sparse_json())
    assert {"word": "colombia", "doc_index": 1, "count": 2} in triples
    assert sum(t["count"] for t in triples) == len(T1) + len(T2)


def test_term_frequencies_two_tweets(two_tweets):
    _, tdm = two_tweets
    table = term_frequencies(tdm)
    assert table[:2] == [("colombia", 3), ("italy", 2)]
    assert all(c == 1 for _, c in table[2:])
    assert top_k(table, 2) == [("colombia", 3), ("italy", 2)]
    assert top_k(table, 100) == table


def test_term_frequencies_small():
    vocab = build_vocabulary([["a", "a", "b"]])
    assert term_frequencies(build_tdm([["a", "a", "b"]], vocab)) == [("a", 2), ("b", 1)]
    empty = build_vocabulary([])
    assert term_frequencies(build_tdm([], empty)) == []


def test_tie_break_alphabetical():
    docs = [["beta", "alpha", "beta", "alpha"]]
    table = term_frequencies(build_tdm(docs, build_vocabulary(docs)))
    assert table == [("alpha", 2), ("beta", 2)]


def test_top_k_rejects_zero():
    with pytest.raises(ValueError):
        top_k([("a", 1)], 0)


def test_wordcloud_json():
    assert json.loads(wordcloud_json([("colombia", 3), ("italy", 2)])) == [
        {"word": "colombia", "count": 3},
        {"word": "italy", "count": 2},
    ]


corpora = st.lists(st.lists(st.sampled_from(list("abcdefgh")), max_size=12), max_size=10)


@settings(max_examples=200, deadline=None)
@given(corpora)
def test_tdm_properties(docs):
    vocab = build_vocabulary(docs)
    tdm = build_tdm(docs, vocab)
    dense = tdm.to_dense()
    assert dense.shape == (len(vocab), len(docs))
    for j, doc in enumerate(docs):
        # column equals direct vectorisation, and reconstructs the token multiset
        assert dense[:, j].tolist() == vectorize_doc(doc, vocab).tolist()
        assert {vocab.words[k]: int(c) for k, c in enumerate(dense[:, j]) if c} == dict(Counter(doc))
    freq = Counter(t for d in docs for t in d)
    assert tdm.row_sums().tolist() == [freq[w] for w in vocab.words]

    table = term_frequencies(tdm)
    assert sum(c for _, c in table) == int(dense.sum())
    assert [r[1] for r in table] == sorted((r[1] for r in table), reverse=True)
    for k in (1, 3, 50):
        assert top_k(table, k) == table[:k]


@settings(max_examples=100, deadline=None)
@given(corpora, st.lists(st.sampled_from(list("abcdefghxyz")), max_size=12))
def test_test_doc_against_training_vocab(train_docs, test_doc):
    vocab = build_vocabulary(train_docs)
    vec = vectorize_doc(test_doc, vocab)
    assert vec.sum() == sum(1 for t in test_doc if t in vocab.index)
    assert np.all(vec >= 0)
