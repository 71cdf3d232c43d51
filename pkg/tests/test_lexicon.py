import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from opinionmine.errors import InputError
from opinionmine.lexicon import label_distribution, load_lexicon, parse_lexicon, score_document, SentimentScore

LEX = {"good": (0.7, 0.6), "bad": (-0.7, 0.6), "great": (0.8, 0.75), "miserable": (-1.0, 1.0)}


def test_load_lexicon_file(tmp_path):
    p = tmp_path / "lex.tsv"
    p.write_text("# header\ngood\t0.7\t0.6\n", encoding="utf-8")
    assert load_lexicon(p) == {"good": (0.7, 0.6)}


def test_load_lexicon_range_error(tmp_path):
    p = tmp_path / "lex.tsv"
    p.write_text("ok\t0.1\t0.1\nwild\t1.5\t0.2\n")
    with pytest.raises(InputError, match="line 2"):
        load_lexicon(p)


@pytest.mark.parametrize("content,match", [
    ("a\t0.1\t1.2\n", "subjectivity"),
    ("a\t0.1\t0.2\na\t0.3\t0.2\n", "duplicate"),
    ("a\t0.1\n", "expected"),
    ("a\tx\t0.2\n", "non-numeric"),
    ("a\tnan\t0.2\n", "polarity"),
])
def test_parse_lexicon_errors(content, match):
    with pytest.raises(InputError, match=match):
        parse_lexicon(content)


def test_empty_lexicon(tmp_path):
    p = tmp_path / "lex.tsv"
    p.write_text("")
    assert load_lexicon(p) == {}


def test_demo_lexicon_ships():
    lex = load_lexicon()
    assert 250 <= len(lex) <= 400
    assert lex["miserable"] == (-1.0, 1.0)
    assert all(-1 <= p <= 1 and 0 <= s <= 1 for p, s in lex.values())


def test_single_scored_token_document():
    tokens = "miserable playing health colombia squandering billions pesos armored cars".split()
    s = score_document(tokens, LEX)
    assert (s.polarity, s.subjectivity, s.label, s.scored_word_count) == (-1.0, 1.0, "negative", 1)


def test_symmetric_words_neutral():
    s = score_document(["good", "bad"], LEX)
    assert s.polarity == 0.0 and s.label == "neutral"
    assert s.subjectivity == pytest.approx(0.6)


def test_single_word():
    assert score_document(["great"], LEX) == SentimentScore(0.8, 0.75, 1, "positive")


def test_unscored_document():
    assert score_document(["nothing", "here"], LEX) == SentimentScore(0.0, 0.0, 0, "neutral")
    assert score_document([], LEX).label == "neutral"


def test_label_distribution():
    scores = [score_document(t, LEX) for t in (["good"], [], ["bad", "great", "miserable"])]
    assert [s.polarity > 0 for s in scores] == [True, False, False]
    assert label_distribution(scores) == {"positive": 1, "neutral": 1, "negative": 1}
    assert label_distribution([SentimentScore(0.0, 0.0, 0, "neutral")] * 4)["neutral"] == 4


def test_label_distribution_planted_583():
    planted = ["positive"] * 169 + ["neutral"] * 346 + ["negative"] * 68
    scores = [score_document({"positive": ["good"], "neutral": [], "negative": ["bad"]}[p], LEX) for p in planted]
    assert label_distribution(scores) == {"positive": 169, "neutral": 346, "negative": 68}


words = st.sampled_from(sorted(LEX) + ["filler", "colombia"])
entries = st.tuples(st.floats(-1, 1), st.floats(0, 1))


@settings(max_examples=300, deadline=None)
@given(st.lists(words, max_size=20), st.dictionaries(st.sampled_from(sorted(LEX)), entries), st.randoms())
def test_score_properties(tokens, lex, rnd):
    s = score_document(tokens, lex)
    assert -1 <= s.polarity <= 1 and 0 <= s.subjectivity <= 1
    assert s.label == ("positive" if s.polarity > 0 else "negative" if s.polarity < 0 else "neutral")
    if s.scored_word_count == 0:
        assert (s.polarity, s.subjectivity, s.label) == (0.0, 0.0, "neutral")
    shuffled = list(tokens)
    rnd.shuffle(shuffled)
    assert score_document(shuffled, lex) == s
    doubled = score_document([t for t in tokens for _ in (0, 1)], lex)
    assert (doubled.polarity, doubled.subjectivity, doubled.label) == (s.polarity, s.subjectivity, s.label)
