import unicodedata

import pytest
from hypothesis import given
from hypothesis import strategies as st

from paracomp.corpus import (
    STAT_LABELS,
    build_corpus,
    dataset_stats,
    parse_lemmas,
    read_corpus,
    tokenize,
)
from paracomp.errors import IngestionError, InputFormatError

from worked_example import GOLD_ROWS


def test_tokenize_strips_punctuation_and_case():
    assert tokenize("Walk, and he walked.") == ["walk", "and", "he", "walked"]


def test_tokenize_empty():
    assert tokenize("") == []
    assert tokenize("  ... ,, \n") == []


def test_tokenize_composes_combining_marks():
    tokens = tokenize("á")
    assert tokens == [unicodedata.normalize("NFC", "á")]
    assert tokens == ["á"]
    assert len(tokens[0]) == 1


def test_tokenize_keeps_internal_apostrophes_and_hyphens():
    assert tokenize("'Don't' (well-known)") == ["don't", "well-known"]


def test_tokenize_full_case_fold():
    assert tokenize("STRASSE Straße") == ["strasse", "strasse"]


def test_tokenize_bytes_reports_offset():
    with pytest.raises(IngestionError, match="byte offset 3"):
        tokenize(b"abc\xffdef")


def test_read_corpus_invalid_utf8(tmp_path):
    path = tmp_path / "c.txt"
    path.write_bytes(b"walk walked \xc3(")
    with pytest.raises(IngestionError, match="byte offset 12"):
        read_corpus(path)


@given(st.text())
def test_tokenize_idempotent(text):
    tokens = tokenize(text)
    assert tokenize(" ".join(tokens)) == tokens
    assert all(tokens)


@given(st.lists(st.sampled_from(["walk", "walked", "a", "b", "listens", "x"])))
def test_corpus_invariants(tokens):
    corpus = build_corpus(tokens)
    assert corpus.token_count == len(tokens)
    assert sum(corpus.vocab.values()) == len(tokens)
    assert set(corpus.vocab) == set(tokens)


def test_build_corpus_counts():
    corpus = build_corpus(["walk", "walk", "walked"])
    assert dict(corpus.vocab) == {"walk": 2, "walked": 1}
    assert build_corpus([]).token_count == 0
    assert build_corpus([]).type_count == 0


def test_parse_lemmas_crlf_and_duplicates():
    assert parse_lemmas("Walk\r\nlisten\r\n\r\nwalk\n") == ["walk", "listen"]


def test_parse_lemmas_rejects_tsv():
    with pytest.raises(InputFormatError, match=":2:"):
        parse_lemmas("walk\nlisten\tV\n")


def test_dataset_stats_worked_example():
    corpus = build_corpus(["walk", "walked", "listens"])
    stats = dataset_stats(corpus, ["walk", "listen"], GOLD_ROWS)
    assert stats.token_count == 3
    assert stats.type_count == 3
    assert stats.lemma_count == 2
    assert stats.lemmas_in_corpus == 1
    assert stats.inflection_count == 10
    # token-based: walk(1), walked(3), walked(5), listens(2)
    assert stats.inflections_in_corpus == 4
    assert stats.paradigm_size == 5
    assert stats.paradigm_size_merged == 4


def test_dataset_stats_empty_gold():
    stats = dataset_stats(build_corpus(["a", "b"]), ["a"], [])
    assert (stats.inflection_count, stats.inflections_in_corpus, stats.paradigm_size, stats.paradigm_size_merged) == (0, 0, 0, 0)


def test_stats_tsv_order():
    stats = dataset_stats(build_corpus(["walk"]), ["walk"], GOLD_ROWS)
    lines = stats.to_tsv().splitlines()
    assert [line.split("\t")[1] for line in lines] == list(STAT_LABELS)
    assert lines[0] == "1\t# Tokens in corpus\t1"


@given(st.permutations(["walk", "walk", "walked", "listens", "the", "the", "listen"]))
def test_dataset_stats_order_invariant(tokens):
    ref = dataset_stats(build_corpus(sorted(tokens)), ["walk", "listen"], GOLD_ROWS)
    assert dataset_stats(build_corpus(tokens), ["walk", "listen"], GOLD_ROWS) == ref
