"""Corpus ingestion, lemma lists and dataset statistics."""
from __future__ import annotations

import unicodedata
from collections import Counter
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Mapping, Sequence

from paracomp.errors import IngestionError, InputFormatError


def decode_utf8(data: bytes, origin: str = "<input>") -> str:
    try:
        return data.decode("utf-8")
    except UnicodeDecodeError as exc:
        raise IngestionError(f"{origin}: invalid UTF-8 at byte offset {exc.start}") from None


def normalize(text: str) -> str:
    """NFC + full case fold, iterated to a fixed point."""
    # casefold can emit decomposed sequences, so one pass is not always stable
    for _ in range(4):
        folded = unicodedata.normalize("NFC", unicodedata.normalize("NFC", text).casefold())
        if folded == text:
            break
        text = folded
    return text


def _is_punct(ch: str) -> bool:
    return unicodedata.category(ch).startswith("P")


def strip_punctuation(word: str) -> str:
    start, end = 0, len(word)
    while start < end and _is_punct(word[start]):
        start += 1
    while end > start and _is_punct(word[end - 1]):
        end -= 1
    return word[start:end]


def tokenize(text: str | bytes) -> list[str]:
    """Split raw text into normalized word tokens.

    >>> tokenize("Walk, and he walked.")
    ['walk', 'and', 'he', 'walked']
    """
    if isinstance(text, bytes):
        text = decode_utf8(text)
    out = []
    for chunk in normalize(text).split():
        word = strip_punctuation(chunk)
        if word:
            out.append(word)
    return out


@dataclass(frozen=True)
class Corpus:
    tokens: tuple[str, ...]
    vocab: Mapping[str, int] = field(repr=False)

    @property
    def token_count(self) -> int:
        return len(self.tokens)

    @property
    def type_count(self) -> int:
        return len(self.vocab)

    def frequency(self, word: str) -> int:
        return self.vocab.get(word, 0)

    def __contains__(self, word: object) -> bool:
        return word in self.vocab

    def types(self) -> list[str]:
        """Word types in a fixed order (frequency desc, then string)."""
        return sorted(self.vocab, key=lambda w: (-self.vocab[w], w))


def build_corpus(tokens: Iterable[str]) -> Corpus:
    tokens = tuple(tokens)
    return Corpus(tokens, dict(Counter(tokens)))


def read_corpus(path: str | Path) -> Corpus:
    path = Path(path)
    return build_corpus(tokenize(decode_utf8(path.read_bytes(), str(path))))


def parse_lemmas(text: str, origin: str = "<lemmas>") -> list[str]:
    """One lemma per line; blank lines are skipped and repeats dropped."""
    seen: dict[str, None] = {}
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.strip()
        if not line:
            continue
        if "\t" in line:
            raise InputFormatError(f"{origin}:{lineno}: lemma line contains a tab")
        lemma = normalize(line)
        seen.setdefault(lemma, None)
    return list(seen)


def read_lemmas(path: str | Path) -> list[str]:
    path = Path(path)
    return parse_lemmas(decode_utf8(path.read_bytes(), str(path)), str(path))


STAT_LABELS = (
    "# Tokens in corpus",
    "# Types in corpus",
    "# Lemmas",
    "# Lemmas in corpus",
    "# Inflections",
    "# Inflections in corpus",
    "Paradigm size",
    "Paradigm size (merged)",
)


@dataclass(frozen=True)
class DatasetStats:
    token_count: int
    type_count: int
    lemma_count: int
    lemmas_in_corpus: int
    inflection_count: int
    inflections_in_corpus: int
    paradigm_size: int
    paradigm_size_merged: int

    def rows(self) -> list[tuple[str, int]]:
        values = (
            self.token_count,
            self.type_count,
            self.lemma_count,
            self.lemmas_in_corpus,
            self.inflection_count,
            self.inflections_in_corpus,
            self.paradigm_size,
            self.paradigm_size_merged,
        )
        return list(zip(STAT_LABELS, values))

    def to_tsv(self) -> str:
        return "".join(f"{i}\t{label}\t{value}\n" for i, (label, value) in enumerate(self.rows(), 1))


def dataset_stats(corpus: Corpus, lemmas: Sequence[str], gold_rows: Sequence[tuple[str, str, str]]) -> DatasetStats:
    """Compute the eight dataset statistics.

    ``gold_rows`` are raw (lemma, form, slot-label) rows.  Inflection counts
    are token-based: every gold row counts, including rows whose form repeats
    in another slot.
    """
    from paracomp.bmacc import SlotTable, merge_identical_slots

    gold = SlotTable.from_rows(gold_rows)
    return DatasetStats(
        token_count=corpus.token_count,
        type_count=corpus.type_count,
        lemma_count=len(lemmas),
        lemmas_in_corpus=sum(1 for lemma in lemmas if lemma in corpus),
        inflection_count=len(gold_rows),
        inflections_in_corpus=sum(1 for _, form, _ in gold_rows if form in corpus),
        paradigm_size=len(gold),
        paradigm_size_merged=len(merge_identical_slots(gold)),
    )
