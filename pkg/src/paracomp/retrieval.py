"""Retrieval: find frequent edit trees, bootstrap new lemmas, collect attested forms.

The scan over (lemma, corpus type) pairs is the expensive part.  A pair is
only worth building a tree for when the two words share a long enough
substring, and "share a substring of length >= n" is the same as "share an
n-gram", so candidate types are looked up in an n-gram index instead of
running the substring DP against the whole vocabulary.
"""
from __future__ import annotations

import logging
import math
from collections import defaultdict
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterable, NamedTuple, Sequence

from paracomp.config import Config
from paracomp.corpus import Corpus
from paracomp.edit_tree import EditTree, apply, build, sort_key, to_string
from paracomp.errors import ConfigError

log = logging.getLogger(__name__)

GIVEN = "given-lemma"
RETRIEVED = "retrieved-lemma"


@dataclass(frozen=True)
class TreeStats:
    tree: EditTree
    frequency: int
    lemma_coverage: frozenset[str]


@dataclass(frozen=True)
class CandidateForm:
    lemma: str
    form: str
    tree: EditTree
    source: str = GIVEN


class RetrievalResult(NamedTuple):
    candidates: list[CandidateForm]
    trees: list[TreeStats]
    new_lemmas: list[str]


def min_shared_length(lemma: str, cfg: Config) -> int:
    return max(cfg.min_lcs_len, math.ceil(cfg.min_lcs_ratio * len(lemma)))


class NgramIndex:
    """Map n-grams to the vocabulary types containing them, built lazily per n."""

    def __init__(self, types: Iterable[str]):
        self.types = list(types)
        self._by_n: dict[int, dict[str, list[str]]] = {}

    def _index(self, n: int) -> dict[str, list[str]]:
        idx = self._by_n.get(n)
        if idx is None:
            idx = defaultdict(list)
            for w in self.types:
                for g in {w[i:i + n] for i in range(len(w) - n + 1)}:
                    idx[g].append(w)
            self._by_n[n] = idx
        return idx

    def sharing(self, word: str, n: int) -> set[str]:
        if n <= 0:
            return set(self.types)
        idx = self._index(n)
        out: set[str] = set()
        for i in range(len(word) - n + 1):
            out.update(idx.get(word[i:i + n], ()))
        return out


def _scan(lemmas: Sequence[str], index: NgramIndex, cfg: Config) -> list[tuple[EditTree, str]]:
    found = []
    for lemma in lemmas:
        n = min_shared_length(lemma, cfg)
        if n > len(lemma):
            continue
        limit = len(lemma) + cfg.max_affix_len
        for w in index.sharing(lemma, n):
            if len(w) <= limit:
                found.append((build(lemma, w), lemma))
    return found


_worker_index: NgramIndex | None = None
_worker_cfg: Config | None = None


def _init_worker(types: list[str], cfg: Config) -> None:
    global _worker_index, _worker_cfg
    _worker_index = NgramIndex(types)
    _worker_cfg = cfg


def _scan_chunk(lemmas: Sequence[str]) -> list[tuple[EditTree, str]]:
    return _scan(lemmas, _worker_index, _worker_cfg)


def _scan_pairs(lemmas: Sequence[str], corpus: Corpus, cfg: Config, jobs: int) -> list[tuple[EditTree, str]]:
    types = sorted(corpus.vocab)
    if jobs <= 1 or len(lemmas) < 2 * jobs:
        return _scan(lemmas, NgramIndex(types), cfg)
    chunks = [lemmas[i::jobs] for i in range(jobs)]
    with ProcessPoolExecutor(jobs, initializer=_init_worker, initargs=(types, cfg)) as pool:
        parts = list(pool.map(_scan_chunk, chunks))
    return [item for part in parts for item in part]


def _tree_order(ts: TreeStats):
    return (-ts.frequency, sort_key(ts.tree))


def extract_trees(lemmas: Sequence[str], corpus: Corpus, cfg: Config | None = None, jobs: int = 1) -> list[TreeStats]:
    """Count the edit tree of every similar (lemma, corpus type) pair.

    Returns trees with frequency >= ``cfg.min_tree_freq``, most frequent
    first (ties by canonical tree text), at most ``cfg.max_trees`` of them.
    A pair counts once no matter how often the type occurs; since a lemma
    and a tree determine the form, frequency equals coverage size.
    """
    cfg = cfg or Config()
    if not lemmas:
        raise ConfigError("empty lemma list")
    coverage: dict[EditTree, set[str]] = defaultdict(set)
    for tree, lemma in _scan_pairs(list(lemmas), corpus, cfg, jobs):
        coverage[tree].add(lemma)
    stats = [
        TreeStats(tree, len(lems), frozenset(lems))
        for tree, lems in coverage.items()
        if len(lems) >= cfg.min_tree_freq
    ]
    stats.sort(key=_tree_order)
    log.debug("extract_trees: %d distinct trees, %d kept", len(coverage), min(len(stats), cfg.max_trees))
    return stats[:cfg.max_trees]


def score_word(word: str, trees: Sequence[TreeStats], corpus: Corpus) -> int:
    score = 0
    for ts in trees:
        out = apply(ts.tree, word)
        if out is not None and out in corpus:
            score += 1
    return score


def retrieve_lemmas(
    corpus: Corpus, trees: Sequence[TreeStats], known: Iterable[str], cfg: Config | None = None
) -> list[tuple[str, int]]:
    """Score unknown corpus types as lemma candidates.

    A type's score is the number of kept trees that turn it into another
    attested type.  Returns ``(word, score)`` pairs ordered by score, corpus
    frequency and spelling.
    """
    cfg = cfg or Config()
    if not trees or cfg.max_new_lemmas == 0:
        return []
    known = set(known)
    scored = []
    for word in corpus.vocab:
        if word in known:
            continue
        score = score_word(word, trees, corpus)
        if score >= cfg.min_lemma_score:
            scored.append((word, score))
    scored.sort(key=lambda ws: (-ws[1], -corpus.frequency(ws[0]), ws[0]))
    return scored[:cfg.max_new_lemmas]


def discover_forms(
    lemmas: Sequence[str], corpus: Corpus, trees: Sequence[TreeStats], retrieved: Iterable[str] = ()
) -> list[CandidateForm]:
    """Apply every kept tree to every lemma and keep results found in the corpus.

    Lemmas listed in ``retrieved`` are tagged as such; output follows lemma
    order, then tree order.
    """
    retrieved = set(retrieved)
    out = []
    seen = set()
    for lemma in lemmas:
        source = RETRIEVED if lemma in retrieved else GIVEN
        for ts in trees:
            form = apply(ts.tree, lemma)
            if form is None or form not in corpus:
                continue
            key = (lemma, form, ts.tree)
            if key not in seen:
                seen.add(key)
                out.append(CandidateForm(lemma, form, ts.tree, source))
    return out


def run_retrieval(lemmas: Sequence[str], corpus: Corpus, cfg: Config | None = None, jobs: int = 1) -> RetrievalResult:
    cfg = cfg or Config()
    lemmas = list(lemmas)
    trees = extract_trees(lemmas, corpus, cfg, jobs)
    expanded = list(lemmas)
    new_lemmas: list[str] = []
    for round_no in range(cfg.bootstrap_rounds):
        new = [w for w, _ in retrieve_lemmas(corpus, trees, expanded, cfg)]
        log.info("bootstrap round %d: %d new lemmas", round_no + 1, len(new))
        if not new:
            break
        new_lemmas.extend(new)
        expanded.extend(new)
        trees = extract_trees(expanded, corpus, cfg, jobs)
    candidates = discover_forms(expanded, corpus, trees, new_lemmas)
    return RetrievalResult(candidates, trees, new_lemmas)


def trees_tsv(trees: Sequence[TreeStats]) -> str:
    lines = ["tree\tfrequency\tcoverage\n"]
    for ts in trees:
        lines.append(f"{to_string(ts.tree)}\t{ts.frequency}\t{len(ts.lemma_coverage)}\n")
    return "".join(lines)


def candidates_tsv(candidates: Sequence[CandidateForm]) -> str:
    lines = ["lemma\tform\ttree\tsource\n"]
    for c in candidates:
        lines.append(f"{c.lemma}\t{c.form}\t{to_string(c.tree)}\t{c.source}\n")
    return "".join(lines)
