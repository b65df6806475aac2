"""Seen/unseen lemma breakdown of BMAcc."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from paracomp.bmacc import MATCH_ANY, BmaccReport, SlotTable, bmacc
from paracomp.corpus import Corpus


@dataclass(frozen=True)
class SeenSplit:
    seen: tuple[str, ...]
    unseen: tuple[str, ...]


def split_seen(lemmas: Sequence[str], corpus: Corpus) -> SeenSplit:
    seen = tuple(lemma for lemma in lemmas if lemma in corpus)
    unseen = tuple(lemma for lemma in lemmas if lemma not in corpus)
    return SeenSplit(seen, unseen)


def bmacc_on(pred: SlotTable, gold: SlotTable, lemmas: Sequence[str], match: str = MATCH_ANY) -> Optional[BmaccReport]:
    """BMAcc restricted to ``lemmas`` (slots re-merged); ``None`` if there are no lemmas."""
    if not lemmas:
        return None
    return bmacc(pred.restrict(lemmas), gold.restrict(lemmas), match)


def bmacc_by_split(
    pred: SlotTable, gold: SlotTable, split: SeenSplit, match: str = MATCH_ANY
) -> tuple[Optional[BmaccReport], Optional[BmaccReport]]:
    return bmacc_on(pred, gold, split.seen, match), bmacc_on(pred, gold, split.unseen, match)
