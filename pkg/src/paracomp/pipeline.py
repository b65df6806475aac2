"""End-to-end paradigm completion: retrieval, slot discovery, generation."""
from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Sequence

from paracomp.config import Config
from paracomp.corpus import Corpus
from paracomp.inflector import (
    InflectionTriple,
    Paradigm,
    RuleSet,
    complete_paradigms,
    learn_rules,
    split_train_dev,
)
from paracomp.retrieval import RetrievalResult, run_retrieval
from paracomp.slots import GroupingStrategy, SlotGroup, assign_slots, group_trees

log = logging.getLogger(__name__)


@dataclass
class PipelineResult:
    paradigms: list[Paradigm]
    slot_ids: list[int]
    retrieval: RetrievalResult
    groups: list[SlotGroup]
    triples: list[InflectionTriple]
    train: list[InflectionTriple]
    dev: list[InflectionTriple]
    rules: RuleSet


def complete(
    lemmas: Sequence[str],
    corpus: Corpus,
    cfg: Config | None = None,
    jobs: int = 1,
    grouping: GroupingStrategy = group_trees,
) -> PipelineResult:
    cfg = cfg or Config()
    retrieval = run_retrieval(lemmas, corpus, cfg, jobs)
    log.info("retrieval: %d trees, %d candidate forms", len(retrieval.trees), len(retrieval.candidates))
    groups = grouping(retrieval.trees, cfg)
    triples = assign_slots(retrieval.candidates, groups, corpus.vocab)
    slot_ids = [g.slot_id for g in groups]
    if not slot_ids:
        # nothing retrieved: one slot holding the lemma keeps the output total
        log.warning("no edit trees survived filtering; predicting a single identity slot")
        slot_ids = [1]
    log.info("slot discovery: %d slots, %d triples", len(slot_ids), len(triples))
    train, dev = split_train_dev(triples, cfg.dev_fraction, cfg.seed)
    rules = learn_rules(train, cfg.max_context)
    paradigms = complete_paradigms(lemmas, triples, rules, slot_ids)
    return PipelineResult(paradigms, slot_ids, retrieval, groups, triples, train, dev, rules)
