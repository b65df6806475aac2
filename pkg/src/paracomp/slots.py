"""Slot discovery: group edit trees that realize the same paradigm cell.

Allomorphs of one inflection (English -d after bake, -ed after walk) fire
for disjoint sets of lemmas, while trees for different inflections tend to
fire for the same lemmas.  :func:`group_trees` exploits exactly that and
nothing else; any callable with the same signature can replace it in the
pipeline.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Mapping, Sequence

from paracomp.config import Config
from paracomp.edit_tree import EditTree, sort_key, to_string
from paracomp.errors import ConsistencyError
from paracomp.inflector import InflectionTriple
from paracomp.retrieval import CandidateForm, TreeStats


@dataclass(frozen=True)
class SlotGroup:
    slot_id: int
    trees: tuple[EditTree, ...]
    lemma_coverage: frozenset[str]


GroupingStrategy = Callable[[Sequence[TreeStats], Config], "list[SlotGroup]"]


def overlap_ratio(a: frozenset[str] | set[str], b: frozenset[str] | set[str]) -> float:
    if not a or not b:
        return 0.0
    return len(a & b) / min(len(a), len(b))


def group_trees(trees: Sequence[TreeStats], cfg: Config | None = None) -> list[SlotGroup]:
    """Greedy complementary-distribution grouping.

    Trees are visited by frequency.  A tree joins the first existing group
    whose coverage it overlaps by at most ``cfg.max_overlap`` (relative to
    the smaller coverage); otherwise it seeds a new group.  Once
    ``cfg.max_slots`` groups exist, remaining trees go to the group they
    overlap least, so every tree ends up in exactly one group.
    """
    cfg = cfg or Config()
    ordered = sorted(trees, key=lambda ts: (-ts.frequency, sort_key(ts.tree)))
    members: list[list[EditTree]] = []
    covers: list[set[str]] = []
    for ts in ordered:
        ratios = [overlap_ratio(ts.lemma_coverage, cov) for cov in covers]
        target = next((i for i, r in enumerate(ratios) if r <= cfg.max_overlap), None)
        if target is None and len(members) >= cfg.max_slots:
            target = min(range(len(ratios)), key=lambda i: (ratios[i], i))
        if target is None:
            members.append([ts.tree])
            covers.append(set(ts.lemma_coverage))
        else:
            members[target].append(ts.tree)
            covers[target] |= ts.lemma_coverage
    return [SlotGroup(i, tuple(m), frozenset(c)) for i, (m, c) in enumerate(zip(members, covers), 1)]


def assign_slots(
    candidates: Sequence[CandidateForm], groups: Sequence[SlotGroup], vocab: Mapping[str, int]
) -> list[InflectionTriple]:
    """Turn candidates into (lemma, form, slot) triples, one form per cell.

    When a lemma gets several forms for one slot, the more frequent corpus
    form wins (ties: smaller string).  Output is ordered by first appearance
    of the lemma among the candidates, then by slot.
    """
    slot_of = {tree: g.slot_id for g in groups for tree in g.trees}
    best: dict[tuple[str, int], str] = {}
    order: dict[str, int] = {}
    for c in candidates:
        slot = slot_of.get(c.tree)
        if slot is None:
            raise ConsistencyError(f"candidate {c.lemma!r} -> {c.form!r} uses ungrouped tree {to_string(c.tree)}")
        order.setdefault(c.lemma, len(order))
        key = (c.lemma, slot)
        current = best.get(key)
        if current is None or (-vocab.get(c.form, 0), c.form) < (-vocab.get(current, 0), current):
            best[key] = c.form
    cells = sorted(best, key=lambda k: (order[k[0]], k[1]))
    return [InflectionTriple(lemma, best[(lemma, slot)], slot) for lemma, slot in cells]


def groups_tsv(groups: Sequence[SlotGroup]) -> str:
    lines = ["slot_id\ttree\tcoverage\n"]
    for g in groups:
        for tree in g.trees:
            lines.append(f"{g.slot_id}\t{to_string(tree)}\t{len(g.lemma_coverage)}\n")
    return "".join(lines)
