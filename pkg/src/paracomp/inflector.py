"""Generation: learn suffix/prefix rewrite rules and fill in missing paradigm cells.

Rules come from aligning each training lemma with its form.  After
stripping the common prefix, ``lemma = stem + a`` and ``form = stem + b``
give the rule ``a -> b``; the same rule is also recorded with one, two, ...
characters of the stem as extra left context, up to ``max_context``
characters of lemma.  Generation picks the rule with the longest context
that matches the end of the new lemma.  Prefix rules are the mirror image
and are only learnt from pairs whose change is at the start of the word.
"""
from __future__ import annotations

import hashlib
from dataclasses import dataclass, field
from os.path import commonprefix
from typing import Iterable, Optional, Sequence

from paracomp.edit_tree import longest_common_substring


@dataclass(frozen=True, order=True)
class InflectionTriple:
    lemma: str
    form: str
    slot_id: int

    def __post_init__(self):
        if not self.lemma or not self.form:
            raise ValueError(f"empty lemma or form in {self!r}")
        if self.slot_id < 1:
            raise ValueError(f"slot ids start at 1, got {self.slot_id}")


@dataclass(frozen=True)
class Rule:
    context: str
    replacement: str
    support: int


# slot -> lemma-side context -> replacement -> support
_RuleTable = dict[int, dict[str, dict[str, int]]]


@dataclass
class RuleSet:
    suffix: _RuleTable = field(default_factory=dict)
    prefix: _RuleTable = field(default_factory=dict)
    max_context: int = 6

    @property
    def slots(self) -> list[int]:
        return sorted(set(self.suffix) | set(self.prefix))

    def suffix_rules(self, slot_id: int) -> list[Rule]:
        return _flatten(self.suffix.get(slot_id, {}))

    def prefix_rules(self, slot_id: int) -> list[Rule]:
        return _flatten(self.prefix.get(slot_id, {}))


def _flatten(table: dict[str, dict[str, int]]) -> list[Rule]:
    rules = [Rule(ctx, rep, n) for ctx, reps in table.items() for rep, n in reps.items()]
    rules.sort(key=lambda r: (-len(r.context), r.context, -r.support, r.replacement))
    return rules


def _stable_hash(*parts: object) -> bytes:
    text = "\x1f".join(str(p) for p in parts)
    return hashlib.blake2b(text.encode("utf-8"), digest_size=8).digest()


def split_train_dev(
    triples: Sequence[InflectionTriple], dev_fraction: float = 0.1, seed: int = 0
) -> tuple[list[InflectionTriple], list[InflectionTriple]]:
    """Deterministically hold out about ``dev_fraction`` of the triples.

    Triples are ranked by a seeded hash of (lemma, slot) and taken into dev
    in that order, skipping any triple that would leave a slot with two or
    more triples and none in train.  Both halves keep the input order.
    """
    if not 0 <= dev_fraction <= 0.5:
        raise ValueError("dev_fraction must be in [0, 0.5]")
    target = round(len(triples) * dev_fraction)
    per_slot: dict[int, int] = {}
    for t in triples:
        per_slot[t.slot_id] = per_slot.get(t.slot_id, 0) + 1
    left_in_train = dict(per_slot)
    ranked = sorted(range(len(triples)), key=lambda i: (_stable_hash(seed, triples[i].lemma, triples[i].slot_id), i))
    dev_idx = set()
    for i in ranked:
        if len(dev_idx) >= target:
            break
        slot = triples[i].slot_id
        if per_slot[slot] >= 2 and left_in_train[slot] == 1:
            continue
        dev_idx.add(i)
        left_in_train[slot] -= 1
    train = [t for i, t in enumerate(triples) if i not in dev_idx]
    dev = [t for i, t in enumerate(triples) if i in dev_idx]
    return train, dev


def _bump(table: _RuleTable, slot: int, ctx: str, rep: str) -> None:
    reps = table.setdefault(slot, {}).setdefault(ctx, {})
    reps[rep] = reps.get(rep, 0) + 1


def _is_prefixing(lemma: str, form: str) -> bool:
    i, j, k = longest_common_substring(lemma, form)
    return k > 0 and i + k == len(lemma) and j + k == len(form)


def learn_rules(train: Iterable[InflectionTriple], max_context: int = 6) -> RuleSet:
    rules = RuleSet(max_context=max_context)
    for t in train:
        lemma, form = t.lemma, t.form
        rules.suffix.setdefault(t.slot_id, {})
        stem = len(commonprefix([lemma, form]))
        longest = max(len(lemma) - stem, min(len(lemma), max_context))
        for n in range(len(lemma) - stem, longest + 1):
            cut = len(lemma) - n
            _bump(rules.suffix, t.slot_id, lemma[cut:], form[cut:])
        if _is_prefixing(lemma, form):
            tail = len(commonprefix([lemma[::-1], form[::-1]]))
            lp, fp = len(lemma) - tail, len(form) - tail
            longest = max(lp, min(len(lemma), max_context))
            for n in range(lp, longest + 1):
                _bump(rules.prefix, t.slot_id, lemma[:n], form[:fp + n - lp])
    return rules


def _best(table: dict[str, dict[str, int]], contexts: Iterable[tuple[int, str]]) -> Optional[tuple[int, str]]:
    for n, ctx in contexts:
        reps = table.get(ctx)
        if reps:
            rep = min(reps, key=lambda r: (-reps[r], r))
            return n, rep
    return None


def generate(rules: RuleSet, lemma: str, slot_id: int) -> str:
    """Inflect ``lemma`` for ``slot_id``; the lemma itself if no rule fits."""
    size = len(lemma)
    suffix = _best(rules.suffix.get(slot_id, {}), ((n, lemma[size - n:]) for n in range(size, -1, -1)))
    prefix = _best(rules.prefix.get(slot_id, {}), ((n, lemma[:n]) for n in range(size, -1, -1)))
    if prefix is not None and (suffix is None or prefix[0] > suffix[0]):
        n, rep = prefix
        out = rep + lemma[n:]
    elif suffix is not None:
        n, rep = suffix
        out = lemma[:size - n] + rep
    else:
        return lemma
    # a rule may delete the whole input; an empty cell is not a valid answer
    return out or lemma


@dataclass
class Paradigm:
    lemma: str
    cells: dict[int, str]


def complete_paradigms(
    lemmas: Sequence[str], triples: Iterable[InflectionTriple], rules: RuleSet, slot_ids: Sequence[int]
) -> list[Paradigm]:
    """Fill every (lemma, slot) cell; retrieved forms take precedence over generated ones."""
    known: dict[tuple[str, int], str] = {}
    for t in triples:
        known.setdefault((t.lemma, t.slot_id), t.form)
    slots = sorted(slot_ids)
    out = []
    for lemma in lemmas:
        cells = {}
        for slot in slots:
            form = known.get((lemma, slot))
            cells[slot] = form if form is not None else generate(rules, lemma, slot)
        out.append(Paradigm(lemma, cells))
    return out


def predictions_tsv(paradigms: Sequence[Paradigm]) -> str:
    return "".join(
        f"{p.lemma}\t{form}\t{slot}\n" for p in paradigms for slot, form in sorted(p.cells.items())
    )
