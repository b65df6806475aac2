"""Macro-averaged best-match accuracy (BMAcc).

Predicted slots are anonymous, so a prediction is scored under the best
one-to-one mapping of predicted slots onto gold slots:

1. in both tables, slots whose lemma -> forms maps are identical are merged;
2. every (predicted, gold) slot pair gets the word accuracy the predicted
   slot would have if it were that gold slot;
3. a maximum-weight matching picks the mapping;
4. the matched accuracies are summed and divided by the larger of the two
   merged slot counts, so predicting too many or too few slots costs.

Accuracies are kept as integer counts and the final score is computed with
exact fractions, which makes it independent of label order.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Optional, Sequence

import numpy as np
from scipy.optimize import linear_sum_assignment

from paracomp.errors import InputFormatError

MATCH_ANY = "any"
MATCH_ALL = "all"


def label_key(label: str):
    """Order labels numerically when they are integers, else as strings."""
    if label.isascii() and label.isdigit():
        return (0, int(label), label)
    return (1, 0, label)


class SlotTable:
    """slot label -> lemma -> non-empty set of forms."""

    def __init__(self, entries: Mapping[str, Mapping[str, Iterable[str]]] | None = None):
        self.entries: dict[str, dict[str, frozenset[str]]] = {}
        for label, cells in (entries or {}).items():
            label = str(label)
            if not cells:
                raise InputFormatError(f"slot {label!r} has no lemmas")
            slot = {}
            for lemma, forms in cells.items():
                forms = frozenset(forms)
                if not forms:
                    raise InputFormatError(f"slot {label!r}, lemma {lemma!r}: empty form set")
                slot[lemma] = forms
            self.entries[label] = slot

    @classmethod
    def from_rows(cls, rows: Iterable[tuple[str, str, object]]) -> "SlotTable":
        entries: dict[str, dict[str, set[str]]] = {}
        for lemma, form, label in rows:
            entries.setdefault(str(label), {}).setdefault(lemma, set()).add(form)
        return cls(entries)

    @property
    def labels(self) -> list[str]:
        return sorted(self.entries, key=label_key)

    def lemmas(self) -> set[str]:
        return {lemma for cells in self.entries.values() for lemma in cells}

    def restrict(self, lemmas: Iterable[str]) -> "SlotTable":
        """Keep only the given lemmas; slots left without lemmas disappear."""
        keep = set(lemmas)
        entries = {}
        for label, cells in self.entries.items():
            sub = {lemma: forms for lemma, forms in cells.items() if lemma in keep}
            if sub:
                entries[label] = sub
        return SlotTable(entries)

    def rows(self) -> list[tuple[str, str, str]]:
        return [
            (lemma, form, label)
            for label in self.labels
            for lemma in sorted(self.entries[label])
            for form in sorted(self.entries[label][lemma])
        ]

    def __len__(self) -> int:
        return len(self.entries)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, SlotTable) and self.entries == other.entries

    def __repr__(self) -> str:
        return f"SlotTable({self.entries!r})"


def merge_identical_slots(table: SlotTable) -> SlotTable:
    """Collapse slots with identical lemma -> forms maps; the smallest label survives."""
    survivors: dict[frozenset, str] = {}
    for label in table.labels:
        signature = frozenset(table.entries[label].items())
        survivors.setdefault(signature, label)
    return SlotTable({label: table.entries[label] for label in survivors.values()})


@dataclass(frozen=True)
class AccuracyMatrix:
    pred_labels: tuple[str, ...]
    gold_labels: tuple[str, ...]
    correct: tuple[tuple[int, ...], ...]
    totals: tuple[int, ...]

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.pred_labels), len(self.gold_labels)

    def cell(self, i: int, j: int) -> float:
        return self.correct[i][j] / self.totals[j]

    def exact(self, i: int, j: int) -> Fraction:
        return Fraction(self.correct[i][j], self.totals[j])

    @property
    def values(self) -> np.ndarray:
        if not self.pred_labels or not self.gold_labels:
            return np.zeros(self.shape)
        return np.asarray(self.correct, dtype=float) / np.asarray(self.totals, dtype=float)


def _is_correct(predicted: Optional[frozenset[str]], gold: frozenset[str], match: str) -> bool:
    if not predicted:
        return False
    if match == MATCH_ALL:
        return gold <= predicted
    return not predicted.isdisjoint(gold)


def accuracy_matrix(pred: SlotTable, gold: SlotTable, match: str = MATCH_ANY) -> AccuracyMatrix:
    """Word accuracy of every predicted slot against every gold slot.

    The denominator of column ``j`` is the number of lemmas in gold slot
    ``j``; a lemma the predicted slot lacks counts as wrong.  With
    ``match="any"`` a cell is right if some predicted form is a gold form,
    with ``match="all"`` every gold form must be predicted.
    """
    if match not in (MATCH_ANY, MATCH_ALL):
        raise ValueError(f"unknown match mode {match!r}")
    pred_labels = pred.labels
    gold_labels = gold.labels
    correct = [[0] * len(gold_labels) for _ in pred_labels]
    by_lemma: dict[str, list[tuple[int, frozenset[str]]]] = {}
    for i, label in enumerate(pred_labels):
        for lemma, forms in pred.entries[label].items():
            by_lemma.setdefault(lemma, []).append((i, forms))
    totals = []
    for j, label in enumerate(gold_labels):
        cells = gold.entries[label]
        if not cells:
            raise InputFormatError(f"gold slot {label!r} has no lemmas")
        totals.append(len(cells))
        for lemma, gold_forms in cells.items():
            for i, forms in by_lemma.get(lemma, ()):
                if _is_correct(forms, gold_forms, match):
                    correct[i][j] += 1
    return AccuracyMatrix(
        tuple(pred_labels), tuple(gold_labels), tuple(tuple(row) for row in correct), tuple(totals)
    )


def solve_assignment(weights) -> tuple[list[tuple[int, int]], float]:
    """Index pairs of a maximum-weight matching saturating the smaller side."""
    weights = np.asarray(weights, dtype=float)
    if weights.ndim != 2 or 0 in weights.shape:
        return [], 0.0
    r, c = linear_sum_assignment(weights, maximize=True)
    pairs = sorted(zip(r.tolist(), c.tolist()))
    return pairs, float(sum(weights[i, j] for i, j in pairs))


def max_weight_full_matching(matrix: AccuracyMatrix) -> tuple[list[tuple[str, str]], float]:
    """Best one-to-one mapping of predicted onto gold slots.

    Rows and columns are in label order, so equal inputs always give the same
    matching.  Returns ``(pairs, total)`` with pairs sorted by predicted label.
    """
    pairs, total = solve_assignment(matrix.values)
    return [(matrix.pred_labels[i], matrix.gold_labels[j]) for i, j in pairs], total


@dataclass(frozen=True)
class BmaccReport:
    score: float
    matching: tuple[tuple[str, str], ...]
    merged_pred_count: int
    merged_gold_count: int
    matched_accuracy: tuple[float, ...] = ()

    @property
    def percent(self) -> str:
        return f"{100 * self.score:.2f}"

    def summary(self) -> str:
        return (
            f"BMAcc {self.percent}% "
            f"({self.merged_pred_count} predicted / {self.merged_gold_count} gold slots after merging)"
        )

    def tsv_rows(self, prefix: str = "") -> list[tuple[str, ...]]:
        rows = [
            (f"{prefix}score", self.percent),
            (f"{prefix}merged_pred_slots", str(self.merged_pred_count)),
            (f"{prefix}merged_gold_slots", str(self.merged_gold_count)),
        ]
        for (p, g), acc in zip(self.matching, self.matched_accuracy):
            rows.append((f"{prefix}match", p, g, f"{acc:.6f}"))
        return rows


def bmacc(pred: SlotTable, gold: SlotTable, match: str = MATCH_ANY) -> BmaccReport:
    pred_m = merge_identical_slots(pred)
    gold_m = merge_identical_slots(gold)
    n_pred, n_gold = len(pred_m), len(gold_m)
    if n_pred == 0 or n_gold == 0:
        return BmaccReport(0.0, (), n_pred, n_gold)
    matrix = accuracy_matrix(pred_m, gold_m, match)
    pairs, _ = max_weight_full_matching(matrix)
    p_index = {label: i for i, label in enumerate(matrix.pred_labels)}
    g_index = {label: j for j, label in enumerate(matrix.gold_labels)}
    exact = [matrix.exact(p_index[p], g_index[g]) for p, g in pairs]
    score = sum(exact, Fraction(0)) / max(n_pred, n_gold)
    return BmaccReport(float(score), tuple(pairs), n_pred, n_gold, tuple(float(x) for x in exact))


def report_tsv(rows: Sequence[tuple[str, ...]]) -> str:
    return "".join("\t".join(row) + "\n" for row in rows)
