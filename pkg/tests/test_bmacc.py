import itertools
import random
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from paracomp.bmacc import (
    MATCH_ALL,
    SlotTable,
    accuracy_matrix,
    bmacc,
    label_key,
    max_weight_full_matching,
    merge_identical_slots,
    solve_assignment,
)
from paracomp.errors import InputFormatError

from tables import LEMMAS, random_table, relabel, slot_tables
from worked_example import GOLD_ROWS, PRED_ROWS

GOLD = SlotTable.from_rows(GOLD_ROWS)
PRED = SlotTable.from_rows(PRED_ROWS)


# --- oracles -----------------------------------------------------------------

def brute_force_matching(weights):
    weights = np.asarray(weights, dtype=float)
    rows, cols = weights.shape
    if rows <= cols:
        return max(sum(weights[i, p[i]] for i in range(rows)) for p in itertools.permutations(range(cols), rows))
    return brute_force_matching(weights.T)


def naive_merge(table):
    """Pairwise union-find over slots with equal maps."""
    labels = list(table.entries)
    parent = {l: l for l in labels}

    def find(x):
        while parent[x] != x:
            x = parent[x]
        return x

    for a, b in itertools.combinations(labels, 2):
        if table.entries[a] == table.entries[b]:
            parent[find(b)] = find(a)
    classes = {}
    for l in labels:
        classes.setdefault(find(l), []).append(l)
    return {min(ls, key=label_key): table.entries[ls[0]] for ls in classes.values()}


def recount(pred, gold, i_label, j_label):
    gold_cells = gold.entries[j_label]
    hits = 0
    for lemma in gold_cells:
        predicted = pred.entries[i_label].get(lemma, frozenset())
        if any(f in gold_cells[lemma] for f in predicted):
            hits += 1
    return Fraction(hits, len(gold_cells))


# --- worked example ----------------------------------------------------------

def test_worked_example_merge():
    merged = merge_identical_slots(GOLD)
    assert merged.labels == ["1", "2", "3", "4"]
    assert len(merge_identical_slots(PRED)) == 2


def test_worked_example_matrix():
    m = accuracy_matrix(merge_identical_slots(PRED), merge_identical_slots(GOLD))
    assert m.pred_labels == ("1", "2") and m.gold_labels == ("1", "2", "3", "4")
    assert m.values.tolist() == [[0, 1, 0, 0], [0, 0, 0, 0.5]]


def test_worked_example_matching():
    m = accuracy_matrix(merge_identical_slots(PRED), merge_identical_slots(GOLD))
    pairs, total = max_weight_full_matching(m)
    assert pairs == [("1", "2"), ("2", "4")]
    assert total == 1.5


def test_worked_example_score():
    report = bmacc(PRED, GOLD)
    assert report.score == 0.375
    assert report.percent == "37.50"
    assert (report.merged_pred_count, report.merged_gold_count) == (2, 4)
    assert report.matched_accuracy == (1.0, 0.5)


# --- merging -----------------------------------------------------------------

def test_merge_distinct_unchanged():
    table = SlotTable({"1": {"a": {"x"}}, "2": {"a": {"y"}}})
    assert merge_identical_slots(table) == table


def test_merge_needs_same_lemma_set():
    table = SlotTable({"1": {"a": {"x"}}, "2": {"a": {"x"}, "b": {"y"}}})
    assert len(merge_identical_slots(table)) == 2


def test_merge_survivor_is_smallest_label():
    table = SlotTable({"10": {"a": {"x"}}, "9": {"a": {"x"}}, "V;PST": {"a": {"x"}}})
    assert merge_identical_slots(table).labels == ["9"]


@given(slot_tables(max_slots=8))
def test_merge_matches_oracle(table):
    merged = merge_identical_slots(table)
    assert merged.entries == naive_merge(table)
    assert merge_identical_slots(merged) == merged


@given(slot_tables(max_slots=8), st.randoms())
def test_merge_order_independent(table, rng):
    items = list(table.entries.items())
    rng.shuffle(items)
    assert merge_identical_slots(SlotTable(dict(items))) == merge_identical_slots(table)


# --- accuracy matrix ---------------------------------------------------------

def test_matrix_against_recount():
    rng = random.Random(3)
    for _ in range(300):
        pred, gold = random_table(rng), random_table(rng)
        m = accuracy_matrix(pred, gold)
        for i, pl in enumerate(m.pred_labels):
            for j, gl in enumerate(m.gold_labels):
                assert m.exact(i, j) == recount(pred, gold, pl, gl)
                assert 0 <= m.cell(i, j) <= 1


def test_matrix_identity_diagonal():
    gold = merge_identical_slots(GOLD)
    m = accuracy_matrix(gold, gold)
    assert np.all(np.diag(m.values) == 1.0)


def test_missing_lemma_counts_wrong():
    gold = SlotTable({"g": {"a": {"x"}, "b": {"y"}}})
    pred = SlotTable({"1": {"a": {"x"}}})
    assert accuracy_matrix(pred, gold).values.tolist() == [[0.5]]


def test_match_modes():
    gold = SlotTable({"g": {"a": {"x", "x2"}}})
    pred = SlotTable({"1": {"a": {"x"}}})
    assert bmacc(pred, gold).score == 1.0
    assert bmacc(pred, gold, MATCH_ALL).score == 0.0
    assert bmacc(SlotTable({"1": {"a": {"x", "x2", "z"}}}), gold, MATCH_ALL).score == 1.0
    with pytest.raises(ValueError):
        accuracy_matrix(pred, gold, "some")


def test_empty_slot_rejected():
    with pytest.raises(InputFormatError):
        SlotTable({"1": {}})
    with pytest.raises(InputFormatError):
        SlotTable({"1": {"a": set()}})


# --- matching ----------------------------------------------------------------

def test_matching_1x1():
    pairs, total = solve_assignment([[0.7]])
    assert pairs == [(0, 0)] and total == 0.7


def test_matching_rectangular_saturates_smaller_side():
    rng = np.random.default_rng(0)
    for shape in [(2, 5), (5, 2), (3, 3)]:
        pairs, _ = solve_assignment(rng.random(shape))
        assert len(pairs) == min(shape)
        assert len({i for i, _ in pairs}) == len({j for _, j in pairs}) == min(shape)


def test_matching_against_brute_force_small():
    rng = np.random.default_rng(12)
    for _ in range(200):
        w = rng.random((rng.integers(1, 6), rng.integers(1, 6)))
        assert abs(solve_assignment(w)[1] - brute_force_matching(w)) <= 1e-12


def test_matching_deterministic():
    w = np.ones((3, 4))
    assert solve_assignment(w) == solve_assignment(w.copy())


# --- metric identities -------------------------------------------------------

@given(slot_tables())
def test_self_score_is_one(gold):
    assert bmacc(gold, gold).score == 1.0


@given(slot_tables(), slot_tables())
def test_score_bounded(pred, gold):
    report = bmacc(pred, gold)
    assert 0.0 <= report.score <= 1.0
    assert len(report.matching) == min(report.merged_pred_count, report.merged_gold_count)


@given(slot_tables(), slot_tables(), st.randoms())
def test_label_permutation_invariance(pred, gold, rng):
    ref = bmacc(pred, gold).score
    assert bmacc(relabel(pred, rng, "p"), relabel(gold, rng, "g")).score == ref


@given(slot_tables(), slot_tables(), st.data())
def test_duplicate_slot_absorbed(pred, gold, data):
    label = data.draw(st.sampled_from(sorted(pred.entries)))
    extended = SlotTable({**pred.entries, "999": pred.entries[label]})
    assert bmacc(extended, gold).score == bmacc(pred, gold).score


@given(slot_tables(), st.integers(1, 4))
def test_spurious_slots_penalized(gold, k):
    extra = {f"{100 + i}": {LEMMAS[0]: {f"new{i}"}} for i in range(k)}
    pred = SlotTable({**gold.entries, **extra})
    n = len(merge_identical_slots(gold))
    assert bmacc(pred, gold).score == float(Fraction(n, n + k))


def test_empty_prediction():
    report = bmacc(SlotTable(), GOLD)
    assert report.score == 0.0 and report.matching == ()
    assert report.merged_gold_count == 4


def test_report_rows():
    rows = bmacc(PRED, GOLD).tsv_rows()
    assert rows[0] == ("score", "37.50")
    assert ("match", "1", "2", "1.000000") in rows
