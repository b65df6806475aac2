"""Edit trees: recursive lemma-to-form string transformations.

A tree is either a :class:`Replace` leaf, which rewrites one exact string
into another, or a :class:`Node`, which copies a middle span verbatim and
hands the material before and after it to two subtrees.  A node only records
how many characters its subtrees consume on either side, so the tree built
from ``walk -> walked`` also maps ``listen -> listened``.

Text form (used for debugging, golden tests and as the canonical sort key)::

    leaf  ("src" "tgt")        strings are JSON-quoted
    node  (P Q LEFT RIGHT)     P, Q = prefix/suffix lengths in the source
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from typing import Optional, Union


@dataclass(frozen=True)
class Replace:
    src: str
    tgt: str


@dataclass(frozen=True)
class Node:
    prefix_len: int
    suffix_len: int
    left: "EditTree"
    right: "EditTree"


EditTree = Union[Replace, Node]


def longest_common_substring(a: str, b: str) -> tuple[int, int, int]:
    """Return ``(start_a, start_b, length)`` of a longest common substring.

    Ties go to the smallest ``start_a``, then the smallest ``start_b``.
    Returns ``(0, 0, 0)`` when the strings share no character.
    """
    best = (0, 0, 0)
    best_len = 0
    prev = [0] * (len(b) + 1)
    for i, ca in enumerate(a, 1):
        cur = [0] * (len(b) + 1)
        for j, cb in enumerate(b, 1):
            if ca == cb:
                run = prev[j - 1] + 1
                cur[j] = run
                # row-major scan with strict '>' keeps the earliest end, hence earliest start
                if run > best_len:
                    best_len = run
                    best = (i - run, j - run, run)
        prev = cur
    return best


def build(source: str, target: str) -> EditTree:
    start_s, start_t, length = longest_common_substring(source, target)
    if length == 0:
        return Replace(source, target)
    end_s, end_t = start_s + length, start_t + length
    return Node(
        start_s,
        len(source) - end_s,
        build(source[:start_s], target[:start_t]),
        build(source[end_s:], target[end_t:]),
    )


def apply(tree: EditTree, word: str) -> Optional[str]:
    """Apply ``tree`` to ``word``; ``None`` if the tree does not fit."""
    if isinstance(tree, Replace):
        return tree.tgt if word == tree.src else None
    p, q = tree.prefix_len, tree.suffix_len
    n = len(word)
    if n < p + q:
        return None
    left = apply(tree.left, word[:p])
    if left is None:
        return None
    right = apply(tree.right, word[n - q:])
    if right is None:
        return None
    return left + word[p:n - q] + right


def is_identity(tree: EditTree) -> bool:
    """True if every input the tree accepts is mapped to itself."""
    if isinstance(tree, Replace):
        return tree.src == tree.tgt
    return is_identity(tree.left) and is_identity(tree.right)


@lru_cache(maxsize=1 << 16)
def to_string(tree: EditTree) -> str:
    if isinstance(tree, Replace):
        return f"({_quote(tree.src)} {_quote(tree.tgt)})"
    return f"({tree.prefix_len} {tree.suffix_len} {to_string(tree.left)} {to_string(tree.right)})"


def sort_key(tree: EditTree) -> str:
    return to_string(tree)


def _quote(s: str) -> str:
    return json.dumps(s, ensure_ascii=False)


_decoder = json.JSONDecoder()


def from_string(text: str) -> EditTree:
    tree, pos = _parse(text, 0)
    if text[pos:].strip():
        raise ValueError(f"trailing characters at {pos}: {text[pos:]!r}")
    return tree


def _skip(text: str, pos: int) -> int:
    while pos < len(text) and text[pos] == " ":
        pos += 1
    return pos


def _expect(text: str, pos: int, ch: str) -> int:
    pos = _skip(text, pos)
    if pos >= len(text) or text[pos] != ch:
        raise ValueError(f"expected {ch!r} at {pos}")
    return pos + 1


def _parse(text: str, pos: int) -> tuple[EditTree, int]:
    pos = _expect(text, pos, "(")
    pos = _skip(text, pos)
    if pos < len(text) and text[pos] == '"':
        src, pos = _decoder.raw_decode(text, pos)
        pos = _skip(text, pos)
        tgt, pos = _decoder.raw_decode(text, pos)
        return Replace(src, tgt), _expect(text, pos, ")")
    nums = []
    for _ in range(2):
        pos = _skip(text, pos)
        end = pos
        while end < len(text) and text[end] in "0123456789":
            end += 1
        if end == pos:
            raise ValueError(f"expected an integer at {pos}")
        nums.append(int(text[pos:end]))
        pos = end
    left, pos = _parse(text, pos)
    right, pos = _parse(text, pos)
    return Node(nums[0], nums[1], left, right), _expect(text, pos, ")")
