"""Toy suffixing languages with known paradigms, for tests and demos.

Stems are CV syllable strings, about half of them ending in a consonant.
Each slot adds a suffix; an allomorphic slot uses one suffix after vowels
and another after consonants, so its two edit trees fire for disjoint
lemma sets.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field

VOWELS = "aeiou"
ONSETS = "ptkbdgmnlrsvz"
CODAS = "ptkdgl"

PLAIN_SUFFIXES = ("ta", "ku", "lomi", "vesa", "dor", "pal", "gi", "zun")
# (after vowel, after consonant)
ALLOMORPH_PAIRS = (("n", "en"), ("s", "is"), ("r", "ar"), ("m", "um"))


@dataclass
class SyntheticLanguage:
    train_stems: list[str]
    heldout_stems: list[str]
    suffixes: list[tuple[str, str]]
    corpus_tokens: list[str]
    filler: list[str] = field(default_factory=list)

    @property
    def lemmas(self) -> list[str]:
        return self.train_stems + self.heldout_stems

    @property
    def slot_labels(self) -> list[str]:
        return [f"S{i}" for i in range(1, len(self.suffixes) + 1)]

    def inflect(self, stem: str, slot: int) -> str:
        after_vowel, after_consonant = self.suffixes[slot - 1]
        return stem + (after_vowel if stem[-1] in VOWELS else after_consonant)

    def paradigm(self, stem: str) -> dict[str, str]:
        return {label: self.inflect(stem, i) for i, label in enumerate(self.slot_labels, 1)}

    def gold_rows(self, stems: list[str] | None = None) -> list[tuple[str, str, str]]:
        stems = self.lemmas if stems is None else stems
        return [(s, form, label) for s in stems for label, form in self.paradigm(s).items()]

    def attested_fraction(self, stems: list[str] | None = None) -> float:
        vocab = set(self.corpus_tokens)
        rows = self.gold_rows(stems)
        return sum(form in vocab for _, form, _ in rows) / len(rows)


def _stem(rng: random.Random) -> str:
    syllables = "".join(rng.choice(ONSETS) + rng.choice(VOWELS) for _ in range(rng.choice((2, 3))))
    return syllables + rng.choice(CODAS) if rng.random() < 0.5 else syllables


def make_language(
    seed: int = 0,
    n_train: int = 20,
    n_heldout: int = 10,
    n_slots: int = 4,
    n_allomorphic: int = 1,
    attest_rate: float = 0.95,
    bare_stems: bool = False,
    heldout_in_corpus: bool = False,
    n_filler: int = 15,
) -> SyntheticLanguage:
    """Generate a language and a corpus of its inflected forms.

    Train stems have each form attested with probability ``attest_rate``;
    held-out stems appear in the corpus only if ``heldout_in_corpus``.  Bare
    stems are added to the corpus when ``bare_stems`` is set.  The first
    ``n_allomorphic`` slots are the allomorphic ones.
    """
    if n_allomorphic > min(n_slots, len(ALLOMORPH_PAIRS)) or n_slots - n_allomorphic > len(PLAIN_SUFFIXES):
        raise ValueError("not enough suffixes for the requested slots")
    rng = random.Random(seed)
    suffixes = list(ALLOMORPH_PAIRS[:n_allomorphic])
    suffixes += [(s, s) for s in PLAIN_SUFFIXES[: n_slots - n_allomorphic]]

    stems: list[str] = []
    words: set[str] = set()
    while len(stems) < n_train + n_heldout:
        stem = _stem(rng)
        forms = {stem + a for a, _ in suffixes} | {stem + c for _, c in suffixes}
        if stem in words or words & forms or any(s in forms for s in stems):
            continue
        stems.append(stem)
        words |= forms | {stem}
    lang = SyntheticLanguage(stems[:n_train], stems[n_train:], suffixes, [])

    filler = set()
    while len(filler) < n_filler:
        w = rng.choice(ONSETS) + rng.choice(VOWELS) + (rng.choice(VOWELS) if rng.random() < 0.3 else "")
        # a filler that inflects into a real word would look like a lemma
        if w not in words and not any(w + a in words or w + c in words for a, c in suffixes):
            filler.add(w)
    lang.filler = sorted(filler)

    tokens: list[str] = []
    in_corpus = lang.train_stems + (lang.heldout_stems if heldout_in_corpus else [])
    for stem in in_corpus:
        if bare_stems:
            tokens += [stem] * rng.randint(1, 6)
        for slot in range(1, n_slots + 1):
            if rng.random() < attest_rate:
                tokens += [lang.inflect(stem, slot)] * rng.randint(1, 6)
    for w in lang.filler:
        tokens += [w] * rng.randint(20, 80)
    rng.shuffle(tokens)
    lang.corpus_tokens = tokens
    return lang
