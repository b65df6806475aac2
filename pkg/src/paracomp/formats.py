"""Three-column TSV files: ``lemma TAB form TAB slot``.

Prediction files carry integer slot numbers, gold files arbitrary labels
(typically UniMorph feature bundles).  Lemmas and forms go through the same
normalization as the corpus; labels are kept verbatim.
"""
from __future__ import annotations

from pathlib import Path

from paracomp.bmacc import SlotTable
from paracomp.corpus import decode_utf8, normalize
from paracomp.errors import InputFormatError

Row = tuple[str, str, str]


def parse_rows(text: str, origin: str = "<tsv>") -> list[Row]:
    rows = []
    for lineno, line in enumerate(text.splitlines(), 1):
        if not line.strip():
            continue
        fields = line.split("\t")
        if len(fields) != 3:
            raise InputFormatError(f"{origin}:{lineno}: expected 3 tab-separated fields, got {len(fields)}")
        lemma, form, label = (f.strip() for f in fields)
        if not lemma or not form or not label:
            raise InputFormatError(f"{origin}:{lineno}: empty field")
        rows.append((normalize(lemma), normalize(form), label))
    return rows


def read_rows(path: str | Path) -> list[Row]:
    path = Path(path)
    return parse_rows(decode_utf8(path.read_bytes(), str(path)), str(path))


def read_table(path: str | Path) -> SlotTable:
    return SlotTable.from_rows(read_rows(path))


def write_text(path: str | Path, text: str) -> None:
    # newline="" so LF stays LF on every platform
    with open(path, "w", encoding="utf-8", newline="") as fh:
        fh.write(text)
