"""Unsupervised morphological paradigm completion and BMAcc scoring."""

from paracomp.bmacc import BmaccReport, SlotTable, bmacc
from paracomp.config import Config
from paracomp.corpus import Corpus, build_corpus, tokenize
from paracomp.edit_tree import Node, Replace, apply, build

__all__ = [
    "BmaccReport",
    "Config",
    "Corpus",
    "Node",
    "Replace",
    "SlotTable",
    "apply",
    "bmacc",
    "build",
    "build_corpus",
    "tokenize",
]

__version__ = "0.1.0"
