"""Sanskrit sandhi engine with word-form generation and E-text search."""

__version__ = "0.1.0"

from .engine import EmptyWord, WordList, internal_sandhi, sandhi_process
from .phonemes import UnknownGrapheme, tokenize, render
from .wordforms import generate_all_word_forms
from .corpus import Corpus, Match, ingest, search
from .translit import deva_to_iast, iast_to_deva

__all__ = [
    "__version__",
    "EmptyWord",
    "WordList",
    "internal_sandhi",
    "sandhi_process",
    "UnknownGrapheme",
    "tokenize",
    "render",
    "generate_all_word_forms",
    "Corpus",
    "Match",
    "ingest",
    "search",
    "deva_to_iast",
    "iast_to_deva",
]
