"""The truncated free Leibniz pseudoalgebra over an anchored module."""

from free_leibniz.element import FreeElement
from free_leibniz.element_text import (
    evaluate_expression,
    format_free_element,
    format_word,
    parse_free_element,
)
from free_leibniz.free_algebra import (
    FreeLeibniz,
    bracket,
    include,
    induced_anchor,
    module_action,
    symmetrized,
)
from free_leibniz.instance import FreeLeibnizInstance
from free_leibniz.words import Letter, Word, enumerate_words, word_grade, word_pdeg, word_sort_key

__all__ = [
    "FreeElement",
    "FreeLeibniz",
    "FreeLeibnizInstance",
    "Letter",
    "Word",
    "bracket",
    "enumerate_words",
    "evaluate_expression",
    "format_free_element",
    "format_word",
    "include",
    "induced_anchor",
    "module_action",
    "parse_free_element",
    "symmetrized",
    "word_grade",
    "word_pdeg",
    "word_sort_key",
]
