"""Decorated tensor words: sequences of (monomial, generator) letters."""

from __future__ import annotations

import itertools
from typing import List, NamedTuple, Tuple

from coeff_algebra import Monomial
from linquot import Bounds, Grade


class Letter(NamedTuple):
    mono: Monomial
    gen: int


Word = Tuple[Letter, ...]


def word_pdeg(word: Word) -> int:
    return sum(sum(letter.mono) for letter in word)


def word_grade(word: Word) -> Grade:
    return Grade(len(word), word_pdeg(word))


def word_sort_key(word: Word) -> tuple:
    """Weight descending, then polynomial degree descending, then the
    flattened (exponents, generator) sequence ascending."""
    flat = tuple(itertools.chain.from_iterable((*letter.mono, letter.gen) for letter in word))
    return (-len(word), -word_pdeg(word), flat)


def letters(monomials: Tuple[Monomial, ...], ngens: int) -> Tuple[Letter, ...]:
    return tuple(Letter(m, g) for m in monomials for g in range(ngens))


def enumerate_words(monomials: Tuple[Monomial, ...], ngens: int, bounds: Bounds) -> Tuple[Word, ...]:
    """Every word of weight 1..wmax and pdeg <= pmax, in canonical order."""
    alphabet = [(letter, sum(letter.mono)) for letter in letters(monomials, ngens) if sum(letter.mono) <= bounds.pmax]
    layer: List[Tuple[Word, int]] = [((letter,), p) for letter, p in alphabet]
    words: List[Word] = [w for w, _ in layer]
    for _ in range(bounds.wmax - 1):
        layer = [
            (w + (letter,), p + q)
            for w, p in layer
            for letter, q in alphabet
            if p + q <= bounds.pmax
        ]
        words.extend(w for w, _ in layer)
    return tuple(sorted(words, key=word_sort_key))
