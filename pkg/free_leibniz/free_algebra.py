"""The free Leibniz pseudoalgebra F(M) over an anchored module, truncated.

A word v1 (x) v2 (x) ... (x) vk stands for the nested bracket
[v1, [v2, ... [v_{k-1}, vk]]]. The three structure maps are recursions on the
first letter:

    bracket       [m, v] = m (x) v,   [m (x) w, v] = [m, [w, v]] - [w, [m, v]]
    A-action      f(m (x) mu) = m (x) (f mu) - a(m)(f) mu,   f(g e_i) = (fg) e_i
    anchor        Fa(m (x) w) = [a(m), Fa(w)],   a(x^alpha e_i) = x^alpha a(e_i)

Each recursion is memoized per word (and per monomial for the action); the
results are plain dicts that callers must not mutate.
"""

from __future__ import annotations

import logging
from functools import cached_property
from typing import Any, Dict, Hashable, Mapping, Tuple

from sympy import QQ

from anchored_module import AnchoredModule, ModuleElement
from coeff_algebra import Derivation, Monomial, Poly, add_monomials
from linquot import Bounds, BoundsMismatch, FilteredPiece, accumulate
from free_leibniz.element import FreeElement
from free_leibniz.words import Letter, Word, enumerate_words, word_grade

_logger = logging.getLogger(__name__)

Terms = Dict[Word, Any]


class FreeLeibniz:
    """Shared read-only context: the anchored module, the bounds and the caches."""

    def __init__(self, module: AnchoredModule, bounds: Bounds) -> None:
        self.module = module
        self.algebra = module.algebra
        self.bounds = bounds
        self._action_cache: Dict[Tuple[Monomial, Word], Terms] = {}
        self._bracket_cache: Dict[Tuple[Word, Word], Terms] = {}
        self._anchor_cache: Dict[Word, Derivation] = {}
        self._letter_anchor_cache: Dict[Letter, Derivation] = {}

    # -- basis -----------------------------------------------------------------

    @cached_property
    def word_basis(self) -> Tuple[Word, ...]:
        words = enumerate_words(self.algebra.monomials(self.bounds.pmax), self.module.rank, self.bounds)
        _logger.info(f"free basis: words={len(words)} wmax={self.bounds.wmax} pmax={self.bounds.pmax}")
        return words

    @cached_property
    def piece(self) -> FilteredPiece:
        return FilteredPiece(self.word_basis, tuple(word_grade(w) for w in self.word_basis))

    def letters(self, *, max_degree: int | None = None) -> Tuple[Word, ...]:
        top = self.bounds.pmax if max_degree is None else max_degree
        return tuple(w for w in self.word_basis if len(w) == 1 and sum(w[0].mono) <= top)

    # -- construction ----------------------------------------------------------

    def element(self, terms: Mapping[Hashable, Any]) -> FreeElement:
        return FreeElement(terms, self.bounds)

    def zero(self) -> FreeElement:
        return FreeElement({}, self.bounds)

    def word_element(self, word: Word, coeff: Any = 1) -> FreeElement:
        return FreeElement({word: coeff}, self.bounds)

    def letter(self, gen: int | str, mono: Monomial | None = None) -> Word:
        index = self.module.generator_index(gen) if isinstance(gen, str) else int(gen)
        exps = tuple(mono) if mono is not None else tuple(0 for _ in range(self.algebra.nvars))
        return (Letter(exps, index),)

    def include(self, m: ModuleElement) -> FreeElement:
        if m.module != self.module:
            raise ValueError("module element belongs to a different anchored module")
        out: Terms = {}
        for i, coeff in enumerate(m.coords):
            for mono, c in coeff.items():
                accumulate(out, (Letter(tuple(mono), i),), c)
        return self.element(out)

    # -- anchors ---------------------------------------------------------------

    def letter_anchor(self, letter: Letter) -> Derivation:
        cached = self._letter_anchor_cache.get(letter)
        if cached is None:
            cached = self.module.anchors[letter.gen].times(self.algebra.evaluate_monomial(letter.mono))
            self._letter_anchor_cache[letter] = cached
        return cached

    def word_anchor(self, word: Word) -> Derivation:
        cached = self._anchor_cache.get(word)
        if cached is None:
            head = self.letter_anchor(word[0])
            cached = head if len(word) == 1 else head.commutator(self.word_anchor(word[1:]))
            self._anchor_cache[word] = cached
        return cached

    def induced_anchor(self, u: FreeElement) -> Derivation:
        self.require_bounds(u)
        out = Derivation.zero(self.algebra)
        for word, c in u.items():
            out = out + self.word_anchor(word).scale(c)
        return out

    # -- A-action --------------------------------------------------------------

    def _act_word(self, beta: Monomial, word: Word) -> Terms:
        key = (beta, word)
        cached = self._action_cache.get(key)
        if cached is not None:
            return cached
        head = word[0]
        out: Terms = {}
        if len(word) == 1:
            out[(Letter(add_monomials(head.mono, beta), head.gen),)] = QQ.one
        else:
            rest = word[1:]
            for w, c in self._act_word(beta, rest).items():
                accumulate(out, (head,) + w, c)
            defect = self.letter_anchor(head).apply(self.algebra.evaluate_monomial(beta))
            for gamma, g in defect.items():
                for w, c in self._act_word(tuple(gamma), rest).items():
                    accumulate(out, w, -g * c)
        self._action_cache[key] = out
        return out

    def require_bounds(self, *elements: FreeElement) -> None:
        for u in elements:
            if u.bounds != self.bounds:
                raise BoundsMismatch(f"element truncated at {u.bounds}, context at {self.bounds}")

    def module_action(self, f: Any, u: FreeElement) -> FreeElement:
        f = self.algebra.require(f)
        self.require_bounds(u)
        out: Terms = {}
        for beta, c in f.items():
            for word, d in u.items():
                for w, e in self._act_word(tuple(beta), word).items():
                    accumulate(out, w, c * d * e)
        return self.element(out)

    # -- bracket ---------------------------------------------------------------

    def _bracket_words(self, u: Word, v: Word) -> Terms:
        key = (u, v)
        cached = self._bracket_cache.get(key)
        if cached is not None:
            return cached
        if len(u) == 1:
            out: Terms = {u + v: QQ.one}
        else:
            m, w = u[:1], u[1:]
            out = {}
            for t, c in self._bracket_words(w, v).items():
                accumulate(out, m + t, c)
            for t, c in self._bracket_words(w, m + v).items():
                accumulate(out, t, -c)
        self._bracket_cache[key] = out
        return out

    def bracket(self, u: FreeElement, v: FreeElement) -> FreeElement:
        self.require_bounds(u, v)
        out: Terms = {}
        for wu, cu in u.items():
            gu = word_grade(wu)
            for wv, cv in v.items():
                self.bounds.check(gu.plus(word_grade(wv)), "bracket")
                for t, c in self._bracket_words(wu, wv).items():
                    accumulate(out, t, cu * cv * c)
        return self.element(out)

    def symmetrized(self, u: FreeElement, v: FreeElement) -> FreeElement:
        return self.bracket(u, v) + self.bracket(v, u)


def include(free: FreeLeibniz, m: ModuleElement) -> FreeElement:
    return free.include(m)


def module_action(free: FreeLeibniz, f: Poly, u: FreeElement) -> FreeElement:
    return free.module_action(f, u)


def bracket(free: FreeLeibniz, u: FreeElement, v: FreeElement) -> FreeElement:
    return free.bracket(u, v)


def symmetrized(free: FreeLeibniz, u: FreeElement, v: FreeElement) -> FreeElement:
    return free.symmetrized(u, v)


def induced_anchor(free: FreeLeibniz, u: FreeElement) -> Derivation:
    return free.induced_anchor(u)
