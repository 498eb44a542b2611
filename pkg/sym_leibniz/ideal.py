"""Generators of the ideals J1 and J2 of F(M).

    J1(f, X, Y)    = X o fY - (fX) o Y
    J2(f, X, Y, Z) = [fX, Y o Z] - [X, Y] o fZ - (fY) o [X, Z]

where ``o`` is the symmetrized product. Both vanish for constant f.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable, Iterator, List, Tuple

from coeff_algebra import Monomial, Poly, format_monomial
from linquot import Combination, SaturationConfig
from linquot.saturation import GeneratorFamily, Thunk
from free_leibniz import FreeElement, FreeLeibniz, Word, format_word, word_grade, word_pdeg


def j1_generator(free: FreeLeibniz, f: Poly, X: FreeElement, Y: FreeElement) -> FreeElement:
    return free.symmetrized(X, free.module_action(f, Y)) - free.symmetrized(free.module_action(f, X), Y)


def j2_generator(free: FreeLeibniz, f: Poly, X: FreeElement, Y: FreeElement, Z: FreeElement) -> FreeElement:
    return (
        free.bracket(free.module_action(f, X), free.symmetrized(Y, Z))
        - free.symmetrized(free.bracket(X, Y), free.module_action(f, Z))
        - free.symmetrized(free.module_action(f, Y), free.bracket(X, Z))
    )


@dataclass(frozen=True)
class RelationGenerator:
    """One instance of J1 or J2 on basis words."""

    kind: str
    mono: Monomial
    words: Tuple[Word, ...]

    def evaluate(self, free: FreeLeibniz) -> FreeElement:
        f = free.algebra.evaluate_monomial(self.mono)
        args = [free.word_element(w) for w in self.words]
        if self.kind == "J1":
            return j1_generator(free, f, *args)
        return j2_generator(free, f, *args)

    def describe(self, free: FreeLeibniz) -> str:
        f = format_monomial(free.algebra.variables, self.mono) or "1"
        args = ", ".join(format_word(free, w) for w in self.words)
        return f"{self.kind}(f={f}; {args})"


def relation_generators(free: FreeLeibniz, degree: int) -> Iterator[RelationGenerator]:
    """J1/J2 instances with monomial f of exactly ``degree`` whose arguments fit the bounds.

    Arguments range over basis words of weight <= wmax-1 and pdeg <= pmax-1;
    J1 argument pairs are unordered since J1(f, Y, X) = -J1(f, X, Y).
    """
    b = free.bounds
    if degree < 1 or degree > b.pmax:
        return
    pool = [(w, word_grade(w)) for w in free.word_basis if len(w) <= b.wmax - 1 and word_pdeg(w) <= b.pmax - 1]
    monos = free.algebra.monomials(degree, min_degree=degree)
    for mono in monos:
        for i, (x, gx) in enumerate(pool):
            for y, gy in pool[i + 1:]:
                if gx.weight + gy.weight <= b.wmax and gx.pdeg + gy.pdeg + degree <= b.pmax:
                    yield RelationGenerator("J1", mono, (x, y))
        for x, gx in pool:
            for y, gy in pool:
                if gx.weight + gy.weight >= b.wmax or gx.pdeg + gy.pdeg + degree > b.pmax:
                    continue
                for z, gz in pool:
                    if gx.weight + gy.weight + gz.weight <= b.wmax and gx.pdeg + gy.pdeg + gz.pdeg + degree <= b.pmax:
                        yield RelationGenerator("J2", mono, (x, y, z))


def ideal_family(
    free: FreeLeibniz,
    config: SaturationConfig,
    kept: List[Tuple[RelationGenerator, FreeElement]],
) -> GeneratorFamily:
    """Round 0 covers f-degrees 1..f_degree, round delta adds degree f_degree+delta.

    Every generator that evaluates inside the bounds is appended to ``kept``.
    """

    def thunk(gen: RelationGenerator) -> Thunk:
        def run() -> FreeElement:
            value = gen.evaluate(free)
            kept.append((gen, value))
            return value

        return run

    def family(delta: int) -> Iterable[Thunk]:
        degrees = range(1, config.f_degree + 1) if delta == 0 else (config.f_degree + delta,)
        for degree in degrees:
            for gen in relation_generators(free, degree):
                yield thunk(gen)

    return family


def ideal_closure(free: FreeLeibniz, config: SaturationConfig) -> Callable[[Combination], Iterable[Thunk]]:
    """x_j * r for every variable and, optionally, [l, r] and [r, l] for every letter l."""
    variables = free.algebra.gens
    letters = [free.word_element(w) for w in free.letters()]

    def closure(row: Combination) -> Iterator[Thunk]:
        r = free.element(row.terms)
        for x in variables:
            yield lambda x=x: free.module_action(x, r)
        if config.close_under_brackets:
            for letter in letters:
                yield lambda letter=letter: free.bracket(letter, r)
                yield lambda letter=letter: free.bracket(r, letter)

    return closure
