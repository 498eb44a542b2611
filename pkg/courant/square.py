"""The symmetric square of a finite instance and its quotients.

Labels are unordered pairs of base labels whose summed grade fits the pair
bounds. Two quotient stages share this class:

    balanced   (fY).Z - Y.(fZ)                          (tensor product over A)
    reduced    balanced + <Inv>,  Inv(X,Y,Z) = [X,Y].Z + Y.[X,Z] - X.(Y o Z)

Actions on a pair a.b:

    mu_left(X)   = [X,a].b + a.[X,b]
    mu_right(X)  = -(a o b).X
    f * (a.b)    = (f a).b

Results are projected to the normal form of the stage; the ``raw_*`` variants
skip the projection.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Any, Dict, Hashable, Iterable, Iterator, List, Optional, Sequence, Tuple

from coeff_algebra import Poly, format_poly, format_rational
from linquot import (
    Bounds,
    Combination,
    FilteredPiece,
    Grade,
    QuotientSpace,
    SaturationConfig,
    accumulate,
    empty_subspace,
    saturate,
)
from linquot.saturation import Thunk
from pseudoalgebra_core import FiniteInstance, ValueModule

_logger = logging.getLogger(__name__)

Pair = Tuple[Hashable, Hashable]

TIMES = "⊙"


@dataclass(frozen=True, eq=False)
class SquareElement(Combination):
    """Combination of unordered label pairs."""


def symmetric_pair_piece(instance: FiniteInstance, bounds: Bounds) -> FilteredPiece:
    labels = instance.basis_labels()
    grades = [instance.label_grade(label) for label in labels]
    entries = []
    for i, a in enumerate(labels):
        for j in range(i, len(labels)):
            g = grades[i].plus(grades[j])
            if bounds.fits(g):
                entries.append(((-g.weight, -g.pdeg, i, j), (a, labels[j]), g))
    entries.sort(key=lambda e: e[0])
    return FilteredPiece(tuple(e[1] for e in entries), tuple(e[2] for e in entries))


class SymSquare(ValueModule):
    def __init__(
        self,
        instance: FiniteInstance,
        quotient: QuotientSpace,
        bounds: Bounds,
        *,
        generators: Sequence[Tuple[str, SquareElement]] = (),
        name: str = "",
    ) -> None:
        self.instance = instance
        self.algebra = instance.algebra
        self.quotient = quotient
        self.piece = quotient.piece
        self.bounds = bounds
        self.generators = tuple(generators)
        self.name = name or f"{instance.name}{TIMES}2"
        self._order = {label: i for i, label in enumerate(instance.basis_labels())}

    # -- construction ----------------------------------------------------------

    def pair(self, a: Hashable, b: Hashable) -> Pair:
        return (a, b) if self._order[a] <= self._order[b] else (b, a)

    def pair_element(self, a: Hashable, b: Hashable, coeff: Any = 1) -> SquareElement:
        return SquareElement({self.pair(a, b): coeff})

    def raw_tensor(self, u: Any, v: Any) -> SquareElement:
        out: Dict[Hashable, Any] = {}
        cv = self.instance.coordinates(v)
        for a, c in self.instance.coordinates(u).items():
            for b, d in cv.items():
                accumulate(out, self.pair(a, b), c * d)
        return SquareElement(out)

    def tensor(self, u: Any, v: Any) -> SquareElement:
        """The class of u.v; this is the universal pairing."""
        return self.project(self.raw_tensor(u, v))

    def raw_inv(self, x: Any, y: Any, z: Any) -> SquareElement:
        E = self.instance
        return (
            self.raw_tensor(E.bracket(x, y), z)
            + self.raw_tensor(y, E.bracket(x, z))
            - self.raw_tensor(x, E.symmetrized(y, z))
        )

    def project(self, p: SquareElement) -> SquareElement:
        return SquareElement(self.quotient.project_terms(p))

    def with_relations(
        self, quotient: QuotientSpace, generators: Sequence[Tuple[str, SquareElement]], name: str
    ) -> "SymSquare":
        return SymSquare(self.instance, quotient, self.bounds, generators=generators, name=name)

    def _expand(self, p: SquareElement, image) -> SquareElement:
        out = SquareElement({})
        for (a, b), c in p.items():
            term = image(self.instance.label_element(a), self.instance.label_element(b))
            out = out + term * c
        return out

    # -- raw actions -----------------------------------------------------------

    def raw_mu_left(self, x: Any, p: SquareElement) -> SquareElement:
        E = self.instance
        return self._expand(p, lambda A, B: self.raw_tensor(E.bracket(x, A), B) + self.raw_tensor(A, E.bracket(x, B)))

    def raw_mu_right(self, x: Any, p: SquareElement) -> SquareElement:
        E = self.instance
        return self._expand(p, lambda A, B: -self.raw_tensor(E.symmetrized(A, B), x))

    def raw_scalar_mult(self, f: Poly, p: SquareElement) -> SquareElement:
        E = self.instance
        return self._expand(p, lambda A, B: self.raw_tensor(E.scalar_mult(f, A), B))

    # -- value module interface ------------------------------------------------

    def zero(self) -> SquareElement:
        return SquareElement({})

    def mu_left(self, x: Any, w: SquareElement) -> SquareElement:
        return self.project(self.raw_mu_left(x, w))

    def mu_right(self, x: Any, w: SquareElement) -> SquareElement:
        return self.project(self.raw_mu_right(x, w))

    def scalar_mult(self, f: Poly, w: SquareElement) -> SquareElement:
        return self.project(self.raw_scalar_mult(f, w))

    def pair_grade(self, pair: Pair) -> Grade:
        if pair in self.piece:
            return self.piece.grade_of(pair)
        return self.instance.label_grade(pair[0]).plus(self.instance.label_grade(pair[1]))

    def grade(self, w: SquareElement) -> Grade:
        grades = [self.pair_grade(p) for p in w.labels()]
        return Grade(max((g.weight for g in grades), default=0), max((g.pdeg for g in grades), default=0))

    def sample_elements(self) -> Sequence[SquareElement]:
        return tuple(SquareElement({pair: 1}) for pair in self.quotient.cobasis)

    @property
    def sample_bounds(self) -> Optional[Bounds]:
        return self.bounds

    def format_pair(self, pair: Pair) -> str:
        a, b = pair
        return f"{{{self.instance.format_label(a)}}}{TIMES}{{{self.instance.format_label(b)}}}"

    def format_element(self, w: SquareElement) -> str:
        if not w:
            return "0"
        position = self.piece.index
        chunks = []
        for pair in sorted(w.labels(), key=lambda p: position.get(p, len(position))):
            c = w.coefficient(pair)
            magnitude = -c if c < 0 else c
            body = self.format_pair(pair)
            if magnitude != 1:
                body = f"[{format_rational(magnitude)}] {body}"
            if not chunks:
                chunks.append(f"-{body}" if c < 0 else body)
            else:
                chunks.append(f" - {body}" if c < 0 else f" + {body}")
        return "".join(chunks)

    def dimensions_by_weight(self) -> List[Tuple[int, int, int, int]]:
        return self.quotient.dimensions_by_weight()


def inv_generator(square: SymSquare, x: Any, y: Any, z: Any) -> SquareElement:
    """[X,Y].Z + Y.[X,Z] - X.(Y o Z), before any quotient."""
    return square.raw_inv(x, y, z)


# -- saturation families ---------------------------------------------------------


def _round_degrees(config: SaturationConfig, delta: int) -> Iterable[int]:
    return range(1, config.f_degree + 1) if delta == 0 else (config.f_degree + delta,)


def _generating_labels(instance: FiniteInstance) -> Tuple[Hashable, ...]:
    return tuple(label for label in instance.basis_labels() if instance.label_grade(label).weight <= 1)


def _square_closure(square: SymSquare):
    variables = square.algebra.gens
    generating = [square.instance.label_element(label) for label in _generating_labels(square.instance)]

    def closure(row: Combination) -> Iterator[Thunk]:
        r = SquareElement(row.terms)
        for x in variables:
            yield lambda x=x: square.raw_scalar_mult(x, r)
        for g in generating:
            yield lambda g=g: square.raw_mu_left(g, r)

    return closure


def _recording(thunk, description: str, kept: List[Tuple[str, SquareElement]]) -> Thunk:
    def run() -> SquareElement:
        value = thunk()
        if value:
            kept.append((description, value))
        return value

    return run


def balanced_square(
    instance: FiniteInstance, bounds: Bounds, config: SaturationConfig
) -> SymSquare:
    """The symmetric square over A: pairs modulo (fY).Z - Y.(fZ)."""
    piece = symmetric_pair_piece(instance, bounds)
    free_square = SymSquare(instance, QuotientSpace(piece, empty_subspace(piece)), bounds)
    labels = instance.basis_labels()
    grades = {label: instance.label_grade(label) for label in labels}
    kept: List[Tuple[str, SquareElement]] = []

    def family(delta: int) -> Iterator[Thunk]:
        for degree in _round_degrees(config, delta):
            if degree > bounds.pmax:
                continue
            for mono in instance.algebra.monomials(degree, min_degree=degree):
                f = instance.algebra.evaluate_monomial(mono)
                for a in labels:
                    for b in labels:
                        if not bounds.fits(grades[a].plus(grades[b]).plus(Grade(0, degree))):
                            continue
                        A, B = instance.label_element(a), instance.label_element(b)

                        def run(f=f, A=A, B=B) -> SquareElement:
                            return free_square.raw_tensor(instance.scalar_mult(f, A), B) - free_square.raw_tensor(
                                A, instance.scalar_mult(f, B)
                            )

                        description = (
                            f"balance(f={format_poly(instance.algebra, f)}; "
                            f"{instance.format_label(a)}, {instance.format_label(b)})"
                        )
                        yield _recording(run, description, kept)

    result = saturate(piece, family, config, closure=_square_closure(free_square), context="balancing")
    quotient = QuotientSpace(piece, result.subspace)
    _logger.info(f"balanced square: pairs={piece.size} relations={result.subspace.rank} cobasis={len(quotient.cobasis)}")
    return free_square.with_relations(quotient, kept, f"{instance.name}{TIMES}{instance.name}")


def associated_square(balanced: SymSquare, config: SaturationConfig) -> SymSquare:
    """R(E): the balanced square modulo the A-submodule generated by Inv."""
    instance = balanced.instance
    labels = instance.basis_labels()
    grades = {label: instance.label_grade(label) for label in labels}
    bounds = balanced.bounds
    kept: List[Tuple[str, SquareElement]] = []

    def family(delta: int) -> Iterator[Thunk]:
        if delta:
            return
        for x in labels:
            for y in labels:
                gxy = grades[x].plus(grades[y])
                if not bounds.fits(gxy):
                    continue
                for z in labels:
                    if not bounds.fits(gxy.plus(grades[z])):
                        continue
                    X, Y, Z = (instance.label_element(v) for v in (x, y, z))
                    description = (
                        f"Inv({instance.format_label(x)}, {instance.format_label(y)}, {instance.format_label(z)})"
                    )
                    yield _recording(lambda X=X, Y=Y, Z=Z: balanced.raw_inv(X, Y, Z), description, kept)

    result = saturate(
        balanced.piece,
        family,
        config,
        closure=_square_closure(balanced),
        start=balanced.quotient.relations,
        context="Inv",
    )
    quotient = QuotientSpace(balanced.piece, result.subspace)
    _logger.info(
        f"associated square: pairs={balanced.piece.size} relations={result.subspace.rank} "
        f"cobasis={len(quotient.cobasis)} inv_generators={len(kept)}"
    )
    return balanced.with_relations(quotient, kept, f"R({instance.name})")
