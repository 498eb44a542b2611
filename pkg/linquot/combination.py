"""Exact rational linear combinations over hashable basis labels."""

from __future__ import annotations

import dataclasses
from dataclasses import dataclass
from types import MappingProxyType
from typing import Any, Callable, Dict, Hashable, Iterable, Iterator, Mapping, Tuple, TypeVar

from sympy import QQ

from coeff_algebra import to_rational

C = TypeVar("C", bound="Combination")


def _as_qq(value: Any):
    return value if QQ.of_type(value) else to_rational(value)


def accumulate(target: Dict[Hashable, Any], label: Hashable, coeff: Any) -> None:
    """target[label] += coeff, dropping the entry when it cancels."""
    value = target.get(label, QQ.zero) + coeff
    if value:
        target[label] = value
    else:
        target.pop(label, None)


@dataclass(frozen=True, eq=False)
class Combination:
    """Sparse vector label -> nonzero rational; immutable."""

    terms: Mapping[Hashable, Any]

    def __post_init__(self) -> None:
        clean = {}
        for label, coeff in dict(self.terms).items():
            q = _as_qq(coeff)
            if q:
                clean[label] = q
        object.__setattr__(self, "terms", MappingProxyType(clean))

    @classmethod
    def of(cls, label: Hashable, coeff: Any = 1) -> "Combination":
        return cls({label: coeff})

    def spawn(self: C, terms: Mapping[Hashable, Any]) -> C:
        """A combination of the same kind (and bounds, for subclasses)."""
        return dataclasses.replace(self, terms=terms)

    def _check_compatible(self, other: "Combination") -> None:
        if type(other) is not type(self):
            raise TypeError(f"cannot combine {type(self).__name__} with {type(other).__name__}")

    def items(self) -> Iterable[Tuple[Hashable, Any]]:
        return self.terms.items()

    def labels(self) -> Tuple[Hashable, ...]:
        return tuple(self.terms)

    def coefficient(self, label: Hashable):
        return self.terms.get(label, QQ.zero)

    def __iter__(self) -> Iterator[Hashable]:
        return iter(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __add__(self: C, other: C) -> C:
        self._check_compatible(other)
        out = dict(self.terms)
        for label, coeff in other.terms.items():
            accumulate(out, label, coeff)
        return self.spawn(out)

    def __sub__(self: C, other: C) -> C:
        self._check_compatible(other)
        out = dict(self.terms)
        for label, coeff in other.terms.items():
            accumulate(out, label, -coeff)
        return self.spawn(out)

    def __neg__(self: C) -> C:
        return self.spawn({k: -v for k, v in self.terms.items()})

    def __mul__(self: C, scalar: Any) -> C:
        q = _as_qq(scalar)
        if not q:
            return self.spawn({})
        return self.spawn({k: v * q for k, v in self.terms.items()})

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Combination) or type(other) is not type(self):
            return NotImplemented
        try:
            self._check_compatible(other)
        except (TypeError, ValueError):
            return False
        return dict(self.terms) == dict(other.terms)

    def __hash__(self) -> int:
        return hash((type(self).__name__, frozenset(self.terms.items())))

    def linear_map(self, image: Callable[[Hashable], Mapping[Hashable, Any]]) -> Dict[Hashable, Any]:
        """Extend a label -> combination map linearly; returns the raw sparse dict."""
        out: Dict[Hashable, Any] = {}
        for label, coeff in self.terms.items():
            for target, c in image(label).items():
                accumulate(out, target, coeff * c)
        return out
