"""Polynomial Dorfman (Courant) pseudoalgebra on A^d + (A^d)*.

Elements are X + xi with X a polynomial vector field and xi a polynomial
1-form. With the default conventions

    [X+xi, Y+eta] = [X, Y] + L_X eta - i_Y d xi
    (X+xi | Y+eta) = 1/2 (eta(X) + xi(Y))
    D f = (0, 2 df)

so that (Df | X) = X(f). ``pairing_scale`` and ``d_scale`` exist to build
mutated instances for negative controls.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Optional, Sequence, Tuple

from sympy import QQ

from coeff_algebra import AlgebraMismatch, CoefficientAlgebra, Derivation, Poly, format_poly, to_rational
from linquot import Bounds, Grade
from pseudoalgebra_core.instance import PseudoalgebraInstance


@dataclass(frozen=True)
class DorfmanElement:
    vec: Tuple[Poly, ...]
    form: Tuple[Poly, ...]

    def __post_init__(self) -> None:
        if len(self.vec) != len(self.form):
            raise AlgebraMismatch(f"vector part has {len(self.vec)} components, form part {len(self.form)}")

    def __add__(self, other: "DorfmanElement") -> "DorfmanElement":
        return DorfmanElement(
            tuple(a + b for a, b in zip(self.vec, other.vec)),
            tuple(a + b for a, b in zip(self.form, other.form)),
        )

    def __sub__(self, other: "DorfmanElement") -> "DorfmanElement":
        return DorfmanElement(
            tuple(a - b for a, b in zip(self.vec, other.vec)),
            tuple(a - b for a, b in zip(self.form, other.form)),
        )

    def __neg__(self) -> "DorfmanElement":
        return DorfmanElement(tuple(-a for a in self.vec), tuple(-a for a in self.form))

    def __mul__(self, scalar: Any) -> "DorfmanElement":
        q = to_rational(scalar)
        return DorfmanElement(tuple(a * q for a in self.vec), tuple(a * q for a in self.form))

    __rmul__ = __mul__

    def __bool__(self) -> bool:
        return any(self.vec) or any(self.form)


def exterior_derivative(algebra: CoefficientAlgebra, f: Poly) -> Tuple[Poly, ...]:
    return tuple(f.diff(x) for x in algebra.gens)


def interior_product(X: Sequence[Poly], xi: Sequence[Poly]) -> Poly:
    out = X[0].ring.zero
    for a, b in zip(X, xi):
        out += a * b
    return out


def vector_bracket(algebra: CoefficientAlgebra, X: Sequence[Poly], Y: Sequence[Poly]) -> Tuple[Poly, ...]:
    dx = Derivation(algebra, tuple(X))
    dy = Derivation(algebra, tuple(Y))
    return dx.commutator(dy).coeffs


def contract_exterior_derivative(algebra: CoefficientAlgebra, Y: Sequence[Poly], xi: Sequence[Poly]) -> Tuple[Poly, ...]:
    """Components of i_Y d xi: sum_j Y^j (d_j xi_k - d_k xi_j)."""
    gens = algebra.gens
    out = []
    for k in range(algebra.nvars):
        acc = algebra.zero
        for j in range(algebra.nvars):
            if j != k and Y[j]:
                acc += Y[j] * (xi[k].diff(gens[j]) - xi[j].diff(gens[k]))
        out.append(acc)
    return tuple(out)


def lie_derivative(algebra: CoefficientAlgebra, X: Sequence[Poly], eta: Sequence[Poly]) -> Tuple[Poly, ...]:
    """Cartan formula L_X eta = d(i_X eta) + i_X d eta."""
    exact = exterior_derivative(algebra, interior_product(X, eta))
    return tuple(a + b for a, b in zip(exact, contract_exterior_derivative(algebra, X, eta)))


class DorfmanInstance(PseudoalgebraInstance):
    has_pairing = True

    def __init__(
        self,
        algebra: CoefficientAlgebra,
        *,
        pairing_scale: Any = QQ(1, 2),
        d_scale: Any = 2,
        sample_degree: int = 3,
        name: str = "dorfman",
    ) -> None:
        if algebra.nvars < 1:
            raise ValueError("the Dorfman instance needs at least one variable")
        self.algebra = algebra
        self.pairing_scale = to_rational(pairing_scale)
        self.d_scale = to_rational(d_scale)
        self.sample_degree = int(sample_degree)
        self.name = name

    def element(self, vec: Sequence[Any], form: Sequence[Any] = ()) -> DorfmanElement:
        d = self.algebra.nvars
        form = tuple(form) or tuple(0 for _ in range(d))
        if len(vec) != d or len(form) != d:
            raise AlgebraMismatch(f"Dorfman elements need {d} vector and {d} form components")
        return DorfmanElement(
            tuple(self.algebra.require(c) for c in vec),
            tuple(self.algebra.require(c) for c in form),
        )

    def vector_field(self, j: int, coeff: Any = 1) -> DorfmanElement:
        vec = [self.algebra.zero] * self.algebra.nvars
        vec[j] = self.algebra.require(coeff)
        return self.element(vec)

    def one_form(self, j: int, coeff: Any = 1) -> DorfmanElement:
        vec = [self.algebra.zero] * self.algebra.nvars
        form = list(vec)
        form[j] = self.algebra.require(coeff)
        return self.element(vec, form)

    def zero(self) -> DorfmanElement:
        z = tuple(self.algebra.zero for _ in range(self.algebra.nvars))
        return DorfmanElement(z, z)

    def bracket(self, u: DorfmanElement, v: DorfmanElement) -> DorfmanElement:
        vec = vector_bracket(self.algebra, u.vec, v.vec)
        lie = lie_derivative(self.algebra, u.vec, v.form)
        contraction = contract_exterior_derivative(self.algebra, v.vec, u.form)
        return DorfmanElement(vec, tuple(a - b for a, b in zip(lie, contraction)))

    def scalar_mult(self, f: Any, u: DorfmanElement) -> DorfmanElement:
        f = self.algebra.require(f)
        return DorfmanElement(tuple(f * a for a in u.vec), tuple(f * a for a in u.form))

    def anchor(self, u: DorfmanElement) -> Derivation:
        return Derivation(self.algebra, u.vec)

    def pairing(self, u: DorfmanElement, v: DorfmanElement) -> Poly:
        return (interior_product(u.vec, v.form) + interior_product(v.vec, u.form)) * self.pairing_scale

    def D(self, f: Any) -> DorfmanElement:
        f = self.algebra.require(f)
        z = tuple(self.algebra.zero for _ in range(self.algebra.nvars))
        return DorfmanElement(z, tuple(c * self.d_scale for c in exterior_derivative(self.algebra, f)))

    def grade(self, u: DorfmanElement) -> Grade:
        return Grade(0, max(self.algebra.degree(c) for c in u.vec + u.form))

    @property
    def sample_bounds(self) -> Optional[Bounds]:
        return Bounds(wmax=1, pmax=self.sample_degree)

    def sample_elements(self) -> Sequence[DorfmanElement]:
        out = []
        for mono in self.algebra.monomials(self.sample_degree):
            m = self.algebra.evaluate_monomial(mono)
            out.extend(self.vector_field(j, m) for j in range(self.algebra.nvars))
            out.extend(self.one_form(j, m) for j in range(self.algebra.nvars))
        return tuple(out)

    def format_element(self, u: DorfmanElement) -> str:
        chunks = []
        for prefix, comps in (("∂", u.vec), ("d", u.form)):
            for name, c in zip(self.algebra.variables, comps):
                if not c:
                    continue
                coeff = "" if c == self.algebra.one else f"[{format_poly(self.algebra, c)}] "
                chunks.append(f"{coeff}{prefix}{name}")
        return " + ".join(chunks) if chunks else "0"


def dorfman_bracket(instance: DorfmanInstance, u: DorfmanElement, v: DorfmanElement) -> DorfmanElement:
    return instance.bracket(u, v)


def dorfman_pairing(instance: DorfmanInstance, u: DorfmanElement, v: DorfmanElement) -> Poly:
    return instance.pairing(u, v)


def dorfman_D(instance: DorfmanInstance, f: Any) -> DorfmanElement:
    return instance.D(f)
