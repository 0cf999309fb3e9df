from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple, Union

import sympy

Exponent = Tuple[int, ...]


def _canonical(mapping: Mapping[Exponent, int]) -> Tuple[Tuple[Exponent, int], ...]:
    return tuple(sorted(((e, c) for e, c in mapping.items() if c != 0), reverse=True))


@dataclass(frozen=True)
class MultiPoly:
    """Polynomial in t0..t{num_vars-1} with integer coefficients.

    Terms are kept with nonzero coefficients only, sorted lexicographically
    descending on the exponent vectors, so two equal polynomials have equal
    fields and compare equal structurally.
    """

    num_vars: int
    terms: Tuple[Tuple[Exponent, int], ...] = ()

    @classmethod
    def from_dict(cls, num_vars: int, mapping: Mapping[Sequence[int], int]) -> "MultiPoly":
        merged: Dict[Exponent, int] = {}
        for e, c in mapping.items():
            e = tuple(int(x) for x in e)
            if len(e) != num_vars:
                raise ValueError(f"Exponent {e} does not have {num_vars} entries")
            merged[e] = merged.get(e, 0) + int(c)
        return cls(num_vars, _canonical(merged))

    @classmethod
    def constant(cls, num_vars: int, value: int) -> "MultiPoly":
        return cls.from_dict(num_vars, {(0,) * num_vars: value})

    @classmethod
    def zero(cls, num_vars: int) -> "MultiPoly":
        return cls(num_vars, ())

    @classmethod
    def one(cls, num_vars: int) -> "MultiPoly":
        return cls.constant(num_vars, 1)

    def as_dict(self) -> Dict[Exponent, int]:
        return dict(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def _check(self, other: "MultiPoly"):
        if self.num_vars != other.num_vars:
            raise ValueError(f"Polynomials in {self.num_vars} and {other.num_vars} variables")

    def __add__(self, other: Union["MultiPoly", int]) -> "MultiPoly":
        if isinstance(other, int):
            other = MultiPoly.constant(self.num_vars, other)
        self._check(other)
        merged = self.as_dict()
        for e, c in other.terms:
            merged[e] = merged.get(e, 0) + c
        return MultiPoly(self.num_vars, _canonical(merged))

    __radd__ = __add__

    def __neg__(self) -> "MultiPoly":
        return MultiPoly(self.num_vars, tuple((e, -c) for e, c in self.terms))

    def __sub__(self, other: Union["MultiPoly", int]) -> "MultiPoly":
        return self + (-other)

    def __mul__(self, other: Union["MultiPoly", int]) -> "MultiPoly":
        if isinstance(other, int):
            return self.scale(other)
        self._check(other)
        merged: Dict[Exponent, int] = {}
        for e, c in self.terms:
            for f, k in other.terms:
                g = tuple(x + y for x, y in zip(e, f))
                merged[g] = merged.get(g, 0) + c * k
        return MultiPoly(self.num_vars, _canonical(merged))

    __rmul__ = __mul__

    def scale(self, factor: int) -> "MultiPoly":
        return MultiPoly(self.num_vars, _canonical({e: factor * c for e, c in self.terms}))

    def evaluate(self, point: Sequence[Union[int, Fraction]]):
        if len(point) != self.num_vars:
            raise ValueError(f"Point has {len(point)} coordinates, expected {self.num_vars}")
        total = 0
        for e, c in self.terms:
            value = c
            for x, k in zip(point, e):
                value *= x**k
            total += value
        return total

    def substitute_diagonal(self, factors: Sequence[int]) -> "MultiPoly":
        """p(D t) for the diagonal matrix D = diag(factors)."""
        if len(factors) != self.num_vars:
            raise ValueError(f"Expected {self.num_vars} factors, got {len(factors)}")
        scaled = {}
        for e, c in self.terms:
            for f, k in zip(factors, e):
                c *= int(f) ** k
            scaled[e] = c
        return MultiPoly(self.num_vars, _canonical(scaled))

    @property
    def degree(self) -> Optional[int]:
        """Total degree; None for the zero polynomial."""
        if not self.terms:
            return None
        return max(sum(e) for e, _ in self.terms)

    def is_homogeneous(self, degree: Optional[int] = None) -> bool:
        degrees = {sum(e) for e, _ in self.terms}
        if degree is not None:
            return degrees <= {degree}
        return len(degrees) <= 1

    def coefficients(self) -> List[int]:
        return [c for _, c in self.terms]

    def first_difference(self, other: "MultiPoly") -> Optional[Tuple[Exponent, int, int]]:
        """First exponent (in canonical order) where the coefficients differ."""
        self._check(other)
        mine, theirs = self.as_dict(), other.as_dict()
        for e in sorted(set(mine) | set(theirs), reverse=True):
            if mine.get(e, 0) != theirs.get(e, 0):
                return e, mine.get(e, 0), theirs.get(e, 0)
        return None

    def render(self) -> str:
        """'7*t0^2 + 16*t0*t1 + ...'; the zero polynomial renders as '0'."""
        if not self.terms:
            return "0"
        out = []
        for i, (e, c) in enumerate(self.terms):
            factors = [f"t{k}" if x == 1 else f"t{k}^{x}" for k, x in enumerate(e) if x]
            magnitude = abs(c)
            if not factors:
                body = str(magnitude)
            elif magnitude == 1:
                body = "*".join(factors)
            else:
                body = "*".join([str(magnitude)] + factors)
            if i == 0:
                out.append(body if c > 0 else f"-{body}")
            else:
                out.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(out)

    def __str__(self):
        return self.render()

    def to_records(self) -> List[dict]:
        return [{"exponents": list(e), "coefficient": c} for e, c in self.terms]

    @classmethod
    def from_records(cls, num_vars: int, records: Iterable[dict]) -> "MultiPoly":
        return cls.from_dict(num_vars, {tuple(r["exponents"]): r["coefficient"] for r in records})

    def as_expr(self) -> sympy.Expr:
        t = sympy.symbols(f"t0:{self.num_vars}")
        return sympy.Add(
            *(sympy.Integer(c) * sympy.Mul(*(v**k for v, k in zip(t, e))) for e, c in self.terms)
        )


@dataclass(frozen=True)
class LinearForm:
    """The form v . t for a point v."""

    coefficients: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "coefficients", tuple(int(c) for c in self.coefficients))
        if not any(self.coefficients):
            raise ValueError("A linear form needs a nonzero coefficient")

    def to_poly(self) -> MultiPoly:
        n = len(self.coefficients)
        return MultiPoly.from_dict(
            n, {tuple(int(j == k) for j in range(n)): c for k, c in enumerate(self.coefficients)}
        )
