from dataclasses import dataclass
from typing import Optional, Sequence, Tuple

Monomial = Tuple[int, ...]


def divides(a: Monomial, b: Monomial) -> bool:
    return all(x <= y for x, y in zip(a, b))


def mono_lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(max(x, y) for x, y in zip(a, b))


def coprime(a: Monomial, b: Monomial) -> bool:
    return all(x == 0 or y == 0 for x, y in zip(a, b))


def render_monomial(u: Sequence[int], var: str = "x", offset: int = 1) -> str:
    """'x3^2*x5' style rendering; variables are numbered from ``offset``."""
    factors = []
    for i, e in enumerate(u):
        if e == 1:
            factors.append(f"{var}{i + offset}")
        elif e > 1:
            factors.append(f"{var}{i + offset}^{e}")
    return "*".join(factors) if factors else "1"


def grading_degree(u: Sequence[int], grading) -> Tuple[int, ...]:
    """A-degree of x^u: the sum of u_i times column i of the grading."""
    return tuple(sum(e * col[k] for e, col in zip(u, grading)) for k in range(len(grading[0])))


@dataclass(frozen=True)
class TermOrder:
    """Weight order refined by graded reverse lexicographic order.

    ``cheapest`` is the variable grevlex treats as last (the one whose
    powers make a monomial smallest); saturation rotates it.
    """

    weight: Tuple[int, ...]
    cheapest: int

    @classmethod
    def from_weight(cls, weight) -> "TermOrder":
        weight = tuple(int(w) for w in weight)
        return cls(weight, len(weight) - 1)

    @classmethod
    def grevlex(cls, n: int, cheapest: int = None) -> "TermOrder":
        return cls((0,) * n, n - 1 if cheapest is None else cheapest)

    @property
    def n(self) -> int:
        return len(self.weight)

    def weigh(self, u: Monomial) -> int:
        return sum(w * e for w, e in zip(self.weight, u))

    def key(self, u: Monomial):
        """Sort key: larger key means larger monomial."""
        n = self.n
        revlex = tuple(-u[(self.cheapest - k) % n] for k in range(n))
        return (self.weigh(u), sum(u), revlex)


@dataclass(frozen=True)
class Binomial:
    """x^lead - x^trail. Under an attached order, lead is the larger term."""

    lead: Monomial
    trail: Monomial

    @classmethod
    def oriented(cls, u: Monomial, v: Monomial, order: TermOrder) -> Optional["Binomial"]:
        """x^u - x^v with the terms ordered by ``order``; None for zero."""
        u, v = tuple(u), tuple(v)
        if u == v:
            return None
        if order.key(u) > order.key(v):
            return cls(u, v)
        return cls(v, u)

    @classmethod
    def from_lattice_vector(cls, b: Sequence[int]) -> "Binomial":
        """x^(b+) - x^(b-) for an integer vector b."""
        return cls(tuple(max(x, 0) for x in b), tuple(max(-x, 0) for x in b))

    def render(self) -> str:
        return f"{render_monomial(self.lead)} - {render_monomial(self.trail)}"

    def __str__(self):
        return self.render()


@dataclass(frozen=True)
class BinomialIdeal:
    """Ideal generated by binomials in n variables.

    ``grading`` holds the degree of each variable (the columns of A), used to
    assert homogeneity. ``order`` is set when the generators are the reduced
    Groebner basis for that order.
    """

    generators: Tuple[Binomial, ...]
    n: int
    grading: Optional[Tuple[Tuple[int, ...], ...]] = None
    order: Optional[TermOrder] = None

    @property
    def is_zero(self) -> bool:
        return not self.generators

    def is_homogeneous(self, b: Binomial) -> bool:
        if self.grading is None:
            return True
        return grading_degree(b.lead, self.grading) == grading_degree(b.trail, self.grading)

    def render(self) -> list:
        return [g.render() for g in self.generators]
