import logging
from dataclasses import dataclass, replace
from itertools import combinations, product
from typing import Iterable, List, Optional, Tuple

logger = logging.getLogger(__name__)

Monomial = Tuple[int, ...]


def _divides(a: Monomial, b: Monomial) -> bool:
    return all(x <= y for x, y in zip(a, b))


def _render(u: Monomial) -> str:
    factors = [f"x{i + 1}" if e == 1 else f"x{i + 1}^{e}" for i, e in enumerate(u) if e]
    return "*".join(factors) if factors else "1"


@dataclass(frozen=True)
class MonomialIdeal:
    """Monomial ideal stored by its minimal generators.

    No generator divides another. No generators is the zero ideal; the
    single generator 1 is the unit ideal.
    """

    n: int
    generators: Tuple[Monomial, ...]

    @classmethod
    def from_generators(cls, n: int, generators: Iterable[Monomial]) -> "MonomialIdeal":
        gens = sorted({tuple(int(x) for x in g) for g in generators})
        if any(len(g) != n for g in gens):
            raise ValueError(f"Generators must have {n} exponents")
        minimal = [g for g in gens if not any(h != g and _divides(h, g) for h in gens)]
        minimal.sort(key=lambda g: (sum(g), tuple(-x for x in g)))
        return cls(n, tuple(minimal))

    @classmethod
    def zero(cls, n: int) -> "MonomialIdeal":
        return cls(n, ())

    @classmethod
    def unit(cls, n: int) -> "MonomialIdeal":
        return cls(n, ((0,) * n,))

    @property
    def is_zero(self) -> bool:
        return not self.generators

    @property
    def is_unit(self) -> bool:
        return self.generators == ((0,) * self.n,)

    def __contains__(self, m) -> bool:
        return any(_divides(g, m) for g in self.generators)

    def render(self) -> str:
        if self.is_zero:
            return "<0>"
        return "<" + ", ".join(_render(g) for g in self.generators) + ">"


@dataclass(frozen=True)
class PrimeComponent:
    """The monomial prime <x_i : i in support>, optionally with its multiplicity."""

    support: Tuple[int, ...]
    multiplicity: Optional[int] = None

    def with_multiplicity(self, multiplicity: int) -> "PrimeComponent":
        return replace(self, multiplicity=multiplicity)

    def render(self) -> str:
        gens = ",".join(f"x{i + 1}" for i in self.support) if self.support else "0"
        mult = "?" if self.multiplicity is None else self.multiplicity
        return f"<{gens}>: mult {mult}"


# the zero ideal seen as a prime; the only minimal prime of the zero ideal
ZERO_PRIME = PrimeComponent(())


def contains(ideal: MonomialIdeal, m: Monomial) -> bool:
    return m in ideal


def radical(ideal: MonomialIdeal) -> MonomialIdeal:
    return MonomialIdeal.from_generators(
        ideal.n, [tuple(min(x, 1) for x in g) for g in ideal.generators]
    )


def intersect(a: MonomialIdeal, b: MonomialIdeal) -> MonomialIdeal:
    if a.n != b.n:
        raise ValueError(f"Ideals live in {a.n} and {b.n} variables")
    if a.is_zero or b.is_zero:
        return MonomialIdeal.zero(a.n)
    return MonomialIdeal.from_generators(
        a.n, [tuple(max(x, y) for x, y in zip(g, h)) for g in a.generators for h in b.generators]
    )


def minimal_primes(ideal: MonomialIdeal) -> List[PrimeComponent]:
    """Minimal primes, as minimal vertex covers of the radical's supports.

    Subsets are searched by increasing size; supersets of covers already
    found are skipped. The zero ideal returns ``[ZERO_PRIME]``, the unit
    ideal returns no primes.
    """
    if ideal.is_zero:
        return [ZERO_PRIME]
    if ideal.is_unit:
        return []
    edges = [frozenset(i for i, x in enumerate(g) if x) for g in radical(ideal).generators]
    vertices = sorted(set().union(*edges))
    covers = []
    for size in range(1, len(vertices) + 1):
        for subset in combinations(vertices, size):
            chosen = frozenset(subset)
            if any(c <= chosen for c in covers):
                continue
            if all(e & chosen for e in edges):
                covers.append(chosen)
    logger.debug(f"{len(covers)} minimal primes of {ideal.render()}")
    return [PrimeComponent(tuple(sorted(c))) for c in sorted(covers, key=lambda c: tuple(sorted(c)))]


def localize(ideal: MonomialIdeal, support: Tuple[int, ...]) -> MonomialIdeal:
    """Set x_j = 1 for every j outside ``support``."""
    return MonomialIdeal.from_generators(
        len(support), [tuple(g[i] for i in support) for g in ideal.generators]
    )


def standard_monomial_count(ideal: MonomialIdeal) -> int:
    """dim_k of S/I for a cofinite monomial ideal, by enumeration.

    Every standard monomial lies below the pure-power bounds, so the box
    they span is searched exhaustively.
    """
    bounds = []
    for k in range(ideal.n):
        pure = [
            g[k] for g in ideal.generators if g[k] > 0 and all(x == 0 for j, x in enumerate(g) if j != k)
        ]
        assert pure, f"{ideal.render()} is not cofinite: no pure power of variable {k + 1}"
        bounds.append(min(pure))
    return sum(
        1 for m in product(*(range(b) for b in bounds)) if not any(_divides(g, m) for g in ideal.generators)
    )


def multiplicity(ideal: MonomialIdeal, component: PrimeComponent) -> int:
    """Length of S/I localized at the prime, by counting standard monomials.

    The support must be a minimal prime of the ideal; otherwise the
    localized ideal is not cofinite (or is the unit ideal) and the
    assertions fail.
    """
    local = localize(ideal, component.support)
    count = standard_monomial_count(local)
    assert count >= 1, f"<{component.support}> is not a minimal prime of {ideal.render()}"
    return count
