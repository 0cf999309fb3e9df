from dataclasses import dataclass
from typing import FrozenSet, Iterable, Tuple

from adjtoric.monomials.ideal import MonomialIdeal, intersect, minimal_primes


@dataclass(frozen=True)
class SimplicialComplex:
    """Simplicial complex on vertices 0..n-1, stored by its facets.

    No facets is the void complex; the single facet () is the complex whose
    only face is the empty set.
    """

    n: int
    facets: FrozenSet[Tuple[int, ...]]

    @classmethod
    def from_faces(cls, n: int, faces: Iterable[Iterable[int]]) -> "SimplicialComplex":
        faces = {tuple(sorted(set(f))) for f in faces}
        maximal = {f for f in faces if not any(f != g and set(f) <= set(g) for g in faces)}
        return cls(n, frozenset(maximal))

    def __contains__(self, face) -> bool:
        return any(set(face) <= set(f) for f in self.facets)


def initial_complex(ideal: MonomialIdeal) -> SimplicialComplex:
    """Complex whose Stanley-Reisner ideal is the radical of ``ideal``.

    Its facets are the complements of the minimal-prime supports.
    """
    everything = set(range(ideal.n))
    return SimplicialComplex.from_faces(
        ideal.n, [tuple(sorted(everything - set(p.support))) for p in minimal_primes(ideal)]
    )


def stanley_reisner_ideal(complex: SimplicialComplex) -> MonomialIdeal:
    """I_Delta as the intersection of the primes <x_i : i not in facet>."""
    n = complex.n
    if not complex.facets:
        return MonomialIdeal.unit(n)
    result = None
    for facet in sorted(complex.facets):
        prime = MonomialIdeal.from_generators(
            n, [tuple(int(j == i) for j in range(n)) for i in range(n) if i not in facet]
        )
        result = prime if result is None else intersect(result, prime)
    return result
