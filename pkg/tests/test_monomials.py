from itertools import combinations, product

import pytest

from adjtoric.monomials import (
    MonomialIdeal,
    PrimeComponent,
    SimplicialComplex,
    ZERO_PRIME,
    contains,
    initial_complex,
    intersect,
    localize,
    minimal_primes,
    multiplicity,
    radical,
    stanley_reisner_ideal,
    standard_monomial_count,
)

# <x3^2*x5, x2^2*x4, x2^2*x5>
PENTAGON_INITIAL = MonomialIdeal.from_generators(5, [(0, 0, 2, 0, 1), (0, 2, 0, 1, 0), (0, 2, 0, 0, 1)])


def _ideal(n, *gens):
    return MonomialIdeal.from_generators(n, gens)


def _inclusion_exclusion(ideal):
    """Standard monomials in the box below the pure powers, by inclusion-exclusion.

    The number of box monomials divisible by every generator of a subset is
    the box count above their lcm.
    """
    bounds = [
        min(g[k] for g in ideal.generators if g[k] and sum(g) == g[k]) for k in range(ideal.n)
    ]
    total = 0
    for size in range(len(ideal.generators) + 1):
        for subset in combinations(ideal.generators, size):
            lcm = [max((g[k] for g in subset), default=0) for k in range(ideal.n)]
            count = 1
            for b, l in zip(bounds, lcm):
                count *= max(b - l, 0)
            total += (-1) ** size * count
    return total


def test_minimalization():
    ideal = _ideal(2, (1, 0), (2, 0), (1, 1), (0, 3))
    assert set(ideal.generators) == {(1, 0), (0, 3)}


def test_membership():
    assert contains(PENTAGON_INITIAL, (1, 2, 0, 1, 3))
    assert not contains(PENTAGON_INITIAL, (1, 1, 1, 1, 1))
    assert (0, 0, 2, 0, 1) in PENTAGON_INITIAL


def test_zero_and_unit():
    assert MonomialIdeal.zero(3).is_zero
    assert MonomialIdeal.unit(3).is_unit
    assert _ideal(3, (0, 0, 0), (1, 0, 0)).is_unit
    assert (5, 5, 5) not in MonomialIdeal.zero(3)


def test_radical_pentagon():
    assert radical(PENTAGON_INITIAL) == _ideal(5, (0, 0, 1, 0, 1), (0, 1, 0, 1, 0), (0, 1, 0, 0, 1))


def test_radical_idempotent():
    rad = radical(PENTAGON_INITIAL)
    assert radical(rad) == rad
    assert radical(MonomialIdeal.zero(4)).is_zero


def test_radical_membership():
    rad = radical(PENTAGON_INITIAL)
    top = max(sum(g) for g in PENTAGON_INITIAL.generators)
    for m in product(range(2), repeat=5):
        powered = any(tuple(k * x for x in m) in PENTAGON_INITIAL for k in range(1, top + 1))
        assert (m in rad) == powered


def test_intersect():
    a = _ideal(2, (1, 0))
    b = _ideal(2, (0, 1))
    assert intersect(a, b) == _ideal(2, (1, 1))
    assert intersect(a, MonomialIdeal.zero(2)).is_zero
    assert intersect(a, MonomialIdeal.unit(2)) == a
    with pytest.raises(ValueError):
        intersect(a, MonomialIdeal.zero(3))


def test_minimal_primes_pentagon():
    supports = [p.support for p in minimal_primes(PENTAGON_INITIAL)]
    assert supports == [(1, 2), (1, 4), (3, 4)]


def test_minimal_primes_degenerate():
    assert minimal_primes(MonomialIdeal.zero(3)) == [ZERO_PRIME]
    assert minimal_primes(MonomialIdeal.unit(3)) == []
    assert minimal_primes(_ideal(3, (1, 0, 0))) == [PrimeComponent((0,))]


@pytest.mark.parametrize("support, expected", [((1, 2), 4), ((1, 4), 2), ((3, 4), 1)])
def test_multiplicity_pentagon(support, expected):
    assert multiplicity(PENTAGON_INITIAL, PrimeComponent(support)) == expected


def test_multiplicity_zero_ideal():
    assert multiplicity(MonomialIdeal.zero(3), ZERO_PRIME) == 1


def test_multiplicity_non_minimal_prime():
    with pytest.raises(AssertionError):
        multiplicity(PENTAGON_INITIAL, PrimeComponent((1,)))


def test_standard_monomials_against_inclusion_exclusion():
    for prime in minimal_primes(PENTAGON_INITIAL):
        local = localize(PENTAGON_INITIAL, prime.support)
        assert standard_monomial_count(local) == _inclusion_exclusion(local)
    for gens in [
        [(3, 0), (0, 2)],
        [(2, 0), (1, 1), (0, 3)],
        [(4, 0, 0), (0, 2, 0), (0, 0, 3), (1, 1, 1)],
        [(2, 0, 0), (0, 2, 0), (0, 0, 2), (1, 1, 0)],
    ]:
        ideal = MonomialIdeal.from_generators(len(gens[0]), gens)
        assert standard_monomial_count(ideal) == _inclusion_exclusion(ideal)


def test_initial_complex_pentagon():
    assert initial_complex(PENTAGON_INITIAL).facets == {(0, 1, 2), (0, 2, 3), (0, 3, 4)}


def test_initial_complex_degenerate():
    assert initial_complex(MonomialIdeal.zero(3)).facets == {(0, 1, 2)}
    maximal = _ideal(2, (1, 0), (0, 1))
    assert initial_complex(maximal).facets == {()}


def test_stanley_reisner_pentagon():
    complex_ = SimplicialComplex.from_faces(5, [(0, 1, 2), (0, 2, 3), (0, 3, 4)])
    assert stanley_reisner_ideal(complex_) == radical(PENTAGON_INITIAL)


def test_stanley_reisner_degenerate():
    assert stanley_reisner_ideal(SimplicialComplex.from_faces(3, [(0, 1, 2)])).is_zero
    assert stanley_reisner_ideal(SimplicialComplex.from_faces(2, [()])) == _ideal(2, (1, 0), (0, 1))
    assert stanley_reisner_ideal(SimplicialComplex(2, frozenset())).is_unit


def test_stanley_reisner_round_trip():
    for ideal in [PENTAGON_INITIAL, _ideal(4, (2, 1, 0, 0), (0, 0, 1, 3)), _ideal(3, (1, 1, 1))]:
        assert stanley_reisner_ideal(initial_complex(ideal)) == radical(ideal)


def test_simplicial_complex_faces():
    complex_ = SimplicialComplex.from_faces(4, [(0, 1), (0,), (1, 2, 3), (2, 3)])
    assert complex_.facets == {(0, 1), (1, 2, 3)}
    assert (2, 3) in complex_
    assert (0, 2) not in complex_


def test_component_render():
    assert PrimeComponent((1, 2), 4).render() == "<x2,x3>: mult 4"
    assert PENTAGON_INITIAL.render() == "<x2^2*x4, x2^2*x5, x3^2*x5>"
    assert MonomialIdeal.zero(2).render() == "<0>"
