from fractions import Fraction
from itertools import combinations

import pytest

from adjtoric.errors import ConfigurationError, DegenerateSimplexError, NonGenericWeightError
from adjtoric.geometry import (
    clear_denominators,
    in_positive_orthant,
    lattice_index,
    normalized_volume,
    random_generic_weight,
    regular_triangulation,
    scale_axes,
    total_volume,
    validate_configuration,
)
from adjtoric.linalg import as_int_matrix, integer_kernel, solve_rational
from adjtoric.utils import seeded_rng
from adjtoric.verify import sample_configuration


def _lower_facets(cfg, weight):
    """Lower facets of the lifted cone, found independently of the certificate.

    A (d+1)-subset spans a lower facet when the normal of the hyperplane
    through its lifted points, oriented to point down in the weight
    direction, sees every other lifted point strictly above.
    """
    lifted = [p + (w,) for p, w in zip(cfg.points, weight)]
    facets = set()
    for subset in combinations(range(cfg.n), cfg.d + 1):
        normal = integer_kernel([lifted[i] for i in subset])
        if len(normal) != 1:
            continue
        normal = normal[0]
        if normal[-1] == 0:
            continue
        if normal[-1] < 0:
            normal = tuple(-x for x in normal)
        heights = [sum(a * b for a, b in zip(normal, q)) for q in lifted]
        if all(heights[j] > 0 for j in range(cfg.n) if j not in subset):
            facets.add(subset)
    return facets


def _properly_intersect(cfg, s, t):
    """Whether two simplices meet in a common face.

    They overlap improperly exactly when a positive combination of points
    of s equals a positive combination of other points of t. Any such
    relation restricted to a circuit has a unique solution, so checking
    every pair of subsets with one coefficient fixed to 1 is complete.
    """
    for ks in range(1, len(s) + 1):
        for a in combinations(s, ks):
            rest_t = [j for j in t if j not in a]
            for kt in range(1, len(rest_t) + 1):
                for b in combinations(rest_t, kt):
                    cols = [cfg.points[i] for i in a] + [tuple(-x for x in cfg.points[j]) for j in b]
                    y = solve_rational(as_int_matrix(cols[1:]).T.copy(), [-v for v in cols[0]])
                    if y is not None and all(v > 0 for v in y):
                        return False
    return True


def test_validate_pentagon(pentagon):
    assert pentagon.n == 5
    assert pentagon.d == 2
    assert pentagon.matrix.shape == (3, 5)


@pytest.mark.parametrize(
    "points, reason",
    [
        ([[1, 0], [1, 1], [1, 2]], "non-vertex"),
        ([[1, 0, 0], [2, 1, 0], [1, 0, 1]], "non-lifted"),
        ([[1, 0], [1, 1], [1, 0]], "duplicate"),
        ([[1, 0, 0], [1, 1, 1], [1, 2, 2]], "rank-deficient"),
        ([[1, 0], [1]], "malformed"),
        ([[1, 0.5], [1, 1]], "malformed"),
        ([], "malformed"),
    ],
)
def test_validate_rejects(points, reason):
    with pytest.raises(ConfigurationError) as e:
        validate_configuration(points)
    assert e.value.reason == reason


def test_validate_interior_point():
    with pytest.raises(ConfigurationError) as e:
        validate_configuration([[1, 0, 0], [1, 2, 0], [1, 0, 2], [1, 1, 0]])
    assert e.value.reason == "non-vertex"
    assert e.value.index == 3


def test_pentagon_triangulation(pentagon, pentagon_weight):
    tri = regular_triangulation(pentagon, pentagon_weight)
    assert tri.facets == {(0, 1, 2), (0, 2, 3), (0, 3, 4)}
    assert [s.normalized_volume for s in tri.simplices] == [1, 2, 4]
    assert total_volume(tri) == 7
    first = tri.simplices[0]
    assert first.certificate == (Fraction(2), Fraction(1), Fraction(-2))


def test_certificates_separate(pentagon, pentagon_weight):
    tri = regular_triangulation(pentagon, pentagon_weight)
    for s in tri.simplices:
        for j, p in enumerate(pentagon.points):
            height = sum(Fraction(a) * c for a, c in zip(p, s.certificate))
            if j in s.indices:
                assert height == pentagon_weight[j]
            else:
                assert height < pentagon_weight[j]


def test_unit_simplex_single_simplex(unit_simplex):
    for w in [(0, 0, 0), (5, -3, 2), (1, 1, 1)]:
        tri = regular_triangulation(unit_simplex, w)
        assert tri.facets == {(0, 1, 2)}


def test_zero_weight_not_generic(pentagon):
    with pytest.raises(NonGenericWeightError) as e:
        regular_triangulation(pentagon, (0, 0, 0, 0, 0))
    assert e.value.subset is not None
    assert e.value.index not in e.value.subset


def test_square_diagonals(unit_square):
    assert regular_triangulation(unit_square, (1, 0, 0, 0)).facets == {(0, 1, 2), (1, 2, 3)}
    assert regular_triangulation(unit_square, (0, 1, 0, 0)).facets == {(0, 1, 3), (0, 2, 3)}
    with pytest.raises(NonGenericWeightError):
        regular_triangulation(unit_square, (0, 0, 0, 0))


def test_weight_length(pentagon):
    with pytest.raises(ValueError):
        regular_triangulation(pentagon, (0, 1))


@pytest.mark.parametrize("weight", [(0, 1, 0, 0, 1), (3, 0, 7, 1, 2), (10, 4, 0, 9, 3), (0, 5, 1, 8, 2)])
def test_triangulation_matches_lifted_facets(pentagon, weight):
    tri = regular_triangulation(pentagon, weight)
    assert tri.facets == _lower_facets(pentagon, weight)


@pytest.mark.parametrize("case", range(15))
def test_random_configurations_match_lifted_facets(case):
    cfg = sample_configuration(seeded_rng(11, case), {"n_max": 6, "d_max": 2, "coord_max": 4})
    volumes = set()
    for j in range(2):
        w = random_generic_weight(cfg, (case, j), bound=50)
        tri = regular_triangulation(cfg, w)
        assert tri.facets == _lower_facets(cfg, w)
        for s, t in combinations(tri.simplices, 2):
            assert _properly_intersect(cfg, s.indices, t.indices)
        volumes.add(total_volume(tri))
    assert len(volumes) == 1

def test_triangulation_is_a_triangulation(pentagon):
    for seed in range(5):
        w = random_generic_weight(pentagon, seed)
        tri = regular_triangulation(pentagon, w)
        assert total_volume(tri) == 7
        for s, t in combinations(tri.simplices, 2):
            assert _properly_intersect(pentagon, s.indices, t.indices)


@pytest.mark.parametrize("indices, volume", [((0, 1, 2), 1), ((0, 2, 3), 2), ((0, 3, 4), 4)])
def test_normalized_volume(pentagon, indices, volume):
    assert normalized_volume(pentagon, indices) == volume


def test_degenerate_simplex():
    pyramid = validate_configuration(
        [[1, 0, 0, 0], [1, 1, 0, 0], [1, 0, 1, 0], [1, 1, 1, 0], [1, 0, 0, 1]]
    )
    with pytest.raises(DegenerateSimplexError):
        normalized_volume(pyramid, (0, 1, 2, 3))


def test_random_weight_deterministic(pentagon):
    assert random_generic_weight(pentagon, 0) == random_generic_weight(pentagon, 0)
    assert random_generic_weight(pentagon, (4, 2)) == random_generic_weight(pentagon, (4, 2))
    w = random_generic_weight(pentagon, 0, bound=1000)
    assert all(0 <= x <= 1000 for x in w)
    assert total_volume(regular_triangulation(pentagon, w)) == 7


def test_random_weight_unit_simplex(unit_simplex):
    for seed in range(3):
        assert len(random_generic_weight(unit_simplex, seed)) == 3


def test_random_weight_accept_predicate(unit_square):
    seen = []

    def accept(cfg, w):
        seen.append(w)
        return len(seen) > 1

    w = random_generic_weight(unit_square, 3, accept=accept)
    assert w == seen[-1]
    assert len(seen) == 2


def test_scale_axes(pentagon, unit_simplex):
    assert scale_axes(pentagon, (1, 1, 1)) == pentagon
    assert scale_axes(unit_simplex, (1, 2, 3)).points == ((1, 0, 0), (1, 2, 0), (1, 0, 3))
    scaled = scale_axes(pentagon, (1, 2, 1))
    assert scaled.points[1] == (1, 2, 1)
    with pytest.raises(ValueError):
        scale_axes(pentagon, (2, 1, 1))
    with pytest.raises(ValueError):
        scale_axes(pentagon, (1, 0, 1))
    with pytest.raises(ValueError):
        scale_axes(pentagon, (1, 1))


def test_clear_denominators(pentagon):
    points = [[1, 0, "1/3"], [1, "1/2", "1/3"], [1, 1, "2/3"], [1, 1, 1], [1, 0, 1]]
    with pytest.warns(UserWarning):
        cfg, factors = clear_denominators(points)
    assert factors == (1, 2, 3)
    assert cfg == pentagon


def test_clear_denominators_integral(pentagon):
    cfg, factors = clear_denominators(pentagon.points)
    assert factors == (1, 1, 1)
    assert cfg == pentagon


def test_clear_denominators_not_lifted():
    with pytest.raises(ConfigurationError) as e:
        clear_denominators([["1/2", 0], [1, 1]])
    assert e.value.reason == "non-lifted"


def test_positive_orthant(pentagon):
    assert in_positive_orthant(pentagon)
    assert not in_positive_orthant(validate_configuration([[1, -1], [1, 1]]))


def test_lattice_index(pentagon, unit_square):
    assert lattice_index(pentagon) == 1
    assert lattice_index(unit_square) == 1
    assert lattice_index(scale_axes(pentagon, (1, 2, 3))) == 6
    assert lattice_index(validate_configuration([[1, 0], [1, 2]])) == 2
