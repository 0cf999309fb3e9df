from itertools import combinations_with_replacement, permutations

import pytest
import sympy

from adjtoric.algebra import (
    Binomial,
    BinomialIdeal,
    TermOrder,
    buchberger,
    grading_degree,
    is_generic,
    is_groebner,
    lattice_ideal,
    leading_ideal,
    normal_monomial,
    reduce,
    render_monomial,
    s_pair,
    saturate,
    toric_ideal,
    weight_order,
)
from adjtoric.errors import NonGenericWeightError
from adjtoric.geometry import scale_axes, validate_configuration
from adjtoric.monomials import MonomialIdeal

PENTAGON_BASIS = ["x3^2*x5 - x1*x4^2", "x2^2*x4 - x1*x3^2", "x2^2*x5 - x1^2*x4"]


def _as_sympy(ideal: BinomialIdeal):
    x = sympy.symbols(f"x1:{ideal.n + 1}")

    def mono(u):
        return sympy.Mul(*(v**e for v, e in zip(x, u)))

    return [mono(g.lead) - mono(g.trail) for g in ideal.generators], x


def test_render_monomial():
    assert render_monomial((0, 0, 2, 0, 1)) == "x3^2*x5"
    assert render_monomial((0, 0, 0)) == "1"
    assert render_monomial((1, 0, 3), var="t", offset=0) == "t0*t2^3"


def test_term_order_weight_first():
    order = TermOrder.from_weight((0, 1, 0, 0, 1))
    assert order.key((0, 0, 2, 0, 1)) > order.key((1, 0, 0, 2, 0))


def test_term_order_grevlex_cheapest():
    order = TermOrder.grevlex(3)
    # same degree: the monomial with more of the cheapest variable is smaller
    assert order.key((1, 1, 0)) > order.key((1, 0, 1))
    assert order.key((0, 2, 0)) > order.key((1, 0, 1))
    rotated = TermOrder.grevlex(3, cheapest=0)
    assert rotated.key((0, 1, 1)) > rotated.key((1, 1, 0))


def test_lattice_ideal_unit_simplex(unit_simplex):
    assert lattice_ideal(unit_simplex).is_zero


def test_lattice_ideal_segment():
    ideal = lattice_ideal([[1, 1, 1], [0, 1, 2]])
    assert [g.render() for g in ideal.generators] == ["x1*x3 - x2^2"]


def test_lattice_ideal_pentagon_homogeneous(pentagon):
    ideal = lattice_ideal(pentagon)
    assert len(ideal.generators) == 2
    for g in ideal.generators:
        assert grading_degree(g.lead, pentagon.points) == grading_degree(g.trail, pentagon.points)


def test_buchberger_zero_ideal():
    zero = BinomialIdeal((), 3)
    assert buchberger(zero, TermOrder.grevlex(3)).is_zero


def test_buchberger_single_generator():
    ideal = lattice_ideal([[1, 1, 1], [0, 1, 2]])
    order = TermOrder.grevlex(3)
    basis = buchberger(ideal, order)
    assert len(basis.generators) == 1
    assert basis.generators[0].render() == "x2^2 - x1*x3"


def test_pentagon_groebner_basis(pentagon, pentagon_weight):
    order = weight_order(pentagon_weight)
    basis = buchberger(toric_ideal(pentagon), order)
    assert basis.render() == PENTAGON_BASIS
    assert is_groebner(basis, order)


def test_pentagon_initial_ideal(pentagon, pentagon_weight):
    order = weight_order(pentagon_weight)
    initial = leading_ideal(buchberger(toric_ideal(pentagon), order), order)
    assert set(initial.generators) == {(0, 0, 2, 0, 1), (0, 2, 0, 1, 0), (0, 2, 0, 0, 1)}


def test_leading_ideal_recomputes_for_other_order(pentagon, pentagon_weight):
    # the toric ideal is stored under grevlex; asking for the weight order recomputes
    initial = leading_ideal(toric_ideal(pentagon), weight_order(pentagon_weight))
    assert len(initial.generators) == 3


def test_leading_ideal_segment():
    order = weight_order((1, 0, 1))
    initial = leading_ideal(saturate(lattice_ideal([[1, 1, 1], [0, 1, 2]])), order)
    assert initial == MonomialIdeal.from_generators(3, [(1, 0, 1)])


def test_leading_ideal_zero(unit_simplex):
    order = weight_order((1, 2, 3))
    assert leading_ideal(toric_ideal(unit_simplex), order).is_zero


def test_leading_ideal_tie(pentagon):
    with pytest.raises(NonGenericWeightError) as e:
        leading_ideal(toric_ideal(pentagon), weight_order((0, 0, 0, 0, 0)))
    assert e.value.binomial is not None


def test_is_generic(pentagon, pentagon_weight):
    assert is_generic(pentagon, pentagon_weight)
    assert not is_generic(pentagon, (0, 0, 0, 0, 0))


def test_saturate_fixpoint(pentagon):
    once = toric_ideal(pentagon)
    twice = saturate(once)
    assert set(twice.generators) == set(once.generators)


def test_saturate_segment_and_zero():
    segment = saturate(lattice_ideal([[1, 1, 1], [0, 1, 2]]))
    assert segment.render() == ["x2^2 - x1*x3"]
    assert saturate(BinomialIdeal((), 2)).is_zero


def test_saturation_adds_missing_generators():
    # the lattice basis of the twisted cubic generates a strictly smaller ideal
    ideal = saturate(lattice_ideal([[1, 1, 1, 1], [0, 1, 2, 3]]))
    assert set(ideal.render()) == {"x3^2 - x2*x4", "x2*x3 - x1*x4", "x2^2 - x1*x3"}


def test_toric_ideal_is_reduced_basis(pentagon):
    gens, x = _as_sympy(toric_ideal(pentagon))
    reference = sympy.groebner(gens, *x, order="grevlex")
    assert set(sympy.expand(e) for e in reference.exprs) == set(sympy.expand(g) for g in gens)


def test_toric_ideal_vanishes_on_parametrization(pentagon):
    gens, x = _as_sympy(toric_ideal(pentagon))
    t = sympy.symbols("t0:3")
    image = {xi: sympy.Mul(*(tk**e for tk, e in zip(t, p))) for xi, p in zip(x, pentagon.points)}
    for g in gens:
        assert sympy.expand(g.subs(image)) == 0


def test_twisted_cubic_against_elimination():
    ideal = saturate(lattice_ideal([[1, 1, 1, 1], [0, 1, 2, 3]]))
    gens, x = _as_sympy(ideal)
    s, t = sympy.symbols("s t")
    param = [xi - t * s**i for i, xi in enumerate(x)]
    eliminated = sympy.groebner(param, t, s, *x, order="lex")
    kept = [e for e in eliminated.exprs if not e.has(s) and not e.has(t)]
    reference = sympy.groebner(kept, *x, order="grevlex")
    assert set(sympy.expand(e) for e in reference.exprs) == set(sympy.expand(g) for g in gens)


def test_reduce_members(pentagon, pentagon_weight):
    order = weight_order(pentagon_weight)
    basis = buchberger(toric_ideal(pentagon), order)
    for g in basis.generators:
        assert reduce(g, basis, order) is None
    member = Binomial.oriented((0, 2, 0, 1, 0), (1, 0, 2, 0, 0), order)
    assert reduce(member, basis, order) is None


def test_reduce_non_member(pentagon, pentagon_weight):
    order = weight_order(pentagon_weight)
    basis = buchberger(toric_ideal(pentagon), order)
    outsider = Binomial.oriented((1, 0, 0, 0, 0), (0, 1, 0, 0, 0), order)
    assert reduce(outsider, basis, order) is not None


def test_normal_forms_respect_grading(pentagon):
    ideal = toric_ideal(pentagon)
    for combo in combinations_with_replacement(range(5), 3):
        u = tuple(combo.count(i) for i in range(5))
        nf = normal_monomial(u, ideal.generators)
        assert grading_degree(nf, pentagon.points) == grading_degree(u, pentagon.points)
        assert not any(all(a <= b for a, b in zip(g.lead, nf)) for g in ideal.generators)


def test_s_pair(pentagon, pentagon_weight):
    order = weight_order(pentagon_weight)
    basis = buchberger(toric_ideal(pentagon), order)
    f, g = basis.generators[1], basis.generators[2]
    s = s_pair(f, g, order)
    assert s is not None
    assert reduce(s, basis, order) is None


def test_toric_ideal_cached(pentagon):
    assert toric_ideal(pentagon) is toric_ideal(pentagon)


@pytest.mark.parametrize("perm", list(permutations(range(3))))
@pytest.mark.parametrize("weight", [(0, 1, 0, 0, 1), (0, 0, 0, 0, 0)])
def test_reduced_basis_ignores_generator_order(pentagon, perm, weight):
    ideal = toric_ideal(pentagon)
    shuffled = BinomialIdeal(tuple(ideal.generators[i] for i in perm), ideal.n, ideal.grading)
    order = weight_order(weight)
    assert buchberger(shuffled, order).generators == buchberger(ideal, order).generators


def test_toric_ideal_seven_points():
    cfg = validate_configuration([(1, 1, 4), (1, 0, 0), (1, 4, 4), (1, 5, 1), (1, 0, 2), (1, 1, 0), (1, 5, 2)])
    ideal = toric_ideal(cfg)
    order = TermOrder.grevlex(cfg.n)
    assert is_groebner(ideal, order)
    for g in ideal.generators:
        assert grading_degree(g.lead, cfg.points) == grading_degree(g.trail, cfg.points)
    for g in lattice_ideal(cfg).generators:
        assert reduce(g, ideal, order) is None


def test_scaled_configuration_shares_saturation(pentagon):
    scaled = scale_axes(pentagon, (1, 2, 3))
    ideal = toric_ideal(scaled)
    assert ideal.generators == toric_ideal(pentagon).generators
    assert ideal.grading == scaled.points
    for g in ideal.generators:
        assert grading_degree(g.lead, scaled.points) == grading_degree(g.trail, scaled.points)
