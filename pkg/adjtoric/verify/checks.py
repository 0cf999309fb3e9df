import logging
from collections import defaultdict
from itertools import combinations_with_replacement
from typing import Iterable, Optional

from adjtoric.algebra import BinomialIdeal, grading_degree, normal_monomial, render_monomial
from adjtoric.geometry import PointConfiguration, as_weight, total_volume
from adjtoric.monomials import (
    PrimeComponent,
    SimplicialComplex,
    initial_complex,
    multiplicity,
    radical,
    stanley_reisner_ideal,
)
from adjtoric.multidegree import agree_at_random_points, diagnostics
from adjtoric.pipelines import algebraic_adjoint, geometric_adjoint
from adjtoric.utils import stage
from adjtoric.verify.report import CheckResult, VerificationReport

logger = logging.getLogger(__name__)

ALL_CHECKS = ("theorem", "complex", "volume", "stanley_reisner", "diagnostics", "membership")
MEMBERSHIP_DEGREE = 4


def _render_facets(facets) -> list:
    return sorted([i + 1 for i in f] for f in facets)


def membership_check(cfg: PointConfiguration, toric: BinomialIdeal, max_degree: int = MEMBERSHIP_DEGREE) -> CheckResult:
    """Every A-homogeneous binomial of degree at most ``max_degree`` lies in the ideal.

    Monomials are grouped by A-degree; x^u - x^v is in the ideal exactly
    when x^u and x^v have the same normal form, so every group must share
    a single normal form.
    """
    grading = tuple(tuple(p) for p in cfg.points)
    groups = defaultdict(set)
    for degree in range(max_degree + 1):
        for combo in combinations_with_replacement(range(cfg.n), degree):
            u = [0] * cfg.n
            for i in combo:
                u[i] += 1
            u = tuple(u)
            groups[grading_degree(u, grading)].add((normal_monomial(u, toric.generators), u))
    for degree, members in groups.items():
        forms = {nf for nf, _ in members}
        if len(forms) > 1:
            ordered = sorted(members)
            lead = ordered[0][1]
            trail = next(u for nf, u in ordered if nf != ordered[0][0])
            return CheckResult(
                "membership",
                False,
                f"{render_monomial(lead)} - {render_monomial(trail)} does not reduce to zero",
                {"degree": list(degree), "normal_forms": sorted(render_monomial(f) for f in forms)},
            )
    return CheckResult("membership", True, f"{len(groups)} degree classes up to degree {max_degree}")


def verify_theorem(
    cfg: PointConfiguration,
    weight,
    checks: Iterable[str] = ALL_CHECKS,
    seed: Optional[int] = None,
) -> VerificationReport:
    """Run both pipelines for one weight and compare them.

    Pipeline errors propagate with their ``stage`` attribute set; a
    non-generic weight raises NonGenericWeightError.
    """
    checks = tuple(checks)
    unknown = set(checks) - set(ALL_CHECKS)
    if unknown:
        raise ValueError(f"Unknown checks: {sorted(unknown)}")
    w = as_weight(weight, cfg.n)
    report = VerificationReport([list(p) for p in cfg.points], list(w), seed)

    geo, tri = geometric_adjoint(cfg, w, report.timings)
    alg = algebraic_adjoint(cfg, w, report.timings)
    report.polynomial = geo.render()
    report.lattice_index = alg.lattice_index

    with stage("checks", report.timings):
        if "theorem" in checks:
            diff = geo.first_difference(alg.adjoint)
            if diff is None:
                report.add(CheckResult("theorem", True, "geometric and algebraic adjoints are equal"))
            else:
                exponent, left, right = diff
                report.add(
                    CheckResult(
                        "theorem",
                        False,
                        f"coefficient of t^{list(exponent)}: {left} != {right}",
                        {
                            "geometric": geo.render(),
                            "algebraic": alg.adjoint.render(),
                            "exponent": list(exponent),
                        },
                    )
                )

        if "complex" in checks:
            complex_ = initial_complex(alg.initial)
            ok = complex_.facets == tri.facets
            report.add(
                CheckResult(
                    "complex",
                    ok,
                    "initial complex equals the triangulation" if ok else "facets differ",
                    None
                    if ok
                    else {
                        "initial_complex": _render_facets(complex_.facets),
                        "triangulation": _render_facets(tri.facets),
                    },
                )
            )

        if "volume" in checks:
            mismatches = []
            for simplex in tri.simplices:
                support = tuple(i for i in range(cfg.n) if i not in simplex.indices)
                try:
                    mult = multiplicity(alg.initial, PrimeComponent(support)) * alg.lattice_index
                except AssertionError:
                    mult = None
                if mult != simplex.normalized_volume:
                    mismatches.append(
                        {
                            "simplex": [i + 1 for i in simplex.indices],
                            "volume": simplex.normalized_volume,
                            "multiplicity": mult,
                        }
                    )
            report.add(
                CheckResult(
                    "volume",
                    not mismatches,
                    f"{len(tri.simplices)} simplices" if not mismatches else f"{len(mismatches)} mismatches",
                    {"mismatches": mismatches} if mismatches else None,
                )
            )

        if "stanley_reisner" in checks:
            rad = radical(alg.initial)
            sr = stanley_reisner_ideal(SimplicialComplex(cfg.n, tri.facets))
            ok = rad == sr
            report.add(
                CheckResult(
                    "stanley_reisner",
                    ok,
                    rad.render() if ok else f"{rad.render()} != {sr.render()}",
                )
            )

        if "diagnostics" in checks:
            diag = diagnostics(geo, cfg, total_volume(tri))
            agree = agree_at_random_points(geo, alg.adjoint, seed if seed is not None else 0)
            report.add(
                CheckResult(
                    "diagnostics",
                    diag.passed and agree,
                    f"degree {diag.degree}, p(e0) = {diag.value_at_e0}",
                    None if diag.passed and agree else dict(diag.to_dict(), agree_at_points=agree),
                )
            )

        if "membership" in checks:
            report.add(membership_check(cfg, alg.toric))

    for failure in report.failures():
        logger.warning(f"check {failure.name} failed for weight {tuple(w)}: {failure.detail}")
    return report
