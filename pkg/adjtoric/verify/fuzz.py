import logging
import warnings
from typing import Iterable, Optional

import numpy as np

from adjtoric.algebra import is_generic
from adjtoric.errors import AdjtoricError, ConfigurationError
from adjtoric.geometry import (
    PointConfiguration,
    lattice_index,
    random_generic_weight,
    scale_axes,
    total_volume,
    validate_configuration,
)
from adjtoric.linalg import determinant
from adjtoric.pipelines import algebraic_adjoint, geometric_adjoint
from adjtoric.utils import seeded_rng
from adjtoric.verify.checks import ALL_CHECKS, verify_theorem
from adjtoric.verify.report import FuzzReport

logger = logging.getLogger(__name__)

DEFAULT_BOUNDS = {"n_max": 8, "d_max": 3, "coord_max": 5}
# largest sizes the exhaustive subset enumeration is sized for
SUPPORTED_BOUNDS = {"n_max": 12, "d_max": 3}
DEFAULT_WEIGHTS_PER_CASE = 3
CASE_CHECKS = ("weight_independence", "conservation", "scaling")
ATTEMPTS_PER_SIZE = 25


def _standard_simplex(d: int) -> PointConfiguration:
    return validate_configuration([(1,) + tuple(int(i == k) for i in range(d)) for k in range(-1, d)])


def sample_configuration(rng: np.random.Generator, bounds: dict) -> PointConfiguration:
    """Random vertex configuration whose points generate Z^(d+1).

    Cross-section points are drawn uniformly from [0, coord_max]^d and the
    draw is rejected unless validation accepts it. When a size keeps
    failing the point count is lowered; the standard simplex is the last
    resort.
    """
    d = int(rng.integers(1, bounds["d_max"], endpoint=True))
    n = int(rng.integers(d + 1, max(bounds["n_max"], d + 1), endpoint=True))
    coord_max = bounds["coord_max"]
    while n >= d + 1:
        for _ in range(ATTEMPTS_PER_SIZE):
            cross = rng.integers(0, coord_max, size=(n, d), endpoint=True)
            points = [(1,) + tuple(int(x) for x in row) for row in cross]
            try:
                cfg = validate_configuration(points)
            except ConfigurationError:
                continue
            if lattice_index(cfg) == 1:
                return cfg
        logger.debug(f"no {n}-point configuration in dimension {d} after {ATTEMPTS_PER_SIZE} draws")
        n -= 1
    return _standard_simplex(d)


def _scaling_check(cfg: PointConfiguration, weight, rng: np.random.Generator) -> dict:
    """adj of the axis-scaled cone against det(D) * adj(D t), through both pipelines."""
    factors = (1,) + tuple(int(f) for f in rng.integers(1, 3, size=cfg.d, endpoint=True))
    scaled_cfg = scale_axes(cfg, factors)
    original, _ = geometric_adjoint(cfg, weight)
    scaled, _ = geometric_adjoint(scaled_cfg, weight)
    algebraic = algebraic_adjoint(scaled_cfg, weight).adjoint
    det = determinant([[f if i == j else 0 for j in range(len(factors))] for i, f in enumerate(factors)])
    expected = original.substitute_diagonal(factors) * det
    ok = scaled == expected and algebraic == expected
    return {
        "passed": ok,
        "factors": list(factors),
        "scaled": scaled.render(),
        "algebraic": algebraic.render(),
        "expected": expected.render(),
    }


def run_case(
    cfg: PointConfiguration,
    seed: int,
    case: int,
    weights_per_case: int = DEFAULT_WEIGHTS_PER_CASE,
    checks: Iterable[str] = ALL_CHECKS,
    case_checks: Iterable[str] = CASE_CHECKS,
) -> dict:
    """Verify one configuration under several generic weights.

    Errors are caught and recorded in the returned record; nothing escapes.
    """
    record = {
        "case": case,
        "seed": seed,
        "n": cfg.n,
        "d": cfg.d,
        "points": [list(p) for p in cfg.points],
        "weights": [],
        "polynomial": None,
        "checks": {},
        "failures": [],
    }
    checks = tuple(checks)
    polys, volumes = [], []
    try:
        for j in range(weights_per_case):
            w = random_generic_weight(cfg, (seed, case, j), accept=is_generic)
            record["weights"].append(list(w))
            report = verify_theorem(cfg, w, checks, seed=seed)
            for name, result in report.checks.items():
                record["checks"][name] = record["checks"].get(name, True) and result.passed
                if not result.passed:
                    record["failures"].append(dict(result.to_dict(), weight=list(w)))
            poly, tri = geometric_adjoint(cfg, w)
            polys.append(poly)
            volumes.append(total_volume(tri))

        if "weight_independence" in case_checks:
            record["checks"]["weight_independence"] = len(set(polys)) <= 1
            if not record["checks"]["weight_independence"]:
                record["failures"].append(
                    {"name": "weight_independence", "polynomials": sorted({p.render() for p in polys})}
                )
        if "conservation" in case_checks:
            expected_degree = cfg.n - cfg.d - 1
            conserved = len(set(volumes)) <= 1 and all(
                p.is_homogeneous(expected_degree) and all(c >= 0 for c in p.coefficients()) for p in polys
            )
            record["checks"]["conservation"] = conserved
            if not conserved:
                record["failures"].append({"name": "conservation", "volumes": volumes})
        if "scaling" in case_checks and polys:
            scaling = _scaling_check(cfg, record["weights"][0], seeded_rng(seed, case, weights_per_case))
            record["checks"]["scaling"] = scaling["passed"]
            if not scaling["passed"]:
                record["failures"].append(dict(scaling, name="scaling"))
        record["polynomial"] = polys[0].render() if polys else None
    except (AdjtoricError, AssertionError, ValueError) as e:
        logger.warning(f"case {case} raised {type(e).__name__}: {e}")
        record["checks"]["error"] = False
        record["failures"].append(
            {"name": "error", "type": type(e).__name__, "stage": getattr(e, "stage", None), "message": str(e)}
        )
    record["passed"] = all(record["checks"].values())
    return record


def fuzz(
    seed: int,
    cases: int,
    bounds: Optional[dict] = None,
    weights_per_case: int = DEFAULT_WEIGHTS_PER_CASE,
    checks: Iterable[str] = ALL_CHECKS,
    case_checks: Iterable[str] = CASE_CHECKS,
) -> FuzzReport:
    """Deterministic randomized verification.

    Case k draws its configuration from the stream keyed by (seed, k), so
    every case can be replayed on its own from the seed and its index.
    """
    bounds = dict(DEFAULT_BOUNDS, **(bounds or {}))
    if bounds["d_max"] < 1 or bounds["n_max"] < 2 or bounds["coord_max"] < 1:
        raise ValueError(f"Fuzz bounds must admit at least a segment, got {bounds}")
    if any(bounds[k] > limit for k, limit in SUPPORTED_BOUNDS.items()):
        warnings.warn(f"Fuzz bounds {bounds} exceed the supported sizes {SUPPORTED_BOUNDS}")
    report = FuzzReport(seed, bounds)
    checks, case_checks = tuple(checks), tuple(case_checks)
    unknown = (set(checks) - set(ALL_CHECKS)) | (set(case_checks) - set(CASE_CHECKS))
    if unknown:
        raise ValueError(f"Unknown checks: {sorted(unknown)}")
    for case in range(cases):
        cfg = sample_configuration(seeded_rng(seed, case), bounds)
        record = run_case(cfg, seed, case, weights_per_case, checks, case_checks)
        report.add(case, record)
        logger.info(f"[+] case {case}: n={cfg.n} d={cfg.d} {'ok' if record['passed'] else 'FAILED'}")
    return report
