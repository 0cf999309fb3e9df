import logging
import warnings
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Callable, FrozenSet, Optional, Sequence, Tuple, Union

from adjtoric.errors import DegenerateSimplexError, NonGenericWeightError, WeightSearchError
from adjtoric.geometry.configuration import PointConfiguration, WeightVector, as_weight
from adjtoric.linalg import determinant, solve_rational
from adjtoric.utils import seeded_rng

logger = logging.getLogger(__name__)

DEFAULT_BOUND = 1000
MAX_WEIGHT_RETRIES = 64


@dataclass(frozen=True)
class Simplex:
    """A maximal simplex of a regular triangulation.

    ``indices`` are 0-based and sorted. ``certificate`` is the vector c with
    v_j . c = w_j on the simplex and v_j . c < w_j off it.
    """

    indices: Tuple[int, ...]
    normalized_volume: int
    certificate: Tuple[Fraction, ...]


@dataclass(frozen=True)
class Triangulation:
    configuration: PointConfiguration
    weight: WeightVector
    simplices: Tuple[Simplex, ...]

    @property
    def facets(self) -> FrozenSet[Tuple[int, ...]]:
        return frozenset(s.indices for s in self.simplices)


def normalized_volume(cfg: PointConfiguration, indices: Sequence[int]) -> int:
    """d! times the Euclidean volume: |det| of the lifted vertex matrix."""
    indices = tuple(sorted(indices))
    if len(indices) != cfg.d + 1:
        raise ValueError(f"A simplex needs {cfg.d + 1} points, got {len(indices)}")
    vol = abs(determinant(cfg.columns(indices)))
    if vol == 0:
        raise DegenerateSimplexError(indices)
    return vol


def _dot(v, c) -> Fraction:
    return sum((x * y for x, y in zip(v, c)), Fraction(0))


def regular_triangulation(cfg: PointConfiguration, weight) -> Triangulation:
    """Regular triangulation induced by lifting point i to height weight[i].

    Every (d+1)-subset with nonzero determinant is tried: the certificate c
    solves v_j . c = w_j on the subset, and the subset is a simplex exactly
    when v_j . c < w_j for every other point. If the hyperplane supports the
    lower hull but passes through another lifted point, the lower face is
    not a simplex and the weight is rejected.
    """
    w = as_weight(weight, cfg.n)
    simplices = []
    for subset in combinations(range(cfg.n), cfg.d + 1):
        sub = cfg.columns(subset)
        det = determinant(sub)
        if det == 0:
            continue
        c = solve_rational(sub.T.copy(), [w[i] for i in subset])
        assert c is not None, "nonsingular system must be solvable"

        ties = []
        lower = True
        for j in range(cfg.n):
            if j in subset:
                continue
            height = _dot(cfg.points[j], c)
            if height > w[j]:
                lower = False
                break
            if height == w[j]:
                ties.append(j)
        if not lower:
            continue
        if ties:
            raise NonGenericWeightError(
                f"Weight {tuple(w)} is not generic: point {ties[0] + 1} lies on the lower "
                f"face through {{{','.join(str(i + 1) for i in subset)}}}",
                subset=subset,
                index=ties[0],
            )
        simplices.append(Simplex(subset, abs(det), tuple(c)))

    logger.debug(f"triangulation with {len(simplices)} simplices for weight {tuple(w)}")
    return Triangulation(cfg, w, tuple(simplices))


def total_volume(tri: Triangulation) -> int:
    return sum(s.normalized_volume for s in tri.simplices)


def random_generic_weight(
    cfg: PointConfiguration,
    seed: Union[int, Tuple[int, ...]],
    bound: int = DEFAULT_BOUND,
    accept: Optional[Callable[[PointConfiguration, WeightVector], bool]] = None,
    max_retries: int = MAX_WEIGHT_RETRIES,
) -> WeightVector:
    """Deterministic generic weight with entries in [0, bound].

    Attempt k draws from the stream keyed by (seed, k); ``seed`` may itself
    be a tuple of keys. A draw is kept when the triangulation succeeds and,
    if given, ``accept(cfg, w)`` holds.
    """
    if bound < 1:
        raise ValueError(f"bound must be at least 1, got {bound}")
    keys = tuple(seed) if isinstance(seed, tuple) else (seed,)
    for attempt in range(max_retries):
        rng = seeded_rng(*keys, attempt)
        w = WeightVector(tuple(int(x) for x in rng.integers(0, bound, size=cfg.n, endpoint=True)))
        try:
            regular_triangulation(cfg, w)
        except NonGenericWeightError as e:
            logger.debug(f"attempt {attempt}: {e}")
            continue
        if accept is not None and not accept(cfg, w):
            logger.debug(f"attempt {attempt}: weight {tuple(w)} rejected by acceptance check")
            continue
        if attempt > max_retries // 2:
            warnings.warn(f"Generic weight found only after {attempt + 1} draws; consider a larger bound")
        return w
    raise WeightSearchError(
        f"No generic weight in [0, {bound}] after {max_retries} draws (seed {seed}); bound too small for n={cfg.n}"
    )
