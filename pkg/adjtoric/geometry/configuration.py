import logging
import warnings
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import gcd, lcm
from typing import Sequence, Tuple

import numpy as np

from adjtoric.errors import ConfigurationError
from adjtoric.linalg import as_int_matrix, determinant, rank, solve_rational

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class PointConfiguration:
    """Vertex rays of a pointed cone, lifted to first coordinate 1.

    Build through ``validate_configuration``; the constructor itself does not
    check anything. Points are kept in input order, so index i here is
    variable x_{i+1} and vertex v_{i+1} in every rendering.
    """

    points: Tuple[Tuple[int, ...], ...]

    @property
    def n(self) -> int:
        return len(self.points)

    @property
    def d(self) -> int:
        return len(self.points[0]) - 1

    @property
    def matrix(self) -> np.ndarray:
        """The (d+1) x n matrix A whose columns are the points."""
        return as_int_matrix(self.points).T.copy()

    def columns(self, indices: Sequence[int]) -> np.ndarray:
        return as_int_matrix([self.points[i] for i in indices]).T.copy()


@dataclass(frozen=True)
class WeightVector:
    weights: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "weights", tuple(int(w) for w in self.weights))

    def __len__(self):
        return len(self.weights)

    def __iter__(self):
        return iter(self.weights)

    def __getitem__(self, i):
        return self.weights[i]


def as_weight(weight, n: int) -> WeightVector:
    w = weight if isinstance(weight, WeightVector) else WeightVector(tuple(weight))
    if len(w) != n:
        raise ValueError(f"Weight has length {len(w)}, configuration has {n} points")
    return w


def _to_int(x) -> int:
    value = int(x)
    if value != x:
        raise ValueError(f"{x!r} is not an integer")
    return value


def _in_cone_of(point, others) -> bool:
    """Exact test: is ``point`` a nonnegative combination of ``others``?

    By Caratheodory it suffices to look at subsets of size at most d+1; for
    each subset the canonical rational solution is tested for
    nonnegativity.
    """
    dim = len(point)
    for size in range(1, min(dim, len(others)) + 1):
        for subset in combinations(others, size):
            x = solve_rational(as_int_matrix(subset).T.copy(), point)
            if x is not None and all(xi >= 0 for xi in x):
                return True
    return False


def validate_configuration(points) -> PointConfiguration:
    """Check the points and return them as a PointConfiguration.

    Rejects (in this order) malformed input, points whose first coordinate
    is not 1, duplicates, configurations that are not full-dimensional and
    points that are not vertices of the convex hull.
    """
    try:
        points = tuple(tuple(_to_int(x) for x in p) for p in points)
    except (TypeError, ValueError) as e:
        raise ConfigurationError(f"Points must be integer vectors: {e}", "malformed") from e
    if not points or not points[0]:
        raise ConfigurationError("Configuration has no points", "malformed")
    width = len(points[0])
    for i, p in enumerate(points):
        if len(p) != width:
            raise ConfigurationError(
                f"Point {i + 1} has {len(p)} coordinates, expected {width}", "malformed", i
            )
    for i, p in enumerate(points):
        if p[0] != 1:
            raise ConfigurationError(
                f"Point {i + 1} has first coordinate {p[0]}, expected 1", "non-lifted", i
            )
    seen = {}
    for i, p in enumerate(points):
        if p in seen:
            raise ConfigurationError(
                f"Point {i + 1} duplicates point {seen[p] + 1}", "duplicate", i
            )
        seen[p] = i

    if len(points) < width or rank(as_int_matrix(points)) != width:
        raise ConfigurationError(
            f"Configuration of {len(points)} points does not span R^{width}", "rank-deficient"
        )

    for i, p in enumerate(points):
        others = points[:i] + points[i + 1 :]
        if _in_cone_of(p, others):
            raise ConfigurationError(
                f"Point {i + 1} {p} lies in the convex hull of the others", "non-vertex", i
            )

    logger.debug(f"valid configuration of {len(points)} points in dimension {width - 1}")
    return PointConfiguration(points)


def scale_axes(cfg: PointConfiguration, factors: Sequence[int]) -> PointConfiguration:
    """Multiply coordinate k of every point by factors[k].

    factors[0] must be 1 so the lifting coordinate is preserved.
    """
    factors = tuple(int(f) for f in factors)
    if len(factors) != cfg.d + 1:
        raise ValueError(f"Expected {cfg.d + 1} scaling factors, got {len(factors)}")
    if factors[0] != 1:
        raise ValueError("The first scaling factor must be 1")
    if any(f <= 0 for f in factors):
        raise ValueError(f"Scaling factors must be positive, got {factors}")

    points = [tuple(f * x for f, x in zip(factors, p)) for p in cfg.points]
    assert len(set(points)) == len(points), "positive scaling cannot merge points"
    return validate_configuration(points)


def clear_denominators(points) -> Tuple[PointConfiguration, Tuple[int, ...]]:
    """Scale rational points to an integral configuration.

    Coordinate k is multiplied by the lcm of the denominators appearing in
    it; the first coordinate must already be 1. Returns the configuration
    and the factors used.
    """
    try:
        rational = [tuple(Fraction(x) for x in p) for p in points]
    except (TypeError, ValueError, ZeroDivisionError) as e:
        raise ConfigurationError(f"Points must be rational vectors: {e}", "malformed") from e
    if not rational or not rational[0]:
        raise ConfigurationError("Configuration has no points", "malformed")
    width = len(rational[0])
    if any(len(p) != width for p in rational):
        raise ConfigurationError("Points have different lengths", "malformed")
    for i, p in enumerate(rational):
        if p[0] != 1:
            raise ConfigurationError(
                f"Point {i + 1} has first coordinate {p[0]}, expected 1", "non-lifted", i
            )

    factors = tuple(lcm(*(p[k].denominator for p in rational)) for k in range(width))
    if any(f != 1 for f in factors):
        warnings.warn(f"Rational coordinates scaled by axis factors {factors}")
    scaled = [tuple(int(f * x) for f, x in zip(factors, p)) for p in rational]
    return validate_configuration(scaled), factors


def in_positive_orthant(cfg: PointConfiguration) -> bool:
    """Whether every cross-section coordinate is nonnegative."""
    return all(x >= 0 for p in cfg.points for x in p[1:])


def lattice_index(cfg: PointConfiguration) -> int:
    """[Z^(d+1) : ZA], the gcd of the maximal minors of A.

    Multiplicities of the initial ideal count volumes in units of ZA, so
    they equal normalized volumes exactly when this is 1.
    """
    g = 0
    for subset in combinations(range(cfg.n), cfg.d + 1):
        g = gcd(g, determinant(cfg.columns(subset)))
        if g == 1:
            break
    return abs(g)
