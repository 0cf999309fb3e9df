from dataclasses import asdict, dataclass
from typing import Optional

from adjtoric.geometry import PointConfiguration, in_positive_orthant
from adjtoric.multidegree.poly import MultiPoly
from adjtoric.utils import seeded_rng


@dataclass(frozen=True)
class Diagnostics:
    """Necessary conditions for a covolume polynomial, and a volume check.

    ``value_at_e0`` is p(1, 0, ..., 0); every vertex has first coordinate 1,
    so it equals the total normalized volume when that is known.
    """

    expected_degree: int
    degree: Optional[int]
    homogeneous: bool
    nonnegative: bool
    value_at_e0: int
    total_volume: Optional[int]
    positive_orthant: bool

    @property
    def volume_matches(self) -> bool:
        return self.total_volume is None or self.value_at_e0 == self.total_volume

    @property
    def passed(self) -> bool:
        return self.homogeneous and self.nonnegative and self.volume_matches

    def to_dict(self) -> dict:
        return asdict(self)


def diagnostics(p: MultiPoly, cfg: PointConfiguration, volume: Optional[int] = None) -> Diagnostics:
    expected = cfg.n - cfg.d - 1
    e0 = (1,) + (0,) * cfg.d
    return Diagnostics(
        expected_degree=expected,
        degree=p.degree,
        homogeneous=p.is_homogeneous(expected),
        nonnegative=all(c >= 0 for c in p.coefficients()),
        value_at_e0=p.evaluate(e0),
        total_volume=volume,
        positive_orthant=in_positive_orthant(cfg),
    )


def agree_at_random_points(p: MultiPoly, q: MultiPoly, seed: int, count: int = 5, bound: int = 100) -> bool:
    """Evaluate both polynomials at ``count`` seeded integer points."""
    if p.num_vars != q.num_vars:
        return False
    rng = seeded_rng(seed)
    for _ in range(count):
        point = [int(x) for x in rng.integers(-bound, bound, size=p.num_vars, endpoint=True)]
        if p.evaluate(point) != q.evaluate(point):
            return False
    return True
