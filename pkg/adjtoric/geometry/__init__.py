from adjtoric.geometry.configuration import (
    PointConfiguration,
    WeightVector,
    as_weight,
    validate_configuration,
    scale_axes,
    clear_denominators,
    in_positive_orthant,
    lattice_index,
)
from adjtoric.geometry.triangulation import (
    DEFAULT_BOUND,
    MAX_WEIGHT_RETRIES,
    Simplex,
    Triangulation,
    normalized_volume,
    regular_triangulation,
    total_volume,
    random_generic_weight,
)

__all__ = [
    "PointConfiguration",
    "WeightVector",
    "as_weight",
    "validate_configuration",
    "scale_axes",
    "clear_denominators",
    "in_positive_orthant",
    "lattice_index",
    "DEFAULT_BOUND",
    "MAX_WEIGHT_RETRIES",
    "Simplex",
    "Triangulation",
    "normalized_volume",
    "regular_triangulation",
    "total_volume",
    "random_generic_weight",
]
