import os
import json
import logging
from dataclasses import dataclass
from typing import Optional, Tuple

from adjtoric.errors import ConfigurationError, InputError
from adjtoric.geometry import (
    PointConfiguration,
    WeightVector,
    as_weight,
    clear_denominators,
    scale_axes,
    validate_configuration,
)

"""
Input documents are single JSON objects:

    {"points": [[1, 0, 1], [1, 1, 1], ...], "weight": [0, 1, 0, 0, 1]}

``points`` is required; entries are integers or rational strings such as
"1/2". ``weight`` (one integer per point) and ``factors`` (positive axis
scaling factors, the first one 1) are optional. The bundled documents live
in the 'data' folder and can be referred to by name:

data/
    pentagon.json
    simplex.json
    square.json
    rational_pentagon.json
"""

logger = logging.getLogger(__name__)

PATH_ROOT = "data/"
AVAILABLE_INPUTS = ["pentagon", "simplex", "square", "rational_pentagon"]
FIELDS = ("points", "weight", "factors")


@dataclass(frozen=True)
class InputDocument:
    configuration: PointConfiguration
    weight: Optional[WeightVector] = None
    factors: Optional[Tuple[int, ...]] = None
    source: str = "<string>"


def _locate(text: str, key: str) -> Optional[int]:
    """Line of the first occurrence of ``"key"`` in the raw document."""
    pos = text.find(f'"{key}"')
    return None if pos < 0 else text.count("\n", 0, pos) + 1


def _is_integer(x) -> bool:
    return isinstance(x, int) and not isinstance(x, bool)


def _parse_points(raw, text: str):
    line = _locate(text, "points")
    if not isinstance(raw, list) or not raw:
        raise InputError("expected a nonempty list of points", line=line, field="points")
    for i, p in enumerate(raw):
        if not isinstance(p, list) or not all(_is_integer(x) or isinstance(x, str) for x in p):
            raise InputError(
                "expected a list of integers or rational strings", line=line, field=f"points[{i}]"
            )
    try:
        if any(isinstance(x, str) for p in raw for x in p):
            return clear_denominators(raw)
        return validate_configuration(raw), None
    except ConfigurationError as e:
        field = "points" if e.index is None else f"points[{e.index}]"
        raise InputError(f"{e} ({e.reason})", line=line, field=field) from e


def parse_document(text: str, source: str = "<string>") -> InputDocument:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise InputError(e.msg, line=e.lineno, column=e.colno) from e
    if not isinstance(data, dict):
        raise InputError("expected a JSON object with a 'points' field", line=1)
    for key in data:
        if key not in FIELDS:
            raise InputError(f"unknown field (expected one of {', '.join(FIELDS)})", line=_locate(text, key), field=key)
    if "points" not in data:
        raise InputError("missing required field", field="points")

    cfg, factors = _parse_points(data["points"], text)

    if data.get("factors") is not None:
        raw = data["factors"]
        if not isinstance(raw, list) or not all(_is_integer(f) for f in raw):
            raise InputError("expected a list of integers", line=_locate(text, "factors"), field="factors")
        try:
            cfg = scale_axes(cfg, raw)
        except (ValueError, ConfigurationError) as e:
            raise InputError(str(e), line=_locate(text, "factors"), field="factors") from e
        factors = tuple(raw) if factors is None else tuple(a * b for a, b in zip(factors, raw))

    weight = None
    if data.get("weight") is not None:
        raw = data["weight"]
        if not isinstance(raw, list) or not all(_is_integer(w) for w in raw):
            raise InputError("expected a list of integers", line=_locate(text, "weight"), field="weight")
        try:
            weight = as_weight(raw, cfg.n)
        except ValueError as e:
            raise InputError(str(e), line=_locate(text, "weight"), field="weight") from e

    return InputDocument(cfg, weight, factors, source)


def read_document(path: str) -> InputDocument:
    """Read a document from ``path`` or, failing that, a bundled one by name."""
    if not os.path.exists(path) and path in AVAILABLE_INPUTS:
        path = os.path.join(PATH_ROOT, f"{path}.json")
    try:
        with open(path) as f:
            text = f.read()
    except OSError as e:
        raise InputError(f"cannot read {path}: {e.strerror}") from e
    logger.debug(f"read {path}")
    return parse_document(text, source=path)
