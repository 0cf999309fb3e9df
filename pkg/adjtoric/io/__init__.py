from adjtoric.io.reader import InputDocument, parse_document, read_document, AVAILABLE_INPUTS
from adjtoric.io.render import (
    triangulation_document,
    toric_document,
    adjoint_document,
    fuzz_document,
    polynomial_document,
    to_json,
    to_text,
)

__all__ = [
    "InputDocument",
    "parse_document",
    "read_document",
    "AVAILABLE_INPUTS",
    "triangulation_document",
    "toric_document",
    "adjoint_document",
    "fuzz_document",
    "polynomial_document",
    "to_json",
    "to_text",
]
