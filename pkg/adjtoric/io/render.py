import json
from typing import Optional

import pandas as pd

from adjtoric.algebra import BinomialIdeal, render_monomial
from adjtoric.geometry import Triangulation, total_volume
from adjtoric.monomials import MonomialIdeal, PrimeComponent
from adjtoric.multidegree import MultiPoly


def _one_based(indices) -> str:
    return "{" + ",".join(str(i + 1) for i in indices) + "}"


def triangulation_document(tri: Triangulation) -> dict:
    return {
        "command": "triangulate",
        "weight": list(tri.weight),
        "simplices": [
            {
                "indices": [i + 1 for i in s.indices],
                "volume": s.normalized_volume,
                "certificate": [str(c) for c in s.certificate],
            }
            for s in tri.simplices
        ],
        "total_volume": total_volume(tri),
    }


def toric_document(weight, basis: BinomialIdeal, initial: MonomialIdeal) -> dict:
    return {
        "command": "toric",
        "weight": list(weight),
        "basis": basis.render(),
        # a reduced basis has the minimal generators of the initial ideal as its leads
        "initial_ideal": [render_monomial(g.lead) for g in basis.generators if g.lead in initial.generators],
        "zero": basis.is_zero,
    }


def polynomial_document(poly: MultiPoly) -> dict:
    return {"polynomial": poly.render(), "terms": poly.to_records()}


def component_document(component: PrimeComponent) -> dict:
    return {"support": [i + 1 for i in component.support], "multiplicity": component.multiplicity}


def adjoint_document(
    weight,
    pipeline: str,
    geometric: Optional[MultiPoly] = None,
    algebraic=None,
    factors=None,
) -> dict:
    out = {"command": "adjoint", "weight": list(weight), "pipeline": pipeline}
    if factors is not None:
        out["factors"] = list(factors)
    if geometric is not None:
        out["geometric"] = polynomial_document(geometric)
    if algebraic is not None:
        out["algebraic"] = dict(
            polynomial_document(algebraic.adjoint),
            components=[component_document(c) for c in algebraic.components],
            lattice_index=algebraic.lattice_index,
        )
    if geometric is not None and algebraic is not None:
        out["equal"] = geometric == algebraic.adjoint
    return out


def to_json(document: dict) -> str:
    return json.dumps(document, sort_keys=True)


def _format(value) -> str:
    return value if isinstance(value, str) else json.dumps(value, sort_keys=True)


def _witness_lines(witness: Optional[dict], indent: str) -> list:
    return [f"{indent}{key}: {_format(value)}" for key, value in sorted((witness or {}).items())]


def fuzz_document(report) -> dict:
    """Whole fuzz run as one document: summary rows plus every case record."""
    return {
        "command": "fuzz",
        "seed": report.seed,
        "bounds": report.bounds,
        "passed": report.passed,
        "summary": report.summary().to_dict("records"),
        "cases": report.records(),
    }


def _fuzz_text(document: dict) -> list:
    lines = [f"bounds: {_format(document['bounds'])}"]
    summary = pd.DataFrame(document["summary"], columns=["check", "passed", "failed"])
    lines.append(summary.to_string(index=False))
    for record in document["cases"]:
        status = "ok" if record["passed"] else "FAILED"
        lines.append(f"case {record['case']}: n={record['n']} d={record['d']} {status}")
        lines.append(f"  seed: {record['seed']}")
        lines.append(f"  points: {_format(record['points'])}")
        lines.append(f"  weights: {_format(record['weights'])}")
        lines.append(f"  adjoint: {record['polynomial']}")
        for name, passed in sorted(record["checks"].items()):
            lines.append(f"  {name:<20} {'ok' if passed else 'FAILED'}")
        for failure in record["failures"]:
            lines.append(f"  failure {failure['name']}:")
            lines.extend(_witness_lines({k: v for k, v in failure.items() if k != "name"}, "    "))
    lines.append(f"{len(document['cases'])} cases, seed {document['seed']}: {'PASSED' if document['passed'] else 'FAILED'}")
    return lines


def to_text(document: dict) -> str:
    """Human rendering of a command document.

    Carries the same data as the JSON rendering; structured values such as
    witnesses are printed as compact JSON.
    """
    command = document.get("command")
    lines = []
    if "weight" in document:
        lines.append(f"weight: {_format(document['weight'])}")
    if "factors" in document:
        lines.append(f"axis factors: {document['factors']}")
    if command == "triangulate":
        lines.append(
            "; ".join(f"{_one_based(i - 1 for i in s['indices'])} vol {s['volume']}" for s in document["simplices"])
        )
        for s in document["simplices"]:
            lines.append(f"  {_one_based(i - 1 for i in s['indices'])} certificate ({', '.join(s['certificate'])})")
        lines.append(f"total volume {document['total_volume']}")
    elif command == "toric":
        if document["zero"]:
            lines.append("zero ideal")
        else:
            lines.extend(document["basis"])
            lines.append("initial ideal: <" + ", ".join(document["initial_ideal"]) + ">")
    elif command == "adjoint":
        lines.append(f"pipeline: {document['pipeline']}")
        both = "geometric" in document and "algebraic" in document
        for key in ("geometric", "algebraic"):
            if key in document:
                prefix = f"{key}: " if both else ""
                lines.append(prefix + document[key]["polynomial"])
        if "algebraic" in document:
            for c in document["algebraic"]["components"]:
                support = ",".join(f"x{i}" for i in c["support"]) or "0"
                lines.append(f"  <{support}>: mult {c['multiplicity']}")
            lines.append(f"  lattice index {document['algebraic']['lattice_index']}")
        if both:
            lines.append("EQUAL" if document["equal"] else "NOT EQUAL")
    elif command == "verify":
        lines.append(f"points: {_format(document['points'])}")
        lines.append(f"seed: {document['seed']}")
        lines.append(f"lattice index: {document['lattice_index']}")
        lines.append(f"adjoint: {document['polynomial']}")
        for name, check in sorted(document["checks"].items()):
            lines.append(f"  {name:<16} {'ok' if check['passed'] else 'FAILED'}  {check['detail']}")
            lines.extend(_witness_lines(check.get("witness"), "      "))
        for stage_name, seconds in sorted(document.get("timings", {}).items()):
            lines.append(f"  time {stage_name:<14} {seconds:.6f}s")
        lines.append("PASSED" if document["passed"] else "FAILED")
    elif command == "fuzz":
        lines.extend(_fuzz_text(document))
    else:
        raise ValueError(f"Unknown document kind {command!r}")
    return "\n".join(lines)
