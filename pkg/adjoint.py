import os
import sys
import logging
import argparse

from adjtoric.algebra import buchberger, is_generic, leading_ideal, toric_ideal, weight_order
from adjtoric.errors import ConfigurationError, InputError, NonGenericWeightError, WeightSearchError
from adjtoric.geometry import DEFAULT_BOUND, as_weight, random_generic_weight, regular_triangulation
from adjtoric.io import (
    adjoint_document,
    fuzz_document,
    read_document,
    to_json,
    to_text,
    toric_document,
    triangulation_document,
)
from adjtoric.pipelines import algebraic_adjoint, geometric_adjoint
from adjtoric.utils import ensure_dir
from adjtoric.verify import ALL_CHECKS, DEFAULT_BOUNDS, DEFAULT_WEIGHTS_PER_CASE, fuzz, verify_theorem

logger = logging.getLogger("adjoint")

EXIT_OK, EXIT_FAILED, EXIT_INPUT, EXIT_GENERICITY = 0, 1, 2, 3


def _int_list(text: str):
    try:
        return [int(x) for x in text.replace(" ", "").split(",") if x]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def read_args(argv=None):
    args = argparse.ArgumentParser(description="Adjoint polynomials of pointed rational cones")
    commands = args.add_subparsers(dest="command", required=True)

    def common(parser, needs_input=True):
        parser.add_argument("input", nargs=None if needs_input else "?", default=None,
                            help="input document, or the name of a bundled one (e.g. pentagon)")
        parser.add_argument("--weight", type=_int_list, default=None, help="e.g. 0,1,0,0,1")
        parser.add_argument("--seed", type=int, default=0)
        parser.add_argument("--bound", type=int, default=DEFAULT_BOUND)
        parser.add_argument("--format", type=str, default="text", choices=["text", "json"])
        parser.add_argument("--verbose", "-v", action="count", default=0)

    common(commands.add_parser("triangulate", help="regular triangulation with volumes"))
    common(commands.add_parser("toric", help="reduced Groebner basis and initial ideal"))
    adjoint = commands.add_parser("adjoint", help="the adjoint polynomial")
    common(adjoint)
    adjoint.add_argument("--pipeline", type=str, default="both", choices=["geometric", "algebraic", "both"])

    verify = commands.add_parser("verify", help="cross-check both pipelines")
    common(verify, needs_input=False)
    verify.add_argument("--fuzz", type=int, nargs=2, metavar=("SEED", "CASES"), default=None)
    verify.add_argument("--n-max", type=int, default=DEFAULT_BOUNDS["n_max"])
    verify.add_argument("--d-max", type=int, default=DEFAULT_BOUNDS["d_max"])
    verify.add_argument("--coord-max", type=int, default=DEFAULT_BOUNDS["coord_max"])
    verify.add_argument("--weights-per-case", type=int, default=DEFAULT_WEIGHTS_PER_CASE)
    verify.add_argument("--checks", type=str, default=",".join(ALL_CHECKS))
    verify.add_argument("--timings", action="store_true")
    verify.add_argument("--output", type=str, default=None, help="write the fuzz report (JSON lines) here")

    args = args.parse_args(argv)
    if args.command == "verify" and args.input is None and args.fuzz is None:
        commands.choices["verify"].error("an input document or --fuzz SEED CASES is required")
    return args


def _resolve_weight(config, doc, algebraic: bool):
    if config["weight"] is not None:
        try:
            return as_weight(config["weight"], doc.configuration.n)
        except ValueError as e:
            raise InputError(str(e), field="--weight") from e
    if doc.weight is not None:
        return doc.weight
    if config["bound"] < 1:
        raise InputError(f"must be at least 1, got {config['bound']}", field="--bound")
    accept = is_generic if algebraic else None
    w = random_generic_weight(doc.configuration, config["seed"], config["bound"], accept=accept)
    logger.info(f"[+] drew weight {tuple(w)} from seed {config['seed']}")
    return w


def _emit(config, document):
    print(to_json(document) if config["format"] == "json" else to_text(document))


def _checks(config):
    checks = tuple(c for c in config["checks"].split(",") if c)
    unknown = sorted(set(checks) - set(ALL_CHECKS))
    if unknown:
        raise InputError(f"unknown checks {unknown} (expected some of {', '.join(ALL_CHECKS)})", field="--checks")
    return checks


def command_triangulate(config) -> int:
    doc = read_document(config["input"])
    w = _resolve_weight(config, doc, algebraic=False)
    _emit(config, triangulation_document(regular_triangulation(doc.configuration, w)))
    return EXIT_OK


def command_toric(config) -> int:
    doc = read_document(config["input"])
    w = _resolve_weight(config, doc, algebraic=True)
    order = weight_order(w)
    basis = buchberger(toric_ideal(doc.configuration), order)
    _emit(config, toric_document(w, basis, leading_ideal(basis, order)))
    return EXIT_OK


def command_adjoint(config) -> int:
    doc = read_document(config["input"])
    pipeline = config["pipeline"]
    w = _resolve_weight(config, doc, algebraic=pipeline != "geometric")
    geometric = geometric_adjoint(doc.configuration, w)[0] if pipeline != "algebraic" else None
    algebraic = algebraic_adjoint(doc.configuration, w) if pipeline != "geometric" else None
    document = adjoint_document(w, pipeline, geometric, algebraic, doc.factors)
    _emit(config, document)
    return EXIT_FAILED if document.get("equal") is False else EXIT_OK


def command_verify(config) -> int:
    checks = _checks(config)
    if config["fuzz"] is not None:
        seed, cases = config["fuzz"]
        bounds = {"n_max": config["n_max"], "d_max": config["d_max"], "coord_max": config["coord_max"]}
        if cases < 0 or config["weights_per_case"] < 1:
            raise InputError(f"need CASES >= 0 and at least one weight per case, got {cases}", field="--fuzz")
        if bounds["d_max"] < 1 or bounds["n_max"] < 2 or bounds["coord_max"] < 1:
            raise InputError(f"bounds must admit at least a segment, got {bounds}", field="--n-max/--d-max/--coord-max")
        report = fuzz(seed, cases, bounds, config["weights_per_case"], checks)
        lines = report.to_json_lines()
        if config["output"]:
            ensure_dir(os.path.dirname(config["output"]))
            with open(config["output"], "w") as f:
                f.write(lines + ("\n" if lines else ""))
            logger.info(f"[+] wrote {len(report.cases)} cases to {config['output']}")
        if config["format"] == "json":
            if lines:
                print(lines)
        else:
            print(to_text(fuzz_document(report)))
        return EXIT_OK if report.passed else EXIT_FAILED

    doc = read_document(config["input"])
    w = _resolve_weight(config, doc, algebraic=True)
    report = verify_theorem(doc.configuration, w, checks, seed=config["seed"])
    document = dict(report.to_dict(include_timings=config["timings"]), command="verify")
    _emit(config, document)
    return EXIT_OK if report.passed else EXIT_FAILED


COMMANDS = {
    "triangulate": command_triangulate,
    "toric": command_toric,
    "adjoint": command_adjoint,
    "verify": command_verify,
}


def main(argv=None) -> int:
    config = vars(read_args(argv))
    level = [logging.WARNING, logging.INFO, logging.DEBUG][min(config["verbose"], 2)]
    logging.basicConfig(format="%(name)s:%(levelname)s:%(message)s", level=level)

    try:
        return COMMANDS[config["command"]](config)
    except (NonGenericWeightError, WeightSearchError) as e:
        print(f"genericity error: {e}", file=sys.stderr)
        return EXIT_GENERICITY
    except (InputError, ConfigurationError) as e:
        print(f"input error: {e}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
