"""Command-line front end.

Every subcommand prints one report ``{command, inputs, payload, version}`` as
JSON (default) or as a TSV table.  Exit status: 0 on success, 2 on usage
errors, 3 when a certificate comes back false.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from pathlib import Path

from . import __version__
from . import homology as hom
from .braid import (
    BraidError,
    BraidWord,
    RibbonBraid,
    all_reduced_words,
    braid_cancel,
    braids_equal,
    cable,
    is_trivial,
    permutation_of,
    random_braid_word,
)
from .oracle import oracle_homology
from .surface_reps import (
    check_braid_relations,
    check_detection_diagram,
    check_disjoint_alphabets,
    check_J_equivariance,
    check_squares_compatibility,
    faithfulness_sample,
    h1_action,
    h1_det,
    make_rep,
)

EXIT_OK, EXIT_USAGE, EXIT_FALSIFIED = 0, 2, 3

DEFAULT_CHECK = {
    "mirror": "detection",
    "szepietowski": "squares",
    "operadic": "disjoint",
    "artin": "braid-relations",
    "symplectic": "braid-relations",
}


class UsageError(Exception):
    pass


def _field(text: str) -> int:
    t = text.strip().upper()
    if t in ("Q", "0"):
        return 0
    if t.startswith("F"):
        t = t[1:]
    try:
        return int(t)
    except ValueError:
        raise UsageError(f"cannot parse field {text!r}; use Q or a prime") from None


def _word(args, text: str | None = None) -> BraidWord:
    return BraidWord.parse(args.word if text is None else text, args.strands)


# -- braid -------------------------------------------------------------------

def cmd_braid_cancel(args):
    w = braid_cancel(_word(args))
    return w.to_json(), None


def cmd_braid_permutation(args):
    perm = permutation_of(_word(args))
    return {"images": list(perm.images), "cycles": str(perm)}, None


def cmd_braid_trivial(args):
    return {"trivial": is_trivial(_word(args))}, None


def cmd_braid_equal(args):
    return {"equal": braids_equal(_word(args), _word(args, args.other))}, None


def cmd_braid_cable(args):
    outer = RibbonBraid.from_json(json.loads(args.outer))
    inner = [BraidWord.from_json(d) for d in json.loads(args.inner)]
    return cable(outer, inner).to_json(), None


# -- rep ---------------------------------------------------------------------

def _corpus(args, strands: int) -> list[BraidWord]:
    if args.corpus:
        lines = Path(args.corpus).read_text().splitlines()
        return [BraidWord.parse(line, strands) for line in lines if line.strip() and not line.startswith("#")]
    if args.random:
        rng = random.Random(args.seed)
        return [random_braid_word(rng, strands, rng.randint(1, args.length)) for _ in range(args.random)]
    return list(all_reduced_words(strands, args.length))


def cmd_rep_eval(args):
    rep = make_rep(args.name, args.g)
    w = BraidWord.parse(args.word, rep.strands)
    return {"name": rep.name, "target_rank": rep.target_rank, "image": rep.to_json(rep.eval(w))}, None


def cmd_rep_certify(args):
    rep = make_rep(args.name, args.g)
    check = args.check or DEFAULT_CHECK[rep.name]
    if check == "braid-relations":
        cert = check_braid_relations(rep)
    elif check == "disjoint":
        cert = check_disjoint_alphabets(args.g)
    else:
        words = _corpus(args, rep.strands)
        if check == "detection":
            cert = check_detection_diagram(rep, words)
        elif check == "squares":
            cert = check_squares_compatibility(rep, words)
        elif check == "faithfulness":
            cert = faithfulness_sample(rep, words)
        elif check == "j-equivariance":
            if rep.involution is None:
                raise UsageError(f"{rep.name} carries no involution")
            cert = check_J_equivariance(rep, rep.involution, words, up_to_inner=args.up_to_inner)
        else:
            raise UsageError(f"check {check!r} does not apply")
    return cert.to_json(), cert.verdict


def cmd_rep_h1det(args):
    rep = make_rep(args.name, args.g)
    w = BraidWord.parse(args.word, rep.strands)
    return {"det": h1_det(rep, w), "matrix": h1_action(rep, w)}, None


# -- homology ----------------------------------------------------------------

def _max_deg(args) -> int:
    return args.max_deg if args.max_deg is not None else max(args.m - 1, 0)


def _dims_table(d):
    return [{"degree": k, "dim": v} for k, v in enumerate(d)]


def cmd_homology_dims(args):
    p, top = _field(args.p), _max_deg(args)
    d = hom.dims(args.m, p, top)
    basis = [m.to_json() for m in hom.basis(args.m, p, top)]
    return {"m": args.m, "field": p, "dims": list(d), "basis": basis, "rows": _dims_table(d)}, None


def cmd_homology_poincare(args):
    p, top = _field(args.p), _max_deg(args)
    d = hom.dims(args.m, p, top)
    return {"m": args.m, "field": p, "dims": list(d), "poincare": hom.poincare_string(d)}, None


def cmd_homology_oracle(args):
    p, top = _field(args.p), _max_deg(args)
    d = oracle_homology(args.m, p, top)
    agrees = d == hom.dims(args.m, p, top)
    return {"m": args.m, "field": p, "dims": list(d), "agrees_with_presentation": agrees,
            "rows": _dims_table(d)}, agrees


# -- report ------------------------------------------------------------------

def cmd_report_vanishing(args):
    rep = hom.vanishing_report(args.embedding, args.p, args.g, args.view, args.m)
    payload = rep.to_json()
    payload["rows"] = [
        {k: (",".join(v) if isinstance(v, list) else v) for k, v in e.items() if k != "thresholds"}
        for e in payload["entries"]
    ]
    return payload, None


def cmd_report_h1(args):
    coeff = None if args.coefficients is None else _field(args.coefficients)
    return hom.h1_table(args.family, args.g, args.b, coeff).to_json(), None


def cmd_report_expectation(args):
    p = _field(args.field)
    return {"expectation": hom.theorem_expectation(args.embedding, p, args.degree, args.g)}, None


def cmd_report_stable_range(args):
    closed, bounded = hom.nonorientable_stable_range(args.g)
    return {"g": args.g, "stable_range": hom.stable_range(args.g),
            "nonorientable_closed": closed, "nonorientable_bounded": bounded}, None


# -- plumbing ----------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    fmt = common.add_mutually_exclusive_group()
    fmt.add_argument("--json", dest="fmt", action="store_const", const="json", default="json")
    fmt.add_argument("--tsv", dest="fmt", action="store_const", const="tsv")
    common.add_argument("--max-deg", type=int, default=None)
    common.add_argument("--seed", type=int, default=0)

    parser = argparse.ArgumentParser(prog="braidmcg", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=__version__)
    groups = parser.add_subparsers(dest="group", required=True)

    def leaf(sub, name, func, **kw):
        p = sub.add_parser(name, parents=[common], **kw)
        p.set_defaults(func=func)
        return p

    braid = groups.add_parser("braid").add_subparsers(dest="cmd", required=True)
    for name, func in [("cancel", cmd_braid_cancel), ("permutation", cmd_braid_permutation),
                       ("trivial", cmd_braid_trivial), ("equal", cmd_braid_equal)]:
        p = leaf(braid, name, func)
        p.add_argument("--strands", type=int, required=True)
        p.add_argument("--word", default="")
        if name == "equal":
            p.add_argument("--other", default="")
    p = leaf(braid, "cable", cmd_braid_cable)
    p.add_argument("--outer", required=True, help='JSON ribbon braid {"strands", "word", "twists"}')
    p.add_argument("--inner", required=True, help='JSON list of braids [{"strands", "word"}, ...]')

    rep = groups.add_parser("rep").add_subparsers(dest="cmd", required=True)
    for name, func in [("eval", cmd_rep_eval), ("certify", cmd_rep_certify), ("h1det", cmd_rep_h1det)]:
        p = leaf(rep, name, func)
        p.add_argument("--name", required=True, choices=sorted(DEFAULT_CHECK))
        p.add_argument("--g", type=int, required=True, help="strand count of the source braid group")
        if name == "certify":
            p.add_argument("--check", choices=["braid-relations", "detection", "squares", "disjoint",
                                               "faithfulness", "j-equivariance"])
            p.add_argument("--corpus", help="file with one braid word per line")
            p.add_argument("--random", type=int, default=0, help="number of seeded random words")
            p.add_argument("--length", type=int, default=4)
            p.add_argument("--up-to-inner", action="store_true")
        else:
            p.add_argument("--word", default="")

    homology = groups.add_parser("homology").add_subparsers(dest="cmd", required=True)
    for name, func in [("dims", cmd_homology_dims), ("poincare", cmd_homology_poincare),
                       ("oracle", cmd_homology_oracle)]:
        p = leaf(homology, name, func)
        p.add_argument("--m", type=int, required=True)
        p.add_argument("--p", default="2", help="prime, or Q for the rationals")

    report = groups.add_parser("report").add_subparsers(dest="cmd", required=True)
    p = leaf(report, "vanishing", cmd_report_vanishing)
    p.add_argument("--embedding", required=True, choices=hom.EMBEDDINGS)
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--g", type=int, required=True)
    p.add_argument("--view", choices=["paper", "combined"], default="combined")
    p.add_argument("--m", type=int, default=None, help="source strands for the stable-only report")
    p = leaf(report, "h1", cmd_report_h1)
    p.add_argument("--family", required=True, choices=["gamma", "n"])
    p.add_argument("--g", type=int, required=True)
    p.add_argument("--b", type=int, default=1)
    p.add_argument("--coefficients", default=None)
    p = leaf(report, "expectation", cmd_report_expectation)
    p.add_argument("--embedding", required=True,
                   choices=hom.ORIENTABLE_EMBEDDINGS + hom.NONORIENTABLE_EMBEDDINGS)
    p.add_argument("--field", required=True)
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--g", type=int, required=True)
    p = leaf(report, "stable-range", cmd_report_stable_range)
    p.add_argument("--g", type=int, required=True)
    return parser


def _inputs(args) -> dict:
    skip = {"func", "fmt", "group", "cmd"}
    return {k: v for k, v in sorted(vars(args).items()) if k not in skip}


def _tsv(payload: dict) -> str:
    rows = payload.get("rows")
    if rows:
        header = list(rows[0])
        lines = ["\t".join(header)]
        lines += ["\t".join(str(r[h]) for h in header) for r in rows]
    else:
        lines = [f"{k}\t{json.dumps(v, sort_keys=True)}" for k, v in sorted(payload.items())]
    return "\n".join(lines) + "\n"


def run(argv: list[str] | None = None) -> tuple[int, str]:
    """Parse ``argv`` and execute; returns ``(exit_code, output)``."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return (exc.code if isinstance(exc.code, int) else EXIT_USAGE), ""
    try:
        payload, verdict = args.func(args)
    except (UsageError, BraidError, ValueError, OSError) as exc:
        sys.stderr.write(f"braidmcg: error: {exc}\n")
        return EXIT_USAGE, ""
    report = {"command": f"{args.group} {args.cmd}", "inputs": _inputs(args),
              "payload": payload, "version": __version__}
    out = _tsv(payload) if args.fmt == "tsv" else json.dumps(report, sort_keys=True, indent=2) + "\n"
    return (EXIT_FALSIFIED if verdict is False else EXIT_OK), out


def main(argv: list[str] | None = None) -> int:
    code, out = run(argv)
    sys.stdout.write(out)
    sys.stdout.flush()
    return code


if __name__ == "__main__":
    sys.exit(main())
