"""Command line entry point.

JSON is the canonical output (sorted keys, two-space indent); ``--format
text`` renders the same document as indented ``key: value`` lines.

Exit codes: 0 success, 1 a verification failed, 2 the input was rejected.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from lattika import __version__
from lattika import coclosure as cc
from lattika import errors, fixtures
from lattika import galois as gl
from lattika.abelian import AbelianGroup, match_fixture, subgroups
from lattika.checks import check_connection
from lattika.hollow import hollow_dimension
from lattika.lattice import Lattice, from_document, modular_violation, to_document

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2

# rejected input, as opposed to a failed verification
INPUT_ERRORS = (
    errors.LatticeError,
    errors.NotMonotone,
    errors.NotAdjoint,
    errors.TooLarge,
    errors.RingMismatch,
    errors.PreconditionFailed,
    errors.SpecError,
    ValueError,
    KeyError,
    IndexError,
    OSError,
)

EXAMPLES = {"1": fixtures.example1, "2": fixtures.example2, "3": fixtures.example3}


class InputError(Exception):
    pass


def _load_lattice(ref: str, max_size=None) -> Lattice:
    """A file path, a fixture name (SG, SGprime) or ``group:<spec>``."""
    if ref in fixtures.FIXTURES:
        return fixtures.FIXTURES[ref]()
    if ref.startswith("group:"):
        return subgroups(AbelianGroup.parse(ref[len("group:"):]), max_size).lattice
    path = Path(ref)
    if not path.exists():
        raise InputError(f"no such lattice file or fixture: {ref}")
    return from_document(json.loads(path.read_text(encoding="utf-8")))


def _load_connection(args) -> gl.GaloisConnection:
    if args.example:
        return EXAMPLES[args.example]()
    if not args.lattice or not args.maps:
        raise InputError("give --example, or --lattice together with --maps")
    A = _load_lattice(args.lattice, args.max_size)
    B = _load_lattice(args.codomain, args.max_size) if args.codomain else A
    doc = json.loads(Path(args.maps).read_text(encoding="utf-8"))
    try:
        alpha = [B.element(v) for v in doc["alpha"]]
        beta = [A.element(v) for v in doc["beta"]]
    except (TypeError, KeyError) as exc:
        raise InputError(f"map document needs 'alpha' and 'beta' lists: {exc}") from None
    if len(alpha) != A.n or len(beta) != B.n:
        raise InputError(f"alpha needs {A.n} entries and beta {B.n}")
    return gl.connection(A, B, alpha, beta, Path(args.maps).stem)


def _connection_header(gc) -> dict:
    return {
        "name": gc.name,
        "alpha": gc.alpha.to_labels(),
        "beta": gc.beta.to_labels(),
        "flags": gc.flags(),
        "galois_domain": gc.A.names(gl.galois_elements(gc, "domain")),
        "galois_codomain": gc.B.names(gl.galois_elements(gc, "codomain")),
    }


def cmd_analyze(args):
    L = _load_lattice(args.lattice, args.max_size)
    out = cc.classify(L).to_json(L)
    v = modular_violation(L)
    out["modular_violation"] = None if v is None else [L.label(x) for x in v]
    out["lemmas"] = [x.to_json() for x in cc.verify_lemmas(L)]
    out["lattice"] = to_document(L)
    failed = any(x.violated for x in cc.verify_lemmas(L))
    return out, EXIT_FAIL if failed else EXIT_OK


def cmd_galois_check(args):
    gc = _load_connection(args)
    out = _connection_header(gc)
    cw, uw = gl.cosmall_connection_witness(gc), gl.ucc_witness(gc)
    out["cosmall_witness"] = None if cw is None else gc.A.label(cw)
    out["ucc_witness"] = None if uw is None else gc.A.label(uw)
    verdicts = check_connection(gc)
    out["verdicts"] = [v.to_json() for v in verdicts]
    out["violations"] = sum(v.violated for v in verdicts)
    return out, EXIT_FAIL if out["violations"] else EXIT_OK


def cmd_correspondence(args):
    gc = _load_connection(args)
    out = {"name": gc.name}
    try:
        rep = gl.main_correspondence(gc, args.mode)
    except (errors.HypothesesNotMet, errors.CoclosureNotUnique) as exc:
        out["error"] = {"type": type(exc).__name__, "message": str(exc)}
        return out, EXIT_FAIL
    out["correspondence"] = rep.to_json(gc)
    try:
        out["corollary"] = gl.corollary_equivalence(gc).to_json()
    except errors.HypothesesNotMet as exc:
        out["corollary"] = {"missing": list(exc.missing)}
    return out, EXIT_OK if rep.verified else EXIT_FAIL


def cmd_hollow(args):
    L = _load_lattice(args.lattice, args.max_size)
    return hollow_dimension(L).to_json(L), EXIT_OK


def cmd_subgroups(args):
    g = AbelianGroup.parse(args.spec)
    sl = subgroups(g, args.max_size)
    L = sl.lattice
    out = {
        "group": g.spec(),
        "order": g.order,
        "count": L.n,
        "subgroups": [
            {"label": L.label(i), "size": len(h), "elements": [list(x) for x in sorted(h)]}
            for i, h in enumerate(sl.subgroups)
        ],
        "lattice": to_document(L),
    }
    if args.match:
        try:
            mapping = match_fixture(sl, args.match)
        except errors.NoIsomorphism as exc:
            out["match"] = {"fixture": args.match, "error": str(exc)}
            return out, EXIT_FAIL
        out["match"] = {"fixture": args.match, "labeling": {L.label(i): lab for i, lab in mapping.items()}}
    return out, EXIT_OK


def cmd_modgal(args):
    from lattika.modgal import FiniteModule, verify_trace_connection

    if args.ring is None or args.module is None:
        raise InputError("modgal needs --ring and --module")
    M = FiniteModule.parse(args.ring, args.source)
    N = FiniteModule.parse(args.ring, args.module)
    rep = verify_trace_connection(M, N, args.max_size)
    return rep.to_json(), EXIT_OK if rep.passed else EXIT_FAIL


def cmd_verify_paper(args):
    from lattika.verify import golden_suite, summary

    out = summary(golden_suite())
    return out, EXIT_OK if out["ok"] else EXIT_FAIL


def render_text(obj, indent=0) -> str:
    pad = "  " * indent
    lines = []
    if isinstance(obj, dict):
        for k in sorted(obj):
            v = obj[k]
            if isinstance(v, (dict, list)) and v and not _flat(v):
                lines.append(f"{pad}{k}:")
                lines.append(render_text(v, indent + 1))
            else:
                lines.append(f"{pad}{k}: {_scalar(v)}")
    elif isinstance(obj, list):
        for v in obj:
            if isinstance(v, (dict, list)) and not _flat(v):
                lines.append(f"{pad}-")
                lines.append(render_text(v, indent + 1))
            else:
                lines.append(f"{pad}- {_scalar(v)}")
    else:
        lines.append(pad + _scalar(obj))
    return "\n".join(lines)


def _flat(v) -> bool:
    return isinstance(v, list) and all(not isinstance(x, (dict, list)) for x in v)


def _scalar(v) -> str:
    if isinstance(v, list):
        return "[" + ", ".join(_scalar(x) for x in v) + "]"
    if isinstance(v, bool):
        return "yes" if v else "no"
    return "-" if v is None else str(v)


def _emit(obj, fmt):
    if fmt == "text":
        sys.stdout.write(render_text(obj) + "\n")
    else:
        sys.stdout.write(json.dumps(obj, indent=2, sort_keys=True) + "\n")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["json", "text"], default="json")
    common.add_argument("--max-size", type=int, default=None, help="element bound for enumerations")

    conn = argparse.ArgumentParser(add_help=False)
    conn.add_argument("--lattice", help="domain lattice: JSON file, SG, SGprime or group:<spec>")
    conn.add_argument("--codomain", help="codomain lattice (defaults to the domain)")
    conn.add_argument("--maps", help='JSON file {"alpha": [...], "beta": [...]} with indices or labels')
    conn.add_argument("--example", choices=sorted(EXAMPLES), help="use a built-in example connection")

    p = argparse.ArgumentParser(prog="lattika", description="Finite lattices and Galois connections.")
    p.add_argument("--version", action="version", version=f"lattika {__version__}")
    sub = p.add_subparsers(dest="verb", required=True)

    s = sub.add_parser("analyze", parents=[common], help="classify a lattice")
    s.add_argument("--lattice", required=True)
    s.set_defaults(func=cmd_analyze)

    s = sub.add_parser("galois-check", parents=[common, conn], help="validate and classify a connection")
    s.set_defaults(func=cmd_galois_check)

    s = sub.add_parser("correspondence", parents=[common, conn], help="coclosed-element correspondence")
    s.add_argument("--mode", choices=["auto", "thm-main"], default="auto")
    s.set_defaults(func=cmd_correspondence)

    s = sub.add_parser("hollow", parents=[common], help="hollow dimension of a modular lattice")
    s.add_argument("--lattice", required=True)
    s.set_defaults(func=cmd_hollow)

    s = sub.add_parser("subgroups", parents=[common], help="subgroup lattice of Z_n1 x ... x Z_nk")
    s.add_argument("spec", help='cyclic orders, e.g. "2x4"')
    s.add_argument("--match", choices=sorted(fixtures.FIXTURES))
    s.set_defaults(func=cmd_subgroups)

    s = sub.add_parser("modgal", parents=[common], help="trace connection between Hom(M,N) and N")
    s.add_argument("--ring", type=int, help="ring modulus n for Z_n")
    s.add_argument("--module", help="N as cyclic orders, e.g. 2x4")
    s.add_argument("--source", default="R", help="M: R, R2 or cyclic orders (default R)")
    s.set_defaults(func=cmd_modgal)

    s = sub.add_parser("verify-paper", parents=[common], help="run the built-in golden suite")
    s.set_defaults(func=cmd_verify_paper)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    fmt = getattr(args, "format", "json")
    try:
        out, code = args.func(args)
    except (InputError, *INPUT_ERRORS) as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else str(exc)
        _emit({"error": {"type": type(exc).__name__, "message": msg}}, fmt)
        return EXIT_INPUT
    except errors.LattikaError as exc:
        _emit({"error": {"type": type(exc).__name__, "message": str(exc)}}, fmt)
        return EXIT_FAIL
    _emit(out, fmt)
    return code


if __name__ == "__main__":
    sys.exit(main())
