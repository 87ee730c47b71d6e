"""Command line interface.

Every command prints one JSON envelope ``{command, parameters, result, version}``
with sorted keys.  Integers that grow with Markov numbers (triples, weights,
quotient orders, fraction parts) are written as decimal strings.

Exit status: 0 success, 1 usage error, 2 domain error, 3 verification failure.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from pathlib import Path

from . import __version__
from .classifier import match_family, solve_degree_equation
from .deformations import manetti_enumerate, rho_one_filter, surface_outcomes
from .errors import CatalogueError, InconsistencyError, InvalidInput
from .fibres import (
    FibreI,
    FibreII,
    assemble_central_string,
    associated_type_I,
    enumerate_fibres,
    lemma_T_check,
    validate_fibre_I,
    validate_fibre_II,
)
from .hj import (
    LEFT_RAISE,
    RIGHT_PREPEND,
    as_fraction,
    conjugate_fraction,
    grow_conjugate_pair,
    hj_evaluate,
    hj_expand,
    is_conjugate_pair,
    reverse_string,
)
from .markov import enumerate_graph, equation
from .singularities import (
    classify_T,
    index_and_cover,
    is_t_string,
    milnor,
    normalize,
    resolution_string,
    t_string_generate,
)
from .verify import VerifyBounds, verify_all
from .wps import anticanonical_sections, build_record

EXIT_USAGE, EXIT_DOMAIN, EXIT_VERIFY = 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _frac(f) -> str:
    return f"{f.numerator}/{f.denominator}"


_FRACTION_RE = re.compile(r"^\s*\d+(/\d+)?\s*$")


def _string_arg(text: str) -> tuple[int, ...]:
    text = text.strip().strip("[]")
    if not text:
        return ()
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError:
        raise UsageError(f"not a comma-separated string: {text!r}") from None


def _fraction_arg(text: str):
    if not _FRACTION_RE.match(text):
        raise UsageError(f"not a fraction n/a: {text!r}")
    return as_fraction(text)


def _int_arg(text: str) -> int:
    try:
        return int(text)
    except ValueError:
        raise UsageError(f"not an integer: {text!r}") from None


def _big_triple(t) -> list[str]:
    return [str(x) for x in t]


def tclass_json(t) -> dict:
    out = {"kind": t.kind, "label": str(t)}
    if t.is_t:
        q = t.quotient()
        out.update(d=t.d, n=str(t.n), a=str(t.a), order=str(q.order), weight=str(q.weight),
                   milnor=milnor(t))
    return out


def record_json(r) -> dict:
    return {
        "family": r.family,
        "triple": _big_triple(r.triple),
        "weights": _big_triple(r.weights.weights),
        "k2": r.k2,
        "rho": r.rho,
        "milnor_sum": r.milnor_sum,
        "basket": [tclass_json(t) for t in r.basket],
    }


def fibre_json(f) -> dict:
    return f.to_dict()


def cmd_hj(args):
    op = args.op
    if op == "expand":
        f = _fraction_arg(args.value)
        return {"fraction": _frac(f), "string": list(hj_expand(f))}
    if op == "eval":
        s = _string_arg(args.value)
        return {"string": list(s), "fraction": _frac(hj_evaluate(s))}
    if op == "reverse":
        s = _string_arg(args.value)
        r = reverse_string(s)
        return {"string": list(r), "fraction": _frac(hj_evaluate(r))}
    if op == "conjugate":
        if "/" in args.value or "," not in args.value and not args.string:
            f = _fraction_arg(args.value)
        else:
            f = hj_evaluate(_string_arg(args.value))
        c = conjugate_fraction(f)
        return {"fraction": _frac(f), "conjugate": _frac(c), "string": list(hj_expand(c))}
    if op == "pair":
        if args.other is None:
            raise UsageError("hj pair needs two strings")
        s, t = _string_arg(args.value), _string_arg(args.other)
        out = {"left": list(s), "right": list(t), "conjugate": is_conjugate_pair(s, t)}
        if args.side:
            g = grow_conjugate_pair(s, t, args.side)
            out["grown"] = [list(g[0]), list(g[1])]
        return out
    raise UsageError(f"unknown hj operation {op!r}")


def cmd_sing(args):
    q = normalize(args.order, args.q1, args.q2)
    t = classify_T(q)
    out = {"quotient": str(q), "order": str(q.order), "weight": str(q.weight),
           "class": tclass_json(t), "resolution": list(resolution_string(q))}
    if t.is_t:
        index, cover = index_and_cover(t)
        out.update(milnor=milnor(t), index=str(index), cover=str(cover) if cover.is_t else "A0")
    return out


def cmd_tstring(args):
    if args.op == "generate":
        d = _int_arg(args.value)
        strings = sorted(t_string_generate(d, args.max_len))
        return {"d": d, "max_len": args.max_len, "strings": [list(s) for s in strings]}
    s = _string_arg(args.value)
    return {"string": list(s), "d": is_t_string(s)}


def _graph_json(g) -> dict:
    deg = g.degrees()
    return {
        "family": g.family,
        "equation": str(equation(g.family)),
        "bound": g.bound,
        "nodes": [_big_triple(v) for v in g.nodes],
        "degrees": [deg[v] for v in g.nodes],
        "edges": [
            {"source": _big_triple(s), "position": p, "target": _big_triple(t)}
            for s, p, t in g.edges
        ],
    }


def cmd_markov(args):
    g = enumerate_graph(args.family, args.bound)
    if args.dot:
        return g.to_dot()
    return _graph_json(g)


def cmd_surface(args):
    r = build_record(args.family, tuple(args.triple))
    out = record_json(r)
    out["anticanonical_sections"] = anticanonical_sections(r.weights)
    return out


def cmd_deform(args):
    poset = surface_outcomes(build_record(args.family, tuple(args.triple)))
    elements = rho_one_filter(poset) if args.rho_one else poset.elements
    return {
        "root": record_json(poset.root),
        "rho_one": args.rho_one,
        "elements": [record_json(e) for e in elements],
    }


def cmd_manetti(args):
    return {"bound": args.bound, "surfaces": [record_json(r) for r in manetti_enumerate(args.bound)]}


def cmd_fibre(args):
    if args.kind == "enumerate":
        fibres = enumerate_fibres(_int_arg(args.values[0]) if args.values else args.max_curves)
        return {"fibres": [fibre_json(f) for f in fibres]}
    if args.kind == "I":
        if len(args.values) != 2:
            raise UsageError("fibre I needs LEFT RIGHT")
        f = FibreI(_string_arg(args.values[0]), _string_arg(args.values[1]))
        return {"fibre": fibre_json(f), "valid": validate_fibre_I(f)}
    if args.kind == "II":
        if len(args.values) != 3:
            raise UsageError("fibre II needs A B T")
        f = FibreII(_string_arg(args.values[0]), _string_arg(args.values[1]), _int_arg(args.values[2]))
        out = {"fibre": fibre_json(f), "valid": validate_fibre_II(f)}
        if out["valid"]:
            d, conj = lemma_T_check(f)
            out.update(
                central=list(assemble_central_string(f)),
                lemma_T={"d": d, "string": list(conj)},
                associated=fibre_json(associated_type_I(f)),
            )
        return out
    raise UsageError(f"unknown fibre kind {args.kind!r}")


def cmd_classify(args):
    rows = []
    for s in solve_degree_equation(args.n_bound):
        family, triple = match_family(s)
        rows.append({"d": list(s.d), "n": _big_triple(s.n), "k2": s.k2,
                     "weights": _big_triple(s.weights), "family": family,
                     "triple": _big_triple(triple)})
    patterns = sorted({tuple(r["d"]) for r in rows})
    return {"n_bound": args.n_bound, "patterns": [list(p) for p in patterns], "solutions": rows}


def cmd_verify(args):
    bounds = VerifyBounds.quick() if args.quick else VerifyBounds()
    if args.bound is not None:
        bounds.markov_bound = args.bound
    if args.n_bound is not None:
        bounds.n_bound = args.n_bound
    if args.max_len is not None:
        bounds.t_len = args.max_len
    return verify_all(bounds)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(
        prog="manetti",
        description="Markov-type equations, T-singularities and weighted projective planes.",
    )
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(sp):
        sp.add_argument("--json", action="store_true", help="JSON output (the default)")
        sp.add_argument("--cache", type=Path, help="reuse or write a JSON snapshot of the result")

    sp = sub.add_parser("hj", help="Hirzebruch-Jung fractions and strings")
    sp.add_argument("op", choices=["expand", "eval", "reverse", "conjugate", "pair"])
    sp.add_argument("value", help="fraction n/a or comma-separated string")
    sp.add_argument("other", nargs="?", help="second string for 'pair'")
    sp.add_argument("--string", action="store_true", help="treat VALUE of 'conjugate' as a string")
    sp.add_argument("--side", choices=[LEFT_RAISE, RIGHT_PREPEND], help="growth step for 'pair'")
    common(sp)
    sp.set_defaults(func=cmd_hj)

    sp = sub.add_parser("sing", help="classify 1/order(q1, q2)")
    sp.add_argument("order", type=int)
    sp.add_argument("q1", type=int)
    sp.add_argument("q2", type=int)
    common(sp)
    sp.set_defaults(func=cmd_sing)

    sp = sub.add_parser("tstring", help="generate or recognise T_d-strings")
    sp.add_argument("op", choices=["generate", "check"])
    sp.add_argument("value", help="d for 'generate', a string for 'check'")
    sp.add_argument("--max-len", type=int, default=6)
    common(sp)
    sp.set_defaults(func=cmd_tstring)

    sp = sub.add_parser("markov", help="mutation graph of a family")
    sp.add_argument("family", type=int, choices=[1, 2, 3, 4])
    sp.add_argument("--bound", type=int, default=100)
    sp.add_argument("--dot", action="store_true", help="Graphviz DOT instead of JSON")
    common(sp)
    sp.set_defaults(func=cmd_markov)

    for name, func, helptext in (
        ("surface", cmd_surface, "weighted plane record of a solution triple"),
        ("deform", cmd_deform, "Q-Gorenstein deformations of a weighted plane"),
    ):
        sp = sub.add_parser(name, help=helptext)
        sp.add_argument("family", type=int, choices=[1, 2, 3, 4])
        sp.add_argument("triple", type=int, nargs=3, metavar="N")
        if name == "deform":
            sp.add_argument("--rho-one", action="store_true", help="keep only rho = 1 elements")
        common(sp)
        sp.set_defaults(func=func)

    sp = sub.add_parser("manetti", help="Manetti surfaces over Markov triples")
    sp.add_argument("--bound", type=int, default=5)
    common(sp)
    sp.set_defaults(func=cmd_manetti)

    sp = sub.add_parser("fibre", help="degenerate fibres of types I and II")
    sp.add_argument("kind", choices=["I", "II", "enumerate"])
    sp.add_argument("values", nargs="*")
    sp.add_argument("--max-curves", type=int, default=5)
    common(sp)
    sp.set_defaults(func=cmd_fibre)

    sp = sub.add_parser("classify", help="solve the degree equation and match families")
    sp.add_argument("--n-bound", type=int, default=30)
    common(sp)
    sp.set_defaults(func=cmd_classify)

    sp = sub.add_parser("verify", help="run the invariant suite")
    group = sp.add_mutually_exclusive_group()
    group.add_argument("--default", action="store_true", help="full default bounds")
    group.add_argument("--quick", action="store_true", help="small bounds")
    sp.add_argument("--bound", type=int, help="family-1 Markov bound")
    sp.add_argument("--n-bound", type=int, help="degree-equation bound")
    sp.add_argument("--max-len", type=int, help="T-string length bound")
    common(sp)
    sp.set_defaults(func=cmd_verify)
    return p


def _parameters(args) -> dict:
    skip = {"func", "command", "cache", "json"}
    out = {}
    for k, v in sorted(vars(args).items()):
        if k not in skip:
            out[k] = str(v) if isinstance(v, Path) else v
    return out


def render(envelope: dict) -> str:
    return json.dumps(envelope, sort_keys=True, indent=2) + "\n"


def run(argv=None):
    """Parse ``argv`` and return (exit status, text to print)."""
    args = build_parser().parse_args(argv)
    params = _parameters(args)
    cached = _read_cache(args.cache, args.command, params)
    if cached is not None:
        result = cached
    else:
        result = args.func(args)
        if args.cache is not None:
            _write_cache(args.cache, args.command, params, result)
    if isinstance(result, str):
        return 0, result
    envelope = {"command": args.command, "parameters": params, "result": result,
                "version": __version__}
    status = 0
    if args.command == "verify" and not result["passed"]:
        status = EXIT_VERIFY
    return status, render(envelope)


def _cache_key(command, params):
    return {"command": command, "parameters": params, "version": __version__}


def _read_cache(path, command, params):
    if path is None or not path.exists():
        return None
    try:
        data = json.loads(path.read_text())
    except (OSError, ValueError):
        return None
    if data.get("key") != _cache_key(command, params):
        return None
    return data.get("result")


def _write_cache(path, command, params, result):
    path.write_text(json.dumps({"key": _cache_key(command, params), "result": result},
                               sort_keys=True) + "\n")


def main(argv=None) -> int:
    try:
        status, text = run(argv)
    except SystemExit as exc:  # argparse: --help, --version and usage errors
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    except UsageError as exc:
        print(f"manetti: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (InvalidInput, CatalogueError, InconsistencyError) as exc:
        print(f"manetti: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    sys.stdout.write(text)
    return status


if __name__ == "__main__":
    sys.exit(main())
