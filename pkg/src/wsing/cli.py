"""Command-line front end.

    wsing weights (brieskorn A1 A2 A3 | cyclic N Q | weights LIST)
    wsing generators N Q
    wsing classify (weights LIST | brieskorn A1 A2 A3 | cyclic N Q)
    wsing compare --left SOURCE --right SOURCE
    wsing link A1 A2 A3
    wsing corollary

``--json`` switches to a single JSON object ``{"command", "input", "result"}``.
Exit status is 0 when a result was produced and 2 when input was rejected.
"""
import argparse
import json
import sys
from typing import Optional, Sequence

from . import classify as cl
from . import cyclic_quotient as cqm
from .errors import WsingError
from .exactnum import format_ratio
from .link_topology import seifert_data
from .weights import brieskorn_weights, from_list, make_triple, normalize

DEFAULT_MAX_N = 5000
DEFAULT_MAX_HILBERT_N = 500


class CliError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise CliError(message)


def _int(token: str) -> int:
    try:
        return int(token, 10)
    except ValueError:
        raise CliError(f"malformed integer {token!r}") from None


def _parse_source(tokens: Sequence[str], opts) -> dict:
    if not tokens:
        raise CliError("missing source")
    kind, args = tokens[0], list(tokens[1:])
    if kind == "weights":
        if len(args) != 1:
            raise CliError("weights source takes one comma-separated list, e.g. 51,2,1")
        return {"kind": "weights", "values": [_int(t) for t in args[0].split(",")]}
    if kind == "brieskorn":
        if len(args) != 3:
            raise CliError("brieskorn source takes three exponents A1 A2 A3")
        return {"kind": "brieskorn", "exponents": [_int(t) for t in args]}
    if kind == "cyclic":
        if len(args) != 2:
            raise CliError("cyclic source takes N Q")
        n, q = (_int(t) for t in args)
        _check_n(n, opts)
        return {"kind": "cyclic", "n": n, "q": q}
    raise CliError(f"unknown source {kind!r} (expected weights, brieskorn or cyclic)")


def _check_n(n: int, opts):
    if n > opts.max_n:
        raise CliError(f"n = {n} exceeds --max-n {opts.max_n}")
    if n > opts.max_hilbert_n:
        raise CliError(f"n = {n} exceeds --max-hilbert-n {opts.max_hilbert_n} for the Hilbert basis computation")


def _build(src: dict):
    """Validated library object for a parsed source."""
    if src["kind"] == "weights":
        return from_list(src["values"])
    if src["kind"] == "brieskorn":
        return make_triple(*src["exponents"])
    return cqm.make_cyclic(src["n"], src["q"])


def _source_weights(src: dict):
    obj = _build(src)
    if src["kind"] == "weights":
        return obj
    if src["kind"] == "brieskorn":
        return brieskorn_weights(obj)
    return cqm.diagonal_weights(obj)


def _source_text(src: dict) -> str:
    if src["kind"] == "weights":
        return "weights " + ",".join(map(str, src["values"]))
    if src["kind"] == "brieskorn":
        return "brieskorn " + " ".join(map(str, src["exponents"]))
    return f"cyclic n={src['n']} q={src['q']}"


def _conical_json(v: cl.ConicalVerdict) -> dict:
    witness = None
    if v.mechanism is cl.Mechanism.THEOREM_1_5:
        witness = {"alpha": v.action.alpha, "beta": v.action.beta, "generator": v.generator.as_pair()}
    return {
        "verdict": v.kind.value,
        "mechanism": v.mechanism.value if v.mechanism else None,
        "witness": witness,
        "weights": list(v.weights),
    }


def _compare_json(v: cl.CompareVerdict) -> dict:
    cert = None
    if v.certificate is not None:
        c = v.certificate
        cert = {"side": c.side, "lhs": format_ratio(c.lhs), "rhs": format_ratio(c.rhs)}
    return {"verdict": v.kind.value, "certificate": cert}


def _seifert_json(s) -> dict:
    return {"genus": s.genus, "euler": format_ratio(s.euler), "fibers": [list(f) for f in s.fibers]}


def _cmd_weights(opts):
    src = _parse_source(opts.source, opts)
    w = _source_weights(src)
    n = normalize(w)
    result = {"weights": list(w), "normalized": list(n)}
    text = f"weights:    {w}\nnormalized: {n}"
    return src, result, text


def _cmd_generators(opts):
    src = {"kind": "cyclic", "n": _int(opts.n), "q": _int(opts.q)}
    _check_n(src["n"], opts)
    cq = _build(src)
    gens = cqm.minimal_generators(cq)
    w = cqm.diagonal_weights(cq)
    result = {"generators": [m.as_pair() for m in gens], "weights": list(w)}
    lines = [f"minimal generators of C^2/mu_{cq.n}, q={cq.q} ({len(gens)}):"]
    lines += [f"  u1^{m.a} u2^{m.b}  weight {m.weight}" for m in gens]
    lines.append(f"diagonal weights: {w}")
    return src, result, "\n".join(lines)


def _cmd_classify(opts):
    src = _parse_source(opts.source, opts)
    if src["kind"] == "cyclic":
        v = cl.conical_cyclic(_build(src))
    else:
        v = cl.conical_from_weights(_source_weights(src))
    result = _conical_json(v)
    lines = [f"{_source_text(src)}: weights {v.weights}", f"verdict: {v.kind.value}"]
    if v.mechanism is cl.Mechanism.THEOREM_1:
        lines.append(f"reason: two lowest weights {v.weights[-2]} != {v.weights[-1]}")
    elif v.mechanism is cl.Mechanism.THEOREM_1_5:
        g = v.generator
        lines.append(
            f"reason: lowest weights tie; action (alpha, beta) = ({v.action.alpha}, {v.action.beta}) "
            f"makes u1^{g.a} u2^{g.b} the unique generator of least weight"
        )
    elif v.kind is cl.ConicalKind.UNKNOWN:
        lines.append("reason: non-homogeneous with equal two lowest weights; no criterion applies")
    return src, result, "\n".join(lines)


def _cmd_compare(opts):
    left = _parse_source(opts.left, opts)
    right = _parse_source(opts.right, opts)
    v = _source_weights(left)
    w = _source_weights(right)
    verdict = cl.compare_weights(v, w)
    result = _compare_json(verdict)
    lines = [f"left:  {_source_text(left)} -> {v}", f"right: {_source_text(right)} -> {w}",
             f"verdict: {verdict.kind.value}"]
    if verdict.certificate is not None:
        lines.append(f"certificate ({verdict.certificate.side}): {verdict.certificate}")
    return {"left": left, "right": right}, result, "\n".join(lines)


def _cmd_link(opts):
    src = {"kind": "brieskorn", "exponents": [_int(t) for t in opts.exponents]}
    s = seifert_data(_build(src))
    result = _seifert_json(s)
    fibers = ", ".join(f"{a}x{c}" for a, c in s.fibers) or "none"
    text = f"genus: {s.genus}\neuler: {format_ratio(s.euler)}\nexceptional fibers: {fibers}"
    return src, result, text


def _cmd_corollary(opts):
    r = cl.corollary_report()
    result = {
        "triples": [list(t) for t in r.triples],
        "weights": [list(w) for w in r.weights],
        "seifert": [_seifert_json(s) for s in r.seifert],
        "link": r.link.value,
        "compare": _compare_json(r.compare),
        "computed_genus": r.computed_genus,
        "paper_stated_genus": r.paper_stated_genus,
    }
    lines = []
    for t, w, s in zip(r.triples, r.weights, r.seifert):
        lines.append(f"brieskorn {t}: weights {w}, genus {s.genus}, euler {format_ratio(s.euler)}, "
                     f"fibers {list(s.fibers)}")
    lines.append(f"links: {r.link.value}")
    lines.append(f"compare: {r.compare.kind.value} via {r.compare.certificate}")
    lines.append(f"base genus: computed {r.computed_genus}, stated in source {r.paper_stated_genus}")
    return {}, result, "\n".join(lines)


def _global_options(parser, default):
    # Accepted both before and after the verb. Subcommand copies default to
    # SUPPRESS so they never overwrite a value given before the verb.
    parser.add_argument("--json", action="store_true", default=default(False),
                        help="emit one JSON object")
    parser.add_argument("--max-n", type=int, default=default(DEFAULT_MAX_N),
                        help=f"largest accepted cyclic order n (default {DEFAULT_MAX_N})")
    parser.add_argument("--max-hilbert-n", type=int, default=default(DEFAULT_MAX_HILBERT_N),
                        help=f"largest n for Hilbert basis computations (default {DEFAULT_MAX_HILBERT_N})")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    _global_options(common, lambda _: argparse.SUPPRESS)

    p = _Parser(prog="wsing", description="Weights, invariants and bi-Lipschitz verdicts for "
                "weighted homogeneous surface singularities.")
    _global_options(p, lambda value: value)
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("weights", parents=[common], help="weight vector of a germ")
    s.add_argument("source", nargs="+", metavar="SOURCE")
    s.set_defaults(run=_cmd_weights)

    s = sub.add_parser("generators", parents=[common], help="minimal invariant monomials of C^2/mu_n")
    s.add_argument("n")
    s.add_argument("q")
    s.set_defaults(run=_cmd_generators)

    s = sub.add_parser("classify", parents=[common], help="metric conicalness verdict")
    s.add_argument("source", nargs="+", metavar="SOURCE")
    s.set_defaults(run=_cmd_classify)

    s = sub.add_parser("compare", parents=[common], help="bi-Lipschitz distinguishability of two germs")
    s.add_argument("--left", nargs="+", required=True, metavar="TOKEN")
    s.add_argument("--right", nargs="+", required=True, metavar="TOKEN")
    s.set_defaults(run=_cmd_compare)

    s = sub.add_parser("link", parents=[common], help="Seifert invariants of a Brieskorn link")
    s.add_argument("exponents", nargs=3, metavar="A")
    s.set_defaults(run=_cmd_link)

    s = sub.add_parser("corollary", parents=[common], help="the (2,51,102) vs (12,15,20) example")
    s.set_defaults(run=_cmd_corollary)
    return p


def parse_and_run(argv: Sequence[str]) -> tuple[int, str]:
    """Run one command. Returns the exit code and the text to print
    (stdout on success, a one-line diagnostic on failure)."""
    try:
        opts = build_parser().parse_args(list(argv))
        inp, result, text = opts.run(opts)
    except (CliError, WsingError) as exc:
        return 2, f"wsing: error: {exc}"
    if opts.json:
        text = json.dumps({"command": opts.command, "input": inp, "result": result}, sort_keys=True)
    return 0, text


def main(argv: Optional[Sequence[str]] = None) -> int:
    code, text = parse_and_run(sys.argv[1:] if argv is None else argv)
    print(text, file=sys.stdout if code == 0 else sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
