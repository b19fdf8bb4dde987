"""Command-line front end.

Exit status: 0 on success, 1 when a verification fails, 2 on malformed
input.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import formats
from .errors import NotMixing, NotTransitive, ParseError
from .errors import DecayFailure
from .fullshift import decay_margin, diagonal_shadow, verify_decay
from .oracle import EnumBounds, brute_shadow_search
from .sft import entropy, generate, member, transition_length
from .shadowing import (FinitePseudoOrbit, TsLimitPseudoOrbit, chain_connect, minimal_gap,
                        shadow_finite, shadow_specification, two_sided_limit_shadow,
                        validate_delta, verify_two_sided)
from .suites import SUITES, run_suites
from .symbolic import dist


class Report:
    """Ordered key/value report rendered as plain text or JSON."""

    def __init__(self, argv):
        self.data = {"command": " ".join(argv), "analysis": {}, "witnesses": {}, "verdicts": []}

    def analysis(self, key, value):
        self.data["analysis"][key] = value

    def witness(self, key, value):
        self.data["witnesses"][key] = value

    def verdict(self, case, passed, detail=""):
        self.data["verdicts"].append({"case": case, "passed": bool(passed), "detail": detail})

    @property
    def passed(self) -> bool:
        return all(v["passed"] for v in self.data["verdicts"])

    def render(self, fmt: str) -> str:
        if fmt == "structured":
            return json.dumps(self.data, indent=2, sort_keys=True)
        lines = [f"command: {self.data['command']}"]
        for key, value in self.data["analysis"].items():
            lines.append(f"{key}: {value}")
        for key, value in self.data["witnesses"].items():
            lines.append(f"{key}: {value}")
        for v in self.data["verdicts"]:
            status = "PASS" if v["passed"] else "FAIL"
            lines.append(f"[{status}] {v['case']}" + (f"  {v['detail']}" if v["detail"] else ""))
        return "\n".join(lines)


def _yes(b: bool) -> str:
    return "yes" if b else "no"


def cmd_analyze(args, rep: Report):
    X = formats.load_sft(args.file)
    dec = X.decomposition
    rep.analysis("name", X.name)
    rep.analysis("symbols", X.n)
    rep.analysis("transitions", len(X.transitions))
    rep.analysis("transitive", _yes(dec.transitive))
    rep.analysis("mixing", _yes(dec.mixing))
    rep.analysis("period", dec.period)
    rep.analysis("entropy", f"{entropy(X):.12f}")
    rep.analysis("transition length", transition_length(X) if dec.mixing else "n/a")
    rep.analysis("minimal gap", minimal_gap(X) if dec.transitive else "n/a")
    rep.analysis("components", [[X.labels[a] for a in c.symbols] for c in dec.components])
    return 0


def cmd_generate(args, rep: Report):
    X = generate(args.kind, *args.params)
    text = formats.dump_sft(X, args.output)
    rep.analysis("name", X.name)
    if args.output:
        rep.witness("written", args.output)
    else:
        rep.witness("sft", text.strip())
    return 0


def cmd_shadow(args, rep: Report):
    X = formats.load_sft(args.file)
    po = formats.load_pseudo_orbit(args.pseudo_orbit, X.labels)
    if isinstance(po, FinitePseudoOrbit):
        y, eps = shadow_finite(X, po)
        delta = validate_delta(po)
        rep.witness("y", formats.format_point(y, X.labels))
        rep.analysis("delta", str(delta))
        rep.analysis("eps", str(eps))
        rep.verdict("shadow member", member(X, y))
        rep.verdict("eps <= delta", eps <= delta)
        if args.output:
            formats.dump_yaml({"y": formats.format_point(y, X.labels), "eps": str(eps)}, args.output)
        return 0 if rep.passed else 1

    method = "synthesized"
    try:
        g = two_sided_limit_shadow(X, po)
    except NotTransitive:
        method = "exhaustive"
        bound = args.max_gap if args.max_gap is not None else 2 * X.n
        g = brute_shadow_search(X, po, bound, EnumBounds())
    rep.analysis("method", method)
    if g is None:
        rep.verdict("shadow exists", False, "no shadow within the search bounds")
        return 1
    rep.witness("y", formats.format_point(g.y, X.labels))
    rep.witness("K", g.K)
    rep.verdict("two-sided limit shadow", verify_two_sided(po, g.y, g.K))
    if args.max_gap is not None:
        rep.verdict(f"|K| <= {args.max_gap}", abs(g.K) <= args.max_gap, f"K={g.K}")
    if args.output:
        formats.dump_yaml({"y": formats.format_point(g.y, X.labels), "K": g.K}, args.output)
    return 0 if rep.passed else 1


def cmd_connect(args, rep: Report):
    X = formats.load_sft(args.file)
    x = formats.parse_point(args.source, X.labels)
    y = formats.parse_point(args.target, X.labels)
    delta = formats.parse_dyadic(args.delta)
    po = chain_connect(X, x, y, delta)
    err = validate_delta(po)
    doc = formats.pseudo_orbit_to_dict(po, X.labels)
    rep.analysis("length", len(po))
    rep.analysis("step error", str(err))
    rep.witness("pseudo-orbit", doc["finite"])
    rep.verdict("step error < delta", err < delta)
    rep.verdict("endpoints exact", po[0] == x and po[-1] == y)
    if args.output:
        formats.dump_yaml(doc, args.output)
    return 0 if rep.passed else 1


def cmd_spec_shadow(args, rep: Report):
    X = formats.load_sft(args.file)
    spec = formats.load_specification(args.spec, X.labels)
    eps = formats.parse_dyadic(args.eps)
    y = shadow_specification(X, spec, eps, periodic=args.periodic, L=args.spacing)
    rep.witness("y", formats.format_point(y, X.labels))
    worst = max(dist(y.shift(n), spec.P(n)) for n in spec.times())
    rep.analysis("worst distance", str(worst))
    rep.verdict("eps-shadowed", worst < eps)
    rep.verdict("member", member(X, y))
    if args.output:
        formats.dump_yaml({"y": formats.format_point(y, X.labels)}, args.output)
    return 0 if rep.passed else 1


def cmd_decay(args, rep: Report):
    S = formats.load_metric_space(args.file)
    po = formats.load_pseudo_orbit(args.pseudo_orbit)
    if not isinstance(po, TsLimitPseudoOrbit):
        raise ParseError("decay needs a tslimit pseudo-orbit")
    x = diagonal_shadow(po)
    rep.witness("x", formats.format_point(x))
    if S.scale != 1:
        rep.analysis("rescaled by", str(S.scale))
    for p in args.p:
        try:
            res = verify_decay(S, po, x, p, margin=decay_margin(p))
        except DecayFailure as exc:
            rep.verdict(f"decay p={p}", False, str(exc))
            continue
        rep.analysis(f"N_{p}", res.n_p)
        rep.analysis(f"minimal N_{p}", res.minimal_n)
        rep.analysis(f"bound from N_{p}", _yes(res.minimal_n <= res.n_p))
        rep.verdict(f"decay p={p}", True,
                    f"|m| >= {res.n_p + decay_margin(p)}, checked m in [{res.horizon[0]}, {res.horizon[1]}]")
    return 0 if rep.passed else 1


def cmd_verify(args, rep: Report):
    if args.witness:
        if not (args.sft and args.pseudo_orbit):
            raise ParseError("--witness needs --sft and --pseudo-orbit")
        X = formats.load_sft(args.sft)
        po = formats.load_pseudo_orbit(args.pseudo_orbit, X.labels)
        y, K = formats.load_witness(args.witness, X.labels)
        rep.verdict("witness member", member(X, y))
        rep.verdict("witness shadows", verify_two_sided(po, y, K), f"K={K}")
        return 0 if rep.passed else 1
    names = SUITES if args.suite == "all" else (args.suite,)
    for case, ok, detail in run_suites(names, args.seed):
        rep.verdict(case, ok, detail)
    return 0 if rep.passed else 1


def build_parser() -> argparse.ArgumentParser:
    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument("--format", choices=("plain", "structured"), default="plain")
    parser = argparse.ArgumentParser(prog="sftshadow", parents=[fmt],
                                     description="Shadowing on shifts of finite type.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", parents=[fmt], help="transitivity, period, entropy, gap")
    p.add_argument("file")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("generate", parents=[fmt], help="write an example SFT")
    p.add_argument("kind", choices=("pq", "cycle", "full", "golden"))
    p.add_argument("params", nargs="*", type=int)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("shadow", parents=[fmt], help="synthesize and verify a shadow")
    p.add_argument("file")
    p.add_argument("--pseudo-orbit", required=True)
    p.add_argument("--max-gap", type=int)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_shadow)

    p = sub.add_parser("connect", parents=[fmt], help="chain pseudo-orbit between two points")
    p.add_argument("file")
    p.add_argument("--from", dest="source", required=True)
    p.add_argument("--to", dest="target", required=True)
    p.add_argument("--delta", required=True)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_connect)

    p = sub.add_parser("spec-shadow", parents=[fmt], help="shadow a specification")
    p.add_argument("file")
    p.add_argument("--spec", required=True)
    p.add_argument("--eps", required=True)
    p.add_argument("--periodic", action="store_true")
    p.add_argument("--spacing", type=int)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_spec_shadow)

    p = sub.add_parser("decay", parents=[fmt], help="diagonal shadow on a metric full shift")
    p.add_argument("file")
    p.add_argument("--pseudo-orbit", required=True)
    p.add_argument("--p", type=int, nargs="+", default=[1, 2, 3, 4])
    p.set_defaults(func=cmd_decay)

    p = sub.add_parser("verify", parents=[fmt], help="oracle cross-checks or witness check")
    p.add_argument("--suite", choices=("all",) + SUITES, default="all")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--witness")
    p.add_argument("--sft")
    p.add_argument("--pseudo-orbit")
    p.set_defaults(func=cmd_verify)
    return parser


def run(argv=None) -> tuple[int, Report]:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        rep = Report(argv)
        return (0 if exc.code == 0 else 2), rep
    rep = Report(argv)
    try:
        code = args.func(args, rep)
    except (ParseError, OSError) as exc:
        rep.verdict("input", False, str(exc))
        code = 2
    except (NotTransitive, NotMixing) as exc:
        rep.verdict("precondition", False, f"{type(exc).__name__}: {exc}")
        code = 1
    except ValueError as exc:
        rep.verdict("input", False, f"{type(exc).__name__}: {exc}")
        code = 2
    rep.format = args.format
    return code, rep


def main(argv=None) -> int:
    code, rep = run(argv)
    fmt = getattr(rep, "format", "plain")
    if rep.data["command"] or rep.data["verdicts"]:
        out = rep.render(fmt)
        print(out, file=sys.stdout if code == 0 else sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
