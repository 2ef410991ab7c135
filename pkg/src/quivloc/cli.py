"""Command-line front end.

Exit codes: 0 success, 1 parse/input error, 2 unsupported quiver class,
3 stability parameter on a wall, 4 enumeration budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys

from .errors import InputError, QuivlocError
from .moment import DEFAULT_BUDGET, leaves_on_wall
from .presets import preset
from .quiver import Quiver, delta
from .reports import analyze_report, decide_report, leaves_report, roots_report
from .serialize import parse_rational, slice_to_json, walls_report
from .slices import slice_quiver
from .walls import dominant_instance, singular_hyperplanes

_VALUE_FLAGS = ("--v", "--w", "--lambda", "--theta", "--bound", "--wall")


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _int_list(text, field):
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError:
        raise InputError(f"--{field}: expected comma-separated integers, got {text!r}") from None


def _rational_list(text, field):
    return tuple(parse_rational(x, f"--{field}") for x in text.split(","))


def _load_quiver(args) -> Quiver:
    if args.preset and args.quiver:
        raise InputError("give either --preset or --quiver, not both")
    if args.preset:
        return preset(args.preset)
    if args.quiver:
        try:
            with open(args.quiver) as fh:
                data = json.load(fh)
        except OSError as exc:
            raise InputError(f"--quiver: cannot read {args.quiver}: {exc.strerror}") from None
        except json.JSONDecodeError as exc:
            raise InputError(f"--quiver {args.quiver}: line {exc.lineno}, column {exc.colno}: {exc.msg}") from None
        return Quiver.from_json(data, name=args.quiver)
    raise InputError("one of --preset or --quiver is required")


def _need(args, name):
    value = getattr(args, name)
    if value is None:
        raise InputError(f"--{name} is required for '{args.command}'")
    return value


def _wall_normal(quiver, text):
    if text.strip().lower() == "delta":
        return delta(quiver)
    return _int_list(text, "wall")


def _common(sub, needs_instance=True):
    sub.add_argument("--preset", help="built-in quiver, e.g. A3, D4~, jordan")
    sub.add_argument("--quiver", metavar="FILE", help='quiver JSON {"vertices": n, "arrows": [[t,h],...]}')
    if needs_instance:
        sub.add_argument("--v", help="dimension vector a,b,...")
        sub.add_argument("--w", help="framing vector a,b,...")
    sub.add_argument("--json", action="store_true", help="machine-readable output")
    sub.add_argument("--out", metavar="FILE", help="also write the JSON report to FILE")
    sub.add_argument("--budget", type=int, default=DEFAULT_BUDGET, help="decomposition enumeration node cap")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="quivloc", description="Localization questions for Nakajima quiver varieties")
    subs = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    _common(subs.add_parser("analyze", help="flatness, walls and singular hyperplanes"))
    p = subs.add_parser("decide", help="localization verdicts at (lambda, theta)")
    _common(p)
    p.add_argument("--lambda", dest="lambda_", metavar="P/Q,...", help="quantization parameter")
    p.add_argument("--theta", metavar="P/Q,...", help="stability parameter")
    p = subs.add_parser("leaves", help="symplectic leaves on a classical wall")
    _common(p)
    p.add_argument("--wall", help="wall normal a,b,... or 'delta'; default: every wall")
    p = subs.add_parser("slice", help="slice quiver at a leaf of a wall")
    _common(p)
    p.add_argument("--wall", required=True, help="wall normal a,b,... or 'delta'")
    p.add_argument("--leaf", default="minimal", help="'minimal' or a 0-based leaf index")
    p = subs.add_parser("roots", help="positive roots below a bound")
    _common(p, needs_instance=False)
    p.add_argument("--bound", required=True, help="bound a,b,...")
    _common(subs.add_parser("walls", help="classical walls with singular offsets"))
    return parser


def _normalize_argv(argv):
    """Glue values such as '-1/2' to their flag so argparse does not read them as options."""
    out = []
    it = iter(argv)
    for tok in it:
        if tok in _VALUE_FLAGS:
            nxt = next(it, None)
            out.append(tok if nxt is None else f"{tok}={nxt}")
        else:
            out.append(tok)
    return out


def _instance(args):
    return _int_list(_need(args, "v"), "v"), _int_list(_need(args, "w"), "w")


def run(args) -> tuple[dict, str]:
    quiver = _load_quiver(args)
    if args.command == "roots":
        report = roots_report(quiver, _int_list(args.bound, "bound"))
        return report, render_roots(report)
    v, w = _instance(args)
    if args.command == "analyze":
        report = analyze_report(quiver, v, w, budget=args.budget)
        return report, render_analyze(report)
    if args.command == "walls":
        report = walls_report(singular_hyperplanes(quiver, v, w, budget=args.budget))
        return report, render_walls(report["walls"])
    if args.command == "decide":
        if args.lambda_ is None:
            raise InputError("--lambda is required for 'decide'")
        lam = _rational_list(args.lambda_, "lambda")
        theta = _rational_list(_need(args, "theta"), "theta")
        report = decide_report(quiver, v, w, lam, theta, budget=args.budget)
        return report, render_decide(report)
    if args.command == "leaves":
        normals = None if args.wall is None else [_wall_normal(quiver, args.wall)]
        report = leaves_report(quiver, v, w, normals, budget=args.budget)
        return report, render_leaves(report)
    if args.command == "slice":
        inst = dominant_instance(quiver, v, w)
        leaves = leaves_on_wall(quiver, inst.v, inst.w, _wall_normal(quiver, args.wall))
        if args.leaf == "minimal":
            leaf = next(r for r in leaves if r.minimal)
        else:
            try:
                leaf = leaves[int(args.leaf)]
            except (ValueError, IndexError):
                raise InputError(f"--leaf: expected 'minimal' or an index 0..{len(leaves) - 1}") from None
        report = slice_to_json(slice_quiver(quiver, inst.w, leaf))
        return report, render_slice(report)
    raise InputError(f"unknown command {args.command!r}")


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(_normalize_argv(sys.argv[1:] if argv is None else argv))
    try:
        report, text = run(args)
    except QuivlocError as exc:
        print(f"quivloc: error: {exc}", file=sys.stderr)
        return exc.exit_code
    payload = json.dumps(report, indent=2)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(payload + "\n")
    print(payload if args.json else text)
    return 0


# text renderers


def _vec(xs):
    return "(" + ",".join(str(x) for x in xs) + ")"


def _table(rows, header):
    widths = [max(len(str(r[i])) for r in [header, *rows]) for i in range(len(header))]
    lines = ["  ".join(str(c).ljust(wd) for c, wd in zip(header, widths)).rstrip()]
    lines += ["  ".join(str(c).ljust(wd) for c, wd in zip(r, widths)).rstrip() for r in rows]
    return "\n".join(lines)


def render_walls(walls) -> str:
    if not walls:
        return "no classical walls"
    rows = [
        (_vec(x["normal"]), x["kind"], x["m"], x["v_bar"], x["w_bar"], "{" + ", ".join(x["singular_offsets"]) + "}")
        for x in walls
    ]
    return _table(rows, ("normal", "kind", "m", "v_bar", "w_bar", "singular offsets"))


def _rep(rt):
    parts = [_vec(rt["v0"])] + [f"{_vec(s['root'])},{s['multiplicity']}" for s in rt["summands"]]
    return "(" + "; ".join(parts) + ")"


def render_analyze(r) -> str:
    d = r["dominantized"]
    f = r["flatness"]
    lines = [
        f"quiver          {r['classification']}",
        f"v, w            {_vec(r['v'])}, {_vec(r['w'])}",
        f"dominant v'     {_vec(d['v'])}" + ("  (substituted)" if d["substituted"] else "") + ("  (empty)" if d["empty"] else ""),
        f"flat            {'yes' if f['flat'] else 'no'}" + ("  (dominant weight)" if f["fast_path"] else ""),
    ]
    if f["witness"]:
        lines.append(f"violating decomposition  {_rep(f['witness'])}")
    if f["flat"]:
        lines.append(f"condition (*)   {'holds' if r['verify_star'] else 'FAILS'}")
        lines += ["", render_walls(r["walls"])]
    return "\n".join(lines)


def render_decide(r) -> str:
    rows = []
    for name, v in r["verdicts"].items():
        rows.append((name, "holds" if v["holds"] else "fails", v["confidence"], v["basis"]))
    out = [f"{r['classification']}  v'={_vec(r['dominantized']['v'])}  lambda={_vec(r['lambda'])}  theta={_vec(r['theta'])}", ""]
    out.append(_table(rows, ("question", "verdict", "confidence", "basis")))
    walls = r["verdicts"]["gamma_exact"]["walls"]
    if walls:
        wrows = [
            (_vec(x["normal"]), x["pairing"], "yes" if x["relevant"] else "no", x["threshold"] or "-", x["side"] or "-")
            for x in walls
        ]
        out += ["", _table(wrows, ("normal", "pairing", "relevant", "threshold", "side"))]
    st = r["slice_transfer"]
    out += ["", f"slice transfer  {'consistent' if st['consistent'] else 'VIOLATED at ' + str(st['violations'])}"]
    return "\n".join(out)


def render_leaves(r) -> str:
    if not r["leaves"]:
        return "no classical walls"
    out = []
    for entry in r["leaves"]:
        out.append(f"wall {_vec(entry['normal'])} ({entry['kind']}): {len(entry['types'])} leaves")
        for t in entry["types"]:
            out.append("  " + _rep(t) + ("  minimal" if t.get("minimal") else ""))
    return "\n".join(out)


def render_slice(r) -> str:
    return "\n".join(
        [
            f"slice quiver    {r['vertices']} vertices, arrows {r['arrows']}",
            f"v_bar           {_vec(r['v_bar'])}",
            f"w_bar           {_vec(r['w_bar'])}",
            f"eta rows        {', '.join(_vec(x) for x in r['eta'])}",
        ]
    )


def render_roots(r) -> str:
    rows = [(_vec(x["coords"]), x["kind"]) for x in r["roots"]]
    return f"{len(rows)} roots\n" + _table(rows, ("root", "kind"))


if __name__ == "__main__":
    sys.exit(main())
