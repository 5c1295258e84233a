"""Command-line entry point: ``ordinalforge <command> ...``.

Exit status is 0 on success, 1 on a user error (bad syntax, value outside a
function's domain, fuel exhausted) and 2 when an internal invariant fails.
"""

from __future__ import annotations

import argparse
import json
import shlex
import sys
from dataclasses import dataclass, field
from typing import Any

from . import buchholz as B
from . import cnf_oracle as O
from . import hierarchy as H
from . import term as T

USER_ERRORS = (ValueError, H.FuelExhausted, H.CapExceededError)


@dataclass
class Envelope:
    command: list
    status: str = "ok"
    text: str = ""
    value: Any = None
    diagnostics: list = field(default_factory=list)

    def render(self, fmt: str) -> str:
        if fmt == "json":
            return json.dumps({
                "status": self.status,
                "command": self.command,
                "result": {"text": self.text, "value": self.value},
                "diagnostics": self.diagnostics,
            }, sort_keys=True)
        if self.status == "ok":
            return self.text
        return "error: " + "; ".join(self.diagnostics)


# -- structured payloads ------------------------------------------------------


def term_to_json(v):
    if isinstance(v, T.ArrayTerm):
        return [[term_to_json(c), term_to_json(p)] for c, p in v.entries]
    if isinstance(v, T.Zero):
        return {"zero": True}
    if isinstance(v, T.Sum):
        return {"sum": [term_to_json(p) for p in v.parts]}
    return {"phi": term_to_json(v.array)}


def term_from_json(obj):
    if isinstance(obj, list):
        return T.ArrayTerm((term_from_json(c), term_from_json(p)) for c, p in obj)
    if "zero" in obj:
        return T.ZERO
    if "sum" in obj:
        return T.make_sum(term_from_json(p) for p in obj["sum"])
    return T.Phi(term_from_json(obj["phi"]))


def oterm_to_json(a: B.OmegaTerm):
    return [[oterm_to_json(e), term_to_json(c)] for e, c in a.entries]


def oterm_from_json(obj) -> B.OmegaTerm:
    return B.OmegaTerm((oterm_from_json(e), term_from_json(c)) for e, c in obj)


# -- commands -----------------------------------------------------------------


def _cmp_symbol(c):
    return {-1: "<", 0: "=", 1: ">"}[c]


def cmd_compare(args, env):
    c = T.compare(T.parse_term(args.a), T.parse_term(args.b))
    env.text = _cmp_symbol(c)
    env.value = c


def cmd_std(args, env):
    why = T.standardness(T.parse_term(args.term))
    env.value = why is None
    env.text = "standard" if why is None else f"not standard: {why}"
    if why is not None:
        env.diagnostics.append(why)


def cmd_psi0(args, env):
    out = B.psi0_convert(B.parse_oterm(args.oterm))
    env.text, env.value = T.to_text(out), term_to_json(out)


def cmd_v(args, env):
    out = B.v_map(B.parse_oterm(args.oterm))
    env.text, env.value = T.to_text(out), term_to_json(out)


def cmd_t(args, env):
    out = B.t_map(B.parse_oterm(args.oterm))
    env.text, env.value = B.oterm_to_text(out), oterm_to_json(out)


def cmd_fs(args, env):
    t = T.parse_term(args.term)
    T._require_standard(t)
    out = H.fundamental(t, args.n, args.system)
    env.text, env.value = T.to_text(out), term_to_json(out)


def _hierarchy(fn, args, env):
    t = T.parse_term(args.term)
    fuel = H.Fuel(args.fuel if args.fuel is not None else H.default_fuel())
    try:
        out = fn(t, args.n, args.system, fuel)
    finally:
        env.diagnostics.append(f"steps={fuel.used}")
    env.text, env.value = str(out), {"value": out, "steps": fuel.used}


def cmd_hardy(args, env):
    _hierarchy(H.hardy, args, env)


def cmd_fgh(args, env):
    _hierarchy(H.fgh, args, env)


def cmd_enum(args, env):
    terms = H.enumerate_standard(H.NormBudget(args.max_norm, args.cap))
    if args.count_only:
        env.text, env.value = str(len(terms)), len(terms)
    else:
        env.text = "\n".join(T.to_text(t) for t in terms)
        env.value = [term_to_json(t) for t in terms]


def cmd_oracle(args, env):
    if args.kind == "cnf":
        out = O.term_to_cnf(T.parse_term(args.terms[0]))
        env.text = "not below e0" if out is None else str(out)
        env.value = None if out is None else env.text
        return
    if len(args.terms) != 2:
        raise ValueError("oracle bv takes two terms")
    a, b = (O.term_to_bv(T.parse_term(s)) for s in args.terms)
    if a is None or b is None:
        raise ValueError("term outside the binary Veblen fragment")
    c = O.binary_veblen_compare(a, b)
    env.text, env.value = _cmp_symbol(c), c


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="ordinalforge", description=__doc__.splitlines()[0])
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--in", dest="infile", metavar="FILE",
                   help="run one query per line of FILE")
    sub = p.add_subparsers(dest="command")

    s = sub.add_parser("compare", help="compare two terms")
    s.add_argument("a")
    s.add_argument("b")
    s.set_defaults(fn=cmd_compare)

    s = sub.add_parser("std", help="standardness check")
    s.add_argument("term")
    s.set_defaults(fn=cmd_std)

    for name, fn, what in (("psi0", cmd_psi0, "psi_0 as a Veblen term"),
                           ("v", cmd_v, "the array map V"),
                           ("t", cmd_t, "the map t")):
        s = sub.add_parser(name, help=what)
        s.add_argument("oterm")
        s.set_defaults(fn=fn)

    s = sub.add_parser("fs", help="fundamental sequence member")
    s.add_argument("term")
    s.add_argument("n", type=int)
    s.add_argument("--system", choices=H.FS_SYSTEMS, default="class")
    s.set_defaults(fn=cmd_fs)

    for name, fn in (("hardy", cmd_hardy), ("fgh", cmd_fgh)):
        s = sub.add_parser(name, help=f"evaluate the {name} hierarchy")
        s.add_argument("term")
        s.add_argument("n", type=int)
        s.add_argument("--fuel", type=int, default=None)
        s.add_argument("--system", choices=H.FS_SYSTEMS, default="class")
        s.set_defaults(fn=fn)

    s = sub.add_parser("enum", help="list standard terms by norm")
    s.add_argument("--max-norm", type=int, required=True)
    s.add_argument("--count-only", action="store_true")
    s.add_argument("--cap", type=int, default=H.DEFAULT_CAP)
    s.set_defaults(fn=cmd_enum)

    s = sub.add_parser("oracle", help=argparse.SUPPRESS)
    s.add_argument("kind", choices=("cnf", "bv"))
    s.add_argument("terms", nargs="+")
    s.set_defaults(fn=cmd_oracle)
    return p


def _run_one(parser, argv):
    env = Envelope(command=list(argv))
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        if e.code == 0:
            return None, 0
        env.status = "error"
        env.diagnostics.append("bad arguments")
        return env, 1
    if args.command is None:
        env.status = "error"
        env.diagnostics.append("no command given")
        return env, 1
    try:
        args.fn(args, env)
        return env, 0
    except USER_ERRORS as e:
        env.status = "error"
        env.diagnostics.append(f"{type(e).__name__}: {e}")
        return env, 1
    except Exception as e:  # invariant failures of the library itself
        env.status = "error"
        env.diagnostics.append(f"internal {type(e).__name__}: {e}")
        return env, 2


def run(argv=None, out=None) -> int:
    sys.set_int_max_str_digits(0)
    out = sys.stdout if out is None else out
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    pre = argparse.ArgumentParser(add_help=False)
    pre.add_argument("--format", choices=("text", "json"), default="text")
    pre.add_argument("--in", dest="infile")
    top, _ = pre.parse_known_args(argv)
    if top.infile is None:
        env, code = _run_one(parser, argv)
        if env is not None:
            print(env.render(top.format), file=out)
        return code
    prefix = ["--format", top.format]
    worst = 0
    with open(top.infile, encoding="utf-8") as fh:
        for line in fh:
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            env, code = _run_one(parser, prefix + shlex.split(line))
            if env is not None:
                print(env.render(top.format), file=out)
            worst = max(worst, code)
    return worst


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
