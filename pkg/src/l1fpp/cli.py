"""Command-line front end.

Every rational is read and written as an exact "p/q" string.  A run prints
a plain table to stdout and, with ``--out``, writes a JSON report; orbit
tables go to ``--csv``.  Exit codes: 0 success, 1 a checked contract
failed, 2 bad input, 3 oracle dimension limit.
"""

from __future__ import annotations

import argparse
import csv
import json
import random
import sys
from dataclasses import asdict, dataclass, fields
from fractions import Fraction

from . import fpplab, hyperplane, polyoracle, stability
from .fpplab import CPoint
from .hyperplane import HyperplaneSpec, renormed
from .polyoracle import OracleDimensionError
from .seqcore import (
    ConvergentSeq,
    SummableSeq,
    direct_pair,
    format_rational,
    l1_norm,
    parse_rational,
)

DEFAULT_SEED = 1729

COMMANDS = (
    "norm eval",
    "dual eval",
    "dual oracle-check",
    "witness",
    "fpp isometry",
    "fpp orbit",
    "fpp classic-c",
    "stability constants",
    "stability counterexample",
    "bm estimate",
    "lemma31 check",
    "kernel bound",
    "facts",
)

LIST_FIELDS = ("alpha", "beta", "f", "x", "xstar", "xstar_n", "z", "p0", "q0")
RATIONAL_FIELDS = ("r_n", "epsilon", "limit", "z_limit")
INT_FIELDS = ("n", "N", "steps", "seed", "count", "K")


class ConfigError(ValueError):
    pass


@dataclass
class RunConfig:
    command: str
    alpha: list | None = None
    beta: list | None = None
    f: list | None = None
    x: list | None = None
    xstar: list | None = None
    xstar_n: list | None = None
    z: list | None = None
    p0: list | None = None
    q0: list | None = None
    n: int | None = None
    N: int | None = None
    steps: int | None = None
    seed: int = DEFAULT_SEED
    count: int | None = None
    K: int | None = None
    r_n: str | None = None
    epsilon: str | None = None
    limit: str | None = None
    z_limit: str | None = None
    out: str | None = None
    csv: str | None = None
    decimal: bool = False

    def __post_init__(self):
        if self.command not in COMMANDS:
            raise ConfigError(f"unknown command {self.command!r}")
        for name in LIST_FIELDS:
            value = getattr(self, name)
            if value is not None:
                setattr(self, name, [_canonical(name, v) for v in value])
        for name in RATIONAL_FIELDS:
            value = getattr(self, name)
            if value is not None:
                setattr(self, name, _canonical(name, value))
        for name in INT_FIELDS:
            value = getattr(self, name)
            if value is not None and (isinstance(value, bool) or not isinstance(value, int)):
                raise ConfigError(f"{name}: expected an integer, got {value!r}")

    def to_dict(self) -> dict:
        return {k: v for k, v in asdict(self).items() if v is not None and v is not False}

    @classmethod
    def from_dict(cls, data: dict) -> "RunConfig":
        known = {f.name for f in fields(cls)}
        unknown = sorted(set(data) - known)
        if unknown:
            raise ConfigError(f"unknown field(s): {', '.join(unknown)}")
        if "command" not in data:
            raise ConfigError("missing field: command")
        return cls(**data)

    def rationals(self, name) -> list:
        value = getattr(self, name)
        return None if value is None else [parse_rational(v) for v in value]

    def rational(self, name):
        value = getattr(self, name)
        return None if value is None else parse_rational(value)


def _canonical(name, value) -> str:
    try:
        if isinstance(value, int) and not isinstance(value, bool):
            return str(value)
        return format_rational(parse_rational(str(value)))
    except ValueError:
        raise ConfigError(f"{name}: invalid rational {value!r}") from None


def _rational_list(text: str) -> list:
    parts = text.split(",") if text.strip() else []
    out = []
    for p in parts:
        try:
            out.append(format_rational(parse_rational(p)))
        except ValueError:
            raise argparse.ArgumentTypeError(f"invalid rational {p.strip()!r}") from None
    return out


def _rational(text: str) -> str:
    try:
        return format_rational(parse_rational(text))
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid rational {text!r}") from None


# flag name -> (dest, argparse kwargs)
_FLAGS = {
    "alpha": ("--alpha", dict(type=_rational_list, help="comma-separated p/q list")),
    "beta": ("--beta", dict(type=_rational_list)),
    "f": ("--f", dict(type=_rational_list, help="functional f(1), f(2), ...")),
    "x": ("--x", dict(type=_rational_list, help="prefix x(1), x(2), ...")),
    "xstar": ("--xstar", dict(type=_rational_list)),
    "xstar_n": ("--xstar-n", dict(type=_rational_list)),
    "z": ("--z", dict(type=_rational_list)),
    "p0": ("--p0", dict(type=_rational_list, help="weights t0, t1, ...")),
    "q0": ("--q0", dict(type=_rational_list)),
    "n": ("--n", dict(type=int)),
    "N": ("--N", dict(type=int)),
    "steps": ("--steps", dict(type=int)),
    "count": ("--count", dict(type=int)),
    "K": ("--K", dict(type=int)),
    "r_n": ("--r-n", dict(type=_rational)),
    "epsilon": ("--epsilon", dict(type=_rational)),
    "limit": ("--limit", dict(type=_rational)),
    "z_limit": ("--z-limit", dict(type=_rational)),
}

_COMMAND_FLAGS = {
    "norm eval": ("alpha", "r_n", "n", "x", "limit"),
    "dual eval": ("alpha", "r_n", "n", "f"),
    "dual oracle-check": ("alpha", "r_n", "n", "f", "N", "count"),
    "witness": ("alpha", "r_n", "n", "f", "N"),
    "fpp isometry": ("alpha", "r_n", "n", "p0", "q0", "count"),
    "fpp orbit": ("alpha", "r_n", "n", "p0", "q0", "steps"),
    "fpp classic-c": ("steps", "count"),
    "stability constants": ("alpha", "N"),
    "stability counterexample": ("beta", "epsilon", "count", "K"),
    "bm estimate": ("alpha", "N"),
    "lemma31 check": ("count",),
    "kernel bound": ("xstar", "xstar_n", "z", "z_limit"),
    "facts": (),
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="l1fpp", description=__doc__.splitlines()[0])
    parser.add_argument("--config", help="JSON run configuration (replaces the subcommand)")
    parser.add_argument("--out", dest="config_out", help="with --config: write the JSON report here")
    parser.add_argument("--csv", dest="config_csv", help="with --config: write the orbit table here")
    groups = parser.add_subparsers(dest="group")
    grouped = {}
    for command in COMMANDS:
        head, _, sub = command.partition(" ")
        grouped.setdefault(head, []).append((sub, command))
    for head, subs in grouped.items():
        gp = groups.add_parser(head)
        if len(subs) == 1 and subs[0][0] == "":
            _add_flags(gp, subs[0][1])
            continue
        inner = gp.add_subparsers(dest="action", required=True)
        for sub, command in subs:
            _add_flags(inner.add_parser(sub), command)
    return parser


def _add_flags(p, command):
    p.set_defaults(command=command)
    for name in _COMMAND_FLAGS[command]:
        flag, kwargs = _FLAGS[name]
        p.add_argument(flag, dest=name, **kwargs)
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--out", help="write the JSON report here")
    if command in ("fpp orbit", "fpp classic-c"):
        p.add_argument("--csv", help="write the displacement table here")
    p.add_argument("--decimal", action="store_true", help="add display-only decimals")
    p.add_argument("--dump-config", action="store_true", help="print the canonical config and exit")


def parse_config(argv=None) -> RunConfig:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.config:
        try:
            with open(args.config) as fh:
                data = json.load(fh)
            if not isinstance(data, dict):
                raise ConfigError("expected a JSON object")
            cfg = RunConfig.from_dict(data)
        except (OSError, json.JSONDecodeError, ConfigError, TypeError) as exc:
            parser.exit(2, f"l1fpp: error: config: {exc}\n")
        cfg.out = args.config_out or cfg.out
        cfg.csv = args.config_csv or cfg.csv
        return cfg
    if not getattr(args, "command", None):
        parser.print_usage(sys.stderr)
        parser.exit(2, "l1fpp: error: a command is required\n")
    data = {k: v for k, v in vars(args).items()
            if k not in ("config", "config_out", "config_csv", "group", "action", "dump_config")
            and v is not None}
    cfg = RunConfig.from_dict(data)
    cfg._dump = args.dump_config
    return cfg


# --- reporting ---------------------------------------------------------------

def _jsonable(value):
    if isinstance(value, Fraction):
        return format_rational(value)
    if isinstance(value, ConvergentSeq):
        return {"prefix": [format_rational(v) for v in value.prefix], "limit": format_rational(value.limit)}
    if isinstance(value, SummableSeq):
        return {str(i): format_rational(v) for i, v in value.items()}
    if isinstance(value, CPoint):
        return {"t0": format_rational(value.t0), "weights": {str(k): format_rational(v) for k, v in value.weights}}
    if isinstance(value, dict):
        return {str(k): _jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    if hasattr(value, "value") and isinstance(getattr(value, "value"), str):
        return value.value
    return value


class Report:
    def __init__(self, config: RunConfig):
        self.config = config
        self.outputs = {}
        self.certificates = []
        self.rows = []

    def out(self, key, value, label=None):
        self.outputs[key] = value
        self.rows.append((label or key, value))

    def cert(self, name, ok, witness=None):
        entry = {"name": name, "status": "pass" if ok else "fail"}
        if witness is not None and not ok:
            entry["witness"] = witness
        self.certificates.append(entry)

    @property
    def ok(self) -> bool:
        return all(c["status"] == "pass" for c in self.certificates)

    def to_json(self) -> str:
        inputs = {k: v for k, v in self.config.to_dict().items() if k not in ("out", "csv", "command")}
        body = {
            "command": self.config.command,
            "inputs": inputs,
            "outputs": _jsonable(self.outputs),
            "certificates": _jsonable(self.certificates),
            "timings": {},
        }
        return json.dumps(body, indent=2, sort_keys=True) + "\n"

    def table(self) -> str:
        lines = [f"# {self.config.command}"]
        width = max((len(str(k)) for k, _ in self.rows), default=0)
        for key, value in self.rows:
            lines.append(f"{str(key):<{width}}  {_show(value, self.config.decimal)}")
        for c in self.certificates:
            line = f"[{c['status'].upper()}] {c['name']}"
            if "witness" in c:
                line += f"  witness: {json.dumps(_jsonable(c['witness']))}"
            lines.append(line)
        return "\n".join(lines) + "\n"


def _show(value, decimal=False) -> str:
    if isinstance(value, Fraction):
        text = format_rational(value)
        if decimal and value.denominator != 1:
            text += f"  (~{float(value):.6g}, display only)"
        return text
    if isinstance(value, (ConvergentSeq, SummableSeq)):
        return str(value)
    if isinstance(value, (list, tuple)) and value and all(isinstance(v, Fraction) for v in value):
        return ", ".join(format_rational(v) for v in value)
    if isinstance(value, (dict, list)):
        return json.dumps(_jsonable(value))
    return str(value)


# --- helpers -----------------------------------------------------------------

def _alpha(cfg: RunConfig) -> SummableSeq:
    if cfg.alpha is not None:
        return SummableSeq.from_list(cfg.rationals("alpha"))
    if cfg.r_n is not None:
        return SummableSeq.from_list([cfg.rational("r_n")])
    raise ConfigError("alpha (or r_n) is required")


def _renorm_spec(cfg: RunConfig) -> HyperplaneSpec:
    alpha = _alpha(cfg)
    n = cfg.n if cfg.n is not None else max(alpha.max_index, 1)
    return renormed(alpha, n)


def _cpoint(values) -> CPoint:
    values = [parse_rational(v) for v in values]
    return CPoint(values[0], tuple((k, v) for k, v in enumerate(values[1:], start=1))).check()


def _random_f(rng, support):
    idx = rng.sample(range(1, support + 1), rng.randint(0, support))
    return SummableSeq.from_dict({i: Fraction(rng.randint(-9, 9), rng.randint(1, 6)) for i in idx})


# --- commands ----------------------------------------------------------------

def _norm_eval(cfg, rep):
    alpha = _alpha(cfg)
    if cfg.x is None:
        raise ConfigError("x is required")
    if cfg.n is not None:
        spec = renormed(alpha, cfg.n)
    else:
        spec = HyperplaneSpec(alpha)
    if cfg.limit is None:
        x = hyperplane.lift(spec, cfg.rationals("x"))
    else:
        x = ConvergentSeq(tuple(cfg.rationals("x")), cfg.rational("limit"))
        if not hyperplane.member(spec, x):
            raise ConfigError("not in hyperplane")
    rep.out("x", x)
    sup = hyperplane.sup_norm(x)
    rep.out("sup_norm", sup, "||x||_inf")
    if cfg.n is not None:
        value = hyperplane.norm_n(spec, x)
        rep.out("norm_n", value, "||x||_n")
        r = spec.r_n
        rep.cert("sandwich (1+r_n)||x||_inf <= ||x||_n <= 2||x||_inf",
                 (1 + r) * sup <= value <= 2 * sup, {"x": x})


def _dual_eval(cfg, rep):
    spec = _renorm_spec(cfg)
    f = SummableSeq.from_list(cfg.rationals("f") or [])
    value = hyperplane.dual_norm_n(spec, f)
    rep.out("dual_norm_n", value, "|f|_n")
    rep.out("l1_norm", l1_norm(f), "|f|_1")
    rep.out("r_n", spec.r_n)
    rep.cert("sandwich |f|_1/2 <= |f|_n <= |f|_1/(1+r_n)",
             l1_norm(f) / 2 <= value <= l1_norm(f) / (1 + spec.r_n), {"f": f})


def _dual_oracle_check(cfg, rep):
    spec = _renorm_spec(cfg)
    if cfg.f is not None:
        cases = [SummableSeq.from_list(cfg.rationals("f"))]
    else:
        rng = random.Random(cfg.seed)
        cases = [_random_f(rng, 6) for _ in range(cfg.count or 200)]
    N = cfg.N or max([spec.n + 1, 6 if cfg.f is None else 0] + [f.max_index for f in cases])
    space = polyoracle.truncate(spec, N)
    mismatches = []
    for f in cases:
        closed = hyperplane.dual_norm_n(spec, f)
        oracle = polyoracle.dual_norm_oracle(space, f)
        if closed != oracle:
            mismatches.append({"f": f, "closed_form": closed, "oracle": oracle})
    rep.out("N", N)
    rep.out("cases", len(cases))
    rep.out("vertices", len(space.ball.vertices()))
    if len(cases) == 1:
        rep.out("dual_norm_n", hyperplane.dual_norm_n(spec, cases[0]), "|f|_n")
        rep.out("oracle", polyoracle.dual_norm_oracle(space, cases[0]))
    rep.cert("closed form equals vertex oracle", not mismatches,
             mismatches[0] if mismatches else None)


def _witness(cfg, rep):
    spec = _renorm_spec(cfg)
    f = SummableSeq.from_list(cfg.rationals("f") or [])
    N = cfg.N or max(spec.n + 1, f.max_index)
    x = hyperplane.witness(spec, f, N)
    value = hyperplane.dual_norm_n(spec, f)
    attained = direct_pair(f, x)
    nx = hyperplane.norm_n(spec, x)
    rep.out("witness", x, "x^N")
    rep.out("norm_n", nx, "||x^N||_n")
    rep.out("pairing", attained, "f(x^N)")
    rep.out("dual_norm_n", value, "|f|_n")
    rep.cert("witness in unit ball", nx <= 1, {"x": x})
    rep.cert("pairing attains |f|_n", attained == value, {"f": f, "x": x})


def _fpp_isometry(cfg, rep):
    spec = _renorm_spec(cfg)
    if cfg.p0 is not None and cfg.q0 is not None:
        pairs = [(_cpoint(cfg.p0), _cpoint(cfg.q0))]
    else:
        rng = random.Random(cfg.seed)
        pairs = [(fpplab.random_cpoint(rng, rng.randint(1, 8)), fpplab.random_cpoint(rng, rng.randint(1, 8)))
                 for _ in range(cfg.count or 500)]
    failures = []
    closure = True
    for p, q in pairs:
        before, after = fpplab.isometry_check(spec, p, q)
        closure &= fpplab.shift_T(p).in_simplex() and fpplab.shift_T(q).in_simplex()
        if before != after:
            failures.append({"p": p, "q": q, "before": before, "after": after})
    if len(pairs) == 1:
        before, after = fpplab.isometry_check(spec, *pairs[0])
        rep.out("d_before", before)
        rep.out("d_after", after)
    rep.out("pairs", len(pairs))
    rep.cert("T is an exact |.|_n isometry", not failures, failures[0] if failures else None)
    rep.cert("T maps C into C", closure)
    cert = fpplab.fixed_point_free_certificate(spec, 100)
    rep.cert("T is fixed point free (K=100)", cert.ok)


def _orbit_csv(path, disp_p, disp_q):
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(["step", "displacement_p", "displacement_q"])
        for k, (a, b) in enumerate(zip(disp_p, disp_q)):
            w.writerow([k, format_rational(a), format_rational(b)])


def _monotone_positive(seq):
    return all(d > 0 for d in seq) and all(b <= a for a, b in zip(seq, seq[1:]))


def _fpp_orbit(cfg, rep):
    spec = _renorm_spec(cfg)
    steps = cfg.steps or 200
    p0 = _cpoint(cfg.p0 or ["1"])
    q0 = _cpoint(cfg.q0 or ["0", "1"])
    dp = fpplab.krasnoselskii_orbit(spec, p0, steps)
    dq = fpplab.krasnoselskii_orbit(spec, q0, steps)
    rep.out("steps", steps)
    rep.out("first_displacement_p", dp[0])
    rep.out("last_displacement_p", dp[-1])
    rep.out("first_displacement_q", dq[0])
    rep.out("last_displacement_q", dq[-1])
    rep.outputs["displacements_p"] = dp
    rep.outputs["displacements_q"] = dq
    rep.cert("displacements from p0 non-increasing and positive", _monotone_positive(dp))
    rep.cert("displacements from q0 non-increasing and positive", _monotone_positive(dq))
    if cfg.csv:
        _orbit_csv(cfg.csv, dp, dq)


def _fpp_classic(cfg, rep):
    report = fpplab.classic_c_example(steps=cfg.steps or 50, pairs=cfg.count or 100, seed=cfg.seed)
    rep.out("pairs", len(report.isometry_pairs))
    rep.out("last_displacement", report.displacements[-1])
    rep.outputs["displacements"] = report.displacements
    rep.outputs["weak_star"] = [{"x": x, "target": t, "values": v} for x, t, v, _ in report.weak_star]
    rep.cert("shift is an exact |.|_1 isometry", all(a == b for a, b in report.isometry_pairs))
    rep.cert("shift is fixed point free", report.fixed_point.ok)
    rep.cert("e*_m -> e*_1 weak* on representable x", all(ok for *_, ok in report.weak_star))
    rep.cert("displacements non-increasing and positive", _monotone_positive(report.displacements))
    if cfg.csv:
        _orbit_csv(cfg.csv, report.displacements, report.displacements)


def _stability_constants(cfg, rep):
    alpha = _alpha(cfg)
    rs = stability.r_star(alpha)
    gs = stability.gamma_star(rs)
    N = cfg.N or alpha.max_index + 2
    bm = stability.bm_upper_c0(alpha, N)
    formula = 1 + 2 * rs
    rep.out("r_star", rs, "r*")
    rep.out("gamma_star", gs, "gamma*")
    rep.out("bm_upper", bm.best, "bm_upper <=")
    rep.out("bm_params", bm.params.describe())
    rep.out("bm_formula", formula, "1 + 2|alpha|_1")
    rep.cert("bm_upper <= 1 + 2|alpha|_1", bm.best <= formula, {"best": bm.best})
    a, b, c = stability.corollary_chain(alpha)
    rep.cert("|alpha|_1 < 1 <=> gamma* > 1 <=> 1 + 2|alpha|_1 < 3", a == b == c)


def _stability_counterexample(cfg, rep):
    if cfg.beta is None or cfg.epsilon is None:
        raise ConfigError("beta and epsilon are required")
    beta = SummableSeq.from_list(cfg.rationals("beta"))
    bundle = stability.counterexample_pipeline(beta, cfg.rational("epsilon"),
                                               checks=cfg.count or 50, seed=cfg.seed, K=cfg.K or 20)
    rep.out("n", bundle.n)
    rep.out("r_n", bundle.r_n)
    rep.out("r_star", bundle.r_star, "r*")
    rep.out("set_C", bundle.set_C)
    rep.out("map_T", bundle.map_T)
    rep.out("distance_bound", bundle.distance_bound, "d(X, Y) <=")
    rep.out("limit_bound", stability.gamma_star(bundle.r_star), "2/(1+r*)")
    for name, ok in bundle.certificates.items():
        rep.cert(name, ok)


def _bm_estimate(cfg, rep):
    alpha = _alpha(cfg)
    N = cfg.N or alpha.max_index + 2
    bm = stability.bm_upper_c0(alpha, N)
    rep.out("N", N)
    rep.out("best", bm.best, "||phi|| ||phi^-1||")
    rep.out("params", bm.params.describe())
    rep.outputs["candidates"] = bm.report
    formula = 1 + 2 * l1_norm(alpha)
    rep.out("formula", formula, "1 + 2|alpha|_1")
    rep.cert("best <= 1 + 2|alpha|_1", bm.best <= formula, {"best": bm.best})


def _lemma31(cfg, rep):
    rng = random.Random(cfg.seed)
    count = cfg.count or 100
    failures = []
    for i in range(count):
        m, dom, cod = polyoracle.random_surjection(rng)
        delta = polyoracle.inscribed_radius(m, dom, cod)
        qinv = polyoracle.quotient_inverse_norm(m, dom, cod)
        if delta * qinv != 1:
            failures.append({"case": i, "matrix": m, "dom": dom.name, "cod": cod.name,
                             "radius": delta, "quotient_inverse_norm": qinv})
    rep.out("cases", count)
    rep.cert("inscribed radius * ||T~^-1|| = 1", not failures, failures[0] if failures else None)


def _kernel_bound(cfg, rep):
    if cfg.xstar is None or cfg.xstar_n is None:
        raise ConfigError("xstar and xstar_n are required")
    xs = SummableSeq.from_list(cfg.rationals("xstar"))
    xn = SummableSeq.from_list(cfg.rationals("xstar_n"))
    z = ConvergentSeq(tuple(cfg.rationals("z") or []), cfg.rational("z_limit") or Fraction(0))
    kb = polyoracle.kernel_distance_details(xs, xn, z)
    rep.out("lambda", kb.lam)
    rep.out("delta", kb.delta)
    rep.out("delta_reverse", kb.delta_reverse)
    rep.out("bound", kb.bound, "d(ker x*, ker x*_n) <=")
    rep.cert("bound >= 1", kb.bound >= 1)


def _facts(cfg, rep):
    table = stability.facts_table()
    for fact in table:
        rep.rows.append((fact.key, fact.claim))
    rep.outputs["facts"] = [
        {"key": f.key, "claim": f.claim, "relation": f.relation, "value": f.value,
         "provenance": f.provenance}
        for f in table
    ]


_DISPATCH = {
    "norm eval": _norm_eval,
    "dual eval": _dual_eval,
    "dual oracle-check": _dual_oracle_check,
    "witness": _witness,
    "fpp isometry": _fpp_isometry,
    "fpp orbit": _fpp_orbit,
    "fpp classic-c": _fpp_classic,
    "stability constants": _stability_constants,
    "stability counterexample": _stability_counterexample,
    "bm estimate": _bm_estimate,
    "lemma31 check": _lemma31,
    "kernel bound": _kernel_bound,
    "facts": _facts,
}


def run(config: RunConfig) -> Report:
    rep = Report(config)
    _DISPATCH[config.command](config, rep)
    return rep


def main(argv=None) -> int:
    cfg = parse_config(argv)
    if getattr(cfg, "_dump", False):
        sys.stdout.write(json.dumps(cfg.to_dict(), indent=2, sort_keys=True) + "\n")
        return 0
    try:
        rep = run(cfg)
    except OracleDimensionError as exc:
        sys.stderr.write(f"l1fpp: {exc}\n")
        return 3
    except ValueError as exc:
        sys.stderr.write(f"l1fpp: error: {exc}\n")
        return 2
    sys.stdout.write(rep.table())
    if cfg.out:
        with open(cfg.out, "w") as fh:
            fh.write(rep.to_json())
    return 0 if rep.ok else 1


if __name__ == "__main__":
    sys.exit(main())
