"""Command-line front end.

Subcommands: prove, series, bernoulli, sequences, identities, limits, scan.
Exit codes: 0 all claims matched their expected tags (all proved when
untagged), 1 at least one claim refuted/violated against expectation,
2 at least one Unknown, 3 usage/parse error.

JSON is the canonical machine format; reports are byte-identical across
runs (wall times are reported as 0 unless --timing is given).  CSV serves
the tabular outputs (series, bernoulli).
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction
from importlib import resources

from . import __version__
from .errors import DomainError, EvalError, ParseError, PoleError
from .interval import Interval
from .lang import parse_corpus, parse_expression, eval_endpoint
from .prove import (IDENTITY_IDS, SEQUENCE_IDS, THEOREM_CLAIMS, ProveOptions,
                    identity_check, limit_report, near_zero_certificate,
                    scan_extremum, sequence_check, verify_inequality)
from .series import get_series, lemma_coeff, series_ids, theorem_coeff
from .exact import bernoulli

__all__ = ["main", "run_command"]


class _UsageError(Exception):
    pass


class _ArgumentParser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


_RAT_RE = re.compile(
    r"^[+-]?(\d+(\.\d+)?([eE][+-]?\d+)?|\d+/\d+)$")


def _rational(text: str) -> Fraction:
    """Exact rational from decimal/scientific/fraction notation."""
    s = text.strip()
    if not _RAT_RE.match(s):
        raise _UsageError(f"not an exact rational: {text!r}")
    if "/" in s:
        num, den = s.split("/")
        return Fraction(int(num), int(den))
    return Fraction(s)  # Fraction parses decimal/exponent strings exactly


def _endpoint_value(text: str, upper: bool) -> Fraction:
    """Rational endpoint from an expression over rationals and pi.

    Upper endpoints round down, lower endpoints round up, so the resolved
    point always lies inside the requested range.
    """
    iv = eval_endpoint(parse_expression(text))
    return iv.lo if upper else iv.hi


def _frac_str(f) -> str:
    return str(f)


def _iv_json(iv: Interval | None):
    if iv is None:
        return None
    return {"lo": _frac_str(iv.lo), "hi": _frac_str(iv.hi)}


_SHARP_ENDPOINT = {
    "THM31_LO": ("T3.1", "zero"), "THM31_HI": ("T3.1", "right"),
    "THM32_LO": ("T3.2", "zero"), "THM32_HI": ("T3.2", "right"),
    "THM33": ("T3.3", "zero"), "THM34": ("T3.4", "zero"),
    "THM35_LO": ("T3.5", "zero"), "THM35_HI": ("T3.5", "right"),
}


def default_corpus_path() -> str:
    return str(resources.files("ineqcert").joinpath("data/paper.ineq"))


def _load_corpus(path: str):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return parse_corpus(fh.read())
    except OSError as exc:
        raise _UsageError(f"cannot read corpus {path!r}: {exc}") from exc


def _emit(text: str, out_path):
    if out_path:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _json_report(config: dict, claims: list, timing: bool) -> str:
    for c in claims:
        if not timing:
            c["ms"] = 0
        else:
            c["ms"] = round(c["ms"], 3)
    report = {"version": __version__, "config": config,
              "claims": sorted(claims, key=lambda c: c["name"])}
    return json.dumps(report, indent=2, sort_keys=True) + "\n"


def _stanza_opts(spec, args) -> ProveOptions:
    """CLI flags override stanza tags; stanza tags override defaults."""
    defaults = ProveOptions()

    def pick(flag_value, tag_key, default, conv=_rational):
        if flag_value is not None:
            return conv(flag_value)
        tv = spec.tag_value(tag_key)
        if tv is not None:
            return conv(tv)
        return default

    eps_default = _rational(args.eps) if args.eps is not None else None
    return ProveOptions(
        eps_lo=pick(args.eps_lo, "eps_lo", eps_default or defaults.eps_lo),
        eps_hi=pick(args.eps_hi, "eps_hi", eps_default or defaults.eps_hi),
        x_max=pick(args.xmax, "x_max", defaults.x_max),
        max_depth=pick(args.max_depth, "max_depth", defaults.max_depth, int),
        min_width=pick(args.min_width, "min_width", defaults.min_width),
        precision=args.precision,
        max_order=defaults.max_order,
        grid=args.grid,
    )


def _claim_entry(spec, result) -> dict:
    witness = None
    if result.witness is not None:
        witness = _iv_json(result.witness)
        witness["midpoint_value"] = _iv_json(result.witness_value)
    sharp = None
    if spec.name in _SHARP_ENDPOINT:
        thm, endpoint = _SHARP_ENDPOINT[spec.name]
        lr = limit_report(thm, endpoint)
        enc = (_iv_json(lr.value_enclosure) if lr.value_enclosure is not None
               else {"lo": _frac_str(lr.value_exact), "hi": _frac_str(lr.value_exact)})
        sharp = {"paper_value": lr.paper_value, "computed_enclosure": enc,
                 "match": lr.matches_paper}
    findings = list(result.findings)
    if result.reason:
        findings.append(f"reason: {result.reason}")
    return {
        "name": spec.name,
        "status": result.status,
        "witness": witness,
        "leaves": result.leaves,
        "max_depth": result.max_depth,
        "sharp": sharp,
        "findings": findings,
        "uncovered": list(result.uncovered),
        "ms": result.ms,
    }


def _expected_of(spec) -> str:
    return spec.tag_value("expected") or "proved"


def _cmd_prove(args) -> int:
    corpus = _load_corpus(args.corpus)
    if args.name:
        corpus = [s for s in corpus if s.name == args.name]
        if not corpus:
            raise _UsageError(f"no stanza named {args.name!r}")
    if args.precision < 64:
        raise _UsageError("precision must be >= 64")

    def run(spec):
        return spec, verify_inequality(spec, _stanza_opts(spec, args))

    if args.jobs > 1:
        with ThreadPoolExecutor(max_workers=args.jobs) as pool:
            results = list(pool.map(run, corpus))
    else:
        results = [run(s) for s in corpus]

    claims = [_claim_entry(spec, res) for spec, res in results]
    # deliberately excludes volatile details (jobs, output path) so reports
    # are byte-identical regardless of scheduling
    config = {
        "subcommand": "prove", "corpus": args.corpus,
        "name_filter": args.name or "",
        "eps_lo": args.eps_lo or args.eps or "1/1000",
        "eps_hi": args.eps_hi or args.eps or "1/1000",
        "x_max": args.xmax or "20", "precision": args.precision,
        "grid": args.grid,
    }
    if args.format == "json":
        _emit(_json_report(config, claims, args.timing), args.out)
    else:
        lines = []
        for c in sorted(claims, key=lambda c: c["name"]):
            lines.append(f"{c['name']:<14} {c['status']}")
            for u in c["uncovered"]:
                lines.append(f"    uncovered: {u}")
            if c["witness"]:
                lines.append(f"    witness: [{c['witness']['lo']}, {c['witness']['hi']}]")
        _emit("\n".join(lines) + "\n", args.out)

    mismatch = unknown = False
    for spec, res in results:
        expected = _expected_of(spec)
        if res.status == "Unknown":
            unknown = True
        elif res.status.lower() != expected:
            mismatch = True
    if mismatch:
        return 1
    if unknown:
        return 2
    return 0


def _cmd_series(args) -> int:
    if args.kind:
        kind = args.kind
    elif args.thm and args.role:
        kind = None
    else:
        raise _UsageError("series requires --kind, or --thm with --role")
    rows = ["n,exponent,coefficient"]
    if kind is not None:
        seq = get_series(kind)
        for n in range(seq.start_index, args.nmax + 1):
            rows.append(f"{n},{seq.exponent_of(n)},{_frac_str(seq.coeff(n))}")
    else:
        from .series import THEOREM_START
        start = THEOREM_START[args.thm]
        for n in range(start, args.nmax + 1):
            v = theorem_coeff(args.thm, args.role, n)
            rows.append(f"{n},{2 * n},{_frac_str(v)}")
    _emit("\n".join(rows) + "\n", args.out)
    return 0


def _cmd_bernoulli(args) -> int:
    rows = ["n,value"]
    for n in range(args.upto + 1):
        rows.append(f"{n},{_frac_str(bernoulli(n))}")
    _emit("\n".join(rows) + "\n", args.out)
    return 0


def _find_tag(corpus, key: str):
    for spec in corpus:
        v = spec.tag_value(key)
        if v is not None:
            return v
    return None


def _cmd_sequences(args) -> int:
    nmin = int(args.nmin) if args.nmin is not None else None
    rep = sequence_check(args.id, args.mode, args.nmax, n_min=nmin)
    entry = {
        "name": f"{args.id}.{args.mode}",
        "status": "pass" if rep.all_pass else "violation",
        "n_min": rep.n_min, "n_max": rep.n_max,
        "first_violation": None if rep.first_violation is None else {
            "n": rep.first_violation[0],
            "value": _frac_str(rep.first_violation[1]),
        },
    }
    config = {"subcommand": "sequences", "id": args.id, "mode": args.mode,
              "n_max": args.nmax, "n_min": nmin}
    if args.format == "json":
        out = {"version": __version__, "config": config, "claims": [entry]}
        _emit(json.dumps(out, indent=2, sort_keys=True) + "\n", args.out)
    else:
        if rep.all_pass:
            _emit(f"{args.id} {args.mode}: all pass on [{rep.n_min}, {rep.n_max}]\n",
                  args.out)
        else:
            n, v = rep.first_violation
            _emit(f"{args.id} {args.mode}: first violation at n={n}, value {v}\n",
                  args.out)
    corpus = _load_corpus(args.corpus)
    expect = _find_tag(corpus, f"expect_seq.{args.id}.{args.mode}")
    if expect is None:
        return 0 if rep.all_pass else 1
    if expect == "pass":
        return 0 if rep.all_pass else 1
    m = re.match(r"violation@(\d+)$", expect)
    if m:
        ok = (not rep.all_pass and rep.first_violation[0] == int(m.group(1)))
        return 0 if ok else 1
    raise _UsageError(f"bad expectation tag {expect!r}")


def _cmd_identities(args) -> int:
    rep = identity_check(args.id, args.nmax)
    entry = {
        "name": args.id,
        "status": "holds" if rep.holds else "fails",
        "n_min": rep.n_min, "n_max": rep.n_max,
        "first_failure": None if rep.first_failure is None else {
            "n": rep.first_failure[0],
            "lhs": _frac_str(rep.first_failure[1]),
            "rhs": _frac_str(rep.first_failure[2]),
        },
        "sign_violations": {
            k: (None if v is None else {"n": v[0], "value": _frac_str(v[1])})
            for k, v in rep.positivity.items()
        },
    }
    config = {"subcommand": "identities", "id": args.id, "n_max": args.nmax}
    if args.format == "json":
        out = {"version": __version__, "config": config, "claims": [entry]}
        _emit(json.dumps(out, indent=2, sort_keys=True) + "\n", args.out)
    else:
        lines = [f"{args.id}: {'holds' if rep.holds else 'FAILS'} "
                 f"on [{rep.n_min}, {rep.n_max}]"]
        for k, v in rep.positivity.items():
            if v is None:
                lines.append(f"    sign {k}: positive throughout")
            else:
                lines.append(f"    sign {k}: first violation at n={v[0]} value {v[1]}")
        _emit("\n".join(lines) + "\n", args.out)
    return 0 if rep.holds else 1


def _cmd_limits(args) -> int:
    rep = limit_report(args.thm, args.endpoint)
    entry = {
        "name": f"{args.thm}.{args.endpoint}",
        "paper_value": rep.paper_value,
        "value_exact": None if rep.value_exact is None else _frac_str(rep.value_exact),
        "value_enclosure": _iv_json(rep.value_enclosure),
        "match": rep.matches_paper,
    }
    config = {"subcommand": "limits", "thm": args.thm, "endpoint": args.endpoint}
    if args.format == "json":
        out = {"version": __version__, "config": config, "claims": [entry]}
        _emit(json.dumps(out, indent=2, sort_keys=True) + "\n", args.out)
    else:
        if rep.value_exact is not None:
            _emit(f"{args.thm} at {args.endpoint}: {rep.value_exact} "
                  f"(paper {rep.paper_value}; match={rep.matches_paper})\n", args.out)
        else:
            enc = rep.value_enclosure
            _emit(f"{args.thm} at {args.endpoint}: [{float(enc.lo):.12g}, "
                  f"{float(enc.hi):.12g}] (paper {rep.paper_value}; "
                  f"match={rep.matches_paper})\n", args.out)
    return 0 if rep.matches_paper else 1


def _cmd_scan(args) -> int:
    lo = _endpoint_value(args.lo, upper=False)
    hi = _endpoint_value(args.hi, upper=True)
    rep = scan_extremum(args.thm, Interval(lo, hi), _rational(args.tol))
    entry = {
        "name": f"scan.{args.thm}",
        "location": _frac_str(rep.location),
        "location_float": float(rep.location),
        "value_enclosure": _iv_json(rep.value_enclosure),
        "sampled_monotone": rep.sampled_monotone,
        "at_boundary": rep.at_boundary,
    }
    config = {"subcommand": "scan", "thm": args.thm,
              "lo": args.lo, "hi": args.hi, "tol": args.tol}
    if args.format == "json":
        out = {"version": __version__, "config": config, "claims": [entry]}
        _emit(json.dumps(out, indent=2, sort_keys=True) + "\n", args.out)
    else:
        _emit(f"{args.thm}: min near x={float(rep.location):.8g}, value in "
              f"[{float(rep.value_enclosure.lo):.8g}, "
              f"{float(rep.value_enclosure.hi):.8g}], "
              f"sampled_monotone={rep.sampled_monotone}\n", args.out)
    return 0


def _build_parser() -> _ArgumentParser:
    p = _ArgumentParser(prog="ineqcert",
                        description="certified checks for a corpus of sharp "
                                    "trigonometric/hyperbolic inequalities")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, fmt="json"):
        sp.add_argument("--out", default=None, help="write the report here")
        sp.add_argument("--format", default=fmt, choices=("json", "csv", "text"))

    sp = sub.add_parser("prove", help="verify corpus inequalities")
    sp.add_argument("--corpus", default=default_corpus_path())
    sp.add_argument("--name", default=None, help="verify a single stanza")
    sp.add_argument("--eps", default=None, help="endpoint margin (both sides)")
    sp.add_argument("--eps-lo", dest="eps_lo", default=None)
    sp.add_argument("--eps-hi", dest="eps_hi", default=None)
    sp.add_argument("--xmax", default=None, help="cutoff for unbounded domains")
    sp.add_argument("--max-depth", dest="max_depth", default=None)
    sp.add_argument("--min-width", dest="min_width", default=None)
    sp.add_argument("--precision", type=int, default=192, help="dyadic bits")
    sp.add_argument("--grid", type=int, default=256,
                    help="refutation pre-scan points")
    sp.add_argument("--jobs", type=int, default=1)
    sp.add_argument("--timing", action="store_true",
                    help="report real wall times (non-canonical output)")
    common(sp)
    sp.set_defaults(fn=_cmd_prove)

    sp = sub.add_parser("series", help="emit exact series coefficients as CSV")
    sp.add_argument("--kind", default=None, choices=(None, *series_ids()))
    sp.add_argument("--thm", default=None)
    sp.add_argument("--role", default=None)
    sp.add_argument("--nmax", type=int, default=20)
    common(sp, fmt="csv")
    sp.set_defaults(fn=_cmd_series)

    sp = sub.add_parser("bernoulli", help="emit Bernoulli numbers as CSV")
    sp.add_argument("--upto", type=int, required=True)
    common(sp, fmt="csv")
    sp.set_defaults(fn=_cmd_bernoulli)

    sp = sub.add_parser("sequences", help="exact sequence checks")
    sp.add_argument("--id", required=True, choices=sorted(SEQUENCE_IDS))
    sp.add_argument("--mode", required=True, choices=("positive", "increasing"))
    sp.add_argument("--nmax", type=int, required=True)
    sp.add_argument("--nmin", default=None)
    sp.add_argument("--corpus", default=default_corpus_path())
    common(sp)
    sp.set_defaults(fn=_cmd_sequences)

    sp = sub.add_parser("identities", help="exact proof-step identities")
    sp.add_argument("--id", required=True, choices=IDENTITY_IDS)
    sp.add_argument("--nmax", type=int, required=True)
    common(sp)
    sp.set_defaults(fn=_cmd_identities)

    sp = sub.add_parser("limits", help="sharp-constant endpoint reports")
    sp.add_argument("--thm", required=True,
                    choices=("T3.1", "T3.2", "T3.3", "T3.4", "T3.5"))
    sp.add_argument("--endpoint", required=True, choices=("zero", "right"))
    common(sp)
    sp.set_defaults(fn=_cmd_limits)

    sp = sub.add_parser("scan", help="extremum scan of a theorem ratio")
    sp.add_argument("--thm", required=True,
                    choices=("T3.1", "T3.2", "T3.3", "T3.4", "T3.5"))
    sp.add_argument("--lo", required=True, help="rational or pi-expression")
    sp.add_argument("--hi", required=True, help="rational or pi-expression")
    sp.add_argument("--tol", default="1e-6")
    common(sp)
    sp.set_defaults(fn=_cmd_scan)

    return p


def run_command(argv) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        return args.fn(args)
    except _UsageError as exc:
        print(f"ineqcert: error: {exc}", file=sys.stderr)
        return 3
    except (ParseError, DomainError, EvalError, PoleError) as exc:
        print(f"ineqcert: error: {exc}", file=sys.stderr)
        return 3
    except OSError as exc:
        print(f"ineqcert: error: {exc}", file=sys.stderr)
        return 3


def main() -> None:
    sys.exit(run_command(sys.argv[1:]))
