"""Command-line front end.

    ffrt decompose   --ring R.json --e N
    ffrt classify    --ring R.json --emax N
    ffrt verdict     --ring R.json --emax N
    ffrt certificate --ring R.json --emax N
    ffrt tower       --tower T.json [--e N | --emax N] --trunc N
    ffrt verify      REPORT.json
    ffrt selftest

Exit status: 0 on success (a NOT_FFRT verdict is a success), 2 when a
computation finished but a check it certifies failed, 1 on errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import decomp, report, specio, tower
from .errors import CertificateFailure, FFRTError

EXIT_OK, EXIT_ERROR, EXIT_FAILED = 0, 1, 2


def _corpus_or_path(value: str) -> str:
    """Accept a file path or the name of a bundled example ("corpus:cusp")."""
    if value.startswith("corpus:"):
        return str(specio.corpus_path(value[len("corpus:"):]))
    return value


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="ffrt", description="Frobenius pushforwards of graded curve rings and towers.")
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p, ring=True):
        if ring:
            p.add_argument("--ring", required=True, type=_corpus_or_path, help="ring spec JSON (or corpus:NAME)")
        p.add_argument("--out", help="write the JSON report here")
        p.add_argument("--format", choices=("json", "table"), default="table", help="stdout format")

    p = sub.add_parser("decompose", help="split A^(1/q) into rank-one summands")
    common(p)
    p.add_argument("--e", type=int, required=True)
    p.add_argument("--check-degree", type=int, default=decomp.DEFAULT_CHECK_DEGREE)

    for name, text in (("classify", "class ids across a range of e"), ("verdict", "classify and decide FFRT")):
        p = sub.add_parser(name, help=text)
        common(p)
        p.add_argument("--emax", type=int, default=decomp.DEFAULT_EMAX)
        p.add_argument("--e", type=int, default=None, help="smallest e (default: least e with p^e >= c)")
        p.add_argument("--check-degree", type=int, default=decomp.DEFAULT_CHECK_DEGREE)

    p = sub.add_parser("certificate", help="recurrence certificate for the quartic family")
    common(p)
    p.add_argument("--emax", type=int, default=12)

    p = sub.add_parser("tower", help="summands of ^eS for a tower and the Hilbert check")
    p.add_argument("--tower", required=True, type=_corpus_or_path, help="tower spec JSON (or corpus:NAME)")
    p.add_argument("--out")
    p.add_argument("--format", choices=("json", "table"), default="table")
    p.add_argument("--e", type=int, default=None, help="a single e (default: 1..emax)")
    p.add_argument("--emax", type=int, default=2)
    p.add_argument("--trunc", type=int, default=tower.DEFAULT_TRUNC)

    p = sub.add_parser("verify", help="rebuild a report and re-check it")
    p.add_argument("report")

    p = sub.add_parser("selftest", help="run the bundled acceptance suite")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--quick", action="store_true", help="smaller property-test sample sizes")
    return ap


# --------------------------------------------------------------------------
# tables
# --------------------------------------------------------------------------


def _ring_table(rep: dict) -> str:
    ring = rep["ring"]
    lines = [f"ring {ring['name']}  p={ring['k']['p']}  [K:k]={rep['field']['n']}  c={rep['conductor']}"]
    lines.append(f"{'e':>3} {'q':>6} {'free':>6} {'hilbert':>8}  proper summands (class:dim)")
    for item in rep["per_e"]:
        proper = [f"{s['class_id'] or '?'}:{s['W']['dim']}" for s in item["summands"] if s["kind"] == decomp.PROPER]
        ok = "ok" if item["hilbert_check"]["pass"] else "FAIL"
        lines.append(f"{item['e']:>3} {item['q']:>6} {item['free']:>6} {ok:>8}  {' '.join(proper) or '-'}")
    if "classes" in rep:
        props = [c for c in rep["classes"] if c["kind"] == decomp.PROPER]
        lines.append(f"classes: B + {len(props)} proper")
    v = rep.get("verdict")
    if v:
        extra = f", period {v['period']}" if v.get("period") else ""
        lines.append(f"verdict: {v['status']} ({v['reason']}{extra})")
    rec = rep.get("certificates", {}).get("recurrence")
    if rec:
        lines.append(f"recurrence certificate: {'ok' if rec['ok'] else 'FAILED'} for e <= {rec['entries'][-1]['e']}")
    return "\n".join(lines)


def _certificate_table(rep: dict) -> str:
    rec = rep["certificates"]["recurrence"]
    lines = [f"{'e':>3} {'deg f':>6} {'deg g':>6}  identity  pattern"]
    for x in rec["entries"]:
        lines.append(
            f"{x['e']:>3} {x['deg_f']:>6} {x['deg_g']:>6}  {'ok' if x['identity_ok'] else 'FAIL':>8}  "
            f"{'ok' if x['degree_pattern_ok'] else 'FAIL':>7}"
        )
    lines.append(f"certificate: {'ok' if rec['ok'] else 'FAILED'}")
    return "\n".join(lines)


def _tower_table(rep: dict) -> str:
    t = rep["tower"]
    lines = [f"tower {t['spec']['name']}  fpure={t['fpurity']['fpure']}  substitution="
             + ",".join(f"{v}:{'ok' if s['ok'] else 'FAIL'}" for v, s in t["substitution"].items())]
    lines.append(f"{'e':>3} {'q':>6} {'pieces':>8} {'classes':>10} {'hilbert':>8}")
    for item in rep["per_e"]:
        classes = sorted({s["class_id"] for s in item["summands"]})
        ok = "ok" if item["hilbert_check"]["pass"] else "FAIL"
        lines.append(f"{item['e']:>3} {item['q']:>6} {item['count']:>8} {','.join(classes):>10} {ok:>8}")
    return "\n".join(lines)


def _emit(rep: dict, args, table: str):
    text = specio.dumps(rep) + "\n"
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    sys.stdout.write(text if args.format == "json" else table + "\n")


# --------------------------------------------------------------------------
# commands
# --------------------------------------------------------------------------


def run(args) -> int:
    cmd = args.command
    if cmd == "selftest":
        from . import selftest

        results = selftest.run_all(seed=args.seed, quick=args.quick)
        for r in results:
            print(r.line())
        return EXIT_OK if all(r.ok for r in results) else EXIT_FAILED
    if cmd == "verify":
        checks = report.verify_report(specio.load_json(args.report))
        for name, ok in checks:
            print(f"{'PASS' if ok else 'FAIL'}  {name}")
        return EXIT_OK if all(ok for _, ok in checks) else EXIT_FAILED
    if cmd == "tower":
        T = specio.load_tower(args.tower)
        es = [args.e] if args.e is not None else range(1, args.emax + 1)
        rep = report.tower_report(T, es, args.trunc)
        _emit(rep, args, _tower_table(rep))
        return EXIT_OK if report.report_ok(rep) else EXIT_FAILED
    A = specio.load_ring(args.ring)
    if cmd == "decompose":
        rep = report.decompose_report(A, args.e, args.check_degree)
        table = _ring_table(rep)
    elif cmd in ("classify", "verdict"):
        rep = report.classify_report(A, args.emax, args.e, args.check_degree, verdict=cmd == "verdict")
        table = _ring_table(rep)
    else:
        rep = report.certificate_report(A, args.emax)
        table = _certificate_table(rep)
    _emit(rep, args, table)
    return EXIT_OK if report.report_ok(rep) else EXIT_FAILED


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return run(args)
    except CertificateFailure as exc:
        print(f"error: CertificateFailure: {exc}", file=sys.stderr)
        return EXIT_FAILED
    except FFRTError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_ERROR
    except (json.JSONDecodeError, KeyError) as exc:
        print(f"error: ParseError: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
