"""JSON reports for the curve and tower pipelines, and their re-verification.

A report carries the ring (or tower) spec and the parameters it was built
with, so ``verify_report`` can rebuild it and compare byte for byte, and
also re-check its Hilbert bookkeeping and certificates from the stored data
alone.
"""

from __future__ import annotations

from dataclasses import replace
from fractions import Fraction

import flint

from . import decomp, tower
from .curve import RingPresentation
from .errors import ParseError
from .specio import dumps, parse_ring, parse_tower, ring_to_spec, tower_to_spec
from .subspace import from_json as subspace_from_json
from .subspace import span

FORMAT_VERSION = 1


def _summand_json(s: decomp.SummandDescriptor) -> dict:
    out = {"i": s.i, "kind": s.kind, "shift": str(s.shift), "class_id": s.class_id}
    if s.W is not None:
        out["W"] = s.W.to_json()
    return out


def _per_e_json(rep: decomp.DecompositionReport) -> dict:
    return {
        "e": rep.e,
        "q": rep.q,
        "r": rep.r,
        "ell": rep.ell,
        "free": rep.free_count,
        "hilbert_check": {
            "degree": rep.check_degree,
            "pass": rep.hilbert_ok,
            "failures": [[str(d), got, want] for d, got, want in rep.hilbert_failures[:5]],
        },
        "summands": [_summand_json(s) for s in rep.summands],
    }


def _ring_header(A: RingPresentation) -> dict:
    prof = A.profile
    return {
        "ring": ring_to_spec(A),
        "field": {"n": A.field.n, "irreducibility": A.field.irreducibility, "frobenius_order": A.field.frobenius_order},
        "conductor": prof.c,
        "semigroup": {"generators": list(A.semigroup.generators), "gaps": A.semigroup.gaps},
        "V": [prof.space(i).to_json() for i in range(prof.c)],
    }


def _free_labels(rep: decomp.DecompositionReport):
    rep.summands = [replace(s, class_id=decomp.FREE_CLASS) if s.kind == decomp.FREE else s for s in rep.summands]
    return rep


def decompose_report(A: RingPresentation, e: int, check_degree: int = decomp.DEFAULT_CHECK_DEGREE) -> dict:
    rep = _free_labels(decomp.decompose(A, e, check_degree))
    out = {"format": FORMAT_VERSION, "command": "decompose", "params": {"e": e, "check_degree": check_degree}}
    out.update(_ring_header(A))
    out["e_range"] = [e, e]
    out["per_e"] = [_per_e_json(rep)]
    return out


def _classes_json(table: decomp.ClassTable) -> list:
    out = []
    for c in table.classes:
        item = {"id": c.id, "kind": c.kind, "dim": c.dim}
        if c.first_seen is not None:
            e, i = c.first_seen
            item["first_seen"] = [e, i]
            item["W"] = table.reports[e].summands[i].W.to_json()
        out.append(item)
    return out


def verdict_json(v: decomp.Verdict) -> dict:
    return {
        "status": v.status,
        "reason": v.reason,
        "class_count": v.class_count,
        "proper_class_count": v.proper_class_count,
        "period": v.period,
        "minimal_period": v.minimal_period,
        "lower_bound": v.lower_bound,
        "notes": list(v.notes),
    }


def recurrence_json(cert: decomp.RecurrenceCertificate) -> dict:
    return {
        "ok": cert.ok,
        "entries": [
            {
                "e": x.e, "f": list(x.f), "g": list(x.g), "h": list(x.h),
                "deg_f": x.deg_f, "deg_g": x.deg_g,
                "identity_ok": x.identity_ok, "nonzero_ok": x.nonzero_ok, "degree_pattern_ok": x.degree_pattern_ok,
            }
            for x in cert.entries
        ],
        "independence": {str(d): r for d, r in sorted(cert.independence.items())},
    }


def _pairwise_json(A, e_min, e_max, i) -> list:
    out = []
    for e1 in range(e_min, e_max + 1):
        for e2 in range(e1 + 1, e_max + 1):
            c = decomp.pairwise_noniso(A, e1, i, e2, i)
            out.append({"e1": e1, "e2": e2, "i": i, "isomorphic": c.isomorphic, "reason": c.reason,
                        "transporter_dim": c.certificate.dim})
    return out


def classify_report(
    A: RingPresentation,
    e_max: int = decomp.DEFAULT_EMAX,
    e_min: int | None = None,
    check_degree: int = decomp.DEFAULT_CHECK_DEGREE,
    verdict: bool = False,
) -> dict:
    table = decomp.classify(A, e_max, e_min, check_degree)
    command = "verdict" if verdict else "classify"
    out = {
        "format": FORMAT_VERSION,
        "command": command,
        "params": {"e_min": e_min, "e_max": e_max, "check_degree": check_degree},
    }
    out.update(_ring_header(A))
    out["e_range"] = [table.e_min, table.e_max]
    out["per_e"] = [_per_e_json(table.reports[e]) for e in range(table.e_min, table.e_max + 1)]
    out["classes"] = _classes_json(table)
    out["multiplicities"] = {str(e): m for e, m in table.multiplicities.items()}
    out["cumulative_class_counts"] = table.cumulative_class_counts()
    certs = {}
    if table.frobenius_order is not None:
        certs["periodicity"] = {
            "frobenius_order": table.frobenius_order,
            "offset_ok": table.periodic_offset_ok,
            "minimal_period": table.period,
            "failures": [list(f) for f in table.offset_failures[:5]],
        }
    if verdict:
        v = decomp.ffrt_verdict(A, e_max, table)
        out["verdict"] = verdict_json(v)
        if v.certificate is not None:
            certs["recurrence"] = recurrence_json(v.certificate)
            line = span([A.field.one, A.field.gen], A.field)
            i = next(i for i in range(A.profile.c) if A.profile.space(i) == line)
            certs["pairwise"] = _pairwise_json(A, max(table.e_min, 2), table.e_max, i)
    out["certificates"] = certs
    return out


def certificate_report(A: RingPresentation, e_max: int = 12) -> dict:
    cert = decomp.recurrence_certificate(A, e_max)
    out = {"format": FORMAT_VERSION, "command": "certificate", "params": {"e_max": e_max}, "ring": ring_to_spec(A)}
    out["certificates"] = {"recurrence": recurrence_json(cert)}
    return out


def tower_report(T: tower.TowerPresentation, es, trunc: int = tower.DEFAULT_TRUNC) -> dict:
    es = list(es)
    per_e = []
    fp = subs = None
    for e in es:
        r = tower.tower_summands(T, e, trunc)
        fp, subs = r.fpurity, r.substitution
        per_e.append({
            "e": e,
            "q": r.q,
            "count": r.count,
            "all_free": r.all_free,
            "x_action_zero": r.x_action_zero,
            "hilbert_check": {
                "order": trunc,
                "pass": r.hilbert_pass,
                "mismatch": None if r.hilbert_mismatch is None else [str(r.hilbert_mismatch[0]), *r.hilbert_mismatch[1:]],
            },
            "summands": [
                {"class_id": cls, "shift": str(shift), "multiplicity": m}
                for (cls, shift), m in sorted(r.summands.items(), key=lambda kv: (kv[0][0], -kv[0][1]))
            ],
        })
    out = {"format": FORMAT_VERSION, "command": "tower", "params": {"e": es, "trunc": trunc}}
    out["tower"] = {
        "spec": tower_to_spec(T),
        "e_tilde": T.e_tilde,
        "hilbert_check": {"order": trunc, "pass": all(x["hilbert_check"]["pass"] for x in per_e)},
        "fpurity": fp,
        "substitution": {v: {"ok": c.ok, "falsifying": c.falsifying} for v, c in (subs or {}).items()},
    }
    out["per_e"] = per_e
    return out


def report_ok(report: dict) -> bool:
    """False when the report records a failed check (exit code 2 territory)."""
    for x in report.get("per_e", []):
        if not x["hilbert_check"]["pass"]:
            return False
    t = report.get("tower")
    if t and (not t["hilbert_check"]["pass"] or not all(s["ok"] for s in t["substitution"].values())):
        return False
    rec = report.get("certificates", {}).get("recurrence")
    if rec is not None and not rec["ok"]:
        return False
    return True


# --------------------------------------------------------------------------
# Re-verification
# --------------------------------------------------------------------------


def rebuild(report: dict) -> dict:
    cmd = report.get("command")
    params = report.get("params", {})
    if cmd == "tower":
        return tower_report(parse_tower(report["tower"]["spec"]), params["e"], params["trunc"])
    A = parse_ring(report["ring"])
    if cmd == "decompose":
        return decompose_report(A, params["e"], params["check_degree"])
    if cmd in ("classify", "verdict"):
        return classify_report(A, params["e_max"], params["e_min"], params["check_degree"], verdict=cmd == "verdict")
    if cmd == "certificate":
        return certificate_report(A, params["e_max"])
    raise ParseError(f"unknown report command {cmd!r}")


def _recheck_hilbert(A: RingPresentation, item: dict) -> bool:
    """Degreewise conservation recomputed from the stored summands only."""
    K = A.field
    summands = []
    for s in item["summands"]:
        W = subspace_from_json(K, s["W"]) if "W" in s else None
        summands.append(decomp.SummandDescriptor(item["e"], s["i"], s["kind"], Fraction(s["shift"]), W))
    if len(summands) != item["q"]:
        return False
    ok, _ = decomp.hilbert_conservation(A, item["e"], summands, item["hilbert_check"]["degree"])
    return ok


def _recheck_recurrence(A: RingPresentation, rec: dict) -> bool:
    """alpha^(2^e) = f a^2 + g a + h evaluated afresh from the stored polynomials."""
    K = A.field
    base = K.base
    a = K.gen
    for x in rec["entries"]:
        def val(c):
            return K.from_base(base.element(c or [0]))
        rhs = a * a * val(x["f"]) + a * val(x["g"]) + val(x["h"])
        if rhs != a.frobenius(x["e"]):
            return False
        f, g = flint.nmod_poly(x["f"], 2), flint.nmod_poly(x["g"], 2)
        if f.is_zero() or g.is_zero():
            return False
        want = g.degree() - 1 if x["e"] % 2 == 0 else g.degree() + 1
        if f.degree() != want:
            return False
    return True


def verify_report(report: dict) -> list[tuple[str, bool]]:
    """Re-run every check a report claims; each entry is (check name, passed)."""
    checks = []
    fresh = rebuild(report)
    checks.append(("reproduced byte-identically", dumps(fresh) == dumps(report)))
    if report.get("command") == "tower":
        checks.append(("tower Hilbert check", fresh["tower"]["hilbert_check"]["pass"]))
        return checks
    A = parse_ring(report["ring"])
    for item in report.get("per_e", []):
        checks.append((f"Hilbert conservation e={item['e']}", _recheck_hilbert(A, item)))
    rec = report.get("certificates", {}).get("recurrence")
    if rec is not None:
        checks.append(("recurrence identities", _recheck_recurrence(A, rec)))
    return checks
