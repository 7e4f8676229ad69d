"""Reading ring and tower specs from JSON.

Ring spec::

    {"name": "cusp",
     "k": {"kind": "finite", "p": 2}                      # or perfect_closure_rational
     "K": {"min_poly": [...], "name": "a"},               # optional; omitted means K = k
     "generators": [{"coeff": [...], "degree": 2}, ...]}

Coefficients of K are arrays over k in powers of the generator (low first);
elements of the perfect closure are ints or {"level", "num", "den"}.

Tower spec::

    {"name": "brenner_p7",
     "base": {"p": 7, "vars": ["x", "y"], "weights": [3, 2]}   # or a ring spec
     "adjoin": [{"var": "z", "exponent": 7, "f": [{"coeff": 1, "exp": [2, 0]}, ...]}]}
"""

from __future__ import annotations

import json
from fractions import Fraction
from importlib import resources
from pathlib import Path

from .curve import RingPresentation
from .errors import FFRTError, ParseError
from .fields import ExtField, FiniteField, PerfectClosure, trivial_extension
from .sparse import SparsePoly
from .tower import CurveBase, PolyBase, TowerPresentation, make_tower


def load_json(path) -> dict:
    try:
        with open(path) as fh:
            return json.load(fh)
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}: not valid JSON ({exc})") from exc
    except OSError as exc:
        raise ParseError(f"{path}: {exc.strerror}") from exc


def _need(obj, key, where):
    if not isinstance(obj, dict) or key not in obj:
        raise ParseError(f"{where}: missing key {key!r}")
    return obj[key]


def parse_base_field(obj):
    kind = obj.get("kind", "finite") if isinstance(obj, dict) else None
    p = _need(obj, "p", "k")
    if not isinstance(p, int):
        raise ParseError("k.p must be an integer")
    try:
        if kind == "finite":
            return FiniteField(p, obj.get("f", 1), obj.get("modulus"))
        if kind == "perfect_closure_rational":
            return PerfectClosure(p, obj.get("variable", "u"))
    except FFRTError:
        raise
    except ValueError as exc:
        raise ParseError(f"k: {exc}") from exc
    raise ParseError(f"k.kind must be 'finite' or 'perfect_closure_rational', got {kind!r}")


def parse_ring(obj) -> RingPresentation:
    if not isinstance(obj, dict):
        raise ParseError("ring spec must be a JSON object")
    k = parse_base_field(_need(obj, "k", "ring"))
    Kspec = obj.get("K")
    try:
        if Kspec is None:
            K = trivial_extension(k)
        else:
            K = ExtField(
                k,
                _need(Kspec, "min_poly", "K"),
                name=Kspec.get("name", "a"),
                trusted_irreducible=bool(Kspec.get("trusted_irreducible", False)),
            )
        gens = []
        for g in _need(obj, "generators", "ring"):
            gens.append((K.from_json(_need(g, "coeff", "generator")), _need(g, "degree", "generator")))
    except FFRTError:
        raise
    except (ValueError, TypeError, KeyError) as exc:
        raise ParseError(f"ring: {exc}") from exc
    return RingPresentation(K, gens, obj.get("name", "A"))


def ring_to_spec(A: RingPresentation) -> dict:
    K = A.field
    out = {"name": A.name, "k": K.base.descriptor()}
    if K.n > 1 or K.name != "1":
        out["K"] = {"min_poly": [K.base.to_json(c) for c in K.min_poly], "name": K.name}
        if K.trusted_irreducible:
            out["K"]["trusted_irreducible"] = True
    out["generators"] = [{"coeff": K.to_json(c), "degree": d} for c, d in A.generators]
    return out


def _frac(x, where) -> Fraction:
    try:
        return Fraction(x)
    except (ValueError, TypeError) as exc:
        raise ParseError(f"{where}: cannot read {x!r} as a rational number") from exc


def parse_tower(obj) -> TowerPresentation:
    if not isinstance(obj, dict):
        raise ParseError("tower spec must be a JSON object")
    base_obj = _need(obj, "base", "tower")
    if isinstance(base_obj, dict) and "generators" in base_obj:
        base = CurveBase(parse_ring(base_obj))
    elif isinstance(base_obj, dict) and "vars" in base_obj:
        p = _need(base_obj, "p", "base")
        weights = tuple(_frac(w, "base.weights") for w in _need(base_obj, "weights", "base"))
        base = PolyBase(p, tuple(base_obj["vars"]), weights)
    else:
        raise ParseError("tower.base must be a ring spec or {p, vars, weights}")
    specs = []
    for n, a in enumerate(_need(obj, "adjoin", "tower")):
        var = a.get("var", f"x{n + 1}")
        q = _need(a, "exponent", f"adjoin[{n}]")
        try:
            f = SparsePoly.from_json(base.p, base.vars, a.get("f", []))
        except (KeyError, ValueError, TypeError) as exc:
            raise ParseError(f"adjoin[{n}].f: {exc}") from exc
        w = a.get("weight")
        specs.append((var, q, f, None if w is None else _frac(w, f"adjoin[{n}].weight")))
    return make_tower(base, specs, obj.get("name", "S"))


def tower_to_spec(T: TowerPresentation) -> dict:
    if isinstance(T.base, CurveBase):
        base = ring_to_spec(T.base.ring)
    else:
        base = {"p": T.base.p, "vars": list(T.base.vars), "weights": [str(w) for w in T.base.weights]}
    adjoin = [
        {"var": a.var, "exponent": a.exponent, "f": a.f.to_json(), "weight": str(a.weight)}
        for a in T.adjoin
    ]
    return {"name": T.name, "base": base, "adjoin": adjoin}


def load_ring(path) -> RingPresentation:
    return parse_ring(load_json(path))


def load_tower(path) -> TowerPresentation:
    return parse_tower(load_json(path))


def corpus_path(name: str) -> Path:
    """Path of a bundled example spec, e.g. ``corpus_path("cusp")``."""
    return Path(str(resources.files("ffrt") / "corpus" / f"{name}.json"))


def corpus_names() -> list[str]:
    root = resources.files("ffrt") / "corpus"
    return sorted(p.name[:-5] for p in root.iterdir() if p.name.endswith(".json"))


def dumps(obj, indent: int = 2, _level: int = 0) -> str:
    """Deterministic JSON with arrays of scalars kept on one line."""
    pad = " " * (indent * (_level + 1))
    end = " " * (indent * _level)
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        items = [f"{pad}{json.dumps(str(k))}: {dumps(v, indent, _level + 1)}" for k, v in obj.items()]
        return "{\n" + ",\n".join(items) + "\n" + end + "}"
    if isinstance(obj, (list, tuple)):
        if all(not isinstance(x, (dict, list, tuple)) for x in obj):
            return json.dumps(list(obj))
        items = [pad + dumps(x, indent, _level + 1) for x in obj]
        return "[\n" + ",\n".join(items) + "\n" + end + "]"
    return json.dumps(obj)
