"""Command-line front end: ``ddgk <task-file> [--json] [--ordering ...] [--max-t N]``.

Task files are JSON.  Rationals are strings such as "3/4" (plain integers
are accepted); a field element is either a rational or a list of d rationals
in the power basis 1, a, ..., a^(d-1).  Elements are term lists
``[[coeff, [exps...]], ...]``; module terms carry a 1-based position as a
third entry.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .algebra import AlgebraPresentation, Element
from .dimension import hilbert_data, hilbert_value
from .errors import DDGKError, ParseError, ValidationError
from .groebner import buchberger, divide
from .modfree import ModElement, mod_buchberger
from .oracle import default_bound, oracle_hf
from .ordering import DEFAULT_ORDERING, ModuleOrderingSpec, parse_extension, parse_ordering
from .scalar import NumberField

TASKS = ("gb", "reduce", "member", "hilbert", "gkdim", "module-gb", "module-gkdim", "oracle-hf")
MODULE_TASKS = ("module-gb", "module-gkdim")


def _require(block: dict, name: str, where: str):
    if not isinstance(block, dict) or name not in block:
        raise ParseError(f"{where}: missing field {name!r}")
    return block[name]


def _rational(x, where: str):
    if isinstance(x, bool) or isinstance(x, float):
        raise ParseError(f"{where}: rationals must be integers or strings 'p/q', got {x!r}")
    try:
        return Fraction(x)
    except (TypeError, ValueError, ZeroDivisionError):
        raise ParseError(f"{where}: cannot read {x!r} as a rational") from None


def _field_value(field: NumberField, x, where: str):
    if isinstance(x, list):
        if len(x) != field.degree:
            raise ParseError(f"{where}: expected {field.degree} power-basis coordinates")
        return field([_rational(c, where) for c in x])
    return field(_rational(x, where))


def _int_vector(v, length: int, where: str) -> tuple:
    if not isinstance(v, list) or len(v) != length:
        raise ParseError(f"{where}: exponent vector must have length {length}")
    if any(isinstance(e, bool) or not isinstance(e, int) or e < 0 for e in v):
        raise ParseError(f"{where}: exponents must be natural numbers")
    return tuple(v)


def parse_presentation(block) -> AlgebraPresentation:
    fblock = _require(block, "field", "presentation")
    min_poly = _require(fblock, "min_poly", "presentation.field") if fblock else [0, 1]
    if not isinstance(min_poly, list):
        raise ParseError("presentation.field.min_poly: expected a list of rationals")
    try:
        field = NumberField([_rational(c, "presentation.field.min_poly") for c in min_poly])
    except ValueError as exc:
        raise ParseError(f"presentation.field.min_poly: {exc}") from None
    m = _require(block, "m", "presentation")
    n = _require(block, "n", "presentation")
    if not all(isinstance(k, int) and not isinstance(k, bool) for k in (m, n)):
        raise ParseError("presentation: m and n must be integers")
    sigma_R = block.get("sigma_R")
    if sigma_R is not None:
        sigma_R = [
            _field_value(field, x, f"presentation.sigma_R[{i}]") for i, x in enumerate(sigma_R)
        ]
    sigma_D = block.get("sigma_D")
    if sigma_D is not None:
        try:
            sigma_D = [
                [
                    [_field_value(field, x, f"presentation.sigma_D[{i}]") for x in row]
                    for row in mat
                ]
                for i, mat in enumerate(sigma_D)
            ]
        except TypeError:
            raise ParseError("presentation.sigma_D: expected a list of square matrices") from None
    return AlgebraPresentation(field, m, n, sigma_R, sigma_D)


def parse_element(p: AlgebraPresentation, terms, where: str) -> Element:
    if not isinstance(terms, list):
        raise ParseError(f"{where}: expected a term list")
    out = []
    for k, term in enumerate(terms):
        if not isinstance(term, list) or len(term) != 2:
            raise ParseError(f"{where}[{k}]: a term is [coeff, exps]")
        out.append(
            (
                _field_value(p.field, term[0], f"{where}[{k}]"),
                _int_vector(term[1], p.l, f"{where}[{k}]"),
            )
        )
    return p.element(out)


def parse_mod_element(p: AlgebraPresentation, rank: int, terms, where: str) -> ModElement:
    if not isinstance(terms, list):
        raise ParseError(f"{where}: expected a term list")
    out = []
    for k, term in enumerate(terms):
        if not isinstance(term, list) or len(term) != 3:
            raise ParseError(f"{where}[{k}]: a module term is [coeff, exps, position]")
        pos = term[2]
        if isinstance(pos, bool) or not isinstance(pos, int) or not 1 <= pos <= rank:
            raise ParseError(f"{where}[{k}]: position must be an integer in 1..{rank}")
        out.append(
            (
                _field_value(p.field, term[0], f"{where}[{k}]"),
                _int_vector(term[1], p.l, f"{where}[{k}]"),
                pos - 1,
            )
        )
    return ModElement.from_terms(p, rank, out)


def _coeff_json(c):
    if c.is_rational():
        return str(c.coeffs[0])
    return [str(x) for x in c.coeffs]


def element_json(f, key) -> dict:
    if isinstance(f, ModElement):
        items = sorted(f.terms.items(), key=lambda kv: key(kv[0]), reverse=True)
        terms = [[_coeff_json(c), list(u), pos + 1] for (pos, u), c in items]
        text = f.format(key)
    else:
        items = sorted(f.terms.items(), key=lambda kv: key(kv[0]), reverse=True)
        terms = [[_coeff_json(c), list(u)] for u, c in items]
        text = f.format(key)
    return {"text": text, "terms": terms}


def _gk_json(gk):
    return None if gk == float("-inf") else gk


def report_json(r) -> dict:
    h = r.hilbert_polynomial
    return {
        "gk_dimension": _gk_json(r.gk_dimension),
        "hilbert_polynomial": {"coeffs": [str(c) for c in h.coeffs], "text": str(h)},
        "stability_threshold": r.stability_threshold,
        "shave_threshold": r.shave_threshold,
        "field_degree": r.field_degree,
        "rank": r.rank,
    }


def run(doc: dict, ordering_override: str | None = None, max_t: int | None = None) -> dict:
    """Execute a parsed task document and return the JSON-ready result."""
    if not isinstance(doc, dict):
        raise ParseError("task file must hold a JSON object")
    task = _require(doc, "task", "task file")
    if task not in TASKS:
        raise ParseError(f"task: unknown task {task!r}; expected one of {', '.join(TASKS)}")
    p = parse_presentation(_require(doc, "presentation", "task file"))
    text = ordering_override or doc.get("ordering")
    ordering = parse_ordering(text) if text else DEFAULT_ORDERING
    extension = parse_extension(doc.get("module_extension", "top"))
    out: dict = {"task": task, "ordering": str(ordering)}

    gens = doc.get("generators", [])
    if not isinstance(gens, list):
        raise ParseError("generators: expected a list of term lists")
    rank = doc.get("rank")
    is_module = task in MODULE_TASKS or (task == "oracle-hf" and rank is not None)

    if is_module:
        if isinstance(rank, bool) or not isinstance(rank, int) or rank < 1:
            raise ParseError("rank: module tasks need a positive integer rank")
        mord = ModuleOrderingSpec(ordering, extension)
        out["ordering"] = str(mord)
        F = [parse_mod_element(p, rank, g, f"generators[{i}]") for i, g in enumerate(gens)]
        G = mod_buchberger(p, F, mord, rank=rank)
        key = mord.key(p.m)
    else:
        F = [parse_element(p, g, f"generators[{i}]") for i, g in enumerate(gens)]
        G = buchberger(p, F, ordering)
        key = ordering.key(p.m)
    out["basis"] = [element_json(g, key) for g in G]

    if task in ("reduce", "member"):
        f = parse_element(p, _require(doc, "f", "task file"), "f")
        _, r = divide(p, f, list(G.elements), ordering)
        out["remainder"] = element_json(r, key)
        if task == "member":
            out["member"] = not r
    elif task in ("hilbert", "gkdim", "module-gkdim"):
        rep = hilbert_data(G)
        out["report"] = report_json(rep)
        if task == "hilbert":
            t = max_t if max_t is not None else doc.get("t", rep.stability_threshold + 3)
            out["values"] = [hilbert_value(G, s) for s in range(t + 1)]
    elif task == "oracle-hf":
        if max_t is not None:
            t = max_t
        elif "t" in doc:
            t = doc["t"]
        else:
            t = default_bound(hilbert_data(G).stability_threshold)
        if isinstance(t, bool) or not isinstance(t, int) or t < 0:
            raise ParseError("t: expected a natural number")
        oracle = [oracle_hf(G, s) for s in range(t + 1)]
        direct = [hilbert_value(G, s) for s in range(t + 1)]
        out.update({"oracle": oracle, "hilbert_value": direct, "agree": oracle == direct})
    return out


def render_text(out: dict) -> str:
    lines = [f"task: {out['task']}", f"ordering: {out['ordering']}", "basis:"]
    lines += [f"  {g['text']}" for g in out["basis"]] or ["  (empty)"]
    if "remainder" in out:
        lines.append(f"remainder: {out['remainder']['text']}")
    if "member" in out:
        lines.append(f"member: {str(out['member']).lower()}")
    if "report" in out:
        r = out["report"]
        gk = "-inf" if r["gk_dimension"] is None else r["gk_dimension"]
        lines += [
            f"gk_dimension: {gk}",
            f"hilbert_polynomial: {r['hilbert_polynomial']['text']}",
            f"hilbert_coefficients: {' '.join(r['hilbert_polynomial']['coeffs']) or '0'}",
            f"stability_threshold: {r['stability_threshold']}",
            f"shave_threshold: {r['shave_threshold']}",
            f"field_degree: {r['field_degree']}",
            f"rank: {r['rank']}",
        ]
    if "values" in out:
        lines.append(f"hilbert_values: {' '.join(map(str, out['values']))}")
    if "oracle" in out:
        lines.append(f"oracle_hf: {' '.join(map(str, out['oracle']))}")
        lines.append(f"hilbert_value: {' '.join(map(str, out['hilbert_value']))}")
        lines.append(f"agree: {str(out['agree']).lower()}")
    return "\n".join(lines)


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(prog="ddgk", description=__doc__.splitlines()[0])
    ap.add_argument("task_file")
    ap.add_argument("--json", action="store_true", help="machine-readable output")
    ap.add_argument("--ordering", help="override, e.g. tdeg:deglex,degrevlex")
    ap.add_argument("--max-t", type=int, help="largest t for value tables")
    args = ap.parse_args(argv)
    try:
        try:
            with open(args.task_file) as fh:
                doc = json.load(fh)
        except json.JSONDecodeError as exc:
            raise ParseError(f"{args.task_file}:{exc.lineno}:{exc.colno}: {exc.msg}") from None
        except OSError as exc:
            raise ParseError(f"{args.task_file}: {exc.strerror}") from None
        out = run(doc, args.ordering, args.max_t)
    except DDGKError as exc:
        code = 2 if isinstance(exc, ValidationError) else 3
        if args.json:
            print(json.dumps({"error": type(exc).__name__, "message": str(exc)}, sort_keys=True))
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return code
    print(json.dumps(out, indent=2, sort_keys=True) if args.json else render_text(out))
    return 0


if __name__ == "__main__":
    sys.exit(main())
