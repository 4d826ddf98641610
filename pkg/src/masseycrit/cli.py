"""Command-line interface.

Every command prints one JSON document (``--format json``, the default) with
a top-level ``"schema": 1``, or a short human summary (``--format text``).
Exit status: 0 on success, 2 on invalid input, 1 on an internal error.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from .algebra.fields import Field
from .bound import SCHEMA, bound_search, build_pool
from .cohomology import (
    CocycleError,
    IntegerCocycle,
    cohomology_basis,
    cup_length,
    parse_bundle,
    parse_cochain,
    parse_integer_cocycle,
    twisted_cohomology_basis,
)
from .complex import ComplexError, connected_sum, parse_complex, product_complex, write_complex
from .deformation import (
    build_deformed,
    is_survivor,
    novikov_betti,
    spectral_pages_cached,
    strict_survivor_check,
    survivor_space,
)
from .library import DEFAULT_XI, EXAMPLES, Example, UnknownExample, load_example, split_ref


class UsageError(ValueError):
    pass


# ---------------------------------------------------------------------------
# input resolution


def _source(args, i: int = 0):
    """``(complex, example-or-None, name)`` for the i-th complex argument."""
    srcs = args.sources or []
    if i >= len(srcs):
        raise UsageError("missing --complex PATH or --example NAME")
    kind, ref = srcs[i]
    if kind == "example":
        ex = load_example(ref)
        return ex.complex, ex, ex.name
    return parse_complex(Path(ref).read_text()), None, ref


def _is_file(ref: str) -> bool:
    return os.path.sep in ref or Path(ref).is_file()


def _xi(args, K, ex: Example | None) -> IntegerCocycle:
    ref = args.xi
    if ref is None:
        if ex is None or ex.name not in DEFAULT_XI:
            raise UsageError("--xi is required for this complex")
        return ex.cocycle(DEFAULT_XI[ex.name])
    if _is_file(ref):
        return parse_integer_cocycle(Path(ref).read_text(), K)
    return _named(ref, ex, "cocycle")


def _named(ref: str, ex: Example | None, what: str, F: Field | None = None):
    if ex is not None:
        try:
            return ex.cocycle(ref) if what == "cocycle" else _class_from(ex, ref, F)
        except UnknownExample:
            pass
    name, key = split_ref(ref)
    if ex is None or name != ex.name:
        raise UsageError(f"{ref!r} belongs to example {name!r}, not to the input complex")
    return ex.cocycle(key) if what == "cocycle" else _class_from(ex, key, F)


def _class_from(ex: Example, ref: str, F: Field):
    try:
        return ex.cochain(ref, F)
    except UnknownExample:
        return ex.cocycle(ref).to_field(F)


def _classes(args, K, ex, F) -> list:
    out = []
    for ref in args.cls or []:
        if _is_file(ref):
            out.append((ref, parse_cochain(Path(ref).read_text(), K, F)))
        else:
            out.append((ref, _named(ref, ex, "class", F)))
    return out


def _bundles(args, K, F) -> list:
    return [parse_bundle(Path(p).read_text(), K, F) for p in args.bundle or []]


def _field(args) -> Field:
    return Field.parse(args.field)


def _header(command: str, name: str, K, F: Field | None = None) -> dict:
    out = {"schema": SCHEMA, "command": command, "complex": name,
           "f_vector": list(K.f_vector)}
    if F is not None:
        out["field"] = "Q" if F.p == 0 else f"F{F.p}"
    return out


def _fmt(F: Field, coords) -> list:
    return [F.to_json(x) for x in coords]


# ---------------------------------------------------------------------------
# commands


def cmd_betti(args):
    K, ex, name = _source(args)
    F = _field(args)
    bundles = _bundles(args, K, F)
    B = twisted_cohomology_basis(K, bundles[0], F) if bundles else cohomology_basis(K, F)
    out = _header("betti", name, K, F)
    out.update(betti=list(B.betti), euler_characteristic=K.euler_characteristic,
               twisted=bool(bundles) and not bundles[0].is_trivial)
    return out, f"betti {tuple(B.betti)}"


def cmd_cuplen(args):
    K, ex, name = _source(args)
    F = _field(args)
    n = cup_length(K, F)
    out = _header("cuplen", name, K, F)
    out["cup_length"] = n
    return out, f"cup-length {n}"


def _deformed(args):
    K, ex, name = _source(args)
    F = _field(args)
    return K, ex, name, F, build_deformed(K, _xi(args, K, ex), F)


def cmd_pages(args):
    K, ex, name, F, DC = _deformed(args)
    rep = spectral_pages_cached(DC)
    out = _header("pages", name, K, F)
    out.update(rep.to_json())
    text = "\n".join([f"E_{r}: {d}" for r, d in sorted(rep.pages.items())]
                     + [f"E_inf: {rep.e_infinity}", f"r_stab: {rep.r_stab}"])
    return out, text


def cmd_novikov(args):
    K, ex, name, F, DC = _deformed(args)
    b = novikov_betti(DC)
    out = _header("novikov", name, K, F)
    out["novikov_betti"] = list(b)
    return out, f"novikov betti {b}"


def cmd_survivors(args):
    K, ex, name, F, DC = _deformed(args)
    out = _header("survivors", name, K, F)
    lines = []
    degrees = []
    for q in range(K.dim + 1):
        S = survivor_space(DC, q)
        degrees.append({
            "degree": q,
            "betti": DC.basis.dim(q),
            "dim": S.dim,
            "basis": [_fmt(F, c.coords) for c in S.classes],
            "certificates": [is_survivor(DC, c).to_json() for c in S.classes],
        })
        lines.append(f"H^{q}: {S.dim} of {DC.basis.dim(q)} classes survive")
    out["degrees"] = degrees
    checks = []
    for ref, c in _classes(args, K, ex, F):
        cert = is_survivor(DC, DC.basis.class_of(c))
        checks.append({"class": ref, "survivor": cert is not None,
                       "certificate": cert.to_json() if cert else None})
        lines.append(f"{ref}: {'survivor' if cert else 'not a survivor'}")
    out["classes"] = checks
    return out, "\n".join(lines)


def cmd_strict_check(args):
    K, ex, name, F, DC = _deformed(args)
    classes = _classes(args, K, ex, F)
    if not classes:
        raise UsageError("strict-check needs at least one --class")
    res = [{"class": ref, "strict": strict_survivor_check(DC, c)} for ref, c in classes]
    out = _header("strict-check", name, K, F)
    out["results"] = res
    return out, "\n".join(f"{r['class']}: {'strict' if r['strict'] else 'not strict'}"
                          for r in res)


def cmd_bound(args):
    K, ex, name, F, DC = _deformed(args)
    classes = [c for _, c in _classes(args, K, ex, F)]
    factors = []
    for ref in args.factor or []:
        factors.append(parse_cochain(Path(ref).read_text(), K, F) if _is_file(ref)
                       else _named(ref, ex, "class", F))
    pool = build_pool(DC, survivors=classes or None,
                      bundles=[None] + _bundles(args, K, F),
                      bundle_classes=factors or None)
    rep = bound_search(pool, args.dim_cap)
    out = _header("bound", name, K, F)
    out.update(rep.to_json())
    text = (f"m = {rep.m}; at least {rep.count_lower_bound} critical points "
            f"(cat >= {rep.cat_lower_bound})")
    if rep.witness:
        text += "\nwitness: " + " u ".join(f.label for f in rep.witness)
    return out, text


def cmd_product(args):
    K, _, n1 = _source(args, 0)
    L, _, n2 = _source(args, 1)
    X, _, _ = product_complex(K, L)
    out = _header("product", f"{n1} x {n2}", X)
    out["complex_text"] = write_complex(X)
    return out, write_complex(X).rstrip("\n")


def cmd_consum(args):
    K, _, n1 = _source(args, 0)
    L, _, n2 = _source(args, 1)
    rm = [s.split() for s in args.remove or []]
    if len(rm) not in (0, 2):
        raise UsageError("--remove must be given twice (one simplex per complex) or not at all")
    X, _ = connected_sum(K, L, rm[0] if rm else None, rm[1] if rm else None)
    out = _header("consum", f"{n1} # {n2}", X)
    out["complex_text"] = write_complex(X)
    return out, write_complex(X).rstrip("\n")


def cmd_examples(args):
    items = []
    for n in EXAMPLES:
        ex = load_example(n)
        items.append({"name": n, "description": ex.description,
                      "f_vector": list(ex.complex.f_vector),
                      "cocycles": sorted(ex.cocycles), "classes": sorted(ex.classes),
                      "default_xi": DEFAULT_XI.get(n)})
    out = {"schema": SCHEMA, "command": "examples", "examples": items}
    return out, "\n".join(f"{e['name']:12s} f={tuple(e['f_vector'])}  {e['description']}"
                          for e in items)


COMMANDS = {
    "betti": (cmd_betti, "cohomology dimensions"),
    "cuplen": (cmd_cuplen, "cup-length"),
    "pages": (cmd_pages, "spectral sequence pages"),
    "novikov": (cmd_novikov, "Novikov-Betti numbers (rank over k(s))"),
    "survivors": (cmd_survivors, "survivor subspaces with certificates"),
    "strict-check": (cmd_strict_check, "check D(s)c = 0 for given cocycles"),
    "bound": (cmd_bound, "critical-point lower bound"),
    "product": (cmd_product, "triangulated product of two complexes"),
    "consum": (cmd_consum, "connected sum of two complexes"),
    "examples": (cmd_examples, "list bundled examples"),
}


class _Append(argparse.Action):
    def __call__(self, parser, ns, value, option_string=None):
        items = getattr(ns, "sources", None) or []
        items.append((self.dest, value))
        ns.sources = items


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="masseycrit", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)
    for name, (_, helptext) in COMMANDS.items():
        p = sub.add_parser(name, help=helptext)
        p.set_defaults(sources=None)
        p.add_argument("--complex", dest="complex", action=_Append, metavar="PATH")
        p.add_argument("--example", dest="example", action=_Append, metavar="NAME")
        p.add_argument("--field", default="Q", help="Q or F<p> (default Q)")
        p.add_argument("--xi", metavar="PATH|NAME", help="integer cocycle file or example.name")
        p.add_argument("--bundle", action="append", metavar="PATH")
        p.add_argument("--class", dest="cls", action="append", metavar="PATH|NAME")
        p.add_argument("--factor", action="append", metavar="PATH|NAME",
                       help="explicit bundle factor for `bound`")
        p.add_argument("--remove", action="append", metavar="'v0 v1 ..'",
                       help="simplex removed by `consum` (give twice)")
        p.add_argument("--dim-cap", type=int)
        p.add_argument("--format", choices=["json", "text"], default="json")
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    func = COMMANDS[args.command][0]
    try:
        out, text = func(args)
    except (UsageError, UnknownExample, ComplexError, CocycleError, ValueError,
            OSError) as e:
        print(f"masseycrit: error: {e}", file=sys.stderr)
        return 2
    except Exception as e:  # noqa: BLE001 - report and signal an internal failure
        print(f"masseycrit: internal error: {type(e).__name__}: {e}", file=sys.stderr)
        return 1
    if args.format == "json":
        print(json.dumps(out, indent=2, sort_keys=True))
    else:
        print(text)
    return 0


if __name__ == "__main__":
    sys.exit(main())
