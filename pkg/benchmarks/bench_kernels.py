#!/usr/bin/env python3
"""Time the compiled and pure-Python elimination kernels on the same inputs.

    python benchmarks/bench_kernels.py [--example sigma2xrp2] [--field 2] [--repeat 3]

Both backends are called directly, so the choice made at import time does
not matter.  Results must agree; the script exits 1 if they do not.
"""
from __future__ import annotations

import argparse
import sys
import time

from masseycrit import _pykernels as py
from masseycrit.algebra.fields import Field
from masseycrit.deformation import build_deformed
from masseycrit.library import DEFAULT_XI, load_example

try:
    from masseycrit import _ckernels as cy
except ImportError:
    cy = None


def best_of(repeat, fn):
    best, out = float("inf"), None
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t0)
    return best, out


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--example", default="sigma2xrp2")
    ap.add_argument("--field", type=int, default=2, help="prime p")
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args(argv)
    if cy is None:
        print("compiled extension not built; nothing to compare", file=sys.stderr)
        return 1

    ex = load_example(args.example)
    F, p = Field(args.field), args.field
    DC = build_deformed(ex.complex, ex.cocycle(DEFAULT_XI[args.example]), F)
    mats = [M.polynomial_columns() for M in DC.matrices]
    work = [M.polynomial_columns() for M in DC._work]

    # the s = 0 specialisation is an ordinary matrix over F_p
    at_zero = [[{i: e[0] for i, e in col.items() if e and e[0]} for col in m] for m in mats]
    kernels = [
        ("reduce_columns", at_zero,
         lambda m: py.reduce_columns(m, F, False)[0], lambda m: cy.reduce_columns_modp(m, p, False)[0]),
        ("dvr_reduce", work,
         lambda m: sorted(py.dvr_reduce(m, F)[0]), lambda m: sorted(cy.dvr_reduce_modp(m, p, False)[0])),
        ("fraction_free_rank", mats,
         lambda m: py.fraction_free_rank(m, F), lambda m: cy.fraction_free_rank_modp(m, p)),
    ]
    print(f"{args.example} over F{p}, f-vector {ex.complex.f_vector}, best of {args.repeat}")
    print(f"{'kernel':<20}{'python s':>12}{'cython s':>12}{'speedup':>10}")
    ok = True
    for name, inputs, fpy, fcy in kernels:
        tp, rp = best_of(args.repeat, lambda: [fpy(m) for m in inputs])
        tc, rc = best_of(args.repeat, lambda: [fcy(m) for m in inputs])
        same = rp == rc
        ok &= same
        print(f"{name:<20}{tp:>12.3f}{tc:>12.4f}{tp / max(tc, 1e-9):>9.1f}x"
              + ("" if same else "  MISMATCH"))
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
