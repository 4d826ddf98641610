"""Longest nonzero product ``v1 u v2 u u3 u ... u um`` with ``v1, v2`` xi-survivors.

The first two factors come from the survivor pool (trivial coefficients);
the rest are positive-degree classes with coefficients in flat line bundles.
A nonzero product of length ``m`` gives ``m - 1`` as a lower bound for the
category of the critical set, and hence for the number of critical points.

The search runs over pool *representatives* only, not over arbitrary linear
combinations.  That keeps it finite and is the semantics of every report.
"""
from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from typing import Iterable, Sequence

from .cohomology import (
    Cochain,
    CohomologyBasis,
    CohomologyClass,
    LineBundle,
    _norm_bundle,
    cup,
    twisted_cohomology_basis,
)
from .deformation import DeformedComplex, is_survivor, survivor_space

SCHEMA = 1


@dataclass(frozen=True, eq=False)
class Factor:
    """One pool entry: a cocycle together with where it came from."""

    kind: str  # "survivor" or "bundle"
    label: str
    cochain: Cochain
    bundle_id: int = 0

    @property
    def degree(self) -> int:
        return self.cochain.degree

    @property
    def bundle(self) -> LineBundle | None:
        return _norm_bundle(self.cochain.bundle)

    def to_json(self) -> dict:
        c = self.cochain
        F, K = c.field, c.complex
        B = twisted_cohomology_basis(K, self.bundle, F)
        return {
            "kind": self.kind,
            "label": self.label,
            "degree": self.degree,
            "bundle": "trivial" if self.bundle is None else f"E{self.bundle_id}",
            "coords": [F.to_json(x) for x in B.class_of(c).coords],
        }


@dataclass
class FactorPool:
    deformed: DeformedComplex
    survivors: list
    factors: list
    bundles: list = dc_field(default_factory=list)

    @property
    def complex(self):
        return self.deformed.complex

    @property
    def field(self):
        return self.deformed.field


def _as_cochain(x) -> Cochain:
    return x.representative() if isinstance(x, CohomologyClass) else x


def build_pool(
    DC: DeformedComplex,
    survivors: Iterable | None = None,
    bundles: Sequence[LineBundle | None] | None = None,
    bundle_classes: Iterable[Cochain] | None = None,
) -> FactorPool:
    """Assemble a pool.

    ``survivors`` defaults to the survivor-space basis in every degree; any
    explicit candidate must pass :func:`is_survivor`.  Bundle factors are the
    positive-degree basis representatives of each bundle in ``bundles``
    (default: the trivial bundle only), unless ``bundle_classes`` lists the
    cocycles explicitly.
    """
    K, F, B = DC.complex, DC.field, DC.basis
    surv: list[Factor] = []
    if survivors is None:
        for q in range(K.dim + 1):
            for i, cls in enumerate(survivor_space(DC, q).classes):
                surv.append(Factor("survivor", f"S{q}.{i}", cls.representative()))
    else:
        for i, x in enumerate(survivors):
            c = _as_cochain(x)
            if c.bundle is not None:
                raise ValueError("survivor candidates need trivial coefficients")
            if is_survivor(DC, B.class_of(c)) is None:
                raise ValueError(f"candidate {i} of degree {c.degree} is not a xi-survivor")
            surv.append(Factor("survivor", f"v{i + 1}", c))

    ids: dict = {}
    blist: list = []

    def bundle_id(mu) -> int:
        mu = _norm_bundle(mu)
        key = mu.key() if mu is not None else None
        if key not in ids:
            ids[key] = len(blist)
            blist.append(mu)
        return ids[key]

    facs: list[Factor] = []
    if bundle_classes is not None:
        for i, c in enumerate(bundle_classes):
            if c.degree <= 0:
                raise ValueError("bundle factors must have positive degree")
            if not c.is_cocycle():
                raise ValueError(f"bundle factor {i} is not a cocycle")
            facs.append(Factor("bundle", f"u{i + 1}", c, bundle_id(c.bundle)))
    else:
        for mu in (bundles if bundles is not None else [None]):
            b = bundle_id(mu)
            TB = twisted_cohomology_basis(K, blist[b], F)
            for q in range(1, K.dim + 1):
                for i, c in enumerate(TB.representatives(q)):
                    facs.append(Factor("bundle", f"E{b}.{q}.{i}", c, b))
    facs.sort(key=lambda f: (f.degree, f.bundle_id))
    return FactorPool(DC, surv, facs, blist)


@dataclass
class BoundReport:
    m: int
    witness: list
    product: CohomologyClass | None
    repeated_survivor: bool
    dim_cap: int

    @property
    def cat_lower_bound(self) -> int:
        return max(self.m - 1, 0)

    @property
    def count_lower_bound(self) -> int:
        return max(self.m - 1, 0)

    def to_json(self) -> dict:
        F = self.product.basis.field if self.product is not None else None
        return {
            "schema": SCHEMA,
            "m": self.m,
            "cat_lower_bound": self.cat_lower_bound,
            "count_lower_bound": self.count_lower_bound,
            "dim_cap": self.dim_cap,
            "repeated_survivor": self.repeated_survivor,
            "witness": [f.to_json() for f in self.witness],
            "product": None if self.product is None else {
                "degree": self.product.degree,
                "coords": [F.to_json(x) for x in self.product.coords],
            },
        }


def bound_search(pool: FactorPool, dim_cap: int | None = None) -> BoundReport:
    """Exhaustive depth-first search; the witness is the lexicographically
    first (by pool position) among the longest nonzero products."""
    K, F = pool.complex, pool.field
    cap = K.dim if dim_cap is None else min(dim_cap, K.dim)
    facs = pool.factors
    memo: dict = {}

    def reduced(c: Cochain) -> CohomologyClass:
        return twisted_cohomology_basis(K, c.bundle, F).class_of(c)

    def extend(cls: CohomologyClass, start: int) -> tuple:
        """Longest tail of factors from ``start`` on keeping ``cls`` nonzero."""
        mu = cls.bundle
        key = (mu.key() if mu is not None else None, cls.degree, cls.coords, start)
        hit = memo.get(key)
        if hit is not None:
            return hit
        best: tuple = ()
        rep = cls.representative()
        for k in range(start, len(facs)):
            if cls.degree + facs[k].degree > cap:
                break  # factors are sorted by degree
            prod = reduced(cup(rep, facs[k].cochain))
            if prod.is_zero():
                continue
            tail = (k,) + extend(prod, k)
            if len(tail) > len(best):
                best = tail
        memo[key] = best
        return best

    best = None
    S = pool.survivors
    for i in range(len(S)):
        for j in range(i, len(S)):
            if S[i].degree + S[j].degree > cap:
                continue
            prod = reduced(cup(S[i].cochain, S[j].cochain))
            if prod.is_zero():
                continue
            tail = extend(prod, 0)
            if best is None or 2 + len(tail) > 2 + len(best[2]):
                best = (i, j, tail)
    if best is None:
        return BoundReport(0, [], None, False, cap)
    i, j, tail = best
    witness = [S[i], S[j]] + [facs[k] for k in tail]
    prod = reduced(_multiply(witness))
    return BoundReport(len(witness), witness, prod, i == j, cap)


def _multiply(factors: Sequence[Factor]) -> Cochain:
    c = factors[0].cochain
    for f in factors[1:]:
        c = cup(c, f.cochain)
    return c


def verify_witness(report: BoundReport, pool: FactorPool) -> bool:
    """Recompute everything the report claims; False on any discrepancy."""
    try:
        if report.cat_lower_bound != max(report.m - 1, 0) \
                or report.count_lower_bound != report.cat_lower_bound:
            return False
        if report.m == 0:
            return not report.witness and report.product is None
        w = report.witness
        if report.m != len(w) or report.m < 2:
            return False
        DC = pool.deformed
        K, F = DC.complex, DC.field
        for f in w[:2]:
            c = f.cochain
            if c.bundle is not None or c.complex is not K or not c.is_cocycle():
                return False
            cert = is_survivor(DC, DC.basis.class_of(c))
            if cert is None or not cert.verify(DC):
                return False
        if any(f.degree <= 0 or not f.cochain.is_cocycle() for f in w[2:]):
            return False
        prod = _multiply(w)
        if prod.degree > report.dim_cap:
            return False
        fresh = CohomologyBasis(K, F, prod.bundle)
        cls = fresh.class_of(prod)
        return not cls.is_zero()
    except (ValueError, ArithmeticError):
        return False
