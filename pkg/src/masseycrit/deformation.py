"""The deformation complex of ``(K, zeta)`` and the spectral sequence it carries.

The differential is the local-system coboundary with edge monodromy
``(1+s)**zeta(u, v)`` over the local ring k[s]_(s).  Its reduction at
``s = 0`` is the ordinary coboundary; the first-order term is cup product
with ``zeta``.  The s-adic elementary divisors of each ``D_q`` fix every page:
an exponent ``e >= 1`` in degree ``q`` is a rank-one piece of ``d_e`` from
``E^q`` to ``E^{q+1}``, and the generic rank gives ``E_infinity``.
"""
from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from functools import cached_property

from . import kernels
from .algebra.fields import Field
from .algebra.linalg import (
    LocalMatrix,
    SparseMatrix,
    dvr_elementary_divisors,
    rational_function_rank,
    saturated_kernel_basis,
)
from .algebra.local import LocalRingElem
from .cohomology import (
    Cochain,
    CocycleError,
    CohomologyBasis,
    CohomologyClass,
    IntegerCocycle,
    cohomology_basis,
    cup,
    twisted_columns,
)
from .complex import SimplicialComplex


def sparsify_gauge(zeta: IntegerCocycle) -> list[int]:
    """Vertex function ``f`` making ``zeta + delta f`` sparse.

    Greedy and deterministic: each vertex in turn takes the shift that zeroes
    the most incident edges, until no shift gains.  ``D`` for ``zeta + delta f``
    equals ``L**-1 D L`` with ``L`` the diagonal unit ``(1+s)**f(first vertex)``,
    so exponents agree and kernels correspond.
    """
    K = zeta.complex
    nv = len(K.vertices)
    nbrs: list[list[tuple[int, int]]] = [[] for _ in range(nv)]
    for u, v in K.edges():
        nbrs[u].append((v, -1))  # shifting f[u] by t changes zeta'(u, v) by -t
        nbrs[v].append((u, 1))
    f = [0] * nv

    def val(u, v):
        return zeta(u, v) + f[v] - f[u]

    for _ in range(nv):
        changed = False
        for x in range(nv):
            counts: dict[int, int] = {}
            for y, sg in nbrs[x]:
                a, b = (x, y) if sg < 0 else (y, x)
                t = val(a, b) * (1 if sg < 0 else -1)
                counts[t] = counts.get(t, 0) + 1
            if not counts:
                continue
            t = min(counts, key=lambda c: (-counts[c], abs(c), c))
            if t and counts[t] > counts.get(0, 0):
                f[x] += t
                changed = True
        if not changed:
            break
    return f


class DeformedComplex:
    """``D_q : C^q -> C^{q+1}`` over the local ring, for ``0 <= q < dim K``.

    Elimination runs on the gauge-equivalent complex for a sparsified
    cocycle; kernels are transported back, so every public result refers
    to ``zeta`` itself.
    """

    def __init__(self, K: SimplicialComplex, zeta: IntegerCocycle, F: Field):
        if zeta.complex is not K:
            raise ValueError("zeta lives on a different complex")
        self.complex, self.zeta, self.field = K, zeta, F
        self._mono: dict[int, LocalRingElem] = {0: LocalRingElem.const(F, 1)}
        self.matrices = self._build(zeta)
        self.gauge = sparsify_gauge(zeta)
        if any(self.gauge):
            self._work = self._build(zeta + IntegerCocycle.coboundary_of(K, dict(enumerate(self.gauge))))
        else:
            self._work = self.matrices
        self._exps: dict[int, list[int]] = {}
        self._kernels: dict[int, list[dict]] = {}
        self._survivors: dict[int, "SurvivorSpace"] = {}

    def _monodromy(self, k: int) -> LocalRingElem:
        if k not in self._mono:
            self._mono[k] = LocalRingElem.monodromy(self.field, k)
        return self._mono[k]

    def _build(self, zeta: IntegerCocycle) -> list[LocalMatrix]:
        K, F = self.complex, self.field
        one = self._monodromy(0)
        neg_one = LocalRingElem.const(F, -1)
        out = []
        for q in range(K.dim):
            cols = twisted_columns(K, q, lambda u, v: self._monodromy(zeta(u, v)), one, neg_one)
            out.append(LocalMatrix(F, K.n(q + 1), K.n(q), cols,
                                   K.simplices[q + 1], K.simplices[q]))
        return out

    def matrix(self, q: int) -> LocalMatrix | None:
        """``D_q``, or ``None`` where the target is zero."""
        if 0 <= q < len(self.matrices):
            return self.matrices[q]
        return None

    def apply(self, q: int, vec: dict) -> dict:
        M = self.matrix(q)
        return M.apply(vec) if M is not None else {}

    def exponents(self, q: int) -> list[int]:
        if q not in self._exps:
            ok = 0 <= q < len(self._work)
            self._exps[q] = dvr_elementary_divisors(self._work[q]) if ok else []
        return self._exps[q]

    def kernel(self, q: int) -> list[dict]:
        """Saturated kernel basis of ``D_q`` (all of ``C^q`` at the top degree)."""
        if q not in self._kernels:
            if self.matrix(q) is None:
                one = LocalRingElem.const(self.field, 1)
                self._kernels[q] = [{j: one} for j in range(self.complex.n(q))]
            else:
                basis = saturated_kernel_basis(self._work[q])
                if self._work is not self.matrices:
                    ss = self.complex.simplices[q]
                    basis = [{j: x * self._monodromy(self.gauge[ss[j][0]]) for j, x in v.items()}
                             for v in basis]
                self._kernels[q] = basis
        return self._kernels[q]

    @cached_property
    def basis(self) -> CohomologyBasis:
        return cohomology_basis(self.complex, self.field)

    @cached_property
    def xi(self) -> Cochain:
        """``zeta`` reduced into the field."""
        return self.zeta.to_field(self.field)


def build_deformed(K: SimplicialComplex, zeta: IntegerCocycle, F: Field) -> DeformedComplex:
    return DeformedComplex(K, zeta, F)


# ---------------------------------------------------------------------------
# spectral pages


@dataclass
class SpectralReport:
    """Page dimensions ``pages[r][q]`` for ``r = 1 .. max(r_stab, 1)``,
    differential ranks ``ranks[r][q]`` of ``d_r : E_r^q -> E_r^{q+1}``."""

    dims: tuple
    pages: dict
    ranks: dict
    e_infinity: tuple
    novikov_betti: tuple
    r_stab: int
    exponents: dict = dc_field(default_factory=dict)

    def page(self, r: int) -> tuple:
        """Dimensions of ``E_r`` for any ``r >= 1``."""
        if r < 1:
            raise ValueError("pages start at r = 1")
        last = max(self.pages)
        return self.pages[min(r, last)] if r <= last else self.e_infinity

    def rank(self, r: int) -> tuple:
        return self.ranks.get(r, tuple(0 for _ in self.dims))

    def to_json(self) -> dict:
        return {
            "pages": {str(r): list(d) for r, d in sorted(self.pages.items())},
            "differential_ranks": {str(r): list(d) for r, d in sorted(self.ranks.items())},
            "e_infinity": list(self.e_infinity),
            "novikov_betti": list(self.novikov_betti),
            "r_stab": self.r_stab,
            "elementary_divisors": {str(q): e for q, e in sorted(self.exponents.items())},
        }


def spectral_pages(DC: DeformedComplex) -> SpectralReport:
    K = DC.complex
    top = K.dim
    ed = {q: DC.exponents(q) for q in range(top)}

    def E(q):
        return ed.get(q, [])

    dims = tuple(K.n(q) for q in range(top + 1))
    generic = tuple(dims[q] - len(E(q)) - len(E(q - 1)) for q in range(top + 1))
    positive = [e for q in range(top) for e in E(q) if e >= 1]
    r_stab = 1 + max(positive) if positive else 0
    pages, ranks = {}, {}
    for r in range(1, max(r_stab, 1) + 1):
        pages[r] = tuple(
            generic[q] + sum(e >= r for e in E(q - 1)) + sum(e >= r for e in E(q))
            for q in range(top + 1)
        )
        ranks[r] = tuple(sum(e == r for e in E(q)) for q in range(top + 1))
    return SpectralReport(dims, pages, ranks, generic, generic, r_stab,
                          {q: sorted(E(q)) for q in range(top)})


def novikov_betti(DC: DeformedComplex) -> tuple:
    """Ranks over k(s) computed directly, independent of :func:`spectral_pages`."""
    K = DC.complex
    rk = [rational_function_rank(M) for M in DC.matrices]

    def r(q):
        return rk[q] if 0 <= q < len(rk) else 0

    return tuple(K.n(q) - r(q) - r(q - 1) for q in range(K.dim + 1))


# ---------------------------------------------------------------------------
# cup with xi on cohomology (the first differential, computed without s)


def cup_xi_matrix(DC: DeformedComplex, q: int) -> SparseMatrix:
    """Matrix of ``v -> (-1)**(q+1) v u xi`` from ``H^q`` to ``H^{q+1}`` in basis coordinates."""
    B, F = DC.basis, DC.field
    sign = F(1 if (q + 1) % 2 == 0 else -1)
    nout = B.dim(q + 1) if q + 1 <= DC.complex.dim else 0
    cols = []
    for rep in B.representatives(q):
        if nout == 0:
            cols.append({})
            continue
        img = B.class_of(cup(rep, DC.xi).scale(sign))
        cols.append({i: a for i, a in enumerate(img.coords) if a})
    return SparseMatrix(F, nout, B.dim(q), cols)


def cup_xi_rank(DC: DeformedComplex, q: int) -> int:
    R, _ = kernels.reduce_columns(cup_xi_matrix(DC, q).cols, DC.field, track=False)
    return sum(1 for c in R if c)


# ---------------------------------------------------------------------------
# survivors


@dataclass
class SurvivorSpace:
    """Reduced-echelon basis of the survivor subspace of ``H^q``.

    ``lifts[i]`` is an exact element of ``ker D_q`` whose value at ``s = 0``
    represents ``classes[i]``.
    """

    degree: int
    classes: list
    lifts: list
    pivots: list

    @property
    def dim(self) -> int:
        return len(self.classes)

    def solve(self, v: CohomologyClass):
        """Coefficients expressing ``v`` in this basis, or ``None``."""
        F = v.basis.field
        a = [v.coords[p] for p in self.pivots]
        resid = list(v.coords)
        for ai, c in zip(a, self.classes):
            if ai:
                resid = [F.sub(x, F.mul(ai, y)) for x, y in zip(resid, c.coords)]
        return None if any(resid) else a


def _lvec_axpy(out: dict, vec: dict, a: LocalRingElem) -> None:
    for j, x in vec.items():
        t = out.get(j)
        t = a * x if t is None else t + a * x
        if t:
            out[j] = t
        else:
            out.pop(j, None)


def _evaluate(DC: DeformedComplex, q: int, vec: dict) -> Cochain:
    F = DC.field
    return Cochain.from_vector(DC.complex, F, q,
                               {j: x.at_zero() for j, x in vec.items() if x.at_zero()})


def survivor_space(DC: DeformedComplex, q: int) -> SurvivorSpace:
    if q in DC._survivors:
        return DC._survivors[q]
    F, B = DC.field, DC.basis
    n = B.dim(q)
    rows: list[tuple[list, dict]] = []
    pivots: list[int] = []
    for w in DC.kernel(q) if n else []:
        coords = list(B.class_of(_evaluate(DC, q, w)).coords)
        lift = dict(w)
        for (pc, pl), p in zip(rows, pivots):
            a = coords[p]
            if a:
                coords = [F.sub(x, F.mul(a, y)) for x, y in zip(coords, pc)]
                _lvec_axpy(lift, pl, LocalRingElem.const(F, F.neg(a)))
        nz = [i for i, x in enumerate(coords) if x]
        if not nz:
            continue
        p = nz[0]
        inv = F.inv(coords[p])
        coords = [F.mul(inv, x) for x in coords]
        lift = {j: x * LocalRingElem.const(F, inv) for j, x in lift.items()}
        # keep the basis fully reduced
        for k, ((pc, pl), pk) in enumerate(zip(rows, pivots)):
            a = pc[p]
            if a:
                pc = [F.sub(x, F.mul(a, y)) for x, y in zip(pc, coords)]
                pl = dict(pl)
                _lvec_axpy(pl, lift, LocalRingElem.const(F, F.neg(a)))
                rows[k] = (pc, pl)
        rows.append((coords, lift))
        pivots.append(p)
        if len(rows) == n:
            break
    order = sorted(range(len(rows)), key=lambda i: pivots[i])
    space = SurvivorSpace(
        q,
        [CohomologyClass(B, q, tuple(rows[i][0])) for i in order],
        [rows[i][1] for i in order],
        [pivots[i] for i in order],
    )
    DC._survivors[q] = space
    return space


@dataclass
class SurvivorCertificate:
    """``D(s) (sum_j s**j coefficients[j]) = 0 mod s**(order+1)``, with
    ``coefficients[0]`` the representative of ``cls``."""

    cls: CohomologyClass
    coefficients: list
    order: int
    strict: bool

    def verify(self, DC: DeformedComplex) -> bool:
        F, q = DC.field, self.cls.degree
        vec: dict = {}
        for j, c in enumerate(self.coefficients):
            sj = LocalRingElem(F, (F.zero,) * j + (F.one,))
            for i, x in c.vector().items():
                vec[i] = vec.get(i, LocalRingElem(F)) + sj * LocalRingElem.const(F, x)
        image = DC.apply(q, {i: x for i, x in vec.items() if x})
        if any(x.valuation() <= self.order for x in image.values()):
            return False
        rep = self.cls.representative()
        first = self.coefficients[0] if self.coefficients else None
        return first is not None and (first - rep).is_zero()

    def to_json(self) -> dict:
        F = self.cls.basis.field
        K = self.cls.basis.complex
        return {
            "degree": self.cls.degree,
            "coords": [F.to_json(x) for x in self.cls.coords],
            "order": self.order,
            "strict": self.strict,
            "lift": [
                {" ".join(K.label(s)): F.format_elem(x) for s, x in sorted(c.values.items())}
                for c in self.coefficients
            ],
        }


def is_survivor(DC: DeformedComplex, v: CohomologyClass) -> SurvivorCertificate | None:
    B = DC.basis
    if v.basis is not B:
        if v.basis.complex is not DC.complex or v.basis.field != DC.field or v.basis.bundle:
            raise ValueError("class is not in the trivial-coefficient cohomology of this complex")
        v = CohomologyClass(B, v.degree, v.coords)
    q = v.degree
    if not 0 <= q <= DC.complex.dim or len(v.coords) != B.dim(q):
        raise ValueError(f"degree mismatch for class of degree {q}")
    S = survivor_space(DC, q)
    a = S.solve(v)
    if a is None:
        return None
    F = DC.field
    lift: dict = {}
    for ai, w in zip(a, S.lifts):
        if ai:
            _lvec_axpy(lift, w, LocalRingElem.const(F, ai))
    rep = v.representative()
    delta = rep - _evaluate(DC, q, lift)
    if q > 0 and not delta.is_zero():
        b = B.coboundary_preimage(delta)
        for i, x in DC.apply(q - 1, {j: LocalRingElem.const(F, y)
                                     for j, y in b.vector().items()}).items():
            t = lift.get(i)
            t = x if t is None else t + x
            if t:
                lift[i] = t
            else:
                lift.pop(i, None)
    T = spectral_pages_cached(DC).r_stab
    series = {j: x.series(T + 1) for j, x in lift.items()}
    coeffs = []
    for k in range(T + 1):
        coeffs.append(Cochain.from_vector(
            DC.complex, F, q,
            {j: s[k] for j, s in series.items() if k < len(s) and s[k]}))
    strict = all(c.is_zero() for c in coeffs[1:])
    return SurvivorCertificate(v, coeffs, T, strict)


def spectral_pages_cached(DC: DeformedComplex) -> SpectralReport:
    rep = DC.__dict__.get("_report")
    if rep is None:
        rep = DC.__dict__["_report"] = spectral_pages(DC)
    return rep


def strict_survivor_check(DC: DeformedComplex, c: Cochain) -> bool:
    """True iff ``D(s) c = 0`` identically; a sufficient condition for survival."""
    if c.complex is not DC.complex or c.field != DC.field or c.bundle is not None:
        raise ValueError("cochain does not belong to this deformed complex")
    if not c.is_cocycle():
        raise CocycleError("strict survivor check needs a cocycle")
    F = DC.field
    image = DC.apply(c.degree, {j: LocalRingElem.const(F, x) for j, x in c.vector().items()})
    return not image
