"""Simplicial cochains with trivial or rank-1 local coefficients.

Cochain values live over a :class:`~masseycrit.algebra.fields.Field` and
are keyed by ascending vertex-index tuples of the underlying complex.
Local-system values are based at the leading (smallest) vertex of each
simplex; ``mu[(u, v)]`` for ``u < v`` transports the fibre at ``v`` to the
fibre at ``u``.

File formats::

    coch q v0 v1 ... vq value     # cochain entries
    edge u v value                # line bundle (nonzero field values)
    edge u v n                    # integer 1-cocycle

Field values are integers for F_p and ``a/b`` for Q.  Listing the vertices
of a line out of order is allowed; the value is then read as belonging to
that orientation.
"""
from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from typing import Callable, Mapping

from . import kernels
from .algebra.fields import Field
from .algebra.linalg import SparseMatrix
from .complex import ComplexError, SimplicialComplex, VertexMap, faces_with_signs


class CocycleError(ValueError):
    """An input that must be a cocycle (or flat bundle) is not."""


def _perm_sign(seq) -> int:
    seq = list(seq)
    sign = 1
    for i in range(len(seq)):
        while seq[i] != i:
            j = seq[i]
            seq[i], seq[j] = seq[j], seq[i]
            sign = -sign
    return sign


def _orient(vs):
    """Sort a vertex tuple; return (sorted tuple, permutation sign) or None if degenerate."""
    if len(set(vs)) != len(vs):
        return None
    order = sorted(range(len(vs)), key=lambda i: vs[i])
    return tuple(vs[i] for i in order), _perm_sign(order)


# ---------------------------------------------------------------------------
# coefficient systems


@dataclass(frozen=True, eq=False)
class LineBundle:
    """Flat rank-1 local system: a nonzero field value per edge ``(u, v)``, ``u < v``.

    Edges not listed carry 1.
    """

    complex: SimplicialComplex
    field: Field
    values: Mapping = dc_field(default_factory=dict)

    def __post_init__(self):
        F = self.field
        vals = {}
        for e, x in self.values.items():
            x = F(x)
            if not x:
                raise CocycleError(f"bundle value on edge {self.complex.label(e)} is zero")
            if x != F.one:
                vals[e] = x
        object.__setattr__(self, "values", vals)
        for t in self.complex.triangles():
            u, v, w = t
            if F.mul(self(u, v), self(v, w)) != self(u, w):
                raise CocycleError(
                    f"bundle is not flat on 2-simplex {self.complex.label(t)}"
                )

    @classmethod
    def trivial(cls, K: SimplicialComplex, F: Field) -> "LineBundle":
        return cls(K, F, {})

    def __call__(self, u: int, v: int):
        """Transport from the fibre at ``v`` to the fibre at ``u``."""
        F = self.field
        if u < v:
            return self.values.get((u, v), F.one)
        return F.inv(self.values.get((v, u), F.one))

    def transport(self, path) -> object:
        F = self.field
        acc = F.one
        for a, b in zip(path, path[1:]):
            acc = F.mul(acc, self(a, b))
        return acc

    @property
    def is_trivial(self) -> bool:
        return not self.values

    def key(self) -> tuple:
        return (self.field.p, tuple(sorted(self.values.items())))

    def __eq__(self, other):
        return (isinstance(other, LineBundle) and self.complex is other.complex
                and self.key() == other.key())

    def __hash__(self):
        return hash(self.key())

    def inverse(self) -> "LineBundle":
        F = self.field
        return LineBundle(self.complex, F, {e: F.inv(x) for e, x in self.values.items()})

    def holonomy(self, loop) -> object:
        """Product of transports around a closed vertex path."""
        return self.transport(list(loop))


def tensor_bundles(m1: LineBundle | None, m2: LineBundle | None) -> LineBundle | None:
    """Edgewise product; ``None`` stands for the trivial bundle."""
    if m1 is None or m1.is_trivial:
        return m2 if m2 is None or not m2.is_trivial else None
    if m2 is None or m2.is_trivial:
        return m1
    F = m1.field
    edges = set(m1.values) | set(m2.values)
    vals = {e: F.mul(m1.values.get(e, F.one), m2.values.get(e, F.one)) for e in edges}
    out = LineBundle(m1.complex, F, vals)
    return None if out.is_trivial else out


def _norm_bundle(mu: LineBundle | None) -> LineBundle | None:
    return None if mu is None or mu.is_trivial else mu


@dataclass(frozen=True, eq=False)
class IntegerCocycle:
    """Integer 1-cocycle ``zeta``; values on edges ``(u, v)``, ``u < v``; absent means 0."""

    complex: SimplicialComplex
    values: Mapping = dc_field(default_factory=dict)

    def __post_init__(self):
        vals = {e: int(x) for e, x in self.values.items() if int(x)}
        object.__setattr__(self, "values", vals)
        for t in self.complex.triangles():
            u, v, w = t
            if self(v, w) - self(u, w) + self(u, v):
                raise CocycleError(f"integer cochain is not a cocycle on 2-simplex "
                                   f"{self.complex.label(t)}")

    def __call__(self, u: int, v: int) -> int:
        if u < v:
            return self.values.get((u, v), 0)
        return -self.values.get((v, u), 0)

    @property
    def is_zero(self) -> bool:
        return not self.values

    def to_field(self, F: Field) -> "Cochain":
        """Reduction through the canonical ring map Z -> field."""
        return Cochain(self.complex, F, 1, {e: F(x) for e, x in self.values.items()})

    def bundle(self, F: Field, t) -> LineBundle:
        """Line bundle with monodromy ``t ** zeta``."""
        return LineBundle(self.complex, F, {e: F.pow(F(t), x) for e, x in self.values.items()})

    def __add__(self, other):
        vals = dict(self.values)
        for e, x in other.values.items():
            vals[e] = vals.get(e, 0) + x
        return IntegerCocycle(self.complex, vals)

    def __rmul__(self, n: int):
        return IntegerCocycle(self.complex, {e: n * x for e, x in self.values.items()})

    @classmethod
    def coboundary_of(cls, K: SimplicialComplex, f: Mapping[int, int]) -> "IntegerCocycle":
        """``delta f`` for an integer vertex function."""
        return cls(K, {(u, v): f.get(v, 0) - f.get(u, 0) for u, v in K.edges()})


# ---------------------------------------------------------------------------
# cochains


@dataclass(eq=False)
class Cochain:
    """A q-cochain, optionally with values in a line bundle."""

    complex: SimplicialComplex
    field: Field
    degree: int
    values: dict = dc_field(default_factory=dict)
    bundle: LineBundle | None = None

    def __post_init__(self):
        self.bundle = _norm_bundle(self.bundle)
        F = self.field
        idx = self.complex.index.get(self.degree, {})
        clean = {}
        for s, x in self.values.items():
            if s not in idx:
                raise ComplexError(f"{s} is not a {self.degree}-simplex")
            x = F(x)
            if x:
                clean[s] = x
        self.values = clean

    @classmethod
    def from_vector(cls, K, F, q, vec: Mapping[int, object], bundle=None) -> "Cochain":
        ss = K.simplices.get(q, [])
        return cls(K, F, q, {ss[i]: x for i, x in vec.items()}, bundle)

    @classmethod
    def constant(cls, K, F, value=1) -> "Cochain":
        return cls(K, F, 0, {(v,): value for v in range(len(K.vertices))})

    def vector(self) -> dict:
        idx = self.complex.index[self.degree]
        return {idx[s]: x for s, x in self.values.items()}

    def __call__(self, s):
        return self.values.get(tuple(s), self.field.zero)

    def is_zero(self) -> bool:
        return not self.values

    def _check(self, other: "Cochain"):
        if (other.complex is not self.complex or other.degree != self.degree
                or other.field != self.field or other.bundle != self.bundle):
            raise ValueError("incompatible cochains")

    def __add__(self, other: "Cochain") -> "Cochain":
        self._check(other)
        F = self.field
        vals = dict(self.values)
        for s, x in other.values.items():
            vals[s] = F.add(vals.get(s, F.zero), x)
        return Cochain(self.complex, F, self.degree, vals, self.bundle)

    def scale(self, a) -> "Cochain":
        F = self.field
        a = F(a)
        return Cochain(self.complex, F, self.degree,
                       {s: F.mul(a, x) for s, x in self.values.items()}, self.bundle)

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other):
        return self + (-other)

    def __eq__(self, other):
        if not isinstance(other, Cochain):
            return NotImplemented
        return (self.complex is other.complex and self.degree == other.degree
                and self.bundle == other.bundle and self.values == other.values)

    def coboundary(self) -> "Cochain":
        """(Twisted) coboundary; on the top degree this is the zero (q+1)-cochain."""
        M = cochain_complex(self.complex, self.field, self.bundle).matrix(self.degree)
        return Cochain.from_vector(self.complex, self.field, self.degree + 1,
                                   M.apply(self.vector()), self.bundle)

    def is_cocycle(self) -> bool:
        return self.coboundary().is_zero()


# ---------------------------------------------------------------------------
# coboundary matrices with local coefficients


def twisted_columns(K: SimplicialComplex, q: int, front: Callable[[int, int], object],
                    one, neg_one) -> list[dict]:
    """Columns of the local-system coboundary C^q -> C^{q+1}.

    ``front(v0, v1)`` gives the coefficient on the 0-th face; the remaining
    faces get ``one`` / ``neg_one`` by parity.
    """
    cols: list[dict] = [{} for _ in range(K.n(q))]
    signs = [one if i % 2 == 0 else neg_one for i in range(q + 2)]
    for r, (t, faces) in enumerate(zip(K.simplices.get(q + 1, ()), K.face_table(q))):
        c = front(t[0], t[1])
        if c:
            cols[faces[0]][r] = c
        for i in range(1, len(faces)):
            cols[faces[i]][r] = signs[i]
    return cols


def twisted_coboundary(K: SimplicialComplex, mu: LineBundle | None, q: int,
                       field: Field | None = None) -> SparseMatrix:
    """D_q with ``(Dc)(v0..v_{q+1}) = mu(v0,v1) c(v1..) + sum_{i>=1} (-1)^i c(..^v_i..)``."""
    F = mu.field if mu is not None else field
    if F is None:
        raise ValueError("field required for the trivial bundle")
    if mu is not None and mu.complex is not K:
        raise ValueError("bundle lives on a different complex")
    if mu is None or mu.is_trivial:
        front = lambda u, v: F.one  # noqa: E731
    else:
        front = mu
    cols = twisted_columns(K, q, front, F.one, F.neg(F.one))
    return SparseMatrix(F, K.n(q + 1), K.n(q), cols,
                        K.simplices.get(q + 1, []), K.simplices.get(q, []))


class _CochainComplex:
    """Lazily built coboundary matrices for (K, field, bundle)."""

    def __init__(self, K: SimplicialComplex, F: Field, mu: LineBundle | None):
        self.K, self.F, self.mu = K, F, _norm_bundle(mu)
        self._mats: dict[int, SparseMatrix] = {}

    def matrix(self, q: int) -> SparseMatrix:
        M = self._mats.get(q)
        if M is None:
            M = twisted_coboundary(self.K, self.mu, q, self.F)
            self._mats[q] = M
        return M


def _cache(K: SimplicialComplex) -> dict:
    c = K.__dict__.get("_mc_cache")
    if c is None:
        c = K.__dict__["_mc_cache"] = {}
    return c


def cochain_complex(K, F, mu=None) -> _CochainComplex:
    mu = _norm_bundle(mu)
    key = ("cc", F, mu.key() if mu else None)
    cache = _cache(K)
    if key not in cache:
        cache[key] = _CochainComplex(K, F, mu)
    return cache[key]


# ---------------------------------------------------------------------------
# cohomology bases


@dataclass(frozen=True, eq=False)
class CohomologyClass:
    basis: "CohomologyBasis"
    degree: int
    coords: tuple

    def is_zero(self) -> bool:
        return not any(self.coords)

    def representative(self) -> Cochain:
        return self.basis.combination(self.degree, self.coords)

    @property
    def bundle(self):
        return self.basis.bundle

    def __add__(self, other: "CohomologyClass") -> "CohomologyClass":
        F = self.basis.field
        return CohomologyClass(self.basis, self.degree,
                               tuple(F.add(a, b) for a, b in zip(self.coords, other.coords)))

    def scale(self, a) -> "CohomologyClass":
        F = self.basis.field
        return CohomologyClass(self.basis, self.degree,
                               tuple(F.mul(F(a), x) for x in self.coords))

    def __eq__(self, other):
        return (isinstance(other, CohomologyClass) and other.basis is self.basis
                and other.degree == self.degree and other.coords == self.coords)

    def __hash__(self):
        return hash((id(self.basis), self.degree, self.coords))


class CohomologyBasis:
    """Representative cocycles per degree plus the pivot data to reduce any cocycle.

    For each degree the reduction table maps a pivot row (the largest
    simplex index of the vector) to either a coboundary ``D b`` or a basis
    representative.  Together these form a basis of the cocycles with
    distinct pivots, so reducing a cocycle against them terminates at zero.
    """

    def __init__(self, K: SimplicialComplex, F: Field, mu: LineBundle | None = None):
        self.complex, self.field, self.bundle = K, F, _norm_bundle(mu)
        cc = cochain_complex(K, F, self.bundle)
        self._reps: dict[int, list[dict]] = {}
        self._table: dict[int, dict] = {}
        self._pre: dict[int, list] = {}
        for q in range(K.dim + 1):
            if q > 0:
                RB, VB = kernels.reduce_columns(cc.matrix(q - 1).cols, F, track=True)
            else:
                RB, VB = [], []
            if q < K.dim:
                RZ, VZ = kernels.reduce_columns(cc.matrix(q).cols, F, track=True)
                zvecs = [VZ[j] for j, c in enumerate(RZ) if not c]
            else:
                zvecs = [{j: F.one} for j in range(K.n(q))]
            bcols = [(j, c) for j, c in enumerate(RB) if c]
            R2, _ = kernels.reduce_columns([c for _, c in bcols] + zvecs, F, track=False)
            table: dict[int, tuple] = {}
            for (j, c) in bcols:
                table[max(c)] = ("B", c, j)
            reps = []
            for c in R2[len(bcols):]:
                if c:
                    table[max(c)] = ("H", c, len(reps))
                    reps.append(c)
            self._reps[q] = reps
            self._table[q] = table
            self._pre[q] = VB

    # ------------------------------------------------------------------
    @property
    def betti(self) -> tuple[int, ...]:
        return tuple(len(self._reps[q]) for q in range(self.complex.dim + 1))

    def dim(self, q: int) -> int:
        return len(self._reps.get(q, ()))

    def representatives(self, q: int) -> list[Cochain]:
        return [Cochain.from_vector(self.complex, self.field, q, v, self.bundle)
                for v in self._reps.get(q, [])]

    def representative(self, q: int, i: int) -> Cochain:
        return Cochain.from_vector(self.complex, self.field, q, self._reps[q][i], self.bundle)

    def basis_class(self, q: int, i: int) -> CohomologyClass:
        coords = [self.field.zero] * self.dim(q)
        coords[i] = self.field.one
        return CohomologyClass(self, q, tuple(coords))

    def zero_class(self, q: int) -> CohomologyClass:
        return CohomologyClass(self, q, (self.field.zero,) * self.dim(q))

    def combination(self, q: int, coords) -> Cochain:
        F = self.field
        vec: dict = {}
        for a, v in zip(coords, self._reps.get(q, [])):
            if a:
                kernels._py._axpy(F, vec, v, a)
        return Cochain.from_vector(self.complex, F, q, vec, self.bundle)

    def _reduce(self, c: Cochain, want_preimage: bool):
        if c.complex is not self.complex or c.field != self.field:
            raise ValueError("cochain belongs to a different complex or field")
        if _norm_bundle(c.bundle) != self.bundle:
            raise ValueError("cochain has coefficients in a different bundle")
        F = self.field
        q = c.degree
        table = self._table.get(q, {})
        vec = c.vector()
        coords = [F.zero] * self.dim(q)
        pre: dict = {}
        while vec:
            low = max(vec)
            hit = table.get(low)
            if hit is None:
                raise CocycleError(f"{q}-cochain is not a cocycle")
            kind, piv, tag = hit
            a = vec[low]
            kernels._py._axpy(F, vec, piv, F.neg(a))
            if kind == "H":
                coords[tag] = F.add(coords[tag], a)
            elif want_preimage:
                kernels._py._axpy(F, pre, self._pre[q][tag], a)
        return tuple(coords), pre

    def class_of(self, c: Cochain) -> CohomologyClass:
        coords, _ = self._reduce(c, False)
        return CohomologyClass(self, c.degree, coords)

    def decompose(self, c: Cochain):
        """Return ``(class, b)`` with ``c = representative(class) + D b``."""
        coords, pre = self._reduce(c, True)
        b = Cochain.from_vector(self.complex, self.field, c.degree - 1, pre, self.bundle) \
            if c.degree > 0 else None
        return CohomologyClass(self, c.degree, coords), b

    def coboundary_preimage(self, c: Cochain) -> Cochain:
        """Some ``b`` with ``D b = c``; raises if ``c`` is not a coboundary."""
        cls, b = self.decompose(c)
        if not cls.is_zero():
            raise CocycleError("cochain is not a coboundary")
        if b is None:
            return Cochain(self.complex, self.field, -1, {}, self.bundle)
        return b


def cohomology_basis(K: SimplicialComplex, F: Field) -> CohomologyBasis:
    return twisted_cohomology_basis(K, None, F)


def twisted_cohomology_basis(K: SimplicialComplex, mu: LineBundle | None,
                             F: Field | None = None) -> CohomologyBasis:
    mu = _norm_bundle(mu)
    if F is None:
        if mu is None:
            raise ValueError("field required")
        F = mu.field
    key = ("basis", F, mu.key() if mu else None)
    cache = _cache(K)
    if key not in cache:
        cache[key] = CohomologyBasis(K, F, mu)
    return cache[key]


def class_of(c: Cochain, basis: CohomologyBasis | None = None) -> CohomologyClass:
    if basis is None:
        basis = twisted_cohomology_basis(c.complex, c.bundle, c.field)
    return basis.class_of(c)


# ---------------------------------------------------------------------------
# products


def cup(c1: Cochain, c2: Cochain) -> Cochain:
    """Alexander-Whitney product, also for bundle-valued factors.

    ``(c1 u c2)(v0..v_{p+q}) = c1(v0..vp) * T(v0 <- vp) * c2(vp..v_{p+q})`` where
    ``T`` is the transport of ``c2``'s bundle along ``v0 v1 .. vp``; the result
    takes values in the tensor product of the two bundles.
    """
    K, F = c1.complex, c1.field
    if c2.complex is not K or c2.field != F:
        raise ValueError("cup of cochains on different complexes or fields")
    p, q = c1.degree, c2.degree
    out_bundle = tensor_bundles(c1.bundle, c2.bundle)
    if p + q > K.dim:
        return Cochain(K, F, p + q, {}, out_bundle)
    mu = c2.bundle
    idx = K.index[p + q]
    by_first: dict[int, list] = {}
    for t, y in c2.values.items():
        by_first.setdefault(t[0], []).append((t, y))
    vals: dict = {}
    for s, x in c1.values.items():
        for t, y in by_first.get(s[-1], ()):
            st = s + t[1:]
            if st not in idx:
                continue
            a = F.mul(x, y)
            if mu is not None and p:
                a = F.mul(a, mu.transport(s))
            vals[st] = F.add(vals.get(st, F.zero), a)
    return Cochain(K, F, p + q, vals, out_bundle)


def cup_into_bundle(c: Cochain, e: Cochain) -> Cochain:
    """Module product H(K; k) x H(K; E) -> H(K; E)."""
    if c.bundle is not None:
        raise ValueError("first factor must have trivial coefficients")
    return cup(c, e)


def pullback(f: VertexMap, c: Cochain) -> Cochain:
    """``(f^* c)(w0..wq) = c(f(w0)..f(wq))``; zero on degenerate images.

    Non-monotone images are reordered with the permutation sign.
    """
    if c.bundle is not None:
        raise ValueError("pullback of bundle-valued cochains is not supported")
    if f.target is not c.complex:
        raise ValueError("cochain is not on the map's target")
    S, F, q = f.source, c.field, c.degree
    vals = {}
    for w in S.simplices.get(q, ()):
        o = _orient(tuple(f(v) for v in w))
        if o is None:
            continue
        s, sg = o
        x = c.values.get(s)
        if x:
            vals[w] = x if sg > 0 else F.neg(x)
    return Cochain(S, F, q, vals)


def pullback_integer_cocycle(f: VertexMap, z: IntegerCocycle) -> IntegerCocycle:
    vals = {}
    for u, v in f.source.edges():
        a, b = f(u), f(v)
        if a != b:
            vals[(u, v)] = z(a, b)
    return IntegerCocycle(f.source, vals)


def cup_length(K: SimplicialComplex, F: Field) -> int:
    """Longest nonzero product of positive-degree basis classes.

    Depth-first over nondecreasing index sequences (graded commutativity
    makes order irrelevant up to sign), memoised on the reduced partial class.
    """
    basis = cohomology_basis(K, F)
    factors = [(q, i) for q in range(1, K.dim + 1) for i in range(basis.dim(q))]
    reps = [basis.representative(q, i) for q, i in factors]
    memo: dict = {}

    def extend(cls: CohomologyClass, start: int) -> int:
        key = (cls.degree, cls.coords, start)
        if key in memo:
            return memo[key]
        best = 0
        rep = cls.representative()
        for k in range(start, len(factors)):
            if cls.degree + factors[k][0] > K.dim:
                continue
            prod = basis.class_of(cup(rep, reps[k]))
            if not prod.is_zero():
                best = max(best, 1 + extend(prod, k))
        memo[key] = best
        return best

    best = 0
    for k, (q, i) in enumerate(factors):
        best = max(best, 1 + extend(basis.basis_class(q, i), k))
    return best


# ---------------------------------------------------------------------------
# file formats


def _vertex_tuple(K: SimplicialComplex, labels, lineno):
    try:
        return tuple(K.vertex_index(v) for v in labels)
    except ComplexError as e:
        raise ComplexError(f"line {lineno}: {e}") from None


def _lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, line.split()


def parse_cochain(text: str, K: SimplicialComplex, F: Field) -> Cochain:
    q = None
    vals: dict = {}
    for lineno, parts in _lines(text):
        if parts[0] != "coch" or len(parts) < 4:
            raise ComplexError(f"line {lineno}: expected 'coch q v0 .. vq value'")
        d = int(parts[1])
        if q is None:
            q = d
        elif q != d:
            raise ComplexError(f"line {lineno}: mixed degrees in one cochain file")
        vs = parts[2:-1]
        if len(vs) != d + 1:
            raise ComplexError(f"line {lineno}: degree {d} needs {d + 1} vertices")
        o = _orient(_vertex_tuple(K, vs, lineno))
        if o is None:
            raise ComplexError(f"line {lineno}: repeated vertex")
        s, sg = o
        if s not in K.index.get(d, {}):
            raise ComplexError(f"line {lineno}: {vs} is not a simplex")
        x = F.parse_elem(parts[-1])
        vals[s] = F.add(vals.get(s, F.zero), x if sg > 0 else F.neg(x))
    return Cochain(K, F, 0 if q is None else q, vals)


def write_cochain(c: Cochain) -> str:
    K, F = c.complex, c.field
    return "".join(
        f"coch {c.degree} {' '.join(K.label(s))} {F.format_elem(x)}\n"
        for s, x in sorted(c.values.items())
    )


def _parse_edges(text: str, K: SimplicialComplex):
    for lineno, parts in _lines(text):
        if parts[0] != "edge" or len(parts) != 4:
            raise ComplexError(f"line {lineno}: expected 'edge u v value'")
        u, v = _vertex_tuple(K, parts[1:3], lineno)
        if u == v:
            raise ComplexError(f"line {lineno}: degenerate edge")
        if (min(u, v), max(u, v)) not in K.index.get(1, {}):
            raise ComplexError(f"line {lineno}: {parts[1]} {parts[2]} is not an edge")
        yield lineno, u, v, parts[3]


def parse_bundle(text: str, K: SimplicialComplex, F: Field) -> LineBundle:
    vals = {}
    for lineno, u, v, x in _parse_edges(text, K):
        x = F.parse_elem(x)
        if not x:
            raise CocycleError(f"line {lineno}: bundle value must be nonzero")
        vals[(min(u, v), max(u, v))] = x if u < v else F.inv(x)
    return LineBundle(K, F, vals)


def write_bundle(mu: LineBundle) -> str:
    K, F = mu.complex, mu.field
    return "".join(f"edge {' '.join(K.label(e))} {F.format_elem(x)}\n"
                   for e, x in sorted(mu.values.items()))


def parse_integer_cocycle(text: str, K: SimplicialComplex) -> IntegerCocycle:
    vals = {}
    for lineno, u, v, x in _parse_edges(text, K):
        try:
            n = int(x)
        except ValueError:
            raise ComplexError(f"line {lineno}: {x!r} is not an integer") from None
        vals[(min(u, v), max(u, v))] = n if u < v else -n
    return IntegerCocycle(K, vals)


def write_integer_cocycle(z: IntegerCocycle) -> str:
    K = z.complex
    return "".join(f"edge {' '.join(K.label(e))} {x}\n" for e, x in sorted(z.values.items()))
