"""Ordered finite simplicial complexes, their coboundary matrices, and the
two constructions the examples need: staircase products and connected sums.

Complex file format (UTF-8, one directive per line, ``#`` starts a comment)::

    vertexorder v1 v2 ...     # optional, at most once
    simplex v1 v2 ... vk      # a top simplex; faces are added automatically
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Mapping, Sequence

from .algebra.fields import QQ, Field
from .algebra.linalg import SparseMatrix


class ComplexError(ValueError):
    """Malformed complex text or an invalid construction."""


class SimplicialComplex:
    """A finite simplicial complex on a totally ordered vertex set.

    Simplices are stored as ascending tuples of vertex *indices* into
    :attr:`vertices`; ``simplices[q]`` is sorted lexicographically.
    """

    def __init__(self, vertices: Sequence[str], top_simplices: Iterable[Sequence[int]]):
        self.vertices = tuple(vertices)
        if len(set(self.vertices)) != len(self.vertices):
            raise ComplexError("duplicate vertex label")
        nv = len(self.vertices)
        faces: dict[int, set] = {}
        for s in top_simplices:
            s = tuple(s)
            if len(set(s)) != len(s):
                raise ComplexError(f"repeated vertex in simplex {self._fmt(s)}")
            if any(not 0 <= v < nv for v in s):
                raise ComplexError("simplex references unknown vertex")
            s = tuple(sorted(s))
            for k in range(1, len(s) + 1):
                bucket = faces.setdefault(k - 1, set())
                bucket.update(combinations(s, k))
        # every listed vertex is a 0-simplex even if isolated
        faces.setdefault(0, set()).update((v,) for v in range(nv))
        self.dim = max(faces) if nv else -1
        self.simplices: dict[int, list[tuple]] = {
            q: sorted(faces.get(q, ())) for q in range(self.dim + 1)
        }
        self.index: dict[int, dict[tuple, int]] = {
            q: {s: i for i, s in enumerate(ss)} for q, ss in self.simplices.items()
        }
        self._faces: dict[int, list[tuple]] = {}

    # ------------------------------------------------------------------
    @classmethod
    def from_labels(cls, top: Iterable[Sequence[str]], order: Sequence[str] | None = None):
        top = [tuple(t) for t in top]
        if order is None:
            order = sorted({v for t in top for v in t})
        pos = {v: i for i, v in enumerate(order)}
        try:
            return cls(order, [[pos[v] for v in t] for t in top])
        except KeyError as e:
            raise ComplexError(f"vertex {e.args[0]!r} missing from vertex order") from None

    def _fmt(self, s) -> str:
        try:
            return "(" + " ".join(self.vertices[v] for v in s) + ")"
        except (IndexError, AttributeError):
            return str(s)

    def label(self, s: tuple) -> tuple:
        return tuple(self.vertices[v] for v in s)

    def vertex_index(self, label: str) -> int:
        try:
            return self.vertices.index(label)
        except ValueError:
            raise ComplexError(f"unknown vertex {label!r}") from None

    def n(self, q: int) -> int:
        """Number of q-simplices (0 outside the range of dimensions)."""
        return len(self.simplices.get(q, ()))

    @property
    def f_vector(self) -> tuple[int, ...]:
        return tuple(self.n(q) for q in range(self.dim + 1))

    @property
    def euler_characteristic(self) -> int:
        return sum((-1) ** q * n for q, n in enumerate(self.f_vector))

    def maximal_simplices(self) -> list[tuple]:
        covered: set = set()
        out = []
        for q in range(self.dim, -1, -1):
            for s in self.simplices[q]:
                if s not in covered:
                    out.append(s)
                for k in range(1, len(s)):
                    covered.update(combinations(s, k))
        return sorted(out, key=lambda s: (len(s), s))

    def is_pure(self) -> bool:
        return all(len(s) == self.dim + 1 for s in self.maximal_simplices())

    def face_table(self, q: int) -> list[tuple]:
        """For each (q+1)-simplex, the indices of its faces 0..q+1 among the q-simplices."""
        if q not in self._faces:
            idx = self.index.get(q, {})
            self._faces[q] = [tuple(idx[t[:i] + t[i + 1:]] for i in range(len(t)))
                              for t in self.simplices.get(q + 1, ())]
        return self._faces[q]

    def edges(self) -> list[tuple]:
        return self.simplices.get(1, [])

    def triangles(self) -> list[tuple]:
        return self.simplices.get(2, [])

    def __eq__(self, other):
        if not isinstance(other, SimplicialComplex):
            return NotImplemented
        return self.vertices == other.vertices and self.simplices == other.simplices

    def __repr__(self):
        return f"SimplicialComplex(dim={self.dim}, f={self.f_vector})"


@dataclass(frozen=True)
class VertexMap:
    """Vertex map between two complexes, as indices ``source -> target``."""

    source: SimplicialComplex
    target: SimplicialComplex
    mapping: tuple

    def __call__(self, v: int) -> int:
        return self.mapping[v]

    @classmethod
    def identity(cls, K: SimplicialComplex) -> "VertexMap":
        return cls(K, K, tuple(range(len(K.vertices))))


# ---------------------------------------------------------------------------
# text i/o


def parse_complex(text: str) -> SimplicialComplex:
    order = None
    tops = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        head, *rest = line.split()
        if head == "vertexorder":
            if order is not None:
                raise ComplexError(f"line {lineno}: vertexorder given twice")
            if len(set(rest)) != len(rest):
                raise ComplexError(f"line {lineno}: duplicate vertex in vertexorder")
            order = rest
        elif head == "simplex":
            if not rest:
                raise ComplexError(f"line {lineno}: empty simplex")
            if len(set(rest)) != len(rest):
                raise ComplexError(f"line {lineno}: repeated vertex in simplex")
            tops.append(rest)
        else:
            raise ComplexError(f"line {lineno}: unknown directive {head!r}")
    if not tops and not order:
        raise ComplexError("no simplices")
    if order is not None:
        unknown = {v for t in tops for v in t} - set(order)
        if unknown:
            raise ComplexError(f"vertices not in vertexorder: {sorted(unknown)}")
    return SimplicialComplex.from_labels(tops, order)


def write_complex(K: SimplicialComplex) -> str:
    lines = ["vertexorder " + " ".join(K.vertices)]
    for s in K.maximal_simplices():
        lines.append("simplex " + " ".join(K.label(s)))
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# coboundary


def faces_with_signs(s: tuple):
    """Yield ``(i, face_i, (-1)**i)`` for each codimension-one face."""
    for i in range(len(s)):
        yield i, s[:i] + s[i + 1:], -1 if i % 2 else 1


def coboundary_columns(K: SimplicialComplex, q: int) -> list[dict]:
    """Integer columns of delta_q: column per q-simplex, rows (q+1)-simplices."""
    cols: list[dict] = [{} for _ in range(K.n(q))]
    for r, faces in enumerate(K.face_table(q)):
        for i, f in enumerate(faces):
            cols[f][r] = -1 if i % 2 else 1
    return cols


def coboundary_matrix(K: SimplicialComplex, q: int, field: Field = QQ) -> SparseMatrix:
    """delta_q : C^q -> C^{q+1}; entry (tau, sigma) = (-1)^i if sigma is face i of tau."""
    if not 0 <= q < K.dim:
        raise ComplexError(f"coboundary degree {q} outside [0, {K.dim})")
    cols = [{r: field(v) for r, v in c.items()} for c in coboundary_columns(K, q)]
    return SparseMatrix(field, K.n(q + 1), K.n(q), cols,
                        K.simplices[q + 1], K.simplices[q])


# ---------------------------------------------------------------------------
# constructions


def _staircases(p: int, q: int):
    """All monotone lattice paths (0,0) -> (p,q) as sequences of grid points."""
    for rights in combinations(range(p + q), p):
        i = j = 0
        path = [(0, 0)]
        rs = set(rights)
        for step in range(p + q):
            if step in rs:
                i += 1
            else:
                j += 1
            path.append((i, j))
        yield path


def product_complex(K: SimplicialComplex, L: SimplicialComplex, sep: str = ":"):
    """Staircase triangulation of ``K x L`` with its two projections."""
    nL = len(L.vertices)
    labels = [f"{a}{sep}{b}" for a in K.vertices for b in L.vertices]
    tops = []
    for s in K.maximal_simplices():
        for t in L.maximal_simplices():
            for path in _staircases(len(s) - 1, len(t) - 1):
                tops.append([s[i] * nL + t[j] for i, j in path])
    KL = SimplicialComplex(labels, tops)
    n = len(labels)
    p1 = VertexMap(KL, K, tuple(v // nL for v in range(n)))
    p2 = VertexMap(KL, L, tuple(v % nL for v in range(n)))
    return KL, p1, p2


def connected_sum(
    K: SimplicialComplex,
    L: SimplicialComplex,
    sigma_K: Sequence[str] | None = None,
    sigma_L: Sequence[str] | None = None,
    gluing: Mapping[str, str] | None = None,
    suffix: str = "'",
):
    """Remove a top simplex from each complex and glue along the boundaries.

    ``gluing`` maps each vertex of ``sigma_L`` to a vertex of ``sigma_K``
    (default: order-preserving).  Vertices of ``L`` not glued keep their
    labels, with ``suffix`` appended while a label clashes with ``K``.
    Returns ``(complex, vertex_map_from_L)`` where the map sends each vertex
    label of ``L`` to its label in the result.
    """
    if not (K.is_pure() and L.is_pure()):
        raise ComplexError("connected sum needs pure complexes")
    if K.dim != L.dim:
        raise ComplexError(f"dimension mismatch: {K.dim} vs {L.dim}")
    n = K.dim
    topK = {K.label(s) for s in K.simplices[n]}
    topL = {L.label(s) for s in L.simplices[n]}
    sK = tuple(sigma_K) if sigma_K is not None else K.label(K.simplices[n][0])
    sL = tuple(sigma_L) if sigma_L is not None else L.label(L.simplices[n][0])
    sK = tuple(sorted(sK, key=K.vertex_index))
    sL = tuple(sorted(sL, key=L.vertex_index))
    if sK not in topK:
        raise ComplexError(f"{sK} is not a top simplex of the first complex")
    if sL not in topL:
        raise ComplexError(f"{sL} is not a top simplex of the second complex")
    if gluing is None:
        gluing = dict(zip(sL, sK))
    gluing = dict(gluing)
    if set(gluing) != set(sL) or sorted(gluing.values()) != sorted(sK):
        raise ComplexError("gluing must be a bijection from sigma_L onto sigma_K")
    taken = set(K.vertices)
    rename: dict[str, str] = {}
    for v in L.vertices:
        if v in gluing:
            rename[v] = gluing[v]
            continue
        w = v
        while w in taken:
            w += suffix
        taken.add(w)
        rename[v] = w
    order = list(K.vertices) + [rename[v] for v in L.vertices if v not in gluing]
    tops = [K.label(s) for s in K.maximal_simplices() if K.label(s) != sK]
    seen = {frozenset(t) for t in tops}
    for s in L.maximal_simplices():
        ls = L.label(s)
        if ls == sL:
            continue
        img = [rename[v] for v in ls]
        if len(set(img)) != len(img):
            raise ComplexError(f"gluing collapses simplex {ls}")
        key = frozenset(img)
        if key in seen:
            raise ComplexError(f"gluing duplicates simplex {ls}")
        seen.add(key)
        tops.append(img)
    return SimplicialComplex.from_labels(tops, order), rename
