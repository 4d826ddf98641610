"""Sparse matrices over a field and over the local ring, with the exact
rank / kernel / elementary-divisor routines built on :mod:`masseycrit.kernels`.
"""
from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from typing import Sequence

from .. import kernels
from . import poly as P
from .fields import Field
from .local import LocalRingElem


@dataclass
class SparseMatrix:
    """Matrix over a field stored column-wise as ``{row: value}`` dicts."""

    field: Field
    nrows: int
    ncols: int
    cols: list = dc_field(default_factory=list)
    row_labels: Sequence | None = None
    col_labels: Sequence | None = None

    def __post_init__(self):
        if not self.cols:
            self.cols = [{} for _ in range(self.ncols)]
        if len(self.cols) != self.ncols:
            raise ValueError("column count does not match ncols")

    @classmethod
    def from_dense(cls, F: Field, rows) -> "SparseMatrix":
        rows = [list(r) for r in rows]
        nr = len(rows)
        nc = len(rows[0]) if rows else 0
        cols = [{} for _ in range(nc)]
        for i, r in enumerate(rows):
            for j, x in enumerate(r):
                x = F(x)
                if x:
                    cols[j][i] = x
        return cls(F, nr, nc, cols)

    def to_dense(self) -> list[list]:
        out = [[self.field.zero] * self.ncols for _ in range(self.nrows)]
        for j, c in enumerate(self.cols):
            for i, x in c.items():
                out[i][j] = x
        return out

    def __getitem__(self, ij):
        i, j = ij
        return self.cols[j].get(i, self.field.zero)

    def apply(self, x: dict) -> dict:
        """Matrix times a sparse column vector ``{col: value}``."""
        F = self.field
        out: dict = {}
        for j, a in x.items():
            for i, m in self.cols[j].items():
                t = F.add(out.get(i, F.zero), F.mul(a, m))
                if t:
                    out[i] = t
                else:
                    out.pop(i, None)
        return out

    def matmul(self, other: "SparseMatrix") -> "SparseMatrix":
        if self.ncols != other.nrows:
            raise ValueError("shape mismatch")
        return SparseMatrix(
            self.field, self.nrows, other.ncols, [self.apply(c) for c in other.cols]
        )

    def is_zero(self) -> bool:
        return not any(self.cols)

    def nnz(self) -> int:
        return sum(len(c) for c in self.cols)


def matrix_rank_kernel_image(M: SparseMatrix):
    """Return ``(rank, kernel_basis, image_basis)``.

    Kernel vectors are sparse dicts over columns, image vectors sparse dicts
    over rows.
    """
    R, V = kernels.reduce_columns(M.cols, M.field, track=True)
    image = [c for c in R if c]
    kernel = [V[j] for j, c in enumerate(R) if not c]
    return len(image), kernel, image


def rank(M: SparseMatrix) -> int:
    R, _ = kernels.reduce_columns(M.cols, M.field, track=False)
    return sum(1 for c in R if c)


# ---------------------------------------------------------------------------
# Matrices over the local ring


@dataclass
class LocalMatrix:
    """Matrix with :class:`LocalRingElem` entries, stored column-wise."""

    field: Field
    nrows: int
    ncols: int
    cols: list = dc_field(default_factory=list)
    row_labels: Sequence | None = None
    col_labels: Sequence | None = None

    def __post_init__(self):
        if not self.cols:
            self.cols = [{} for _ in range(self.ncols)]
        self._poly_cols = None

    @classmethod
    def from_dense(cls, F: Field, rows) -> "LocalMatrix":
        rows = [list(r) for r in rows]
        nr = len(rows)
        nc = len(rows[0]) if rows else 0
        cols = [{} for _ in range(nc)]
        for i, r in enumerate(rows):
            for j, x in enumerate(r):
                if not isinstance(x, LocalRingElem):
                    x = _as_local(F, x)
                if x:
                    cols[j][i] = x
        return cls(F, nr, nc, cols)

    def __getitem__(self, ij):
        i, j = ij
        return self.cols[j].get(i, LocalRingElem(self.field))

    def apply(self, x: dict) -> dict:
        """Matrix times a sparse vector of :class:`LocalRingElem`."""
        out: dict = {}
        for j, a in x.items():
            for i, m in self.cols[j].items():
                t = out.get(i)
                t = a * m if t is None else t + a * m
                if t:
                    out[i] = t
                else:
                    out.pop(i, None)
        return out

    def at_zero(self) -> SparseMatrix:
        """Specialisation ``s = 0``."""
        cols = []
        for c in self.cols:
            cols.append({i: x.at_zero() for i, x in c.items() if x.at_zero()})
        return SparseMatrix(self.field, self.nrows, self.ncols, cols,
                            self.row_labels, self.col_labels)

    def polynomial_columns(self) -> list[dict]:
        """Columns with each row multiplied by ``(1+s)**e_row`` to clear denominators.

        Row scaling by a unit changes neither kernel, rank, nor elementary
        divisors.  Computed once; the matrix is treated as immutable.
        """
        if self._poly_cols is not None:
            return self._poly_cols
        F = self.field
        row_e = [0] * self.nrows
        for c in self.cols:
            for i, x in c.items():
                if x.den_exp > row_e[i]:
                    row_e[i] = x.den_exp
        out = []
        for c in self.cols:
            d = {}
            for i, x in c.items():
                k = row_e[i] - x.den_exp
                d[i] = P.mul(F, x.numerator, P.one_plus_s_pow(F, k)) if k else x.numerator
            out.append(d)
        self._poly_cols = out
        return out


def _as_local(F: Field, x) -> LocalRingElem:
    if isinstance(x, tuple):
        return LocalRingElem(F, tuple(F(c) for c in x))
    return LocalRingElem.const(F, x)


def rational_function_rank(M: LocalMatrix) -> int:
    """Rank over the rational function field k(s)."""
    return kernels.fraction_free_rank(M.polynomial_columns(), M.field)


def dvr_elementary_divisors(M: LocalMatrix) -> list[int]:
    """Sorted exponents ``e`` of the diagonal form ``diag(s**e, ...)`` over k[s]_(s)."""
    exps, _ = kernels.dvr_reduce(M.polynomial_columns(), M.field, track=False)
    return sorted(exps)


def saturated_kernel_basis(M: LocalMatrix) -> list[dict]:
    """Basis of ``ker M`` as a module over the local ring; each vector is
    nonzero at ``s = 0``.  Vectors are ``{column: LocalRingElem}``."""
    F = M.field
    _, kernel = kernels.dvr_reduce(M.polynomial_columns(), F, track=True)
    return [{j: LocalRingElem(F, p) for j, p in v.items()} for v in kernel]
