"""Exact linear algebra over the rationals.

Matrices are stored column-sparse (one dict per column, zeros absent) because
the maps we compose are mostly structure constants of sparse multiplication
tables; Kronecker squares and cubes of those would be hopeless dense.  The
public surface still talks in whole rows/columns so callers never see the
dicts unless they ask for them.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Iterator, Optional, Sequence

from .errors import DimensionMismatch
from .scalars import Scalar, ZERO, ONE


def _acc(d: dict, i: int, v: Scalar) -> None:
    # in-place d[i] += v, dropping explicit zeros
    nv = d.get(i, ZERO) + v
    if nv:
        d[i] = nv
    else:
        d.pop(i, None)


class Vec:
    """Immutable coordinate vector with exact entries."""

    __slots__ = ("coords",)

    def __init__(self, coords: Iterable) -> None:
        object.__setattr__(self, "coords", tuple(Fraction(c) for c in coords))

    def __setattr__(self, name, value):
        raise AttributeError("Vec is immutable")

    @staticmethod
    def zero(n: int) -> "Vec":
        return Vec([ZERO] * n)

    @staticmethod
    def basis(n: int, i: int) -> "Vec":
        if not 0 <= i < n:
            raise IndexError(f"basis index {i} out of range for dimension {n}")
        return Vec([ONE if j == i else ZERO for j in range(n)])

    def __len__(self) -> int:
        return len(self.coords)

    def __iter__(self) -> Iterator[Scalar]:
        return iter(self.coords)

    def __getitem__(self, i: int) -> Scalar:
        return self.coords[i]

    def __eq__(self, other) -> bool:
        return isinstance(other, Vec) and self.coords == other.coords

    def __hash__(self) -> int:
        return hash(self.coords)

    def __repr__(self) -> str:
        return f"Vec({[str(c) for c in self.coords]})"

    def __add__(self, other: "Vec") -> "Vec":
        if len(self) != len(other):
            raise DimensionMismatch(f"cannot add vectors of length {len(self)} and {len(other)}")
        return Vec(a + b for a, b in zip(self.coords, other.coords))

    def __sub__(self, other: "Vec") -> "Vec":
        if len(self) != len(other):
            raise DimensionMismatch(f"cannot subtract vectors of length {len(self)} and {len(other)}")
        return Vec(a - b for a, b in zip(self.coords, other.coords))

    def __neg__(self) -> "Vec":
        return Vec(-a for a in self.coords)

    def scale(self, c) -> "Vec":
        c = Fraction(c)
        return Vec(c * a for a in self.coords)

    def is_zero(self) -> bool:
        return not any(self.coords)

    def kron(self, other: "Vec") -> "Vec":
        # e_i (x) e_j lands at slot i*len(other) + j
        return Vec(a * b for a in self.coords for b in other.coords)

    def to_dict(self) -> dict:
        return {i: c for i, c in enumerate(self.coords) if c}


class Mat:
    """Linear map between based spaces; column j holds the image of e_j."""

    __slots__ = ("rows", "cols", "_cols")

    def __init__(self, rows: int, cols: int, coldicts: Sequence[dict]) -> None:
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "cols", cols)
        object.__setattr__(self, "_cols", tuple(coldicts))

    def __setattr__(self, name, value):
        raise AttributeError("Mat is immutable")

    # ------------------------------------------------------------ builders

    @staticmethod
    def from_rows(rows: Sequence[Sequence]) -> "Mat":
        nrows = len(rows)
        ncols = len(rows[0]) if nrows else 0
        cols: list[dict] = [{} for _ in range(ncols)]
        for i, row in enumerate(rows):
            if len(row) != ncols:
                raise DimensionMismatch("ragged row lengths")
            for j, c in enumerate(row):
                c = Fraction(c)
                if c:
                    cols[j][i] = c
        return Mat(nrows, ncols, cols)

    @staticmethod
    def from_cols(nrows: int, cols: Sequence[Vec]) -> "Mat":
        for v in cols:
            if len(v) != nrows:
                raise DimensionMismatch("column length does not match row count")
        return Mat(nrows, len(cols), [v.to_dict() for v in cols])

    @staticmethod
    def from_entries(nrows: int, ncols: int, entries: Iterable[tuple]) -> "Mat":
        """Build from (row, col, value) triples; repeated positions accumulate."""
        cols: list[dict] = [{} for _ in range(ncols)]
        for i, j, v in entries:
            _acc(cols[j], i, Fraction(v))
        return Mat(nrows, ncols, cols)

    @staticmethod
    def identity(n: int) -> "Mat":
        return Mat(n, n, [{i: ONE} for i in range(n)])

    @staticmethod
    def zeros(nrows: int, ncols: int) -> "Mat":
        return Mat(nrows, ncols, [{} for _ in range(ncols)])

    # ----------------------------------------------------------- accessors

    def entry(self, i: int, j: int) -> Scalar:
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError(f"entry ({i},{j}) out of range for {self.rows}x{self.cols}")
        return self._cols[j].get(i, ZERO)

    def column(self, j: int) -> Vec:
        d = self._cols[j]
        return Vec(d.get(i, ZERO) for i in range(self.rows))

    def col_dict(self, j: int) -> dict:
        """Sparse view of column j; callers must not mutate it."""
        return self._cols[j]

    def to_rows(self) -> tuple:
        return tuple(
            tuple(self._cols[j].get(i, ZERO) for j in range(self.cols))
            for i in range(self.rows)
        )

    def row_dicts(self) -> list[dict]:
        rows: list[dict] = [{} for _ in range(self.rows)]
        for j, col in enumerate(self._cols):
            for i, v in col.items():
                rows[i][j] = v
        return rows

    def nnz(self) -> int:
        return sum(len(col) for col in self._cols)

    def is_zero(self) -> bool:
        return all(not col for col in self._cols)

    # ---------------------------------------------------------- operations

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Mat)
            and self.rows == other.rows
            and self.cols == other.cols
            and self._cols == other._cols
        )

    def __hash__(self) -> int:
        return hash(
            (self.rows, self.cols, tuple(tuple(sorted(c.items())) for c in self._cols))
        )

    def __repr__(self) -> str:
        if self.rows * self.cols <= 36:
            body = "; ".join(
                " ".join(str(self.entry(i, j)) for j in range(self.cols))
                for i in range(self.rows)
            )
            return f"Mat({self.rows}x{self.cols}: {body})"
        return f"Mat({self.rows}x{self.cols}, nnz={self.nnz()})"

    def __add__(self, other: "Mat") -> "Mat":
        if self.rows != other.rows or self.cols != other.cols:
            raise DimensionMismatch("matrix addition shape mismatch")
        out = []
        for a, b in zip(self._cols, other._cols):
            d = dict(a)
            for i, v in b.items():
                _acc(d, i, v)
            out.append(d)
        return Mat(self.rows, self.cols, out)

    def __sub__(self, other: "Mat") -> "Mat":
        return self + (-other)

    def __neg__(self) -> "Mat":
        return Mat(self.rows, self.cols, [{i: -v for i, v in c.items()} for c in self._cols])

    def scale(self, c) -> "Mat":
        c = Fraction(c)
        if not c:
            return Mat.zeros(self.rows, self.cols)
        return Mat(self.rows, self.cols, [{i: c * v for i, v in col.items()} for col in self._cols])

    def __matmul__(self, other: "Mat") -> "Mat":
        if self.cols != other.rows:
            raise DimensionMismatch(
                f"cannot compose {self.rows}x{self.cols} with {other.rows}x{other.cols}"
            )
        out = []
        for j in range(other.cols):
            acc: dict = {}
            for k, bv in other._cols[j].items():
                for i, av in self._cols[k].items():
                    _acc(acc, i, av * bv)
            out.append(acc)
        return Mat(self.rows, other.cols, out)

    def apply(self, v: Vec) -> Vec:
        if len(v) != self.cols:
            raise DimensionMismatch(f"cannot apply {self.rows}x{self.cols} to length-{len(v)} vector")
        acc: dict = {}
        for j, c in enumerate(v.coords):
            if c:
                for i, av in self._cols[j].items():
                    _acc(acc, i, av * c)
        return Vec(acc.get(i, ZERO) for i in range(self.rows))

    def apply_dict(self, d: dict) -> dict:
        """Apply to a sparse vector without densifying."""
        acc: dict = {}
        for j, c in d.items():
            for i, av in self._cols[j].items():
                _acc(acc, i, av * c)
        return acc

    def kron(self, other: "Mat") -> "Mat":
        out = []
        for ja in range(self.cols):
            ca = self._cols[ja]
            for jb in range(other.cols):
                cb = other._cols[jb]
                out.append(
                    {
                        ia * other.rows + ib: va * vb
                        for ia, va in ca.items()
                        for ib, vb in cb.items()
                    }
                )
        return Mat(self.rows * other.rows, self.cols * other.cols, out)

    def power(self, k: int) -> "Mat":
        if self.rows != self.cols:
            raise DimensionMismatch("power of a non-square matrix")
        if k < 0:
            raise ValueError("negative power; invert explicitly instead")
        out = Mat.identity(self.rows)
        for _ in range(k):
            out = out @ self
        return out

    def transpose(self) -> "Mat":
        out: list[dict] = [{} for _ in range(self.rows)]
        for j, col in enumerate(self._cols):
            for i, v in col.items():
                out[i][j] = v
        return Mat(self.cols, self.rows, out)

    def det(self) -> Scalar:
        if self.rows != self.cols:
            raise DimensionMismatch("determinant of a non-square matrix")
        n = self.rows
        rows = [list(r) for r in self.to_rows()]
        d = ONE
        for c in range(n):
            piv = next((r for r in range(c, n) if rows[r][c]), None)
            if piv is None:
                return ZERO
            if piv != c:
                rows[c], rows[piv] = rows[piv], rows[c]
                d = -d
            d *= rows[c][c]
            inv = ONE / rows[c][c]
            for r in range(c + 1, n):
                f = rows[r][c] * inv
                if f:
                    for cc in range(c, n):
                        rows[r][cc] -= f * rows[c][cc]
        return d

    def is_invertible(self) -> bool:
        return self.rows == self.cols and self.det() != 0

    def inverse(self) -> "Mat":
        if self.rows != self.cols:
            raise DimensionMismatch("inverse of a non-square matrix")
        n = self.rows
        cols = []
        for i in range(n):
            sol = solve_affine(self, Vec.basis(n, i))
            if sol is None:
                raise ZeroDivisionError("matrix is singular")
            cols.append(sol.particular)
        return Mat.from_cols(n, cols)


def compose(f: Mat, g: Mat) -> Mat:
    """f after g."""
    return f @ g


def kron(f: Mat, g: Mat) -> Mat:
    """Kronecker product acting on e_i (x) e_j = e_{i*n+j}, row-major."""
    return f.kron(g)


def swap_map(m: int, n: int) -> Mat:
    """The flip Q^m (x) Q^n -> Q^n (x) Q^m sending e_i (x) e_j to e_j (x) e_i."""
    return Mat.from_entries(
        m * n, m * n, ((j * m + i, i * n + j, ONE) for i in range(m) for j in range(n))
    )


# ---------------------------------------------------------------- solving


class SolutionSpace:
    """Affine solution set: particular + span(nullspace)."""

    __slots__ = ("particular", "nullspace")

    def __init__(self, particular: Vec, nullspace: Sequence[Vec]) -> None:
        object.__setattr__(self, "particular", particular)
        object.__setattr__(self, "nullspace", tuple(nullspace))

    def __setattr__(self, name, value):
        raise AttributeError("SolutionSpace is immutable")

    @property
    def nullspace_dim(self) -> int:
        return len(self.nullspace)

    def __repr__(self) -> str:
        return f"SolutionSpace(particular={self.particular!r}, nullspace_dim={self.nullspace_dim})"


class _Eliminator:
    """Incremental reduced row elimination over sparse rows.

    Feed rows one at a time; pivot rows are kept mutually reduced with unit
    leading coefficient at their minimal column, so the final state is the
    reduced echelon form of whatever was fed in, independent of order.
    Inconsistency is detected the moment a row collapses to 0 = nonzero.
    """

    __slots__ = ("pivots", "inconsistent")

    def __init__(self) -> None:
        self.pivots: dict[int, tuple[dict, Fraction]] = {}
        self.inconsistent = False

    def add_row(self, coefs: dict, rhs) -> bool:
        """Reduce and absorb one equation; returns False on 0 = nonzero."""
        if self.inconsistent:
            return False
        row = dict(coefs)
        r = Fraction(rhs)
        # pivot rows have zero entries at every other pivot column, so one
        # pass over the incoming row's pivot columns fully reduces it
        for c in [c for c in row if c in self.pivots]:
            coef = row.get(c)
            if not coef:
                continue
            prow, prhs = self.pivots[c]
            for cc, vv in prow.items():
                _acc(row, cc, -coef * vv)
            r -= coef * prhs
        if not row:
            if r:
                self.inconsistent = True
                return False
            return True
        c0 = min(row)
        inv = ONE / row[c0]
        if inv != 1:
            row = {cc: vv * inv for cc, vv in row.items()}
            r *= inv
        for pc, (prow, prhs) in self.pivots.items():
            coef = prow.get(c0)
            if coef:
                for cc, vv in row.items():
                    _acc(prow, cc, -coef * vv)
                self.pivots[pc] = (prow, prhs - coef * r)
        self.pivots[c0] = (row, r)
        return True

    def rank(self) -> int:
        return len(self.pivots)

    def solution(self, ncols: int) -> Optional[SolutionSpace]:
        if self.inconsistent:
            return None
        pivots = self.pivots
        part = [ZERO] * ncols
        for c, (_, prhs) in pivots.items():
            part[c] = prhs
        basis = []
        for f in range(ncols):
            if f in pivots:
                continue
            v = [ZERO] * ncols
            v[f] = ONE
            for c, (prow, _) in pivots.items():
                coef = prow.get(f)
                if coef:
                    v[c] = -coef
            basis.append(Vec(v))
        return SolutionSpace(Vec(part), basis)


def solve_rows(rows: Iterable[tuple[dict, object]], ncols: int) -> Optional[SolutionSpace]:
    """Solve a sparse linear system given as (coefficient dict, rhs) pairs.

    Returns the canonical reduced-echelon solution (free variables zero in
    the particular point, one nullspace generator per free column) or None
    when the system is inconsistent.
    """
    elim = _Eliminator()
    for coefs, rhs in rows:
        if not elim.add_row(coefs, rhs):
            return None
    return elim.solution(ncols)


def solve_affine(A: Mat, b: Vec) -> Optional[SolutionSpace]:
    """Solve A x = b exactly; None means no solution."""
    if len(b) != A.rows:
        raise DimensionMismatch(f"rhs length {len(b)} does not match {A.rows} equations")
    return solve_rows(zip(A.row_dicts(), b.coords), A.cols)
