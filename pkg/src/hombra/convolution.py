"""The convolution algebra Hom(C, A) and relative-inverse search.

Given a coalgebra side C and an algebra side A, maps f, g: C -> A multiply
by f * g = m o (f (x) g) o Delta.  A relative inverse of f is a g with

    alpha^k o (f * g) = alpha^k o (g * f) = eta o eps

for some exponent k; the solver treats the entries of g as unknowns and
scans k upward, so the reported exponent is minimal.  Solutions come from
the canonical echelon form: free entries are zero in the particular
inverse, and the nullspace generators say how far the inverse is from
unique.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DimensionMismatch
from .linalg import Mat, SolutionSpace, Vec, solve_rows
from .scalars import Scalar, ZERO
from .structures import (
    AxiomCheck,
    AxiomReport,
    HomAlgebra,
    HomBialgebra,
    HomCoalgebra,
    matrix_identity_check,
)


@dataclass(frozen=True)
class ConvContext:
    """Coalgebra source and algebra target of a convolution algebra."""

    coalg: HomCoalgebra
    alg: HomAlgebra

    @staticmethod
    def from_bialgebra(b: HomBialgebra) -> "ConvContext":
        return ConvContext(b.coalgebra, b.algebra)

    @property
    def n_c(self) -> int:
        return self.coalg.dim

    @property
    def n_a(self) -> int:
        return self.alg.dim

    def require_map(self, f: Mat) -> None:
        if (f.rows, f.cols) != (self.n_a, self.n_c):
            raise DimensionMismatch(
                f"expected a {self.n_a}x{self.n_c} map, got {f.rows}x{f.cols}"
            )

    def alpha_multiplicative(self) -> bool:
        a = self.alg
        for i in range(a.dim):
            for j in range(a.dim):
                lhs = a.alpha.apply_dict(a.mul_col(i, j))
                rhs = a.product(a.alpha.col_dict(i), a.alpha.col_dict(j))
                if lhs != rhs:
                    return False
        return True


def convolve(ctx: ConvContext, f: Mat, g: Mat) -> Mat:
    """m o (f (x) g) o Delta, column by column."""
    ctx.require_map(f)
    ctx.require_map(g)
    n_c, n_a = ctx.n_c, ctx.n_a
    cols = []
    for s in range(n_c):
        acc: dict = {}
        for ab, c in ctx.coalg.comul_col(s).items():
            a, b = divmod(ab, n_c)
            prod = ctx.alg.product(f.col_dict(a), g.col_dict(b))
            for r, v in prod.items():
                nv = acc.get(r, ZERO) + c * v
                if nv:
                    acc[r] = nv
                else:
                    del acc[r]
        cols.append(acc)
    return Mat(n_a, n_c, cols)


def gamma(ctx: ConvContext, f: Mat) -> Mat:
    """The convolution twist alpha o f o beta."""
    ctx.require_map(f)
    return ctx.alg.alpha @ f @ ctx.coalg.beta


def conv_unit(ctx: ConvContext) -> Mat:
    """eta o eps, the unit of the convolution algebra."""
    u = ctx.alg.unit_dict()
    cols = []
    for i in range(ctx.n_c):
        e = ctx.coalg.eps(i)
        cols.append({r: e * v for r, v in u.items()} if e else {})
    return Mat(ctx.n_a, ctx.n_c, cols)


def check_convolution_laws(ctx: ConvContext, f: Mat, g: Mat, n: int) -> AxiomReport:
    """The two convolution laws: alpha^n distributes over * (needs a
    multiplicative alpha, noted when absent), and eta o eps absorbs into
    the twist on either side."""
    ctx.require_map(f)
    ctx.require_map(g)
    an = ctx.alg.alpha.power(n)
    law1 = matrix_identity_check(
        "twist-power-distributes",
        an @ convolve(ctx, f, g),
        convolve(ctx, an @ f, an @ g),
    )
    law1 = AxiomCheck(
        law1.name,
        law1.passed,
        law1.witness,
        note=None
        if ctx.alpha_multiplicative()
        else "hypothesis not met: alpha is not multiplicative",
        detail={"n": n},
    )
    u = conv_unit(ctx)
    gf = gamma(ctx, f)
    law2_left = matrix_identity_check("unit-absorbs-left", convolve(ctx, u, f), gf)
    law2_right = matrix_identity_check("unit-absorbs-right", convolve(ctx, f, u), gf)
    return AxiomReport((law1, law2_left, law2_right))


# -------------------------------------------------------------- the solver


@dataclass(frozen=True)
class RelativeInverseResult:
    """A canonical relative inverse: the exponent it needs, and the
    nullspace of the solution set at that exponent."""

    inverse: Mat
    exponent: int
    nullspace_dim: int
    nullspace: tuple[Mat, ...]


class _System:
    """The linear system in the entries of g at a given twist exponent.

    Unknown (q, b) - the coefficient of basis vector q in g(e_b) - gets
    variable index q * n_c + b.  Equations are grouped in blocks, one per
    (order, source basis element); raising the exponent applies alpha to
    each block in place, so the scan over k never re-assembles.
    """

    def __init__(self, ctx: ConvContext, f: Mat) -> None:
        ctx.require_map(f)
        self.ctx = ctx
        self.nvars = ctx.n_a * ctx.n_c
        n_c = ctx.n_c
        alg = ctx.alg
        unit = alg.unit_dict()
        blocks = []
        for s in range(n_c):
            eq_fg: dict[int, dict[int, Scalar]] = {}
            eq_gf: dict[int, dict[int, Scalar]] = {}
            for ab, c in ctx.coalg.comul_col(s).items():
                a, b = divmod(ab, n_c)
                # f * g: the unknown is the column of g at b
                for p, fv in f.col_dict(a).items():
                    cf = c * fv
                    for q in range(alg.dim):
                        col = alg.mul_col(p, q)
                        if not col:
                            continue
                        var = q * n_c + b
                        for r, mv in col.items():
                            row = eq_fg.setdefault(r, {})
                            nv = row.get(var, ZERO) + cf * mv
                            if nv:
                                row[var] = nv
                            else:
                                del row[var]
                # g * f: the unknown is the column of g at a
                for p, fv in f.col_dict(b).items():
                    cf = c * fv
                    for q in range(alg.dim):
                        col = alg.mul_col(q, p)
                        if not col:
                            continue
                        var = q * n_c + a
                        for r, mv in col.items():
                            row = eq_gf.setdefault(r, {})
                            nv = row.get(var, ZERO) + cf * mv
                            if nv:
                                row[var] = nv
                            else:
                                del row[var]
            e = ctx.coalg.eps(s)
            rhs = {r: e * v for r, v in unit.items()} if e else {}
            blocks.append((eq_fg, rhs))
            blocks.append((eq_gf, rhs))
        self.blocks = blocks

    def twist_once(self) -> None:
        alpha = self.ctx.alg.alpha
        for idx, (eqrows, rhs) in enumerate(self.blocks):
            new: dict[int, dict[int, Scalar]] = {}
            for r, row in eqrows.items():
                for r2, av in alpha.col_dict(r).items():
                    dst = new.setdefault(r2, {})
                    for var, coef in row.items():
                        nv = dst.get(var, ZERO) + av * coef
                        if nv:
                            dst[var] = nv
                        else:
                            del dst[var]
            self.blocks[idx] = ({r: row for r, row in new.items() if row}, rhs)

    def solve(self) -> SolutionSpace | None:
        rows: list[tuple[dict, Scalar]] = []
        for eqrows, rhs in self.blocks:
            for r in set(eqrows) | set(rhs):
                coefs = eqrows.get(r, {})
                target = rhs.get(r, ZERO)
                if not coefs:
                    if target:
                        return None  # 0 = nonzero, no need to eliminate
                    continue
                rows.append((coefs, target))
        return solve_rows(rows, self.nvars)


def _reshape(ctx: ConvContext, x: Vec) -> Mat:
    n_c = ctx.n_c
    cols: list[dict] = [{} for _ in range(n_c)]
    for v, val in enumerate(x.coords):
        if val:
            q, b = divmod(v, n_c)
            cols[b][q] = val
    return Mat(ctx.n_a, n_c, cols)


def solve_at_exponent(ctx: ConvContext, f: Mat, k: int) -> SolutionSpace | None:
    """Raw solution space of the two-sided inverse system at a fixed k."""
    system = _System(ctx, f)
    for _ in range(k):
        system.twist_once()
    return system.solve()


def solve_relative_inverse(
    ctx: ConvContext, f: Mat, k_max: int
) -> RelativeInverseResult | None:
    """Smallest k <= k_max admitting a relative inverse of f, or None."""
    if k_max < 0:
        raise ValueError("k_max must be non-negative")
    system = _System(ctx, f)
    for k in range(k_max + 1):
        if k > 0:
            system.twist_once()
        sol = system.solve()
        if sol is not None:
            return RelativeInverseResult(
                inverse=_reshape(ctx, sol.particular),
                exponent=k,
                nullspace_dim=sol.nullspace_dim,
                nullspace=tuple(_reshape(ctx, v) for v in sol.nullspace),
            )
    return None


def pointwise_inverse_exponent(
    ctx: ConvContext, f: Mat, g: Mat, x: Vec, k_max: int
) -> int | None:
    """Smallest k with alpha^k((f*g)(x)) = alpha^k((g*f)(x)) = eps(x) 1."""
    if len(x) != ctx.n_c:
        raise DimensionMismatch("element must live in the coalgebra side")
    u1 = convolve(ctx, f, g).apply(x)
    u2 = convolve(ctx, g, f).apply(x)
    target = ctx.alg.unit.scale(ctx.coalg.eps_dict(x.to_dict()))
    for k in range(k_max + 1):
        if u1 == target and u2 == target:
            return k
        u1 = ctx.alg.alpha.apply(u1)
        u2 = ctx.alg.alpha.apply(u2)
    return None
