"""Structure-constant bundles and exhaustive axiom checkers.

A structure is a handful of exact matrices: multiplication n^2 -> n,
comultiplication n -> n^2 (row-major tensor flattening throughout), unit,
counit, and the twist maps.  Axioms are equalities of composites; we check
them column by column, i.e. basis tuple by basis tuple, which is the same
identity but never materializes a Kronecker cube.  The first failing tuple
in lexicographic order is reported as the witness.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from typing import Callable, Iterator, Optional, Sequence

from .errors import DimensionMismatch
from .linalg import Mat, Vec
from .scalars import Scalar, ZERO, ONE

Admit = Optional[Callable[[tuple], bool]]


def default_basis(n: int) -> tuple[str, ...]:
    return tuple(f"e{i + 1}" for i in range(n))


# ------------------------------------------------------------------ types


@dataclass(frozen=True)
class HomAlgebra:
    """(A, m, 1, alpha) with m as an n^2 -> n matrix, column i*n+j = e_i e_j."""

    dim: int
    mul: Mat
    unit: Vec
    alpha: Mat
    basis: tuple[str, ...] = ()

    def __post_init__(self):
        n = self.dim
        if n < 1:
            raise DimensionMismatch("dimension must be at least 1")
        if (self.mul.rows, self.mul.cols) != (n, n * n):
            raise DimensionMismatch(f"mul must be {n}x{n * n}")
        if len(self.unit) != n:
            raise DimensionMismatch("unit vector has wrong length")
        if (self.alpha.rows, self.alpha.cols) != (n, n):
            raise DimensionMismatch("alpha must be square of the right size")
        if not self.basis:
            object.__setattr__(self, "basis", default_basis(n))
        elif len(self.basis) != n:
            raise DimensionMismatch("basis name count does not match dimension")

    def mul_col(self, i: int, j: int) -> dict:
        return self.mul.col_dict(i * self.dim + j)

    def product(self, u: dict, w: dict) -> dict:
        """Bilinear extension of the multiplication table to sparse vectors."""
        out: dict = {}
        for i, a in u.items():
            for j, b in w.items():
                c = a * b
                for k, v in self.mul_col(i, j).items():
                    nv = out.get(k, ZERO) + c * v
                    if nv:
                        out[k] = nv
                    else:
                        del out[k]
        return out

    def unit_dict(self) -> dict:
        return self.unit.to_dict()


@dataclass(frozen=True)
class HomCoalgebra:
    """(C, comul, counit, beta); comul column i holds Delta(e_i), flattened."""

    dim: int
    comul: Mat
    counit: Mat
    beta: Mat
    basis: tuple[str, ...] = ()

    def __post_init__(self):
        n = self.dim
        if n < 1:
            raise DimensionMismatch("dimension must be at least 1")
        if (self.comul.rows, self.comul.cols) != (n * n, n):
            raise DimensionMismatch(f"comul must be {n * n}x{n}")
        if (self.counit.rows, self.counit.cols) != (1, n):
            raise DimensionMismatch("counit must be a single row")
        if (self.beta.rows, self.beta.cols) != (n, n):
            raise DimensionMismatch("beta must be square of the right size")
        if not self.basis:
            object.__setattr__(self, "basis", default_basis(n))
        elif len(self.basis) != n:
            raise DimensionMismatch("basis name count does not match dimension")

    def comul_col(self, i: int) -> dict:
        return self.comul.col_dict(i)

    def comul_dict(self, u: dict) -> dict:
        return self.comul.apply_dict(u)

    def eps(self, i: int) -> Scalar:
        return self.counit.entry(0, i)

    def eps_dict(self, u: dict) -> Scalar:
        return sum((self.eps(i) * c for i, c in u.items()), ZERO)


@dataclass(frozen=True)
class HomBialgebra:
    dim: int
    mul: Mat
    unit: Vec
    alpha: Mat
    comul: Mat
    counit: Mat
    beta: Mat
    basis: tuple[str, ...] = ()

    def __post_init__(self):
        alg = HomAlgebra(self.dim, self.mul, self.unit, self.alpha, self.basis)
        HomCoalgebra(self.dim, self.comul, self.counit, self.beta, self.basis)
        if not self.basis:
            object.__setattr__(self, "basis", alg.basis)

    @property
    def algebra(self) -> HomAlgebra:
        return HomAlgebra(self.dim, self.mul, self.unit, self.alpha, self.basis)

    @property
    def coalgebra(self) -> HomCoalgebra:
        return HomCoalgebra(self.dim, self.comul, self.counit, self.beta, self.basis)

    # sparse conveniences shared with the convolution and antipode modules
    def mul_col(self, i: int, j: int) -> dict:
        return self.mul.col_dict(i * self.dim + j)

    def product(self, u: dict, w: dict) -> dict:
        return self.algebra.product(u, w)

    def unit_dict(self) -> dict:
        return self.unit.to_dict()

    def comul_col(self, i: int) -> dict:
        return self.comul.col_dict(i)

    def eps(self, i: int) -> Scalar:
        return self.counit.entry(0, i)

    def eps_dict(self, u: dict) -> Scalar:
        return sum((self.eps(i) * c for i, c in u.items()), ZERO)


@dataclass(frozen=True)
class HomHopfCandidate:
    bialgebra: HomBialgebra
    antipode: Mat

    def __post_init__(self):
        n = self.bialgebra.dim
        if (self.antipode.rows, self.antipode.cols) != (n, n):
            raise DimensionMismatch("antipode must be square of the right size")


@dataclass(frozen=True)
class Witness:
    at: tuple[int, ...]
    lhs: Vec
    rhs: Vec


@dataclass(frozen=True)
class AxiomCheck:
    name: str
    passed: bool
    witness: Optional[Witness] = None
    note: Optional[str] = None
    detail: Optional[dict] = None


@dataclass(frozen=True)
class AxiomReport:
    entries: tuple[AxiomCheck, ...]

    def passed(self) -> bool:
        return all(e.passed for e in self.entries)

    def entry(self, name: str) -> AxiomCheck:
        for e in self.entries:
            if e.name == name:
                return e
        raise KeyError(name)

    def failures(self) -> tuple[AxiomCheck, ...]:
        return tuple(e for e in self.entries if not e.passed)

    def __iter__(self) -> Iterator[AxiomCheck]:
        return iter(self.entries)

    def __len__(self) -> int:
        return len(self.entries)

    def with_note(self, note: str) -> "AxiomReport":
        return AxiomReport(tuple(replace(e, note=note) for e in self.entries))


@dataclass(frozen=True)
class FlagSet:
    alpha_multiplicative: bool
    beta_comultiplicative: bool
    alpha_invertible: bool
    beta_invertible: bool
    commutative: bool
    cocommutative: bool

    def as_dict(self) -> dict:
        return {
            "alpha_multiplicative": self.alpha_multiplicative,
            "beta_comultiplicative": self.beta_comultiplicative,
            "alpha_invertible": self.alpha_invertible,
            "beta_invertible": self.beta_invertible,
            "commutative": self.commutative,
            "cocommutative": self.cocommutative,
        }


# ------------------------------------------------------------- evaluation


def _vec(d: dict, n: int) -> Vec:
    return Vec(d.get(i, ZERO) for i in range(n))


def _scalar_vec(c: Scalar) -> Vec:
    return Vec([c])


def _dicts_equal(a: dict, b: dict) -> bool:
    return a == b


def _tensor2(n: int, u: dict, w: dict) -> dict:
    return {
        i * n + j: a * b for i, a in u.items() for j, b in w.items() if a * b
    }


def _admit(admit: Admit, t: tuple) -> bool:
    return admit is None or admit(t)


def _check_hom_associativity(a: HomAlgebra, admit: Admit) -> AxiomCheck:
    n = a.dim
    for i in range(n):
        for j in range(n):
            for k in range(n):
                if not _admit(admit, (i, j, k)):
                    continue
                lhs = a.product(a.mul_col(i, j), a.alpha.col_dict(k))
                rhs = a.product(a.alpha.col_dict(i), a.mul_col(j, k))
                if not _dicts_equal(lhs, rhs):
                    return AxiomCheck(
                        "hom-associativity",
                        False,
                        Witness((i, j, k), _vec(lhs, n), _vec(rhs, n)),
                    )
    return AxiomCheck("hom-associativity", True)


def _check_unitality(a: HomAlgebra, left: bool, admit: Admit) -> AxiomCheck:
    n = a.dim
    name = "left-unitality" if left else "right-unitality"
    u = a.unit_dict()
    for i in range(n):
        if not _admit(admit, (i,)):
            continue
        e = {i: ONE}
        lhs = a.product(u, e) if left else a.product(e, u)
        rhs = a.alpha.col_dict(i)
        if not _dicts_equal(lhs, rhs):
            return AxiomCheck(name, False, Witness((i,), _vec(lhs, n), _vec(rhs, n)))
    return AxiomCheck(name, True)


def _check_twist_fixes_unit(a: HomAlgebra) -> AxiomCheck:
    n = a.dim
    lhs = a.alpha.apply_dict(a.unit_dict())
    rhs = a.unit_dict()
    if not _dicts_equal(lhs, rhs):
        return AxiomCheck(
            "twist-fixes-unit", False, Witness((), _vec(lhs, n), _vec(rhs, n))
        )
    return AxiomCheck("twist-fixes-unit", True)


def _check_hom_coassociativity(c: HomCoalgebra, admit: Admit) -> AxiomCheck:
    n = c.dim
    n2 = n * n
    for i in range(n):
        if not _admit(admit, (i,)):
            continue
        lhs: dict = {}
        rhs: dict = {}
        for ab, coef in c.comul_col(i).items():
            a, b = divmod(ab, n)
            for pq, x in c.comul_col(a).items():
                for r, y in c.beta.col_dict(b).items():
                    key = pq * n + r
                    nv = lhs.get(key, ZERO) + coef * x * y
                    if nv:
                        lhs[key] = nv
                    else:
                        del lhs[key]
            for p, x in c.beta.col_dict(a).items():
                for qr, y in c.comul_col(b).items():
                    key = p * n2 + qr
                    nv = rhs.get(key, ZERO) + coef * x * y
                    if nv:
                        rhs[key] = nv
                    else:
                        del rhs[key]
        if not _dicts_equal(lhs, rhs):
            return AxiomCheck(
                "hom-coassociativity",
                False,
                Witness((i,), _vec(lhs, n**3), _vec(rhs, n**3)),
            )
    return AxiomCheck("hom-coassociativity", True)


def _check_counitality(c: HomCoalgebra, left: bool, admit: Admit) -> AxiomCheck:
    n = c.dim
    name = "left-counitality" if left else "right-counitality"
    for i in range(n):
        if not _admit(admit, (i,)):
            continue
        lhs: dict = {}
        for ab, coef in c.comul_col(i).items():
            a, b = divmod(ab, n)
            scal, kept = (c.eps(a), b) if left else (c.eps(b), a)
            if scal:
                nv = lhs.get(kept, ZERO) + coef * scal
                if nv:
                    lhs[kept] = nv
                else:
                    del lhs[kept]
        rhs = c.beta.col_dict(i)
        if not _dicts_equal(lhs, rhs):
            return AxiomCheck(name, False, Witness((i,), _vec(lhs, n), _vec(rhs, n)))
    return AxiomCheck(name, True)


def _check_counit_absorbs_twist(c: HomCoalgebra, admit: Admit) -> AxiomCheck:
    for i in range(c.dim):
        if not _admit(admit, (i,)):
            continue
        lhs = c.eps_dict(c.beta.col_dict(i))
        rhs = c.eps(i)
        if lhs != rhs:
            return AxiomCheck(
                "counit-absorbs-twist",
                False,
                Witness((i,), _scalar_vec(lhs), _scalar_vec(rhs)),
            )
    return AxiomCheck("counit-absorbs-twist", True)


def _check_comul_multiplicative(b: HomBialgebra, admit: Admit) -> AxiomCheck:
    n = b.dim
    for i in range(n):
        for j in range(n):
            if not _admit(admit, (i, j)):
                continue
            lhs = b.comul.apply_dict(b.mul_col(i, j))
            rhs: dict = {}
            for ab, x in b.comul_col(i).items():
                a1, a2 = divmod(ab, n)
                for cd, y in b.comul_col(j).items():
                    c1, c2 = divmod(cd, n)
                    coef = x * y
                    left = b.mul_col(a1, c1)
                    right = b.mul_col(a2, c2)
                    for p, vp in left.items():
                        for q, vq in right.items():
                            key = p * n + q
                            nv = rhs.get(key, ZERO) + coef * vp * vq
                            if nv:
                                rhs[key] = nv
                            else:
                                del rhs[key]
            if not _dicts_equal(lhs, rhs):
                return AxiomCheck(
                    "comul-multiplicative",
                    False,
                    Witness((i, j), _vec(lhs, n * n), _vec(rhs, n * n)),
                )
    return AxiomCheck("comul-multiplicative", True)


def _check_comul_preserves_unit(b: HomBialgebra) -> AxiomCheck:
    n = b.dim
    u = b.unit_dict()
    lhs = b.comul.apply_dict(u)
    rhs = _tensor2(n, u, u)
    if not _dicts_equal(lhs, rhs):
        return AxiomCheck(
            "comul-preserves-unit",
            False,
            Witness((), _vec(lhs, n * n), _vec(rhs, n * n)),
        )
    return AxiomCheck("comul-preserves-unit", True)


def _check_counit_multiplicative(b: HomBialgebra, admit: Admit) -> AxiomCheck:
    n = b.dim
    for i in range(n):
        for j in range(n):
            if not _admit(admit, (i, j)):
                continue
            lhs = b.eps_dict(b.mul_col(i, j))
            rhs = b.eps(i) * b.eps(j)
            if lhs != rhs:
                return AxiomCheck(
                    "counit-multiplicative",
                    False,
                    Witness((i, j), _scalar_vec(lhs), _scalar_vec(rhs)),
                )
    return AxiomCheck("counit-multiplicative", True)


def _check_counit_preserves_unit(b: HomBialgebra) -> AxiomCheck:
    lhs = b.eps_dict(b.unit_dict())
    if lhs != ONE:
        return AxiomCheck(
            "counit-preserves-unit",
            False,
            Witness((), _scalar_vec(lhs), _scalar_vec(ONE)),
        )
    return AxiomCheck("counit-preserves-unit", True)


def _check_counit_absorbs_alpha(b: HomBialgebra, admit: Admit) -> AxiomCheck:
    for i in range(b.dim):
        if not _admit(admit, (i,)):
            continue
        lhs = b.eps_dict(b.alpha.col_dict(i))
        rhs = b.eps(i)
        if lhs != rhs:
            return AxiomCheck(
                "counit-absorbs-alpha",
                False,
                Witness((i,), _scalar_vec(lhs), _scalar_vec(rhs)),
            )
    return AxiomCheck("counit-absorbs-alpha", True)


def _algebra_entries(a: HomAlgebra, admit: Admit) -> list[AxiomCheck]:
    return [
        _check_hom_associativity(a, admit),
        _check_unitality(a, True, admit),
        _check_unitality(a, False, admit),
        _check_twist_fixes_unit(a),
    ]


def _coalgebra_entries(c: HomCoalgebra, admit: Admit) -> list[AxiomCheck]:
    return [
        _check_hom_coassociativity(c, admit),
        _check_counitality(c, True, admit),
        _check_counitality(c, False, admit),
        _check_counit_absorbs_twist(c, admit),
    ]


def check_axioms(s, admit: Admit = None) -> AxiomReport:
    """Check every defining axiom of the given structure.

    admit optionally restricts which basis tuples are tested; it is used by
    truncated models whose tables are only faithful below a degree bound.
    """
    if isinstance(s, HomBialgebra):
        entries = _algebra_entries(s.algebra, admit)
        entries += _coalgebra_entries(s.coalgebra, admit)
        entries += [
            _check_comul_multiplicative(s, admit),
            _check_comul_preserves_unit(s),
            _check_counit_multiplicative(s, admit),
            _check_counit_preserves_unit(s),
            _check_counit_absorbs_alpha(s, admit),
        ]
    elif isinstance(s, HomAlgebra):
        entries = _algebra_entries(s, admit)
    elif isinstance(s, HomCoalgebra):
        entries = _coalgebra_entries(s, admit)
    else:
        raise TypeError(f"cannot check axioms of {type(s).__name__}")
    return AxiomReport(tuple(entries))


def compute_flags(b: HomBialgebra) -> FlagSet:
    n = b.dim
    alpha_mult = True
    for i in range(n):
        for j in range(n):
            lhs = b.alpha.apply_dict(b.mul_col(i, j))
            rhs = b.product(b.alpha.col_dict(i), b.alpha.col_dict(j))
            if lhs != rhs:
                alpha_mult = False
                break
        if not alpha_mult:
            break
    beta_comult = True
    for i in range(n):
        lhs = b.comul.apply_dict(b.beta.col_dict(i))
        rhs: dict = {}
        for ab, coef in b.comul_col(i).items():
            a, c = divmod(ab, n)
            for p, x in b.beta.col_dict(a).items():
                for q, y in b.beta.col_dict(c).items():
                    key = p * n + q
                    nv = rhs.get(key, ZERO) + coef * x * y
                    if nv:
                        rhs[key] = nv
                    else:
                        del rhs[key]
        if lhs != rhs:
            beta_comult = False
            break
    commutative = all(
        b.mul_col(i, j) == b.mul_col(j, i) for i in range(n) for j in range(i + 1, n)
    )
    cocommutative = all(
        b.comul_col(i)
        == {(ab % n) * n + ab // n: c for ab, c in b.comul_col(i).items()}
        for i in range(n)
    )
    return FlagSet(
        alpha_multiplicative=alpha_mult,
        beta_comultiplicative=beta_comult,
        alpha_invertible=b.alpha.is_invertible(),
        beta_invertible=b.beta.is_invertible(),
        commutative=commutative,
        cocommutative=cocommutative,
    )


def matrix_identity_check(name: str, lhs: Mat, rhs: Mat) -> AxiomCheck:
    if lhs == rhs:
        return AxiomCheck(name, True)
    for j in range(lhs.cols):
        if lhs.col_dict(j) != rhs.col_dict(j):
            return AxiomCheck(name, False, Witness((j,), lhs.column(j), rhs.column(j)))
    raise AssertionError("unreachable: unequal matrices with equal columns")


def is_hom_bialgebra_morphism(
    f: Mat, src: HomBialgebra, dst: HomBialgebra
) -> AxiomReport:
    """Check the six defining equations of a map of Hom-bialgebras."""
    if (f.rows, f.cols) != (dst.dim, src.dim):
        raise DimensionMismatch(
            f"morphism must be {dst.dim}x{src.dim}, got {f.rows}x{f.cols}"
        )
    n = src.dim
    m = dst.dim
    entries: list[AxiomCheck] = []

    mul_check = AxiomCheck("respects-mul", True)
    for i in range(n):
        for j in range(n):
            lhs = f.apply_dict(src.mul_col(i, j))
            rhs = dst.product(f.col_dict(i), f.col_dict(j))
            if lhs != rhs:
                mul_check = AxiomCheck(
                    "respects-mul", False, Witness((i, j), _vec(lhs, m), _vec(rhs, m))
                )
                break
        if not mul_check.passed:
            break
    entries.append(mul_check)

    entries.append(matrix_identity_check("respects-alpha", f @ src.alpha, dst.alpha @ f))

    comul_check = AxiomCheck("respects-comul", True)
    for i in range(n):
        lhs: dict = {}
        for ab, coef in src.comul_col(i).items():
            a, b = divmod(ab, n)
            for p, x in f.col_dict(a).items():
                for q, y in f.col_dict(b).items():
                    key = p * m + q
                    nv = lhs.get(key, ZERO) + coef * x * y
                    if nv:
                        lhs[key] = nv
                    else:
                        del lhs[key]
        rhs = dst.comul.apply_dict(f.col_dict(i))
        if lhs != rhs:
            comul_check = AxiomCheck(
                "respects-comul",
                False,
                Witness((i,), _vec(lhs, m * m), _vec(rhs, m * m)),
            )
            break
    entries.append(comul_check)

    counit_check = AxiomCheck("respects-counit", True)
    for i in range(n):
        lhs_s = dst.eps_dict(f.col_dict(i))
        rhs_s = src.eps(i)
        if lhs_s != rhs_s:
            counit_check = AxiomCheck(
                "respects-counit",
                False,
                Witness((i,), _scalar_vec(lhs_s), _scalar_vec(rhs_s)),
            )
            break
    entries.append(counit_check)

    entries.append(matrix_identity_check("respects-beta", f @ src.beta, dst.beta @ f))

    img = f.apply(src.unit)
    if img == dst.unit:
        entries.append(AxiomCheck("respects-unit", True))
    else:
        entries.append(
            AxiomCheck("respects-unit", False, Witness((), img, dst.unit))
        )
    return AxiomReport(tuple(entries))
