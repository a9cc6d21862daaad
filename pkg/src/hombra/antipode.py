"""Antipode verification and the twisted-identity proposition suite.

Two notions are checked.  The strict antipode is a convolution inverse of
the identity on the nose; the relative one only has to become an inverse
after enough applications of alpha.  Every proposition about antipodes is
implemented as an exponent scan: build both sides as exact matrices, hit
them with the twist until they agree, and report the smallest exponent
that works, or the witness column at the search bound if none does.

Hypotheses are never assumed.  Each verdict records whether the instance
actually satisfies the hypotheses of the statement being tested, and the
identity is evaluated either way.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .convolution import ConvContext, conv_unit, convolve, pointwise_inverse_exponent
from .errors import HypothesisFailed
from .linalg import Mat, Vec, kron, swap_map
from .scalars import ZERO
from .structures import (
    AxiomCheck,
    AxiomReport,
    HomBialgebra,
    HomHopfCandidate,
    Witness,
    compute_flags,
    is_hom_bialgebra_morphism,
    matrix_identity_check,
)


@dataclass(frozen=True, eq=True)
class PropositionVerdict:
    name: str
    hypotheses_met: dict
    min_exponent: Optional[int]
    witness: Optional[Witness] = None
    strict: Optional[bool] = None
    detail: Optional[dict] = None


def _bial(H) -> HomBialgebra:
    return H.bialgebra if isinstance(H, HomHopfCandidate) else H


def _col_mat(n: int, d: dict) -> Mat:
    return Mat(n, 1, [dict(d)])


def _tensor2(n: int, u: dict, w: dict) -> dict:
    return {i * n + j: a * b for i, a in u.items() for j, b in w.items() if a * b}


def _scan(step: Mat, offset: int, lhs: Mat, rhs: Mat, k_max: int, decode):
    """Smallest k <= k_max with step^(k+offset) lhs = step^(k+offset) rhs."""
    L, R = lhs, rhs
    for _ in range(offset):
        L, R = step @ L, step @ R
    k = 0
    while True:
        if L == R:
            return k, None
        if k == k_max:
            for j in range(L.cols):
                if L.col_dict(j) != R.col_dict(j):
                    return None, Witness(decode(j), L.column(j), R.column(j))
            raise AssertionError("unequal matrices with equal columns")
        L, R = step @ L, step @ R
        k += 1


def _scan_fixed(step: Mat, offset: int, sides: list[Mat], target: Mat, k_max: int, decode):
    """Smallest k <= k_max with step^(k+offset) applied to every side
    equal to the fixed target."""
    Ls = list(sides)
    for _ in range(offset):
        Ls = [step @ L for L in Ls]
    k = 0
    while True:
        if all(L == target for L in Ls):
            return k, None
        if k == k_max:
            for L in Ls:
                for j in range(L.cols):
                    if L.col_dict(j) != target.col_dict(j):
                        return None, Witness(decode(j), L.column(j), target.column(j))
            raise AssertionError("no differing column at the failing level")
        Ls = [step @ L for L in Ls]
        k += 1


def _anti_algebra_sides(b: HomBialgebra, S: Mat, pre: Mat) -> tuple[Mat, Mat]:
    # S(pre(x) pre(y)) vs S(pre(y)) S(pre(x)), columns indexed by (x, y)
    n = b.dim
    spre = S @ pre
    cols_l, cols_r = [], []
    for i in range(n):
        u = pre.col_dict(i)
        for j in range(n):
            cols_l.append(S.apply_dict(b.product(u, pre.col_dict(j))))
            cols_r.append(b.product(spre.col_dict(j), spre.col_dict(i)))
    return Mat(n, n * n, cols_l), Mat(n, n * n, cols_r)


def _anti_coalgebra_sides(b: HomBialgebra, S: Mat, pre: Mat) -> tuple[Mat, Mat]:
    # comul(S(pre(x))) vs S(pre(x2)) (x) S(pre(x1))
    n = b.dim
    spre = S @ pre
    lhs = b.comul @ spre
    rhs = kron(spre, spre) @ swap_map(n, n) @ b.comul
    return lhs, rhs


def _pair_decode(n: int):
    return lambda j: (j // n, j % n)


def _single_decode(j: int) -> tuple:
    return (j,)


def _nullary_decode(j: int) -> tuple:
    return ()


def _repair_pairs(e: AxiomCheck, n: int) -> AxiomCheck:
    if e.witness is None:
        return e
    j = e.witness.at[0]
    return AxiomCheck(
        e.name, e.passed, Witness((j // n, j % n), e.witness.lhs, e.witness.rhs)
    )


def _unit_entry(b: HomBialgebra, S: Mat) -> AxiomCheck:
    img = S.apply(b.unit)
    ok = img == b.unit
    return AxiomCheck("preserves-unit", ok, None if ok else Witness((), img, b.unit))


# ------------------------------------------------------------ verification


def verify_strict_antipode(H: HomHopfCandidate) -> AxiomReport:
    """S * Id = Id * S = eta o eps on the nose, plus the four classical
    consequences: S anti-multiplicative, anti-comultiplicative, unital,
    counital."""
    b = _bial(H)
    S = H.antipode
    n = b.dim
    ctx = ConvContext.from_bialgebra(b)
    ident = Mat.identity(n)
    u = conv_unit(ctx)
    entries = [
        matrix_identity_check("left-convolution-inverse", convolve(ctx, S, ident), u),
        matrix_identity_check("right-convolution-inverse", convolve(ctx, ident, S), u),
    ]
    L, R = _anti_algebra_sides(b, S, ident)
    entries.append(_repair_pairs(matrix_identity_check("anti-multiplicative", L, R), n))
    L, R = _anti_coalgebra_sides(b, S, ident)
    entries.append(matrix_identity_check("anti-comultiplicative", L, R))
    entries.append(_unit_entry(b, S))
    entries.append(matrix_identity_check("preserves-counit", b.counit @ S, b.counit))
    return AxiomReport(tuple(entries))


def verify_relative_antipode(H: HomHopfCandidate, k_max: int) -> AxiomReport:
    """The three relative-antipode conditions: S commutes with alpha, S
    fixes unit and counit, and S is a relative convolution inverse of the
    identity (per-basis exponents and the uniform one in the detail)."""
    b = _bial(H)
    S = H.antipode
    n = b.dim
    ctx = ConvContext.from_bialgebra(b)
    ident = Mat.identity(n)
    entries = [
        matrix_identity_check("commutes-with-alpha", S @ b.alpha, b.alpha @ S),
        _unit_entry(b, S),
        matrix_identity_check("preserves-counit", b.counit @ S, b.counit),
    ]

    per = tuple(
        pointwise_inverse_exponent(ctx, ident, S, Vec.basis(n, i), k_max)
        for i in range(n)
    )
    u = conv_unit(ctx)
    k_uniform, witness = _scan_fixed(
        b.alpha,
        0,
        [convolve(ctx, S, ident), convolve(ctx, ident, S)],
        u,
        k_max,
        _single_decode,
    )
    detail = {"k_uniform": k_uniform, "k_per_basis": per}
    note = None
    if k_uniform is None and all(k is not None for k in per):
        note = "per-element exponents exist but no uniform exponent within bound"
    entries.append(
        AxiomCheck("relative-inverse", k_uniform is not None, witness, note, detail)
    )
    return AxiomReport(tuple(entries))


# ------------------------------------------------------------ propositions


def prop_anti_algebra(H: HomHopfCandidate, k_max: int) -> PropositionVerdict:
    """alpha^(K+2)(S(b2(x) b2(y))) = alpha^(K+2)(S(b2(y)) S(b2(x))) where
    b2 = beta^2; strict form S(xy) = S(y)S(x) when the twists invert."""
    b = _bial(H)
    S = H.antipode
    fl = compute_flags(b)
    pre = b.beta @ b.beta
    L, R = _anti_algebra_sides(b, S, pre)
    k, w = _scan(b.alpha, 2, L, R, k_max, _pair_decode(b.dim))
    strict = None
    if fl.alpha_invertible and fl.beta_invertible:
        Ls, Rs = _anti_algebra_sides(b, S, Mat.identity(b.dim))
        strict = Ls == Rs
    return PropositionVerdict(
        "anti-algebra",
        {"alpha_multiplicative": fl.alpha_multiplicative},
        k,
        w,
        strict,
    )


def prop_anti_coalgebra(H: HomHopfCandidate, k_max: int) -> PropositionVerdict:
    b = _bial(H)
    S = H.antipode
    fl = compute_flags(b)
    pre = b.beta @ b.beta
    L, R = _anti_coalgebra_sides(b, S, pre)
    # the exponent acts on each tensor leg
    k, w = _scan(kron(b.alpha, b.alpha), 2, L, R, k_max, _single_decode)
    strict = None
    if fl.alpha_invertible and fl.beta_invertible:
        Ls, Rs = _anti_coalgebra_sides(b, S, Mat.identity(b.dim))
        strict = Ls == Rs
    return PropositionVerdict(
        "anti-coalgebra",
        {"beta_comultiplicative": fl.beta_comultiplicative},
        k,
        w,
        strict,
    )


def prop_unitality(H: HomHopfCandidate, k_max: int) -> PropositionVerdict:
    """alpha^(k+1)(S(1)) = 1."""
    b = _bial(H)
    n = b.dim
    lhs = _col_mat(n, H.antipode.apply_dict(b.unit_dict()))
    target = _col_mat(n, b.unit_dict())
    k, w = _scan_fixed(b.alpha, 1, [lhs], target, k_max, _nullary_decode)
    return PropositionVerdict("unitality", {}, k, w)


def prop_counitality(H: HomHopfCandidate, k_max: int) -> PropositionVerdict:
    """eps(alpha^k(S(h))) = eps(h), read as equality of row vectors."""
    b = _bial(H)
    S = H.antipode
    power = Mat.identity(b.dim)
    k = 0
    while True:
        lhs = b.counit @ power @ S
        if lhs == b.counit:
            return PropositionVerdict("counitality", {}, k)
        if k == k_max:
            for j in range(b.dim):
                if lhs.col_dict(j) != b.counit.col_dict(j):
                    w = Witness((j,), lhs.column(j), b.counit.column(j))
                    return PropositionVerdict("counitality", {}, None, w)
            raise AssertionError("unequal rows with equal entries")
        power = b.alpha @ power
        k += 1


def prop_hopf_map(
    f: Mat, H: HomHopfCandidate, K: HomHopfCandidate, k_max: int
) -> PropositionVerdict:
    """For a map of the underlying bialgebras, alpha'^K o (f o S) o beta^2
    = alpha'^K o (S' o f) o beta^2; exactly f o S = S' o f when all four
    twists are invertible."""
    src = _bial(H)
    dst = _bial(K)
    morph = is_hom_bialgebra_morphism(f, src, dst)
    if not morph.passed():
        bad = ", ".join(e.name for e in morph.failures())
        raise HypothesisFailed(f"not a map of the bialgebra structures ({bad})")
    pre = src.beta @ src.beta
    L = f @ H.antipode @ pre
    R = K.antipode @ f @ pre
    k, w = _scan(dst.alpha, 0, L, R, k_max, _single_decode)
    strict = None
    fh, fk = compute_flags(src), compute_flags(dst)
    if (
        fh.alpha_invertible
        and fh.beta_invertible
        and fk.alpha_invertible
        and fk.beta_invertible
    ):
        strict = f @ H.antipode == K.antipode @ f
    return PropositionVerdict(
        "hopf-map", {"hom_bialgebra_morphism": True}, k, w, strict
    )


def prop_s_squared(H: HomHopfCandidate, k_max: int) -> PropositionVerdict:
    """alpha^(k+2) o S^2 o beta^2 = alpha^(k+2) o beta^2 under commutativity
    or cocommutativity; S^2 = Id exactly when the twists invert."""
    b = _bial(H)
    S = H.antipode
    fl = compute_flags(b)
    pre = b.beta @ b.beta
    k, w = _scan(b.alpha, 2, S @ S @ pre, pre, k_max, _single_decode)
    strict = None
    if fl.alpha_invertible and fl.beta_invertible:
        strict = S @ S == Mat.identity(b.dim)
    return PropositionVerdict(
        "s-squared",
        {"commutative": fl.commutative, "cocommutative": fl.cocommutative},
        k,
        w,
        strict,
    )


# --------------------------------------------------- distinguished elements


def check_grouplike(H, h: Vec) -> bool:
    """comul(h) = h (x) h and beta(h) = h; the zero vector is rejected
    because its counit cannot be 1."""
    b = _bial(H)
    if h.is_zero():
        return False
    hd = h.to_dict()
    return (
        b.comul.apply_dict(hd) == _tensor2(b.dim, hd, hd) and b.beta.apply(h) == h
    )


def check_primitive(H, h: Vec) -> bool:
    """comul(h) = 1 (x) h + h (x) 1; zero passes degenerately."""
    b = _bial(H)
    hd = h.to_dict()
    u = b.unit_dict()
    want = _tensor2(b.dim, u, hd)
    for key, v in _tensor2(b.dim, hd, u).items():
        nv = want.get(key, ZERO) + v
        if nv:
            want[key] = nv
        else:
            del want[key]
    return b.comul.apply_dict(hd) == want


def prop_grouplike_inverse(H: HomHopfCandidate, h: Vec, k_max: int) -> PropositionVerdict:
    """alpha^k(S(h) h) = alpha^k(h S(h)) = 1 for group-like h."""
    b = _bial(H)
    if not check_grouplike(H, h):
        raise HypothesisFailed("element is not group-like")
    hd = h.to_dict()
    sh = H.antipode.apply_dict(hd)
    sides = [
        _col_mat(b.dim, b.product(sh, hd)),
        _col_mat(b.dim, b.product(hd, sh)),
    ]
    target = _col_mat(b.dim, b.unit_dict())
    k, w = _scan_fixed(b.alpha, 0, sides, target, k_max, _nullary_decode)
    return PropositionVerdict("grouplike-inverse", {"grouplike": True}, k, w)


def prop_primitive_image(H: HomHopfCandidate, h: Vec, k_max: int) -> PropositionVerdict:
    """alpha^(k+1)(S(h)) = -alpha^(k+1)(h) for primitive h."""
    b = _bial(H)
    if not check_primitive(H, h):
        raise HypothesisFailed("element is not primitive")
    hd = h.to_dict()
    L = _col_mat(b.dim, H.antipode.apply_dict(hd))
    R = _col_mat(b.dim, {i: -c for i, c in hd.items()})
    k, w = _scan(b.alpha, 1, L, R, k_max, _nullary_decode)
    return PropositionVerdict("primitive-image", {"primitive": True}, k, w)
