from fractions import Fraction as F

import pytest

import oracle
from helpers import bial_from_raw
from hombra.antipode import (
    check_grouplike,
    check_primitive,
    prop_anti_algebra,
    prop_anti_coalgebra,
    prop_counitality,
    prop_grouplike_inverse,
    prop_hopf_map,
    prop_primitive_image,
    prop_s_squared,
    prop_unitality,
    verify_relative_antipode,
    verify_strict_antipode,
)
from hombra.errors import HypothesisFailed
from hombra.linalg import Mat, Vec
from hombra.structures import HomHopfCandidate

KMAX = 6


def c2_candidate(S=None):
    b = bial_from_raw(oracle.classical_c2())
    return HomHopfCandidate(b, S if S is not None else Mat.identity(2))


def two_d_candidate():
    return HomHopfCandidate(bial_from_raw(oracle.example_2d_bialgebra()), Mat.identity(2))


def primitive_candidate(S=None):
    b = bial_from_raw(oracle.primitive_dim2())
    return HomHopfCandidate(b, S if S is not None else Mat.from_rows([[1, 0], [0, 0]]))


STRICT_NAMES = [
    "left-convolution-inverse",
    "right-convolution-inverse",
    "anti-multiplicative",
    "anti-comultiplicative",
    "preserves-unit",
    "preserves-counit",
]

RELATIVE_NAMES = [
    "commutes-with-alpha",
    "preserves-unit",
    "preserves-counit",
    "relative-inverse",
]


# ------------------------------------------------------------------- strict


def test_strict_c2():
    report = verify_strict_antipode(c2_candidate())
    assert [e.name for e in report] == STRICT_NAMES
    assert report.passed()


def test_strict_2d():
    # the identity map really is a strict antipode for the 2d example
    report = verify_strict_antipode(two_d_candidate())
    assert report.passed()


def test_strict_zero_map_fails_at_unit():
    report = verify_strict_antipode(c2_candidate(Mat.zeros(2, 2)))
    e = report.entry("left-convolution-inverse")
    assert not e.passed
    assert e.witness.at == (0,)
    assert e.witness.lhs == Vec([0, 0])
    assert e.witness.rhs == Vec([1, 0])


# ----------------------------------------------------------------- relative


def test_relative_c2():
    report = verify_relative_antipode(c2_candidate(), KMAX)
    assert [e.name for e in report] == RELATIVE_NAMES
    assert report.passed()
    d = report.entry("relative-inverse").detail
    assert d["k_uniform"] == 0
    assert d["k_per_basis"] == (0, 0)


def test_relative_2d():
    report = verify_relative_antipode(two_d_candidate(), KMAX)
    assert report.passed()
    assert report.entry("relative-inverse").detail["k_uniform"] == 0


def test_relative_primitive():
    report = verify_relative_antipode(primitive_candidate(), KMAX)
    assert report.passed()
    assert report.entry("relative-inverse").detail["k_per_basis"] == (0, 0)


def test_strict_pass_implies_relative_k0():
    for cand in (c2_candidate(), two_d_candidate()):
        assert verify_strict_antipode(cand).passed()
        rel = verify_relative_antipode(cand, KMAX)
        assert rel.entry("relative-inverse").passed
        assert rel.entry("relative-inverse").detail["k_uniform"] == 0


def test_relative_unit_violation():
    # S(1) = g instead of 1
    S = Mat.from_rows([[0, 0], [1, 1]])
    report = verify_relative_antipode(c2_candidate(S), KMAX)
    assert not report.entry("preserves-unit").passed


def test_relative_nullspace_antipode_variant():
    # S(1) = 1 + x is still a relative antipode here: alpha kills x
    S = Mat.from_rows([[1, 0], [1, 0]])
    report = verify_relative_antipode(primitive_candidate(S), KMAX)
    assert report.entry("relative-inverse").passed


# ------------------------------------------------------------- propositions


def test_anti_algebra_c2():
    v = prop_anti_algebra(c2_candidate(), KMAX)
    assert v.name == "anti-algebra"
    assert v.hypotheses_met == {"alpha_multiplicative": True}
    assert v.min_exponent == 0
    assert v.strict is True


def test_anti_algebra_2d():
    # hypothesis fails (alpha is not multiplicative) yet the identity holds
    # at K = 0 because the example is commutative and S = Id
    v = prop_anti_algebra(two_d_candidate(), KMAX)
    assert v.hypotheses_met == {"alpha_multiplicative": False}
    assert v.min_exponent == 0
    assert v.strict is True


def test_anti_coalgebra_c2():
    v = prop_anti_coalgebra(c2_candidate(), KMAX)
    assert v.hypotheses_met == {"beta_comultiplicative": True}
    assert v.min_exponent == 0
    assert v.strict is True


def test_anti_coalgebra_2d_not_found():
    # beta is not a coalgebra map here, and the twisted identity never
    # closes: the difference at e1 is -8 e2 (x) e2 at every exponent
    v = prop_anti_coalgebra(two_d_candidate(), KMAX)
    assert v.hypotheses_met == {"beta_comultiplicative": False}
    assert v.min_exponent is None
    assert v.witness is not None
    assert v.witness.at == (0,)
    diff = v.witness.lhs - v.witness.rhs
    assert diff == Vec([0, 0, 0, -8])
    # strict anti-comultiplicativity still holds: cocommutative and S = Id
    assert v.strict is True


def test_unitality():
    assert prop_unitality(c2_candidate(), KMAX).min_exponent == 0
    # alpha^k(e1) = 2^k e1 - (2^k - 1) e2 never returns to e1
    v = prop_unitality(two_d_candidate(), KMAX)
    assert v.min_exponent is None
    assert v.witness.at == ()


def test_counitality():
    assert prop_counitality(c2_candidate(), KMAX).min_exponent == 0
    assert prop_counitality(two_d_candidate(), KMAX).min_exponent == 0
    assert prop_counitality(primitive_candidate(), KMAX).min_exponent == 0


def test_hopf_map_identity():
    for cand in (c2_candidate(), two_d_candidate()):
        v = prop_hopf_map(Mat.identity(2), cand, cand, KMAX)
        assert v.name == "hopf-map"
        assert v.min_exponent == 0
        assert v.strict is True


def test_hopf_map_requires_morphism():
    with pytest.raises(HypothesisFailed):
        prop_hopf_map(Mat.zeros(2, 2), c2_candidate(), c2_candidate(), KMAX)


def test_s_squared():
    v = prop_s_squared(c2_candidate(), KMAX)
    assert v.hypotheses_met == {"commutative": True, "cocommutative": True}
    assert v.min_exponent == 0
    assert v.strict is True

    v = prop_s_squared(two_d_candidate(), KMAX)
    assert v.hypotheses_met == {"commutative": True, "cocommutative": True}
    assert v.min_exponent == 0
    assert v.strict is True


def test_s_squared_hypothesis_not_met_still_evaluated():
    # break commutativity and cocommutativity: e2 g := g, g e2 := 0 is not
    # a bialgebra, but the checker must still evaluate the identity
    raw = oracle.classical_c2()
    raw["mul"][(1, 0)] = {}
    raw["comul"][1] = {(0, 1): F(1)}
    cand = HomHopfCandidate(bial_from_raw(raw), Mat.identity(2))
    v = prop_s_squared(cand, KMAX)
    assert v.hypotheses_met == {"commutative": False, "cocommutative": False}
    assert v.min_exponent == 0  # S = Id makes S^2 = Id regardless


def test_anti_exponents_bounded_by_uniform_plus_two():
    # quantitative content of the twisted anti-(co)algebra identities
    for cand in (c2_candidate(), primitive_candidate()):
        rel = verify_relative_antipode(cand, KMAX)
        k = rel.entry("relative-inverse").detail["k_uniform"]
        va = prop_anti_algebra(cand, KMAX)
        vc = prop_anti_coalgebra(cand, KMAX)
        assert va.min_exponent is not None and va.min_exponent <= k + 2
        assert vc.min_exponent is not None and vc.min_exponent <= k + 2


# --------------------------------------------------- distinguished elements


def test_grouplike_c2():
    cand = c2_candidate()
    assert check_grouplike(cand, Vec([1, 0]))
    assert check_grouplike(cand, Vec([0, 1]))
    assert not check_grouplike(cand, Vec([1, 1]))
    assert not check_grouplike(cand, Vec([0, 0]))  # zero rejected


def test_grouplike_2d_beta_obstruction():
    # comul(e1) = e1 (x) e1 but beta moves e1, so it is not group-like
    assert not check_grouplike(two_d_candidate(), Vec([1, 0]))


def test_grouplike_inverse_c2():
    v = prop_grouplike_inverse(c2_candidate(), Vec([0, 1]), KMAX)
    assert v.name == "grouplike-inverse"
    assert v.min_exponent == 0
    with pytest.raises(HypothesisFailed):
        prop_grouplike_inverse(c2_candidate(), Vec([1, 1]), KMAX)


def test_primitive():
    cand = primitive_candidate()
    assert check_primitive(cand, Vec([0, 1]))
    assert check_primitive(cand, Vec([0, 0]))  # degenerate
    assert not check_primitive(cand, Vec([1, 0]))
    assert not check_primitive(c2_candidate(), Vec([0, 1]))


def test_primitive_image():
    v = prop_primitive_image(primitive_candidate(), Vec([0, 1]), KMAX)
    assert v.name == "primitive-image"
    assert v.min_exponent == 0
    with pytest.raises(HypothesisFailed):
        prop_primitive_image(primitive_candidate(), Vec([1, 0]), KMAX)


def test_primitive_scaling():
    # Delta is linear, so scalar multiples of primitives stay primitive
    cand = primitive_candidate()
    assert check_primitive(cand, Vec([0, 3]))
    assert prop_primitive_image(cand, Vec([0, 3]), KMAX).min_exponent == 0
