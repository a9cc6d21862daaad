"""Independent brute-force evaluator used to cross-check the package.

Everything here is deliberately dumb: structures are plain dicts of
Fractions, tensors are dicts keyed by index tuples, and every identity is
expanded element by element with explicit loops.  No imports from the
package under test.

Raw structure format:
    dim     int
    mul     {(i, j): {k: Fraction}}   product of basis elements i, j
    unit    {k: Fraction}             the element 1
    alpha   [[Fraction]]              row-major matrix
    comul   {i: {(a, b): Fraction}}   coproduct of basis element i
    counit  [Fraction]                row vector
    beta    [[Fraction]]              row-major matrix
"""

from fractions import Fraction as F

# ---------------------------------------------------------------- plumbing


def clean(d):
    return {k: v for k, v in d.items() if v}


def v_add(u, w, c=F(1)):
    out = dict(u)
    for k, v in w.items():
        out[k] = out.get(k, F(0)) + c * v
    return clean(out)


def mat_col(m, j):
    return clean({i: row[j] for i, row in enumerate(m)})


def apply_mat(m, v):
    out = {}
    for j, c in v.items():
        out = v_add(out, mat_col(m, j), c)
    return out


def mul_vec(raw, u, w):
    out = {}
    for i, a in u.items():
        for j, b in w.items():
            out = v_add(out, raw["mul"][(i, j)], a * b)
    return out


def comul_vec(raw, v):
    out = {}
    for i, c in v.items():
        out = v_add(out, raw["comul"][i], c)
    return out


def eps_vec(raw, v):
    return sum((raw["counit"][i] * c for i, c in v.items()), F(0))


def tensor2(u, w):
    return clean({(i, j): a * b for i, a in u.items() for j, b in w.items()})


def mul_tensor2(raw, s, t):
    # (a (x) b)(c (x) d) = ac (x) bd, extended bilinearly
    out = {}
    for (a, b), x in s.items():
        for (c, d), y in t.items():
            out = v_add(out, tensor2(raw["mul"][(a, c)], raw["mul"][(b, d)]), x * y)
    return out


def basis_vec(i):
    return {i: F(1)}


def det(m):
    n = len(m)
    rows = [list(r) for r in m]
    d = F(1)
    for c in range(n):
        piv = next((r for r in range(c, n) if rows[r][c]), None)
        if piv is None:
            return F(0)
        if piv != c:
            rows[c], rows[piv] = rows[piv], rows[c]
            d = -d
        d *= rows[c][c]
        for r in range(c + 1, n):
            f = rows[r][c] / rows[c][c]
            for cc in range(c, n):
                rows[r][cc] -= f * rows[c][cc]
    return d


# ------------------------------------------------------------ axiom checks
# Each check returns None on success or (witness_indices, lhs, rhs) for the
# first failing basis tuple in lexicographic order.


def hom_associativity(raw):
    n = raw["dim"]
    for i in range(n):
        for j in range(n):
            for k in range(n):
                ak = apply_mat(raw["alpha"], basis_vec(k))
                ai = apply_mat(raw["alpha"], basis_vec(i))
                lhs = mul_vec(raw, raw["mul"][(i, j)], ak)
                rhs = mul_vec(raw, ai, raw["mul"][(j, k)])
                if lhs != rhs:
                    return (i, j, k), lhs, rhs
    return None


def left_unitality(raw):
    for i in range(raw["dim"]):
        lhs = mul_vec(raw, raw["unit"], basis_vec(i))
        rhs = apply_mat(raw["alpha"], basis_vec(i))
        if lhs != rhs:
            return (i,), lhs, rhs
    return None


def right_unitality(raw):
    for i in range(raw["dim"]):
        lhs = mul_vec(raw, basis_vec(i), raw["unit"])
        rhs = apply_mat(raw["alpha"], basis_vec(i))
        if lhs != rhs:
            return (i,), lhs, rhs
    return None


def twist_fixes_unit(raw):
    lhs = apply_mat(raw["alpha"], raw["unit"])
    if lhs != clean(raw["unit"]):
        return (), lhs, clean(raw["unit"])
    return None


def hom_coassociativity(raw):
    for i in range(raw["dim"]):
        lhs, rhs = {}, {}
        for (a, b), c in raw["comul"][i].items():
            da = raw["comul"][a]
            bb = apply_mat(raw["beta"], basis_vec(b))
            for (p, q), x in da.items():
                for r, y in bb.items():
                    lhs = v_add(lhs, {(p, q, r): c * x * y})
            ba = apply_mat(raw["beta"], basis_vec(a))
            db = raw["comul"][b]
            for p, x in ba.items():
                for (q, r), y in db.items():
                    rhs = v_add(rhs, {(p, q, r): c * x * y})
        if lhs != rhs:
            return (i,), lhs, rhs
    return None


def left_counitality(raw):
    for i in range(raw["dim"]):
        lhs = {}
        for (a, b), c in raw["comul"][i].items():
            lhs = v_add(lhs, {b: c * raw["counit"][a]})
        rhs = apply_mat(raw["beta"], basis_vec(i))
        if lhs != rhs:
            return (i,), lhs, rhs
    return None


def right_counitality(raw):
    for i in range(raw["dim"]):
        lhs = {}
        for (a, b), c in raw["comul"][i].items():
            lhs = v_add(lhs, {a: c * raw["counit"][b]})
        rhs = apply_mat(raw["beta"], basis_vec(i))
        if lhs != rhs:
            return (i,), lhs, rhs
    return None


def counit_absorbs_twist(raw):
    for i in range(raw["dim"]):
        lhs = eps_vec(raw, apply_mat(raw["beta"], basis_vec(i)))
        rhs = raw["counit"][i]
        if lhs != rhs:
            return (i,), {0: lhs}, {0: rhs}
    return None


def comul_multiplicative(raw):
    n = raw["dim"]
    for i in range(n):
        for j in range(n):
            lhs = comul_vec(raw, raw["mul"][(i, j)])
            rhs = mul_tensor2(raw, raw["comul"][i], raw["comul"][j])
            if lhs != rhs:
                return (i, j), lhs, rhs
    return None


def comul_preserves_unit(raw):
    lhs = comul_vec(raw, raw["unit"])
    rhs = tensor2(raw["unit"], raw["unit"])
    if lhs != rhs:
        return (), lhs, rhs
    return None


def counit_multiplicative(raw):
    n = raw["dim"]
    for i in range(n):
        for j in range(n):
            lhs = eps_vec(raw, raw["mul"][(i, j)])
            rhs = raw["counit"][i] * raw["counit"][j]
            if lhs != rhs:
                return (i, j), {0: lhs}, {0: rhs}
    return None


def counit_preserves_unit(raw):
    lhs = eps_vec(raw, raw["unit"])
    if lhs != 1:
        return (), {0: lhs}, {0: F(1)}
    return None


def counit_absorbs_alpha(raw):
    for i in range(raw["dim"]):
        lhs = eps_vec(raw, apply_mat(raw["alpha"], basis_vec(i)))
        rhs = raw["counit"][i]
        if lhs != rhs:
            return (i,), {0: lhs}, {0: rhs}
    return None


ALGEBRA_CHECKS = [
    ("hom-associativity", hom_associativity),
    ("left-unitality", left_unitality),
    ("right-unitality", right_unitality),
    ("twist-fixes-unit", twist_fixes_unit),
]

COALGEBRA_CHECKS = [
    ("hom-coassociativity", hom_coassociativity),
    ("left-counitality", left_counitality),
    ("right-counitality", right_counitality),
    ("counit-absorbs-twist", counit_absorbs_twist),
]

COMPAT_CHECKS = [
    ("comul-multiplicative", comul_multiplicative),
    ("comul-preserves-unit", comul_preserves_unit),
    ("counit-multiplicative", counit_multiplicative),
    ("counit-preserves-unit", counit_preserves_unit),
    ("counit-absorbs-alpha", counit_absorbs_alpha),
]


def algebra_verdicts(raw):
    return {name: fn(raw) is None for name, fn in ALGEBRA_CHECKS}


def coalgebra_verdicts(raw):
    return {name: fn(raw) is None for name, fn in COALGEBRA_CHECKS}


def bialgebra_verdicts(raw):
    out = algebra_verdicts(raw)
    out.update(coalgebra_verdicts(raw))
    out.update({name: fn(raw) is None for name, fn in COMPAT_CHECKS})
    return out


def flags(raw):
    n = raw["dim"]
    alpha_mult = all(
        apply_mat(raw["alpha"], raw["mul"][(i, j)])
        == mul_vec(
            raw,
            apply_mat(raw["alpha"], basis_vec(i)),
            apply_mat(raw["alpha"], basis_vec(j)),
        )
        for i in range(n)
        for j in range(n)
    )
    beta_comult = True
    for i in range(n):
        lhs = comul_vec(raw, apply_mat(raw["beta"], basis_vec(i)))
        rhs = {}
        for (a, b), c in raw["comul"][i].items():
            rhs = v_add(
                rhs,
                tensor2(
                    apply_mat(raw["beta"], basis_vec(a)),
                    apply_mat(raw["beta"], basis_vec(b)),
                ),
                c,
            )
        if lhs != rhs:
            beta_comult = False
            break
    commutative = all(
        raw["mul"][(i, j)] == raw["mul"][(j, i)] for i in range(n) for j in range(n)
    )
    cocommutative = all(
        raw["comul"][i] == {(b, a): c for (a, b), c in raw["comul"][i].items()}
        for i in range(n)
    )
    return {
        "alpha_multiplicative": alpha_mult,
        "beta_comultiplicative": beta_comult,
        "alpha_invertible": det(raw["alpha"]) != 0,
        "beta_invertible": det(raw["beta"]) != 0,
        "commutative": commutative,
        "cocommutative": cocommutative,
    }


# -------------------------------------------------- convolution and powers


def convolve(raw, f, g):
    """(f * g)(e_i) columns, f and g given as row-major matrices."""
    n = raw["dim"]
    cols = []
    for i in range(n):
        out = {}
        for (a, b), c in raw["comul"][i].items():
            fa = apply_mat(f, basis_vec(a))
            gb = apply_mat(g, basis_vec(b))
            out = v_add(out, mul_vec(raw, fa, gb), c)
        cols.append(out)
    return cols


def alpha_power(raw, v, k):
    for _ in range(k):
        v = apply_mat(raw["alpha"], v)
    return v


def conv_unit_col(raw, i):
    return clean({j: raw["counit"][i] * c for j, c in raw["unit"].items()})


# ------------------------------------------------------ worked 2d example


def example_2d_bialgebra():
    """The bundled 2-dimensional example, entered verbatim."""
    one = F(1)
    return {
        "dim": 2,
        "mul": {
            (0, 0): {0: one},
            (0, 1): {1: one},
            (1, 0): {1: one},
            (1, 1): {1: one},
        },
        "unit": {0: one},
        "alpha": [[F(2), F(0)], [F(-1), F(1)]],
        "comul": {
            0: {(0, 0): one},
            1: {(0, 1): one, (1, 0): one, (1, 1): F(-2)},
        },
        "counit": [one, F(0)],
        "beta": [[F(1), F(0)], [F(1), F(1)]],
    }


def classical_c2():
    """Group algebra of the order-2 group, identity twists."""
    one = F(1)
    return {
        "dim": 2,
        "mul": {
            (0, 0): {0: one},
            (0, 1): {1: one},
            (1, 0): {1: one},
            (1, 1): {0: one},
        },
        "unit": {0: one},
        "alpha": [[one, F(0)], [F(0), one]],
        "comul": {0: {(0, 0): one}, 1: {(1, 1): one}},
        "counit": [one, one],
        "beta": [[one, F(0)], [F(0), one]],
    }


def primitive_dim2():
    """All thirteen axioms hold; x is primitive and alpha kills it."""
    one = F(1)
    return {
        "dim": 2,
        "mul": {(0, 0): {0: one}, (0, 1): {}, (1, 0): {}, (1, 1): {}},
        "unit": {0: one},
        "alpha": [[one, F(0)], [F(0), F(0)]],
        "comul": {0: {(0, 0): one}, 1: {(0, 1): one, (1, 0): one}},
        "counit": [one, F(0)],
        "beta": [[one, F(0)], [F(0), one]],
    }
