"""Converters between the oracle's raw-dict format and package structures."""

from fractions import Fraction as F

from hombra.linalg import Mat, Vec
from hombra.structures import HomBialgebra


def _clean(d):
    return {k: F(v) for k, v in d.items() if v}


def bial_from_raw(raw) -> HomBialgebra:
    n = raw["dim"]
    mul = Mat(n, n * n, [_clean(raw["mul"][(i, j)]) for i in range(n) for j in range(n)])
    unit = Vec(raw["unit"].get(i, F(0)) for i in range(n))
    alpha = Mat.from_rows(raw["alpha"])
    comul = Mat(
        n * n,
        n,
        [{a * n + b: F(c) for (a, b), c in raw["comul"][i].items() if c} for i in range(n)],
    )
    counit = Mat(1, n, [_clean({0: raw["counit"][i]}) for i in range(n)])
    beta = Mat.from_rows(raw["beta"])
    return HomBialgebra(n, mul, unit, alpha, comul, counit, beta)


def bial_to_raw(b: HomBialgebra) -> dict:
    """Inverse of bial_from_raw, for feeding built structures to the oracle."""
    n = b.dim
    return {
        "dim": n,
        "mul": {
            (i, j): dict(b.mul.col_dict(i * n + j))
            for i in range(n)
            for j in range(n)
        },
        "unit": {i: c for i, c in enumerate(b.unit) if c},
        "alpha": [list(r) for r in b.alpha.to_rows()],
        "comul": {
            i: {(k // n, k % n): c for k, c in b.comul.col_dict(i).items()}
            for i in range(n)
        },
        "counit": [b.counit.entry(0, i) for i in range(n)],
        "beta": [list(r) for r in b.beta.to_rows()],
    }


def to_flat_vec(payload, shape, n) -> Vec:
    """Flatten an oracle witness payload dict to a coordinate vector."""
    if shape == "scalar":
        return Vec([payload.get(0, F(0))])
    if shape == "vec":
        return Vec(payload.get(i, F(0)) for i in range(n))
    if shape == "tensor2":
        return Vec(
            payload.get((i, j), F(0)) for i in range(n) for j in range(n)
        )
    if shape == "tensor3":
        return Vec(
            payload.get((i, j, k), F(0))
            for i in range(n)
            for j in range(n)
            for k in range(n)
        )
    raise ValueError(shape)


WITNESS_SHAPES = {
    "hom-associativity": "vec",
    "left-unitality": "vec",
    "right-unitality": "vec",
    "twist-fixes-unit": "vec",
    "hom-coassociativity": "tensor3",
    "left-counitality": "vec",
    "right-counitality": "vec",
    "counit-absorbs-twist": "scalar",
    "comul-multiplicative": "tensor2",
    "comul-preserves-unit": "tensor2",
    "counit-multiplicative": "scalar",
    "counit-preserves-unit": "scalar",
    "counit-absorbs-alpha": "scalar",
}
