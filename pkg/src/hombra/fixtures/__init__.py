"""Bundled example structures.

Every fixture is a canonical structure file.  build_all() recomputes the
texts from the library, and the test suite pins the shipped bytes to
that output, so the JSON in this directory can never drift from the
code that claims to reproduce it.
"""

from importlib import resources
from pathlib import Path

from ..constructions import (
    cyclic_group,
    group_algebra,
    hom_group_algebra,
    index_one_hom_group,
    linearize_element_map,
    twist_group,
    yau_twist,
)
from ..linalg import Mat, Vec
from ..qmatrix import QParams, to_hom_bialgebra
from ..scalars import ONE
from ..serialize import emit_structure
from ..structures import HomBialgebra

NAMES = (
    "c2_classical",
    "c3_twist",
    "example_2d",
    "example_2dco",
    "example_2dbi",
    "homgroup_c4",
    "homgroup_index1",
    "primitive_dim2",
    "qmatrix_d2",
    "qmatrix_d4",
)


def _example_2d_bialgebra() -> HomBialgebra:
    # 2-dimensional example: idempotent-like product with a shear twist
    # on each side; the twist does not fix the unit, and the checkers
    # are expected to say so.
    return HomBialgebra(
        dim=2,
        mul=Mat.from_entries(2, 4, [(0, 0, ONE), (1, 1, ONE), (1, 2, ONE), (1, 3, ONE)]),
        unit=Vec.basis(2, 0),
        alpha=Mat.from_rows([[2, 0], [-1, 1]]),
        comul=Mat.from_entries(4, 2, [(0, 0, ONE), (1, 1, ONE), (2, 1, ONE), (3, 1, -2)]),
        counit=Mat.from_rows([[1, 0]]),
        beta=Mat.from_rows([[1, 0], [1, 1]]),
        basis=("e1", "e2"),
    )


def _primitive_dim2() -> HomBialgebra:
    # x is primitive, x^2 = 0, and alpha kills x; all thirteen axioms
    # hold even though alpha is not invertible.
    return HomBialgebra(
        dim=2,
        mul=Mat.from_entries(2, 4, [(0, 0, ONE)]),
        unit=Vec.basis(2, 0),
        alpha=Mat.from_rows([[1, 0], [0, 0]]),
        comul=Mat.from_entries(4, 2, [(0, 0, ONE), (1, 1, ONE), (2, 1, ONE)]),
        counit=Mat.from_rows([[1, 0]]),
        beta=Mat.identity(2),
        basis=("1", "x"),
    )


def build_all() -> dict:
    """Recompute every bundled fixture text, keyed by name."""
    texts = {}

    c2 = group_algebra(cyclic_group(2))
    texts["c2_classical"] = emit_structure(
        c2.bialgebra, antipode=c2.antipode, params={"antipode_k": 0}
    )

    c3 = group_algebra(cyclic_group(3))
    phi = linearize_element_map(3, (0, 2, 1))
    texts["c3_twist"] = emit_structure(
        yau_twist(c3.bialgebra, phi), antipode=phi, params={"antipode_k": 0}
    )

    two_dim = _example_2d_bialgebra()
    texts["example_2d"] = emit_structure(two_dim)
    texts["example_2dco"] = emit_structure(two_dim)
    texts["example_2dbi"] = emit_structure(
        two_dim, antipode=Mat.identity(2), params={"antipode_k": 0}
    )

    c4 = hom_group_algebra(twist_group(cyclic_group(4), (0, 3, 2, 1)))
    texts["homgroup_c4"] = emit_structure(
        c4.bialgebra, antipode=c4.antipode, params={"antipode_k": 0}
    )

    ix1 = hom_group_algebra(index_one_hom_group())
    texts["homgroup_index1"] = emit_structure(
        ix1.bialgebra, antipode=ix1.antipode, params={"antipode_k": 1}
    )

    texts["primitive_dim2"] = emit_structure(
        _primitive_dim2(),
        antipode=Mat.from_rows([[1, 0], [0, 0]]),
        params={"antipode_k": 0},
    )

    p = QParams()
    for bound in (2, 4):
        texts[f"qmatrix_d{bound}"] = emit_structure(
            to_hom_bialgebra(p, bound),
            params={"q": p.q, "lambda": p.lam, "degree": bound},
        )
    return texts


def fixture_path(name: str) -> Path:
    if name not in NAMES:
        raise KeyError(f"unknown fixture {name!r}; known: {', '.join(NAMES)}")
    return Path(str(resources.files(__package__) / f"{name}.json"))


def fixture_text(name: str) -> str:
    return fixture_path(name).read_text()
