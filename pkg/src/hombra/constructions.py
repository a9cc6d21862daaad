"""Builders that produce Hom-structures from known-correct ingredients.

Finite groups give classical group algebras; twisting a group by one of its
automorphisms gives a Hom-group whose linearization is a Hom-Hopf candidate
with computable invertibility indices; twisting a classical bialgebra by an
endomorphism gives a Hom-bialgebra; tensoring two candidates gives another.
Every builder validates its precondition by brute force and raises
HypothesisFailed instead of emitting a structure it cannot vouch for.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Sequence

from .errors import HypothesisFailed
from .linalg import Mat, Vec, kron, swap_map
from .scalars import ONE
from .structures import HomBialgebra, HomHopfCandidate, is_hom_bialgebra_morphism


@dataclass(frozen=True)
class Group:
    """Finite group: ordered element names plus a multiplication table.

    table[i][j] is the index of elements[i] * elements[j].  Construction
    verifies the group laws, so downstream code can trust any instance.
    """

    elements: tuple[str, ...]
    table: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        n = len(self.elements)
        t = self.table
        if len(t) != n or any(len(row) != n for row in t):
            raise ValueError("table shape does not match the element list")
        if any(not 0 <= x < n for row in t for x in row):
            raise ValueError("table entry out of range")
        if self._find_identity() is None:
            raise ValueError("no identity element")
        e = self._find_identity()
        for a in range(n):
            if all(t[a][b] != e for b in range(n)):
                raise ValueError(f"element {self.elements[a]} has no inverse")
        for a, b, c in itertools.product(range(n), repeat=3):
            if t[t[a][b]][c] != t[a][t[b][c]]:
                raise ValueError("multiplication table is not associative")

    def _find_identity(self):
        n = len(self.elements)
        for e in range(n):
            if all(self.table[e][j] == j and self.table[j][e] == j for j in range(n)):
                return e
        return None

    @property
    def identity(self) -> int:
        return self._find_identity()

    @property
    def inverse(self) -> tuple[int, ...]:
        e = self.identity
        return tuple(
            next(b for b in range(len(self.elements)) if self.table[a][b] == e)
            for a in range(len(self.elements))
        )


def cyclic_group(n: int) -> Group:
    if n < 1:
        raise ValueError("order must be positive")
    names = tuple("1" if i == 0 else "g" if i == 1 else f"g^{i}" for i in range(n))
    table = tuple(tuple((i + j) % n for j in range(n)) for i in range(n))
    return Group(names, table)


def symmetric_group_3() -> Group:
    perms = sorted(itertools.permutations(range(3)))
    names = tuple("".join(map(str, p)) for p in perms)
    table = tuple(
        tuple(perms.index(tuple(p[q[x]] for x in range(3))) for q in perms)
        for p in perms
    )
    return Group(names, table)


def direct_product(g: Group, h: Group) -> Group:
    nh = len(h.elements)
    names = tuple(f"({x},{y})" for x in g.elements for y in h.elements)
    table = tuple(
        tuple(
            g.table[i1][i2] * nh + h.table[j1][j2]
            for i2 in range(len(g.elements))
            for j2 in range(nh)
        )
        for i1 in range(len(g.elements))
        for j1 in range(nh)
    )
    return Group(names, table)


def _is_endomorphism(g: Group, f: Sequence[int]) -> bool:
    n = len(g.elements)
    t = g.table
    return all(f[t[i][j]] == t[f[i]][f[j]] for i in range(n) for j in range(n))


def group_endomorphisms(g: Group) -> tuple[tuple[int, ...], ...]:
    """All self-maps compatible with the table, by exhaustive search.

    Fine for the orders used here (<= 6: at most 6^6 candidates, and almost
    all die on the first table check)."""
    n = len(g.elements)
    return tuple(
        f
        for f in itertools.product(range(n), repeat=n)
        if _is_endomorphism(g, f)
    )


@dataclass(frozen=True)
class HomGroup:
    """Group-like set with a twist: a*b need not be associative on the nose,
    only up to alpha, and inverses may need alpha applied a few times before
    the product reaches the unit.  index[a] records how many times."""

    elements: tuple[str, ...]
    table: tuple[tuple[int, ...], ...]
    alpha: tuple[int, ...]
    unit: int
    inv: tuple[int, ...]
    index: tuple[int, ...]

    def __post_init__(self):
        n = len(self.elements)
        if len(self.table) != n or any(len(row) != n for row in self.table):
            raise ValueError("table shape does not match the element list")
        for name, field in (("alpha", self.alpha), ("inv", self.inv), ("index", self.index)):
            if len(field) != n:
                raise ValueError(f"{name} has wrong length")
        if not 0 <= self.unit < n:
            raise ValueError("unit index out of range")


def validate_hom_group(hg: HomGroup) -> None:
    """Brute-force all HomGroup laws; raise HypothesisFailed listing every
    violated one.  index[a] must be the exact invertibility index, not just
    some exponent that happens to work."""
    n = len(hg.elements)
    t, al, e = hg.table, hg.alpha, hg.unit
    problems = []
    bad = next(
        (
            (a, b, c)
            for a, b, c in itertools.product(range(n), repeat=3)
            if t[al[a]][t[b][c]] != t[t[a][b]][al[c]]
        ),
        None,
    )
    if bad is not None:
        problems.append(f"hom-associativity fails at {bad}")
    bad = next(
        (a for a in range(n) if t[a][e] != al[a] or t[e][a] != al[a]), None
    )
    if bad is not None:
        problems.append(f"unit law fails at element {bad}")
    if al[e] != e:
        problems.append("twist moves the unit")
    for a in range(n):
        x, y = t[a][hg.inv[a]], t[hg.inv[a]][a]
        found = None
        for k in range(n + 1):
            if x == e and y == e:
                found = k
                break
            x, y = al[x], al[y]
        if found is None:
            problems.append(f"element {a} has no invertibility exponent")
        elif found != hg.index[a]:
            problems.append(
                f"invertibility index of element {a} is {found}, not {hg.index[a]}"
            )
    bad = next((a for a in range(n) if al[hg.inv[a]] != hg.inv[al[a]]), None)
    if bad is not None:
        problems.append(f"twist and inverse do not commute at element {bad}")
    if problems:
        raise HypothesisFailed("; ".join(problems))


def twist_group(g: Group, phi: Sequence[int]) -> HomGroup:
    """Deform a group by an automorphism: a*b = phi(ab), twist = phi.

    Group inverses survive unchanged and every invertibility index is 0,
    since a * a^{-1} = phi(1) = 1 already."""
    n = len(g.elements)
    f = tuple(phi)
    if len(f) != n or sorted(f) != list(range(n)) or not _is_endomorphism(g, f):
        raise HypothesisFailed("the twist must be a group automorphism")
    table = tuple(tuple(f[g.table[i][j]] for j in range(n)) for i in range(n))
    hg = HomGroup(g.elements, table, f, g.identity, g.inverse, (0,) * n)
    validate_hom_group(hg)
    return hg


def index_one_hom_group() -> HomGroup:
    """Smallest Hom-group whose non-unit element needs one application of
    the twist before meeting its inverse: g*g = g, but alpha sends
    everything to the unit."""
    return HomGroup(("1", "g"), ((0, 0), (0, 1)), (0, 0), 0, (0, 1), (0, 1))


def linearize_element_map(n: int, f: Sequence[int]) -> Mat:
    return Mat.from_entries(n, n, ((f[j], j, ONE) for j in range(n)))


def hom_group_algebra(hg: HomGroup, twisted_comul: bool = False) -> HomHopfCandidate:
    """Span the Hom-group: products from the table, alpha linearized,
    every element group-like, antipode from the inverse map.

    Default comultiplication is g -> g (x) g with untwisted coalgebra side;
    twisted_comul switches to g -> alpha(g) (x) alpha(g) with beta = alpha."""
    validate_hom_group(hg)
    n = len(hg.elements)
    mul = Mat(
        n, n * n, [{hg.table[i][j]: ONE} for i in range(n) for j in range(n)]
    )
    alpha = linearize_element_map(n, hg.alpha)
    leg = hg.alpha if twisted_comul else tuple(range(n))
    comul = Mat(n * n, n, [{leg[i] * n + leg[i]: ONE} for i in range(n)])
    counit = Mat(1, n, [{0: ONE} for _ in range(n)])
    beta = alpha if twisted_comul else Mat.identity(n)
    bial = HomBialgebra(
        n, mul, Vec.basis(n, hg.unit), alpha, comul, counit, beta, hg.elements
    )
    return HomHopfCandidate(bial, linearize_element_map(n, hg.inv))


def group_algebra(g: Group) -> HomHopfCandidate:
    """Classical group algebra as the trivially twisted Hom-group algebra."""
    n = len(g.elements)
    hg = HomGroup(
        g.elements, g.table, tuple(range(n)), g.identity, g.inverse, (0,) * n
    )
    return hom_group_algebra(hg)


def trivial_hopf() -> HomHopfCandidate:
    return group_algebra(cyclic_group(1))


def yau_twist(b: HomBialgebra, phi: Mat) -> HomBialgebra:
    """Twist a classical bialgebra by an endomorphism phi: the new product
    is phi o mul, the new coproduct comul o phi, and both twists are phi."""
    n = b.dim
    ident = Mat.identity(n)
    if b.alpha != ident or b.beta != ident:
        raise HypothesisFailed("input twists are not the identity")
    rep = is_hom_bialgebra_morphism(phi, b, b)
    if not rep.passed():
        bad = ", ".join(entry.name for entry in rep.failures())
        raise HypothesisFailed(
            f"the twisting map is not a bialgebra endomorphism ({bad})"
        )
    return HomBialgebra(
        n, phi @ b.mul, b.unit, phi, b.comul @ phi, b.counit, phi, b.basis
    )


def tensor_hopf(h: HomHopfCandidate, k: HomHopfCandidate) -> HomHopfCandidate:
    """Componentwise tensor of two candidates on the row-major pair basis.

    The product needs the middle factors exchanged first; regroup sends
    (x1 (x) y1) (x) (x2 (x) y2) to (x1 (x) x2) (x) (y1 (x) y2) and ungroup
    is its inverse, used on the coproduct side."""
    bh, bk = h.bialgebra, k.bialgebra
    nh, nk = bh.dim, bk.dim
    regroup = kron(Mat.identity(nh), kron(swap_map(nk, nh), Mat.identity(nk)))
    ungroup = kron(Mat.identity(nh), kron(swap_map(nh, nk), Mat.identity(nk)))
    basis = tuple(f"{x}*{y}" for x in bh.basis for y in bk.basis)
    bial = HomBialgebra(
        nh * nk,
        kron(bh.mul, bk.mul) @ regroup,
        bh.unit.kron(bk.unit),
        kron(bh.alpha, bk.alpha),
        ungroup @ kron(bh.comul, bk.comul),
        kron(bh.counit, bk.counit),
        kron(bh.beta, bk.beta),
        basis,
    )
    return HomHopfCandidate(bial, kron(h.antipode, k.antipode))
