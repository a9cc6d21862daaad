"""Degree-truncated quantum 2x2 matrices as a Hom-bialgebra.

The generators a, b, c, d satisfy the q-commutation relations

    ba = q ab    ca = q ac    db = q bd    dc = q cd    cb = bc
    da = ad - (1/q - q) bc

so the ordered monomials a^i b^j c^k d^l form a basis.  The twist scales
b by lambda and c by 1/lambda; it is an algebra and coalgebra map, and
the twisted structure applies it after the classical product and before
the classical coproduct.  Truncating at total degree D keeps a finite
model in which products that would exceed the bound are set to zero and
recorded, so axiom checks can be restricted to the honest range.
"""

from dataclasses import dataclass
from fractions import Fraction

from .errors import TruncationExceeded
from .linalg import Mat, Vec
from .scalars import ONE, ZERO, Scalar
from .structures import AxiomReport, HomBialgebra, check_axioms

Monomial = tuple[int, int, int, int]
QPoly = dict  # Monomial -> Scalar, zero-free

GENERATORS = ("a", "b", "c", "d")
_ORD = {"a": 0, "b": 1, "c": 2, "d": 3}


@dataclass(frozen=True)
class QParams:
    """Deformation parameter q and twist parameter lambda, both nonzero."""

    q: Scalar = Fraction(2)
    lam: Scalar = Fraction(3)

    def __post_init__(self) -> None:
        object.__setattr__(self, "q", Fraction(self.q))
        object.__setattr__(self, "lam", Fraction(self.lam))
        if not self.q:
            raise ValueError("q must be nonzero")
        if not self.lam:
            raise ValueError("lambda must be nonzero")


def _add(acc: dict, key, value: Scalar) -> None:
    total = acc.get(key, ZERO) + value
    if total:
        acc[key] = total
    else:
        acc.pop(key, None)


def _word(m: Monomial) -> tuple:
    return ("a",) * m[0] + ("b",) * m[1] + ("c",) * m[2] + ("d",) * m[3]


def _rules(p: QParams) -> dict:
    return {
        ("b", "a"): ((p.q, ("a", "b")),),
        ("c", "a"): ((p.q, ("a", "c")),),
        ("d", "b"): ((p.q, ("b", "d")),),
        ("d", "c"): ((p.q, ("c", "d")),),
        ("c", "b"): ((ONE, ("b", "c")),),
        ("d", "a"): ((ONE, ("a", "d")), (p.q - 1 / p.q, ("b", "c"))),
    }


def normal_form(word, p: QParams) -> QPoly:
    """Rewrite a word in the generators into ordered-monomial form."""
    letters = tuple(word)
    for ch in letters:
        if ch not in _ORD:
            raise ValueError(f"unknown generator {ch!r}")
    rules = _rules(p)
    pending = {letters: ONE}
    out: QPoly = {}
    while pending:
        w, c = pending.popitem()
        spot = next(
            (i for i in range(len(w) - 1) if _ORD[w[i]] > _ORD[w[i + 1]]), None
        )
        if spot is None:
            m = (w.count("a"), w.count("b"), w.count("c"), w.count("d"))
            _add(out, m, c)
            continue
        for rc, repl in rules[w[spot], w[spot + 1]]:
            _add(pending, w[:spot] + repl + w[spot + 2 :], c * rc)
    return out


def degree(x: QPoly) -> int:
    return max((sum(m) for m in x), default=0)


def _mul_classical(x: QPoly, y: QPoly, p: QParams) -> QPoly:
    out: QPoly = {}
    for m1, c1 in x.items():
        for m2, c2 in y.items():
            for m, c in normal_form(_word(m1) + _word(m2), p).items():
                _add(out, m, c1 * c2 * c)
    return out


def alpha_map(x: QPoly, p: QParams) -> QPoly:
    """Diagonal twist: scales each monomial by lambda^(deg_b - deg_c)."""
    return {m: c * p.lam ** (m[1] - m[2]) for m, c in x.items()}


def multiply(x: QPoly, y: QPoly, p: QParams, bound: int) -> QPoly:
    """Twisted product: twist applied to the classical product."""
    total = degree(x) + degree(y)
    if total > bound:
        raise TruncationExceeded(f"product degree {total} exceeds bound {bound}")
    return alpha_map(_mul_classical(x, y, p), p)


def counit(x: QPoly) -> Scalar:
    """Sends a and d to 1, b and c to 0."""
    return sum((c for m, c in x.items() if m[1] == 0 and m[2] == 0), ZERO)


_GEN_COPRODUCT = {
    "a": {((1, 0, 0, 0), (1, 0, 0, 0)): ONE, ((0, 1, 0, 0), (0, 0, 1, 0)): ONE},
    "b": {((1, 0, 0, 0), (0, 1, 0, 0)): ONE, ((0, 1, 0, 0), (0, 0, 0, 1)): ONE},
    "c": {((0, 0, 1, 0), (1, 0, 0, 0)): ONE, ((0, 0, 0, 1), (0, 0, 1, 0)): ONE},
    "d": {((0, 0, 1, 0), (0, 1, 0, 0)): ONE, ((0, 0, 0, 1), (0, 0, 0, 1)): ONE},
}


def _t2_mul(s: dict, t: dict, p: QParams) -> dict:
    out: dict = {}
    for (u1, u2), cs in s.items():
        for (v1, v2), ct in t.items():
            left = normal_form(_word(u1) + _word(v1), p)
            right = normal_form(_word(u2) + _word(v2), p)
            for m1, c1 in left.items():
                for m2, c2 in right.items():
                    _add(out, (m1, m2), cs * ct * c1 * c2)
    return out


def _comul_classical(m: Monomial, p: QParams) -> dict:
    acc = {((0, 0, 0, 0), (0, 0, 0, 0)): ONE}
    for ch in _word(m):
        acc = _t2_mul(acc, _GEN_COPRODUCT[ch], p)
    return acc


def coproduct(x: QPoly, p: QParams, bound: int) -> dict:
    """Twisted coproduct: classical coproduct of the twisted argument.

    Returns a dict mapping monomial pairs to coefficients.  Both legs of
    every pair have the degree of the source monomial, so no truncation
    happens here; the bound only guards the input.
    """
    if degree(x) > bound:
        raise TruncationExceeded(f"degree {degree(x)} exceeds bound {bound}")
    out: dict = {}
    for m, cm in alpha_map(x, p).items():
        for pair, c in _comul_classical(m, p).items():
            _add(out, pair, cm * c)
    return out


def quantum_determinant(p: QParams) -> QPoly:
    """ad - (1/q) bc; group-like and fixed by the twist."""
    return {(1, 0, 0, 1): ONE, (0, 1, 1, 0): -1 / p.q}


def monomial_basis(bound: int) -> tuple:
    monos = [
        (i, j, k, l)
        for i in range(bound + 1)
        for j in range(bound + 1)
        for k in range(bound + 1)
        for l in range(bound + 1)
        if i + j + k + l <= bound
    ]
    monos.sort(key=lambda m: (sum(m), tuple(-e for e in m)))
    return tuple(monos)


def monomial_name(m: Monomial) -> str:
    if not any(m):
        return "1"
    parts = []
    for g, e in zip(GENERATORS, m):
        if e == 1:
            parts.append(g)
        elif e > 1:
            parts.append(f"{g}^{e}")
    return "*".join(parts)


@dataclass(frozen=True)
class QMatrixModel:
    """Finite truncation together with the product pairs it dropped."""

    params: QParams
    bound: int
    monomials: tuple
    bialgebra: HomBialgebra
    truncated: frozenset

    def admit(self, at: tuple) -> bool:
        """Whether a basis-index tuple stays within the degree bound."""
        return sum(sum(self.monomials[i]) for i in at) <= self.bound

    def check_restricted(self) -> AxiomReport:
        report = check_axioms(self.bialgebra, admit=self.admit)
        return report.with_note(
            f"restricted to tuples of total degree <= {self.bound}"
        )

    def vector(self, x: QPoly) -> Vec:
        index = {m: i for i, m in enumerate(self.monomials)}
        entries = [ZERO] * len(self.monomials)
        for m, c in x.items():
            if m not in index:
                raise TruncationExceeded(
                    f"monomial of degree {sum(m)} exceeds bound {self.bound}"
                )
            entries[index[m]] = c
        return Vec(entries)


def build_model(p: QParams, bound: int) -> QMatrixModel:
    """Truncated model on the monomials of total degree at most bound."""
    if bound < 2:
        raise ValueError("degree bound must be at least 2")
    basis = monomial_basis(bound)
    n = len(basis)
    index = {m: i for i, m in enumerate(basis)}
    degs = [sum(m) for m in basis]

    mul_entries = []
    truncated = set()
    for i, mi in enumerate(basis):
        for j, mj in enumerate(basis):
            if degs[i] + degs[j] > bound:
                truncated.add((i, j))
                continue
            prod = multiply({mi: ONE}, {mj: ONE}, p, bound)
            mul_entries.extend((index[m], i * n + j, c) for m, c in prod.items())

    comul_entries = []
    for i, mi in enumerate(basis):
        for (m1, m2), c in coproduct({mi: ONE}, p, bound).items():
            comul_entries.append((index[m1] * n + index[m2], i, c))

    alpha = Mat.from_entries(
        n, n, ((i, i, p.lam ** (m[1] - m[2])) for i, m in enumerate(basis))
    )
    bial = HomBialgebra(
        dim=n,
        mul=Mat.from_entries(n, n * n, mul_entries),
        unit=Vec.basis(n, 0),
        alpha=alpha,
        comul=Mat.from_entries(n * n, n, comul_entries),
        counit=Mat.from_entries(
            1, n, ((0, i, ONE) for i, m in enumerate(basis) if m[1] == 0 and m[2] == 0)
        ),
        beta=alpha,
        basis=tuple(monomial_name(m) for m in basis),
    )
    return QMatrixModel(p, bound, basis, bial, frozenset(truncated))


def to_hom_bialgebra(p: QParams, bound: int) -> HomBialgebra:
    return build_model(p, bound).bialgebra
