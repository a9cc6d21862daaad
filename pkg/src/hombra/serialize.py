"""Structure-constant files.

JSON with every coefficient as an exact rational literal ("p" or "p/q",
never floats).  The multiplication table and the twist matrices are
dense; the coproduct is a per-basis list of [coef, i, j] triples since
it is sparse in every structure we ship.  The canonical byte form is
sorted-key compact JSON plus a trailing newline: emit always produces
it, so emit(parse(text)) == text exactly when text is canonical.
"""

import json
from dataclasses import dataclass, field
from typing import Optional

from .errors import ParseError
from .linalg import Mat, Vec
from .scalars import Scalar, format_scalar, parse_scalar
from .structures import HomBialgebra

REQUIRED_KEYS = (
    "dim", "basis", "scalars", "mul", "unit", "alpha", "comul", "counit", "beta",
)


@dataclass(frozen=True)
class ParsedStructure:
    bialgebra: HomBialgebra
    antipode: Optional[Mat] = None
    params: dict = field(default_factory=dict)


def _scalar(value, where: str) -> Scalar:
    if not isinstance(value, str):
        raise ParseError(f"{where}: expected a rational string, got {value!r}")
    try:
        return parse_scalar(value)
    except ZeroDivisionError:
        raise ParseError(f"{where}: division by zero in {value!r}") from None
    except ValueError:
        raise ParseError(f"{where}: not a rational literal: {value!r}") from None


def _string_row(value, n: int, where: str) -> list:
    if not isinstance(value, list) or len(value) != n:
        raise ParseError(f"{where}: expected {n} coefficient strings")
    return [_scalar(c, f"{where}[{i}]") for i, c in enumerate(value)]


def _matrix(value, n: int, where: str) -> Mat:
    if not isinstance(value, list) or len(value) != n:
        raise ParseError(f"{where}: expected {n} rows")
    return Mat.from_rows([_string_row(r, n, f"{where}[{i}]") for i, r in enumerate(value)])


def parse_structure(text: str) -> ParsedStructure:
    """Parse a structure file; raises ParseError on any defect."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(f"invalid JSON at line {e.lineno} column {e.colno}: {e.msg}") from None
    if not isinstance(doc, dict):
        raise ParseError("top level must be an object")
    missing = [k for k in REQUIRED_KEYS if k not in doc]
    if missing:
        raise ParseError(f"missing keys: {', '.join(missing)}")
    if doc["scalars"] != "rational":
        raise ParseError(f"scalars: only \"rational\" is supported, got {doc['scalars']!r}")
    n = doc["dim"]
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise ParseError(f"dim: expected a positive integer, got {n!r}")

    basis = doc["basis"]
    if (
        not isinstance(basis, list)
        or len(basis) != n
        or not all(isinstance(s, str) for s in basis)
    ):
        raise ParseError(f"basis: expected {n} names")

    mul_rows = doc["mul"]
    if not isinstance(mul_rows, list) or len(mul_rows) != n:
        raise ParseError(f"mul: expected {n} rows")
    mul_entries = []
    for i, row in enumerate(mul_rows):
        if not isinstance(row, list) or len(row) != n:
            raise ParseError(f"mul[{i}]: expected {n} cells")
        for j, cell in enumerate(row):
            coords = _string_row(cell, n, f"mul[{i}][{j}]")
            mul_entries.extend((r, i * n + j, c) for r, c in enumerate(coords) if c)

    comul_cols = doc["comul"]
    if not isinstance(comul_cols, list) or len(comul_cols) != n:
        raise ParseError(f"comul: expected {n} entries")
    comul_entries = []
    for s, triples in enumerate(comul_cols):
        if not isinstance(triples, list):
            raise ParseError(f"comul[{s}]: expected a list of [coef, i, j] triples")
        for t, triple in enumerate(triples):
            where = f"comul[{s}][{t}]"
            if not isinstance(triple, list) or len(triple) != 3:
                raise ParseError(f"{where}: expected a [coef, i, j] triple")
            coef = _scalar(triple[0], where)
            i, j = triple[1], triple[2]
            if not all(isinstance(x, int) and 0 <= x < n for x in (i, j)):
                raise ParseError(f"{where}: indices must lie in [0, {n})")
            comul_entries.append((i * n + j, s, coef))

    bial = HomBialgebra(
        dim=n,
        mul=Mat.from_entries(n, n * n, mul_entries),
        unit=Vec(_string_row(doc["unit"], n, "unit")),
        alpha=_matrix(doc["alpha"], n, "alpha"),
        comul=Mat.from_entries(n * n, n, comul_entries),
        counit=Mat.from_rows([_string_row(doc["counit"], n, "counit")]),
        beta=_matrix(doc["beta"], n, "beta"),
        basis=tuple(basis),
    )

    antipode = None
    if "antipode" in doc:
        antipode = _matrix(doc["antipode"], n, "antipode")

    params = {}
    if "params" in doc:
        if not isinstance(doc["params"], dict):
            raise ParseError("params: expected an object")
        for name, value in doc["params"].items():
            params[name] = _scalar(value, f"params[{name}]")

    return ParsedStructure(bial, antipode, params)


def _matrix_strings(m: Mat) -> list:
    return [[format_scalar(c) for c in row] for row in m.to_rows()]


def emit_structure(
    b: HomBialgebra, antipode: Optional[Mat] = None, params: Optional[dict] = None
) -> str:
    """Canonical text for a structure; inverse of parse_structure."""
    n = b.dim
    names = list(b.basis) if len(b.basis) == n else [f"e{i + 1}" for i in range(n)]
    comul = []
    for s in range(n):
        col = b.comul.col_dict(s)
        comul.append(
            [[format_scalar(c), r // n, r % n] for r, c in sorted(col.items())]
        )
    doc = {
        "dim": n,
        "basis": names,
        "scalars": "rational",
        "mul": [
            [
                [format_scalar(b.mul.entry(r, i * n + j)) for r in range(n)]
                for j in range(n)
            ]
            for i in range(n)
        ],
        "unit": [format_scalar(c) for c in b.unit],
        "alpha": _matrix_strings(b.alpha),
        "comul": comul,
        "counit": [format_scalar(b.counit.entry(0, i)) for i in range(n)],
        "beta": _matrix_strings(b.beta),
    }
    if antipode is not None:
        doc["antipode"] = _matrix_strings(antipode)
    if params:
        doc["params"] = {k: format_scalar(Scalar(v)) for k, v in sorted(params.items())}
    return json.dumps(doc, sort_keys=True, separators=(",", ":")) + "\n"
