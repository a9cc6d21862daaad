"""Report assembly: one schema-stable dict, JSON and text renderings.

The machine form is sorted-key JSON with every coefficient as a rational
string, so two runs over the same input produce identical bytes.  The
text form is an aligned table carrying the same verdicts.
"""

import json
from fractions import Fraction
from typing import Optional

from .scalars import format_scalar
from .structures import AxiomCheck, AxiomReport, FlagSet, HomBialgebra, Witness


def _jsonable(value):
    if isinstance(value, Fraction):
        return format_scalar(value)
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    if isinstance(value, dict):
        return {str(k): _jsonable(v) for k, v in value.items()}
    return value


def witness_to_json(w: Witness) -> dict:
    return {
        "at": list(w.at),
        "lhs": [format_scalar(c) for c in w.lhs],
        "rhs": [format_scalar(c) for c in w.rhs],
    }


def axiom_to_json(e: AxiomCheck) -> dict:
    out = {"name": e.name, "verdict": "Pass" if e.passed else "Fail"}
    if e.witness is not None:
        out["witness"] = witness_to_json(e.witness)
    if e.note is not None:
        out["note"] = e.note
    if e.detail is not None:
        out["detail"] = _jsonable(e.detail)
    return out


def structure_to_json(b: HomBialgebra, kind: str) -> dict:
    names = list(b.basis) if len(b.basis) == b.dim else [f"e{i + 1}" for i in range(b.dim)]
    return {"dim": b.dim, "kind": kind, "basis": names}


def flags_to_json(flags: FlagSet) -> dict:
    return dict(flags.as_dict())


def antipode_to_json(
    source: Optional[str],
    strict: Optional[AxiomReport],
    relative: Optional[AxiomReport],
) -> dict:
    out = {"source": source, "strict": None, "relative": None}
    if strict is not None:
        out["strict"] = {
            "passed": strict.passed(),
            "checks": [axiom_to_json(e) for e in strict],
        }
    if relative is not None:
        inv = relative.entry("relative-inverse")
        out["relative"] = {
            "a": relative.entry("commutes-with-alpha").passed,
            "b": relative.entry("preserves-unit").passed
            and relative.entry("preserves-counit").passed,
            "c": inv.passed,
            "k_uniform": inv.detail["k_uniform"],
            "k_per_basis": _jsonable(inv.detail["k_per_basis"]),
            "passed": relative.passed(),
            "checks": [axiom_to_json(e) for e in relative],
        }
    return out


def proposition_to_json(v) -> dict:
    out = {
        "name": v.name,
        "hypotheses_met": dict(v.hypotheses_met),
        "min_exponent": v.min_exponent,
    }
    if v.witness is not None:
        out["witness"] = witness_to_json(v.witness)
    if v.strict is not None:
        out["strict"] = v.strict
    if v.detail is not None:
        out["detail"] = _jsonable(v.detail)
    return out


def assemble(
    structure: dict,
    flags: dict,
    axioms: Optional[list] = None,
    antipode: Optional[dict] = None,
    propositions: Optional[list] = None,
) -> dict:
    return {
        "structure": structure,
        "flags": flags,
        "axioms": axioms,
        "antipode": antipode,
        "propositions": propositions,
    }


def to_json(doc: dict) -> str:
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


# ------------------------------------------------------------------ text


def _witness_text(w: dict) -> str:
    at = ",".join(str(i) for i in w["at"])
    return f"at ({at}): lhs [{' '.join(w['lhs'])}] rhs [{' '.join(w['rhs'])}]"


def _check_lines(checks: list, indent: str, width: int) -> list:
    lines = []
    for e in checks:
        line = f"{indent}{e['name']:<{width}} {e['verdict']}"
        if "witness" in e:
            line += "  " + _witness_text(e["witness"])
        if "note" in e:
            line += f"  ({e['note']})"
        lines.append(line)
    return lines


def to_text(doc: dict) -> str:
    s = doc["structure"]
    lines = [
        f"structure  dim={s['dim']}  kind={s['kind']}  basis: {' '.join(s['basis'])}"
    ]
    flags = doc["flags"]
    lines.append(
        "flags      " + " ".join(f"{k}={'yes' if v else 'no'}" for k, v in sorted(flags.items()))
    )
    width = 28
    if doc["axioms"] is not None:
        lines.append("axioms")
        lines += _check_lines(doc["axioms"], "  ", width)
    ant = doc["antipode"]
    if ant is not None:
        lines.append(f"antipode   source={ant['source']}")
        if ant["strict"] is not None:
            lines.append(f"  strict   {'Pass' if ant['strict']['passed'] else 'Fail'}")
            lines += _check_lines(ant["strict"]["checks"], "    ", width)
        if ant["relative"] is not None:
            rel = ant["relative"]
            lines.append(
                f"  relative {'Pass' if rel['passed'] else 'Fail'}"
                f"  k_uniform={rel['k_uniform']}"
                f"  k_per_basis={rel['k_per_basis']}"
            )
            lines += _check_lines(rel["checks"], "    ", width)
    if doc["propositions"] is not None:
        lines.append("propositions")
        for p in doc["propositions"]:
            hyp = " ".join(
                f"{k}={'yes' if v else 'no'}" for k, v in sorted(p["hypotheses_met"].items())
            )
            line = f"  {p['name']:<{width}} k={p['min_exponent']}"
            if "strict" in p:
                line += f"  strict={'Pass' if p['strict'] else 'Fail'}"
            if hyp:
                line += f"  hypotheses: {hyp}"
            if "witness" in p:
                line += "  " + _witness_text(p["witness"])
            lines.append(line)
    return "\n".join(lines) + "\n"
