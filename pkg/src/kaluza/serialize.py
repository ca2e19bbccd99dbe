"""JSON codecs for tables, reports, and measure specs.

Fractions travel as strings "p/q", reduced, with an explicit
denominator on output ("3" is accepted on input, "3/1" is what we
write).  Table entries are emitted in canonical graded-lex order, so
serialization is byte-deterministic.
"""

from __future__ import annotations

import json
import re
from fractions import Fraction
from typing import Any, Optional, Sequence, Union

from .checks import CheckReport, Violation
from .kernels import CertReport, coeffs_from_norms
from .moments import AtomicMeasureD, Measure1D
from .series import DEFAULT_GUARD, CoeffTable
from .monoid import index_set

_FRACTION_RE = re.compile(r"-?\d+(/\d+)?")


def parse_fraction(x: Union[str, int]) -> Fraction:
    """Read "p/q" or "p" (or a bare JSON integer) as an exact rational."""
    if isinstance(x, bool):
        raise ValueError(f"not a rational value: {x!r}")
    if isinstance(x, int):
        return Fraction(x)
    if not isinstance(x, str) or not _FRACTION_RE.fullmatch(x):
        raise ValueError(f'not a rational value: {x!r} (expected "p/q" or "p")')
    try:
        return Fraction(x)
    except ZeroDivisionError:
        raise ValueError(f"zero denominator in {x!r}") from None


def format_fraction(v: Fraction) -> str:
    return f"{v.numerator}/{v.denominator}"


def _idx_list(a: Sequence[int]) -> list[int]:
    return list(a)


def table_to_doc(t: CoeffTable) -> dict:
    return {
        "kind": t.index_set.kind,
        "dim": t.index_set.dim,
        "max_degree": t.max_degree,
        "entries": [
            {"idx": _idx_list(a), "val": format_fraction(v)} for a, v in t.entries()
        ],
    }


def table_from_doc(doc: dict, guard: int = DEFAULT_GUARD) -> CoeffTable:
    """Parse a table document.

    Entries must cover every index of degree <= max_degree, unless the
    document carries a "default" value to fill the gaps (handy for
    sparse inputs like ratio tables that are 1 almost everywhere).
    """
    if not isinstance(doc, dict):
        raise ValueError("table document must be a JSON object")
    try:
        kind = doc["kind"]
        dim = doc["dim"]
        max_degree = doc["max_degree"]
        entries = doc["entries"]
    except KeyError as miss:
        raise ValueError(f"table document lacks key {miss}") from None
    if not isinstance(dim, int) or not isinstance(max_degree, int):
        raise ValueError("dim and max_degree must be integers")
    M = index_set(kind, dim)
    if not isinstance(entries, list):
        raise ValueError("entries must be a list")
    mapping: dict = {}
    for e in entries:
        try:
            raw_idx, raw_val = e["idx"], e["val"]
        except (TypeError, KeyError):
            raise ValueError(f"bad entry {e!r}") from None
        w = M.validate(raw_idx)
        if w in mapping:
            raise ValueError(f"duplicate entry at {list(w)}")
        mapping[w] = parse_fraction(raw_val)
    if "default" in doc:
        return CoeffTable.from_mapping(
            M, max_degree, mapping, default=parse_fraction(doc["default"]), guard=guard
        )
    total = M.total_count(max_degree)
    if len(mapping) != total:
        raise ValueError(
            f"table document has {len(mapping)} entries, needs all {total} "
            f'indices of degree <= {max_degree} (or a "default" value)'
        )
    return CoeffTable.from_mapping(M, max_degree, mapping, guard=guard)


def violation_to_doc(v: Violation) -> dict:
    return {
        "cond": v.cond,
        "at": [_idx_list(a) for a in v.at],
        "lhs": format_fraction(v.lhs),
        "rhs": format_fraction(v.rhs),
    }


def check_report_to_doc(r: CheckReport) -> dict:
    return {
        "passed": r.passed,
        "checked_degree": r.checked_degree,
        "violations": [violation_to_doc(v) for v in r.violations],
    }


def _pointed_value(p: Optional[tuple]) -> Optional[dict]:
    if p is None:
        return None
    a, v = p
    return {"idx": _idx_list(a), "val": format_fraction(v)}


def cert_report_to_doc(r: CertReport) -> dict:
    return {
        "verdict": r.verdict,
        "checked_degree": r.checked_degree,
        "thm1": check_report_to_doc(r.thm1),
        "thm2": check_report_to_doc(r.thm2),
        "q_min": _pointed_value(r.q_min),
        "witness": _pointed_value(r.witness),
        "dbr_b": None if r.dbr_b is None else table_to_doc(r.dbr_b),
    }


def norms_table_from_doc(doc: dict, guard: int = DEFAULT_GUARD) -> CoeffTable:
    """Read kernel data: either squared norms (inverted) or coefficients."""
    if not isinstance(doc, dict) or "kind" not in doc:
        raise ValueError("norm document must be a JSON object with a kind")
    kind = doc["kind"]
    if kind not in ("squared_norms", "coeffs", "multiindex"):
        raise ValueError(f"unknown norm document kind {kind!r}")
    table = table_from_doc({**doc, "kind": "multiindex"}, guard=guard)
    if kind == "squared_norms":
        return coeffs_from_norms(table)
    return table


def measure_from_doc(doc: dict) -> Union[list[Measure1D], AtomicMeasureD]:
    """Parse a measure spec: product axes or a d-dimensional atomic list."""
    if not isinstance(doc, dict):
        raise ValueError("measure document must be a JSON object")
    has_axes = "axes" in doc
    has_atoms = "atomsD" in doc
    if has_axes == has_atoms:
        raise ValueError('measure document needs exactly one of "axes" or "atomsD"')
    if has_axes:
        out = []
        for axis in doc["axes"]:
            kind = axis.get("kind")
            if kind == "lebesgue":
                out.append(Measure1D.lebesgue())
            elif kind == "atomic":
                out.append(
                    Measure1D.atomic(
                        [
                            (parse_fraction(a["t"]), parse_fraction(a["w"]))
                            for a in axis["atoms"]
                        ]
                    )
                )
            else:
                raise ValueError(f"unknown axis kind {kind!r}")
        return out
    return AtomicMeasureD.build(
        [
            (
                [parse_fraction(x) for x in atom["t"]],
                parse_fraction(atom["w"]),
            )
            for atom in doc["atomsD"]
        ]
    )


def sequence_from_doc(doc: dict) -> list[Fraction]:
    """A scalar sequence: {"sequence": [...]} or a dim-1 multi-index table."""
    if isinstance(doc, dict) and "sequence" in doc:
        seq = doc["sequence"]
        if not isinstance(seq, list) or not seq:
            raise ValueError('"sequence" must be a non-empty list')
        return [parse_fraction(x) for x in seq]
    table = table_from_doc(doc)
    if table.index_set.kind != "multiindex" or table.index_set.dim != 1:
        raise ValueError("scalar checks need a sequence or a dim-1 table")
    return [table[(n,)] for n in range(table.max_degree + 1)]


def dumps(doc: Any) -> str:
    """Compact deterministic rendering, matching the service's wire format."""
    return json.dumps(doc, ensure_ascii=False, allow_nan=False, separators=(",", ":"))
