"""Structured verification outcomes and their serialization."""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Iterable

from .exact import CertifiedReal

SCHEMA_VERSION = 1


class Verdict(enum.Enum):
    VERIFIED = "Verified"
    COUNTEREXAMPLE = "CounterexampleFound"
    MISMATCH = "Mismatch"
    UNDECIDED = "Undecided"

    @property
    def severity(self) -> int:
        return _SEVERITY[self]

    @property
    def exit_code(self) -> int:
        return _EXIT[self]


_SEVERITY = {
    Verdict.VERIFIED: 0,
    Verdict.UNDECIDED: 1,
    Verdict.MISMATCH: 2,
    Verdict.COUNTEREXAMPLE: 2,
}
_EXIT = {
    Verdict.VERIFIED: 0,
    Verdict.UNDECIDED: 2,
    Verdict.MISMATCH: 1,
    Verdict.COUNTEREXAMPLE: 1,
}


def worst(verdicts: Iterable[Verdict]) -> Verdict:
    """Most severe verdict; a definite failure outranks Undecided."""
    result = Verdict.VERIFIED
    for v in verdicts:
        if v.severity > result.severity:
            result = v
    return result


def format_decimal(x: Fraction, digits: int = 10, upward: bool = False) -> str:
    """Decimal string of ``x`` rounded in the given direction to ``digits`` significant digits."""
    x = Fraction(x)
    if x == 0:
        return "0"
    if x.denominator == 1 and len(str(abs(x.numerator))) <= digits:
        return str(x.numerator)
    if abs(x) >= 1:
        mag = len(str(abs(x.numerator) // x.denominator))
    else:
        # minus the number of zeros right after the point
        mag = 0
        y = abs(x)
        while y < Fraction(1, 10):
            y *= 10
            mag -= 1
    places = digits - mag
    scaled = x * Fraction(10) ** places
    q = -((-scaled.numerator) // scaled.denominator) if upward else scaled.numerator // scaled.denominator
    if places <= 0:
        return str(q * 10 ** (-places))
    sign = "-" if q < 0 else ""
    s = str(abs(q)).rjust(places + 1, "0")
    head, tail = s[:-places], s[-places:].rstrip("0")
    return f"{sign}{head}.{tail}" if tail else f"{sign}{head}"


def enclosure_json(x: CertifiedReal) -> dict[str, Any]:
    if x.is_exact:
        value = x.lo
        text = str(value.numerator) if value.denominator == 1 else f"{value.numerator}/{value.denominator}"
        return {"exact": True, "value": text, "decimal": format_decimal(value)}
    return {"exact": False, "lo": format_decimal(x.lo), "hi": format_decimal(x.hi, upward=True)}


def format_enclosure(x: CertifiedReal) -> str:
    """Human form: ``[lo, hi]`` outward-truncated at 10 digits, ``=v (exact)`` for points."""
    if x.is_exact:
        v = x.lo
        if v.denominator == 1:
            return f"{v.numerator} (exact)"
        return f"{v.numerator}/{v.denominator} = {format_decimal(v)}... (exact)"
    return f"[{format_decimal(x.lo)}, {format_decimal(x.hi, upward=True)}]"


def jsonable(obj: Any) -> Any:
    """Convert witnesses and inputs to plain JSON types."""
    if isinstance(obj, CertifiedReal):
        return enclosure_json(obj)
    if isinstance(obj, Fraction):
        return str(obj.numerator) if obj.denominator == 1 else f"{obj.numerator}/{obj.denominator}"
    if isinstance(obj, enum.Enum):
        return obj.value
    if isinstance(obj, dict):
        return {str(k): jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple, set, frozenset)):
        items = [jsonable(v) for v in obj]
        if isinstance(obj, (set, frozenset)):
            items.sort(key=lambda v: (str(type(v)), v if isinstance(v, (int, str)) else str(v)))
        return items
    if isinstance(obj, bool) or obj is None or isinstance(obj, (int, str, float)):
        return obj
    return str(obj)


@dataclass
class VerificationReport:
    statement_id: str
    inputs: dict[str, Any]
    verdict: Verdict
    witnesses: list[dict[str, Any]] = field(default_factory=list)
    precision_used: int = 0

    def __post_init__(self):
        if self.verdict in (Verdict.COUNTEREXAMPLE, Verdict.MISMATCH) and not self.witnesses:
            raise ValueError(f"{self.statement_id}: {self.verdict.value} needs a witness")

    @property
    def ok(self) -> bool:
        return self.verdict is Verdict.VERIFIED

    def to_dict(self) -> dict[str, Any]:
        return {
            "statement_id": self.statement_id,
            "inputs": jsonable(self.inputs),
            "verdict": self.verdict.value,
            "witnesses": jsonable(self.witnesses),
            "precision_used": self.precision_used,
        }

    def to_json(self) -> str:
        return dumps(self.to_dict())


def dumps(data: Any) -> str:
    return json.dumps(data, indent=2, sort_keys=True, ensure_ascii=False)


def bundle(reports: list[VerificationReport], command: str) -> dict[str, Any]:
    return {
        "schema_version": SCHEMA_VERSION,
        "command": command,
        "verdict": worst(r.verdict for r in reports).value,
        "reports": [r.to_dict() for r in reports],
    }
