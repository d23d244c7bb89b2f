"""Check reports: a verdict plus the basis tuples where an identity fails."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Iterable, Mapping

import numpy as np

from .fields import format_scalar

MAX_WITNESSES = 10


@dataclass(frozen=True)
class Witness:
    """A failing basis tuple (1-based, like e1..en) and its nonzero residual."""

    indices: tuple[int, ...]
    residual: tuple
    condition: str = ""

    def describe(self) -> str:
        idx = "(" + ",".join(map(str, self.indices)) + ")"
        vec = "[" + ", ".join(format_scalar(v) for v in self.residual) + "]"
        tag = f"{self.condition} " if self.condition else ""
        return f"{tag}{idx} residual {vec}"

    def to_dict(self) -> dict:
        return {
            "condition": self.condition,
            "indices": list(self.indices),
            "residual": [format_scalar(v) for v in self.residual],
        }


@dataclass(frozen=True)
class CheckReport:
    property: str
    passed: bool
    witnesses: tuple[Witness, ...] = ()
    checked: int = 0
    details: Mapping[str, Any] = field(default_factory=dict)

    def __post_init__(self):
        if self.passed == bool(self.witnesses):
            raise ValueError("a report FAILs exactly when it carries witnesses")

    @property
    def verdict(self) -> str:
        return "PASS" if self.passed else "FAIL"

    def __bool__(self) -> bool:
        return self.passed

    def describe(self) -> str:
        lines = [f"{self.property}: {self.verdict} ({self.checked} tuples checked)"]
        for key, value in self.details.items():
            lines.append(f"  {key}: {value}")
        lines.extend("  witness " + w.describe() for w in self.witnesses)
        return "\n".join(lines)

    def to_dict(self) -> dict:
        return {
            "checked": self.checked,
            "details": {k: _jsonable(v) for k, v in self.details.items()},
            "property": self.property,
            "verdict": self.verdict,
            "witnesses": [w.to_dict() for w in self.witnesses],
        }


def _jsonable(value):
    if isinstance(value, (bool, int, str)) or value is None:
        return value
    if isinstance(value, Mapping):
        return {str(k): _jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    return format_scalar(value)


def _py(v):
    return int(v) if isinstance(v, np.integer) else v


def witnesses_from_residual(residual: np.ndarray, index_axes: int, condition: str = "",
                            offsets: tuple[int, ...] | None = None,
                            limit: int = MAX_WITNESSES) -> list[Witness]:
    """Witnesses for every index tuple whose residual block is nonzero.

    The first ``index_axes`` axes of ``residual`` index basis tuples; the rest
    are flattened into the residual vector.  Tuples come out in lexicographic
    order.  ``offsets`` shifts each index (used for direct-sum coordinates).
    """
    residual = np.asarray(residual)
    lead = residual.shape[:index_axes]
    flat = residual.reshape(lead + (-1,)) if residual.ndim > index_axes else residual.reshape(lead + (1,))
    mask = np.any(flat != 0, axis=-1)
    out = []
    for idx in np.argwhere(mask)[:limit]:
        idx = tuple(int(i) for i in idx)
        shifted = tuple(i + 1 + (offsets[k] if offsets else 0) for k, i in enumerate(idx))
        out.append(Witness(shifted, tuple(_py(v) for v in flat[idx]), condition))
    return out


def residual_report(name: str, residual: np.ndarray, index_axes: int, condition: str = "",
                    details: Mapping | None = None) -> CheckReport:
    residual = np.asarray(residual)
    wits = witnesses_from_residual(residual, index_axes, condition)
    checked = int(np.prod(residual.shape[:index_axes])) if index_axes else 1
    return CheckReport(name, not wits, tuple(wits), checked, dict(details or {}))


def combine(name: str, reports: Iterable[CheckReport], details: Mapping | None = None) -> CheckReport:
    """Conjunction of several reports; witnesses keep report order, capped at MAX_WITNESSES."""
    reports = list(reports)
    wits: list[Witness] = []
    for r in reports:
        for w in r.witnesses:
            if len(wits) < MAX_WITNESSES:
                cond = w.condition or r.property
                wits.append(Witness(w.indices, w.residual, cond))
    merged = {r.property: r.verdict for r in reports}
    merged.update(details or {})
    return CheckReport(name, all(r.passed for r in reports), tuple(wits),
                       sum(r.checked for r in reports), merged)


def verdict_report(name: str, ok: bool, reason: str, details: Mapping | None = None,
                   checked: int = 1) -> CheckReport:
    """Report for a meta-check (agreement or implication) without a residual tensor."""
    wits = () if ok else (Witness((), (1,), reason),)
    return CheckReport(name, ok, wits, checked, dict(details or {}))
