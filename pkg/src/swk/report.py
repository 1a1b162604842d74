"""Report assembly and rendering.

Exact values (ints, fractions) are carried as Python objects and emitted
as decimal strings in JSON, never as floats, so nothing is truncated at 53
bits.  A 12 significant digit decimal rendering accompanies each value for
human consumption.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from decimal import Decimal, localcontext
from fractions import Fraction

DECIMAL_DIGITS = 12


def decimal_str(value: int | Fraction, digits: int = DECIMAL_DIGITS) -> str:
    """Render an exact value with the given number of significant digits."""
    if isinstance(value, Fraction):
        num, den = value.numerator, value.denominator
    else:
        num, den = int(value), 1
    with localcontext() as ctx:
        ctx.prec = digits
        return str(Decimal(num) / Decimal(den))


def exact_str(value) -> str:
    if isinstance(value, Fraction):
        if value.denominator == 1:
            return str(value.numerator)
        return f"{value.numerator}/{value.denominator}"
    return str(value)


def _jsonable(x):
    if isinstance(x, bool) or x is None:
        return x
    if isinstance(x, int):
        return str(x)
    if isinstance(x, Fraction):
        return exact_str(x)
    if isinstance(x, float):
        return round(x, 3)
    if isinstance(x, dict):
        return {k: _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    return x


@dataclass
class Report:
    """What a CLI command produces: values, check outcomes, timings."""

    graph: dict | None = None
    results: list[dict] = field(default_factory=list)
    checks: list[dict] = field(default_factory=list)
    timing_ms: dict[str, float] = field(default_factory=dict)

    def add_result(self, name: str, value: int | Fraction) -> None:
        self.results.append(
            {"name": name, "exact": value, "decimal": decimal_str(value)}
        )

    def add_flag(self, name: str, value: bool) -> None:
        self.results.append({"name": name, "exact": value, "decimal": str(value)})

    def add_check(self, name: str, holds: bool, required: bool = True, **extra) -> None:
        row = {"name": name, "holds": holds, "required": required}
        row.update(extra)
        self.checks.append(row)

    def ok(self) -> bool:
        return all(c["holds"] for c in self.checks if c.get("required", True))

    def to_json(self) -> str:
        payload = {
            "graph": _jsonable(self.graph),
            "results": [
                {**_jsonable(r), "exact": exact_str(r["exact"])
                 if not isinstance(r["exact"], bool) else r["exact"]}
                for r in self.results
            ],
            "checks": _jsonable(self.checks),
            "timing_ms": {k: round(v, 3) for k, v in self.timing_ms.items()},
        }
        return json.dumps(payload, indent=2)

    def to_plain(self) -> str:
        lines = []
        if self.graph is not None:
            summary = ", ".join(f"{k}={v}" for k, v in self.graph.items())
            lines.append(f"graph: {summary}")
        for r in self.results:
            exact = r["exact"]
            shown = exact_str(exact) if not isinstance(exact, bool) else str(exact)
            if isinstance(exact, Fraction) and exact.denominator != 1:
                shown += f" = {r['decimal']}"
            lines.append(f"{r['name']} = {shown}")
        for c in self.checks:
            mark = "ok " if c["holds"] else "FAIL"
            detail = ""
            if "instances" in c:
                detail = f" ({c['instances']} instances)"
            if not c.get("required", True):
                detail += " [informational]"
            if not c["holds"] and c.get("first_failure"):
                detail += f" first failure: {c['first_failure']}"
            lines.append(f"[{mark}] {c['name']}{detail}")
        for stage, ms in self.timing_ms.items():
            lines.append(f"# {stage}: {ms:.1f} ms")
        return "\n".join(lines)
