"""Deterministic text / JSON rendering of result objects.

JSON keeps coefficients as decimal strings so arbitrary-precision values
survive any consumer.  Text output uses the canonical term order; suite
timing is deliberately left out of the deterministic payload (the CLI
reports it on stderr) so identical invocations stay byte-identical.
"""

from __future__ import annotations

import json

from .lie import BracketTree, Verdict
from .poly import Poly
from .suites import SuiteReport
from .tabloids import TabloidSum, format_tabloid

__all__ = ["render"]


def _poly_json(p: Poly) -> list[dict[str, str]]:
    return [{"word": w or "1", "coeff": str(p.terms[w])} for w in p.support()]


def _to_jsonable(obj, top: bool = True):
    if isinstance(obj, Poly):
        return {"terms": _poly_json(obj)}
    if isinstance(obj, Verdict):
        out = {"kind": obj.kind.value, "uZero": obj.u_zero, "vZero": obj.v_zero}
        if obj.witness is not None:
            out["witness"] = obj.witness
        return out
    if isinstance(obj, TabloidSum):
        return {
            "terms": [
                {"tabloid": [list(block) for block in t], "coeff": str(obj.terms[t])}
                for t in sorted(obj.terms)
            ]
        }
    if isinstance(obj, BracketTree):
        return {"tree": str(obj)}
    if isinstance(obj, SuiteReport):
        return {
            "suite": obj.suite,
            "params": {k: v for k, v in sorted(obj.params.items())},
            "cases": obj.cases,
            "failures": list(obj.failures),
            "millis": obj.millis,
        }
    if isinstance(obj, str):
        # a bare word at the top level gets a key; nested strings stay plain
        return {"word": obj} if top else obj
    if isinstance(obj, (int, bool)):
        return {"value": obj} if top else obj
    if isinstance(obj, (list, tuple)):
        return [_to_jsonable(x, top=False) for x in obj]
    if isinstance(obj, dict):
        return {k: _to_jsonable(v, top=False) for k, v in obj.items()}
    raise TypeError(f"cannot render {type(obj).__name__}")


def _to_text(obj) -> str:
    if isinstance(obj, Poly):
        return str(obj)
    if isinstance(obj, Verdict):
        extra = f" (witness {obj.witness})" if obj.witness else ""
        return obj.kind.value + extra
    if isinstance(obj, TabloidSum):
        return str(obj)
    if isinstance(obj, BracketTree):
        return str(obj)
    if isinstance(obj, SuiteReport):
        lines = [
            f"suite: {obj.suite}",
            "params: "
            + (", ".join(f"{k}={v}" for k, v in sorted(obj.params.items())) or "-"),
            f"cases: {obj.cases}",
        ]
        lines.extend(f"FAIL {f}" for f in obj.failures)
        lines.append("result: " + ("pass" if obj.ok else f"FAIL ({len(obj.failures)})"))
        return "\n".join(lines)
    if isinstance(obj, bool):
        return "true" if obj else "false"
    if isinstance(obj, (int, str)):
        return str(obj)
    if isinstance(obj, (list, tuple)):
        return "\n".join(_to_text(x) for x in obj)
    raise TypeError(f"cannot render {type(obj).__name__}")


def render(obj, fmt: str = "text") -> bytes:
    """Render a Word, Poly, Verdict, TabloidSum, BracketTree, or
    SuiteReport to deterministic bytes."""
    if fmt == "text":
        return (_to_text(obj) + "\n").encode()
    if fmt == "json":
        payload = json.dumps(_to_jsonable(obj), sort_keys=True, separators=(",", ":"))
        return (payload + "\n").encode()
    raise ValueError(f"unknown format {fmt!r}")
