"""Shared report type and exceptions."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any


class DimensionMismatch(ValueError):
    """Raised when group elements or forms of different dimension meet."""


class CapExceeded(ValueError):
    """Raised when an input exceeds an exhaustive-loop size cap."""


class Unsupported(ValueError):
    """Raised when a decision procedure cannot answer completely for an input."""


@dataclass(frozen=True)
class Report:
    """Outcome of a verifier.

    ``witness`` holds the first counterexample in deterministic order
    (a tuple of basis indices or group elements) when ``ok`` is false.
    """

    ok: bool
    witness: Any = None
    message: str = ""

    def __bool__(self) -> bool:
        return self.ok

    def __str__(self) -> str:
        if self.ok:
            return "pass" + (f": {self.message}" if self.message else "")
        w = self.witness
        if isinstance(w, tuple):
            w = "(" + ", ".join(str(x) for x in w) + ")"
        return f"FAIL at {w}" + (f": {self.message}" if self.message else "")
