"""Small shared helpers: deterministic ordering and check results."""
from __future__ import annotations

import math
import re
from functools import lru_cache
from dataclasses import dataclass
from typing import Any, Hashable, Iterable

INF = math.inf

_DIGITS = re.compile(r"(\d+)")


@lru_cache(maxsize=1 << 16, typed=True)
def natural_key(value: Hashable) -> tuple:
    """Sort key that orders 'x2' before 'x10'; works on any id via str()."""
    parts = _DIGITS.split(str(value))
    return tuple((0, int(p)) if p.isdigit() else (1, p) for p in parts)


def ordered(items: Iterable) -> list:
    return sorted(items, key=natural_key)


@lru_cache(maxsize=1 << 16, typed=True)
def arc_key(arc: tuple) -> tuple:
    return (natural_key(arc[0]), natural_key(arc[1]))


def ordered_arcs(arcs: Iterable[tuple]) -> list[tuple]:
    return sorted(arcs, key=arc_key)


@dataclass(frozen=True)
class Verdict:
    """Outcome of a yes/no check; ``witness`` explains a negative answer."""

    ok: bool
    reason: str = ""
    witness: Any = None

    def __bool__(self) -> bool:
        return self.ok

    @classmethod
    def yes(cls) -> "Verdict":
        return cls(True)

    @classmethod
    def no(cls, reason: str, witness: Any = None) -> "Verdict":
        return cls(False, reason, witness)


def fmt_length(value: float | int) -> int | str:
    """JSON-safe rendering of a length that may be infinite."""
    return "infinity" if value == INF else int(value)
