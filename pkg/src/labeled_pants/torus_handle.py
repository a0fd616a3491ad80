"""Curves inside a handle (one-holed torus) as primitive slopes.

Essential, non-boundary-parallel simple closed curves in a one-holed torus
correspond to primitive integer pairs ``(p, q)`` up to sign, and the
geometric intersection number of two of them is ``|p q' - q p'|``.  This is
an exact model, so the three-twist label exchange in a handle can be checked
curve by curve rather than only in homology.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Optional


@dataclass(frozen=True, order=True)
class Slope:
    """Primitive pair up to sign; stored with ``p > 0`` or ``(0, 1)``."""

    p: int
    q: int

    def __post_init__(self):
        if math.gcd(self.p, self.q) != 1:
            raise ValueError(f"({self.p}, {self.q}) is not primitive")
        if self.p < 0 or (self.p == 0 and self.q < 0):
            object.__setattr__(self, "p", -self.p)
            object.__setattr__(self, "q", -self.q)

    def __str__(self):
        return f"{self.p}/{self.q}"

    @classmethod
    def parse(cls, text: str) -> "Slope":
        p, _, q = text.strip().partition("/")
        return cls(int(p), int(q))


def signed_pairing(s: Slope, t: Slope) -> int:
    return s.p * t.q - s.q * t.p


def intersection(s: Slope, t: Slope) -> int:
    return abs(signed_pairing(s, t))


def twist_slope(along: Slope, direction: int, target: Slope) -> Slope:
    """Dehn twist of ``target`` along ``along``."""
    if direction not in (1, -1):
        raise ValueError("direction must be +1 or -1")
    k = direction * signed_pairing(target, along)
    return Slope(target.p + k * along.p, target.q + k * along.q)


def s_move_slope(c: Slope, bound: int = 1) -> set[Slope]:
    """Curves meeting ``c`` once, with coordinates bounded by ``bound``."""
    out = set()
    for p in range(0, bound + 1):
        for q in range(-bound, bound + 1):
            if math.gcd(p, q) != 1 or (p == 0 and q != 1):
                continue
            t = Slope(p, q)
            if intersection(c, t) == 1:
                out.add(t)
    return out


@dataclass(frozen=True)
class HandleTwist:
    label: str
    direction: int

    def dsl(self, labels: dict[str, int]) -> str:
        return f"twist {labels[self.label]} {'+' if self.direction > 0 else '-'}"


def replay_handle_word(state: dict[str, Slope], word) -> list[dict[str, Slope]]:
    """States after each twist; each twist runs along the current curve of its label."""
    states = [dict(state)]
    for step in word:
        cur = dict(states[-1])
        along = cur[step.label]
        for name in cur:
            cur[name] = twist_slope(along, step.direction, cur[name])
        states.append(cur)
    return states


def _swap_words(length: int, labels=("a", "b")):
    for names in itertools.product(labels, repeat=length):
        for dirs in itertools.product((1, -1), repeat=length):
            yield [HandleTwist(n, d) for n, d in zip(names, dirs)]


def _is_swap(start: dict[str, Slope], end: dict[str, Slope]) -> bool:
    return end["a"] == start["b"] and end["b"] == start["a"]


def find_handle_swap(a: Slope = Slope(1, 0), b: Slope = Slope(0, 1)
                     ) -> Optional[list[HandleTwist]]:
    """Three twists, alternating between the two labels, exchanging ``a`` and ``b``.

    Tries ``T_a T_b T_a`` then ``T_b T_a T_b`` with all direction choices and
    returns the first word that works.
    """
    if intersection(a, b) != 1:
        raise ValueError(f"handle curves must meet once, {a} and {b} meet "
                         f"{intersection(a, b)} times")
    start = {"a": a, "b": b}
    for pattern in (("a", "b", "a"), ("b", "a", "b")):
        for dirs in itertools.product((1, -1), repeat=3):
            word = [HandleTwist(n, d) for n, d in zip(pattern, dirs)]
            if _is_swap(start, replay_handle_word(start, word)[-1]):
                return word
    return None


def shortest_handle_swaps(max_length: int, a: Slope = Slope(1, 0),
                          b: Slope = Slope(0, 1)) -> dict[int, list[list[HandleTwist]]]:
    """All twist words up to ``max_length`` that exchange ``a`` and ``b``, by length."""
    start = {"a": a, "b": b}
    found = {}
    for length in range(max_length + 1):
        found[length] = [w for w in _swap_words(length)
                         if _is_swap(start, replay_handle_word(start, w)[-1])]
    return found
