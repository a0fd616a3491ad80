"""Labelings of the hexagonal double decomposition of the genus-2 surface.

Positions follow the hexagon ``[a1, b3, a2, b1, a3, b2]``.  Rotation,
reflection and (in labeled mode) switches of opposite sides generate the
moves realizable by flips and handle-twists; the censuses below enumerate
their orbits directly.
"""

from __future__ import annotations

import itertools
import json
from collections import deque
from dataclasses import dataclass
from typing import Callable, Iterable

from networkx.utils import UnionFind

MODES = ("strict", "labeled")
A_POSITIONS = (0, 2, 4)
B_POSITIONS = (1, 3, 5)


@dataclass(frozen=True)
class HexLabeling:
    positions: tuple[int, ...]
    mode: str = "labeled"

    def __post_init__(self):
        object.__setattr__(self, "positions", tuple(self.positions))
        if self.mode not in MODES:
            raise ValueError(f"mode must be one of {MODES}, got {self.mode!r}")
        if sorted(self.positions) != [1, 2, 3, 4, 5, 6]:
            raise ValueError(f"labels must be 1..6 without repeats: {self.positions}")
        if self.mode == "strict" and not is_strict(self.positions):
            raise ValueError(f"{self.positions} mixes the labels of the two decompositions")

    def __str__(self):
        return ",".join(map(str, self.positions))

    @classmethod
    def parse(cls, text: str, mode: str | None = None) -> "HexLabeling":
        fields = text.split()
        if not fields:
            raise ValueError("empty hexagon state")
        positions = tuple(int(x) for x in fields[0].split(","))
        if len(fields) > 1:
            if mode is not None and mode != fields[1]:
                raise ValueError(f"state says {fields[1]!r}, caller asked for {mode!r}")
            mode = fields[1]
        return cls(positions, mode or "labeled")


def is_strict(positions) -> bool:
    odd = {positions[i] for i in A_POSITIONS}
    return odd in ({1, 2, 3}, {4, 5, 6})


def rotate(h: HexLabeling) -> HexLabeling:
    """Each label moves one position forward (the last wraps to the front)."""
    p = h.positions
    return HexLabeling(p[-1:] + p[:-1], h.mode)


def reflect(h: HexLabeling) -> HexLabeling:
    return HexLabeling(h.positions[::-1], h.mode)


def switch(h: HexLabeling, k: int) -> HexLabeling:
    """Exchange the labels of opposite sides ``k`` and ``k + 3`` (1-based)."""
    if h.mode == "strict":
        raise ValueError("switches are not available on strict labelings")
    if k not in (1, 2, 3):
        raise ValueError(f"switch index must be 1, 2 or 3, got {k}")
    p = list(h.positions)
    p[k - 1], p[k + 2] = p[k + 2], p[k - 1]
    return HexLabeling(tuple(p), h.mode)


def cyclic_order(h: HexLabeling) -> tuple[int, ...]:
    """Minimal reading of the labels over all rotations and reversals."""
    p = h.positions
    readings = [p[i:] + p[:i] for i in range(6)]
    readings += [r[::-1] for r in readings]
    return min(readings)


def opposite_pairing(h: HexLabeling) -> tuple[tuple[int, int], ...]:
    p = h.positions
    return tuple(sorted(tuple(sorted((p[i], p[i + 3]))) for i in range(3)))


def orbit_invariant(h: HexLabeling):
    return cyclic_order(h) if h.mode == "strict" else opposite_pairing(h)


def generators(mode: str) -> list[tuple[str, Callable[[HexLabeling], HexLabeling]]]:
    gens = [("rotate", rotate), ("reflect", reflect)]
    if mode == "labeled":
        gens += [(f"switch {k}", lambda h, k=k: switch(h, k)) for k in (1, 2, 3)]
    return gens


def all_labelings(mode: str) -> list[HexLabeling]:
    out = []
    for perm in itertools.permutations(range(1, 7)):
        if mode == "strict" and not is_strict(perm):
            continue
        out.append(HexLabeling(perm, mode))
    return out


@dataclass
class Orbit:
    size: int
    representative: HexLabeling
    invariant: tuple


@dataclass
class HexCensus:
    mode: str
    labelings: int
    orbits: list[Orbit]

    @property
    def orbit_count(self) -> int:
        return len(self.orbits)

    def to_json(self) -> str:
        return json.dumps({
            "schema": 1,
            "mode": self.mode,
            "labelings": self.labelings,
            "orbit_count": self.orbit_count,
            "orbits": [{"size": o.size,
                        "representative": str(o.representative),
                        "invariant": [list(x) for x in o.invariant]
                        if self.mode == "labeled" else list(o.invariant)}
                       for o in self.orbits],
        }, sort_keys=True)


def enumerate_orbits(mode: str) -> HexCensus:
    """Orbits of all valid labelings under the mode's generators."""
    space = all_labelings(mode)
    uf = UnionFind(space)
    gens = generators(mode)
    for h in space:
        for _, g in gens:
            uf.union(h, g(h))
    blocks = [sorted(b, key=lambda h: h.positions) for b in uf.to_sets()]
    blocks.sort(key=lambda b: b[0].positions)
    return HexCensus(mode, len(space),
                     [Orbit(len(b), b[0], orbit_invariant(b[0])) for b in blocks])


def orbit_of(h: HexLabeling) -> set[HexLabeling]:
    """Breadth-first closure of one labeling."""
    seen = {h}
    queue = deque([h])
    gens = generators(h.mode)
    while queue:
        x = queue.popleft()
        for _, g in gens:
            y = g(x)
            if y not in seen:
                seen.add(y)
                queue.append(y)
    return seen


def partition_by(items: Iterable[HexLabeling], key) -> list[frozenset]:
    classes: dict = {}
    for h in items:
        classes.setdefault(key(h), set()).add(h)
    return sorted((frozenset(c) for c in classes.values()),
                  key=lambda c: min(x.positions for x in c))
