"""Named end-to-end verifications with machine-readable reports."""

from __future__ import annotations

import contextlib
import signal
import threading
import time
from dataclasses import dataclass, field
from typing import Callable, Optional

import numpy as np

from . import hexagon_orbits as hx
from . import homology as hm
from . import pants_graph as pg
from . import torus_handle as th

DEFAULT_TIME_LIMIT = 30.0


@dataclass
class VerificationReport:
    name: str
    status: str
    witness: Optional[list[str]] = None
    metrics: dict = field(default_factory=dict)
    details: dict = field(default_factory=dict)
    wall_time: float = 0.0

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def payload(self) -> dict:
        """Deterministic part of the report (wall time excluded)."""
        out = {"name": self.name, "status": self.status, "metrics": self.metrics,
               "details": self.details}
        if self.witness is not None:
            out["witness"] = self.witness
        return out


def _status(ok: bool) -> str:
    return "pass" if ok else "fail"


def verify_pentagon(max_depth: int = 8) -> VerificationReport:
    g = pg.standard_graph(pg.SurfaceSig(0, 5))
    word = pg.find_label_swap(g, 1, 2, max_depth=max_depth)
    target = pg.canonical_certificate(g.relabel({1: 2, 2: 1}))
    shorter = 0
    explored = 0
    for length in range(5):
        for _, h in pg.words_of_length(g, length):
            explored += 1
            if pg.canonical_certificate(h) == target:
                shorter += 1
    ok = word is not None and len(word) == 5 and shorter == 0
    return VerificationReport(
        "pentagon", _status(ok),
        witness=[m.dsl() for m in word] if word else None,
        metrics={"states_explored": explored, "depth": len(word) if word else None},
        details={"words_shorter_than_5_swapping": shorter},
    )


def verify_handle_swap() -> VerificationReport:
    word = th.find_handle_swap()
    short = th.shortest_handle_swaps(2)
    n_short = sum(len(v) for v in short.values())
    ok = word is not None and len(word) == 3 and n_short == 0
    labels = {"a": 1, "b": 2}
    return VerificationReport(
        "handle-swap", _status(ok),
        witness=[t.dsl(labels) for t in word] if word else None,
        # all words of length <= 2 in {a, b} x {+, -}, plus the 16 three-twist candidates
        metrics={"states_explored": sum(4 ** k for k in range(3)) + 16,
                 "depth": 3},
        details={"swaps_of_length_at_most_2": n_short},
    )


def verify_rotation() -> VerificationReport:
    w = hm.verify_rotation(hm.hexagon_classes())
    return VerificationReport(
        "rotation", _status(w is not None),
        witness=w.script_lines() if w else None,
        metrics={"states_explored": 2 ** 5, "depth": 5},
        details={"start": [1, 4, 2, 5, 3, 6], "target": [6, 1, 4, 2, 5, 3]},
    )


def verify_reflection() -> VerificationReport:
    w = hm.verify_reflection(hm.hexagon_classes())
    return VerificationReport(
        "reflection", _status(w is not None),
        witness=w.script_lines() if w else None,
        metrics={"states_explored": 2 ** 8, "depth": 8},
        details={"start": [1, 4, 2, 5, 3, 6], "target": [6, 3, 5, 2, 4, 1]},
    )


def random_relation(rng: np.random.Generator, genus: int = 2, size: int = 3):
    """Boundary classes ``b1, b2`` and a third boundary ``+-(b1 +- b2)``,
    all three nonzero mod 2."""
    while True:
        b1, b2 = rng.integers(-size, size + 1, size=(2, 2 * genus))
        third = rng.choice([-1, 1]) * (b1 + rng.choice([-1, 1]) * b2)
        if all((v % 2).any() for v in (b1, b2, third)):
            return b1, b2, third


def verify_z2_invariance(trials: int = 1000, seed: int = 0) -> VerificationReport:
    rng = np.random.default_rng(seed)
    failures = 0
    checks = 0
    for _ in range(trials):
        b1, b2, third = random_relation(rng)
        want = hm.z2_reduce(third)
        for signs in ((1, 1), (1, -1), (-1, 1), (-1, -1)):
            checks += 1
            if hm.z2_reduce(hm.flip_class(b1, b2, signs)) != want:
                failures += 1
    return VerificationReport(
        "z2-invariance", _status(failures == 0),
        metrics={"states_explored": checks, "depth": 1},
        details={"trials": trials, "seed": seed, "failures": failures},
    )


EXPECTED_HEX = {"strict": (6, 72, 12, hx.cyclic_order),
                "labeled": (15, 720, 48, hx.opposite_pairing)}


def verify_hexagon_orbits(mode: str) -> VerificationReport:
    count, total, size, key = EXPECTED_HEX[mode]
    census = hx.enumerate_orbits(mode)
    space = hx.all_labelings(mode)
    orbit_blocks = sorted((frozenset(hx.orbit_of(o.representative)) for o in census.orbits),
                          key=lambda c: min(x.positions for x in c))
    invariant_blocks = hx.partition_by(space, key)
    ok = (census.orbit_count == count and census.labelings == total
          and all(o.size == size for o in census.orbits)
          and orbit_blocks == invariant_blocks)
    return VerificationReport(
        f"hexagon-orbits-{mode}", _status(ok),
        metrics={"states_explored": census.labelings, "depth": None},
        details={"orbit_count": census.orbit_count,
                 "sizes": sorted({o.size for o in census.orbits}),
                 "invariant_classes": len(invariant_blocks),
                 "partition_matches_invariant": orbit_blocks == invariant_blocks},
    )


CONNECTIVITY_SIGS = ((0, 4), (1, 1), (1, 2), (2, 0), (0, 5), (1, 3))


def verify_labeled_graph_connectivity(bound: int = pg.DEFAULT_BOUND) -> VerificationReport:
    counts = {}
    states = 0
    for g, n in CONNECTIVITY_SIGS:
        census = pg.labeled_orbits(pg.SurfaceSig(g, n), bound=bound)
        counts[f"{g},{n}"] = census.count
        states += census.states
    return VerificationReport(
        "labeled-graph-connectivity", _status(all(c == 1 for c in counts.values())),
        metrics={"states_explored": states, "depth": None},
        details={"orbit_counts": counts},
    )


def degenerate_planes() -> tuple[hm.LagrangianPlane, hm.LagrangianPlane]:
    L = hm.SymplecticLattice(2)
    return (hm.LagrangianPlane([L.e(1), L.e(2)]), hm.LagrangianPlane([L.e(1), L.f(2)]))


def verify_general_position() -> VerificationReport:
    std = hm.general_position(*hm.standard_classes().planes())
    hexa = hm.general_position(*hm.hexagon_classes().planes())
    degen = hm.general_position(*degenerate_planes())
    return VerificationReport(
        "general-position", _status(std and hexa and not degen),
        metrics={"states_explored": 3, "depth": None},
        details={"standard": std, "hexagonal": hexa, "degenerate": degen},
    )


REGISTRY: dict[str, Callable[..., VerificationReport]] = {
    "pentagon": verify_pentagon,
    "handle-swap": verify_handle_swap,
    "rotation": verify_rotation,
    "reflection": verify_reflection,
    "z2-invariance": verify_z2_invariance,
    "hexagon-orbits-strict": lambda: verify_hexagon_orbits("strict"),
    "hexagon-orbits-labeled": lambda: verify_hexagon_orbits("labeled"),
    "labeled-graph-connectivity": verify_labeled_graph_connectivity,
    "general-position": verify_general_position,
}


class VerificationTimeout(Exception):
    pass


@contextlib.contextmanager
def _time_limit(seconds: float):
    # SIGALRM only works on the main thread; elsewhere the limit is checked afterwards
    if seconds <= 0 or threading.current_thread() is not threading.main_thread() \
            or not hasattr(signal, "setitimer"):
        yield
        return

    def _raise(signum, frame):
        raise VerificationTimeout()

    old = signal.signal(signal.SIGALRM, _raise)
    signal.setitimer(signal.ITIMER_REAL, seconds)
    try:
        yield
    finally:
        signal.setitimer(signal.ITIMER_REAL, 0)
        signal.signal(signal.SIGALRM, old)


def verify(name: str, time_limit: float = DEFAULT_TIME_LIMIT, **kwargs) -> VerificationReport:
    if name not in REGISTRY:
        raise KeyError(f"unknown verification {name!r}; choose from {sorted(REGISTRY)}")
    start = time.perf_counter()
    try:
        with _time_limit(time_limit):
            report = REGISTRY[name](**kwargs)
    except VerificationTimeout:
        report = VerificationReport(name, "fail",
                                    details={"error": f"time limit {time_limit}s exceeded"})
    report.wall_time = time.perf_counter() - start
    if time_limit > 0 and report.wall_time > time_limit and report.passed:
        report.status = "fail"
        report.details["error"] = f"time limit {time_limit}s exceeded"
    return report
