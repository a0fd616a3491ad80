"""Acceptance gate: one check per criterion, each timed against its limit.

Run with ``pytest tests/test_acceptance.py -s`` or ``python3 tests/test_acceptance.py``;
every criterion prints a single ``[PASS]``/``[FAIL]`` line.
"""

import sys
import time

import numpy as np
import pytest

from labeled_pants import hexagon_orbits as hx
from labeled_pants import homology as hm
from labeled_pants import pants_graph as pg
from labeled_pants import scripts
from labeled_pants import torus_handle as th
from labeled_pants.dsl import parse_script
from labeled_pants.replay import load_state, replay
from labeled_pants.verify import degenerate_planes, random_relation


def _hexagon(mode, count, total, size, key):
    census = hx.enumerate_orbits(mode)
    space = hx.all_labelings(mode)
    orbits = {frozenset(hx.orbit_of(o.representative)) for o in census.orbits}
    blocks = set(hx.partition_by(space, key))
    ok = (census.orbit_count == count and census.labelings == total
          and all(o.size == size for o in census.orbits) and orbits == blocks)
    return ok, f"{census.orbit_count} orbits / {census.labelings} labelings, " \
               f"sizes {sorted({o.size for o in census.orbits})}, partition match {orbits == blocks}"


def ac1():
    return _hexagon("labeled", 15, 720, 48, hx.opposite_pairing)


def ac2():
    return _hexagon("strict", 6, 72, 12, hx.cyclic_order)


def ac3():
    g = pg.standard_graph(pg.SurfaceSig(0, 5))
    word = pg.find_label_swap(g, 1, 2, max_depth=8)
    target = pg.canonical_certificate(g.relabel({1: 2, 2: 1}))
    shorter = sum(1 for k in range(5) for _, h in pg.words_of_length(g, k)
                  if pg.canonical_certificate(h) == target)
    replayed = g
    for m in word or []:
        replayed = pg.apply_move(replayed, m)
    ok = (word is not None and len(word) == 5 and shorter == 0
          and pg.canonical_certificate(replayed) == target)
    return ok, f"word length {len(word) if word else None}, swapping words of length <= 4: {shorter}"


def ac4():
    a, b = th.Slope(1, 0), th.Slope(0, 1)
    w = th.find_handle_swap(a, b)
    end = th.replay_handle_word({"a": a, "b": b}, w)[-1] if w else None
    short = th.shortest_handle_swaps(2)
    n_short = sum(len(v) for v in short.values())
    ok = w is not None and len(w) == 3 and end == {"a": b, "b": a} and n_short == 0
    return ok, f"witness {[t.dsl({'a': 1, 'b': 2}) for t in w] if w else None}, " \
               f"swaps of length <= 2: {n_short}"


def ac5():
    t = hm.hexagon_classes()
    w = hm.verify_rotation(t)
    if w is None:
        return False, "no direction assignment"
    out = hm.replay_script(t, parse_script("\n".join(w.script_lines())))
    order = [t.label_of(nm) for nm in hm.HEXAGON_NAMES]
    ok = order == [1, 4, 2, 5, 3, 6] and hm.matches_up_to_sign(
        out, hm.permuted_target(t, order, [6, 1, 4, 2, 5, 3]))
    return ok, f"witness {w.script_lines()}"


def ac6():
    rng = np.random.default_rng(20261015)
    failures = 0
    for _ in range(1000):
        b1, b2, third = random_relation(rng)
        want = hm.z2_reduce(third)
        for signs in ((1, 1), (1, -1), (-1, 1), (-1, -1)):
            if hm.z2_reduce(hm.flip_class(b1, b2, signs)) != want:
                failures += 1
    return failures == 0, f"1000 instances x 4 sign choices, failures {failures}"


def ac7():
    counts = {}
    for g, n in ((0, 4), (1, 1), (1, 2), (2, 0), (0, 5), (1, 3)):
        counts[(g, n)] = pg.labeled_orbits(pg.SurfaceSig(g, n)).count
    return all(c == 1 for c in counts.values()), \
        "orbits " + ", ".join(f"S_{g},{n}:{c}" for (g, n), c in counts.items())


def ac8():
    std = hm.general_position(*hm.standard_classes().planes())
    hexa = hm.general_position(*hm.hexagon_classes().planes())
    degen = hm.general_position(*degenerate_planes())
    return std and hexa and not degen, f"standard {std}, hexagonal {hexa}, degenerate {degen}"


def ac9():
    hexagon = load_state("hexagon", scripts.read("hexagon.state"))
    rot = replay("hexagon", hexagon, parse_script(scripts.read("fig11")))
    torus = load_state("torus", scripts.read("handle.torus"))
    swap = replay("torus", torus, parse_script(scripts.read("fig9")))
    homology = load_state("homology", scripts.read("hexagon.json"))
    refl = replay("homology", homology, parse_script(scripts.read("fig12")))
    order = [homology.label_of(nm) for nm in hm.HEXAGON_NAMES]
    refl_ok = hm.matches_up_to_sign(refl, hm.permuted_target(homology, order, [6, 3, 5, 2, 4, 1]))
    searched = hm.verify_reflection(hm.hexagon_classes())
    ok = (rot.positions == (6, 1, 4, 2, 5, 3)
          and swap == {1: th.Slope(0, 1), 2: th.Slope(1, 0)}
          and refl_ok and searched is not None)
    return ok, f"fig11 -> {rot}, fig9 -> {{{', '.join(f'{k}: {v}' for k, v in swap.items())}}}, " \
               f"fig12 reversed up to sign {refl_ok}"


CRITERIA = [
    ("AC1", "hexagon census, labeled mode", ac1, 1.0),
    ("AC2", "hexagon census, strict mode", ac2, 1.0),
    ("AC3", "pentagon word on the (0,5) path graph", ac3, 10.0),
    ("AC4", "three-twist handle swap", ac4, 1.0),
    ("AC5", "rotation at homology level", ac5, 1.0),
    ("AC6", "Z2 invariance of flips", ac6, None),
    ("AC7", "labeled graph connectivity", ac7, 60.0),
    ("AC8", "general position", ac8, None),
    ("AC9", "figure-script replays", ac9, None),
]


def evaluate(check, limit):
    start = time.perf_counter()
    ok, detail = check()
    elapsed = time.perf_counter() - start
    if limit is not None and elapsed >= limit:
        ok = False
        detail += f"; over the {limit:g}s limit"
    return ok, detail, elapsed


def _line(tag, title, ok, detail, elapsed):
    return f"[{'PASS' if ok else 'FAIL'}] {tag} {title}: {detail} ({elapsed:.3f}s)"


@pytest.mark.parametrize("tag,title,check,limit", CRITERIA, ids=[c[0] for c in CRITERIA])
def test_criterion(tag, title, check, limit, capsys):
    ok, detail, elapsed = evaluate(check, limit)
    with capsys.disabled():
        print("\n" + _line(tag, title, ok, detail, elapsed))
    assert ok, detail


if __name__ == "__main__":
    results = [evaluate(check, limit) + (tag, title) for tag, title, check, limit in CRITERIA]
    for ok, detail, elapsed, tag, title in results:
        print(_line(tag, title, ok, detail, elapsed))
    sys.exit(0 if all(r[0] for r in results) else 1)
