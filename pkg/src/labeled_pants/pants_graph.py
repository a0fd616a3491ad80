"""Labeled pants decompositions as trivalent graphs.

A pants decomposition of ``S_{g,n}`` is modeled by its dual graph: one
vertex per pair of pants, one internal edge per curve, one leg per boundary
hole.  Curves carry labels ``1..m`` and holes carry marks ``1..n``.  Two
decompositions that differ by a homeomorphism fixing the holes have
isomorphic graphs, so everything here lives in that combinatorial quotient.
A move word found at graph level is evidence in the quotient, not an isotopy
on the surface.

Storage is label-indexed: ``edges[k - 1]`` holds the sorted endpoints of the
curve labeled ``k`` and ``legs[j - 1]`` the vertex carrying hole ``j``.
Half-edges are numbered implicitly: the two ends of curve ``k`` are
``2(k-1)`` (lower endpoint) and ``2(k-1) + 1``; hole ``j`` is ``2m + j - 1``.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator, Optional

import networkx as nx
from networkx.utils import UnionFind

DEFAULT_BOUND = 6


class BoundExceeded(ValueError):
    """Raised when an exhaustive enumeration would exceed the pants bound."""


@dataclass(frozen=True)
class SurfaceSig:
    genus: int
    holes: int

    def __post_init__(self):
        if self.genus < 0 or self.holes < 0:
            raise ValueError(f"negative signature {self.genus, self.holes}")
        if 2 * self.genus + self.holes <= 2:
            raise ValueError(
                f"S_{{{self.genus},{self.holes}}} admits no pants decomposition"
            )

    def curve_count(self) -> int:
        return 3 * self.genus - 3 + self.holes

    def pants_count(self) -> int:
        return 2 * self.genus - 2 + self.holes


@dataclass(frozen=True)
class MoveRecord:
    """One generator application: ``kind`` is ``"flip"`` or ``"s_move"``.

    ``choice`` is ``"A"`` or ``"B"`` for a flip on a non-loop edge and
    ``None`` otherwise.
    """

    kind: str
    label: int
    choice: Optional[str] = None

    def __post_init__(self):
        if self.kind not in ("flip", "s_move"):
            raise ValueError(f"unknown move kind {self.kind!r}")
        if self.kind == "s_move" and self.choice is not None:
            raise ValueError("s_move takes no choice")
        if self.choice not in (None, "A", "B"):
            raise ValueError(f"unknown flip choice {self.choice!r}")

    def dsl(self) -> str:
        parts = [self.kind, str(self.label)]
        if self.choice is not None:
            parts.append(self.choice)
        return " ".join(parts)


@dataclass(frozen=True)
class LabeledPantsGraph:
    n_vertices: int
    edges: tuple[tuple[int, int], ...]
    legs: tuple[int, ...]

    def __post_init__(self):
        edges = tuple(tuple(sorted(e)) for e in self.edges)
        object.__setattr__(self, "edges", edges)
        object.__setattr__(self, "legs", tuple(self.legs))
        V = self.n_vertices
        if V < 1:
            raise ValueError("a pants graph needs at least one vertex")
        degree = [0] * V
        for u, v in edges:
            if not (0 <= u < V and 0 <= v < V):
                raise ValueError(f"edge endpoint out of range: {(u, v)}")
            degree[u] += 1
            degree[v] += 1
        for w in self.legs:
            if not 0 <= w < V:
                raise ValueError(f"leg vertex out of range: {w}")
            degree[w] += 1
        if any(d != 3 for d in degree):
            raise ValueError(f"graph is not trivalent: degrees {degree}")
        if not nx.is_connected(self.to_networkx()):
            raise ValueError("graph is not connected")

    # -- basic data ---------------------------------------------------------

    @property
    def curve_count(self) -> int:
        return len(self.edges)

    @property
    def sig(self) -> SurfaceSig:
        # cycle rank of the dual graph is the genus
        return SurfaceSig(self.curve_count - self.n_vertices + 1, len(self.legs))

    def labels(self) -> range:
        return range(1, self.curve_count + 1)

    def endpoints(self, label: int) -> tuple[int, int]:
        if not 1 <= label <= self.curve_count:
            raise KeyError(f"no curve labeled {label}")
        return self.edges[label - 1]

    def is_loop(self, label: int) -> bool:
        u, v = self.endpoints(label)
        return u == v

    def half_edge_vertex(self, h: int) -> int:
        m = self.curve_count
        if h < 2 * m:
            return self.edges[h // 2][h % 2]
        return self.legs[h - 2 * m]

    def half_edges_at(self, vertex: int) -> list[int]:
        n_half = 2 * self.curve_count + len(self.legs)
        return [h for h in range(n_half) if self.half_edge_vertex(h) == vertex]

    def adjacent_pairs(self) -> list[tuple[int, int]]:
        """Label pairs ``(i, j)``, ``i < j``, of curves bounding a common pants."""
        pairs = set()
        for w in range(self.n_vertices):
            labels = sorted({h // 2 + 1 for h in self.half_edges_at(w)
                             if h < 2 * self.curve_count})
            pairs.update(itertools.combinations(labels, 2))
        return sorted(pairs)

    def to_networkx(self) -> nx.MultiGraph:
        G = nx.MultiGraph()
        G.add_nodes_from(range(self.n_vertices))
        for k, (u, v) in enumerate(self.edges, start=1):
            G.add_edge(u, v, label=k)
        return G

    # -- relabelings --------------------------------------------------------

    def relabel(self, mapping: dict[int, int]) -> "LabeledPantsGraph":
        """Move the curve labeled ``k`` to label ``mapping.get(k, k)``."""
        new = [None] * self.curve_count
        for k, e in enumerate(self.edges, start=1):
            new[mapping.get(k, k) - 1] = e
        if any(e is None for e in new):
            raise ValueError(f"{mapping} is not a permutation of the labels")
        return LabeledPantsGraph(self.n_vertices, tuple(new), self.legs)

    def permute_vertices(self, perm: list[int]) -> "LabeledPantsGraph":
        return LabeledPantsGraph(
            self.n_vertices,
            tuple((perm[u], perm[v]) for u, v in self.edges),
            tuple(perm[w] for w in self.legs),
        )

    # -- serialization ------------------------------------------------------

    def to_text(self) -> str:
        lines = [f"v{w}: " + " ".join(map(str, self.half_edges_at(w)))
                 for w in range(self.n_vertices)]
        lines += [f"e{k}: {2 * (k - 1)} {2 * (k - 1) + 1}" for k in self.labels()]
        m = self.curve_count
        lines += [f"L{j}: {2 * m + j - 1}" for j in range(1, len(self.legs) + 1)]
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "LabeledPantsGraph":
        vertex_of: dict[int, int] = {}
        vertex_ids: dict[str, int] = {}
        pairs: dict[int, tuple[int, int]] = {}
        legs: dict[int, int] = {}
        for lineno, raw in enumerate(text.splitlines(), start=1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            head, _, rest = line.partition(":")
            fields = rest.split()
            try:
                if head.startswith("v"):
                    w = vertex_ids.setdefault(head[1:], len(vertex_ids))
                    for h in fields:
                        if int(h) in vertex_of:
                            raise ValueError(f"half-edge {h} listed twice")
                        vertex_of[int(h)] = w
                elif head.startswith("e"):
                    a, b = map(int, fields)
                    pairs[int(head[1:])] = (a, b)
                elif head.startswith("L"):
                    (h,) = map(int, fields)
                    legs[int(head[1:])] = h
                else:
                    raise ValueError(f"unknown record {head!r}")
            except ValueError as exc:
                raise ValueError(f"line {lineno}: {exc}") from None
        if sorted(pairs) != list(range(1, len(pairs) + 1)):
            raise ValueError(f"curve labels must be 1..m, got {sorted(pairs)}")
        if sorted(legs) != list(range(1, len(legs) + 1)):
            raise ValueError(f"leg marks must be 1..n, got {sorted(legs)}")
        used = [h for ab in pairs.values() for h in ab] + list(legs.values())
        if sorted(used) != sorted(vertex_of) or len(set(used)) != len(used):
            raise ValueError("every half-edge must be paired or a leg exactly once")
        return cls(
            len(vertex_ids),
            tuple((vertex_of[a], vertex_of[b]) for _, (a, b) in sorted(pairs.items())),
            tuple(vertex_of[h] for _, h in sorted(legs.items())),
        )

    def to_dot(self, name: str = "pants") -> str:
        out = [f"graph {name} {{"]
        out += [f"  v{w} [shape=circle];" for w in range(self.n_vertices)]
        out += [f'  L{j} [shape=box, label="{j}"];' for j in range(1, len(self.legs) + 1)]
        out += [f'  v{u} -- v{v} [label="{k}"];' for k, (u, v) in enumerate(self.edges, 1)]
        out += [f"  L{j} -- v{w};" for j, w in enumerate(self.legs, 1)]
        out.append("}")
        return "\n".join(out) + "\n"


# -- construction -----------------------------------------------------------


def standard_graph(sig: SurfaceSig) -> LabeledPantsGraph:
    """Graph of the standard decomposition of ``sig``.

    ``g`` handle vertices (a loop plus one connecting half-edge) hang off a
    chain of ``g - 2 + n`` vertices.  Pendants (handles first, then holes in
    mark order) are distributed along the chain, two on each end vertex and
    one on each interior vertex.  Labels: loops ``1..g`` first, then the
    remaining curves in the order met walking the chain left to right
    (a vertex's handle connectors before the chain edge leaving it).
    """
    g, n = sig.genus, sig.holes
    if sig.pants_count() == 1:
        if g == 1:
            return LabeledPantsGraph(1, ((0, 0),), (0,))
        return LabeledPantsGraph(1, (), (0, 0, 0))

    loops = [(h, h) for h in range(g)]
    connectors: list[tuple[int, int]] = []
    legs = [None] * n
    k = g - 2 + n
    if k == 0:
        # S_{2,0}: the dumbbell, two handles joined directly
        return LabeledPantsGraph(2, tuple(loops) + ((0, 1),), ())

    chain = list(range(g, g + k))
    slots = [2] + [1] * (k - 2) + [2] if k > 1 else [3]
    pendants = [("handle", h) for h in range(g)] + [("hole", j) for j in range(n)]
    it = iter(pendants)
    for c, count in zip(chain, slots):
        for _ in range(count):
            kind, idx = next(it)
            if kind == "handle":
                connectors.append((idx, c))
            else:
                legs[idx] = c
        if c != chain[-1]:
            connectors.append((c, c + 1))
    return LabeledPantsGraph(g + k, tuple(loops + connectors), tuple(legs))


# -- moves --------------------------------------------------------------------


def flip(graph: LabeledPantsGraph, label: int, choice: Optional[str] = None
         ) -> LabeledPantsGraph:
    """Re-pair the four half-edges around the curve ``label``.

    With endpoints ``u < v`` and remaining half-edges ``alpha < beta`` at
    ``u`` and ``gamma < delta`` at ``v``, choice ``"A"`` yields
    ``u: {alpha, gamma}`` and choice ``"B"`` yields ``u: {alpha, delta}``.
    A loop is the curve inside a handle; its flips do not change the graph,
    so it only accepts ``choice=None``.
    """
    u, v = graph.endpoints(label)
    if u == v:
        if choice is not None:
            raise ValueError(f"curve {label} is a loop; its flips take no choice")
        return graph
    if choice not in ("A", "B"):
        raise ValueError(f"flip of curve {label} needs choice 'A' or 'B', got {choice!r}")
    own = {2 * (label - 1), 2 * (label - 1) + 1}
    alpha, beta = [h for h in graph.half_edges_at(u) if h not in own]
    gamma, delta = [h for h in graph.half_edges_at(v) if h not in own]
    to_u = gamma if choice == "A" else delta
    return _move_half_edges(graph, {to_u: u, beta: v})


def _move_half_edges(graph: LabeledPantsGraph, moves: dict[int, int]
                     ) -> LabeledPantsGraph:
    m = graph.curve_count
    edges = [list(e) for e in graph.edges]
    legs = list(graph.legs)
    for h, w in moves.items():
        if h < 2 * m:
            edges[h // 2][h % 2] = w
        else:
            legs[h - 2 * m] = w
    return LabeledPantsGraph(graph.n_vertices, tuple(map(tuple, edges)), tuple(legs))


def s_move(graph: LabeledPantsGraph, label: int) -> LabeledPantsGraph:
    """Replace the curve inside a handle; the labeled graph is unchanged."""
    if not graph.is_loop(label):
        raise ValueError(f"curve {label} is not inside a handle (not a loop)")
    return graph


def apply_move(graph: LabeledPantsGraph, move: MoveRecord) -> LabeledPantsGraph:
    if move.kind == "flip":
        return flip(graph, move.label, move.choice)
    return s_move(graph, move.label)


def neighbours(graph: LabeledPantsGraph) -> Iterator[tuple[MoveRecord, LabeledPantsGraph]]:
    """Every graph reachable by one flip that changes the combinatorics."""
    for k in graph.labels():
        if graph.is_loop(k):
            continue
        for choice in ("A", "B"):
            yield MoveRecord("flip", k, choice), flip(graph, k, choice)


# -- canonical forms ----------------------------------------------------------


def _vertex_colors(graph: LabeledPantsGraph, respect_labels: bool,
                   respect_marks: bool) -> list[int]:
    V = graph.n_vertices
    legs_at = [[] for _ in range(V)]
    for j, w in enumerate(graph.legs, start=1):
        legs_at[w].append(j if respect_marks else 0)
    loops_at = [[] for _ in range(V)]
    nbrs = [[] for _ in range(V)]
    for k, (u, v) in enumerate(graph.edges, start=1):
        tag = k if respect_labels else 0
        if u == v:
            loops_at[u].append(tag)
        else:
            nbrs[u].append((v, tag))
            nbrs[v].append((u, tag))
    sigs = [(tuple(sorted(legs_at[w])), tuple(sorted(loops_at[w]))) for w in range(V)]
    colors = _rank(sigs)
    # 1-dimensional Weisfeiler-Leman refinement
    while True:
        sigs = [(colors[w], tuple(sorted((colors[x], t) for x, t in nbrs[w])))
                for w in range(V)]
        refined = _rank(sigs)
        if len(set(refined)) == len(set(colors)):
            return refined
        colors = refined


def _rank(sigs: list) -> list[int]:
    order = {s: i for i, s in enumerate(sorted(set(sigs)))}
    return [order[s] for s in sigs]


def _encode(graph: LabeledPantsGraph, perm: list[int], respect_labels: bool,
            respect_marks: bool) -> tuple:
    edges = [tuple(sorted((perm[u], perm[v]))) for u, v in graph.edges]
    if not respect_labels:
        edges.sort()
    legs = [perm[w] for w in graph.legs]
    if not respect_marks:
        legs.sort()
    return (graph.n_vertices, tuple(edges), tuple(legs))


def canonical_form(graph: LabeledPantsGraph, respect_labels: bool = True,
                   respect_marks: bool = True) -> tuple:
    colors = _vertex_colors(graph, respect_labels, respect_marks)
    cells: dict[int, list[int]] = {}
    for w, c in enumerate(colors):
        cells.setdefault(c, []).append(w)
    ordered = [cells[c] for c in sorted(cells)]
    best = None
    # a vertex's new index is fixed up to reordering inside its color cell
    for choice in itertools.product(*(itertools.permutations(c) for c in ordered)):
        perm = [0] * graph.n_vertices
        for new, old in enumerate(itertools.chain.from_iterable(choice)):
            perm[old] = new
        code = _encode(graph, perm, respect_labels, respect_marks)
        if best is None or code < best:
            best = code
    return best


def canonical_certificate(graph: LabeledPantsGraph, respect_labels: bool = True,
                          respect_marks: bool = True) -> bytes:
    """Isomorphism certificate fixing leg marks (and curve labels if asked)."""
    return repr(canonical_form(graph, respect_labels, respect_marks)).encode()


def graph_from_certificate(cert: bytes) -> LabeledPantsGraph:
    import ast

    V, edges, legs = ast.literal_eval(cert.decode())
    return LabeledPantsGraph(V, edges, legs)


# -- enumeration --------------------------------------------------------------


def _check_bound(sig: SurfaceSig, bound: int) -> None:
    if sig.pants_count() > bound:
        raise BoundExceeded(
            f"S_{{{sig.genus},{sig.holes}}} has {sig.pants_count()} pants, "
            f"above the enumeration bound {bound}"
        )


def _adjacency_fillings(deficit: list[int]) -> Iterator[list[tuple[int, int]]]:
    """Edge multisets on vertices ``0..V-1`` realizing ``deficit`` degrees."""
    V = len(deficit)
    rem = list(deficit)
    edges: list[tuple[int, int]] = []

    def rec(i: int, j: int):
        if i == V:
            yield list(edges)
            return
        if j == V:
            if rem[i] == 0:
                yield from rec(i + 1, i + 1)
            return
        if j == i:
            for loops in range(rem[i] // 2 + 1):
                rem[i] -= 2 * loops
                edges.extend([(i, i)] * loops)
                yield from rec(i, i + 1)
                del edges[len(edges) - loops:]
                rem[i] += 2 * loops
            return
        for mult in range(min(rem[i], rem[j]) + 1):
            rem[i] -= mult
            rem[j] -= mult
            edges.extend([(i, j)] * mult)
            yield from rec(i, j + 1)
            del edges[len(edges) - mult:]
            rem[i] += mult
            rem[j] += mult

    yield from rec(0, 0)


def _unmarked_graphs(sig: SurfaceSig) -> Iterator[LabeledPantsGraph]:
    V, n = sig.pants_count(), sig.holes
    for counts in _partitions_bounded(n, V, 3):
        deficit = [3 - c for c in counts]
        legs = tuple(w for w, c in enumerate(counts) for _ in range(c))
        for edges in _adjacency_fillings(deficit):
            try:
                yield LabeledPantsGraph(V, tuple(edges), legs)
            except ValueError:
                continue  # disconnected


def _partitions_bounded(total: int, parts: int, cap: int) -> Iterator[tuple[int, ...]]:
    """Non-increasing tuples of ``parts`` integers in ``[0, cap]`` summing to ``total``."""
    if parts == 0:
        if total == 0:
            yield ()
        return
    for first in range(min(cap, total), -1, -1):
        for rest in _partitions_bounded(total - first, parts - 1, first):
            yield (first,) + rest


def enumerate_graph_types(sig: SurfaceSig, marked: bool = True,
                          bound: int = DEFAULT_BOUND) -> set[bytes]:
    """Certificates of all trivalent graph types of ``sig`` (labels ignored).

    With ``marked`` the holes are distinguishable, so e.g. ``S_{0,4}`` has
    three types (one per way to split the holes 2 + 2); without it, one.
    """
    _check_bound(sig, bound)
    return set(_type_representatives(sig, marked))


def _type_representatives(sig: SurfaceSig, marked: bool) -> dict[bytes, LabeledPantsGraph]:
    reps: dict[bytes, LabeledPantsGraph] = {}
    for graph in _unmarked_graphs(sig):
        variants: Iterable[LabeledPantsGraph] = [graph]
        if marked:
            variants = (LabeledPantsGraph(graph.n_vertices, graph.edges, legs)
                        for legs in set(itertools.permutations(graph.legs)))
        for var in variants:
            cert = canonical_certificate(var, respect_labels=False, respect_marks=marked)
            reps.setdefault(cert, var)
    return reps


@dataclass
class OrbitCensus:
    count: int
    sizes: list[int]
    representatives: list[LabeledPantsGraph]
    states: int


def labeled_states(sig: SurfaceSig, bound: int = DEFAULT_BOUND
                   ) -> dict[bytes, LabeledPantsGraph]:
    """All labeled decompositions of ``sig`` in the quotient, keyed by certificate."""
    _check_bound(sig, bound)
    states: dict[bytes, LabeledPantsGraph] = {}
    m = sig.curve_count()
    for base in _type_representatives(sig, marked=True).values():
        for perm in itertools.permutations(range(1, m + 1)):
            g = base.relabel(dict(zip(range(1, m + 1), perm)))
            states.setdefault(canonical_certificate(g), g)
    return states


def labeled_orbits(sig: SurfaceSig, bound: int = DEFAULT_BOUND) -> OrbitCensus:
    """Orbits of labeled decompositions under flips and S-moves.

    S-moves fix the labeled graph, so only flips merge states.
    """
    states = labeled_states(sig, bound)
    uf = UnionFind(states)
    for cert, g in states.items():
        for _, h in neighbours(g):
            uf.union(cert, canonical_certificate(h))
    orbits = sorted((sorted(block) for block in uf.to_sets()), key=lambda b: b[0])
    return OrbitCensus(
        count=len(orbits),
        sizes=[len(b) for b in orbits],
        representatives=[states[b[0]] for b in orbits],
        states=len(states),
    )


def find_label_swap(graph: LabeledPantsGraph, label1: int, label2: int,
                    max_depth: int = 8) -> Optional[list[MoveRecord]]:
    """Shortest flip word whose result is ``graph`` with two labels exchanged.

    Breadth-first over labeled certificates.  Returns ``None`` when no word
    of length at most ``max_depth`` exists.  When the transposition is
    already a graph automorphism (parallel edges) the word is empty.
    """
    for k in (label1, label2):
        graph.endpoints(k)
    target = canonical_certificate(graph.relabel({label1: label2, label2: label1}))
    start = canonical_certificate(graph)
    if start == target:
        return []
    parent: dict[bytes, tuple[Optional[bytes], Optional[MoveRecord]]] = {start: (None, None)}
    frontier = deque([(graph, start, 0)])
    while frontier:
        g, cert, depth = frontier.popleft()
        if depth == max_depth:
            continue
        for move, h in neighbours(g):
            c = canonical_certificate(h)
            if c in parent:
                continue
            parent[c] = (cert, move)
            if c == target:
                return _unwind(parent, c)
            frontier.append((h, c, depth + 1))
    return None


def _unwind(parent, cert) -> list[MoveRecord]:
    word = []
    while parent[cert][0] is not None:
        cert, move = parent[cert]
        word.append(move)
    return word[::-1]


def words_of_length(graph: LabeledPantsGraph, length: int
                    ) -> Iterator[tuple[list[MoveRecord], LabeledPantsGraph]]:
    """Every flip word of exactly ``length`` moves, with its endpoint."""
    if length == 0:
        yield [], graph
        return
    for word, g in words_of_length(graph, length - 1):
        for move, h in neighbours(g):
            yield word + [move], h
