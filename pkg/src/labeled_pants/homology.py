"""Integer and mod-2 homology of a closed genus-g surface.

Coordinates are ordered ``e_1, f_1, ..., e_g, f_g`` with the standard
symplectic form ``<e_i, f_i> = 1``.  Curves are unoriented, so a class is
stored as the representative of ``{v, -v}`` whose first nonzero coordinate
is positive and all comparisons are up to sign.
"""

from __future__ import annotations

import itertools
import json
import math
from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

import numpy as np


def standard_form(genus: int) -> np.ndarray:
    J = np.zeros((2 * genus, 2 * genus), dtype=np.int64)
    for i in range(genus):
        J[2 * i, 2 * i + 1] = 1
        J[2 * i + 1, 2 * i] = -1
    return J


class SymplecticLattice:
    """``H_1`` of a closed genus-``g`` surface with its intersection form."""

    def __init__(self, genus: int):
        if genus < 1:
            raise ValueError("genus must be positive")
        self.genus = genus
        self.form = standard_form(genus)

    @property
    def rank(self) -> int:
        return 2 * self.genus

    def e(self, i: int) -> "CurveClass":
        v = np.zeros(self.rank, dtype=np.int64)
        v[2 * (i - 1)] = 1
        return CurveClass(v)

    def f(self, i: int) -> "CurveClass":
        v = np.zeros(self.rank, dtype=np.int64)
        v[2 * (i - 1) + 1] = 1
        return CurveClass(v)

    def symbols(self) -> list[str]:
        return [s for i in range(1, self.genus + 1) for s in (f"e{i}", f"f{i}")]

    def __eq__(self, other):
        return isinstance(other, SymplecticLattice) and other.genus == self.genus

    def __repr__(self):
        return f"SymplecticLattice({self.genus})"


def _sign_normalize(v: np.ndarray) -> np.ndarray:
    nz = np.flatnonzero(v)
    if len(nz) and v[nz[0]] < 0:
        return -v
    return v


class CurveClass:
    """Homology class of an unoriented curve.

    The zero class stands for a separating (homologically trivial) curve and
    must be asked for with ``trivial_ok=True``.
    """

    __slots__ = ("vector",)

    def __init__(self, vector: Iterable[int], trivial_ok: bool = False):
        v = np.array(list(vector) if not isinstance(vector, np.ndarray) else vector,
                     dtype=np.int64)
        if v.ndim != 1 or len(v) % 2:
            raise ValueError(f"class vector must have even length, got shape {v.shape}")
        if not v.any() and not trivial_ok:
            raise ValueError("zero class requires trivial_ok=True")
        v = _sign_normalize(v)
        v.setflags(write=False)
        self.vector = v

    @property
    def genus(self) -> int:
        return len(self.vector) // 2

    @property
    def is_trivial(self) -> bool:
        return not self.vector.any()

    def __eq__(self, other):
        if not isinstance(other, CurveClass):
            return NotImplemented
        return np.array_equal(self.vector, other.vector)

    def __hash__(self):
        return hash(tuple(self.vector.tolist()))

    def __repr__(self):
        return f"CurveClass({self.vector.tolist()})"

    def symbolic(self) -> str:
        names = [s for i in range(1, self.genus + 1) for s in (f"e{i}", f"f{i}")]
        terms = []
        for c, s in zip(self.vector.tolist(), names):
            if c == 0:
                continue
            coef = "" if abs(c) == 1 else str(abs(c))
            terms.append(("-" if c < 0 else "+") + coef + s)
        if not terms:
            return "0"
        out = "".join(terms)
        return out[1:] if out[0] == "+" else out


def _vec(x) -> np.ndarray:
    return x.vector if isinstance(x, CurveClass) else np.asarray(x, dtype=np.int64)


def pairing(x, y) -> int:
    """Intersection number of the stored representatives.

    Only ``abs(pairing(x, y))`` is independent of orientations.
    """
    a, b = _vec(x), _vec(y)
    if a.shape != b.shape:
        raise ValueError(f"dimension mismatch: {a.shape} vs {b.shape}")
    return int(a @ standard_form(len(a) // 2) @ b)


def twist(c, direction: int, x) -> CurveClass:
    """Image of ``x`` under a Dehn twist along ``c``: ``x + d <x, c> c``."""
    if direction not in (1, -1):
        raise ValueError("direction must be +1 or -1")
    a, b = _vec(c), _vec(x)
    return CurveClass(b + direction * pairing(b, a) * a, trivial_ok=True)


def flip_class(b1, b2, signs: tuple[int, int] = (1, 1)) -> CurveClass:
    """Class of the curve that replaces a pants boundary after a flip.

    The new curve co-bounds a pair of pants with the other two boundaries,
    so its class is ``s1 * (b1 + s2 * b2)``.
    """
    s1, s2 = signs
    if s1 not in (1, -1) or s2 not in (1, -1):
        raise ValueError(f"signs must be +-1, got {signs}")
    return CurveClass(s1 * (_vec(b1) + s2 * _vec(b2)), trivial_ok=True)


@dataclass(frozen=True)
class Z2Class:
    bits: tuple[int, ...]

    def __add__(self, other: "Z2Class") -> "Z2Class":
        return Z2Class(tuple((a + b) % 2 for a, b in zip(self.bits, other.bits)))

    @property
    def is_zero(self) -> bool:
        return not any(self.bits)


def z2_reduce(x) -> Z2Class:
    return Z2Class(tuple(int(c) % 2 for c in _vec(x)))


# -- Lagrangian planes ----------------------------------------------------------


def _int_det(rows: np.ndarray) -> int:
    # small integer matrices only; float determinant is exact after rounding
    return int(round(np.linalg.det(rows.astype(float))))


class LagrangianPlane:
    """Isotropic rank-``g`` sublattice spanned by a decomposition's curves.

    Generators may be more than ``g`` (a decomposition has ``3g - 3``
    curves); trivial classes are dropped.
    """

    def __init__(self, generators: Sequence):
        vecs = [_vec(x) for x in generators if _vec(x).any()]
        if not vecs:
            raise ValueError("a Lagrangian plane needs nonzero generators")
        self.matrix = np.array(vecs, dtype=np.int64)
        self.genus = self.matrix.shape[1] // 2
        if np.linalg.matrix_rank(self.matrix) != self.genus:
            raise ValueError(
                f"generators span rank {np.linalg.matrix_rank(self.matrix)}, "
                f"expected {self.genus}"
            )
        if (self.matrix @ standard_form(self.genus) @ self.matrix.T).any():
            raise ValueError("generators are not pairwise disjoint in homology")

    def same_span(self, other: "LagrangianPlane") -> bool:
        """Equal integer spans (not just equal rational spans)."""
        stacked = np.vstack([self.matrix, other.matrix])
        if np.linalg.matrix_rank(stacked) != self.genus:
            return False
        # L1 + L2 contains both; equal minor gcds force equality
        g = self.genus
        return _minor_gcd(self.matrix, g) == _minor_gcd(other.matrix, g) == _minor_gcd(stacked, g)


def _minor_gcd(rows: np.ndarray, r: int) -> int:
    """Gcd of the ``r x r`` minors: the product of the Smith invariants."""
    out = 0
    for sub in itertools.combinations(range(len(rows)), r):
        for cols in itertools.combinations(range(rows.shape[1]), r):
            out = math.gcd(out, abs(_int_det(rows[list(sub)][:, list(cols)])))
            if out == 1:
                return 1
    return out


def general_position(La: LagrangianPlane, Lb: LagrangianPlane) -> bool:
    """``La`` and ``Lb`` meet in 0 and together span the whole lattice.

    With exactly ``g`` generators each this is ``det = +-1`` for the stacked
    generator matrix; in general the gcd of its maximal minors must be 1.
    """
    if La.genus != Lb.genus:
        raise ValueError("planes live in different lattices")
    stacked = np.vstack([La.matrix, Lb.matrix])
    n = stacked.shape[1]
    if np.linalg.matrix_rank(stacked) != n:
        return False
    return _minor_gcd(stacked, n) == 1


# -- double decompositions --------------------------------------------------------


@dataclass
class HomologicalDoublePants:
    """Labeled curve classes of a double pants decomposition ``(P_a, P_b)``.

    ``relations`` lists label triples bounding a common pair of pants; a flip
    of one label uses the other two.  ``names`` optionally records the curve
    each label started on (``"a1"``, ``"b3"``, ...); moves do not update it.
    """

    classes: dict[int, CurveClass]
    relations: list[tuple[int, int, int]]
    a_labels: tuple[int, ...]
    b_labels: tuple[int, ...]
    names: dict[int, str] = field(default_factory=dict)

    def __post_init__(self):
        if len(set(self.a_labels) | set(self.b_labels)) != len(self.classes):
            raise ValueError("label sets of P_a and P_b must partition the classes")
        for rel in self.relations:
            if not relation_holds([self.classes[k] for k in rel]):
                raise ValueError(f"pants relation {rel} does not sum to zero")

    def copy_with(self, classes: dict[int, CurveClass]) -> "HomologicalDoublePants":
        return HomologicalDoublePants(dict(classes), list(self.relations),
                                      self.a_labels, self.b_labels, dict(self.names))

    def label_of(self, name: str) -> int:
        for k, nm in self.names.items():
            if nm == name:
                return k
        raise KeyError(name)

    def planes(self) -> tuple[LagrangianPlane, LagrangianPlane]:
        return (LagrangianPlane([self.classes[k] for k in self.a_labels]),
                LagrangianPlane([self.classes[k] for k in self.b_labels]))

    def partners(self, label: int) -> tuple[int, int]:
        for rel in self.relations:
            if label in rel:
                others = tuple(k for k in rel if k != label)
                if len(others) == 2:
                    return others
        raise KeyError(f"no pants relation registered for label {label}")

    def to_json(self) -> str:
        return json.dumps({
            "schema": 1,
            "classes": {str(k): self.classes[k].vector.tolist() for k in sorted(self.classes)},
            "relations": [list(r) for r in self.relations],
            "a_labels": list(self.a_labels),
            "b_labels": list(self.b_labels),
            "names": {str(k): v for k, v in sorted(self.names.items())},
        }, sort_keys=True)

    @classmethod
    def from_json(cls, text: str) -> "HomologicalDoublePants":
        d = json.loads(text)
        return cls(
            {int(k): CurveClass(v, trivial_ok=True) for k, v in d["classes"].items()},
            [tuple(r) for r in d.get("relations", [])],
            tuple(d["a_labels"]),
            tuple(d["b_labels"]),
            {int(k): v for k, v in d.get("names", {}).items()},
        )


def relation_holds(classes: Sequence[CurveClass]) -> bool:
    """Some choice of signs makes the classes sum to zero."""
    vecs = [c.vector for c in classes]
    return any(not sum(s * v for s, v in zip(signs, vecs)).any()
               for signs in itertools.product((1, -1), repeat=len(vecs)))


# Hexagon positions [a1, b3, a2, b1, a3, b2] and the labels they carry.
HEXAGON_NAMES = ("a1", "b3", "a2", "b1", "a3", "b2")
HEXAGON_LABELS = (1, 4, 2, 5, 3, 6)
# Twist words number the curves a_i -> i, b_i -> i + 3.
CURVE_NUMBERS = {"a1": 1, "a2": 2, "a3": 3, "b1": 4, "b2": 5, "b3": 6}
HEXAGON_TABLE = {
    "a1": (1, 0, 0, 0),
    "a2": (0, 0, 1, 0),
    "a3": (-1, 0, -1, 0),
    "b1": (0, 0, 0, 1),
    "b2": (0, 1, 0, 0),
    "b3": (0, 1, 0, -1),
}


def hexagon_pattern_holds(vectors: dict[str, Sequence[int]]) -> bool:
    """Neighbours around the hexagon meet once, all other pairs are disjoint."""
    for i, j in itertools.combinations(range(6), 2):
        want = 1 if (j - i) % 6 in (1, 5) else 0
        if abs(pairing(vectors[HEXAGON_NAMES[i]], vectors[HEXAGON_NAMES[j]])) != want:
            return False
    return True


def hexagon_classes(labels: Sequence[int] = HEXAGON_LABELS) -> HomologicalDoublePants:
    """The hexagonal decomposition of ``S_{2,0}`` with ``labels`` at its positions."""
    if sorted(labels) != [1, 2, 3, 4, 5, 6]:
        raise ValueError(f"hexagon labels must be a permutation of 1..6: {labels}")
    names = dict(zip(labels, HEXAGON_NAMES))
    classes = {k: CurveClass(HEXAGON_TABLE[nm]) for k, nm in names.items()}
    a = tuple(k for k in labels if names[k].startswith("a"))
    b = tuple(k for k in labels if names[k].startswith("b"))
    return HomologicalDoublePants(classes, [tuple(sorted(a)), tuple(sorted(b))],
                                  tuple(sorted(a)), tuple(sorted(b)), names)


def standard_classes(genus: int = 2) -> HomologicalDoublePants:
    """Standard double decomposition of the closed surface of genus 2.

    Labels ``1, 2`` are the handle curves ``e_1, e_2`` of ``P_a``, ``3`` its
    separating curve; ``4, 5`` the handle curves ``f_1, f_2`` of ``P_b`` and
    ``6`` the same separating curve.
    """
    if genus != 2:
        raise NotImplementedError("only genus 2 is modeled")
    L = SymplecticLattice(2)
    zero = CurveClass([0] * 4, trivial_ok=True)
    classes = {1: L.e(1), 2: L.e(2), 3: zero, 4: L.f(1), 5: L.f(2), 6: zero}
    names = {1: "a1", 2: "a2", 3: "c", 4: "b1", 5: "b2", 6: "c"}
    return HomologicalDoublePants(classes, [], (1, 2, 3), (4, 5, 6), names)


# -- searches -----------------------------------------------------------------------


def apply_twist(state: HomologicalDoublePants, label: int, direction: int
                ) -> HomologicalDoublePants:
    """Twist every class along the current class of ``label``."""
    if label not in state.classes:
        raise KeyError(f"no curve labeled {label}")
    c = state.classes[label]
    return state.copy_with({k: twist(c, direction, x) for k, x in state.classes.items()})


def apply_flip(state: HomologicalDoublePants, label: int, signs: tuple[int, int]
               ) -> HomologicalDoublePants:
    if label not in state.classes:
        raise KeyError(f"no curve labeled {label}")
    p, q = state.partners(label)
    classes = dict(state.classes)
    classes[label] = flip_class(classes[p], classes[q], signs)
    return state.copy_with(classes)


def replay_script(state: HomologicalDoublePants, script) -> HomologicalDoublePants:
    """Apply parsed moves (``twist`` and ``flip``) in order."""
    for move in script:
        if move.op == "twist":
            state = apply_twist(state, move.label, move.direction)
        elif move.op == "flip":
            state = apply_flip(state, move.label, move.signs)
        else:
            raise ValueError(f"move {move.op!r} has no homology action")
    return state


def matches_up_to_sign(state: HomologicalDoublePants, target: dict[int, CurveClass]) -> bool:
    return all(state.classes[k] == target[k] for k in target)


def permuted_target(state: HomologicalDoublePants, old: Sequence[int], new: Sequence[int]
                    ) -> dict[int, CurveClass]:
    """Classes each label must end on when ``old`` positions become ``new``."""
    by_position = [state.classes[k] for k in old]
    return {k: by_position[i] for i, k in enumerate(new)}


@dataclass
class TwistWitness:
    labels: list[int]
    directions: list[int]
    flip_signs: list[tuple[int, int]] = field(default_factory=list)
    flip_labels: list[int] = field(default_factory=list)

    def script_lines(self) -> list[str]:
        lines = [f"flip {k} {'+' if s1 > 0 else '-'} {'+' if s2 > 0 else '-'}"
                 for k, (s1, s2) in zip(self.flip_labels, self.flip_signs)]
        lines += [f"twist {k} {'+' if d > 0 else '-'}"
                  for k, d in zip(self.labels, self.directions)]
        return lines


def search_word(state: HomologicalDoublePants, twist_labels: Sequence[int],
                target: dict[int, CurveClass], flip_labels: Sequence[int] = ()
                ) -> Optional[TwistWitness]:
    """First sign assignment (lexicographic, ``+`` first) reaching ``target``.

    Flips are applied first, then the twists in order, each twist along the
    curve currently carrying its label.  Only the inner sign of a flip is
    searched: the outer one does not change an unoriented class.
    """
    for fsigns in itertools.product((1, -1), repeat=len(flip_labels)):
        s = state
        for k, s2 in zip(flip_labels, fsigns):
            s = apply_flip(s, k, (1, s2))
        for dirs in itertools.product((1, -1), repeat=len(twist_labels)):
            t = s
            for k, d in zip(twist_labels, dirs):
                t = apply_twist(t, k, d)
            if matches_up_to_sign(t, target):
                return TwistWitness(list(twist_labels), list(dirs),
                                    [(1, f) for f in fsigns], list(flip_labels))
    return None


def labels_for_curve_numbers(state: HomologicalDoublePants, numbers: Sequence[int]
                             ) -> list[int]:
    """Translate curve numbers (``a_i -> i``, ``b_i -> i + 3``) to current labels."""
    by_number = {CURVE_NUMBERS[nm]: k for k, nm in state.names.items()}
    return [by_number[i] for i in numbers]


ROTATION_WORD = (2, 4, 3, 5, 1)
REFLECTION_FLIPS = (3, 6)
REFLECTION_WORD = (4, 2, 1, 5, 1, 4)


def verify_rotation(state: HomologicalDoublePants, word: Sequence[int] = ROTATION_WORD
                    ) -> Optional[TwistWitness]:
    """Directions for the twist word that rotate the hexagon labels by one.

    ``word`` holds curve numbers (``a_i -> i``, ``b_i -> i + 3``).  The
    target moves the label at each hexagon position to the next position,
    so ``[1, 4, 2, 5, 3, 6]`` becomes ``[6, 1, 4, 2, 5, 3]``.
    """
    if not _is_hexagonal(state):
        return None
    order = _position_order(state)
    target = permuted_target(state, order, order[-1:] + order[:-1])
    return search_word(state, labels_for_curve_numbers(state, word), target)


def verify_reflection(state: HomologicalDoublePants,
                      flips: Sequence[int] = REFLECTION_FLIPS,
                      word: Sequence[int] = REFLECTION_WORD) -> Optional[TwistWitness]:
    """Flip signs and twist directions reversing the hexagon labels."""
    if not _is_hexagonal(state):
        return None
    order = _position_order(state)
    target = permuted_target(state, order, order[::-1])
    return search_word(state, labels_for_curve_numbers(state, word), target,
                       labels_for_curve_numbers(state, flips))


def _position_order(state: HomologicalDoublePants) -> list[int]:
    by_name = {nm: k for k, nm in state.names.items()}
    return [by_name[nm] for nm in HEXAGON_NAMES]


def _is_hexagonal(state: HomologicalDoublePants) -> bool:
    if sorted(state.names.values()) != sorted(HEXAGON_NAMES):
        return False
    vectors = {nm: state.classes[k].vector for k, nm in state.names.items()}
    return hexagon_pattern_holds(vectors)
