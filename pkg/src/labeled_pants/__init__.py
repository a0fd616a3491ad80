"""Flip, twist and switch moves on labeled pants and double pants decompositions.

Submodules:

- ``pants_graph``: trivalent-graph model of pants decompositions, flips,
  S-moves, canonical forms, labeled orbit enumeration.
- ``homology``: symplectic lattice, Dehn-twist transvections, Lagrangian
  planes, the hexagon class table and its twist/flip searches.
- ``torus_handle``: exact slope model of curves inside a handle.
- ``hexagon_orbits``: labelings of the genus-2 hexagon and their orbit censuses.
- ``dsl`` / ``replay``: the move-script language and per-model replays.
- ``verify`` / ``cli``: named verifications and the command line.
"""

from .hexagon_orbits import HexLabeling, enumerate_orbits, reflect, rotate, switch
from .homology import (
    CurveClass,
    HomologicalDoublePants,
    LagrangianPlane,
    SymplecticLattice,
    flip_class,
    general_position,
    hexagon_classes,
    pairing,
    twist,
    verify_rotation,
    z2_reduce,
)
from .pants_graph import (
    LabeledPantsGraph,
    MoveRecord,
    SurfaceSig,
    canonical_certificate,
    enumerate_graph_types,
    find_label_swap,
    flip,
    labeled_orbits,
    s_move,
    standard_graph,
)
from .torus_handle import Slope, find_handle_swap, intersection, twist_slope

__version__ = "0.1.0"
