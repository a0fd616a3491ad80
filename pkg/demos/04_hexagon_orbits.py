"""
Orbits of hexagon labelings
===========================

Strict labelings keep {1,2,3} on one decomposition; rotations and
reflections act on them.  Labeled mode also allows switching opposite
sides.  The census counts orbits and compares them with the obvious
invariants: cyclic order, and which labels sit opposite each other.
"""

from labeled_pants import hexagon_orbits as hx

for mode, key in (("strict", hx.cyclic_order), ("labeled", hx.opposite_pairing)):
    census = hx.enumerate_orbits(mode)
    blocks = hx.partition_by(hx.all_labelings(mode), key)
    print(f"{mode}: {census.orbit_count} orbits over {census.labelings} labelings, "
          f"{len(blocks)} invariant classes")
    for o in census.orbits[:3]:
        print(f"  size {o.size:3}  from {o.representative}  invariant {o.invariant}")
    print("  ...")
