"""
Flips and S-moves connect all labelings
=======================================

For small surfaces, enumerate every labeled pants decomposition type
reachable from the standard one and check there is a single orbit.
"""

from labeled_pants import pants_graph as pg

for g, n in ((0, 4), (1, 1), (1, 2), (2, 0), (0, 5), (1, 3)):
    sig = pg.SurfaceSig(g, n)
    types = pg.enumerate_graph_types(sig)
    census = pg.labeled_orbits(sig)
    print(f"S_{g},{n}: {len(types)} graph types, {census.states} labeled states, "
          f"{census.count} orbit")
