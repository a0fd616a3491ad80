"""
Swapping two adjacent labels with five flips
============================================

A pants decomposition of the five-holed sphere is a path of three pants.
Curves 1 and 2 share the middle pants.  Breadth-first search over flips
finds the shortest word that exchanges their labels.
"""

from labeled_pants import pants_graph as pg

g = pg.standard_graph(pg.SurfaceSig(0, 5))
print(g.to_text())

# the search compares states up to graph isomorphism, so only labels count
word = pg.find_label_swap(g, 1, 2)
print("word:", " ; ".join(m.dsl() for m in word))

h = g
for m in word:
    h = pg.apply_move(h, m)
same = pg.canonical_certificate(h) == pg.canonical_certificate(g.relabel({1: 2, 2: 1}))
print("labels 1 and 2 exchanged:", same)

# nothing shorter does it
target = pg.canonical_certificate(g.relabel({1: 2, 2: 1}))
for k in range(len(word)):
    hits = sum(pg.canonical_certificate(x) == target for _, x in pg.words_of_length(g, k))
    print(f"  words of length {k} that swap: {hits}")
