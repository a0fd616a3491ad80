"""
Flips preserve the mod-2 class
==============================

If three curves bound a pants, the class of each is plus or minus the sum
of the other two.  Whatever signs a flip picks, the new curve agrees with
the old one mod 2.
"""

import numpy as np

from labeled_pants import homology as hm
from labeled_pants.verify import random_relation

rng = np.random.default_rng(7)
for _ in range(5):
    b1, b2, third = random_relation(rng)
    images = {str(hm.z2_reduce(hm.flip_class(b1, b2, s)).bits)
              for s in ((1, 1), (1, -1), (-1, 1), (-1, -1))}
    print(f"b1={b1} b2={b2} old={third} -> mod 2 {hm.z2_reduce(third).bits}, "
          f"flips give {sorted(images)}")
