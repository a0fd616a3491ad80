"""
Rotating and reflecting the hexagon in homology
===============================================

The genus-2 hexagonal double decomposition has six curves
[a1, b3, a2, b1, a3, b2] around a hexagon, each meeting its two
neighbours once.  Five twists rotate the labels; two flips and six
twists reflect them.  Both are checked on the integral homology classes.
"""

from labeled_pants import homology as hm
from labeled_pants.dsl import parse_script
from labeled_pants.replay import decode_hexagon

t = hm.hexagon_classes()
for nm in hm.HEXAGON_NAMES:
    k = t.label_of(nm)
    print(f"{nm} (label {k}): {t.classes[k].symbolic()}")

rot = hm.verify_rotation(t)
print("\nrotation:", ", ".join(rot.script_lines()))
print("result:", decode_hexagon(hm.replay_script(t, parse_script("\n".join(rot.script_lines()))),
                                "labeled"))

ref = hm.verify_reflection(t)
print("\nreflection:", ", ".join(ref.script_lines()))
out = hm.replay_script(t, parse_script("\n".join(ref.script_lines())))
print("result:", decode_hexagon(out, "labeled"))

# the two Lagrangian planes stay complementary over the integers
print("\ngeneral position before:", hm.general_position(*t.planes()))
print("general position after: ", hm.general_position(*out.planes()))
