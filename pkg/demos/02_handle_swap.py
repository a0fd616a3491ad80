"""
Exchanging the labels inside a handle
=====================================

Curves in a one-holed torus are primitive slopes p/q.  Three twists,
alternating between the two curves, exchange them.
"""

from labeled_pants import torus_handle as th

a, b = th.Slope(1, 0), th.Slope(0, 1)
print(f"start: a = {a}, b = {b}, they meet {th.intersection(a, b)} time")

word = th.find_handle_swap(a, b)
for step, state in zip([None] + word, th.replay_handle_word({"a": a, "b": b}, word)):
    move = f"T_{step.label}{'+' if step.direction > 0 else '-'}" if step else "    "
    print(f"{move}  a = {state['a']!s:5}  b = {state['b']}")

# exhaustive: no shorter word works, and exactly four of length three do
for length, words in th.shortest_handle_swaps(3).items():
    print(f"swapping words of length {length}: {len(words)}")
