#!/usr/bin/env python3
"""The integer sequences the fire counts generate, and their differences.

Root and total fire counts only change when the pile size crosses a
multiple of k, so sampling once per block gives the sequences g0 and G.
Their first differences d0 and D have a fractal structure: d0 can be grown
by repeatedly replacing every kth occurrence of x-1 with x, and the
distinct values of D are exactly the a-sequence 1, k+2, ...
"""

import io
import sys

from chipfire import SequenceId, difference, emit_bfile, generate
from chipfire.formulas import a_seq, d0_by_replacement
from chipfire.sequences import reference_fixtures

K = 2

g0 = generate(SequenceId("g0", K), count=32)
G = generate(SequenceId("G", K), count=32)
print(f"g0(., {K}) : {g0.values}")
print(f"d0(., {K}) : {difference(g0).values}")
print(f"G(., {K})  : {G.values}")
print(f"D(., {K})  : {difference(G).values}\n")

print("d0 grown by digit replacement (every kth x-1 becomes x):")
print(f"  {d0_by_replacement(31, K)}")
assert tuple(d0_by_replacement(31, K)) == difference(g0).values

print("\ndistinct D values are the a-sequence:")
for k in (2, 3, 10):
    print(f"  k = {k:>2}: {[a_seq(n, k) for n in range(1, 8)]}")
print("  (in base k these concatenate the digits 1, 2, 3, ... while n < k)")

print(f"\n{len(reference_fixtures())} published reference windows ship with "
      "the package and are pinned by the test suite.")

print("\nb-file for g0(., 3), ready for an OEIS upload:")
sink = io.StringIO()
emit_bfile(generate(SequenceId("g0", 3), count=14), sink)
sys.stdout.write(sink.getvalue())
