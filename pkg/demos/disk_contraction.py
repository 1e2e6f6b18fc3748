"""Contract every 2-triangle disk of a chain, then expand and contract again."""

import sys

from gdq import catalog
from gdq.algebra import cartan_matrix, presentation_isomorphism
from gdq.disks import contract, expand, find_disks
from gdq.formats import format_tq

n = int(sys.argv[1]) if len(sys.argv) > 1 else 3
p = catalog.disk_chain_algebra(n, 2, 3)
disks = find_disks(p)
print(f"chain of {n} disks: {len(p.quiver.vertices)} vertices, dimension {len(p.basis)}")
for d in disks:
    print(f"  found {d}")

c = contract(p, disks)
print(f"\ncontracted: {len(c.quiver.vertices)} vertices, {len(c.two_cycles())} f'-2-cycles, "
      f"dimension {len(c.basis)}, Cartan determinant {cartan_matrix(c).determinant}")
print(format_tq(c, "contracted chain"))

ex = expand(c)
back = ex.presentation()
print(f"expanded again: {len(back.quiver.vertices)} vertices; "
      f"isomorphic to the original: {presentation_isomorphism(back, p) is not None}")
again = contract(back, ex.disks)
print(f"contract(expand(.)) reproduces the text exactly: {format_tq(again) == format_tq(c)}")
