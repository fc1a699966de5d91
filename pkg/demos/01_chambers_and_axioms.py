"""
Chambers and the two axioms
===========================

Enumerate the chambers of a small arrangement, look at the inward wall
normals of one chamber, and check the crystallographic axiom (I) and the
additive axiom (A) on a good and a bad root set.
"""

from weylgroupoid import catalog
from weylgroupoid.arrangement import enumerate_chambers, validate_root_set
from weylgroupoid.axioms import check_additive, check_crystallographic, positive_system
from weylgroupoid.exact_geometry import vector_to_json

# The A2 root set in simple-root coordinates: three lines through the origin.
a2 = catalog.weyl_roots("A", 2)
graph = enumerate_chambers(a2)
print(f"A2: {len(graph)} chambers, {len(graph.edges)} wall crossings")

for c in graph.chambers:
    print(f"  chamber {c.id} {c.sign}  basis {[vector_to_json(b) for b in c.basis]}")

# The positive system at the all-plus chamber is every root with nonnegative
# coordinates in that chamber's basis.
fundamental = graph.by_sign((1, 1, 1))
print("positive system:", [vector_to_json(x) for x in positive_system(a2, fundamental)])

print("(I):", check_crystallographic(a2, graph).passed)
print("(A):", check_additive(a2, graph).passed)

# Replacing (1,1) by (2,1) keeps the arrangement simplicial but breaks
# integrality: some root needs half-integer coefficients in some chamber.
bad = validate_root_set(2, [(1, 0), (0, 1), (2, 1)])
report = check_crystallographic(bad)
print("bad (I):", report.passed)
print("first witness:", report.witnesses[0])
print("bad (A):", check_additive(bad).passed)
