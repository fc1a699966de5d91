"""
Going back and forth
====================

A root set at any object of the scheme is again a crystallographic
arrangement equivalent to the one we started from, and schemes built at
different chambers are equivalent.  B3 and C3 stay apart on both sides.
"""

from weylgroupoid import catalog
from weylgroupoid import cartan_scheme as cs
from weylgroupoid.axioms import arrangement_equivalence

b3 = catalog.weyl_roots("B", 3)
c3 = catalog.weyl_roots("C", 3)

S = cs.build_scheme(b3)
back = cs.arrangement_from_object(S, 17)
print("root set at object 17:", [tuple(int(x) for x in v) for v in back.positive_roots])

psi = arrangement_equivalence(b3, back)
print("equivalent to B3 via psi =", [[str(x) for x in row] for row in psi])

S_other = cs.build_scheme(b3, chamber=30)
print("scheme at chamber 30 equivalent:", cs.scheme_equivalence(S, S_other) is not None)

print("B3 ~ C3 as arrangements:", arrangement_equivalence(b3, c3) is not None)
print("B3 ~ C3 as schemes:", cs.scheme_equivalence(S, cs.build_scheme(c3)) is not None)
