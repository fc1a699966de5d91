"""
From an arrangement to a Cartan scheme
======================================

Build the Cartan scheme of G2, read off a Cartan matrix, walk an
alternating gallery and run every axiom check.
"""

from weylgroupoid import catalog
from weylgroupoid import cartan_scheme as cs

g2 = catalog.weyl_roots("G2")
S = cs.build_scheme(g2)
print(f"G2: {len(S.objects)} objects")
print("Cartan matrix at the base object:", S.cartan(0))

# Crossing the walls labelled 1, 2, 1, 2, ... closes up after 2 * m_12 steps
# and the composite morphism is the identity.
m = cs.m_ij(S, 0, 0, 1)
steps, composite = cs.alternating_gallery(S, 0, 0, 1)
print(f"m_12 = {m}, gallery closes after {steps} steps, composite = {composite.matrix}")

# Positive roots at a few objects.  For a Weyl group every object sees the
# same set; for a genuine Weyl groupoid they would differ.
for a in (0, 1, 5):
    print(f"R^{a}_+ =", S.objects[a].positive_roots)

report = cs.verify_all(S)
for name, ok in report.flags().items():
    print(f"{name:>16}: {'pass' if ok else 'FAIL'}")
