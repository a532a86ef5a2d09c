"""The submodule product and nilpotency
=======================================

The product N*K inside M is the sum of the images of N under every map from
M into K.  On the ring as a module over itself it is the usual ideal
product.  Powers are left-nested; traces stop at zero or on a repeat, and
record whether the two nestings ever diverge.
"""

from finmod.algebra import regular_module, triangular_ring, zn_ring
from finmod.lattice import Submodule, cyclic_submodule
from finmod.product import (
    is_locally_nilpotent,
    is_nil_submodule,
    nilpotency_index,
    power_trace,
    product,
)

z8 = regular_module(zn_ring(8))
two = cyclic_submodule(z8, (2,))
trace = power_trace(z8, two)
print("powers of 2Z8:", [s.describe() for s in trace.chain], trace.terminal)
print("nilpotency index:", nilpotency_index(z8, two))

# In Z/6 the submodule 2M is idempotent: powers cycle and never vanish.
z6 = regular_module(zn_ring(6))
two6 = cyclic_submodule(z6, (2,))
print("powers of 2Z6 terminal:", power_trace(z6, two6).terminal)
print("2Z6 nil?", is_nil_submodule(z6, two6).is_nil)
print("2Z6 locally nilpotent?", is_locally_nilpotent(z6, two6))

# On the triangular ring the product agrees with the ideal product: the
# strictly upper triangular part squares to zero.
t2 = regular_module(triangular_ring(2, 2))
j = cyclic_submodule(t2, (0, 1, 0))
print("J * J in T2(Z2):", product(t2, j, j).describe())
print("J nil?", is_nil_submodule(t2, j).is_nil)

# Products always land inside the right factor and are monotone in both
# arguments; under quasi-projectivity they associate.
full = Submodule.full(t2)
print("J * R =", product(t2, j, full).describe(), " R * J =", product(t2, full, j).describe())
