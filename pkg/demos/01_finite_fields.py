#!/usr/bin/env python3
"""Exact arithmetic in small finite fields and the linear algebra on top.

Elements of GF(p^k) are plain integers 0..q-1: index sum(c_i p^i) stands
for the polynomial c0 + c1 t + ... over GF(p).  Matrices over the field
are just integer numpy arrays.
"""

import numpy as np

from quiverdec import char_poly, ff_enumerate, ff_make, is_nilpotent, kernel_basis, rref

# prime field: indices are the integers mod p
gf5 = ff_make(5, 1)
print("GF(5):", ff_enumerate(gf5))
print("2 * 4 =", gf5.mul(2, 4), "   inv(2) =", gf5.inv(2))

# extension field: GF(4) with the canonical modulus t^2 + t + 1
gf4 = ff_make(2, 2)
print("\nGF(4) header:", gf4.header())
t = 2  # the element t has coefficients (0, 1), hence index 0 + 1*2
print("t * t =", gf4.format_element(gf4.mul(t, t)), "(= t + 1)")
print("every nonzero element times its inverse:")
for a in range(1, 4):
    print(f"  {gf4.format_element(a)} * {gf4.format_element(gf4.inv(a))} = 1")

# a custom modulus: GF(9) as GF(3)[t]/(t^2 + 1)
gf9 = ff_make(3, 2, (1, 0, 1))
t9 = 3
print("\nGF(9) with t^2 = -1:  t * t =", gf9.mul(t9, t9), "(index of 2)")

# row reduction is deterministic and exact
m = np.array([[1, 1, 0], [1, 1, 1]])
reduced, pivots, rank = rref(ff_make(2, 1), m)
print("\nRREF over GF(2) of", m.tolist(), "->", reduced.tolist(), "pivots", pivots)

# kernels come in the standard free-variable parameterization
basis = kernel_basis(ff_make(2, 1), np.array([[1, 1, 0], [0, 0, 1]]))
print("kernel of [[1,1,0],[0,0,1]]:", [v.tolist() for v in basis])

# characteristic polynomials, monic in lambda, lowest degree first
nil = np.array([[0, 1], [0, 0]])
print("\nchar poly of the Jordan block:", char_poly(ff_make(2, 1), nil).coeffs)
print("is it nilpotent?", is_nilpotent(ff_make(2, 1), nil))
