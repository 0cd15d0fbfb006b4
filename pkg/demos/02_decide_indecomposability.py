#!/usr/bin/env python3
"""Deciding absolute indecomposability of quiver representations.

A representation assigns a matrix to each oriented edge.  It is
absolutely indecomposable (stays indecomposable over the algebraic
closure) exactly when its endomorphism algebra is quasi-nilpotent:
every endomorphism basis element has a single repeated eigenvalue, and
the algebra is nilpotent under commutators.  Both checks run in
polynomial time; a brute-force sweep over all q^m algebra elements
confirms them at this scale.
"""

import numpy as np

from quiverdec import (
    Quiver,
    Representation,
    all_elements_qn_oracle,
    decide_abs_indec,
    direct_sum,
    end_basis,
    ff_make,
    random_rep,
)

gf2 = ff_make(2, 1)
a2 = Quiver(("v1", "v2"), (("v1", "v2"),))

# the unique indecomposable of dimension (1,1) on the A2 quiver
rep = Representation(a2, gf2, {"v1": 1, "v2": 1}, [np.array([[1]])])
verdict = decide_abs_indec(rep)
print("A2 with map [1]:", verdict.decision, "eig values:", verdict.eig_values)

# the zero map splits into two simples; the decision names the witness
zero = Representation(a2, gf2, {"v1": 1, "v2": 1}, [np.array([[0]])])
verdict = decide_abs_indec(zero)
print("A2 with map [0]:", verdict.decision, "| reason:", verdict.reason,
      "| failing basis element:", verdict.failing_index)

# the endomorphism algebra itself is inspectable
algebra = end_basis(zero)
print("End dimension of the zero map:", algebra.m)
for i, blocks in enumerate(algebra.basis):
    print(f"  basis[{i}]: a[v1] = {blocks['v1'].tolist()}, a[v2] = {blocks['v2'].tolist()}")

# self-loops are fine on the decision path
jordan = Quiver(("v",), (("v", "v"),))
j0 = Representation(jordan, gf2, {"v": 2}, [np.array([[0, 1], [0, 0]])])
print("\nJordan block J(0), dim 2:", decide_abs_indec(j0).decision)
d01 = Representation(jordan, gf2, {"v": 2}, [np.array([[0, 0], [0, 1]])])
print("diag(0,1), dim 2:", decide_abs_indec(d01).decision)

# direct sums are never absolutely indecomposable
summed = direct_sum(rep, rep)
print("\nrep + rep:", decide_abs_indec(summed).decision)

# the brute-force oracle agrees with the two-step decision
kron = Quiver(("v1", "v2"), (("v1", "v2"), ("v1", "v2")))
print("\ndecision vs. oracle on 10 random Kronecker reps of dimension (2,2):")
for seed in range(10):
    r = random_rep(kron, {"v1": 2, "v2": 2}, gf2, seed)
    fast = decide_abs_indec(r).absolutely_indecomposable
    slow = all_elements_qn_oracle(end_basis(r))
    print(f"  seed {seed}: decide={fast}  oracle={slow}  agree={fast == slow}")
