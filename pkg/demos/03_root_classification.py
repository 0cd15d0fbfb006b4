#!/usr/bin/env python3
"""Dimension vectors against the root system of the underlying graph.

The symmetric Cartan matrix of the (loop-free) graph induces a bilinear
form; a nonzero non-negative vector is a real root, an imaginary root,
or not a positive root at all.  The classifier descends by height
through simple reflections and returns a replayable word of
reflections.
"""

from quiverdec import (
    Quiver,
    bilinear,
    cartan,
    classify,
    norm,
    real_roots_up_to,
    reflect_simple,
)

a2 = Quiver(("v1", "v2"), (("v1", "v2"),))
kron = Quiver(("v1", "v2"), (("v1", "v2"),) * 2)
gamma3 = Quiver(("v1", "v2"), (("v1", "v2"),) * 3)

print("Cartan matrices (orientation plays no role):")
for name, quiver in [("A2", a2), ("Kronecker", kron), ("Gamma_3", gamma3)]:
    print(f"  {name}: {cartan(quiver).a}")

cd = cartan(a2)
alpha = {"v1": 1, "v2": 1}
print("\nA2, alpha = (1,1):")
print("  (alpha|alpha) =", bilinear(cd, alpha, alpha))
result = classify(cd, alpha)
print("  verdict:", result.verdict, "| word:", result.word, "| core:", result.core)

print("\nA2, alpha = (2,1):")
print("  ", classify(cd, {"v1": 2, "v2": 1}).verdict)

kd = cartan(kron)
delta = {"v1": 1, "v2": 1}
print("\nKronecker, delta = (1,1):  norm", norm(kd, delta), "->",
      classify(kd, delta).verdict, "(null vector of the singular Cartan matrix)")

gd = cartan(gamma3)
print("Gamma_3, (1,1):  norm", norm(gd, {"v1": 1, "v2": 1}), "->",
      classify(gd, {"v1": 1, "v2": 1}).verdict)

# reflections generate the real roots from the simples
print("\nsimple reflection on A2: r_1(alpha_2) =", reflect_simple(cd, "v1", {"v1": 0, "v2": 1}))

for name, quiver, bound in [("A2", a2, 2), ("Kronecker", kron, 5), ("Gamma_3", gamma3, 4)]:
    roots = real_roots_up_to(cartan(quiver), bound)
    compact = [(r["v1"], r["v2"]) for r in roots]
    print(f"real roots of {name} up to height {bound}: {compact}")
