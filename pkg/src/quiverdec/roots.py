"""Root lattice of a loop-free graph: Cartan matrix, Weyl reflections,
and classification of dimension vectors.

A nonzero vector of non-negative coordinates is either a real root (in
the Weyl orbit of a simple root), an imaginary root (in the Weyl orbit
of the fundamental region: everything pairs non-positively with the
simples and the support is connected), or not a positive root at all.
The classifier descends by height, always reflecting at the first
vertex that pairs positively, so verdicts and their reflection-word
witnesses are deterministic.

Self-loops are refused here: the Cartan matrix convention is defined
for loop-free graphs only, and guessing one would silently change every
verdict.  The decision path in quiverdec.rep accepts self-loops.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .field import FieldSpec
from .rep import Quiver, decide_abs_indec, end_basis, random_rep, validate_dims


class RootsError(ValueError):
    pass


class SelfLoopPresent(RootsError):
    pass


class VertexMismatch(RootsError):
    pass


class UnknownVertex(RootsError):
    pass


class ZeroVector(RootsError):
    pass


class NegativeCoordinate(RootsError):
    pass


REAL = "REAL"
IMAGINARY = "IMAGINARY"
NOT_POSITIVE_ROOT = "NOT_POSITIVE_ROOT"


@dataclass(frozen=True)
class CartanData:
    """Symmetric Cartan matrix of the underlying loop-free graph.

    a[v][v] = 2 and a[u][v] = -(number of edges between u and v);
    orientation plays no role.
    """

    vertices: tuple[str, ...]
    a: tuple[tuple[int, ...], ...]

    def index(self, v: str) -> int:
        try:
            return self.vertices.index(v)
        except ValueError:
            raise UnknownVertex(f"unknown vertex {v!r}") from None


def cartan(quiver: Quiver) -> CartanData:
    if quiver.has_self_loops:
        raise SelfLoopPresent("Cartan matrix is defined for loop-free graphs only")
    n = len(quiver.vertices)
    idx = {v: i for i, v in enumerate(quiver.vertices)}
    a = [[0] * n for _ in range(n)]
    for i in range(n):
        a[i][i] = 2
    for t, h in quiver.edges:
        a[idx[t]][idx[h]] -= 1
        a[idx[h]][idx[t]] -= 1
    return CartanData(quiver.vertices, tuple(tuple(row) for row in a))


def _as_coords(c: CartanData, alpha: dict[str, int]) -> list[int]:
    if set(alpha) != set(c.vertices):
        raise VertexMismatch(
            f"vector keys {sorted(alpha)} do not match vertices {list(c.vertices)}"
        )
    return [int(alpha[v]) for v in c.vertices]


def _as_dimvec(c: CartanData, coords) -> dict[str, int]:
    return {v: int(n) for v, n in zip(c.vertices, coords)}


def bilinear2(c: CartanData, alpha: dict[str, int], beta: dict[str, int]) -> int:
    """Twice the symmetric bilinear form: sum n_u * m_v * a_uv, exact."""
    x = _as_coords(c, alpha)
    y = _as_coords(c, beta)
    return sum(
        x[i] * y[j] * c.a[i][j]
        for i in range(len(x))
        for j in range(len(y))
        if x[i] and y[j]
    )


def bilinear(c: CartanData, alpha: dict[str, int], beta: dict[str, int]) -> Fraction:
    """The form itself, an exact half-integer."""
    return Fraction(bilinear2(c, alpha, beta), 2)


def norm(c: CartanData, alpha: dict[str, int]) -> int:
    """(alpha | alpha), always an integer."""
    doubled = bilinear2(c, alpha, alpha)
    assert doubled % 2 == 0
    return doubled // 2


def reflect_simple(c: CartanData, v: str, alpha: dict[str, int]) -> dict[str, int]:
    """Simple reflection r_v; involutive, changes only the v coordinate."""
    vi = c.index(v)
    coords = _as_coords(c, alpha)
    pairing = sum(coords[u] * c.a[u][vi] for u in range(len(coords)))
    out = list(coords)
    out[vi] -= pairing
    return _as_dimvec(c, out)


@dataclass(frozen=True)
class RootClassification:
    """Verdict with a replayable witness.

    word lists the reflections applied during the height descent, in
    order; applying them in reverse to core reproduces the input for
    REAL and IMAGINARY verdicts.  norm is (alpha | alpha) of the input.
    """

    verdict: str
    word: tuple[str, ...]
    core: dict[str, int] | None
    norm: int


def _is_simple(coords: list[int]) -> bool:
    return sum(coords) == 1 and all(x in (0, 1) for x in coords)


def _support_connected(c: CartanData, coords: list[int]) -> bool:
    support = [i for i, x in enumerate(coords) if x]
    if not support:
        return False
    seen = {support[0]}
    stack = [support[0]]
    supp_set = set(support)
    while stack:
        i = stack.pop()
        for j in supp_set:
            if j not in seen and c.a[i][j] != 0 and i != j:
                seen.add(j)
                stack.append(j)
    return seen == supp_set


def classify(c: CartanData, alpha: dict[str, int]) -> RootClassification:
    """Classify a vector as REAL, IMAGINARY or NOT_POSITIVE_ROOT by height descent."""
    coords = _as_coords(c, alpha)
    if any(x < 0 for x in coords):
        raise NegativeCoordinate(f"coordinates must be non-negative: {alpha}")
    if not any(coords):
        raise ZeroVector("the zero vector is not classified")
    input_norm = norm(c, alpha)
    n = len(coords)
    word: list[str] = []
    cur = list(coords)
    while True:
        if _is_simple(cur):
            return RootClassification(REAL, tuple(word), _as_dimvec(c, cur), input_norm)
        # 2*(cur | alpha_v) = sum_u cur_u * a_uv
        pairings = [sum(cur[u] * c.a[u][v] for u in range(n)) for v in range(n)]
        pos = next((v for v in range(n) if pairings[v] > 0), None)
        if pos is None:
            if _support_connected(c, cur):
                return RootClassification(
                    IMAGINARY, tuple(word), _as_dimvec(c, cur), input_norm
                )
            return RootClassification(
                NOT_POSITIVE_ROOT, tuple(word), None, input_norm
            )
        nxt = list(cur)
        nxt[pos] -= pairings[pos]
        word.append(c.vertices[pos])
        if nxt[pos] < 0:
            return RootClassification(
                NOT_POSITIVE_ROOT, tuple(word), None, input_norm
            )
        cur = nxt


def real_roots_up_to(c: CartanData, height_bound: int) -> list[dict[str, int]]:
    """All real roots of coordinate sum <= height_bound.

    Breadth-first closure of the simple roots under all simple
    reflections, pruned to non-negative vectors within the bound; every
    real root in range is reached by a height-monotone reflection path,
    so the pruning loses nothing.
    """
    if height_bound < 1:
        raise RootsError("height bound must be >= 1")
    n = len(c.vertices)
    simples = [tuple(1 if j == i else 0 for j in range(n)) for i in range(n)]
    seen = set(simples)
    frontier = list(simples)
    while frontier:
        nxt = []
        for coords in frontier:
            for v in range(n):
                pairing = sum(coords[u] * c.a[u][v] for u in range(n))
                refl = list(coords)
                refl[v] -= pairing
                t = tuple(refl)
                if refl[v] < 0 or sum(refl) > height_bound or t in seen:
                    continue
                seen.add(t)
                nxt.append(t)
        frontier = nxt
    in_range = sorted(t for t in seen if sum(t) <= height_bound)
    return [_as_dimvec(c, t) for t in in_range]


def schur_probe(
    quiver: Quiver,
    alpha: dict[str, int],
    spec: FieldSpec,
    samples: int,
    seed,
) -> tuple[int, Fraction]:
    """Sampling probe for Schur behaviour of a dimension vector.

    Draws random representations; reports the minimum endomorphism
    algebra dimension seen and the fraction judged absolutely
    indecomposable.  min_end_dim == 1 certifies a Schur vector; a larger
    minimum is evidence against, never proof.
    """
    if samples < 1:
        raise RootsError("samples must be >= 1")
    alpha = validate_dims(quiver, alpha)
    rng = np.random.default_rng(seed)
    min_end = None
    hits = 0
    for _ in range(samples):
        child = int(rng.integers(0, 2**63))
        rep = random_rep(quiver, alpha, spec, child)
        m = end_basis(rep).m
        min_end = m if min_end is None else min(min_end, m)
        if decide_abs_indec(rep).absolutely_indecomposable:
            hits += 1
    return int(min_end), Fraction(hits, samples)
