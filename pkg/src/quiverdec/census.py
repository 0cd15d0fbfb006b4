"""Brute-force censuses of absolutely indecomposable representations.

Two independent counting methods so neither is trusted alone:

  * stabilizer sum - for each absolutely indecomposable representation
    the automorphism group has exactly q^m - q^(m-1) elements (the
    endomorphism algebra is quasi-nilpotent of dimension m and its units
    are the elements with nonzero common eigenvalue), so each class
    contributes (q^m - q^(m-1)) / |G| with G the product of the vertex
    general linear groups.  The accumulated rational must land on an
    exact integer; anything else raises.

  * canonical forms - enumerate the full group action and count the
    distinct lexicographically-smallest orbit representatives.

Class counts per field size interpolate (exact rational Lagrange) to an
integer polynomial whose shape is checked against the expected degree,
monicity and coefficient signs.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .field import ELEM_DTYPE, FieldSpec
from .linalg import rref
from .rep import (
    Quiver,
    Representation,
    TooLarge,
    decide_abs_indec,
    m_alpha,
    rep_from_entries,
    validate_dims,
)
from .roots import CartanData, norm as cartan_norm


class CensusError(ValueError):
    pass


class NonIntegerResult(CensusError):
    """The stabilizer sum failed to be an integer: an implementation bug."""


class InsufficientPoints(CensusError):
    pass


class NonIntegerCoefficients(CensusError):
    pass


@dataclass(frozen=True)
class KacCountTable:
    """Class counts per field size for one quiver and dimension vector."""

    quiver: Quiver
    alpha: tuple[tuple[str, int], ...]
    rows: tuple[tuple[int, int], ...]

    @staticmethod
    def build(quiver: Quiver, alpha: dict[str, int], rows) -> "KacCountTable":
        qs = [q for q, _ in rows]
        if len(set(qs)) != len(qs):
            raise CensusError("duplicate field sizes in count table")
        return KacCountTable(
            quiver=quiver,
            alpha=tuple((v, int(alpha[v])) for v in quiver.vertices),
            rows=tuple((int(q), int(c)) for q, c in rows),
        )

    def alpha_dict(self) -> dict[str, int]:
        return dict(self.alpha)


@dataclass(frozen=True)
class IntPolynomial:
    """Integer-coefficient polynomial, lowest degree first, canonical."""

    coeffs: tuple[int, ...]

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def monic(self) -> bool:
        return self.coeffs[-1] == 1

    @property
    def constant_term(self) -> int:
        return self.coeffs[0]

    def __call__(self, x: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __str__(self) -> str:
        if all(c == 0 for c in self.coeffs):
            return "0"
        parts = []
        for e in range(self.degree, -1, -1):
            c = self.coeffs[e]
            if c == 0:
                continue
            if e == 0:
                parts.append(str(c))
            else:
                var = "q" if e == 1 else f"q^{e}"
                parts.append(var if c == 1 else f"{c}{var}")
        return " + ".join(parts)


def make_int_polynomial(coeffs) -> IntPolynomial:
    cs = [int(c) for c in coeffs]
    while len(cs) > 1 and cs[-1] == 0:
        cs.pop()
    if not cs:
        cs = [0]
    return IntPolynomial(tuple(cs))


# ---------------------------------------------------------------------------
# enumeration
# ---------------------------------------------------------------------------

def total_states(quiver: Quiver, alpha: dict[str, int], spec: FieldSpec) -> int:
    return spec.q ** m_alpha(quiver, alpha)


def rep_from_index(
    quiver: Quiver, alpha: dict[str, int], spec: FieldSpec, index: int
) -> Representation:
    """Decode state index to a representation; index digits base q, the
    first entry (edge order, row-major) is the most significant digit."""
    m = m_alpha(quiver, alpha)
    entries = np.zeros(m, dtype=ELEM_DTYPE)
    for pos in range(m - 1, -1, -1):
        index, digit = divmod(index, spec.q)
        entries[pos] = digit
    return rep_from_entries(quiver, alpha, spec, entries)


def enumerate_reps(
    quiver: Quiver, alpha: dict[str, int], spec: FieldSpec, cap: int = 10**7
):
    """All q^M representations in canonical order (last entry varies fastest)."""
    alpha = validate_dims(quiver, alpha)
    total = total_states(quiver, alpha, spec)
    if total > cap:
        raise TooLarge(f"q^M = {total} states exceeds cap {cap}")
    m = m_alpha(quiver, alpha)
    for combo in itertools.product(range(spec.q), repeat=m):
        yield rep_from_entries(quiver, alpha, spec, np.array(combo, dtype=ELEM_DTYPE))


def gl_order(n: int, q: int) -> int:
    """|GL_n(F_q)| = prod_{i<n} (q^n - q^i); the empty product is 1."""
    out = 1
    for i in range(n):
        out *= q**n - q**i
    return out


def group_order(alpha: dict[str, int], q: int) -> int:
    out = 1
    for n in alpha.values():
        out *= gl_order(n, q)
    return out


# ---------------------------------------------------------------------------
# stabilizer-sum counting
# ---------------------------------------------------------------------------

def _stabilizer_partial(
    quiver: Quiver, alpha: dict[str, int], spec: FieldSpec, start: int, stop: int
) -> Fraction:
    g_order = group_order(alpha, spec.q)
    q = spec.q
    acc = Fraction(0)
    for index in range(start, stop):
        verdict = decide_abs_indec(rep_from_index(quiver, alpha, spec, index))
        if verdict.absolutely_indecomposable:
            m = len(verdict.eig_values)
            acc += Fraction(q**m - q ** (m - 1), g_order)
    return acc


def count_classes_stabilizer(
    quiver: Quiver,
    alpha: dict[str, int],
    spec: FieldSpec,
    cap: int = 10**7,
    jobs: int = 1,
) -> int:
    """Count isomorphism classes of absolutely indecomposable representations
    by summing reciprocal orbit sizes; the sum must be an exact integer."""
    alpha = validate_dims(quiver, alpha)
    total = total_states(quiver, alpha, spec)
    if total > cap:
        raise TooLarge(f"q^M = {total} states exceeds cap {cap}")
    if jobs <= 1 or total < 64:
        acc = _stabilizer_partial(quiver, alpha, spec, 0, total)
    else:
        bounds = [total * i // jobs for i in range(jobs + 1)]
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            futures = [
                pool.submit(_stabilizer_partial, quiver, alpha, spec, bounds[i], bounds[i + 1])
                for i in range(jobs)
            ]
            acc = sum((f.result() for f in futures), Fraction(0))
    if acc.denominator != 1:
        raise NonIntegerResult(f"stabilizer sum is {acc}, not an integer")
    return int(acc)


# ---------------------------------------------------------------------------
# canonical-form counting (the independent oracle)
# ---------------------------------------------------------------------------

def enumerate_gl(spec: FieldSpec, n: int) -> list[tuple[np.ndarray, np.ndarray]]:
    """All invertible n x n matrices with their inverses, deterministic order."""
    if n == 0:
        empty = np.zeros((0, 0), dtype=ELEM_DTYPE)
        return [(empty, empty)]
    out = []
    eye = spec.identity(n)
    for combo in itertools.product(range(spec.q), repeat=n * n):
        g = np.array(combo, dtype=ELEM_DTYPE).reshape(n, n)
        aug = np.concatenate([g, eye], axis=1)
        reduced, pivots, _ = rref(spec, aug)
        # invertible iff all pivots fall in the left block, i.e. columns 0..n-1
        if pivots[:n] == list(range(n)):
            out.append((g, np.ascontiguousarray(reduced[:, n:])))
    return out


def _canonical_key(
    rep: Representation, group: list[dict[str, tuple[np.ndarray, np.ndarray]]]
) -> bytes:
    spec = rep.field
    best: bytes | None = None
    for element in group:
        parts = []
        for i, (t, h) in enumerate(rep.quiver.edges):
            g_h, _ = element[h]
            _, g_t_inv = element[t]
            parts.append(spec.matmul(spec.matmul(g_h, rep.maps[i]), g_t_inv).ravel())
        key = (
            np.concatenate(parts).astype(ELEM_DTYPE).tobytes()
            if parts
            else b""
        )
        if best is None or key < best:
            best = key
    return best if best is not None else b""


def _canonical_partial(
    quiver: Quiver,
    alpha: dict[str, int],
    spec: FieldSpec,
    start: int,
    stop: int,
) -> set[bytes]:
    per_vertex = {v: enumerate_gl(spec, alpha[v]) for v in quiver.vertices}
    names = list(quiver.vertices)
    group = [
        dict(zip(names, combo))
        for combo in itertools.product(*(per_vertex[v] for v in names))
    ]
    canon: set[bytes] = set()
    for index in range(start, stop):
        rep = rep_from_index(quiver, alpha, spec, index)
        if decide_abs_indec(rep).absolutely_indecomposable:
            canon.add(_canonical_key(rep, group))
    return canon


def count_classes_canonical(
    quiver: Quiver,
    alpha: dict[str, int],
    spec: FieldSpec,
    cap_states: int = 10**7,
    cap_group: int = 10**6,
    jobs: int = 1,
) -> int:
    """Count classes by full orbit canonicalization (the slow, trusted route)."""
    alpha = validate_dims(quiver, alpha)
    total = total_states(quiver, alpha, spec)
    if total > cap_states:
        raise TooLarge(f"q^M = {total} states exceeds cap {cap_states}")
    g_order = group_order(alpha, spec.q)
    if g_order > cap_group:
        raise TooLarge(f"|G| = {g_order} exceeds group cap {cap_group}")
    if jobs <= 1 or total < 64:
        canon = _canonical_partial(quiver, alpha, spec, 0, total)
    else:
        bounds = [total * i // jobs for i in range(jobs + 1)]
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            futures = [
                pool.submit(_canonical_partial, quiver, alpha, spec, bounds[i], bounds[i + 1])
                for i in range(jobs)
            ]
            canon = set()
            for f in futures:
                canon |= f.result()
    return len(canon)


# ---------------------------------------------------------------------------
# interpolation and orientation sweeps
# ---------------------------------------------------------------------------

def interpolate_kac(
    table: KacCountTable, cartan_or_norm: CartanData | int
) -> tuple[IntPolynomial, dict]:
    """Exact Lagrange interpolation of a count table, with shape diagnostics.

    The expected degree is 1 - (alpha | alpha); the table must carry at
    least degree + 1 rows.  Non-integer coefficients signal a counting
    bug or a wrong set of field sizes and raise.
    """
    alpha = table.alpha_dict()
    if isinstance(cartan_or_norm, CartanData):
        alpha_norm = cartan_norm(cartan_or_norm, alpha)
    else:
        alpha_norm = int(cartan_or_norm)
    expected_degree = 1 - alpha_norm
    if len(table.rows) < max(expected_degree + 1, 1):
        raise InsufficientPoints(
            f"need {max(expected_degree + 1, 1)} rows for degree {expected_degree}, got {len(table.rows)}"
        )

    # Lagrange over the rationals through every row
    coeffs = [Fraction(0)] * len(table.rows)
    for i, (xi, yi) in enumerate(table.rows):
        basis = [Fraction(1)]
        denom = Fraction(1)
        for j, (xj, _) in enumerate(table.rows):
            if j == i:
                continue
            # multiply basis by (x - xj)
            nxt = [Fraction(0)] * (len(basis) + 1)
            for d, c in enumerate(basis):
                nxt[d] -= c * xj
                nxt[d + 1] += c
            basis = nxt
            denom *= xi - xj
        scale = Fraction(yi) / denom
        for d, c in enumerate(basis):
            coeffs[d] += c * scale
    while len(coeffs) > 1 and coeffs[-1] == 0:
        coeffs.pop()
    if any(c.denominator != 1 for c in coeffs):
        raise NonIntegerCoefficients(f"interpolated coefficients {coeffs} are not integers")
    poly = make_int_polynomial(int(c) for c in coeffs)
    diagnostics = {
        "integer_coefficients": True,
        "monic": poly.monic,
        "degree": poly.degree,
        "expected_degree": expected_degree,
        "degree_matches": poly.degree == expected_degree,
        "nonnegative_coefficients": all(c >= 0 for c in poly.coeffs),
        "constant_term": poly.constant_term,
    }
    return poly, diagnostics


def orientation_sweep(
    vertices,
    pairs,
    alpha: dict[str, int],
    spec: FieldSpec,
    cap: int = 10**7,
    jobs: int = 1,
) -> list[tuple[Quiver, int]]:
    """Class counts for every orientation of an undirected graph.

    pairs are unordered edges; self-loops have a single orientation.
    The counts must coincide across orientations (orientation
    independence); callers assert that.
    """
    vertices = tuple(vertices)
    pairs = [tuple(e) for e in pairs]
    flippable = [i for i, (u, w) in enumerate(pairs) if u != w]
    base = Quiver(vertices, tuple(pairs))
    total = (2 ** len(flippable)) * total_states(base, validate_dims(base, alpha), spec)
    if total > cap:
        raise TooLarge(f"sweep of {total} states exceeds cap {cap}")
    results = []
    for mask in range(2 ** len(flippable)):
        edges = []
        for i, (u, w) in enumerate(pairs):
            if i in flippable and (mask >> flippable.index(i)) & 1:
                edges.append((w, u))
            else:
                edges.append((u, w))
        quiver = Quiver(vertices, tuple(edges))
        count = count_classes_stabilizer(quiver, alpha, spec, cap=cap, jobs=jobs)
        results.append((quiver, count))
    return results
