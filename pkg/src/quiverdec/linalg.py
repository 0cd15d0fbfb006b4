"""Exact dense linear algebra over GF(q).

Row reduction, kernel bases, spans, characteristic polynomials and
nilpotency tests on integer-index matrices (see quiverdec.field for the
element encoding).  Everything is deterministic: reduced row echelon
form is unique, pivots are chosen leftmost-column / topmost-row, and
kernel bases use the standard free-variable parameterization ordered by
free-column index, so downstream bases and witnesses reproduce
bit-for-bit.

GF(2) row reduction runs on bit-packed uint64 words; all other fields go
through a generic vectorized elimination.  Both produce the same unique
RREF.
"""

from __future__ import annotations

import sys
from dataclasses import dataclass

import numpy as np

from .field import ELEM_DTYPE, FieldSpec


class LinalgError(ValueError):
    pass


class NotSquare(LinalgError):
    pass


class LengthMismatch(LinalgError):
    pass


def _as_matrix(m) -> np.ndarray:
    m = np.asarray(m, dtype=ELEM_DTYPE)
    if m.ndim != 2:
        raise LinalgError(f"expected a 2-d matrix, got ndim={m.ndim}")
    return m


# ---------------------------------------------------------------------------
# row reduction
# ---------------------------------------------------------------------------

def rref(spec: FieldSpec, m) -> tuple[np.ndarray, list[int], int]:
    """Reduced row echelon form with unit pivots.

    Returns (reduced matrix, pivot column list, rank).
    """
    m = _as_matrix(m)
    if spec.p == 2 and spec.k == 1 and sys.byteorder == "little":
        return _rref_gf2(m)
    return _rref_generic(spec, m)


def _rref_gf2(m: np.ndarray) -> tuple[np.ndarray, list[int], int]:
    rows, cols = m.shape
    if rows == 0 or cols == 0:
        return m.copy(), [], 0
    words = (cols + 63) // 64
    packed_bytes = np.packbits(m.astype(np.uint8), axis=1, bitorder="little")
    pad = words * 8 - packed_bytes.shape[1]
    if pad:
        packed_bytes = np.pad(packed_bytes, ((0, 0), (0, pad)))
    packed = np.ascontiguousarray(packed_bytes).view(np.uint64)

    pivots: list[int] = []
    row = 0
    one = np.uint64(1)
    for col in range(cols):
        w, b = divmod(col, 64)
        bshift = np.uint64(b)
        below = (packed[row:, w] >> bshift) & one
        nz = np.nonzero(below)[0]
        if nz.size == 0:
            continue
        piv = row + int(nz[0])
        if piv != row:
            packed[[row, piv]] = packed[[piv, row]]
        colbits = (packed[:, w] >> bshift) & one
        colbits[row] = 0
        sel = np.nonzero(colbits)[0]
        if sel.size:
            packed[sel] ^= packed[row]
        pivots.append(col)
        row += 1
        if row == rows:
            break
    reduced = np.unpackbits(packed.view(np.uint8), axis=1, bitorder="little")[:, :cols]
    return reduced.astype(ELEM_DTYPE), pivots, len(pivots)


def _rref_generic(spec: FieldSpec, m: np.ndarray) -> tuple[np.ndarray, list[int], int]:
    work = m.copy()
    rows, cols = work.shape
    pivots: list[int] = []
    row = 0
    for col in range(cols):
        if row >= rows:
            break
        column = work[row:, col]
        nz = np.nonzero(column)[0]
        if nz.size == 0:
            continue
        piv = row + int(nz[0])
        if piv != row:
            work[[row, piv]] = work[[piv, row]]
        pv = int(work[row, col])
        if pv != 1:
            work[row] = spec.mul(spec.inv(pv), work[row])
        factors = work[:, col].copy()
        factors[row] = 0
        sel = np.nonzero(factors)[0]
        if sel.size:
            update = spec.mul(factors[sel][:, None], work[row][None, :])
            work[sel] = spec.sub(work[sel], update)
        pivots.append(col)
        row += 1
    return work, pivots, len(pivots)


def kernel_basis(spec: FieldSpec, m) -> list[np.ndarray]:
    """Basis of the right null space, in free-variable parameterization.

    Basis vectors are ordered by free-column index; the empty list means
    the kernel is zero.
    """
    m = _as_matrix(m)
    reduced, pivots, rank = rref(spec, m)
    cols = m.shape[1]
    pivot_set = set(pivots)
    free = [c for c in range(cols) if c not in pivot_set]
    if not free:
        return []
    basis = np.zeros((cols, len(free)), dtype=ELEM_DTYPE)
    basis[free, np.arange(len(free))] = 1
    if pivots:
        block = reduced[:rank][:, free]
        basis[np.asarray(pivots), :] = spec.neg(block)
    return [basis[:, j] for j in range(len(free))]


def span_basis(spec: FieldSpec, vectors) -> tuple[list[np.ndarray], int]:
    """Echelonized basis of the span of the given vectors and its dimension."""
    vectors = [np.asarray(v, dtype=ELEM_DTYPE) for v in vectors]
    if not vectors:
        return [], 0
    length = vectors[0].shape[0]
    for v in vectors:
        if v.ndim != 1 or v.shape[0] != length:
            raise LengthMismatch("span vectors must share one length")
    reduced, _, rank = rref(spec, np.stack(vectors))
    return [reduced[i] for i in range(rank)], rank


# ---------------------------------------------------------------------------
# polynomials over GF(q) (element indices, lowest degree first)
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class PolyGF:
    """Polynomial with GF(q) coefficients, lowest degree first, canonical."""

    coeffs: tuple[int, ...]

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return self.coeffs == (0,)


def make_poly(coeffs) -> PolyGF:
    cs = [int(c) for c in coeffs]
    while len(cs) > 1 and cs[-1] == 0:
        cs.pop()
    if not cs:
        cs = [0]
    return PolyGF(tuple(cs))


def poly_add(spec: FieldSpec, a: PolyGF, b: PolyGF) -> PolyGF:
    n = max(len(a.coeffs), len(b.coeffs))
    out = []
    for i in range(n):
        x = a.coeffs[i] if i < len(a.coeffs) else 0
        y = b.coeffs[i] if i < len(b.coeffs) else 0
        out.append(spec.add(x, y))
    return make_poly(out)


def poly_scale(spec: FieldSpec, c: int, a: PolyGF) -> PolyGF:
    return make_poly([spec.mul(c, x) for x in a.coeffs])


def poly_sub(spec: FieldSpec, a: PolyGF, b: PolyGF) -> PolyGF:
    return poly_add(spec, a, poly_scale(spec, spec.neg(1), b))


def poly_mul(spec: FieldSpec, a: PolyGF, b: PolyGF) -> PolyGF:
    out = [0] * (len(a.coeffs) + len(b.coeffs) - 1)
    for i, x in enumerate(a.coeffs):
        if x:
            for j, y in enumerate(b.coeffs):
                out[i + j] = spec.add(out[i + j], spec.mul(x, y))
    return make_poly(out)


def poly_eval(spec: FieldSpec, a: PolyGF, x: int) -> int:
    acc = 0
    for c in reversed(a.coeffs):
        acc = spec.add(spec.mul(acc, x), c)
    return acc


# ---------------------------------------------------------------------------
# characteristic polynomial and nilpotency
# ---------------------------------------------------------------------------

def char_poly(spec: FieldSpec, m) -> PolyGF:
    """det(lambda*I - m), monic of degree n, via Hessenberg reduction.

    Interpolation is useless over GF(q) with q <= n, so the Hessenberg
    route with the standard leading-minor recurrence is used instead.
    """
    m = _as_matrix(m)
    n, n2 = m.shape
    if n != n2:
        raise NotSquare(f"char_poly needs a square matrix, got {m.shape}")
    if n == 0:
        return make_poly([1])
    h = [[int(x) for x in row] for row in m]

    # similarity reduction to upper Hessenberg form with pivot search
    for j in range(n - 2):
        piv = next((i for i in range(j + 1, n) if h[i][j] != 0), None)
        if piv is None:
            continue
        if piv != j + 1:
            h[j + 1], h[piv] = h[piv], h[j + 1]
            for row in h:
                row[j + 1], row[piv] = row[piv], row[j + 1]
        inv_p = spec.inv(h[j + 1][j])
        for i in range(j + 2, n):
            if h[i][j] == 0:
                continue
            f = spec.mul(h[i][j], inv_p)
            for col in range(n):
                h[i][col] = spec.sub(h[i][col], spec.mul(f, h[j + 1][col]))
            for row in range(n):
                h[row][j + 1] = spec.add(h[row][j + 1], spec.mul(f, h[row][i]))

    # p_i = charpoly of the leading i x i block of the Hessenberg matrix
    polys = [make_poly([1])]
    for i in range(1, n + 1):
        lam_minus_h = make_poly([spec.neg(h[i - 1][i - 1]), 1])
        cur = poly_mul(spec, lam_minus_h, polys[i - 1])
        prod = 1
        for gap in range(1, i):
            prod = spec.mul(prod, h[i - gap][i - gap - 1])
            if prod == 0:
                break
            coef = spec.mul(h[i - 1 - gap][i - 1], prod)
            if coef:
                cur = poly_sub(spec, cur, poly_scale(spec, coef, polys[i - 1 - gap]))
        polys.append(cur)
    return polys[n]


def is_nilpotent(spec: FieldSpec, m) -> bool:
    """True iff m^n = 0 (n = side length), by repeated squaring."""
    m = _as_matrix(m)
    n, n2 = m.shape
    if n != n2:
        raise NotSquare(f"is_nilpotent needs a square matrix, got {m.shape}")
    if n == 0:
        return True
    s = m
    power = 1
    while True:
        if not s.any():
            return True
        if power >= n:
            return False
        s = spec.matmul(s, s)
        power *= 2


def format_matrix(spec: FieldSpec, m) -> str:
    """Entries space-separated, rows newline-separated, field element syntax."""
    m = _as_matrix(m)
    return "\n".join(
        " ".join(spec.format_element(int(x)) for x in row) for row in m
    )
