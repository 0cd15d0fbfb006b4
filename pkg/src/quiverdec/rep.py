"""Quiver representations and the absolute-indecomposability decision.

A representation of a quiver over GF(q) is a matrix per oriented edge.
Its endomorphism algebra is the solution space of the linear system
"a_head * map = map * a_tail" over all edges; the representation is
absolutely indecomposable exactly when that algebra is quasi-nilpotent,
which is checked in two polynomial-time steps:

  1. every element of a deterministic basis of the algebra is
     quasi-nilpotent (some shift by a scalar is nilpotent), and
  2. the algebra is nilpotent as a Lie algebra under the commutator,
     tested by running its lower central series to zero.

A brute-force oracle that tests quasi-nilpotence of every one of the
q^m algebra elements backs the decision at desk scale, alongside BGP
reflection functors and an exhaustive search for absolutely
indecomposable representations with partially fixed entries.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from .field import ELEM_DTYPE, FieldSpec, parse_field_header
from .linalg import is_nilpotent, kernel_basis, rref, span_basis


class RepError(ValueError):
    pass


class ZeroDimension(RepError):
    pass


class ShapeMismatch(RepError):
    pass


class QuiverMismatch(RepError):
    pass


class FieldMismatch(RepError):
    pass


class NotSinkOrSource(RepError):
    pass


class SelfLoopAtV(RepError):
    pass


class TooLarge(RepError):
    """A requested enumeration exceeds the configured cap."""


class FileFormatError(ValueError):
    def __init__(self, message: str, line: int | None = None, field: str | None = None):
        self.line = line
        self.field = field
        where = f" (line {line})" if line is not None else ""
        what = f" [{field}]" if field else ""
        super().__init__(f"{message}{where}{what}")


VERDICT_ABS_INDEC = "ABS_INDEC"
VERDICT_NOT_ABS_INDEC = "NOT_ABS_INDEC"
REASON_ZERO_DIMENSION = "ZERO_DIMENSION"
REASON_BASIS_ELEMENT_NOT_QN = "BASIS_ELEMENT_NOT_QN"
REASON_LIE_NOT_NILPOTENT = "LIE_NOT_NILPOTENT"


# ---------------------------------------------------------------------------
# quivers, dimension vectors, representations
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Quiver:
    """Oriented multigraph; edge order is part of the identity.

    Repeated (tail, head) pairs are parallel edges; tail == head is a
    self-loop.  The edge order fixes the global entry order of
    representations and the layout of every file format.
    """

    vertices: tuple[str, ...]
    edges: tuple[tuple[str, str], ...]

    def __post_init__(self):
        if len(set(self.vertices)) != len(self.vertices):
            raise RepError("duplicate vertex ids")
        declared = set(self.vertices)
        for t, h in self.edges:
            if t not in declared or h not in declared:
                raise RepError(f"edge ({t}, {h}) uses undeclared vertices")

    def index(self, v: str) -> int:
        return self.vertices.index(v)

    def has_self_loop(self, v: str) -> bool:
        return any(t == h == v for t, h in self.edges)

    @property
    def has_self_loops(self) -> bool:
        return any(t == h for t, h in self.edges)

    def in_edges(self, v: str) -> list[int]:
        return [i for i, (_, h) in enumerate(self.edges) if h == v]

    def out_edges(self, v: str) -> list[int]:
        return [i for i, (t, _) in enumerate(self.edges) if t == v]

    def is_sink(self, v: str) -> bool:
        return not self.out_edges(v)

    def is_source(self, v: str) -> bool:
        return not self.in_edges(v)

    def underlying_pairs(self) -> list[tuple[str, str]]:
        """Edges as unordered pairs (kept in edge order)."""
        return [tuple(sorted((t, h))) for t, h in self.edges]


def validate_dims(quiver: Quiver, dims: dict[str, int]) -> dict[str, int]:
    if set(dims) != set(quiver.vertices):
        raise RepError(
            f"dimension vector keys {sorted(dims)} do not match vertices {list(quiver.vertices)}"
        )
    clean = {v: int(dims[v]) for v in quiver.vertices}
    if any(n < 0 for n in clean.values()):
        raise RepError("dimensions must be non-negative")
    return clean


def dim_total(dims: dict[str, int]) -> int:
    return sum(dims.values())


def m_alpha(quiver: Quiver, dims: dict[str, int]) -> int:
    """Number of matrix entries of a representation of this dimension."""
    return sum(dims[t] * dims[h] for t, h in quiver.edges)


class Representation:
    """Matrices per oriented edge; map for edge v->w has shape (n_w, n_v)."""

    __slots__ = ("quiver", "field", "dims", "maps")

    def __init__(self, quiver: Quiver, field: FieldSpec, dims: dict[str, int], maps):
        dims = validate_dims(quiver, dims)
        maps = tuple(np.asarray(m, dtype=ELEM_DTYPE) for m in maps)
        if len(maps) != len(quiver.edges):
            raise ShapeMismatch(
                f"{len(maps)} maps for {len(quiver.edges)} edges"
            )
        for i, (t, h) in enumerate(quiver.edges):
            want = (dims[h], dims[t])
            if maps[i].shape != want:
                raise ShapeMismatch(
                    f"map {i} for edge {t}->{h} has shape {maps[i].shape}, want {want}"
                )
            field._check(maps[i])
        self.quiver = quiver
        self.field = field
        self.dims = dims
        self.maps = maps

    @property
    def total_dim(self) -> int:
        return dim_total(self.dims)

    def __eq__(self, other):
        return (
            isinstance(other, Representation)
            and self.quiver == other.quiver
            and self.field == other.field
            and self.dims == other.dims
            and all(np.array_equal(a, b) for a, b in zip(self.maps, other.maps))
        )

    def __repr__(self):
        ds = " ".join(f"{v}={n}" for v, n in self.dims.items())
        return f"Representation({ds} over {self.field.header()})"

    def entries(self) -> np.ndarray:
        """All matrix entries flattened in edge order, row-major per edge."""
        if not self.maps:
            return np.zeros(0, dtype=ELEM_DTYPE)
        return np.concatenate([m.ravel() for m in self.maps])


def rep_from_entries(quiver: Quiver, dims: dict[str, int], spec: FieldSpec, entries) -> Representation:
    """Inverse of Representation.entries for a given shape."""
    dims = validate_dims(quiver, dims)
    # copy: callers may reuse a mutable entry buffer (the search does)
    entries = np.array(entries, dtype=ELEM_DTYPE)
    if entries.shape != (m_alpha(quiver, dims),):
        raise ShapeMismatch(
            f"expected {m_alpha(quiver, dims)} entries, got {entries.shape}"
        )
    maps = []
    off = 0
    for t, h in quiver.edges:
        size = dims[h] * dims[t]
        maps.append(entries[off : off + size].reshape(dims[h], dims[t]))
        off += size
    return Representation(quiver, spec, dims, maps)


def random_rep(quiver: Quiver, dims: dict[str, int], spec: FieldSpec, seed) -> Representation:
    """Uniform entries from a seeded generator; identical seed, identical rep."""
    dims = validate_dims(quiver, dims)
    rng = np.random.default_rng(seed)
    maps = [
        rng.integers(0, spec.q, size=(dims[h], dims[t])).astype(ELEM_DTYPE)
        for t, h in quiver.edges
    ]
    return Representation(quiver, spec, dims, maps)


# ---------------------------------------------------------------------------
# endomorphism algebra
# ---------------------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class EndAlgebra:
    """Basis of the endomorphism algebra as block tuples (one block per vertex)."""

    rep: Representation
    basis: tuple[dict[str, np.ndarray], ...]
    m: int


def end_basis(rep: Representation) -> EndAlgebra:
    """Deterministic basis of the endomorphism algebra.

    Unknowns are the entries of one square block per vertex, ordered by
    vertex order then row-major; equations come from the commutation
    constraint of each edge, in edge order then row-major.  The result
    is the kernel basis of that system reshaped into blocks.
    """
    quiver, spec, dims = rep.quiver, rep.field, rep.dims
    if rep.total_dim == 0:
        raise ZeroDimension("all vertex dimensions are zero")
    offsets = {}
    off = 0
    for v in quiver.vertices:
        offsets[v] = off
        off += dims[v] ** 2
    unknowns = off

    n_rows = sum(dims[h] * dims[t] for t, h in quiver.edges)
    system = np.zeros((n_rows, unknowns), dtype=ELEM_DTYPE)
    row = 0
    for idx, (t, h) in enumerate(quiver.edges):
        x = rep.maps[idx]
        nt, nh = dims[t], dims[h]
        rows = nh * nt
        if rows == 0:
            continue
        # a_h * x: coefficient of a_h[i, k] in equation (i, j) is x[k, j]
        head_cols = slice(offsets[h], offsets[h] + nh * nh)
        blk_head = np.kron(np.eye(nh, dtype=ELEM_DTYPE), x.T)
        system[row : row + rows, head_cols] = spec.add(
            system[row : row + rows, head_cols], blk_head
        )
        # x * a_t: coefficient of a_t[k, j] in equation (i, j) is x[i, k]
        tail_cols = slice(offsets[t], offsets[t] + nt * nt)
        blk_tail = np.kron(x, np.eye(nt, dtype=ELEM_DTYPE))
        system[row : row + rows, tail_cols] = spec.sub(
            system[row : row + rows, tail_cols], blk_tail
        )
        row += rows

    vecs = kernel_basis(spec, system)
    basis = tuple(_flat_to_blocks(quiver, dims, vec) for vec in vecs)
    return EndAlgebra(rep=rep, basis=basis, m=len(basis))


def _flat_to_blocks(quiver: Quiver, dims: dict[str, int], vec: np.ndarray) -> dict[str, np.ndarray]:
    blocks = {}
    off = 0
    for v in quiver.vertices:
        n = dims[v]
        blocks[v] = vec[off : off + n * n].reshape(n, n)
        off += n * n
    return blocks


def _blocks_to_flat(quiver: Quiver, blocks: dict[str, np.ndarray]) -> np.ndarray:
    parts = [np.asarray(blocks[v]).ravel() for v in quiver.vertices]
    if not parts:
        return np.zeros(0, dtype=ELEM_DTYPE)
    return np.concatenate(parts).astype(ELEM_DTYPE)


def block_add(spec: FieldSpec, a: dict[str, np.ndarray], b: dict[str, np.ndarray]) -> dict[str, np.ndarray]:
    return {v: spec.add(a[v], b[v]) for v in a}


def block_scale(spec: FieldSpec, c: int, a: dict[str, np.ndarray]) -> dict[str, np.ndarray]:
    return {v: spec.mul(c, a[v]) for v in a}


def block_commutator(spec: FieldSpec, a: dict[str, np.ndarray], b: dict[str, np.ndarray]) -> dict[str, np.ndarray]:
    return {
        v: spec.sub(spec.matmul(a[v], b[v]), spec.matmul(b[v], a[v])) for v in a
    }


def assemble_block_diag(spec: FieldSpec, blocks: dict[str, np.ndarray]) -> np.ndarray:
    n = sum(b.shape[0] for b in blocks.values())
    out = spec.zeros((n, n))
    off = 0
    for b in blocks.values():
        s = b.shape[0]
        out[off : off + s, off : off + s] = b
        off += s
    return out


# ---------------------------------------------------------------------------
# the decision procedure
# ---------------------------------------------------------------------------

def qn_test(spec: FieldSpec, blocks: dict[str, np.ndarray], n_total: int) -> int | None:
    """Common eigenvalue of a block tuple, if it has one in GF(q).

    Returns the unique gamma in GF(q) such that the block-diagonal
    assembly minus gamma*I is nilpotent, or None when no such gamma
    exists.  Candidates are tried in canonical enumeration order.
    """
    sizes = []
    for b in blocks.values():
        b = np.asarray(b)
        if b.ndim != 2 or b.shape[0] != b.shape[1]:
            raise ShapeMismatch(f"block of shape {b.shape} is not square")
        sizes.append(b.shape[0])
    if sum(sizes) != n_total or n_total < 1:
        raise ShapeMismatch(
            f"blocks of total size {sum(sizes)} do not assemble to N = {n_total}"
        )
    for gamma in range(spec.q):
        ok = True
        for b in blocks.values():
            n = b.shape[0]
            if n == 0:
                continue
            shifted = np.asarray(b, dtype=ELEM_DTYPE).copy()
            d = np.arange(n)
            shifted[d, d] = spec.sub(shifted[d, d], gamma)
            if not is_nilpotent(spec, shifted):
                ok = False
                break
        if ok:
            return gamma
    return None


def lie_nilpotency(spec: FieldSpec, algebra: EndAlgebra) -> tuple[bool, tuple[int, ...]]:
    """Lower central series of the algebra under the commutator bracket.

    Brackets the fixed basis against the current layer, echelonizing at
    each step; stops at dimension zero (nilpotent) or as soon as the
    dimension stops strictly decreasing (not nilpotent).
    """
    quiver = algebra.rep.quiver
    series = [algebra.m]
    if algebra.m == 0:
        return True, tuple(series)
    layer = list(algebra.basis)
    prev = algebra.m
    while True:
        flats = []
        for a in algebra.basis:
            for b in layer:
                c = block_commutator(spec, a, b)
                flat = _blocks_to_flat(quiver, c)
                if flat.any():
                    flats.append(flat)
        if flats:
            rows, dim = span_basis(spec, flats)
        else:
            rows, dim = [], 0
        series.append(dim)
        if dim == 0:
            return True, tuple(series)
        if dim >= prev:
            return False, tuple(series)
        prev = dim
        layer = [_flat_to_blocks(quiver, algebra.rep.dims, r) for r in rows]


@dataclass(frozen=True)
class IndecVerdict:
    """Outcome of the decision, with the witness data the paths produce.

    eig_values is present exactly on positive verdicts (one value per
    endomorphism basis element); on negative verdicts the reason carries
    either the failing basis index or the stabilized series dimensions.
    """

    decision: str
    reason: str | None = None
    failing_index: int | None = None
    series: tuple[int, ...] | None = None
    eig_values: tuple[int, ...] | None = None

    @property
    def absolutely_indecomposable(self) -> bool:
        return self.decision == VERDICT_ABS_INDEC


def decide_abs_indec(rep: Representation) -> IndecVerdict:
    """Decide absolute indecomposability in time polynomial in the total dimension.

    Zero-dimensional representations are not absolutely indecomposable
    by convention (the zero representation is the empty direct sum).
    """
    if rep.total_dim == 0:
        return IndecVerdict(VERDICT_NOT_ABS_INDEC, reason=REASON_ZERO_DIMENSION)
    spec = rep.field
    algebra = end_basis(rep)
    n = rep.total_dim
    eigs = []
    for i, blocks in enumerate(algebra.basis):
        gamma = qn_test(spec, blocks, n)
        if gamma is None:
            return IndecVerdict(
                VERDICT_NOT_ABS_INDEC,
                reason=REASON_BASIS_ELEMENT_NOT_QN,
                failing_index=i,
            )
        eigs.append(gamma)
    nilpotent, series = lie_nilpotency(spec, algebra)
    if not nilpotent:
        return IndecVerdict(
            VERDICT_NOT_ABS_INDEC,
            reason=REASON_LIE_NOT_NILPOTENT,
            series=series,
        )
    return IndecVerdict(VERDICT_ABS_INDEC, eig_values=tuple(eigs))


def all_elements_qn_oracle(algebra: EndAlgebra, cap: int = 10**6) -> bool:
    """Brute-force check that every algebra element is quasi-nilpotent.

    Enumerates all q^m linear combinations of the basis.  Agreement with
    decide_abs_indec on every feasible instance is the anti-drift oracle
    for the two-step decision.
    """
    spec = algebra.rep.field
    q, m = spec.q, algebra.m
    if q**m > cap:
        raise TooLarge(f"q^m = {q**m} exceeds cap {cap}")
    quiver, dims = algebra.rep.quiver, algebra.rep.dims
    n = algebra.rep.total_dim
    for combo in itertools.product(range(q), repeat=m):
        blocks = {v: spec.zeros((dims[v], dims[v])) for v in quiver.vertices}
        for c, base in zip(combo, algebra.basis):
            if c:
                blocks = block_add(spec, blocks, block_scale(spec, c, base))
        if qn_test(spec, blocks, n) is None:
            return False
    return True


# ---------------------------------------------------------------------------
# constructions
# ---------------------------------------------------------------------------

def direct_sum(a: Representation, b: Representation) -> Representation:
    if a.quiver != b.quiver:
        raise QuiverMismatch("direct sum needs a common quiver")
    if a.field != b.field:
        raise FieldMismatch("direct sum needs a common field")
    dims = {v: a.dims[v] + b.dims[v] for v in a.quiver.vertices}
    maps = []
    for i, (t, h) in enumerate(a.quiver.edges):
        block = np.zeros((dims[h], dims[t]), dtype=ELEM_DTYPE)
        block[: a.dims[h], : a.dims[t]] = a.maps[i]
        block[a.dims[h] :, a.dims[t] :] = b.maps[i]
        maps.append(block)
    return Representation(a.quiver, a.field, dims, maps)


def reflect_functor(rep: Representation, v: str) -> Representation:
    """BGP reflection at a sink or source vertex.

    Sink: the new space at v is the kernel of the combined map into v,
    with the restricted projections as new maps; source: the dual
    cokernel construction.  All edges at v reverse; kernel and cokernel
    bases use the deterministic parameterizations of the linear algebra
    layer, so outputs reproduce exactly.
    """
    quiver, spec, dims = rep.quiver, rep.field, rep.dims
    if v not in quiver.vertices:
        raise RepError(f"unknown vertex {v!r}")
    if quiver.has_self_loop(v):
        raise SelfLoopAtV(f"vertex {v} carries a self-loop")
    incoming = quiver.in_edges(v)
    outgoing = quiver.out_edges(v)
    if incoming and outgoing:
        raise NotSinkOrSource(f"vertex {v} has both in- and out-edges")

    new_edges = [
        (h, t) if t == v or h == v else (t, h) for t, h in quiver.edges
    ]
    new_quiver = Quiver(quiver.vertices, tuple(new_edges))

    if not outgoing:
        # sink: combined map from the sum of tails into v
        tails = [quiver.edges[e][0] for e in incoming]
        widths = [dims[t] for t in tails]
        total = sum(widths)
        phi = np.zeros((dims[v], total), dtype=ELEM_DTYPE)
        off = 0
        for e, w in zip(incoming, widths):
            phi[:, off : off + w] = rep.maps[e]
            off += w
        kernel = kernel_basis(spec, phi)
        d = len(kernel)
        kmat = (
            np.stack(kernel, axis=1)
            if kernel
            else np.zeros((total, 0), dtype=ELEM_DTYPE)
        )
        new_dims = dict(dims)
        new_dims[v] = d
        new_maps = []
        off_by_edge = {}
        off = 0
        for e, w in zip(incoming, widths):
            off_by_edge[e] = off
            off += w
        for i in range(len(quiver.edges)):
            if i in off_by_edge:
                bs = off_by_edge[i]
                w = dims[quiver.edges[i][0]]
                new_maps.append(np.ascontiguousarray(kmat[bs : bs + w, :]))
            else:
                new_maps.append(rep.maps[i])
        return Representation(new_quiver, spec, new_dims, new_maps)

    # source: cokernel of the combined map out of v
    heads = [quiver.edges[e][1] for e in outgoing]
    heights = [dims[h] for h in heads]
    total = sum(heights)
    psi = np.zeros((total, dims[v]), dtype=ELEM_DTYPE)
    off = 0
    for e, hgt in zip(outgoing, heights):
        psi[off : off + hgt, :] = rep.maps[e]
        off += hgt
    # quotient by the column space: echelonize its spanning rows, then
    # project onto the free coordinates with pivot corrections
    reduced, pivots, rank = rref(spec, psi.T)
    free = [c for c in range(total) if c not in set(pivots)]
    d = len(free)
    quot = np.zeros((d, total), dtype=ELEM_DTYPE)
    for j, f in enumerate(free):
        quot[j, f] = 1
        for i, pc in enumerate(pivots):
            quot[j, pc] = spec.neg(int(reduced[i, f]))
    new_dims = dict(dims)
    new_dims[v] = d
    new_maps = []
    off_by_edge = {}
    off = 0
    for e, hgt in zip(outgoing, heights):
        off_by_edge[e] = off
        off += hgt
    for i in range(len(quiver.edges)):
        if i in off_by_edge:
            bs = off_by_edge[i]
            hgt = dims[quiver.edges[i][1]]
            new_maps.append(np.ascontiguousarray(quot[:, bs : bs + hgt]))
        else:
            new_maps.append(rep.maps[i])
    return Representation(new_quiver, spec, new_dims, new_maps)


def find_abs_indec(
    quiver: Quiver,
    dims: dict[str, int],
    spec: FieldSpec,
    fixed: dict[int, int] | None = None,
    cap: int = 10**7,
) -> Representation | None:
    """Exhaustive search for an absolutely indecomposable representation.

    Free entries are filled in canonical order (edge order then
    row-major, values in enumeration order), so the returned witness is
    the lexicographically first success consistent with the fixed
    entries; None means the search space is exhausted.  Exponential in
    the number of free entries by design.
    """
    dims = validate_dims(quiver, dims)
    total_entries = m_alpha(quiver, dims)
    fixed = dict(fixed or {})
    for pos, val in fixed.items():
        if not 0 <= pos < total_entries:
            raise RepError(f"fixed position {pos} out of range [0, {total_entries})")
        spec._check(val)
    free_pos = [i for i in range(total_entries) if i not in fixed]
    if spec.q ** len(free_pos) > cap:
        raise TooLarge(
            f"q^free = {spec.q ** len(free_pos)} exceeds cap {cap}"
        )
    entries = np.zeros(total_entries, dtype=ELEM_DTYPE)
    for pos, val in fixed.items():
        entries[pos] = val
    for combo in itertools.product(range(spec.q), repeat=len(free_pos)):
        for pos, val in zip(free_pos, combo):
            entries[pos] = val
        rep = rep_from_entries(quiver, dims, spec, entries)
        if decide_abs_indec(rep).absolutely_indecomposable:
            return rep
    return None


# ---------------------------------------------------------------------------
# file formats (exact round-trip)
# ---------------------------------------------------------------------------

def format_quiver(quiver: Quiver) -> str:
    lines = ["vertices: " + " ".join(quiver.vertices)]
    lines += [f"edge: {t} -> {h}" for t, h in quiver.edges]
    return "\n".join(lines) + "\n"


def parse_quiver(text: str) -> Quiver:
    vertices: tuple[str, ...] | None = None
    edges: list[tuple[str, str]] = []
    for lineno, raw in enumerate(text.split("\n"), start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("vertices:"):
            if vertices is not None:
                raise FileFormatError("duplicate vertices line", lineno, "vertices")
            vertices = tuple(line[len("vertices:") :].split())
        elif line.startswith("edge:"):
            body = line[len("edge:") :]
            if "->" not in body:
                raise FileFormatError("edge line needs 'tail -> head'", lineno, "edge")
            t, h = (s.strip() for s in body.split("->", 1))
            edges.append((t, h))
        else:
            raise FileFormatError(f"unrecognized line {line!r}", lineno, None)
    if vertices is None:
        raise FileFormatError("missing vertices line", None, "vertices")
    try:
        return Quiver(vertices, tuple(edges))
    except RepError as exc:
        raise FileFormatError(str(exc), None, "edge") from None


def format_dims(quiver: Quiver, dims: dict[str, int]) -> str:
    return " ".join(f"{v}={dims[v]}" for v in quiver.vertices)


def parse_dims(quiver: Quiver, text: str, lineno: int | None = None) -> dict[str, int]:
    dims: dict[str, int] = {}
    for token in text.split():
        if "=" not in token:
            raise FileFormatError(f"bad dimension token {token!r}", lineno, "dims")
        v, n = token.split("=", 1)
        try:
            dims[v] = int(n)
        except ValueError:
            raise FileFormatError(f"bad dimension value {n!r}", lineno, "dims") from None
    missing = set(quiver.vertices) - set(dims)
    extra = set(dims) - set(quiver.vertices)
    if missing or extra:
        raise FileFormatError(
            f"dimension vector mismatch (missing {sorted(missing)}, extra {sorted(extra)})",
            lineno,
            "dims",
        )
    return dims


def format_representation(rep: Representation) -> str:
    lines = [f"field: {rep.field.header()}"]
    lines.append("dims: " + format_dims(rep.quiver, rep.dims))
    for i, m in enumerate(rep.maps):
        lines.append(f"map {i}:")
        for row in m:
            lines.append(" ".join(rep.field.format_element(int(x)) for x in row))
    return "\n".join(lines) + "\n"


def parse_representation(text: str, quiver: Quiver) -> Representation:
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    pos = 0

    def take(what: str) -> str:
        nonlocal pos
        if pos >= len(lines):
            raise FileFormatError(f"unexpected end of file, wanted {what}", pos + 1, what)
        line = lines[pos]
        pos += 1
        return line

    field_line = take("field")
    if not field_line.startswith("field: "):
        raise FileFormatError("first line must be 'field: ...'", 1, "field")
    try:
        spec = parse_field_header(field_line[len("field: ") :])
    except ValueError as exc:
        raise FileFormatError(str(exc), 1, "field") from None

    dims_line = take("dims")
    if not dims_line.startswith("dims: "):
        raise FileFormatError("second line must be 'dims: ...'", 2, "dims")
    dims = parse_dims(quiver, dims_line[len("dims: ") :], 2)

    maps = []
    for i, (t, h) in enumerate(quiver.edges):
        header_line = take(f"map {i}")
        if header_line.strip() != f"map {i}:":
            raise FileFormatError(
                f"expected 'map {i}:', got {header_line!r}", pos, "map"
            )
        n_rows, n_cols = dims[h], dims[t]
        rows = []
        for _ in range(n_rows):
            lineno = pos + 1
            row_line = take("matrix row")
            tokens = row_line.split()
            if len(tokens) != n_cols:
                raise FileFormatError(
                    f"map {i} row has {len(tokens)} entries, want {n_cols}",
                    lineno,
                    "map",
                )
            try:
                rows.append([spec.parse_element(tok) for tok in tokens])
            except ValueError as exc:
                raise FileFormatError(str(exc), lineno, "map") from None
        maps.append(np.array(rows, dtype=ELEM_DTYPE).reshape(n_rows, n_cols))
    while pos < len(lines):
        if lines[pos].strip():
            raise FileFormatError(f"trailing content {lines[pos]!r}", pos + 1, None)
        pos += 1
    return Representation(quiver, spec, dims, maps)
