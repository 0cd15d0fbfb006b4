"""Exact arithmetic in finite fields GF(p^k).

Elements are encoded as plain integers: the element with polynomial
coefficients (c0, ..., c_{k-1}) over GF(p) has index sum(c_i * p**i).
This keeps matrices compact (a matrix over GF(q) is just an integer
numpy array) and makes the canonical enumeration order trivial: the
elements of GF(q) are exactly 0, 1, ..., q-1, with 0 and 1 being the
additive and multiplicative identities.

Prime fields compute with modular arithmetic directly; extension fields
use precomputed operation tables built from polynomial arithmetic modulo
an explicit irreducible modulus.  All operations are pure functions of
their inputs and safe for concurrent use.
"""

from __future__ import annotations

import numpy as np

# canonical dtype for element-index matrices throughout the package
ELEM_DTYPE = np.int16

# largest extension field we build full operation tables for
_TABLE_LIMIT = 4096


class FieldError(ValueError):
    """Base class for finite-field construction and arithmetic errors."""


class NonPrimeP(FieldError):
    pass


class ReducibleModulus(FieldError):
    pass


class NoDefaultModulus(FieldError):
    pass


class DivisionByZero(FieldError):
    pass


class MixedFields(FieldError):
    """An operand is not a valid element index for this field."""


# One canonical modulus per small extension field so that file formats
# are reproducible; callers may always override.  Coefficients are
# lowest-degree first, e.g. t^2 + t + 1 is (1, 1, 1).
DEFAULT_MODULI: dict[tuple[int, int], tuple[int, ...]] = {
    (2, 2): (1, 1, 1),       # t^2 + t + 1
    (2, 3): (1, 1, 0, 1),    # t^3 + t + 1
    (3, 2): (1, 0, 1),       # t^2 + 1
    (5, 2): (3, 0, 1),       # t^2 + 3
    (3, 3): (1, 2, 0, 1),    # t^3 + 2t + 1
}


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, valid far beyond desk scale."""
    if n < 2:
        return False
    for small in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % small == 0:
            return n == small
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


# ---------------------------------------------------------------------------
# polynomial helpers over GF(p); polynomials are lists of ints, lowest first
# ---------------------------------------------------------------------------

def _poly_trim(f: list[int]) -> list[int]:
    while f and f[-1] == 0:
        f.pop()
    return f


def _poly_mod(a: list[int], f: list[int], p: int) -> list[int]:
    """Remainder of a modulo f; f need not be monic."""
    a = [x % p for x in a]
    _poly_trim(a)
    df = len(f) - 1
    lead_inv = pow(f[-1], p - 2, p)
    while len(a) - 1 >= df and a:
        shift = len(a) - 1 - df
        factor = a[-1] * lead_inv % p
        for i, c in enumerate(f):
            a[shift + i] = (a[shift + i] - factor * c) % p
        _poly_trim(a)
    return a


def _poly_mulmod(a: list[int], b: list[int], f: list[int], p: int) -> list[int]:
    out = [0] * (len(a) + len(b) - 1) if a and b else []
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _poly_mod(out, f, p)


def _poly_powmod(base: list[int], e: int, f: list[int], p: int) -> list[int]:
    result = [1]
    base = _poly_mod(list(base), f, p)
    while e:
        if e & 1:
            result = _poly_mulmod(result, base, f, p)
        base = _poly_mulmod(base, base, f, p)
        e >>= 1
    return result


def _poly_gcd(a: list[int], b: list[int], p: int) -> list[int]:
    a = _poly_trim([x % p for x in a])
    b = _poly_trim([x % p for x in b])
    while b:
        a, b = b, _poly_mod(a, b, p)
    if a:  # make monic
        inv = pow(a[-1], p - 2, p)
        a = [c * inv % p for c in a]
    return a


def _poly_inverse(a: list[int], f: list[int], p: int) -> list[int]:
    """Inverse of a modulo f via extended Euclid in GF(p)[t]."""
    r0, r1 = list(f), _poly_trim([x % p for x in a])
    s0, s1 = [], [1]
    while r1:
        # divide r0 by r1
        q = [0] * (max(len(r0) - len(r1), 0) + 1)
        rem = list(r0)
        lead_inv = pow(r1[-1], p - 2, p)
        while len(rem) >= len(r1) and rem:
            shift = len(rem) - len(r1)
            factor = rem[-1] * lead_inv % p
            q[shift] = factor
            for i, c in enumerate(r1):
                rem[shift + i] = (rem[shift + i] - factor * c) % p
            _poly_trim(rem)
        # s update: s0 - q*s1
        prod = [0] * (len(q) + len(s1) - 1) if q and s1 else []
        for i, qi in enumerate(q):
            if qi:
                for j, sj in enumerate(s1):
                    prod[i + j] = (prod[i + j] + qi * sj) % p
        new_s = [0] * max(len(s0), len(prod))
        for i, c in enumerate(s0):
            new_s[i] = c
        for i, c in enumerate(prod):
            new_s[i] = (new_s[i] - c) % p
        r0, r1 = r1, rem
        s0, s1 = s1, _poly_trim(new_s)
    if len(r0) != 1:
        raise DivisionByZero("element is not invertible")
    c_inv = pow(r0[0], p - 2, p)
    return [c * c_inv % p for c in s0]


def _is_irreducible(f: tuple[int, ...], p: int, k: int) -> bool:
    """Monic degree-k f is irreducible over GF(p) iff x^(p^k) == x (mod f)
    and gcd(x^(p^(k/d)) - x, f) = 1 for every prime divisor d of k."""
    if k == 1:
        return True
    fl = list(f)
    prime_divs = set()
    rest, d = k, 2
    while d * d <= rest:
        if rest % d == 0:
            prime_divs.add(d)
            while rest % d == 0:
                rest //= d
        d += 1
    if rest > 1:
        prime_divs.add(rest)
    # x^(p^i) by iterating the Frobenius
    needed = {k // d for d in prime_divs}
    g = [0, 1]
    for i in range(1, k + 1):
        g = _poly_powmod(g, p, fl, p)
        if i in needed:
            diff = list(g)
            while len(diff) < 2:
                diff.append(0)
            diff[1] = (diff[1] - 1) % p
            if len(_poly_gcd(diff, fl, p)) != 1:
                return False
    diff = list(g)
    while len(diff) < 2:
        diff.append(0)
    diff[1] = (diff[1] - 1) % p
    return not _poly_trim(diff)


# ---------------------------------------------------------------------------
# FieldSpec
# ---------------------------------------------------------------------------

class FieldSpec:
    """A validated finite field GF(p^k) with an explicit modulus.

    Instances are immutable and hashable; two specs compare equal iff they
    share (p, k, modulus).  Arithmetic methods accept either Python ints or
    integer numpy arrays (broadcasting elementwise) and return the same kind.
    """

    __slots__ = ("p", "k", "modulus", "q", "_add", "_mul", "_neg", "_inv")

    def __init__(self, p: int, k: int, modulus: tuple[int, ...]):
        if not isinstance(p, int) or not is_prime(p):
            raise NonPrimeP(f"p = {p} is not prime")
        if not isinstance(k, int) or k < 1:
            raise FieldError(f"extension degree k = {k} must be >= 1")
        modulus = tuple(int(c) for c in modulus)
        if len(modulus) != k + 1:
            raise FieldError(f"modulus needs {k + 1} coefficients, got {len(modulus)}")
        if any(c < 0 or c >= p for c in modulus):
            raise FieldError("modulus coefficients must lie in [0, p)")
        if modulus[-1] != 1:
            raise FieldError("modulus must be monic")
        if not _is_irreducible(modulus, p, k):
            raise ReducibleModulus(f"modulus {modulus} is reducible over GF({p})")
        q = p**k
        if q >= 2**15:
            raise FieldError(f"field size {q} exceeds the supported element range")
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "k", k)
        object.__setattr__(self, "modulus", modulus)
        object.__setattr__(self, "q", q)
        if k >= 2:
            if q > _TABLE_LIMIT:
                raise FieldError(f"extension field of size {q} exceeds table limit {_TABLE_LIMIT}")
            add, mul, neg, inv = self._build_tables()
        else:
            add = mul = neg = inv = None
        object.__setattr__(self, "_add", add)
        object.__setattr__(self, "_mul", mul)
        object.__setattr__(self, "_neg", neg)
        object.__setattr__(self, "_inv", inv)

    def __setattr__(self, name, value):
        raise AttributeError("FieldSpec is immutable")

    def __reduce__(self):
        return (FieldSpec, (self.p, self.k, self.modulus))

    def __eq__(self, other):
        return (
            isinstance(other, FieldSpec)
            and (self.p, self.k, self.modulus) == (other.p, other.k, other.modulus)
        )

    def __hash__(self):
        return hash((self.p, self.k, self.modulus))

    def __repr__(self):
        return f"FieldSpec({self.header()!r})"

    # -- table construction (extension fields only) -------------------------

    def _build_tables(self):
        p, k, q = self.p, self.k, self.q
        idx = np.arange(q, dtype=np.int64)
        digits = np.empty((q, k), dtype=np.int64)
        tmp = idx.copy()
        for i in range(k):
            digits[:, i] = tmp % p
            tmp //= p
        weights = p ** np.arange(k, dtype=np.int64)

        add = (((digits[:, None, :] + digits[None, :, :]) % p) @ weights).astype(ELEM_DTYPE)
        neg = (((p - digits) % p) @ weights).astype(ELEM_DTYPE)

        # reduction of t^l for l in [k, 2k-2] to coefficient vectors;
        # shifting by t pushes the top coefficient past t^(k-1), where it
        # reduces through t^k mod f
        red = {k: [(-c) % p for c in self.modulus[:k]]}
        for l in range(k + 1, 2 * k - 1):
            top = red[l - 1][k - 1]
            shifted = [0] + red[l - 1][: k - 1]
            red[l] = [(shifted[i] + top * red[k][i]) % p for i in range(k)]

        conv = np.zeros((q, q, 2 * k - 1), dtype=np.int64)
        for i in range(k):
            for j in range(k):
                conv[:, :, i + j] += digits[:, None, i] * digits[None, :, j]
        conv %= p
        for l in range(k, 2 * k - 1):
            for i in range(k):
                conv[:, :, i] = (conv[:, :, i] + red[l][i] * conv[:, :, l]) % p
        mul = (conv[:, :, :k] @ weights).astype(ELEM_DTYPE)

        inv = np.zeros(q, dtype=ELEM_DTYPE)
        fl = list(self.modulus)
        for x in range(1, q):
            coeffs = [(x // p**i) % p for i in range(k)]
            inv_poly = _poly_inverse(coeffs, fl, p)
            inv[x] = sum(c * p**i for i, c in enumerate(inv_poly))
        return add, mul, neg, inv

    # -- element views and text syntax ---------------------------------------

    def coeffs(self, x: int) -> tuple[int, ...]:
        """Polynomial coefficients (c0, ..., c_{k-1}) of element index x."""
        self._check(x)
        x = int(x)
        return tuple((x // self.p**i) % self.p for i in range(self.k))

    def from_coeffs(self, coeffs) -> int:
        cs = tuple(int(c) for c in coeffs)
        if len(cs) != self.k or any(c < 0 or c >= self.p for c in cs):
            raise MixedFields(f"coefficients {cs} invalid for {self.header()}")
        return sum(c * self.p**i for i, c in enumerate(cs))

    def format_element(self, x: int) -> str:
        """Prime fields print decimal; extension fields print "c0:c1:...:ck-1"."""
        self._check(x)
        if self.k == 1:
            return str(int(x))
        return ":".join(str(c) for c in self.coeffs(x))

    def parse_element(self, text: str) -> int:
        text = text.strip()
        try:
            if self.k == 1:
                val = int(text)
                if not 0 <= val < self.q:
                    raise ValueError
                return val
            parts = [int(t) for t in text.split(":")]
            return self.from_coeffs(parts)
        except (ValueError, MixedFields):
            raise FieldError(f"cannot parse {text!r} as an element of {self.header()}") from None

    def header(self) -> str:
        """Canonical field header, e.g. "GF(3^2) mod 1,0,1"."""
        mods = ",".join(str(c) for c in self.modulus)
        return f"GF({self.p}^{self.k}) mod {mods}"

    # -- arithmetic -----------------------------------------------------------

    def _check(self, *ops):
        for a in ops:
            arr = np.asarray(a)
            if arr.size and (arr.min() < 0 or arr.max() >= self.q):
                raise MixedFields(
                    f"operand out of range for {self.header()}: {a!r}"
                )

    def add(self, a, b):
        if self.k == 1:
            if isinstance(a, (int, np.integer)) and isinstance(b, (int, np.integer)):
                return (int(a) + int(b)) % self.p
            return ((np.asarray(a, dtype=np.int64) + np.asarray(b, dtype=np.int64)) % self.p).astype(ELEM_DTYPE)
        out = self._add[a, b]
        return int(out) if np.isscalar(out) or out.ndim == 0 else out

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        if self.k == 1:
            if isinstance(a, (int, np.integer)) and isinstance(b, (int, np.integer)):
                return int(a) * int(b) % self.p
            return ((np.asarray(a, dtype=np.int64) * np.asarray(b, dtype=np.int64)) % self.p).astype(ELEM_DTYPE)
        out = self._mul[a, b]
        return int(out) if np.isscalar(out) or out.ndim == 0 else out

    def neg(self, a):
        if self.k == 1:
            if isinstance(a, (int, np.integer)):
                return (-int(a)) % self.p
            return ((-np.asarray(a, dtype=np.int64)) % self.p).astype(ELEM_DTYPE)
        out = self._neg[a]
        return int(out) if np.isscalar(out) or out.ndim == 0 else out

    def inv(self, a) -> int:
        a = int(a)
        self._check(a)
        if a == 0:
            raise DivisionByZero("inverse of zero")
        if self.k == 1:
            return pow(a, self.p - 2, self.p)
        return int(self._inv[a])

    def pow(self, a: int, e: int) -> int:
        result, base = 1, int(a)
        e = int(e)
        while e:
            if e & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            e >>= 1
        return result

    def matmul(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        """Exact matrix product over the field.

        Prime fields go through float64 BLAS (exact while the accumulated
        magnitude stays below 2^53, asserted); extension fields decompose
        into coefficient layers over GF(p) and reduce by the modulus.
        """
        a = np.asarray(a)
        b = np.asarray(b)
        p, k = self.p, self.k
        inner = a.shape[-1]
        if k == 1:
            if inner * (p - 1) ** 2 >= 2**53:
                raise FieldError("matrix product exceeds exact float64 range")
            c = a.astype(np.float64) @ b.astype(np.float64)
            return (c % p).astype(ELEM_DTYPE)
        if k * inner * (p - 1) ** 2 >= 2**53:
            raise FieldError("matrix product exceeds exact float64 range")
        a_layers = [((a // p**i) % p).astype(np.float64) for i in range(k)]
        b_layers = [((b // p**i) % p).astype(np.float64) for i in range(k)]
        conv = [None] * (2 * k - 1)
        for i in range(k):
            for j in range(k):
                prod = a_layers[i] @ b_layers[j]
                l = i + j
                conv[l] = prod if conv[l] is None else conv[l] + prod
        conv = [np.asarray(c) % p for c in conv]
        red_base = [(-c) % p for c in self.modulus[:k]]
        red = {k: list(red_base)}
        for l in range(k + 1, 2 * k - 1):
            top = red[l - 1][k - 1]
            shifted = [0] + red[l - 1][: k - 1]
            red[l] = [(shifted[i] + top * red_base[i]) % p for i in range(k)]
        out_layers = list(conv[:k])
        for l in range(k, 2 * k - 1):
            for i in range(k):
                if red[l][i]:
                    out_layers[i] = (out_layers[i] + red[l][i] * conv[l]) % p
        result = np.zeros(out_layers[0].shape, dtype=np.int64)
        for i in range(k):
            result += (out_layers[i].astype(np.int64)) * p**i
        return result.astype(ELEM_DTYPE)

    def identity(self, n: int) -> np.ndarray:
        return np.eye(n, dtype=ELEM_DTYPE)

    def zeros(self, shape) -> np.ndarray:
        return np.zeros(shape, dtype=ELEM_DTYPE)


# ---------------------------------------------------------------------------
# the module's operations
# ---------------------------------------------------------------------------

def ff_make(p: int, k: int, modulus=None) -> FieldSpec:
    """Build a validated GF(p^k); without a modulus, use the default table."""
    if modulus is None:
        if k == 1:
            modulus = (0, 1)
        elif (p, k) in DEFAULT_MODULI:
            modulus = DEFAULT_MODULI[(p, k)]
        else:
            raise NoDefaultModulus(f"no default modulus for GF({p}^{k}); supply one")
    return FieldSpec(p, k, tuple(modulus))


def ff_arith(spec: FieldSpec, kind: str, a: int, b: int | None = None) -> int:
    """Scalar field arithmetic: kind in {add, sub, mul, inv, neg}."""
    spec._check(a)
    if kind in ("inv", "neg"):
        if b is not None:
            raise FieldError(f"{kind} takes a single operand")
        return spec.inv(a) if kind == "inv" else spec.neg(a)
    if b is None:
        raise FieldError(f"{kind} needs two operands")
    spec._check(b)
    if kind == "add":
        return spec.add(int(a), int(b))
    if kind == "sub":
        return spec.sub(int(a), int(b))
    if kind == "mul":
        return spec.mul(int(a), int(b))
    raise FieldError(f"unknown operation {kind!r}")


def ff_enumerate(spec: FieldSpec) -> list[int]:
    """All q elements in canonical order: index i has coefficients base p."""
    return list(range(spec.q))


def parse_field_header(text: str) -> FieldSpec:
    """Parse "GF(p^k) mod c0,c1,...,ck" (the canonical header syntax)."""
    text = text.strip()
    if not text.startswith("GF(") or " mod " not in text:
        raise FieldError(f"bad field header {text!r}")
    gf_part, mod_part = text.split(" mod ", 1)
    inner = gf_part[3:].rstrip(")")
    if "^" in inner:
        p_s, k_s = inner.split("^", 1)
        p, k = int(p_s), int(k_s)
    else:
        p, k = int(inner), 1
    modulus = tuple(int(c) for c in mod_part.split(","))
    return FieldSpec(p, k, modulus)


def parse_field_flag(text: str) -> FieldSpec:
    """Parse the CLI field syntax "GF(p^k)[:c0,c1,...,ck]" or "GF(q)"."""
    text = text.strip()
    modulus = None
    if ":" in text:
        text, mod_part = text.split(":", 1)
        modulus = tuple(int(c) for c in mod_part.split(","))
    if not (text.startswith("GF(") and text.endswith(")")):
        raise FieldError(f"bad field flag {text!r}; expected GF(p^k)[:modulus]")
    inner = text[3:-1]
    if "^" in inner:
        p_s, k_s = inner.split("^", 1)
        p, k = int(p_s), int(k_s)
    else:
        q = int(inner)
        p, k = _factor_prime_power(q)
    return ff_make(p, k, modulus)


def _factor_prime_power(q: int) -> tuple[int, int]:
    if q < 2:
        raise FieldError(f"{q} is not a prime power")
    for p in range(2, q + 1):
        if q % p == 0:
            k = 0
            rest = q
            while rest % p == 0:
                rest //= p
                k += 1
            if rest != 1:
                raise FieldError(f"{q} is not a prime power")
            return p, k
    raise FieldError(f"{q} is not a prime power")
