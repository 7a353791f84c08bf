"""Exact arithmetic in GF(p^m) with log/antilog tables.

Elements are stored as integers in [0, q): the polynomial
a_0 + a_1 x + ... + a_{m-1} x^{m-1} over GF(p) is encoded as
a_0 + a_1 p + ... + a_{m-1} p^{m-1}.  In particular 0 <-> 0, 1 <-> 1,
and the integers 0..p-1 are exactly the prime subfield.

Every field is built on the lexicographically smallest primitive
polynomial of its degree (coefficient vectors (a_{m-1}, ..., a_0)
compared as base-p integers, smallest first), so all downstream
constructions are bit-reproducible without external polynomial tables.
For m = 1 the polynomial machinery degenerates to arithmetic mod p and
alpha is the smallest primitive root.

The supported field order is bounded by Q_LIMIT = 2^20; log/antilog
tables of size q are precomputed at creation for O(1) mul/inv.
"""

from __future__ import annotations

Q_LIMIT = 1 << 20

# full addition tables are only worth their memory for small fields
_ADD_TABLE_MAX_Q = 512


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def _digits(value: int, p: int, m: int) -> list[int]:
    out = []
    for _ in range(m):
        out.append(value % p)
        value //= p
    return out


def _encode(digits, p: int) -> int:
    out = 0
    for d in reversed(digits):
        out = out * p + d
    return out


def _mulx(e: list[int], mod_low, p: int) -> list[int]:
    """Multiply the element (digit list) by x modulo the monic modulus."""
    m = len(e)
    top = e[m - 1]
    out = [0] * m
    for i in range(m - 1, 0, -1):
        out[i] = (e[i - 1] - top * mod_low[i]) % p
    out[0] = (-top * mod_low[0]) % p
    return out


def _power_chain(mod_low, p: int, m: int, q: int):
    """Powers of x modulo the modulus, or None if x has order < q - 1.

    Returns the list [x^0, x^1, ..., x^(q-2)] as encoded integers exactly
    when x is a unit of full multiplicative order, which simultaneously
    certifies that the modulus is irreducible and primitive.
    """
    powers = [1]
    e = [0] * m
    e[0] = 1
    for step in range(1, q):
        e = _mulx(e, mod_low, p)
        enc = _encode(e, p)
        if enc == 0:
            return None
        if enc == 1:
            return powers if step == q - 1 else None
        powers.append(enc)
    return None


class FieldSpec:
    """A concrete finite field GF(p^m) with precomputed tables.

    Immutable after creation; all operations are pure, so instances are
    safe to share between threads.  Use :func:`field_create` (canonical
    modulus) or :func:`field_from_modulus` (explicit modulus) instead of
    the constructor.
    """

    __slots__ = (
        "p", "m", "q", "modulus", "alpha", "alpha_powers", "discrete_log",
        "_add_table", "_neg_table",
    )

    def __init__(self, p: int, m: int, modulus, alpha_powers):
        self.p = p
        self.m = m
        self.q = p ** m
        self.modulus = tuple(modulus)
        self.alpha_powers = tuple(alpha_powers)
        self.alpha = self.alpha_powers[1] if self.q > 2 else 1
        log = [-1] * self.q
        for i, a in enumerate(self.alpha_powers):
            log[a] = i
        self.discrete_log = tuple(log)
        if p != 2 and self.q <= _ADD_TABLE_MAX_Q:
            self._add_table = tuple(
                tuple(self._add_slow(a, b) for b in range(self.q))
                for a in range(self.q)
            )
            self._neg_table = tuple(self._neg_slow(a) for a in range(self.q))
        else:
            self._add_table = None
            self._neg_table = None

    # -- element arithmetic -------------------------------------------------

    def add(self, a: int, b: int) -> int:
        if self.p == 2:
            return a ^ b
        if self._add_table is not None:
            return self._add_table[a][b]
        return self._add_slow(a, b)

    def _add_slow(self, a: int, b: int) -> int:
        p = self.p
        out = 0
        mul = 1
        while a or b:
            out += ((a + b) % p) * mul
            a //= p
            b //= p
            mul *= p
        return out

    def neg(self, a: int) -> int:
        if self.p == 2:
            return a
        if self._neg_table is not None:
            return self._neg_table[a]
        return self._neg_slow(a)

    def _neg_slow(self, a: int) -> int:
        p = self.p
        out = 0
        mul = 1
        while a:
            out += ((p - a % p) % p) * mul
            a //= p
            mul *= p
        return out

    def sub(self, a: int, b: int) -> int:
        if self.p == 2:
            return a ^ b
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        log = self.discrete_log
        return self.alpha_powers[(log[a] + log[b]) % (self.q - 1)]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("zero has no multiplicative inverse")
        return self.alpha_powers[(-self.discrete_log[a]) % (self.q - 1)]

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        """a^e for e >= 0, with the convention a^0 = 1 (including 0^0 = 1)."""
        if e < 0:
            raise ValueError("exponent must be nonnegative")
        if e == 0:
            return 1
        if a == 0:
            return 0
        return self.alpha_powers[(self.discrete_log[a] * e) % (self.q - 1)]

    def trace(self, a: int) -> int:
        """Trace into the prime subfield: a + a^p + ... + a^(p^(m-1))."""
        acc = a
        x = a
        for _ in range(self.m - 1):
            x = self.pow(x, self.p)
            acc = self.add(acc, x)
        return acc

    # -- encodings ----------------------------------------------------------

    def coeffs(self, a: int) -> tuple:
        """Little-endian coefficient vector of the element, length m."""
        return tuple(_digits(a, self.p, self.m))

    def from_coeffs(self, coeffs) -> int:
        return _encode(list(coeffs) + [0] * (self.m - len(coeffs)), self.p)

    def elements(self) -> range:
        return range(self.q)

    def nonzero_elements(self) -> range:
        return range(1, self.q)

    def validate_element(self, a: int) -> int:
        if not isinstance(a, int) or not 0 <= a < self.q:
            raise ValueError(f"{a!r} is not an element of GF({self.q})")
        return a

    # -- identity -----------------------------------------------------------

    def __eq__(self, other) -> bool:
        return (isinstance(other, FieldSpec)
                and self.p == other.p and self.m == other.m
                and self.modulus == other.modulus)

    def __hash__(self):
        return hash((self.p, self.m, self.modulus))

    def __repr__(self):
        return f"FieldSpec(p={self.p}, m={self.m}, q={self.q}, modulus={self.modulus})"


def _smallest_primitive_root(p: int) -> tuple[int, list[int]]:
    for g in range(1, p):
        powers = [1]
        x = 1
        for step in range(1, p):
            x = (x * g) % p
            if x == 1:
                if step == p - 1:
                    return g, powers
                break
            powers.append(x)
    raise ArithmeticError(f"no primitive root mod {p}")  # unreachable for prime p


_FIELD_CACHE: dict[tuple[int, int], FieldSpec] = {}


def field_create(p: int, m: int) -> FieldSpec:
    """The canonical GF(p^m): lexicographically smallest primitive modulus.

    Results are cached per (p, m); FieldSpec is immutable so sharing is safe.
    """
    key = (p, m)
    cached = _FIELD_CACHE.get(key)
    if cached is not None:
        return cached

    if not is_prime(p):
        raise ValueError(f"p must be prime, got {p}")
    if m < 1:
        raise ValueError(f"m must be >= 1, got {m}")
    q = p ** m
    if q > Q_LIMIT:
        raise ValueError(f"q = {q} exceeds the supported limit {Q_LIMIT}")

    if m == 1:
        alpha, powers = _smallest_primitive_root(p)
        modulus = ((p - alpha) % p, 1)
        spec = FieldSpec(p, m, modulus, powers)
    else:
        spec = None
        for v in range(q):
            low = _digits(v, p, m)
            if low[0] == 0:
                continue
            powers = _power_chain(low, p, m, q)
            if powers is not None:
                spec = FieldSpec(p, m, tuple(low) + (1,), powers)
                break
        if spec is None:
            raise ArithmeticError(f"no primitive polynomial found for GF({q})")

    _FIELD_CACHE[key] = spec
    return spec


def field_from_modulus(p: int, m: int, coeffs) -> FieldSpec:
    """Build GF(p^m) on an explicit monic modulus (little-endian coefficients).

    The modulus must be primitive: x must generate the full multiplicative
    group, which is verified exhaustively while the antilog table is built.
    """
    if not is_prime(p):
        raise ValueError(f"p must be prime, got {p}")
    if m < 1:
        raise ValueError(f"m must be >= 1, got {m}")
    q = p ** m
    if q > Q_LIMIT:
        raise ValueError(f"q = {q} exceeds the supported limit {Q_LIMIT}")
    coeffs = tuple(int(c) % p for c in coeffs)
    if len(coeffs) != m + 1:
        raise ValueError(f"modulus must have m+1 = {m + 1} coefficients")
    if coeffs[m] != 1:
        raise ValueError("modulus must be monic")

    canonical = field_create(p, m)
    if coeffs == canonical.modulus:
        return canonical

    if m == 1:
        alpha = (p - coeffs[0]) % p
        powers = [1]
        x = 1
        for step in range(1, p):
            x = (x * alpha) % p
            if x == 1:
                break
            powers.append(x)
        if len(powers) != p - 1:
            raise ValueError(f"x + {coeffs[0]} is not primitive mod {p}")
        return FieldSpec(p, m, coeffs, powers)

    powers = _power_chain(list(coeffs[:m]), p, m, q)
    if powers is None:
        raise ValueError(
            f"modulus {coeffs} is not a primitive polynomial over GF({p})"
        )
    return FieldSpec(p, m, coeffs, powers)
