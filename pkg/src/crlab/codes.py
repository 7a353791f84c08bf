"""Linear codes as first-class objects.

Duals, weight distributions (direct enumeration and MacWilliams
transform), two-weight / antipodal predicates, complementary codes and
the projective dual transform.  All arithmetic is exact; the MacWilliams
transform runs in big integers and treats any fractional intermediate as
a hard error, never rounding.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from . import budgets
from .field import FieldSpec
from .matrix import MatGF


class WeightDistribution:
    """Codeword counts by Hamming weight, A_0 .. A_n."""

    __slots__ = ("counts", "n", "q", "k")

    def __init__(self, counts, q: int, k: int):
        counts = tuple(int(c) for c in counts)
        if counts[0] != 1:
            raise ValueError("A_0 must be 1")
        if any(c < 0 for c in counts):
            raise ValueError("negative weight count")
        if sum(counts) != q ** k:
            raise ValueError(
                f"weight counts sum to {sum(counts)}, expected q^k = {q ** k}"
            )
        self.counts = counts
        self.n = len(counts) - 1
        self.q = q
        self.k = k

    @property
    def nonzero_weights(self) -> tuple:
        return tuple(i for i in range(1, self.n + 1) if self.counts[i])

    @property
    def d(self):
        nz = self.nonzero_weights
        return nz[0] if nz else None

    @property
    def s_count(self) -> int:
        """Number of distinct nonzero weights."""
        return len(self.nonzero_weights)

    def sparse(self) -> dict:
        return {i: c for i, c in enumerate(self.counts) if c}

    def __eq__(self, other):
        return (isinstance(other, WeightDistribution)
                and self.counts == other.counts)

    def __repr__(self):
        return f"WeightDistribution({self.sparse()})"


class LinearCode:
    """A linear [n, k] code given by a full-rank generator matrix.

    k = 0 is allowed as the degenerate dual of the full space.  Derived
    data (dual, weight distribution) is cached; instances are immutable.
    """

    def __init__(self, field: FieldSpec, G: MatGF):
        if G.nrows and G.field != field:
            raise ValueError("generator field mismatch")
        if G.nrows and G.rank != G.nrows:
            raise ValueError(
                f"generator must have full row rank ({G.rank} < {G.nrows})"
            )
        self.field = field
        self.G = G
        self.n = G.ncols
        self.k = G.nrows
        self._dual = None
        self._wd = None

    @classmethod
    def from_rows(cls, field: FieldSpec, rows) -> "LinearCode":
        return cls(field, MatGF(field, rows))

    @classmethod
    def from_spanning_rows(cls, field: FieldSpec, rows) -> "LinearCode":
        """Reduce an arbitrary spanning set of rows to a basis."""
        n = len(rows[0])
        red, rank, _ = MatGF(field, rows).rref()
        if rank == 0:
            return cls(field, MatGF.empty(field, n))
        return cls(field, MatGF(field, red))

    @property
    def q(self) -> int:
        return self.field.q

    def dual(self) -> "LinearCode":
        if self._dual is None:
            if self.k == 0:
                self._dual = LinearCode(self.field,
                                        MatGF.identity(self.field, self.n))
            else:
                self._dual = LinearCode(self.field, self.G.null_space())
        return self._dual

    def contains(self, vec) -> bool:
        """Membership test through the parity-check matrix."""
        H = self.dual().G
        if H.nrows == 0:
            return True
        return all(x == 0 for x in H.mul_vec(vec))

    # -- enumeration ------------------------------------------------------

    def codewords(self):
        """All q^k codewords, in message order (messages counted base q).

        Subject to the enumeration budget.
        """
        budgets.check_enum(self.q ** self.k,
                           f"enumerating [{self.n},{self.k}]_{self.q} code")
        return list(_span(self.field, self.G))

    def weight_distribution(self) -> WeightDistribution:
        """Exact counts by direct enumeration of all q^k codewords."""
        if self._wd is None:
            budgets.check_enum(
                self.q ** self.k,
                f"weight distribution of [{self.n},{self.k}]_{self.q} code")
            counts = [0] * (self.n + 1)
            for w in _span_weights(self.field, self.G):
                counts[w] += 1
            self._wd = WeightDistribution(counts, self.q, self.k)
        return self._wd

    def weight_distribution_auto(self) -> WeightDistribution:
        """Direct enumeration when affordable, MacWilliams from the dual side
        otherwise.  Large-dimension codes are never enumerated directly."""
        if self._wd is not None:
            return self._wd
        if self.q ** self.k <= budgets.enum_budget():
            return self.weight_distribution()
        dual = self.dual()
        if self.q ** dual.k > budgets.enum_budget():
            raise budgets.BudgetExceeded(
                f"neither side of [{self.n},{self.k}]_{self.q} fits the "
                f"enumeration budget (raise {budgets.ENUM_BUDGET_VAR})")
        self._wd = macwilliams(dual.weight_distribution(),
                               self.n, dual.k, self.q)
        return self._wd

    def min_distance(self) -> int:
        d = self.weight_distribution_auto().d
        if d is None:
            raise ValueError("the zero code has no minimum distance")
        return d

    def __repr__(self):
        return f"LinearCode([{self.n},{self.k}] over GF({self.q}))"


def _span(field: FieldSpec, G: MatGF):
    """Iterate all codewords by extending partial sums row by row."""
    n = G.ncols
    words = [(0,) * n]
    add = field.add
    mul = field.mul
    for row in G.rows:
        scaled = [tuple(mul(c, x) for x in row) for c in range(field.q)]
        words = [tuple(add(a, b) for a, b in zip(w, s))
                 for w in words for s in scaled]
    return words


def _span_weights(field: FieldSpec, G: MatGF):
    for w in _span(field, G):
        yield sum(1 for x in w if x)


class CodewordMatrix:
    """Explicit list of codewords; also usable for additive/nonlinear codes."""

    def __init__(self, field: FieldSpec, rows):
        rows = tuple(tuple(r) for r in rows)
        if not rows:
            raise ValueError("empty codeword matrix")
        n = len(rows[0])
        if any(len(r) != n for r in rows):
            raise ValueError("ragged codeword matrix")
        if len(set(rows)) != len(rows):
            raise ValueError("codeword rows must be distinct")
        self.field = field
        self.rows = rows
        self.N = len(rows)
        self.n = n

    @classmethod
    def from_code(cls, code: LinearCode) -> "CodewordMatrix":
        return cls(code.field, code.codewords())

    def weights(self) -> list:
        return [sum(1 for x in r if x) for r in self.rows]

    def __repr__(self):
        return f"CodewordMatrix({self.N} x {self.n} over GF({self.field.q}))"


def dual(code: LinearCode) -> LinearCode:
    return code.dual()


def hamming_distance(a, b) -> int:
    return sum(1 for x, y in zip(a, b) if x != y)


# -- MacWilliams ----------------------------------------------------------

def krawtchouk(n: int, q: int, j: int, i: int) -> int:
    """K_j(i) = sum_t (-1)^t (q-1)^(j-t) C(i,t) C(n-i, j-t), exact."""
    acc = 0
    for t in range(j + 1):
        acc += ((-1) ** t) * ((q - 1) ** (j - t)) \
            * math.comb(i, t) * math.comb(n - i, j - t)
    return acc


def macwilliams(wd: WeightDistribution, n: int, k: int, q: int) -> WeightDistribution:
    """Dual weight distribution via the MacWilliams transform.

    Any non-integer or negative output entry signals an inconsistent input
    distribution and raises ValueError.
    """
    if wd.n != n:
        raise ValueError(f"distribution length {wd.n} != n = {n}")
    if sum(wd.counts) != q ** k:
        raise ValueError("input distribution does not sum to q^k")
    size = q ** k
    out = []
    for j in range(n + 1):
        acc = 0
        for i in range(n + 1):
            a = wd.counts[i]
            if a:
                acc += a * krawtchouk(n, q, j, i)
        if acc % size != 0:
            raise ValueError(
                f"MacWilliams output B_{j} = {acc}/{size} is not an integer; "
                f"input distribution is inconsistent")
        b = acc // size
        if b < 0:
            raise ValueError(
                f"MacWilliams output B_{j} = {b} is negative; "
                f"input distribution is inconsistent")
        out.append(b)
    return WeightDistribution(out, q, n - k)


# -- predicates -----------------------------------------------------------

@dataclass(frozen=True)
class AntipodalVerdict:
    weights: tuple
    d: int | None
    is_two_weight: bool
    includes_n: bool

    @property
    def holds(self) -> bool:
        return self.is_two_weight and self.includes_n


def is_antipodal_two_weight(wd: WeightDistribution, n: int) -> AntipodalVerdict:
    """True iff the nonzero weights are exactly {d, n} with d < n."""
    weights = wd.nonzero_weights
    two = len(weights) == 2
    return AntipodalVerdict(
        weights=weights,
        d=weights[0] if weights else None,
        is_two_weight=two,
        includes_n=two and weights[-1] == n,
    )


def normalize_point(field: FieldSpec, vec):
    """Projective representative: scale so the first nonzero entry is 1.

    Returns None for the zero vector.
    """
    for x in vec:
        if x:
            if x == 1:
                return tuple(vec)
            inv = field.inv(x)
            return tuple(field.mul(inv, y) for y in vec)
    return None


def projective_points(field: FieldSpec, k: int) -> list:
    """All points of PG(k-1, q) as canonical representatives, in
    lexicographic order of the representative tuples."""
    budgets.check_enum(field.q ** k, f"PG({k - 1},{field.q}) point enumeration")
    pts = set()
    for enc in range(1, field.q ** k):
        vec = []
        e = enc
        for _ in range(k):
            vec.append(e % field.q)
            e //= field.q
        pts.add(normalize_point(field, tuple(vec)))
    return sorted(pts)


def is_projective(code: LinearCode) -> bool:
    """No two generator columns are scalar multiples (zero columns fail)."""
    seen = set()
    for j in range(code.n):
        rep = normalize_point(code.field, code.G.column(j))
        if rep is None or rep in seen:
            return False
        seen.add(rep)
    return True


def column_point_multiplicities(G: MatGF | LinearCode) -> dict:
    """Multiset of projective points formed by the generator columns."""
    if isinstance(G, LinearCode):
        G = G.G
    mult: dict = {}
    for j in range(G.ncols):
        rep = normalize_point(G.field, G.column(j))
        if rep is None:
            raise ValueError(f"generator column {j} is zero")
        mult[rep] = mult.get(rep, 0) + 1
    return mult


def max_column_multiplicity(code: MatGF | LinearCode) -> int:
    """The smallest s for which the complementary construction is defined."""
    return max(column_point_multiplicities(code).values())


def complementary_generator(G: MatGF, s: int) -> MatGF:
    """Columns completing those of G to s copies of every projective point
    of PG(k-1, q), k = number of rows.  Works at the message-space level,
    so G need not have full rank; for every message v,
    wt(vG) + wt(vG_c) = s*q^(k-1)."""
    f = G.field
    mult = column_point_multiplicities(G)
    over = [p for p, c in mult.items() if c > s]
    if over:
        raise ValueError(
            f"point {over[0]} occurs {mult[over[0]]} times, more than s = {s}")
    cols = []
    for p in projective_points(f, G.nrows):
        cols.extend([p] * (s - mult.get(p, 0)))
    if not cols:
        raise ValueError("degenerate: n_c = 0 (nothing left to complete)")
    return MatGF(f, list(zip(*cols)))


def complementary_code(code: LinearCode, s: int) -> LinearCode:
    """Complete the generator columns to s copies of every projective point.

    The concatenation [C | C_c] is then equidistant with common distance
    s*q^(k-1); n + n_c = s(q^k - 1)/(q - 1).
    """
    G_c = complementary_generator(code.G, s)
    if G_c.rank != code.k:
        raise ValueError(
            f"complementary columns span only rank {G_c.rank} < k = {code.k}")
    return LinearCode(code.field, G_c)


def projective_dual_transform(code: LinearCode, a: Fraction,
                              b: Fraction) -> LinearCode:
    """Generator whose columns repeat each point of PG(k-1,q) exactly
    a*w + b times, w being the weight of the codeword of any representative
    message for that point.  a and b are exact rationals; a non-integer or
    negative multiplicity for some point is an error.
    """
    if not is_projective(code):
        raise ValueError("projective dual transform needs a projective code")
    a = Fraction(a)
    b = Fraction(b)
    f = code.field
    cols = []
    for p in projective_points(f, code.k):
        word = _message_codeword(code, p)
        w = sum(1 for x in word if x)
        m = a * w + b
        if m.denominator != 1 or m < 0:
            raise ValueError(
                f"multiplicity a*w + b = {m} for point {p} (weight {w}) "
                f"is not a nonnegative integer")
        cols.extend([p] * int(m))
    if not cols:
        raise ValueError("transform produced a zero-length code")
    G = MatGF(f, list(zip(*cols)))
    if G.rank != code.k:
        raise ValueError(
            f"transform columns span only rank {G.rank} < k = {code.k}")
    return LinearCode(f, G)


def _message_codeword(code: LinearCode, message) -> tuple:
    f = code.field
    word = [0] * code.n
    for c, row in zip(message, code.G.rows):
        if c:
            for j, x in enumerate(row):
                if x:
                    word[j] = f.add(word[j], f.mul(c, x))
    return tuple(word)


def min_distance(code: LinearCode) -> int:
    return code.min_distance()


def equidistant_check(obj) -> int | None:
    """The common pairwise distance if all pairwise distances agree, else None.

    For LinearCode inputs this checks that all nonzero weights are equal;
    for CodewordMatrix inputs all row pairs are compared.
    """
    if isinstance(obj, LinearCode):
        weights = obj.weight_distribution_auto().nonzero_weights
        return weights[0] if len(weights) == 1 else None
    rows = obj.rows
    d = None
    for i in range(len(rows)):
        for j in range(i + 1, len(rows)):
            dd = hamming_distance(rows[i], rows[j])
            if d is None:
                d = dd
            elif dd != d:
                return None
    return d


def concatenate(a: LinearCode, b: LinearCode) -> LinearCode:
    """[A | B]: same message space, juxtaposed coordinates."""
    if a.k != b.k or a.field != b.field:
        raise ValueError("codes must share the field and dimension")
    rows = [ra + rb for ra, rb in zip(a.G.rows, b.G.rows)]
    return LinearCode(a.field, MatGF(a.field, rows))


def low_weight_min_distance(code: LinearCode, w_max: int) -> int | None:
    """Smallest nonzero codeword weight <= w_max, by searching all supports
    of size <= w_max; None if every codeword below that weight is zero.

    Independent of the weight-distribution path: candidates are checked by
    parity alone, so this also works when q^k is far over the enumeration
    budget."""
    import itertools

    f = code.field
    H = code.dual().G
    if H.nrows == 0:
        return 1 if code.n >= 1 else None
    hcols = [H.column(j) for j in range(code.n)]
    r = H.nrows
    for w in range(1, w_max + 1):
        for support in itertools.combinations(range(code.n), w):
            for values in _nonzero_tuples(f, w):
                syn = [0] * r
                for pos, val in zip(support, values):
                    col = hcols[pos]
                    for i in range(r):
                        if col[i]:
                            syn[i] = f.add(syn[i], f.mul(val, col[i]))
                if not any(syn):
                    return w
    return None


def _nonzero_tuples(field: FieldSpec, w: int):
    # first entry fixed to 1: weights are invariant under global scaling
    import itertools
    for rest in itertools.product(range(1, field.q), repeat=w - 1):
        yield (1,) + rest
