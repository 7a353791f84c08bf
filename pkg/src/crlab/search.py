"""Desk-scale exhaustive searches.

* arcs / hyperovals in PG(2, q) by lexicographic backtracking with
  collinearity pruning over precomputed line bitsets;
* a census of all antipodal two-weight column multisets for small
  (q, r, n), each survivor's dual run through the covering-radius and
  complete-regularity machinery and matched against the known families.

Matching is parameter-level (n, k, q, weight set, intersection array),
not monomial-equivalence-level; census tables note this.  Entries whose
dual violates the nontriviality window (dimension >= 2 and dual minimum
distance >= 3) are reported but flagged trivial: only nontrivial,
completely regular, covering-radius-2 entries count as UNMATCHED when no
family fits.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from . import budgets
from .codes import LinearCode, normalize_point, projective_points
from .field import FieldSpec, field_create
from .matrix import MatGF
from .regularity import IntersectionArray, complete_regularity
from .families import family_match

ARC_Q_MAX = 16          # full searches; counting is practical up to q = 8
CENSUS_CANDIDATE_CAP = 1 << 26


# -- arcs in PG(2, q) --------------------------------------------------------


class PlaneGeometry:
    """Points and lines of PG(2, q) with incidence bitsets."""

    def __init__(self, field: FieldSpec):
        self.field = field
        self.points = projective_points(field, 3)
        self.index = {p: i for i, p in enumerate(self.points)}
        n = len(self.points)
        self.line_mask = []
        for coef in self.points:  # lines are dual points
            mask = 0
            for i, p in enumerate(self.points):
                acc = 0
                for a, b in zip(coef, p):
                    if a and b:
                        acc = field.add(acc, field.mul(a, b))
                if acc == 0:
                    mask |= 1 << i
            self.line_mask.append(mask)
        self._pair_line: dict = {}

    def line_through(self, i: int, j: int) -> int:
        """Bitmask of the unique line through two distinct points."""
        key = (i, j) if i < j else (j, i)
        cached = self._pair_line.get(key)
        if cached is not None:
            return cached
        f = self.field
        a = self.points[i]
        b = self.points[j]
        coef = (
            f.sub(f.mul(a[1], b[2]), f.mul(a[2], b[1])),
            f.sub(f.mul(a[2], b[0]), f.mul(a[0], b[2])),
            f.sub(f.mul(a[0], b[1]), f.mul(a[1], b[0])),
        )
        mask = self.line_mask[self.index[normalize_point(f, coef)]]
        self._pair_line[key] = mask
        return mask


@dataclass(frozen=True)
class ArcSearchResult:
    exists: bool
    count: int | None              # canonical arcs of the target size
    witness: tuple | None          # point tuples, when one exists


def search_arcs(q: int, target_size: int, count_all: bool = False) -> ArcSearchResult:
    """Arcs of a given size in PG(2, q): existence (early exit) or the
    exhaustive count of canonical (index-increasing) arcs."""
    from .conditions import prime_power
    p, m = prime_power(q)
    if q > ARC_Q_MAX:
        raise ValueError(f"arc search is desk-bounded to q <= {ARC_Q_MAX}")
    geom = PlaneGeometry(field_create(p, m))
    npts = len(geom.points)

    found: list = []
    count = 0

    def extend(arc: list, forbidden: int, start: int) -> bool:
        nonlocal count
        if len(arc) == target_size:
            count += 1
            if not found:
                found.append(tuple(geom.points[i] for i in arc))
            return not count_all
        for i in range(start, npts):
            if forbidden >> i & 1:
                continue
            extra = 0
            for j in arc:
                extra |= geom.line_through(i, j)
            if extend(arc + [i], forbidden | extra | (1 << i), i + 1):
                return True
        return False

    extend([], 0, 0)
    return ArcSearchResult(exists=count > 0,
                           count=count if count_all else None,
                           witness=found[0] if found else None)


def is_arc(field: FieldSpec, points) -> bool:
    """No 3 of the given projective points collinear."""
    import itertools
    for a, b, c in itertools.combinations(points, 3):
        M = MatGF(field, [a, b, c])
        if M.rank < 3:
            return False
    return True


# -- census of antipodal two-weight column multisets -------------------------


@dataclass(frozen=True)
class CensusEntry:
    q: int
    r: int
    n: int
    weights: tuple                 # (d, n) of the two-weight side
    rho: int
    completely_regular: bool
    ia: IntersectionArray | None
    dual_k: int
    dual_d_ge3: bool               # multiset has no repeated point
    trivial: bool
    trivial_reason: str
    families: tuple                # (family, params) pairs
    repetition_of: tuple           # (s, matches) when the multiset is an
                                   # s-fold copy of a projective set
    count: int
    example_columns: tuple         # one witness multiset of points

    @property
    def unmatched(self) -> bool:
        return (not self.trivial and self.completely_regular
                and self.rho == 2 and not self.families)


def search_antipodal_duals(q: int, r: int, n_max: int,
                           projective: bool = False) -> list[CensusEntry]:
    """All column multisets of size <= n_max over the points of
    PG(r-1, q) that span GF(q)^r and produce a two-weight code with
    weights {d, n}; each one's dual is profiled and family-matched.

    Multisets are enumerated as nondecreasing index tuples; with
    ``projective=True`` only sets (no repeats) are considered.  Partial
    multisets are pruned through running weight bounds: the messages that
    some chosen column already misses must all finish on a common weight.
    """
    from .conditions import prime_power
    p, m = prime_power(q)
    field = field_create(p, m)
    points = projective_points(field, r)
    P = len(points)
    candidates = math.comb(P + n_max - 1, n_max)
    if candidates > CENSUS_CANDIDATE_CAP:
        raise budgets.BudgetExceeded(
            f"census would scan about {candidates} column multisets, over "
            f"the cap {CENSUS_CANDIDATE_CAP}")

    messages = [_decode(v, q, r) for v in range(1, q ** r)]
    nmsg = len(messages)
    hits = []
    for pt in points:
        row = []
        for msg in messages:
            acc = 0
            for a, b in zip(msg, pt):
                if a and b:
                    acc = field.add(acc, field.mul(a, b))
            row.append(1 if acc else 0)
        hits.append(row)

    survivors: dict = {}

    for n in range(max(r, 2), n_max + 1):
        weights = [0] * nmsg
        chosen: list = []

        def recurse(start: int):
            depth = len(chosen)
            if depth == n:
                _census_complete(field, points, chosen, weights, n,
                                 survivors, q, r)
                return
            remaining = n - depth
            low = None
            high = None
            full = False
            for w in weights:
                if w == depth:
                    full = True
                    continue
                if low is None or w < low:
                    low = w
                if high is None or w > high:
                    high = w
            # messages already missed must finish on one common weight
            if high is not None and high - low > remaining:
                return
            # the full weight n must stay reachable by some message
            if not full and depth:
                return
            for i in range(start, P):
                chosen.append(i)
                hrow = hits[i]
                for v in range(nmsg):
                    weights[v] += hrow[v]
                recurse(i if not projective else i + 1)
                for v in range(nmsg):
                    weights[v] -= hrow[v]
                chosen.pop()

        recurse(0)

    out = sorted(survivors.values(),
                 key=lambda e: (e.n, e.weights, not e.trivial))
    return out


def _decode(v: int, q: int, r: int) -> tuple:
    out = []
    for _ in range(r):
        out.append(v % q)
        v //= q
    return tuple(out)


def _census_complete(field, points, chosen, weights, n, survivors, q, r):
    distinct = sorted(set(weights))
    if len(distinct) != 2 or distinct[1] != n or distinct[0] == 0:
        return
    cols = [points[i] for i in chosen]
    G = MatGF(field, list(zip(*cols)))
    if G.rank != r:
        return  # non-spanning multisets are skipped silently
    projective_multiset = len(set(chosen)) == len(chosen)

    key_weights = (distinct[0], n)
    dual_k = n - r
    trivial_reasons = []
    if dual_k < 2:
        trivial_reasons.append(f"dual dimension {dual_k} < 2")
    if not projective_multiset:
        trivial_reasons.append("repeated column: dual minimum distance 2")

    rho = None
    ia = None
    cr = False
    if dual_k >= 1:
        code = LinearCode(field, G)
        dual = code.dual()
        res = complete_regularity(dual)
        rho = res.profile.rho
        cr = res.is_completely_regular
        ia = res.ia
    if rho != 2:
        trivial_reasons.append(f"dual covering radius {rho} != 2")

    key = (n, key_weights, rho, cr, ia.b if ia else None,
           ia.c if ia else None, tuple(sorted(trivial_reasons)))
    prev = survivors.get(key)
    if prev is not None:
        survivors[key] = _bump(prev)
        return

    fams: tuple = ()
    if dual_k >= 1 and rho is not None:
        report = _MiniReport(n=n, k=dual_k, q=q,
                             dual_weights=key_weights, ia=ia)
        fams = tuple(family_match(report))
    survivors[key] = CensusEntry(
        q=q, r=r, n=n, weights=key_weights,
        rho=rho if rho is not None else -1,
        completely_regular=cr, ia=ia, dual_k=dual_k,
        dual_d_ge3=projective_multiset,
        trivial=bool(trivial_reasons),
        trivial_reason="; ".join(trivial_reasons),
        families=fams,
        repetition_of=_repetition_annotation(chosen, n, key_weights, q, r),
        count=1,
        example_columns=tuple(cols))


def _repetition_annotation(chosen, n, weights, q, r) -> tuple:
    """When the multiset is s >= 2 copies of a projective point set whose
    weights scale accordingly, the underlying set's family matches."""
    from collections import Counter
    mult = Counter(chosen)
    s_values = set(mult.values())
    if len(s_values) != 1:
        return ()
    s = s_values.pop()
    if s < 2:
        return ()
    d, _ = weights
    if d % s or n % s:
        return ()
    n0 = n // s
    report = _MiniReport(n=n0, k=n0 - r, q=q,
                         dual_weights=(d // s, n0), ia=None)
    matches = tuple(family_match(report))
    return (s, matches) if matches else ()


def _bump(entry: CensusEntry) -> CensusEntry:
    from dataclasses import replace
    return replace(entry, count=entry.count + 1)


@dataclass(frozen=True)
class _MiniReport:
    n: int
    k: int
    q: int
    dual_weights: tuple
    ia: IntersectionArray | None


@dataclass(frozen=True)
class ClassifyTable:
    q: int
    r: int
    n_max: int
    entries: tuple
    header_note: str = ("family matching is parameter-level "
                        "(n, k, q, weights, intersection array)")

    @property
    def unmatched(self) -> tuple:
        return tuple(e for e in self.entries if e.unmatched)


def classify_report(q: int, r: int, n_max: int,
                    projective: bool = False) -> ClassifyTable:
    entries = search_antipodal_duals(q, r, n_max, projective=projective)
    return ClassifyTable(q=q, r=r, n_max=n_max, entries=tuple(entries))


def render_table(table: ClassifyTable) -> str:
    lines = ["#" + table.header_note,
             "\t".join(["n", "weights", "dual_k", "rho", "CR", "IA",
                        "families", "count", "status"])]
    for e in table.entries:
        fams = ",".join(f"{f}{p}" for f, p in e.families) or "-"
        if e.repetition_of:
            s, matches = e.repetition_of
            reps = ",".join(f"{f}{p}" for f, p in matches)
            rep_text = f"[{s}x {reps}]"
            fams = rep_text if fams == "-" else f"{fams} {rep_text}"
        if e.unmatched:
            status = "UNMATCHED"
        elif e.trivial:
            status = f"trivial ({e.trivial_reason})"
        else:
            status = "matched"
        lines.append("\t".join([
            str(e.n), str(e.weights), str(e.dual_k), str(e.rho),
            str(e.completely_regular), str(e.ia) if e.ia else "-",
            fams, str(e.count), status]))
    return "\n".join(lines)
