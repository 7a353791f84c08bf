import itertools

import pytest

from crlab import budgets
from crlab.codes import projective_points
from crlab.field import field_create
from crlab.matrix import MatGF
from crlab.search import (classify_report, is_arc, render_table,
                          search_antipodal_duals, search_arcs)


def test_hyperovals_exist_even_q():
    for q in (2, 4, 8):
        res = search_arcs(q, q + 2)
        assert res.exists, q
        from crlab.conditions import prime_power
        p, m = prime_power(q)
        assert is_arc(field_create(p, m), res.witness)
        assert len(res.witness) == q + 2


def test_no_hyperovals_odd_q():
    assert not search_arcs(3, 5).exists
    assert not search_arcs(5, 7).exists


def test_hyperoval_q16():
    res = search_arcs(16, 18)
    assert res.exists and len(res.witness) == 18


def test_arc_counting_mode():
    # ovals of PG(2,2): count of canonical 4-arcs = number of frames
    res = search_arcs(2, 4, count_all=True)
    assert res.count == 168 // 24   # 7 unordered frames
    res = search_arcs(3, 4, count_all=True)
    assert res.count == 234         # 4-arcs of PG(2,3)
    assert not search_arcs(3, 5, count_all=True).exists


def test_q_bound():
    with pytest.raises(ValueError):
        search_arcs(17, 5)


def test_census_tiny_hand_auditable():
    """(q=2, r=2, n<=4): three point-pair multisets give the full space
    [2,2,{1,2}], three doubled pairs give [4,2,{2,4}]; all trivial."""
    entries = search_antipodal_duals(2, 2, 4)
    summary = {(e.n, e.weights): e.count for e in entries}
    assert summary == {(2, (1, 2)): 3, (4, (2, 4)): 3}
    assert all(e.trivial for e in entries)
    doubled = next(e for e in entries if e.n == 4)
    assert doubled.rho == 2 and doubled.completely_regular
    assert doubled.ia.b == (4, 2) and doubled.ia.c == (2, 4)
    assert not doubled.unmatched   # trivial: repeated column
    # the doubled pair is a 2-fold repetition of the n = 2 Latin-square code
    assert doubled.repetition_of
    s, matches = doubled.repetition_of
    assert s == 2 and any(f == "CR3" for f, _ in matches)


def test_census_repetition_annotation_doubled_frames():
    entries = search_antipodal_duals(2, 3, 8)
    doubled = next(e for e in entries if e.n == 8)
    assert doubled.repetition_of
    s, matches = doubled.repetition_of
    assert s == 2 and any(f == "CR1" for f, _ in matches)


def test_census_matches_naive_enumeration():
    """The incremental-pruning enumerator agrees with a naive rescan."""
    for (q, p, m, r, n_max) in [(2, 2, 1, 2, 5), (2, 2, 1, 3, 6),
                                (3, 3, 1, 2, 5)]:
        f = field_create(p, m)
        points = projective_points(f, r)
        naive = {}
        for n in range(2, n_max + 1):
            for combo in itertools.combinations_with_replacement(
                    range(len(points)), n):
                cols = [points[i] for i in combo]
                G = MatGF(f, list(zip(*cols)))
                if G.rank != r:
                    continue
                ws = set()
                for v in range(1, q ** r):
                    msg = []
                    x = v
                    for _ in range(r):
                        msg.append(x % q)
                        x //= q
                    w = 0
                    for pt in cols:
                        acc = 0
                        for a, b in zip(msg, pt):
                            if a and b:
                                acc = f.add(acc, f.mul(a, b))
                        if acc:
                            w += 1
                    ws.add(w)
                ws = sorted(ws)
                if len(ws) == 2 and ws[1] == n and ws[0] > 0:
                    key = (n, tuple(ws))
                    naive[key] = naive.get(key, 0) + 1
        mine = {}
        for e in search_antipodal_duals(q, r, n_max):
            key = (e.n, e.weights)
            mine[key] = mine.get(key, 0) + e.count
        assert mine == naive, (q, r, n_max)


def test_census_finds_bose_bush():
    entries = search_antipodal_duals(4, 3, 6)
    bb = [e for e in entries if e.n == 6 and e.weights == (4, 6)]
    assert len(bb) == 1
    e = bb[0]
    assert e.count == 168          # hyperovals of PG(2,4)
    assert e.rho == 2 and e.completely_regular
    assert e.ia.b == (18, 15) and e.ia.c == (1, 6)
    assert any(f == "CR4" for f, _ in e.families)
    assert not e.trivial


def test_census_projective_flag():
    all_entries = search_antipodal_duals(2, 2, 4)
    proj_entries = search_antipodal_duals(2, 2, 4, projective=True)
    assert {(e.n, e.weights) for e in proj_entries} <= \
        {(e.n, e.weights) for e in all_entries}
    assert all(e.dual_d_ge3 for e in proj_entries)


def test_census_budget_cap():
    with pytest.raises(budgets.BudgetExceeded):
        search_antipodal_duals(4, 4, 30)


def test_classify_report_rendering():
    table = classify_report(2, 3, 6)
    text = render_table(table)
    assert "families" in text.splitlines()[1]
    assert table.unmatched == ()


def test_census_deterministic():
    a = search_antipodal_duals(3, 3, 9)
    b = search_antipodal_duals(3, 3, 9)
    assert [(e.n, e.weights, e.count, e.families) for e in a] == \
        [(e.n, e.weights, e.count, e.families) for e in b]


def test_census_regularity_confirmed_by_brute_oracle():
    """Every census verdict at tiny parameters is re-derived on the full
    vector space, ignoring syndromes."""
    from crlab.regularity import brute_subconstituents
    from crlab.codes import LinearCode
    from crlab.conditions import prime_power
    for (q, r, n_max) in [(2, 2, 4), (2, 3, 8), (3, 2, 5)]:
        p, m = prime_power(q)
        f = field_create(p, m)
        for e in search_antipodal_duals(q, r, n_max):
            if e.dual_k < 1 or q ** e.n > 1 << 16:
                continue
            code = LinearCode(f, MatGF(f, list(zip(*e.example_columns))))
            brute = brute_subconstituents(code.dual())
            assert brute.rho == e.rho, (q, r, e.n)
            assert brute.is_completely_regular == e.completely_regular
            if e.ia is not None:
                assert brute.ia.same_array(e.ia)


def test_family_instances_rediscovered_in_census(family_grid):
    """Every grid instance inside the census budgets shows up."""
    census_cache = {}
    for entry in family_grid:
        tw = entry.tw
        q, r, n = tw.q, tw.k, tw.n
        if (q, r) not in [(2, 3), (2, 4), (3, 3), (4, 3)]:
            continue
        n_cap = {(2, 3): 8, (2, 4): 10, (3, 3): 9, (4, 3): 6}[(q, r)]
        if n > n_cap:
            continue
        if (q, r) not in census_cache:
            census_cache[(q, r)] = search_antipodal_duals(q, r, n_cap)
        found = [e for e in census_cache[(q, r)]
                 if e.n == n and e.weights == tuple(sorted(
                     entry.tw_wd.nonzero_weights))]
        assert found, entry.label
