import pytest
from hypothesis import given, settings, strategies as st

from koszulkit import families
from koszulkit.bar import (
    build_differential,
    enumerate_chains,
    homology_witnesses,
    module_tor,
    tor_dimension,
    tor_table,
)
from koszulkit.errors import InvalidGeneratorError, InvalidTargetError, NotGradedError
from koszulkit.linalg import GF, QQ, Echelon, rank
from koszulkit.poset import Poset, disjoint_union, dual

import oracles
from conftest import builtin_corpus, plain, random_corpus

UNEVEN = Poset(["s", "a", "b", "c", "t"], [("s", "a"), ("s", "b"), ("a", "t"), ("b", "c"), ("c", "t")])

graded_posets = st.builds(
    families.random_graded,
    st.integers(0, 10 ** 6),
    st.integers(1, 10),
    st.sampled_from([0.3, 0.5, 0.8]),
)


def test_chain_examples(tile):
    assert enumerate_chains(tile, 2, 2).chains == (("s", "u", "t"), ("s", "v", "t"))
    assert enumerate_chains(tile, 2, 3).chains == ()
    assert enumerate_chains(tile, 0, 0).chains == (("s",), ("u",), ("v",), ("t",))
    assert enumerate_chains(tile, 1, 2).chains == (("s", "t"),)
    assert len(enumerate_chains(tile, 3, 2)) == 0


def test_chains_match_oracle():
    for p in builtin_corpus() + random_corpus(15):
        els, covs = plain(p)
        for m in range(p.max_length + 1):
            for n in range(m + 1):
                assert set(enumerate_chains(p, n, m).chains) == set(oracles.chains(els, covs, n, m))


def test_differential_examples(tile, hexagon):
    assert build_differential(tile, 2, 2).to_dense() == [[1, 1]]
    d1 = build_differential(tile, 1, 1)
    assert d1.rows == 0 or not d1.entries
    d3 = build_differential(hexagon, 3, 3)
    rows = enumerate_chains(hexagon, 2, 3).chains
    cols = enumerate_chains(hexagon, 3, 3).chains
    j = cols.index(("s", "x", "u", "t"))
    col = {rows[i]: v for (i, jj), v in d3.entries.items() if jj == j}
    assert col == {("s", "u", "t"): 1, ("s", "x", "t"): -1}


def test_differential_squares_to_zero():
    for p in builtin_corpus() + random_corpus(20):
        for m in range(p.max_length + 1):
            for n in range(3, m + 1):
                a = build_differential(p, n - 1, m)
                b = build_differential(p, n, m)
                assert not (a @ b).entries


def test_differential_matches_oracle():
    for p in random_corpus(10):
        els, covs = plain(p)
        for m in range(2, p.max_length + 1):
            for n in range(2, m + 1):
                src = oracles.chains(els, covs, n, m)
                dst = oracles.chains(els, covs, n - 1, m)
                if not src or not dst:
                    continue
                ours = build_differential(p, n, m)
                ri = {c: i for i, c in enumerate(enumerate_chains(p, n - 1, m).chains)}
                ci = {c: i for i, c in enumerate(enumerate_chains(p, n, m).chains)}
                ref = oracles.differential(els, covs, n, m)
                dense = ours.to_dense()
                for a, ra in enumerate(dst):
                    for b, cb in enumerate(src):
                        assert dense[ri[ra]][ci[cb]] == ref[a][b]


def test_tor_dimension_examples(tile, hexagon):
    assert tor_dimension(tile, 2, 2) == 1
    assert tor_dimension(hexagon, 2, 3) == 1
    assert tor_dimension(tile, 0, 0) == 4
    assert tor_dimension(hexagon, 0, 0) == 6
    assert tor_dimension(tile, 5, 2) == 0


def test_tor_table_examples(tile, hexagon):
    t = tor_table(tile)
    assert t.nonzero() == {(0, 0): 4, (1, 1): 4, (2, 2): 1}
    assert t.koszul and t.witnesses == ()
    assert t.diagonal() == [4, 4, 1]
    h = tor_table(hexagon)
    assert not h.koszul and h.witnesses == ((2, 3, 1),)
    a = tor_table(families.antichain(3))
    assert a.dims == {(0, 0): 3} and a.koszul


def test_tor_table_rejects_ungraded():
    with pytest.raises(NotGradedError):
        tor_table(UNEVEN)
    with pytest.raises(NotGradedError):
        enumerate_chains(UNEVEN, 1, 1)


def test_parallel_table_matches_serial(hexagon):
    assert tor_table(hexagon, workers=2) == tor_table(hexagon, workers=1)


def test_table_matches_oracle_on_corpus():
    for p in builtin_corpus() + random_corpus(30):
        assert tor_table(p).dims == oracles.tor_table(*plain(p))


def test_prime_field_tables_match_oracle():
    for p in builtin_corpus()[:9]:
        assert tor_table(p, GF()).dims == oracles.tor_table(*plain(p), p=32003)


def test_hexagon_witness_is_omega(hexagon):
    (z,) = homology_witnesses(hexagon, 2, 3)
    omega = {("s", "y", "t"): 1, ("s", "x", "t"): -1}
    assert z == omega or z == {c: -v for c, v in omega.items()}


def test_witnesses_are_cycles_not_boundaries():
    for p in builtin_corpus() + random_corpus(20):
        for (n, m), d in tor_table(p).dims.items():
            if n < 2 or not d:
                continue
            zs = homology_witnesses(p, n, m)
            assert len(zs) == d
            src = enumerate_chains(p, n, m).chains
            idx = {c: i for i, c in enumerate(src)}
            dn = build_differential(p, n, m)
            bounds = Echelon(QQ)
            if enumerate_chains(p, n + 1, m).chains:
                for col in build_differential(p, n + 1, m).column_dicts():
                    if col:
                        bounds.add(col)
            for z in zs:
                vec = [0] * len(src)
                for c, v in z.items():
                    vec[idx[c]] = v
                assert not any(dn.apply(vec))
                assert not bounds.contains({idx[c]: v for c, v in z.items()})


def test_module_tor_examples(tile):
    assert module_tor(tile, "t", ["u", "v"], 1, 2) == 1
    for m in (1, 3, 4):
        assert module_tor(tile, "t", ["u", "v"], 1, m) == 0
    assert module_tor(tile, "t", ["u"], 1, 3) == 0
    assert module_tor(tile, "t", ["u"], 0, 1) == 1
    assert module_tor(tile, "t", ["u", "v"], 0, 1) == 2


def test_module_tor_errors(tile):
    with pytest.raises(InvalidTargetError):
        module_tor(tile, "u", ["s"], 0, 1)
    with pytest.raises(InvalidTargetError):
        module_tor(tile, "zz", ["s"], 0, 1)
    with pytest.raises(InvalidGeneratorError):
        module_tor(tile, "t", [], 0, 1)
    with pytest.raises(InvalidGeneratorError):
        module_tor(tile, "t", ["t"], 0, 1)


def test_cyclic_module_is_linear():
    # M = B e_{u,t} is a shifted projective, so its Tor sits in the single
    # internal degree n + l([u, t])
    for p in builtin_corpus() + random_corpus(20):
        for t in p.maximal_elements():
            for u in p.below(t):
                lu = p.interval_length(u, t)
                for m in range(p.max_length + 2):
                    for n in range(m + 1):
                        d = module_tor(p, t, [u], n, m)
                        if d:
                            assert (n, m) == (0, lu)


def _splitting_holds(p):
    full = tor_table(p)
    for t in p.maximal_elements():
        preds = p.lower_covers(t)
        if not preds:
            continue
        rest = p.remove(t)
        for m in range(p.max_length + 1):
            for n in range(m + 1):
                b = tor_dimension(rest, n, m)
                extra = module_tor(p, t, preds, n - 1, m) if n >= 1 else 0
                if n == 0 and m == 0:
                    extra = 1
                if full[(n, m)] != b + extra:
                    return False
    return True


def test_splitting_identity_examples(tile, hexagon):
    assert _splitting_holds(tile)
    assert _splitting_holds(hexagon)


@given(graded_posets)
@settings(max_examples=60, deadline=None)
def test_vanishing_shape_and_first_row(p):
    t = tor_table(p)
    L = p.max_length
    assert t[(0, 0)] == len(p)
    for m in range(L + 3):
        for n in range(L + 3):
            if m < n or m > L:
                assert tor_dimension(p, n, m) == 0
        if m != 1:
            assert t[(1, m)] == 0
        if m != 0:
            assert t[(0, m)] == 0
    assert t[(1, 1)] == len(p.covers)


@given(graded_posets)
@settings(max_examples=60, deadline=None)
def test_duality_entrywise(p):
    assert tor_table(p).dims == tor_table(dual(p)).dims


@given(graded_posets, graded_posets)
@settings(max_examples=30, deadline=None)
def test_product_rule(p, q):
    both = tor_table(disjoint_union(p, q))
    a, b = tor_table(p), tor_table(q)
    cells = set(both.dims) | set(a.dims) | set(b.dims)
    for c in cells:
        assert both[c] == a[c] + b[c]


@given(graded_posets)
@settings(max_examples=40, deadline=None)
def test_splitting_identity_random(p):
    assert _splitting_holds(p)


def test_field_ranks_never_exceed_rationals():
    for p in random_corpus(20):
        for m in range(2, p.max_length + 1):
            for n in range(2, m + 1):
                d = build_differential(p, n, m)
                assert rank(d, GF(2)) <= rank(d, QQ)
                assert rank(d, GF()) == rank(d, QQ)
