"""Assignings, the two polynomial algorithms, and their agreement."""

from __future__ import annotations

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from flowpoly.abelian import parse_group
from flowpoly.assigning import (
    EdgeOrder,
    _poly_subset_stream,
    b_compatible_bonds,
    broken_bonds,
    compare_coefficients,
    compat_signature,
    induced_assigning,
    is_A_connected,
    poly_nbb,
    poly_subset_expansion,
)
from flowpoly.errors import BudgetError, IncompatibleError, InputError
from flowpoly.flows import BFunction, count_nz_flows_bruteforce, enumerate_zero_sum
from flowpoly.graphs import MultiGraph
from flowpoly.polynomial import IntPolynomial

from conftest import SMALL_GROUPS, k4, multigraphs, single_edge, single_loop, triangle

Z2 = parse_group("Z2")
Z3 = parse_group("Z3")

K_MINUS_1 = IntPolynomial((-1, 1))


# ---------------------------------------------------------------------------
# Induced assignings.


def test_zero_function_induces_zero_assigning():
    for g in (triangle(), k4(), single_edge()):
        alpha = induced_assigning(g, BFunction.zero(Z3, g.vertex_count))
        assert all(bit == 0 for _, bit in alpha.entries)


def test_induced_assigning_single_edge():
    alpha = induced_assigning(single_edge(), BFunction(Z2, ((1,), (1,))))
    assert alpha.as_dict() == {(0,): 1, (1,): 1}


def test_induced_assigning_triangle_all_ones():
    alpha = induced_assigning(triangle(), BFunction(Z3, ((1,), (1,), (1,))))
    assert set(alpha.as_dict().values()) == {1}
    assert len(alpha.entries) == 6


def test_pointwise_le():
    g = triangle()
    zero = induced_assigning(g, BFunction.zero(Z3, 3))
    ones = induced_assigning(g, BFunction(Z3, ((1,), (1,), (1,))))
    assert zero.pointwise_le(ones)
    assert not ones.pointwise_le(zero)


# ---------------------------------------------------------------------------
# Subset expansion.


def test_subset_expansion_triangle():
    assert poly_subset_expansion(triangle(), BFunction.zero(Z3, 3)) == K_MINUS_1


def test_subset_expansion_bridge_annihilates():
    assert poly_subset_expansion(single_edge(), BFunction.zero(Z2, 2)).is_zero


def test_subset_expansion_nonzero_pair():
    poly = poly_subset_expansion(single_edge(), BFunction(Z2, ((1,), (1,))))
    assert poly == IntPolynomial.constant(1)


def test_subset_expansion_rejects_incompatible():
    with pytest.raises(IncompatibleError) as exc:
        poly_subset_expansion(single_edge(), BFunction(Z2, ((1,), (0,))))
    assert "component" in str(exc.value)


def test_subset_expansion_edge_guard():
    g = MultiGraph.from_pairs(2, [(0, 1)] * 5)
    with pytest.raises(BudgetError):
        poly_subset_expansion(g, BFunction.zero(Z2, 2), max_edges=4)


def test_stream_path_matches_table_path():
    rng = random.Random(7)
    for _ in range(25):
        n = rng.randint(1, 4)
        m = rng.randint(0, 8)
        g = MultiGraph.from_pairs(
            n, [(rng.randrange(n), rng.randrange(n)) for _ in range(m)]
        )
        for spec in (Z2, parse_group("Z2xZ2")):
            for b in enumerate_zero_sum(g, spec):
                assert _poly_subset_stream(g, b) == poly_subset_expansion(g, b)


# ---------------------------------------------------------------------------
# Bonds and broken bonds relative to b.


def test_b_compatible_bonds_triangle_zero():
    g = triangle()
    assert b_compatible_bonds(g, BFunction.zero(Z2, 3)) == [
        frozenset({0, 1}),
        frozenset({0, 2}),
        frozenset({1, 2}),
    ]


def test_b_compatible_bonds_filtered():
    assert b_compatible_bonds(single_edge(), BFunction(Z2, ((1,), (1,)))) == []
    assert b_compatible_bonds(single_edge(), BFunction.zero(Z2, 2)) == [frozenset({0})]


def test_broken_bonds_triangle():
    got = broken_bonds(triangle(), BFunction.zero(Z2, 3))
    assert got == [frozenset({0}), frozenset({1})]


def test_broken_bonds_bridge_gives_empty_set():
    assert broken_bonds(single_edge(), BFunction.zero(Z2, 2)) == [frozenset()]
    assert broken_bonds(single_edge(), BFunction(Z2, ((1,), (1,)))) == []


def test_broken_bonds_respect_order():
    g = triangle()
    b = BFunction.zero(Z2, 3)
    reversed_order = EdgeOrder((2, 1, 0))
    assert broken_bonds(g, b, reversed_order) == [frozenset({1}), frozenset({2})]


# ---------------------------------------------------------------------------
# Broken-bond counting.


def test_poly_nbb_triangle():
    poly = poly_nbb(triangle(), BFunction.zero(Z2, 3))
    assert poly == K_MINUS_1
    assert poly.signless_coefficients(1) == (1, 1)


def test_poly_nbb_bridge_is_zero():
    assert poly_nbb(single_edge(), BFunction.zero(Z2, 2)).is_zero


def test_poly_nbb_loop():
    assert poly_nbb(single_loop(), BFunction.zero(Z2, 1)) == K_MINUS_1


def test_poly_nbb_order_validation():
    with pytest.raises(InputError):
        poly_nbb(triangle(), BFunction.zero(Z2, 3), EdgeOrder((0, 1)))


@settings(max_examples=50, deadline=None)
@given(multigraphs(max_vertices=4, max_edges=6), st.data())
def test_algorithm_equivalence(g, data):
    spec = data.draw(st.sampled_from(SMALL_GROUPS))
    b = data.draw(st.sampled_from([b for b in enumerate_zero_sum(g, spec)]))
    expected = poly_subset_expansion(g, b)
    rng = random.Random(data.draw(st.integers(0, 2**16)))
    for _ in range(3):
        order = EdgeOrder.shuffled(g, rng)
        assert poly_nbb(g, b, order) == expected


@settings(max_examples=50, deadline=None)
@given(multigraphs(max_vertices=4, max_edges=5), st.data())
def test_oracle_equivalence(g, data):
    spec = data.draw(st.sampled_from(SMALL_GROUPS))
    b = data.draw(st.sampled_from([b for b in enumerate_zero_sum(g, spec)]))
    assert poly_subset_expansion(g, b).eval(spec.order) == count_nz_flows_bruteforce(g, b)


def test_same_assigning_same_polynomial_across_groups():
    # Boundary functions inducing equal assignings produce the same
    # polynomial, even across groups of different orders.
    for g in (triangle(), k4(), MultiGraph.from_pairs(3, [(0, 1), (0, 1), (1, 2), (1, 2)])):
        by_alpha = {}
        for spec in SMALL_GROUPS:
            for b in enumerate_zero_sum(g, spec):
                alpha = induced_assigning(g, b)
                poly = poly_subset_expansion(g, b)
                assert by_alpha.setdefault(alpha, poly) == poly


def test_signature_groups_boundary_functions():
    g = triangle()
    by_sigma = {}
    for b in enumerate_zero_sum(g, Z3):
        by_sigma.setdefault(compat_signature(g, b), []).append(b)
    for sigma, members in by_sigma.items():
        polys = {poly_subset_expansion(g, b) for b in members}
        assert len(polys) == 1


# ---------------------------------------------------------------------------
# Structural lemmas, literal subset-pair form at small scale.


@settings(max_examples=25, deadline=None)
@given(multigraphs(max_vertices=3, max_edges=4), st.data())
def test_compatibility_inherited_by_subsets(g, data):
    import itertools

    from flowpoly.flows import is_b_compatible
    from flowpoly.graphs import delete_edges

    spec = data.draw(st.sampled_from(SMALL_GROUPS))
    ids = list(g.edge_ids)
    for b in enumerate_zero_sum(g, spec):
        for r in range(len(ids) + 1):
            for big in itertools.combinations(ids, r):
                if not is_b_compatible(delete_edges(g, big), b):
                    continue
                for q in range(r + 1):
                    for small in itertools.combinations(big, q):
                        assert is_b_compatible(delete_edges(g, small), b)


@settings(max_examples=25, deadline=None)
@given(multigraphs(max_vertices=3, max_edges=4), st.data())
def test_broken_bond_pairing_literal(g, data):
    import itertools

    from flowpoly.flows import is_b_compatible
    from flowpoly.graphs import delete_edges

    spec = data.draw(st.sampled_from(SMALL_GROUPS))
    order = EdgeOrder.default(g)
    rank = order.rank_map()
    for b in enumerate_zero_sum(g, spec):
        for bond in b_compatible_bonds(g, b):
            greatest = max(bond, key=rank.__getitem__)
            base = bond - {greatest}
            others = [e for e in g.edge_ids if e not in bond]
            for r in range(len(others) + 1):
                for extra in itertools.combinations(others, r):
                    subset = base | set(extra)
                    if is_b_compatible(delete_edges(g, subset), b):
                        assert is_b_compatible(
                            delete_edges(g, subset | {greatest}), b
                        )


# ---------------------------------------------------------------------------
# Coefficient comparison.


def test_compare_zero_versus_anything():
    g = triangle()
    report = compare_coefficients(
        g, BFunction.zero(Z3, 3), BFunction(Z3, ((1,), (1,), (1,)))
    )
    assert report.pointwise_le
    assert report.signless_first == (1, 1)
    assert report.signless_second == (1, 3)
    assert report.coefficientwise_le
    assert report.consistent


def test_compare_equal_functions():
    g = k4()
    b = BFunction.zero(Z2, 4)
    report = compare_coefficients(g, b, b)
    assert report.signless_first == report.signless_second == (1, 6, 11, 6)


def test_compare_across_groups():
    g = triangle()
    report = compare_coefficients(
        g, BFunction.zero(parse_group("Z2xZ2"), 3), BFunction(Z3, ((1,), (2,), (0,)))
    )
    assert report.consistent


def test_compare_rejects_incompatible():
    with pytest.raises(IncompatibleError):
        compare_coefficients(
            single_edge(), BFunction(Z2, ((1,), (0,))), BFunction.zero(Z2, 2)
        )


# ---------------------------------------------------------------------------
# Group connectivity.


def test_bridge_graph_never_connected():
    ok, witness = is_A_connected(single_edge(), Z3)
    assert not ok
    assert witness is not None and witness.is_zero


def test_loop_is_z2_connected():
    assert is_A_connected(single_loop(), Z2) == (True, None)


def test_triangle_not_z2_connected():
    ok, witness = is_A_connected(triangle(), Z2)
    assert not ok
    assert witness is not None
    assert count_nz_flows_bruteforce(triangle(), witness) == 0


def test_k4_connectivity_over_small_groups():
    # No nowhere-zero flow exists over order 2, so K4 cannot be Z2-connected;
    # over order >= 6 the leading-coefficient argument forces connectivity.
    ok, _ = is_A_connected(k4(), Z2)
    assert not ok
    ok, _ = is_A_connected(k4(), parse_group("Z6"))
    assert ok
