"""Assignings and the two polynomial algorithms built on them.

The polynomial that counts nowhere-zero flows with boundary b is computed
two independent ways:

* ``poly_subset_expansion``: sum (-1)^|S| k^m(G-S) over edge subsets S whose
  removal leaves the graph compatible with b;
* ``poly_nbb``: signless coefficients a_i counted as the compatible i-edge
  subsets containing no compatible broken bond for a chosen edge order.

Whether G - S is compatible with b depends only on the connected partition
of G - S, so for small graphs a per-subset partition table is precomputed
and results are memoized per compatibility signature (the bitmask saying
which partitions are compatible).  Larger graphs fall back to a streaming
scan that memoizes compatibility per partition within one call.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

from .abelian import GroupSpec, index_tables, residue_strides
from .errors import BudgetError, ConsistencyError, InputError
from .flows import (
    BFunction,
    _check_vertex_function,
    count_nz_flows_bruteforce,
    enumerate_zero_sum,
    is_b_compatible,
    require_compatible,
)
from .graphs import EdgeSet, MultiGraph, bonds, cycle_rank, delete_edges, lambda_family
from .polynomial import IntPolynomial

DEFAULT_MAX_EDGES = 24
_TABLE_MAX_EDGES = 10


@dataclass(frozen=True)
class Assigning:
    """A {0,1} label for every member of the graph's lambda family.

    Entries are (sorted vertex tuple, bit) pairs in lexicographic key order,
    so equal assignings compare equal regardless of the group they came from.
    """

    entries: tuple[tuple[tuple[int, ...], int], ...]

    @classmethod
    def from_dict(cls, mapping: dict[tuple[int, ...], int]) -> "Assigning":
        return cls(tuple(sorted(mapping.items())))

    def as_dict(self) -> dict[tuple[int, ...], int]:
        return dict(self.entries)

    @property
    def domain(self) -> tuple[tuple[int, ...], ...]:
        return tuple(key for key, _ in self.entries)

    def value(self, members: Iterable[int]) -> int:
        key = tuple(sorted(members))
        for entry_key, bit in self.entries:
            if entry_key == key:
                return bit
        raise InputError(f"{key} is not in the lambda family of this assigning")

    def pointwise_le(self, other: "Assigning") -> bool:
        if self.domain != other.domain:
            raise InputError("assignings live on different lambda families")
        return all(a <= b for (_, a), (_, b) in zip(self.entries, other.entries))


@dataclass(frozen=True)
class EdgeOrder:
    """A total order on edge ids, listed from least to greatest."""

    sequence: tuple[int, ...]

    @classmethod
    def default(cls, g: MultiGraph) -> "EdgeOrder":
        return cls(g.edge_ids)

    @classmethod
    def shuffled(cls, g: MultiGraph, rng: random.Random) -> "EdgeOrder":
        ids = list(g.edge_ids)
        rng.shuffle(ids)
        return cls(tuple(ids))

    def validate_for(self, g: MultiGraph) -> None:
        if sorted(self.sequence) != list(g.edge_ids):
            raise InputError(
                f"order {self.sequence} is not a permutation of the edge ids {g.edge_ids}"
            )

    def rank_map(self) -> dict[int, int]:
        return {edge_id: rank for rank, edge_id in enumerate(self.sequence)}


def induced_assigning(g: MultiGraph, b: BFunction) -> Assigning:
    """The assigning of b: a member X gets 0 exactly when b sums to zero on X."""
    _check_vertex_function(g, b)
    spec = b.spec
    entries = []
    for member in lambda_family(g):
        total = spec.zero
        for v in sorted(member):
            total = spec.add(total, b.values[v])
        entries.append((tuple(sorted(member)), 0 if spec.is_zero(total) else 1))
    return Assigning(tuple(entries))


# ---------------------------------------------------------------------------
# Per-subset partition tables for small graphs.


def _partition_of_mask(
    pairs: Sequence[tuple[int, int]], n: int, mask: int
) -> tuple[tuple[int, ...], ...]:
    """Connected partition of the graph with the masked edges removed."""
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for i, (t, h) in enumerate(pairs):
        if not mask >> i & 1:
            rt, rh = find(t), find(h)
            if rt != rh:
                parent[rh] = rt
    blocks: dict[int, list[int]] = {}
    for v in range(n):
        blocks.setdefault(find(v), []).append(v)
    return tuple(tuple(block) for block in sorted(blocks.values()))


@dataclass(frozen=True)
class _SubsetStructure:
    partitions: tuple[tuple[tuple[int, ...], ...], ...]  # partitions[0] = components of G
    partition_id: tuple[int, ...]  # per edge-subset mask
    mg: tuple[int, ...]  # cycle rank of G - S per mask
    signs: tuple[int, ...]  # (-1)^|S| per mask
    bond_masks: tuple[int, ...]
    bond_pids: tuple[int, ...]


@lru_cache(maxsize=4096)
def _structure(g: MultiGraph) -> _SubsetStructure:
    n, m = g.vertex_count, g.edge_count
    pairs = g.pairs()
    index: dict[tuple[tuple[int, ...], ...], int] = {}
    partitions: list[tuple[tuple[int, ...], ...]] = []
    partition_id: list[int] = []
    mg: list[int] = []
    signs: list[int] = []
    for mask in range(1 << m):
        part = _partition_of_mask(pairs, n, mask)
        pid = index.get(part)
        if pid is None:
            pid = len(partitions)
            index[part] = pid
            partitions.append(part)
        partition_id.append(pid)
        size = mask.bit_count()
        mg.append(m - size - n + len(part))
        signs.append(1 if size % 2 == 0 else -1)
    pos_of = {edge.id: i for i, edge in enumerate(g.edges)}
    bond_masks: list[int] = []
    bond_pids: list[int] = []
    for bond in bonds(g):
        mask = 0
        for edge_id in bond:
            mask |= 1 << pos_of[edge_id]
        bond_masks.append(mask)
        bond_pids.append(partition_id[mask])
    return _SubsetStructure(
        tuple(partitions),
        tuple(partition_id),
        tuple(mg),
        tuple(signs),
        tuple(bond_masks),
        tuple(bond_pids),
    )


def compat_signature(g: MultiGraph, b: BFunction) -> int:
    """Bitmask recording which subset partitions of g are compatible with b.

    Bit j is set when every block of the j-th partition (as enumerated by the
    cached subset table) sums to zero under b.  The polynomial algorithms
    depend on b only through this value.  Only available while the subset
    table fits (edge count at most 10).
    """
    if g.edge_count > _TABLE_MAX_EDGES:
        raise BudgetError("compat signatures need the per-subset table (at most 10 edges)")
    _check_vertex_function(g, b)
    st = _structure(g)
    add, _ = index_tables(b.spec)
    strides = residue_strides(b.spec)
    idx = [sum(r * s for r, s in zip(v, strides)) for v in b.values]
    bits = 0
    for j, partition in enumerate(st.partitions):
        for block in partition:
            total = 0
            for v in block:
                total = add[total][idx[v]]
            if total:
                break
        else:
            bits |= 1 << j
    return bits


@lru_cache(maxsize=262144)
def _poly_from_signature(g: MultiGraph, sigma: int) -> IntPolynomial:
    st = _structure(g)
    coeffs = [0] * (st.mg[0] + 1)
    partition_id = st.partition_id
    mg = st.mg
    signs = st.signs
    for mask in range(len(partition_id)):
        if sigma >> partition_id[mask] & 1:
            coeffs[mg[mask]] += signs[mask]
    return IntPolynomial(tuple(coeffs))


def _guard_edges(g: MultiGraph, max_edges: int | None) -> None:
    if max_edges is not None and g.edge_count > max_edges:
        raise BudgetError(
            f"graph has {g.edge_count} edges, above the subset-enumeration guard {max_edges}"
        )


def poly_subset_expansion(
    g: MultiGraph, b: BFunction, *, max_edges: int | None = DEFAULT_MAX_EDGES
) -> IntPolynomial:
    """The counting polynomial via the compatible spanning-subgraph expansion.

    Evaluated at the order of any finite Abelian group A' admitting a b' with
    the same induced assigning, it gives the number of nowhere-zero
    (A', b')-flows; in particular at |A| it counts the nowhere-zero
    (A, b)-flows themselves.
    """
    _check_vertex_function(g, b)
    _guard_edges(g, max_edges)
    if g.edge_count <= _TABLE_MAX_EDGES:
        sigma = compat_signature(g, b)
        if not sigma & 1:
            require_compatible(g, b)
        return _poly_from_signature(g, sigma)
    return _poly_subset_stream(g, b)


def _compatibility_oracle(g: MultiGraph, b: BFunction):
    """Partition-level compatibility predicate with per-call memoization."""
    spec = b.spec
    add, _ = index_tables(spec)
    strides = residue_strides(spec)
    idx = [sum(r * s for r, s in zip(v, strides)) for v in b.values]
    memo: dict[tuple[tuple[int, ...], ...], bool] = {}

    def compatible(partition: tuple[tuple[int, ...], ...]) -> bool:
        hit = memo.get(partition)
        if hit is not None:
            return hit
        ok = True
        for block in partition:
            total = 0
            for v in block:
                total = add[total][idx[v]]
            if total:
                ok = False
                break
        memo[partition] = ok
        return ok

    return compatible


def _poly_subset_stream(g: MultiGraph, b: BFunction) -> IntPolynomial:
    require_compatible(g, b)
    n, m = g.vertex_count, g.edge_count
    pairs = g.pairs()
    compatible = _compatibility_oracle(g, b)
    top = cycle_rank(g)
    coeffs = [0] * (top + 1)
    for mask in range(1 << m):
        part = _partition_of_mask(pairs, n, mask)
        if compatible(part):
            size = mask.bit_count()
            coeffs[m - size - n + len(part)] += 1 if size % 2 == 0 else -1
    return IntPolynomial(tuple(coeffs))


def b_compatible_bonds(g: MultiGraph, b: BFunction) -> list[EdgeSet]:
    """Bonds whose removal leaves the graph compatible with b."""
    _check_vertex_function(g, b)
    require_compatible(g, b)
    return [bond for bond in bonds(g) if is_b_compatible(delete_edges(g, bond), b)]


def broken_bonds(
    g: MultiGraph, b: BFunction, order: EdgeOrder | None = None
) -> list[EdgeSet]:
    """Each compatible bond minus its greatest edge, duplicates merged."""
    if order is None:
        order = EdgeOrder.default(g)
    order.validate_for(g)
    rank = order.rank_map()
    out = {
        bond - {max(bond, key=rank.__getitem__)}
        for bond in b_compatible_bonds(g, b)
    }
    return sorted(out, key=sorted)


def _broken_masks_from_structure(
    g: MultiGraph, st: _SubsetStructure, sigma: int, order: EdgeOrder
) -> list[int]:
    rank = order.rank_map()
    position_rank = [rank[edge.id] for edge in g.edges]
    broken = set()
    for mask, pid in zip(st.bond_masks, st.bond_pids):
        if not sigma >> pid & 1:
            continue
        best = max(
            (i for i in range(g.edge_count) if mask >> i & 1),
            key=position_rank.__getitem__,
        )
        broken.add(mask & ~(1 << best))
    return sorted(broken)


def poly_nbb(
    g: MultiGraph,
    b: BFunction,
    order: EdgeOrder | None = None,
    *,
    max_edges: int | None = DEFAULT_MAX_EDGES,
) -> IntPolynomial:
    """The counting polynomial via broken-bond-free subset counting.

    The signless coefficient a_i is the number of i-edge subsets S such that
    G - S stays compatible with b and S contains no compatible broken bond
    for the given edge order; the polynomial is sum (-1)^i a_i k^(m(G)-i).
    Any subset containing a broken bond is skipped outright, which is the
    only pruning the count needs.
    """
    _check_vertex_function(g, b)
    _guard_edges(g, max_edges)
    if order is None:
        order = EdgeOrder.default(g)
    order.validate_for(g)
    top = cycle_rank(g)
    counts = [0] * (top + 1)
    if g.edge_count <= _TABLE_MAX_EDGES:
        sigma = compat_signature(g, b)
        if not sigma & 1:
            require_compatible(g, b)
        st = _structure(g)
        broken = _broken_masks_from_structure(g, st, sigma, order)
        partition_id = st.partition_id
        for mask in range(len(partition_id)):
            if not sigma >> partition_id[mask] & 1:
                continue
            if any(mask & bb == bb for bb in broken):
                continue
            size = mask.bit_count()
            if size > top:
                raise ConsistencyError(
                    f"a {size}-edge subset survived although m(G) = {top}"
                )
            counts[size] += 1
    else:
        require_compatible(g, b)
        n, m = g.vertex_count, g.edge_count
        pairs = g.pairs()
        pos_of = {edge.id: i for i, edge in enumerate(g.edges)}
        broken = sorted(
            sum(1 << pos_of[eid] for eid in bb) for bb in broken_bonds(g, b, order)
        )
        compatible = _compatibility_oracle(g, b)
        for mask in range(1 << m):
            if any(mask & bb == bb for bb in broken):
                continue
            part = _partition_of_mask(pairs, n, mask)
            if not compatible(part):
                continue
            size = mask.bit_count()
            if size > top:
                raise ConsistencyError(
                    f"a {size}-edge subset survived although m(G) = {top}"
                )
            counts[size] += 1
    return IntPolynomial.from_signless(counts, top)


@dataclass(frozen=True)
class CoefficientComparison:
    """Side-by-side signless coefficients of two boundary functions."""

    pointwise_le: bool
    signless_first: tuple[int, ...]
    signless_second: tuple[int, ...]
    coefficientwise_le: bool

    @property
    def consistent(self) -> bool:
        """Pointwise-ordered assignings must have ordered coefficients."""
        return not self.pointwise_le or self.coefficientwise_le


def compare_coefficients(
    g: MultiGraph,
    b: BFunction,
    b2: BFunction,
    *,
    max_edges: int | None = DEFAULT_MAX_EDGES,
) -> CoefficientComparison:
    """Compare the signless coefficient vectors induced by b and b2.

    The two functions may live over different groups; assignings are compared
    bit by bit.  Both polynomials are computed independently rather than
    assuming the monotonicity theorem, so a violation shows up as an
    inconsistent report.
    """
    require_compatible(g, b)
    require_compatible(g, b2)
    alpha1 = induced_assigning(g, b)
    alpha2 = induced_assigning(g, b2)
    top = cycle_rank(g)
    signless1 = poly_subset_expansion(g, b, max_edges=max_edges).signless_coefficients(top)
    signless2 = poly_subset_expansion(g, b2, max_edges=max_edges).signless_coefficients(top)
    return CoefficientComparison(
        pointwise_le=alpha1.pointwise_le(alpha2),
        signless_first=signless1,
        signless_second=signless2,
        coefficientwise_le=all(x <= y for x, y in zip(signless1, signless2)),
    )


def is_A_connected(
    g: MultiGraph,
    spec: GroupSpec,
    *,
    budget: int = 10**8,
    max_edges: int | None = DEFAULT_MAX_EDGES,
) -> tuple[bool, BFunction | None]:
    """Whether every locally zero-sum b admits a nowhere-zero flow.

    Counts via the subset-expansion polynomial evaluated at |A| and
    cross-checks each count against the brute-force oracle; on failure the
    witness b with count zero is returned.
    """
    if spec.order < 2:
        raise InputError("connectivity needs a group of order >= 2")
    for b in enumerate_zero_sum(g, spec):
        via_poly = poly_subset_expansion(g, b, max_edges=max_edges).eval(spec.order)
        via_brute = count_nz_flows_bruteforce(g, b, budget=budget)
        if via_poly != via_brute:
            raise ConsistencyError(
                f"polynomial count {via_poly} disagrees with brute force {via_brute}"
            )
        if via_poly == 0:
            return False, b
    return True, None


def clear_assigning_caches() -> None:
    """Drop the cached subset tables and signature polynomials."""
    _structure.cache_clear()
    _poly_from_signature.cache_clear()
