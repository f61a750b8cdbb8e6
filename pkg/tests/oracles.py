"""Brute-force reference computations, independent of the library algorithms."""

import random
from itertools import combinations

from algebra import BinaryCode, BitVector
from topology import TriangularConfiguration, triangle_edges


def span_size(rows: list[int]) -> int:
    """Number of distinct XOR-combinations of the given integer rows."""
    seen = {0}
    for row in rows:
        seen |= {x ^ row for x in seen}
    return len(seen)


def brute_force_cycles(config: TriangularConfiguration) -> set[int]:
    """Bitmasks of every triangle subset in which each edge has even degree."""
    cycles = set()
    triangles = config.triangles
    for mask in range(1 << len(triangles)):
        parity: dict = {}
        for i, t in enumerate(triangles):
            if mask >> i & 1:
                for e in triangle_edges(t):
                    parity[e] = parity.get(e, 0) ^ 1
        if not any(parity.values()):
            cycles.add(mask)
    return cycles


def naive_perfect_matchings(config: TriangularConfiguration) -> list[tuple[int, ...]]:
    """Every edge-disjoint triangle subset covering all edges, by trying all subsets."""
    edges = set(config.edges)
    found = []
    for size in range(len(config) + 1):
        for combo in combinations(range(len(config)), size):
            covered: list = []
            for i in combo:
                covered.extend(triangle_edges(config.triangles[i]))
            if len(covered) == len(set(covered)) and set(covered) == edges:
                found.append(combo)
    return sorted(found)


def all_codewords(code: BinaryCode) -> set[int]:
    words = {0}
    for row in code.basis:
        words |= {w ^ row.bits for w in words}
    return words


def random_code(rng: random.Random, n: int, d: int, even: bool = False) -> BinaryCode:
    """Random code with a random independent basis of d vectors of length n."""
    rows: list[int] = []
    while len(rows) < d:
        bits = rng.getrandbits(n)
        if even and bits.bit_count() % 2:
            continue
        if bits and span_size(rows + [bits]) == 2 * span_size(rows):
            rows.append(bits)
    return BinaryCode(n, tuple(BitVector(n, bits) for bits in rows))
