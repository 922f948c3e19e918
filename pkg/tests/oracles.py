"""Independent brute-force oracles shared across the test suite.

Nothing here reuses the package's canonical form or generation machinery:
trees come from Prufer codes, isomorphism classes from a center-rooted
AHU encoding, and subgraph counts from explicit triple enumeration.
"""

from __future__ import annotations

import heapq
import itertools
from collections import deque
from multiprocessing import Pool


def prufer_decode(code, n: int) -> list[list[int]]:
    """Labeled tree on n >= 3 vertices from a Prufer code of length n-2."""
    degree = [1] * n
    for x in code:
        degree[x] += 1
    adj: list[list[int]] = [[] for _ in range(n)]
    leaves = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(leaves)
    for x in code:
        leaf = heapq.heappop(leaves)
        adj[leaf].append(x)
        adj[x].append(leaf)
        degree[x] -= 1
        if degree[x] == 1:
            heapq.heappush(leaves, x)
    u = heapq.heappop(leaves)
    v = heapq.heappop(leaves)
    adj[u].append(v)
    adj[v].append(u)
    return adj


def random_tree_adj(rng, n: int) -> list[list[int]]:
    if n == 1:
        return [[]]
    if n == 2:
        return [[1], [0]]
    return prufer_decode([rng.randrange(n) for _ in range(n - 2)], n)


def ahu_form(adj) -> tuple:
    """Canonical nested-tuple encoding of a free tree, rooted at a center.

    Only the bucketing property matters: two trees get the same form iff
    they are isomorphic.
    """
    n = len(adj)
    if n == 1:
        return ()
    deg = [len(nbrs) for nbrs in adj]
    removed = [False] * n
    layer = [v for v in range(n) if deg[v] == 1]
    remaining = n
    while remaining > 2:
        for v in layer:
            removed[v] = True
        remaining -= len(layer)
        nxt = []
        for v in layer:
            for w in adj[v]:
                if not removed[w]:
                    deg[w] -= 1
                    if deg[w] == 1:
                        nxt.append(w)
        layer = nxt
    centers = [v for v in range(n) if not removed[v]]

    def encode(v: int, parent: int) -> tuple:
        return tuple(
            sorted((encode(w, v) for w in adj[v] if w != parent), reverse=True)
        )

    return max(encode(c, -1) for c in centers)


def prufer_form_census(n: int) -> dict[tuple, int]:
    """Canonical form -> labeled-tree count, over all n^(n-2) Prufer codes."""
    if n == 1:
        return {ahu_form([[]]): 1}
    if n == 2:
        return {ahu_form([[1], [0]]): 1}
    census: dict[tuple, int] = {}
    for code in itertools.product(range(n), repeat=n - 2):
        form = ahu_form(prufer_decode(code, n))
        census[form] = census.get(form, 0) + 1
    return census


def _census_slice(args) -> dict[tuple, int]:
    n, first = args
    census: dict[tuple, int] = {}
    for rest in itertools.product(range(n), repeat=n - 3):
        form = ahu_form(prufer_decode((first,) + rest, n))
        census[form] = census.get(form, 0) + 1
    return census


def prufer_form_census_parallel(n: int, jobs: int) -> dict[tuple, int]:
    """Same census, fanned out over the first Prufer symbol."""
    assert n >= 4
    census: dict[tuple, int] = {}
    with Pool(jobs) as pool:
        for part in pool.imap_unordered(_census_slice, ((n, f) for f in range(n))):
            for form, count in part.items():
                census[form] = census.get(form, 0) + count
    return census


def count_p3_subgraphs(adj) -> int:
    """Paths with two edges, counted per vertex triple.

    A triple spanning two edges holds one such path, a triangle holds
    three; on triangle-free graphs this equals the induced-path count.
    """
    n = len(adj)
    sets = [set(nbrs) for nbrs in adj]
    total = 0
    for a, b, c in itertools.combinations(range(n), 3):
        edges = (b in sets[a]) + (c in sets[a]) + (c in sets[b])
        if edges == 2:
            total += 1
        elif edges == 3:
            total += 3
    return total


def bfs_girth(adj) -> int | None:
    """Shortest cycle length, or None for a forest."""
    n = len(adj)
    best = None
    for s in range(n):
        dist = [-1] * n
        parent = [-1] * n
        dist[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in adj[u]:
                if dist[w] < 0:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif parent[u] != w:
                    cycle = dist[u] + dist[w] + 1
                    if best is None or cycle < best:
                        best = cycle
    return best


def graph6_encode(adj) -> str:
    """Encode adjacency lists in graph6 form (test-side inverse of decoding)."""
    n = len(adj)
    sets = [set(nbrs) for nbrs in adj]
    bits = []
    for v in range(1, n):
        for u in range(v):
            bits.append(1 if v in sets[u] else 0)
    while len(bits) % 6:
        bits.append(0)
    if n <= 62:
        prefix = chr(n + 63)
    else:
        assert n <= 258047
        prefix = "~" + "".join(
            chr(((n >> shift) & 63) + 63) for shift in (12, 6, 0)
        )
    body = []
    for i in range(0, len(bits), 6):
        value = 0
        for bit in bits[i : i + 6]:
            value = value * 2 + bit
        body.append(chr(value + 63))
    return prefix + "".join(body)


def random_connected_adj(rng, n: int, extra_edges: int = 0) -> list[list[int]]:
    """Random connected graph: a random tree plus extra random edges."""
    adj = random_tree_adj(rng, n)
    sets = [set(nbrs) for nbrs in adj]
    candidates = [
        (u, v)
        for u in range(n)
        for v in range(u + 1, n)
        if v not in sets[u]
    ]
    rng.shuffle(candidates)
    for u, v in candidates[:extra_edges]:
        adj[u].append(v)
        adj[v].append(u)
    return adj
