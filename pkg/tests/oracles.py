"""Independent reference computations used only by the test suite.

Nothing here touches normal forms, type maps, or coset tables; each oracle
recomputes its answer from first principles so that it can legitimately
check the corresponding engine path.
"""

import heapq
import itertools
from math import comb, factorial


def rook_monoid_size(n: int) -> int:
    """Count all n-by-n rook matrices directly: choose rows, columns, matching."""
    return sum(comb(n, k) ** 2 * factorial(k) for k in range(n + 1))


def cheapest_word_costs(engine) -> dict:
    """Minimal word cost per element, reflection letters cost 1, idempotents 0.

    Plain Dijkstra over right multiplication by generators, starting at the
    unit (the empty word).
    """
    gens = [(p, 1 if g.kind == "s" else 0) for g, p in engine.generators.items()]
    dist = {engine.identity: 0}
    counter = itertools.count()
    heap = [(0, next(counter), engine.identity)]
    while heap:
        d, _, x = heapq.heappop(heap)
        if d > dist.get(x, d + 1):
            continue
        for p, c in gens:
            y = x * p
            nd = d + c
            if nd < dist.get(y, nd + 1):
                dist[y] = nd
                heapq.heappush(heap, (nd, next(counter), y))
    return dist


def brute_min_coset(weyl, w, gens, side):
    """Minimal element of w*W_I or W_I*w by enumerating the whole coset.

    Also asserts the minimum is unique, which is what makes the greedy
    reduction in the engine well defined.
    """
    sub = weyl.parabolic(gens)
    coset = {w * h for h in sub} if side == "right" else {h * w for h in sub}
    lengths = sorted(weyl.length(v) for v in coset)
    assert lengths.count(lengths[0]) == 1, "coset minimum is not unique"
    return min(coset, key=weyl.length)


def brute_min_double_coset(weyl, w, left_gens, right_gens):
    """Minimal element of W_J*w*W_I by enumerating the double coset."""
    J = weyl.parabolic(left_gens)
    I = weyl.parabolic(right_gens)
    coset = {a * w * b for a in J for b in I}
    lengths = sorted(weyl.length(v) for v in coset)
    assert lengths.count(lengths[0]) == 1, "double-coset minimum is not unique"
    return min(coset, key=weyl.length)


def all_subsets(items):
    items = list(items)
    for r in range(len(items) + 1):
        yield from itertools.combinations(items, r)
