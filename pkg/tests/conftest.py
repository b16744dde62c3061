"""Shared brute-force oracles.

These deliberately re-derive everything by direct enumeration so the fast
paths are checked against something independent of them.
"""

from itertools import product

import pytest


def brute_colength(gens, n):
    """Count lattice points no generator divides, boxed by the pure powers."""
    box = []
    for axis in range(n):
        pure = [g[axis] for g in gens
                if all(e == 0 for i, e in enumerate(g) if i != axis)]
        assert pure, "oracle needs an isolated zero"
        box.append(min(pure))
    count = 0
    for beta in product(*[range(b) for b in box]):
        if not any(all(a <= b for a, b in zip(g, beta)) for g in gens):
            count += 1
    return count


def brute_minimalize(vecs):
    vs = set(tuple(v) for v in vecs)
    out = [v for v in vs
           if not any(g != v and all(a <= b for a, b in zip(g, v))
                      for g in vs)]
    return sorted(out)


def brute_product_gens(gens_a, gens_b):
    return brute_minimalize(
        [tuple(x + y for x, y in zip(a, b)) for a in gens_a for b in gens_b])


def brute_power_gens(gens, t, n):
    out = [tuple(0 for _ in range(n))]
    for _ in range(t):
        out = brute_product_gens(out, gens)
    return out


@pytest.fixture(params=["python", "compiled"])
def kernel_lane(request):
    """Both kernel implementations, skipping compiled when unavailable."""
    if request.param == "python":
        from lctk import _staircase_py as lane
        return lane
    lane = pytest.importorskip("lctk._staircase")
    return lane
