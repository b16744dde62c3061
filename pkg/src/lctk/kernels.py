"""Kernel selection: compiled staircase extension with pure-Python fallback.

The Cython extension ``lctk._staircase`` is used when it importable, the
dimension is at most 4, and every intermediate count provably fits in C
int64.  ``LCTK_PURE_PYTHON=1`` forces the fallback lane.  Both lanes are
behaviourally identical; see tests/test_kernels.py for the parity suite and
benchmarks/bench_kernels.py for the speed comparison.
"""

import os

from . import _staircase_py as _py

_compiled = None
if os.environ.get("LCTK_PURE_PYTHON") != "1":
    try:
        from . import _staircase as _compiled  # type: ignore[no-redef]
    except ImportError:
        _compiled = None

BACKEND = "compiled" if _compiled is not None else "python"

# int64 safety margins for the compiled lane
_MAX_COORD = 1 << 20
_MAX_COUNT = 1 << 62


def _cover_bound(terms, n):
    """Upper bound on the complement count: product of per-axis covers."""
    bound = 1
    for axis in range(n):
        cover = None
        for mu, m in terms:
            if all(c == 0 for i, c in enumerate(mu) if i != axis):
                v = max(mu[axis], m)
                if cover is None or v < cover:
                    cover = v
        if cover is None:
            return None
        bound *= max(cover, 1)
    return bound


def _compiled_ok_terms(terms, n):
    if _compiled is None or not 1 <= n <= 4:
        return False
    for mu, m in terms:
        if m > _MAX_COORD or any(c > _MAX_COORD for c in mu):
            return False
    bound = _cover_bound(terms, n)
    return bound is not None and bound < _MAX_COUNT


def minimalize(vecs, n):
    vecs = [tuple(v) for v in vecs]
    if _compiled is not None and 1 <= n <= 8 and all(
            c <= _MAX_COORD for v in vecs for c in v):
        return _compiled.minimalize(vecs, n)
    return _py.minimalize(vecs, n)


def product_minimal(gens_a, gens_b, n, degree_cap):
    gens_a = [tuple(v) for v in gens_a]
    gens_b = [tuple(v) for v in gens_b]
    if _compiled is not None and 1 <= n <= 8 and degree_cap <= _MAX_COORD:
        return _compiled.product_minimal(gens_a, gens_b, n, degree_cap)
    return _py.product_minimal(gens_a, gens_b, n, degree_cap)


def power_minimal(gens, t, n, degree_cap):
    gens = [tuple(v) for v in gens]
    if t == 0:
        return [(0,) * n]
    result = None
    square = minimalize(gens, n)
    while True:
        if t & 1:
            result = square if result is None else product_minimal(
                result, square, n, degree_cap)
        t >>= 1
        if t == 0:
            return result
        square = product_minimal(square, square, n, degree_cap)


def count_cut_complement(terms, n):
    terms = [(tuple(mu), m) for mu, m in terms]
    if _compiled_ok_terms(terms, n):
        return _compiled.count_cut_complement(terms, n)
    return _py.count_cut_complement(terms, n)


def colength_from_gens(gens, n):
    return count_cut_complement([(g, sum(g)) for g in gens], n)


def table_cell(power_gens_list, r, n):
    return count_cut_complement(
        [(g, sum(g) + r) for g in power_gens_list], n)


def diagonal_cell(a, r, t):
    a = tuple(a)
    if _compiled is not None and len(a) <= 8:
        box = 1
        for ai in a:
            box *= r + t * ai + ai
        if box < _MAX_COUNT and r + t * max(a) <= _MAX_COORD:
            return _compiled.diagonal_cell(a, r, t)
    return _py.diagonal_cell(a, r, t)
