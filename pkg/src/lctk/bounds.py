"""The inequality engine: the bound functional on log-convex sequences,
the main lower bound, the classical interval, and the bound chain.

Every verdict is exact.  Comparisons against n-th roots happen in the power
domain with integers; the one genuinely two-root comparison in the chain is
settled by a rational equality criterion plus certified dyadic bracketing.
+infinity is represented by float('inf'), which orders correctly against
Fraction and only ever arises from e_1 = 0.
"""

from dataclasses import dataclass
from fractions import Fraction

from .multiplicities import MultiplicitySequence

INFINITY = float("inf")

_ONE = Fraction(1)

LT, EQ, GT = "LT", "EQ", "GT"


def _entries(seq):
    return seq.e if isinstance(seq, MultiplicitySequence) else tuple(seq)


def d_membership(t, *, strict=False):
    """Exact membership of a positive vector in the log-convex cone."""
    t = tuple(Fraction(v) for v in t)
    if any(v <= 0 for v in t):
        raise ValueError("entries must be positive")
    ext = (_ONE,) + t  # t_0 = 1 folds the first inequality into the rest
    for j in range(1, len(t)):
        lhs, rhs = ext[j] ** 2, ext[j - 1] * ext[j + 1]
        if lhs > rhs or (strict and lhs == rhs):
            return False
    return True


def f_value(t):
    """1/t_1 + t_1/t_2 + ... + t_{n-1}/t_n, exactly."""
    t = tuple(Fraction(v) for v in t)
    if any(v == 0 for v in t):
        raise ValueError("entries must be nonzero")
    total = _ONE / t[0]
    for j in range(len(t) - 1):
        total += t[j] / t[j + 1]
    return total


def main_bound(seq):
    """Sum of e_j / e_{j+1} for j < n; +infinity when e_1 vanishes."""
    e = _entries(seq)
    if len(e) >= 2 and e[1] == 0:
        return INFINITY
    total = Fraction(0)
    for j in range(len(e) - 1):
        if e[j + 1] == 0:
            return INFINITY
        total += Fraction(e[j], e[j + 1])
    return total


def skoda_interval(e1, n):
    """The classical two-sided enclosure (1/e_1, n/e_1)."""
    if e1 == 0:
        return (INFINITY, INFINITY)
    if e1 < 0:
        raise ValueError("e_1 must be a natural")
    return (Fraction(1, e1), Fraction(n, e1))


def _cmp(a, b):
    if a < b:
        return LT
    if a > b:
        return GT
    return EQ


def compare_geometric_bound(c, e_n, n):
    """Ordering of c against n / e_n^{1/n} via c^n e_n vs n^n (no roots).

    Returns the ordering plus the integer witnesses compared.
    """
    c = Fraction(c)
    if c <= 0:
        raise ValueError("c must be positive")
    lhs = c.numerator ** n * e_n
    rhs = n ** n * c.denominator ** n
    return _cmp(lhs, rhs), (lhs, rhs)


def compare_mixed_bound(c, e1, e_n, n):
    """Ordering of c against 1/e_1 + (n-1)(e_1/e_n)^{1/(n-1)}.

    With u = c - 1/e_1: for u <= 0 the bound immediately exceeds c;
    otherwise compare u^{n-1} e_n against (n-1)^{n-1} e_1 in integers.
    """
    if n < 2:
        raise ValueError("defined for n >= 2 only")
    c = Fraction(c)
    u = c - Fraction(1, e1)
    if u <= 0:
        return LT, (u,)
    k = n - 1
    lhs = u.numerator ** k * e_n
    rhs = k ** k * e1 * u.denominator ** k
    return _cmp(lhs, rhs), (lhs, rhs)


def _iroot_floor(x, k):
    """floor(x ** (1/k)) for nonnegative integers, exact (integer Newton)."""
    if x < 0:
        raise ValueError("negative radicand")
    if x == 0:
        return 0
    if k == 1:
        return x
    r = 1 << ((x.bit_length() + k - 1) // k)
    while True:
        nr = ((k - 1) * r + x // r ** (k - 1)) // k
        if nr >= r:
            break
        r = nr
    while r ** k > x:
        r -= 1
    while (r + 1) ** k <= x:
        r += 1
    return r


def root_bracket(x, k, bits):
    """Certified dyadic bracket lo <= x^{1/k} <= hi with denominator 2^bits."""
    x = Fraction(x)
    if x < 0:
        raise ValueError("negative radicand")
    scale = 1 << bits
    t = (x.numerator * scale ** k) // x.denominator
    lo = _iroot_floor(t, k)
    hi = _iroot_floor(t + 1, k) + 1
    return Fraction(lo, scale), Fraction(hi, scale)


def _compare_mixed_vs_geometric(e1, e_n, n, max_bits=4096):
    """Ordering of 1/e_1 + (n-1)(e_1/e_n)^{1/(n-1)} against n/e_n^{1/n}.

    Equality happens exactly when e_n = e_1^n (both sides are then the
    rational n/e_1); otherwise dyadic brackets of both roots are refined
    until they separate, and the separating bounds are the witness.
    """
    if e_n == e1 ** n:
        lhs = Fraction(1, e1) + (n - 1) * Fraction(1, e1)
        rhs = Fraction(n, e1)
        assert lhs == rhs
        return EQ, (lhs, rhs)
    base = Fraction(1, e1)
    bits = 16
    while bits <= max_bits:
        lo1, hi1 = root_bracket(Fraction(e1, e_n), n - 1, bits)
        lo2, hi2 = root_bracket(Fraction(1, e_n), n, bits)
        lhs_lo = base + (n - 1) * lo1
        lhs_hi = base + (n - 1) * hi1
        rhs_lo = n * lo2
        rhs_hi = n * hi2
        if lhs_lo > rhs_hi:
            return GT, (lhs_lo, rhs_hi)
        if lhs_hi < rhs_lo:
            return LT, (lhs_hi, rhs_lo)
        bits *= 2
    raise ArithmeticError("root brackets failed to separate")


@dataclass(frozen=True)
class ChainReport:
    """Verdicts for: main bound >= mixed bound >= geometric-mean bound."""

    main_vs_mixed: str
    mixed_vs_geometric: str
    witnesses: tuple

    @property
    def ok(self):
        return (self.main_vs_mixed in (GT, EQ)
                and self.mixed_vs_geometric in (GT, EQ))


def chain_check(seq):
    """Exact verification that the main bound dominates the mixed bound,
    which dominates the geometric-mean bound."""
    e = _entries(seq)
    n = len(e) - 1
    if e[1] < 1:
        raise ValueError("requires e_1 >= 1")
    mb = main_bound(e)
    if n == 1:
        # both reference bounds collapse to 1/e_1
        wit = (mb, Fraction(1, e[1]))
        return ChainReport(_cmp(mb, Fraction(1, e[1])), EQ, (wit,))
    # main bound vs mixed bound, in the power domain
    u = mb - Fraction(1, e[1])
    k = n - 1
    lhs = u.numerator ** k * e[n]
    rhs = k ** k * e[1] * u.denominator ** k
    main_vs_mixed = _cmp(lhs, rhs)
    mixed_vs_geometric, wit2 = _compare_mixed_vs_geometric(e[1], e[n], n)
    return ChainReport(main_vs_mixed, mixed_vs_geometric,
                       ((lhs, rhs), wit2))


def derivative_certificates(t):
    """Exact signs of the partial derivatives of the bound functional.

    At an interior log-convex point, -t_{j-1}/t_j^2 + 1/t_{j+1} <= 0 for
    every j (with t_0 = 1 and the last term dropped at j = n).
    """
    t = tuple(Fraction(v) for v in t)
    ext = (_ONE,) + t
    out = []
    for j in range(1, len(t) + 1):
        val = -ext[j - 1] / ext[j] ** 2
        if j + 1 <= len(t):
            val += _ONE / ext[j + 1]
        out.append(val <= 0)
    return out


def random_interior_dvector(rng, n, *, max_num=9):
    """Interior point of the log-convex cone from ascending random ratios."""
    ratios = []
    r = Fraction(rng.randint(1, max_num), rng.randint(1, max_num))
    ratios.append(r)
    for _ in range(n - 1):
        r = r * (1 + Fraction(rng.randint(1, max_num),
                              rng.randint(1, max_num)))
        ratios.append(r)
    t = []
    acc = _ONE
    for r in ratios:
        acc *= r
        t.append(acc)
    return tuple(t)


def random_dominating_pair(rng, n, *, max_num=9):
    """Pair a >= b, both interior: multiply b by an interior vector >= 1."""
    b = random_interior_dvector(rng, n, max_num=max_num)
    ratios = []
    r = 1 + Fraction(rng.randint(1, max_num), rng.randint(1, max_num))
    ratios.append(r)
    for _ in range(n - 1):
        r = r * (1 + Fraction(rng.randint(1, max_num),
                              rng.randint(1, max_num)))
        ratios.append(r)
    u = []
    acc = _ONE
    for r in ratios:
        acc *= r
        u.append(acc)
    a = tuple(x * y for x, y in zip(b, u))
    return a, b


@dataclass(frozen=True)
class BoundsReport:
    """Aggregated exact comparisons for one multiplicity sequence."""

    main: object                 # Fraction or +infinity
    skoda_low: object
    skoda_high: object
    geometric_cmp: str           # ordering of c vs the geometric-mean bound
    mixed_cmp: str
    chain: ChainReport
    in_cone: bool
    details: tuple


def build_bounds_report(seq, c=None):
    """Assemble the full exact report; comparisons against c need c."""
    e = _entries(seq)
    n = len(e) - 1
    mb = main_bound(e)
    lo, hi = skoda_interval(e[1], n)
    details = []
    if c is not None:
        c = Fraction(c)
        geometric_cmp, gw = compare_geometric_bound(c, e[n], n)
        details.append(("geometric", gw))
        if n >= 2:
            mixed_cmp, mw = compare_mixed_bound(c, e[1], e[n], n)
        else:
            mixed_cmp, mw = _cmp(c, Fraction(1, e[1])), ()
        details.append(("mixed", mw))
    else:
        geometric_cmp = mixed_cmp = EQ
    chain = chain_check(e)
    return BoundsReport(
        main=mb, skoda_low=lo, skoda_high=hi,
        geometric_cmp=geometric_cmp, mixed_cmp=mixed_cmp,
        chain=chain, in_cone=d_membership([Fraction(v) for v in e[1:]]),
        details=tuple(details))
