"""Exact spectral invariants of integer symmetric matrices.

Characteristic polynomials are computed division-free over the integers;
cyclotomicity and eigenvalue counts are decided with Sturm sequences over
exact rationals.  Spectral radius and Mahler measure come out of certified
root intervals, so no floating point touches any decision.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt
from typing import Sequence

from . import intpoly as ip
from .errors import EmptyMatrix, NotMonic
from .graphs import ChargedSignedGraph
from .intpoly import IntPolynomial

DEFAULT_TOL = Fraction(1, 10**9)


def _as_fraction(tol) -> Fraction:
    f = Fraction(tol) if not isinstance(tol, Fraction) else tol
    if f <= 0:
        raise ValueError("tolerance must be positive")
    return f


def char_poly(a: ChargedSignedGraph | Sequence[Sequence[int]]) -> IntPolynomial:
    """Monic characteristic polynomial det(xI - A), exact over Z.

    Berkowitz-style vector recurrence: each step folds one row/column into
    the polynomial of the leading principal submatrix via a Toeplitz product.
    Division-free, so coefficients stay integers throughout.
    """
    rows = a.entries if isinstance(a, ChargedSignedGraph) else a
    n = len(rows)
    p = [1]  # descending coefficients, starts as char poly of the empty matrix
    for k in range(n):
        r = rows[k][:k]
        col = [rows[i][k] for i in range(k)]
        t = [1, -rows[k][k]]
        v = col
        for _ in range(k):
            t.append(-sum(x * y for x, y in zip(r, v)))
            v = [sum(rows[i][j] * v[j] for j in range(k)) for i in range(k)]
        q = [0] * (k + 2)
        for i in range(k + 2):
            s = 0
            for j in range(max(0, i - k - 1), min(i, k) + 1):
                s += t[i - j] * p[j]
            q[i] = s
        p = q
    p.reverse()
    return IntPolynomial(tuple(p))


def associated_reciprocal(g: IntPolynomial) -> IntPolynomial:
    """z^d * g(z + 1/z) for monic g of degree d: a palindromic monic polynomial."""
    g.require_monic()
    d = g.degree
    zz1_pow: list[int] = [1]  # (z^2 + 1)^j, built up incrementally
    out: list[int] = []
    for j, b in enumerate(g.coeffs):
        if b:
            term = [0] * (d - j) + ip.scale(zz1_pow, b)
            out = ip.add(out, term)
        zz1_pow = ip.mul(zz1_pow, [1, 0, 1])
    return IntPolynomial(tuple(out))


def sturm_count(p: IntPolynomial | Sequence[int], lo, hi) -> int:
    """Distinct real roots of squarefree p in the half-open interval (lo, hi]."""
    coeffs = list(p.coeffs) if isinstance(p, IntPolynomial) else list(p)
    return ip.sturm_count(coeffs, Fraction(lo), Fraction(hi))


def _deflate_pm2(coeffs: list[int]) -> tuple[list[int], int, int]:
    """Divide out all factors (x - 2) and (x + 2); returns (quotient, m2, mm2)."""
    m2 = mm2 = 0
    q = list(coeffs)
    while len(q) > 1 and ip.eval_int(q, 2) == 0:
        q, rem = ip.divmod_exact(q, [-2, 1])
        assert not rem
        m2 += 1
    while len(q) > 1 and ip.eval_int(q, -2) == 0:
        q, rem = ip.divmod_exact(q, [2, 1])
        assert not rem
        mm2 += 1
    return q, m2, mm2


def is_cyclotomic_matrix(a: ChargedSignedGraph) -> bool:
    """True iff every eigenvalue lies in [-2, 2], decided in exact arithmetic."""
    chi = char_poly(a)
    q, _, _ = _deflate_pm2(list(chi.coeffs))
    d = ip.degree(q)
    if d <= 0:
        return True
    sf = ip.squarefree_part(q)
    chain = ip.sturm_chain(sf)
    inside = ip.count_roots_halfopen(chain, Fraction(-2), Fraction(2))
    return inside == ip.degree(sf)


@dataclass(frozen=True)
class RootCertificate:
    """Isolating intervals with exact rational endpoints for all real roots.

    Intervals are disjoint and sorted; each (lo, hi, mult) contains exactly
    `mult` roots counted with multiplicity, with hi - lo <= value_tol.  A
    point interval (lo == hi) pins a root exactly.
    """

    intervals: tuple[tuple[Fraction, Fraction, int], ...]
    value_tol: Fraction

    @property
    def total_multiplicity(self) -> int:
        return sum(m for _, _, m in self.intervals)

    def refined(self, polys: Sequence[tuple[Sequence[int], int]], width: Fraction) -> "RootCertificate":
        """Re-refine against the defining squarefree factors to a smaller width."""
        return certificate_from_factors(polys, width)


def certificate_from_factors(
    factors: Sequence[tuple[Sequence[int], int]], width: Fraction
) -> RootCertificate:
    items: list[tuple[Fraction, Fraction, int, tuple[int, ...]]] = []
    for f, mult in factors:
        f = list(f)
        for lo, hi in ip.isolate_real_roots(f):
            lo, hi = ip.refine_root(f, lo, hi, width)
            items.append((lo, hi, mult, tuple(f)))
    items.sort(key=lambda t: (t[0], t[1]))
    # shrink any overlapping neighbours until all intervals are disjoint
    changed = True
    w = width
    while changed:
        changed = False
        for i in range(len(items) - 1):
            a = items[i]
            b = items[i + 1]
            if a[1] > b[0]:
                w = w / 16
                items[i] = (*ip.refine_root(list(a[3]), a[0], a[1], w), a[2], a[3])
                items[i + 1] = (*ip.refine_root(list(b[3]), b[0], b[1], w), b[2], b[3])
                changed = True
        if changed:
            items.sort(key=lambda t: (t[0], t[1]))
    return RootCertificate(tuple((lo, hi, m) for lo, hi, m, _ in items), width)


def eigen_certificate(a: ChargedSignedGraph, value_tol=DEFAULT_TOL) -> RootCertificate:
    """Certified isolating intervals for all eigenvalues of a."""
    tol = _as_fraction(value_tol)
    chi = char_poly(a)
    if chi.degree == 0:
        return RootCertificate((), tol)
    factors = ip.squarefree_decomposition(list(chi.coeffs))
    cert = certificate_from_factors(factors, tol)
    if cert.total_multiplicity != a.n:
        raise ArithmeticError("certificate does not account for all eigenvalues")
    return cert


def _chi_factors(a: ChargedSignedGraph) -> list[tuple[list[int], int]]:
    chi = char_poly(a)
    if chi.degree == 0:
        return []
    return [(f, m) for f, m in ip.squarefree_decomposition(list(chi.coeffs))]


def _abs_interval(lo: Fraction, hi: Fraction) -> tuple[Fraction, Fraction]:
    if lo >= 0:
        return lo, hi
    if hi <= 0:
        return -hi, -lo
    return Fraction(0), max(-lo, hi)


def spectral_radius_interval(a: ChargedSignedGraph, tol=Fraction(1, 10**9)) -> tuple[Fraction, Fraction]:
    """Exact rational bracket of width <= tol around max |eigenvalue|."""
    if a.n == 0:
        raise EmptyMatrix("spectral radius of the 0-vertex matrix is undefined")
    tol = _as_fraction(tol)
    cert = eigen_certificate(a, tol / 2)
    first = cert.intervals[0]
    last = cert.intervals[-1]
    lo1, hi1 = _abs_interval(first[0], first[1])
    lo2, hi2 = _abs_interval(last[0], last[1])
    return max(lo1, lo2), max(hi1, hi2)


def spectral_radius(a: ChargedSignedGraph, tol=1e-9) -> float:
    """max |eigenvalue| with absolute error at most tol."""
    lo, hi = spectral_radius_interval(a, _as_fraction(tol))
    return float((lo + hi) / 2)


def count_outside(a: ChargedSignedGraph) -> int:
    """Exact number of eigenvalues with |lambda| > 2, counted with multiplicity."""
    if a.n == 0:
        return 0
    bound = 1 + max(sum(abs(x) for x in row) for row in a.entries)
    b = Fraction(bound)
    total = 0
    for f, mult in _chi_factors(a):
        chain = ip.sturm_chain(f)
        above = ip.count_roots_halfopen(chain, Fraction(2), b)
        below = ip.count_roots_halfopen(chain, -b, Fraction(-2))
        if ip.eval_int(f, -2) == 0:
            below -= 1
        total += mult * (above + below)
    return total


def _sqrt_bounds(x: Fraction, scale: int = 10**18) -> tuple[Fraction, Fraction]:
    """Rational lo <= sqrt(x) <= hi with hi - lo <= 1/scale."""
    if x < 0:
        raise ValueError("negative radicand")
    q = (x.numerator * scale * scale) // x.denominator
    r = isqrt(q)
    return Fraction(r, scale), Fraction(r + 1, scale)


def _mahler_factor_bounds(lo: Fraction, hi: Fraction) -> tuple[Fraction, Fraction]:
    """Bounds for (|l| + sqrt(l^2 - 4)) / 2 on an |eigenvalue| bracket with lo > 2."""
    s_lo = _sqrt_bounds(lo * lo - 4)[0]
    s_hi = _sqrt_bounds(hi * hi - 4)[1]
    return (lo + s_lo) / 2, (hi + s_hi) / 2


def _mahler_interval_from_factors(
    factors: Sequence[tuple[list[int], int]], tol: Fraction
) -> tuple[Fraction, Fraction]:
    """Mahler measure bracket for a totally real monic integer polynomial.

    `factors` is a squarefree decomposition; roots at +-2 and inside (-2, 2)
    contribute 1 to the product.
    """
    width = tol / 4
    two = Fraction(2)
    while True:
        prod_lo = Fraction(1)
        prod_hi = Fraction(1)
        ok = True
        for f, mult in factors:
            f2, _, _ = _deflate_pm2(list(f))
            if ip.degree(f2) <= 0:
                continue
            for lo, hi in ip.isolate_real_roots(f2):
                lo, hi = ip.refine_root(f2, lo, hi, width)
                alo, ahi = _abs_interval(lo, hi)
                if ahi <= two:
                    continue
                if alo < two:
                    ok = False  # still straddles the unit-measure boundary
                    break
                flo, fhi = _mahler_factor_bounds(alo, ahi)
                prod_lo *= flo**mult
                prod_hi *= fhi**mult
            if not ok:
                break
        if ok and prod_hi - prod_lo <= tol:
            return prod_lo, prod_hi
        width /= 16


def mahler_measure_interval(a: ChargedSignedGraph, tol=DEFAULT_TOL) -> tuple[Fraction, Fraction]:
    tol = _as_fraction(tol)
    if a.n == 0:
        return Fraction(1), Fraction(1)
    return _mahler_interval_from_factors(_chi_factors(a), tol)


def mahler_measure(a: ChargedSignedGraph, tol=1e-9) -> float:
    """Product of (|l| + sqrt(l^2 - 4))/2 over eigenvalues with |l| > 2.

    Equals 1 exactly when the matrix is cyclotomic.
    """
    lo, hi = mahler_measure_interval(a, _as_fraction(tol))
    if lo == 1 and hi == 1:
        return 1.0
    return float((lo + hi) / 2)


def is_palindromic(coeffs: Sequence[int]) -> bool:
    return list(coeffs) == list(reversed(coeffs))


def inverse_reciprocal(r: IntPolynomial) -> IntPolynomial:
    """The monic g with associated_reciprocal(g) == r, for palindromic r of even degree.

    Uses the basis p_k(y) with z^k + z^-k == p_k(z + 1/z):
    p_0 = 2, p_1 = y, p_k = y*p_{k-1} - p_{k-2}.
    """
    r.require_monic()
    c = list(r.coeffs)
    if (len(c) - 1) % 2 != 0 or not is_palindromic(c):
        raise NotMonic("not a palindromic polynomial of even degree")
    d = (len(c) - 1) // 2
    g = [c[d]]
    p_prev: list[int] = [2]
    p_cur: list[int] = [0, 1]
    for k in range(1, d + 1):
        if c[d + k]:
            g = ip.add(g, ip.scale(p_cur, c[d + k]))
        p_prev, p_cur = p_cur, ip.sub(ip.mul([0, 1], p_cur), p_prev)
    return IntPolynomial(tuple(g))


def mahler_measure_poly_interval(r: IntPolynomial, tol=DEFAULT_TOL) -> tuple[Fraction, Fraction]:
    """Mahler measure bracket of a monic palindromic polynomial with totally
    real image under z + 1/z -> x."""
    tol = _as_fraction(tol)
    r.require_monic()
    if r.degree == 0:
        return Fraction(1), Fraction(1)
    g = inverse_reciprocal(r)
    factors = ip.squarefree_decomposition(list(g.coeffs))
    n_real = sum(
        m * len(ip.isolate_real_roots(f)) for f, m in factors
    )
    if n_real != g.degree:
        raise ArithmeticError("not totally real under the inverse substitution")
    return _mahler_interval_from_factors(factors, tol)


def mahler_measure_poly(r: IntPolynomial, tol=1e-9) -> float:
    """Mahler measure of a monic reciprocal integer polynomial.

    Palindromic inputs whose z + 1/z image is totally real are handled by the
    exact interval machinery; anything else falls back to high-precision
    complex root refinement.
    """
    tol = _as_fraction(tol)
    r.require_monic()
    try:
        lo, hi = mahler_measure_poly_interval(r, tol)
        return float((lo + hi) / 2)
    except (NotMonic, ArithmeticError):
        pass
    import mpmath

    with mpmath.workdps(60):
        roots = mpmath.polyroots([mpmath.mpf(c) for c in reversed(r.coeffs)], maxsteps=200, extraprec=200)
        m = mpmath.mpf(1)
        for z in roots:
            az = abs(z)
            if az > 1:
                m *= az
        return float(m)
