"""Exact arithmetic on dense integer polynomials.

Polynomials are lists of Python ints in ascending degree order with no
trailing zeros; the empty list is the zero polynomial.  Everything here is
big-integer exact: no floating point is used anywhere in this module.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd as _int_gcd
from typing import Iterable, Sequence

from .errors import NotMonic, NotSquarefree

Coeffs = list[int]


def trim(c: Coeffs) -> Coeffs:
    while c and c[-1] == 0:
        c.pop()
    return c


def degree(c: Sequence[int]) -> int:
    """Degree, with the zero polynomial mapped to -1."""
    return len(c) - 1


def add(a: Sequence[int], b: Sequence[int]) -> Coeffs:
    n = max(len(a), len(b))
    out = [0] * n
    for i, x in enumerate(a):
        out[i] = x
    for i, x in enumerate(b):
        out[i] += x
    return trim(out)


def sub(a: Sequence[int], b: Sequence[int]) -> Coeffs:
    n = max(len(a), len(b))
    out = [0] * n
    for i, x in enumerate(a):
        out[i] = x
    for i, x in enumerate(b):
        out[i] -= x
    return trim(out)


def neg(a: Sequence[int]) -> Coeffs:
    return [-x for x in a]


def scale(a: Sequence[int], k: int) -> Coeffs:
    if k == 0:
        return []
    return [k * x for x in a]


def mul(a: Sequence[int], b: Sequence[int]) -> Coeffs:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return trim(out)


def deriv(a: Sequence[int]) -> Coeffs:
    return trim([i * a[i] for i in range(1, len(a))])


def eval_int(a: Sequence[int], x: int) -> int:
    acc = 0
    for c in reversed(a):
        acc = acc * x + c
    return acc


def eval_fraction(a: Sequence[int], x: Fraction) -> tuple[int, int]:
    """Sign-faithful evaluation at a rational point.

    Returns (value, 1) scaled by the positive factor den**deg, i.e. the sign
    of the first component equals sign(a(x)).  Homogeneous evaluation keeps
    everything in integers.
    """
    num, den = x.numerator, x.denominator
    acc = 0
    p = 1
    for c in reversed(a):
        acc = acc * num + c * p
        p *= den
    return acc, 1


def sign_at(a: Sequence[int], x: Fraction) -> int:
    v, _ = eval_fraction(a, x)
    return (v > 0) - (v < 0)


def content(a: Sequence[int]) -> int:
    g = 0
    for c in a:
        g = _int_gcd(g, abs(c))
        if g == 1:
            break
    return g


def primitive(a: Sequence[int]) -> Coeffs:
    """Divide out the content, preserving sign."""
    g = content(a)
    if g <= 1:
        return list(a)
    return [c // g for c in a]


def divmod_exact(a: Sequence[int], b: Sequence[int]) -> tuple[Coeffs, Coeffs]:
    """Polynomial long division when it happens to be exact over Z.

    Requires lc(b) to divide every leading coefficient encountered; raises
    ArithmeticError otherwise.  Used for deflation and factor removal where
    exactness is known in advance.
    """
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    r = list(a)
    q = [0] * max(0, len(a) - len(b) + 1)
    lb = b[-1]
    while len(r) >= len(b):
        c, rem = divmod(r[-1], lb)
        if rem:
            raise ArithmeticError("division is not exact over the integers")
        k = len(r) - len(b)
        q[k] = c
        if c:
            for i, bc in enumerate(b):
                r[i + k] -= c * bc
        assert r[-1] == 0
        r.pop()
        trim(r)
        if not r:
            break
    return trim(q), r


def divides(b: Sequence[int], a: Sequence[int]) -> bool:
    """True iff b divides a exactly over Q (and hence, for primitive b, over Z)."""
    if not a:
        return True
    if not b or len(b) > len(a):
        return False
    try:
        _, r = divmod_exact(a, b)
    except ArithmeticError:
        return False
    return not r


def pseudo_rem(a: Sequence[int], b: Sequence[int]) -> Coeffs:
    """Pseudo-remainder of a by b, premultiplied so division stays integral.

    Returns r with lc(b)**(deg a - deg b + 1) * a = q*b + r.
    """
    r = list(a)
    d = len(b) - 1
    lb = b[-1]
    steps = len(a) - len(b) + 1
    if steps <= 0:
        return trim(r)
    for _ in range(steps):
        if len(r) < len(b):
            r = scale(r, lb)
            continue
        lead = r[-1]
        r = scale(r, lb)
        k = len(r) - len(b)
        for i, bc in enumerate(b):
            r[i + k] -= lead * bc
        trim(r)
    return r


def poly_gcd(a: Sequence[int], b: Sequence[int]) -> Coeffs:
    """Primitive gcd over Z (positive leading coefficient)."""
    f, g = primitive(list(a)), primitive(list(b))
    if len(f) < len(g):
        f, g = g, f
    while g:
        r = primitive(pseudo_rem(f, g))
        f, g = g, r
    if f and f[-1] < 0:
        f = neg(f)
    return f


def squarefree_part(a: Sequence[int]) -> Coeffs:
    """Primitive squarefree part (same distinct roots, multiplicity one)."""
    if degree(a) < 1:
        return primitive(list(a)) or list(a)
    g = poly_gcd(a, deriv(a))
    if degree(g) == 0:
        return primitive(list(a))
    q, r = divmod_exact(primitive(list(a)), g)
    assert not r
    return primitive(q)


def squarefree_decomposition(a: Sequence[int]) -> list[tuple[Coeffs, int]]:
    """Yun decomposition: a = const * prod(f_i ** i) with f_i squarefree, coprime.

    Returns the list of (f_i, i) with deg f_i >= 1.
    """
    a = primitive(list(a))
    if degree(a) < 1:
        return []
    out: list[tuple[Coeffs, int]] = []
    g = poly_gcd(a, deriv(a))
    if degree(g) == 0:
        return [(a if a[-1] > 0 else neg(a), 1)]
    w, _ = divmod_exact(a, g)
    i = 1
    while degree(w) >= 1:
        y = poly_gcd(w, g)
        f, _ = divmod_exact(w, y)
        if degree(f) >= 1:
            out.append((f if f[-1] > 0 else neg(f), i))
        g2, _ = divmod_exact(g, y)
        w, g = y, g2
        i += 1
    return out


def sturm_chain(p: Sequence[int]) -> list[Coeffs]:
    """Sturm chain of a squarefree primitive polynomial.

    Remainders are normalised to primitive parts; the sign bookkeeping keeps
    each chain entry a positive multiple of the rational Sturm sequence entry,
    which is all that sign-variation counting needs.
    """
    f0 = primitive(list(p))
    chain = [f0, primitive(deriv(f0))]
    while chain[-1] and degree(chain[-1]) >= 0:
        a, b = chain[-2], chain[-1]
        if degree(b) < 0:
            break
        r = pseudo_rem(a, b)
        if not r:
            break
        # pseudo_rem multiplies a by lc(b)**steps; a negative odd multiplier flips sign
        steps = len(a) - len(b) + 1
        if steps > 0 and b[-1] < 0 and steps % 2 == 1:
            r = neg(r)
        chain.append(primitive(neg(r)))
        if degree(chain[-1]) == 0:
            break
    return chain


def _variations(signs: Iterable[int]) -> int:
    v = 0
    prev = 0
    for s in signs:
        if s == 0:
            continue
        if prev and s != prev:
            v += 1
        prev = s
    return v


def variations_at(chain: Sequence[Sequence[int]], x: Fraction) -> int:
    return _variations(sign_at(f, x) for f in chain)


def variations_at_neg_inf(chain: Sequence[Sequence[int]]) -> int:
    return _variations(
        (f[-1] if (len(f) - 1) % 2 == 0 else -f[-1]) if f else 0 for f in chain
    )


def variations_at_pos_inf(chain: Sequence[Sequence[int]]) -> int:
    return _variations(f[-1] if f else 0 for f in chain)


def count_roots_halfopen(chain: Sequence[Sequence[int]], lo: Fraction, hi: Fraction) -> int:
    """Number of distinct real roots in (lo, hi] of the chain's head polynomial."""
    return variations_at(chain, lo) - variations_at(chain, hi)


def sturm_count(p: Sequence[int], lo: Fraction, hi: Fraction) -> int:
    """Distinct real roots of squarefree p in the half-open interval (lo, hi]."""
    if not p:
        raise NotSquarefree("zero polynomial")
    if degree(p) >= 1:
        g = poly_gcd(p, deriv(p))
        if degree(g) != 0:
            raise NotSquarefree("input has a repeated root")
    if not lo < hi:
        raise ValueError("need lo < hi")
    if degree(p) == 0:
        return 0
    return count_roots_halfopen(sturm_chain(p), lo, hi)


def root_bound(p: Sequence[int]) -> int:
    """Integer Cauchy bound: all real roots lie in (-B, B]."""
    if degree(p) < 1:
        return 1
    lead = abs(p[-1])
    m = max(abs(c) for c in p[:-1])
    return 1 + (m + lead - 1) // lead


def isolate_real_roots(p: Sequence[int]) -> list[tuple[Fraction, Fraction]]:
    """Disjoint half-open isolating intervals (lo, hi] for a squarefree p.

    Bisection on Sturm counts; each returned interval contains exactly one
    real root.
    """
    if degree(p) < 1:
        return []
    chain = sturm_chain(p)
    b = root_bound(p)
    lo, hi = Fraction(-b), Fraction(b)
    total = count_roots_halfopen(chain, lo, hi)
    out: list[tuple[Fraction, Fraction]] = []
    stack = [(lo, hi, total)]
    while stack:
        a, c, k = stack.pop()
        if k == 0:
            continue
        if k == 1:
            out.append((a, c))
            continue
        m = (a + c) / 2
        kl = count_roots_halfopen(chain, a, m)
        stack.append((a, m, kl))
        stack.append((m, c, k - kl))
    out.sort()
    return out


def refine_root(p: Sequence[int], lo: Fraction, hi: Fraction, width: Fraction) -> tuple[Fraction, Fraction]:
    """Shrink an isolating interval (lo, hi] of squarefree p to at most `width`.

    The interval must contain exactly one (simple) root.  Plain sign bisection;
    an exact rational hit collapses to a point interval (lo == hi == root).
    Either endpoint of the input may itself be a root of p: hi being a root
    means hi *is* the isolated root, while a root at lo is excluded by
    half-openness and is bisected away before the main loop.
    """
    s_hi = sign_at(p, hi)
    if s_hi == 0:
        return hi, hi
    s_lo = sign_at(p, lo)
    while s_lo == 0:
        mid = (lo + hi) / 2
        s = sign_at(p, mid)
        if s == 0:
            return mid, mid
        if s != s_hi:
            lo, s_lo = mid, s
        else:
            hi = mid
    while hi - lo > width:
        mid = (lo + hi) / 2
        s_mid = sign_at(p, mid)
        if s_mid == 0:
            return mid, mid
        if s_mid == s_lo:
            lo = mid
        else:
            hi = mid
    return lo, hi


@dataclass(frozen=True)
class IntPolynomial:
    """Dense integer polynomial, coefficients in ascending degree order."""

    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        c = self.coeffs
        if c and c[-1] == 0:
            object.__setattr__(self, "coeffs", tuple(trim(list(c))))

    @classmethod
    def from_list(cls, coeffs: Iterable[int]) -> "IntPolynomial":
        return cls(tuple(int(c) for c in coeffs))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def require_monic(self) -> None:
        if not self.is_monic:
            raise NotMonic(f"expected a monic polynomial, got {list(self.coeffs)}")

    def __call__(self, x: int) -> int:
        return eval_int(self.coeffs, x)

    def __mul__(self, other: "IntPolynomial") -> "IntPolynomial":
        return IntPolynomial(tuple(mul(self.coeffs, other.coeffs)))

    def __repr__(self) -> str:
        return f"IntPolynomial({list(self.coeffs)})"
