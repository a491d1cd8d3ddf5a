"""Equivalence of integer symmetric matrices under signed permutations.

Two matrices are equivalent when B = +-P^T A P for a signed permutation
matrix P; equivalently one is carried to the other by a vertex permutation,
a switching, and possibly a global sign change.  `canonical_key` computes an
exact canonical form for this group, used everywhere for deduplication.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import IndexOutOfRange, SizeMismatch, TooLarge
from .graphs import ChargedSignedGraph, _check_subset

CANON_MAX_N = 20
_SENTINEL = (1 << 30,)


@dataclass(frozen=True)
class SignedPermutation:
    """A permutation of vertices together with a sign per vertex."""

    perm: tuple[int, ...]
    signs: tuple[int, ...]

    def __post_init__(self) -> None:
        n = len(self.perm)
        if sorted(self.perm) != list(range(n)) or len(self.signs) != n:
            raise ValueError("not a signed permutation")
        if any(s not in (-1, 1) for s in self.signs):
            raise ValueError("signs must be +-1")

    @classmethod
    def identity(cls, n: int) -> "SignedPermutation":
        return cls(tuple(range(n)), (1,) * n)

    def compose(self, first: "SignedPermutation") -> "SignedPermutation":
        """self after first (apply `first`, then `self`)."""
        if len(self.perm) != len(first.perm):
            raise SizeMismatch("signed permutations of different sizes")
        perm = tuple(self.perm[first.perm[i]] for i in range(len(self.perm)))
        signs = tuple(first.signs[i] * self.signs[first.perm[i]] for i in range(len(self.perm)))
        return SignedPermutation(perm, signs)


def switch(g: ChargedSignedGraph, subset: Iterable[int]) -> ChargedSignedGraph:
    """Negate every edge with exactly one endpoint in the subset; charges unchanged."""
    vs = set(_check_subset(g, subset))
    rows = []
    for i in range(g.n):
        flip_i = i in vs
        rows.append(
            tuple(
                -x if (flip_i != (j in vs)) else x
                for j, x in enumerate(g.entries[i])
            )
        )
    return ChargedSignedGraph(g.n, tuple(rows))


def apply(g: ChargedSignedGraph, t: SignedPermutation) -> ChargedSignedGraph:
    """B with B[perm(i)][perm(j)] = signs(i) * signs(j) * A[i][j]."""
    if len(t.perm) != g.n:
        raise SizeMismatch(f"permutation of size {len(t.perm)} on graph of order {g.n}")
    out = [[0] * g.n for _ in range(g.n)]
    for i in range(g.n):
        pi, si = t.perm[i], t.signs[i]
        row = g.entries[i]
        for j in range(g.n):
            out[pi][t.perm[j]] = si * t.signs[j] * row[j]
    return ChargedSignedGraph(g.n, tuple(tuple(r) for r in out))


def negate(g: ChargedSignedGraph) -> ChargedSignedGraph:
    return ChargedSignedGraph(g.n, tuple(tuple(-x for x in row) for row in g.entries))


@dataclass(frozen=True)
class CanonicalKey:
    """Canonical form of a graph under signed permutation and global negation.

    `data` serialises the lexicographically minimal lower triangle; equal data
    means equivalent graphs.  `negated` records whether the minimum was
    attained on the negated matrix (bookkeeping only; not part of equality).
    """

    data: bytes
    negated: bool = field(compare=False)

    def hex(self) -> str:
        return self.data.hex()


def _canon_rows_reference(mat: Sequence[Sequence[int]]) -> list[tuple[int, ...]]:
    """Plain backtracking lex-min search; oracle for the pruned version."""
    n = len(mat)
    if n == 0:
        return []
    best: list[tuple[int, ...]] = [_SENTINEL] * n
    order: list[int] = []
    signs: list[int] = []
    used = [False] * n
    cur: list[tuple[int, ...]] = []

    def explore(k: int) -> None:
        nonlocal best
        cands: list[tuple[tuple[int, ...], int, int]] = []
        for v in range(n):
            if used[v]:
                continue
            rv = mat[v]
            off = [signs[j] * rv[order[j]] for j in range(k)]
            first = next((x for x in off if x), 0)
            if first == 0:
                row = tuple(off) + (rv[v],)
                cands.append((row, v, 1))
                if k > 0:
                    cands.append((row, v, -1))
            else:
                s = -1 if first > 0 else 1
                row = tuple(s * x for x in off) + (rv[v],)
                cands.append((row, v, s))
        cands.sort(key=lambda c: c[0])
        for row, v, s in cands:
            if row > best[k]:
                break
            if row < best[k]:
                best = cur[:k] + [row] + [_SENTINEL] * (n - k - 1)
            used[v] = True
            order.append(v)
            signs.append(s)
            cur.append(row)
            if k + 1 == n:
                best = cur[:]
            else:
                explore(k + 1)
            used[v] = False
            order.pop()
            signs.pop()
            cur.pop()

    explore(0)
    return best


def _canon_rows(mat: Sequence[Sequence[int]]) -> list[tuple[int, ...]]:
    """Lex-minimal lower-triangle rows over all signed permutations of `mat`.

    Backtracks over target positions.  The sign of each placed vertex is
    forced greedily (first nonzero of its partial row made negative, which is
    lexicographically optimal), branching only when the partial row is all
    zero; the first vertex's sign is fixed since a global flip acts trivially.

    When a finished labeling ties the incumbent exactly, the labeling composed
    with the incumbent's is an automorphism, so the subtree being explored is
    the image of an already-searched one and the search backjumps to the
    level where the two labelings diverge.  This keeps highly symmetric
    inputs (where ties abound) close to linear in the number of vertices per
    automorphism instead of exponential.
    """
    n = len(mat)
    if n == 0:
        return []
    no_jump = n + 1
    best: list[tuple[int, ...]] = [_SENTINEL] * n
    best_order: list[int] = []
    best_signs: list[int] = []
    best_complete = False
    order: list[int] = []
    signs: list[int] = []
    used = [False] * n
    cur: list[tuple[int, ...]] = []

    def explore(k: int, improved: bool) -> int:
        nonlocal best, best_order, best_signs, best_complete
        cands: list[tuple[tuple[int, ...], int, int]] = []
        for v in range(n):
            if used[v]:
                continue
            rv = mat[v]
            off = [signs[j] * rv[order[j]] for j in range(k)]
            first = next((x for x in off if x), 0)
            if first == 0:
                row = tuple(off) + (rv[v],)
                cands.append((row, v, 1))
                if k > 0:
                    cands.append((row, v, -1))
            else:
                s = -1 if first > 0 else 1
                row = tuple(s * x for x in off) + (rv[v],)
                cands.append((row, v, s))
        cands.sort(key=lambda c: c[0])
        for row, v, s in cands:
            if row > best[k]:
                break
            child_improved = improved
            if row < best[k]:
                best = cur[:k] + [row] + [_SENTINEL] * (n - k - 1)
                best_complete = False
                child_improved = True
            used[v] = True
            order.append(v)
            signs.append(s)
            cur.append(row)
            if k + 1 == n:
                if child_improved or not best_complete:
                    best = cur[:]
                    best_order = order[:]
                    best_signs = signs[:]
                    best_complete = True
                    res = no_jump
                else:
                    # pure tie: backjump to the first level where the
                    # labelings diverge; that subtree's minimum is already best
                    res = no_jump
                    for j in range(n):
                        if order[j] != best_order[j] or signs[j] != best_signs[j]:
                            res = j
                            break
            else:
                res = explore(k + 1, child_improved)
            used[v] = False
            order.pop()
            signs.pop()
            cur.pop()
            if res < k:
                return res
        return no_jump

    explore(0, False)
    return best


def _rows_to_bytes(rows: list[tuple[int, ...]]) -> bytes:
    out = bytearray()
    for r in rows:
        out.extend(x + 128 for x in r)
    return bytes(out)


def _rows_to_matrix(rows: list[tuple[int, ...]], n: int) -> ChargedSignedGraph:
    mat = [[0] * n for _ in range(n)]
    for i, r in enumerate(rows):
        for j, x in enumerate(r):
            mat[i][j] = x
            mat[j][i] = x
    return ChargedSignedGraph(n, tuple(tuple(r) for r in mat))


def _check_canonizable(g: ChargedSignedGraph, max_n: int) -> None:
    if g.n > max_n:
        raise TooLarge(f"canonical form limited to {max_n} vertices, got {g.n}")
    if g.max_entry_abs() > 127:
        raise TooLarge("canonical form limited to entries of modulus at most 127")


def canonical_key(g: ChargedSignedGraph, max_n: int = CANON_MAX_N) -> CanonicalKey:
    """Canonical key under signed permutations, switchings and global negation."""
    _check_canonizable(g, max_n)
    rows_pos = _canon_rows(g.entries)
    rows_neg = _canon_rows(tuple(tuple(-x for x in r) for r in g.entries))
    if rows_neg < rows_pos:
        return CanonicalKey(_rows_to_bytes(rows_neg), True)
    return CanonicalKey(_rows_to_bytes(rows_pos), False)


def canonical_form(g: ChargedSignedGraph, max_n: int = CANON_MAX_N) -> tuple[ChargedSignedGraph, CanonicalKey]:
    """Canonical representative graph plus its key."""
    _check_canonizable(g, max_n)
    rows_pos = _canon_rows(g.entries)
    rows_neg = _canon_rows(tuple(tuple(-x for x in r) for r in g.entries))
    rows, neg = (rows_neg, True) if rows_neg < rows_pos else (rows_pos, False)
    return _rows_to_matrix(rows, g.n), CanonicalKey(_rows_to_bytes(rows), neg)


def are_equivalent(g: ChargedSignedGraph, h: ChargedSignedGraph) -> bool:
    """True iff h = +-P^T g P for some signed permutation P."""
    if g.n != h.n:
        return False
    if g.n == 0:
        return True
    # cheap invariant screens before the canonical forms
    if sorted(map(sum, _abs_rows(g))) != sorted(map(sum, _abs_rows(h))):
        return False
    return canonical_key(g) == canonical_key(h)


def _abs_rows(g: ChargedSignedGraph) -> list[list[int]]:
    return [[abs(x) for x in row] for row in g.entries]
