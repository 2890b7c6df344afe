"""Combinatorics of minus-one classes in the odd unimodular lattice I^{1,n}.

Vectors are integer tuples (v_0, ..., v_n): coefficients in an orthogonal
basis (H, E_1, ..., E_n) with H^2 = 1 and E_i^2 = -1, so the bilinear form is
dot(u, v) = u_0 v_0 - sum u_i v_i.  The degree-two case n = 7 carries all the
assertions; n = 6 and n = 8 are kept as sanity anchors for the enumerator
(27 and 240 classes).

A "clique" is four classes pairwise meeting once; an "exceptional set" is
seven pairwise disjoint classes, i.e. a blow-down to the plane.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations
from math import isqrt

Vec = tuple[int, ...]


def dot(u: Vec, v: Vec) -> int:
    return u[0] * v[0] - sum(a * b for a, b in zip(u[1:], v[1:]))


def canonical_class(n: int = 7) -> Vec:
    return (-3,) + (1,) * n


def is_exceptional(v: Vec, n: int = 7) -> bool:
    return dot(v, v) == -1 and dot(v, canonical_class(n)) == -1


@lru_cache(maxsize=None)
def exceptional_vectors(n: int = 7) -> tuple[Vec, ...]:
    """All v with v.v = -1 and v.K = -1, by bounded exhaustive search.

    The degree v_0 is bounded by Cauchy-Schwarz: the tail must satisfy
    (sum v_i)^2 <= n * sum v_i^2 with sum v_i = 1 - 3 v_0 and
    sum v_i^2 = v_0^2 + 1.  The search walks degrees well past that window
    so exhaustiveness is verified rather than assumed.
    """
    out = []
    for v0 in range(-3, 10):
        target_sum = 1 - 3 * v0
        target_sq = v0 * v0 + 1
        if target_sq < 0 or target_sum * target_sum > n * target_sq:
            continue
        out.extend((v0,) + tail for tail in _tails(n, target_sum, target_sq))
    return tuple(sorted(out))


def _tails(k: int, total: int, total_sq: int):
    """Integer k-tuples with the given sum and sum of squares.

    Branches are pruned by Cauchy-Schwarz on the remaining coordinates:
    a feasible tail of length k-1 needs rem^2 <= (k-1) * rem_sq.
    """
    if k == 0:
        if total == 0 and total_sq == 0:
            yield ()
        return
    bound = isqrt(total_sq)
    for x in range(-bound, bound + 1):
        rem, rem_sq = total - x, total_sq - x * x
        if rem * rem > (k - 1) * rem_sq:
            continue
        for tail in _tails(k - 1, rem, rem_sq):
            yield (x,) + tail


def dual(v: Vec) -> Vec:
    """The partner class with v + dual(v) equal to the anticanonical class."""
    n = len(v) - 1
    if not is_exceptional(v, n):
        raise ValueError(f"{v} is not an exceptional class")
    k = canonical_class(n)
    return tuple(-kc - vc for kc, vc in zip(k, v))


def dual_pairs(n: int = 7) -> tuple[tuple[Vec, Vec], ...]:
    seen = set()
    pairs = []
    for v in exceptional_vectors(n):
        w = dual(v)
        if v in seen or w in seen:
            continue
        seen.update((v, w))
        pairs.append((min(v, w), max(v, w)))
    return tuple(sorted(pairs))


@lru_cache(maxsize=None)
def _meet_matrix(n: int = 7):
    vecs = exceptional_vectors(n)
    return vecs, [[dot(u, v) for v in vecs] for u in vecs]


@lru_cache(maxsize=None)
def enumerate_cliques() -> tuple[tuple[Vec, Vec, Vec, Vec], ...]:
    """All 4-subsets of the 56 classes with every pairwise product 1."""
    vecs, m = _meet_matrix(7)
    idx = range(len(vecs))
    out = []
    for a, b in combinations(idx, 2):
        if m[a][b] != 1:
            continue
        for c in range(b + 1, len(vecs)):
            if m[a][c] == 1 and m[b][c] == 1:
                for d in range(c + 1, len(vecs)):
                    if m[a][d] == 1 and m[b][d] == 1 and m[c][d] == 1:
                        out.append((vecs[a], vecs[b], vecs[c], vecs[d]))
    return tuple(out)


@lru_cache(maxsize=None)
def enumerate_exceptional_sets() -> tuple[tuple[Vec, ...], ...]:
    """All unordered 7-subsets of the 56 classes, pairwise orthogonal."""
    vecs, m = _meet_matrix(7)
    n = len(vecs)
    neighbors = [frozenset(j for j in range(n) if j != i and m[i][j] == 0) for i in range(n)]
    out = []

    def extend(chosen: list[int], candidates):
        if len(chosen) == 7:
            out.append(tuple(vecs[i] for i in chosen))
            return
        for i in sorted(candidates):
            extend(chosen + [i], {j for j in candidates if j > i} & neighbors[i])

    extend([], frozenset(range(n)))
    return tuple(out)


def disjoint_exceptional_sets(clique, avoid_dual: bool = False, first_only: bool = False):
    """Exceptional sets sharing no member with the clique.

    Disjointness means the blow-down contracts none of the four classes; the
    contracted curves may of course still meet them.  With ``avoid_dual`` the
    sets must avoid the four dual classes as well, which is exactly the
    condition making every clique member a line or a conic downstairs.
    ``first_only`` stops at the first witness, for existence checks.
    """
    walls = set(clique)
    if avoid_dual:
        walls |= {dual(v) for v in clique}
    out = []
    for s in enumerate_exceptional_sets():
        if walls.isdisjoint(s):
            out.append(s)
            if first_only:
                break
    return tuple(out)


def blowdown_degree_class(exc_set) -> Vec:
    """The degree class of the blow-down given by an exceptional set.

    Solves -3 h + sum(members) = K; the result is integral, of square 1,
    and orthogonal to every member.
    """
    n = len(exc_set[0]) - 1
    k = canonical_class(n)
    sums = [sum(v[c] for v in exc_set) for c in range(n + 1)]
    h = []
    for c in range(n + 1):
        num = sums[c] - k[c]
        if num % 3 != 0:
            raise ValueError("set does not define a blow-down")
        h.append(num // 3)
    hv = tuple(h)
    assert dot(hv, hv) == 1 and all(dot(hv, v) == 0 for v in exc_set)
    return hv


def classify_clique_images(clique, exc_set) -> tuple[int, ...]:
    """Sorted degrees of the clique members in the blow-down of the set.

    Degree 0 means the member is contracted (it lies in the set); degree 3
    means its dual is.  Any pair of clique and exceptional set classifies.
    """
    h = blowdown_degree_class(exc_set)
    return tuple(sorted(dot(v, h) for v in clique))


DEGREE_PATTERNS = ((0, 1, 2, 3), (0, 2, 2, 2), (1, 1, 1, 3), (1, 1, 2, 2))


def completion_determinant(exc_set) -> int:
    """Determinant of (degree class, members) as a basis change of I^{1,7}."""
    h = blowdown_degree_class(exc_set)
    rows = [list(h)] + [list(v) for v in exc_set]
    return _int_det(rows)


def _int_det(rows) -> int:
    from fractions import Fraction

    n = len(rows)
    m = [[Fraction(x) for x in row] for row in rows]
    det = Fraction(1)
    for col in range(n):
        piv = next((r for r in range(col, n) if m[r][col] != 0), None)
        if piv is None:
            return 0
        if piv != col:
            m[col], m[piv] = m[piv], m[col]
            det = -det
        det *= m[col][col]
        inv = 1 / m[col][col]
        m[col] = [x * inv for x in m[col]]
        for r in range(col + 1, n):
            if m[r][col] != 0:
                f = m[r][col]
                m[r] = [x - f * y for x, y in zip(m[r], m[col])]
    assert det.denominator == 1
    return int(det)
