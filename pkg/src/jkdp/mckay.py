"""Irreducible representations of 1/r(1,a), special weights, and the McKay quiver.

A representation is identified with its weight, a residue mod r.  The group
acts on coordinates with weights (1, a), so tensoring by the two-dimensional
natural representation adds 1 or a to the weight, and tensoring by its
determinant adds a + 1.  The quiver records the Ext-dimensions between the
simple sheaves supported at the quotient of the origin: solid arrows for
Ext^1, dashed arrows for Ext^2.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .cyclic import CyclicType, hj_expand, i_series


def canonical_weight(t: CyclicType, value: int) -> int:
    return value % t.r


@lru_cache(maxsize=None)
def special_weights(t: CyclicType) -> frozenset[int]:
    """Weights of the special representations: 0 together with i_1, ..., i_n mod r.

    There are exactly n+1 of them, one per exceptional curve plus the trivial
    weight.
    """
    ser = i_series(t)
    weights = {0} | {v % t.r for v in ser.values[1:-1]}
    assert len(weights) == hj_expand(t).n + 1
    return frozenset(weights)


def simple_ext_dims(t: CyclicType, mu: int, nu: int) -> tuple[int, int, int]:
    """(hom, ext1, ext2) between the simple sheaves of weights mu and nu.

    hom is the Kronecker delta; ext1 counts how many of the two coordinate
    weights {1, a} carry mu to nu (so it is 2 exactly when a = 1 and
    nu = mu + 1); ext2 is 1 exactly when nu = mu + a + 1 mod r.
    """
    mu, nu = mu % t.r, nu % t.r
    hom = 1 if mu == nu else 0
    ext1 = sum(1 for w in (1, t.a) if (mu + w) % t.r == nu)
    ext2 = 1 if (mu + t.a + 1) % t.r == nu else 0
    return hom, ext1, ext2


def euler_pairing_simples(t: CyclicType, mu: int, nu: int) -> int:
    hom, ext1, ext2 = simple_ext_dims(t, mu, nu)
    return hom - ext1 + ext2


@dataclass(frozen=True)
class McKayQuiver:
    """Vertices 0..r-1; edges with multiplicity, ordered deterministically."""

    r: int
    solid_edges: tuple[tuple[int, int], ...]
    dashed_edges: tuple[tuple[int, int], ...]

    def _counts(self, edges):
        out: dict[tuple[int, int], int] = {}
        for e in edges:
            out[e] = out.get(e, 0) + 1
        return out

    def solid_multiplicity(self, mu: int, nu: int) -> int:
        return self._counts(self.solid_edges).get((mu % self.r, nu % self.r), 0)

    def dashed_multiplicity(self, mu: int, nu: int) -> int:
        return self._counts(self.dashed_edges).get((mu % self.r, nu % self.r), 0)


@lru_cache(maxsize=None)
def mckay_quiver(t: CyclicType) -> McKayQuiver:
    solid = []
    dashed = []
    for mu in range(t.r):
        for nu in range(t.r):
            _, e1, e2 = simple_ext_dims(t, mu, nu)
            solid.extend([(mu, nu)] * e1)
            dashed.extend([(mu, nu)] * e2)
    return McKayQuiver(t.r, tuple(sorted(solid)), tuple(sorted(dashed)))


def quiver_dot(q: McKayQuiver) -> str:
    """Render the quiver in DOT format.

    Vertices are labeled r0..r{r-1}; multiple arrows are emitted as parallel
    edges; Ext^2 arrows get style=dashed.  Ordering is fixed (ascending
    source, then target) so output is byte-deterministic.
    """
    lines = ["digraph mckay {"]
    for v in range(q.r):
        lines.append(f'  r{v} [label="r{v}"];')
    for mu, nu in q.solid_edges:
        lines.append(f"  r{mu} -> r{nu};")
    for mu, nu in q.dashed_edges:
        lines.append(f"  r{mu} -> r{nu} [style=dashed];")
    lines.append("}")
    return "\n".join(lines) + "\n"
