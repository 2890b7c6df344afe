"""Universal-extension construction of a tilting object from a collection
whose forward morphisms live in degrees 0 and 1 only.

The sweep walks the collection left to right.  Whenever the current head
still has Ext^1 into a later slot, that slot is replaced by the universal
extension (triangle  old -> new -> head^r), which kills the Ext^1 by
construction.  Dimensions against the new object are propagated through
the two long exact sequences; a dimension the sequences do not pin down is
carried as an interval and reported as undetermined, never guessed.  The
one piece of non-formal input is that the connecting map of a universal
extension hits all of Ext^1(head, old), which is what universality means.
"""

from __future__ import annotations

from dataclasses import dataclass
from .cyclic import ValidationError
from .excoll import SymbolicObject, build, hom_dims, kclass_of_object
from .surface import KClass, build_surface

_INF = 10**9
DEG_LO, DEG_HI = -3, 5  # working window of homological degrees


@dataclass(frozen=True)
class Summand:
    """A leaf object or the universal extension of one summand by another."""

    obj: SymbolicObject | None = None
    target: "Summand | None" = None
    head: "Summand | None" = None
    copies: int = 0

    @staticmethod
    def leaf(obj: SymbolicObject) -> "Summand":
        return Summand(obj=obj)

    @staticmethod
    def extension(target: "Summand", head: "Summand", copies: int) -> "Summand":
        return Summand(target=target, head=head, copies=copies)

    @property
    def is_leaf(self) -> bool:
        return self.obj is not None

    def label(self) -> str:
        if self.is_leaf:
            return self.obj.label()
        return f"({self.target.label()} : {self.head.label()}^{self.copies})"

    def class_vector(self, basis: list[SymbolicObject]) -> tuple[int, ...]:
        if self.is_leaf:
            return tuple(1 if o == self.obj else 0 for o in basis)
        t = self.target.class_vector(basis)
        h = self.head.class_vector(basis)
        return tuple(a + self.copies * b for a, b in zip(t, h))


Interval = tuple[int, int]


def _exact(v: int) -> Interval:
    return (v, v)


def _solve_exact_sequence(
    terms: list[Interval], pinned: dict[int, Interval]
) -> list[Interval]:
    """Feasible dimension intervals in an exact sequence flanked by zeros.

    Exactness means term_i = rank_{i-1} + rank_i for map ranks >= 0 with
    rank_{-1} = rank_last = 0; ``pinned`` constrains the rank of selected
    maps.  Interval constraint propagation runs to a fixpoint.
    """
    n = len(terms)
    ranks: list[Interval] = [(0, _INF)] * (n + 1)
    ranks[0] = ranks[n] = (0, 0)
    for pos, iv in pinned.items():
        ranks[pos] = iv
    terms = list(terms)
    for _ in range(4 * n):
        changed = False
        for i in range(n):
            lo = max(terms[i][0], ranks[i][0] + ranks[i + 1][0])
            hi = min(terms[i][1], ranks[i][1] + ranks[i + 1][1])
            if (lo, hi) != terms[i]:
                terms[i] = (lo, hi)
                changed = True
            if lo > hi:
                raise ValidationError("infeasible exact sequence")
            # rank_i = term_i - rank_{i+1} and symmetrically
            for a, b in ((i, i + 1), (i + 1, i)):
                lo_r = max(ranks[a][0], terms[i][0] - ranks[b][1])
                hi_r = min(ranks[a][1], terms[i][1] - ranks[b][0])
                if (lo_r, hi_r) != ranks[a]:
                    ranks[a] = (lo_r, hi_r)
                    changed = True
                if lo_r > hi_r:
                    raise ValidationError("infeasible exact sequence")
        if not changed:
            break
    return terms


class DimsTracker:
    """Ext dimensions between summands, as intervals per degree."""

    def __init__(self, k: int):
        self.k = k
        self._cache: dict[tuple[Summand, Summand], dict[int, Interval]] = {}

    def dims(self, x: Summand, y: Summand) -> dict[int, Interval]:
        key = (x, y)
        if key not in self._cache:
            self._cache[key] = self._compute(x, y)
        return self._cache[key]

    def ext(self, x: Summand, y: Summand, degree: int) -> Interval:
        return self.dims(x, y).get(degree, (0, 0))

    def determined_ext1(self, x: Summand, y: Summand) -> int | None:
        lo, hi = self.ext(x, y, 1)
        return lo if lo == hi else None

    def _compute(self, x: Summand, y: Summand) -> dict[int, Interval]:
        if x.is_leaf and y.is_leaf:
            d = hom_dims(self.k, x.obj, y.obj)
            if not d.known:
                raise ValidationError(
                    f"dimensions of ({x.label()}, {y.label()}) are not covered by the rules"
                )
            return {deg: _exact(v) for deg, v in enumerate(d.triple()) if v != 0}
        # both long exact sequences constrain the answer; intersect them
        routes = []
        if not y.is_leaf:
            routes.append(self._via_covariant(x, y))
        if not x.is_leaf:
            routes.append(self._via_contravariant(x, y))
        out: dict[int, Interval] = {}
        for deg in range(DEG_LO, DEG_HI + 1):
            lo = max(r.get(deg, (0, 0))[0] for r in routes)
            hi = min(r.get(deg, (0, 0))[1] for r in routes)
            if lo > hi:
                raise ValidationError(
                    f"inconsistent sequences for ({x.label()}, {y.label()}) in degree {deg}"
                )
            if (lo, hi) != (0, 0):
                out[deg] = (lo, hi)
        return out

    def _via_covariant(self, x: Summand, y: Summand) -> dict[int, Interval]:
        # triangle target -> y -> head^copies, apply Hom(x, -)
        a, c, r = y.target, y.head, y.copies
        da, dc = self.dims(x, a), self.dims(x, c)
        terms: list[Interval] = []
        index_of_unknown: dict[int, int] = {}
        pinned: dict[int, Interval] = {}
        for deg in range(DEG_LO, DEG_HI + 1):
            terms.append(da.get(deg, (0, 0)))
            index_of_unknown[deg] = len(terms)
            terms.append((0, _INF))
            iv = dc.get(deg, (0, 0))
            terms.append((r * iv[0], r * iv[1] if iv[1] < _INF else _INF))
            if x == c and deg == 0:
                # the connecting map of a universal extension is onto
                # Ext^1(head, target), whose dimension is the copy count
                pinned[len(terms)] = _exact(r)
        solved = _solve_exact_sequence(terms, pinned)
        return {
            deg: solved[index_of_unknown[deg]]
            for deg in range(DEG_LO, DEG_HI + 1)
            if solved[index_of_unknown[deg]] != (0, 0)
        }

    def _via_contravariant(self, x: Summand, y: Summand) -> dict[int, Interval]:
        # triangle target -> x -> head^copies, apply Hom(-, y)
        a, c, r = x.target, x.head, x.copies
        da, dc = self.dims(a, y), self.dims(c, y)
        terms: list[Interval] = []
        index_of_unknown: dict[int, int] = {}
        pinned: dict[int, Interval] = {}
        for deg in range(DEG_LO, DEG_HI + 1):
            iv = dc.get(deg, (0, 0))
            terms.append((r * iv[0], r * iv[1] if iv[1] < _INF else _INF))
            index_of_unknown[deg] = len(terms)
            terms.append((0, _INF))
            terms.append(da.get(deg, (0, 0)))
            if y == a and deg == 0:
                # the identity of the target composes to the nonzero
                # triangle class, so this connecting map has rank >= 1
                pinned[len(terms)] = (1, _INF)
        solved = _solve_exact_sequence(terms, pinned)
        return {
            deg: solved[index_of_unknown[deg]]
            for deg in range(DEG_LO, DEG_HI + 1)
            if solved[index_of_unknown[deg]] != (0, 0)
        }


@dataclass(frozen=True)
class TiltingStep:
    head: str
    target: str
    copies: int


@dataclass(frozen=True)
class SummandReport:
    label: str
    class_vector: tuple[int, ...]
    kclass: KClass | None


@dataclass(frozen=True)
class TiltingResult:
    k: int
    label: str
    steps: tuple[TiltingStep, ...]
    summands: tuple[SummandReport, ...]
    undetermined: tuple[tuple[str, str, int], ...]
    nonvanishing: tuple[tuple[str, str, int, int], ...]

    @property
    def unchanged(self) -> bool:
        return not self.steps

    @property
    def certified(self) -> bool:
        return not self.undetermined and not self.nonvanishing


def universal_extension_tilting(k: int, label: str = "sigma_mut") -> TiltingResult:
    """Run the sweep on a collection and certify the result.

    Precondition checked first: every pair of the collection has known
    dimensions, forward maps only in degrees 0 and 1, nothing backward.
    """
    coll = build(k, label)
    objects = list(coll.objects)
    n = len(objects)
    for r in range(n):
        for c in range(n):
            d = hom_dims(k, objects[r], objects[c])
            if not d.known:
                raise ValidationError(
                    f"pair ({objects[r].label()}, {objects[c].label()}) has unknown dimensions"
                )
            if d.ext2 != 0:
                raise ValidationError("collection has morphisms beyond degree 1")
            if c <= r and r != c and d.triple() != (0, 0, 0):
                raise ValidationError("collection has backward morphisms")

    tracker = DimsTracker(k)
    slots = [Summand.leaf(o) for o in objects]
    steps: list[TiltingStep] = []
    undetermined: list[tuple[str, str, int]] = []
    for i in range(n):
        for j in range(i + 1, n):
            r = tracker.determined_ext1(slots[i], slots[j])
            if r is None:
                undetermined.append((slots[i].label(), slots[j].label(), 1))
                continue
            if r > 0:
                slots[j] = Summand.extension(slots[j], slots[i], r)
                steps.append(TiltingStep(slots[i].label(), slots[j].target.label(), r))

    nonvanishing: list[tuple[str, str, int, int]] = []
    for x in slots:
        for y in slots:
            for deg, iv in tracker.dims(x, y).items():
                if deg == 0:
                    continue
                if iv == (0, 0):
                    continue
                if iv[0] == iv[1]:
                    nonvanishing.append((x.label(), y.label(), deg, iv[0]))
                else:
                    undetermined.append((x.label(), y.label(), deg))

    model = build_surface(k)
    summands = []
    for s in slots:
        kcls: KClass | None = None
        if label in ("sigma", "sigma_mut"):
            kcls = _summand_kclass(model, s)
        summands.append(SummandReport(s.label(), s.class_vector(objects), kcls))
    return TiltingResult(
        k,
        label,
        tuple(steps),
        tuple(summands),
        tuple(undetermined),
        tuple(nonvanishing),
    )


def _summand_kclass(model, s: Summand) -> KClass:
    if s.is_leaf:
        return kclass_of_object(model, s.obj)
    t = _summand_kclass(model, s.target)
    h = _summand_kclass(model, s.head)
    return t + h.scale(s.copies)
