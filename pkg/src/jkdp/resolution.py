"""The minimal resolution chain of 1/r(1,a) and images of simple sheaves.

Two independent computations of the same object live here.

``psi_simple`` evaluates the closed three-case formula for the image of a
simple sheaf under the adjoint of the resolution embedding: a twisted
structure sheaf of the fundamental cycle in shift 1, a degree -alpha_t + 1
line bundle on a single curve, or zero.

``psi_toric_oracle`` recomputes the same image purely by divisor arithmetic
on the toric resolution: it builds the section divisors of the two
multiplication maps between the reflexive rank-one sheaves, forms the
three-term dualized complex, and reads off its cohomology from common
factors of the sections.  The two must agree everywhere; a disagreement
raises, it is never smoothed over.

Divisors are integer formal sums of the compact curves E_1..E_n and the two
boundary curves A (meeting E_n) and B (meeting E_1).  Only pairings against
compact curves are defined; A^2, B^2 and A.B never enter any formula here
and are rejected.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .cyclic import CyclicType, ValidationError, h_series, hj_expand, i_series


class InternalInconsistencyError(RuntimeError):
    """A structural identity that must hold by construction failed."""


class OracleMismatchError(RuntimeError):
    """The divisor-arithmetic recomputation disagrees with the closed formula."""


# ---------------------------------------------------------------------------
# chains and cycles


@dataclass(frozen=True)
class Chain:
    """A chain of rational curves E_1..E_n with E_t^2 = -alpha_t, E_t.E_{t+1} = 1."""

    alphas: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.alphas:
            raise ValidationError("chain must have at least one curve")
        if any(al < 2 for al in self.alphas):
            raise ValidationError("negative definiteness needs alpha_t >= 2 on a chain")

    @property
    def n(self) -> int:
        return len(self.alphas)

    @property
    def self_intersections(self) -> tuple[int, ...]:
        return tuple(-al for al in self.alphas)

    def curve_pairing(self, s: int, t: int) -> int:
        """E_s . E_t for 1-based indices."""
        if s == t:
            return -self.alphas[s - 1]
        return 1 if abs(s - t) == 1 else 0


def chain(t: CyclicType) -> Chain:
    return Chain(hj_expand(t).alphas)


@dataclass(frozen=True)
class Cycle:
    """An integer formal sum of named curve components.

    Stored as a sorted tuple of (name, coefficient) pairs with zero
    coefficients dropped, so equal cycles compare equal.
    """

    coeffs: tuple[tuple[str, int], ...] = field(default_factory=tuple)

    @staticmethod
    def of(mapping: dict[str, int]) -> "Cycle":
        return Cycle(tuple(sorted((k, v) for k, v in mapping.items() if v != 0)))

    def as_dict(self) -> dict[str, int]:
        return dict(self.coeffs)

    def __getitem__(self, name: str) -> int:
        return dict(self.coeffs).get(name, 0)

    def __add__(self, other: "Cycle") -> "Cycle":
        out = self.as_dict()
        for k, v in other.coeffs:
            out[k] = out.get(k, 0) + v
        return Cycle.of(out)

    def __sub__(self, other: "Cycle") -> "Cycle":
        out = self.as_dict()
        for k, v in other.coeffs:
            out[k] = out.get(k, 0) - v
        return Cycle.of(out)

    def min_with(self, other: "Cycle") -> "Cycle":
        """Componentwise minimum; the gcd of two effective divisors."""
        keys = {k for k, _ in self.coeffs} | {k for k, _ in other.coeffs}
        return Cycle.of({k: min(self[k], other[k]) for k in keys})

    def is_effective(self) -> bool:
        return all(v >= 0 for _, v in self.coeffs)

    def is_zero(self) -> bool:
        return not self.coeffs

    def support(self) -> tuple[str, ...]:
        return tuple(k for k, v in self.coeffs if v != 0)


def pair_with_curve(ch: Chain, cyc: Cycle, t: int) -> int:
    """cyc . E_t, with the boundary conventions A.E_n = 1 and B.E_1 = 1."""
    total = 0
    for name, c in cyc.coeffs:
        if name == "A":
            total += c if t == ch.n else 0
        elif name == "B":
            total += c if t == 1 else 0
        else:
            s = int(name[1:])
            total += c * ch.curve_pairing(s, t)
    return total


def chain_pairings(ch: Chain, cyc: Cycle) -> tuple[int, ...]:
    """(cyc . E_1, ..., cyc . E_n) in one tridiagonal pass."""
    n = ch.n
    comp = [0] * n
    a_coeff = b_coeff = 0
    for name, c in cyc.coeffs:
        if name == "A":
            a_coeff = c
        elif name == "B":
            b_coeff = c
        else:
            comp[int(name[1:]) - 1] = c
    out = []
    for t in range(1, n + 1):
        val = -ch.alphas[t - 1] * comp[t - 1]
        if t >= 2:
            val += comp[t - 2]
        if t <= n - 1:
            val += comp[t]
        if t == n:
            val += a_coeff
        if t == 1:
            val += b_coeff
        out.append(val)
    return tuple(out)


def fundamental_cycle(ch: Chain) -> Cycle:
    """Smallest effective cycle Z >= sum E_t with Z.E_t <= 0 for all t.

    Computed by the increment loop: start from the reduced cycle and add any
    curve with positive pairing until none remains.  On a chain with all
    alpha_t >= 2 the loop exits immediately and Z is reduced.
    """
    coeffs = [1] * ch.n
    while True:
        z = Cycle.of({f"E{t}": coeffs[t - 1] for t in range(1, ch.n + 1)})
        bad = [t for t in range(1, ch.n + 1) if pair_with_curve(ch, z, t) > 0]
        if not bad:
            return z
        coeffs[bad[0] - 1] += 1


# ---------------------------------------------------------------------------
# symbolic sheaves


@dataclass(frozen=True)
class SymbolicSheaf:
    """A twisted structure sheaf O_Z(degrees) placed in homological shift 0 or 1.

    ``support`` is an effective cycle on compact components; ``degrees`` maps
    each support component to the degree of the restricted twist.  The zero
    object is the distinguished value with ``is_zero`` set.
    """

    support: Cycle = field(default_factory=Cycle)
    degrees: tuple[tuple[str, int], ...] = field(default_factory=tuple)
    shift: int = 0
    is_zero: bool = False

    @staticmethod
    def zero() -> "SymbolicSheaf":
        return SymbolicSheaf(is_zero=True)

    @staticmethod
    def of(support: dict[str, int], degrees: dict[str, int], shift: int = 0) -> "SymbolicSheaf":
        sup = Cycle.of(support)
        if not sup.is_effective() or sup.is_zero():
            raise ValidationError(f"support must be nonzero effective, got {support}")
        if set(sup.support()) != set(degrees):
            raise ValidationError("degrees must be given exactly on the support")
        return SymbolicSheaf(sup, tuple(sorted(degrees.items())), shift)

    def degree_on(self, name: str) -> int:
        return dict(self.degrees)[name]

    def to_json(self):
        if self.is_zero:
            return "zero"
        return {
            "support": dict(self.support.coeffs),
            "degrees": dict(self.degrees),
            "shift": self.shift,
        }

    def relabel(self, mapping: dict[str, str]) -> "SymbolicSheaf":
        """Transport a sheaf along a renaming of its components."""
        if self.is_zero:
            return self
        sup = {mapping[k]: v for k, v in self.support.coeffs}
        degs = {mapping[k]: v for k, v in self.degrees}
        return SymbolicSheaf.of(sup, degs, self.shift)


def psi_simple(t: CyclicType, i: int) -> SymbolicSheaf:
    """Image of the weight-i simple sheaf: the three-case closed formula.

    Writing w = a + 1 + i mod r: the answer is O_E(E)[1] when w = 0, the
    sheaf O_{E_t}(-alpha_t + 1) when w equals the middle entry i_t of the
    decreasing series, and zero otherwise.
    """
    ch = chain(t)
    ser = i_series(t)
    w = (t.a + 1 + i) % t.r
    if w == 0:
        e = fundamental_cycle(ch)
        degs = {f"E{s}": pair_with_curve(ch, e, s) for s in range(1, ch.n + 1)}
        return SymbolicSheaf.of(e.as_dict(), degs, shift=1)
    for pos in range(1, ch.n + 1):
        if ser[pos] % t.r == w:
            name = f"E{pos}"
            return SymbolicSheaf.of({name: 1}, {name: -ch.alphas[pos - 1] + 1}, shift=0)
    return SymbolicSheaf.zero()


# ---------------------------------------------------------------------------
# reflexive rank-one sheaves and their multiplication divisors


@lru_cache(maxsize=None)
def wunram_decomposition(t: CyclicType, l: int) -> tuple[int, ...]:
    """The unique (d_1, ..., d_n) with l = sum d_t i_t and bounded tails.

    Greedy from the left: the constraint that every tail sum
    sum_{t > t0} d_t i_t stays below i_{t0} forces d_t to be the floor of
    the remainder by i_t at each step.
    """
    if not 0 <= l < t.r:
        raise ValidationError(f"weight must lie in 0..r-1, got {l}")
    ser = i_series(t)
    n = hj_expand(t).n
    rem = l
    out = []
    for pos in range(1, n + 1):
        out.append(rem // ser[pos])
        rem %= ser[pos]
    assert rem == 0
    dec = tuple(out)
    assert sum(d * ser[pos + 1] for pos, d in enumerate(dec)) == l
    return dec


@dataclass(frozen=True)
class DivisorData:
    """Pullbacks of the two invariant coordinate divisors and the dual classes.

    ``d_classes[s-1]`` holds the two effective expressions of the class dual
    to E_s (pairing delta_{st} with every E_t): one supported towards A, one
    towards B.
    """

    pullback_x: Cycle
    pullback_y: Cycle
    d_classes: tuple[tuple[Cycle, Cycle], ...]


@lru_cache(maxsize=None)
def divisor_data(t: CyclicType) -> DivisorData:
    ch = chain(t)
    n = ch.n
    h0 = h_series(t, 0)
    htop = h_series(t, n + 1)
    px = Cycle.of({f"E{s}": h0[s] for s in range(1, n + 1)} | {"A": h0[n + 1]})
    py = Cycle.of({"B": htop[0]} | {f"E{s}": htop[s] for s in range(1, n + 1)})
    pairs = []
    for s in range(1, n + 1):
        hs = h_series(t, s)
        toward_a = Cycle.of({f"E{u}": hs[u] for u in range(s + 1, n + 1)} | {"A": hs[n + 1]})
        toward_b = Cycle.of({"B": hs[0]} | {f"E{u}": hs[u] for u in range(1, s)})
        want = tuple(1 if u == s else 0 for u in range(1, n + 1))
        if chain_pairings(ch, toward_a) != want or chain_pairings(ch, toward_b) != want:
            raise InternalInconsistencyError(f"dual class {s} of {t} has wrong pairings")
        pairs.append((toward_a, toward_b))
    return DivisorData(px, py, tuple(pairs))


@lru_cache(maxsize=None)
def _chain_adjugate(alphas: tuple[int, ...]) -> tuple[tuple[tuple[int, ...], ...], int]:
    """Adjugate and determinant of the chain intersection matrix.

    adj satisfies adj @ M = det * Id with integer entries, so integer
    systems M c = rhs are solved exactly by c = adj @ rhs / det.
    """
    n = len(alphas)
    m = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        m[i][i] = Fraction(-alphas[i])
        if i + 1 < n:
            m[i][i + 1] = Fraction(1)
            m[i + 1][i] = Fraction(1)
    # invert by Gauss-Jordan over Fractions; n is tiny
    aug = [row[:] + [Fraction(1) if j == i else Fraction(0) for j in range(n)] for i, row in enumerate(m)]
    det = Fraction(1)
    for col in range(n):
        piv = next(r for r in range(col, n) if aug[r][col] != 0)
        if piv != col:
            aug[col], aug[piv] = aug[piv], aug[col]
            det = -det
        det *= aug[col][col]
        inv_p = 1 / aug[col][col]
        aug[col] = [x * inv_p for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    det_int = int(det)
    adj = tuple(
        tuple(int(aug[i][n + j] * det) for j in range(n)) for i in range(n)
    )
    return adj, det_int


def _solve_in_box(ch: Chain, pairings: list[int], bound: Cycle, free_boundary: str) -> Cycle:
    """The unique effective cycle with the given E-pairings, within 0 <= c <= bound.

    One boundary coefficient (A for x-maps, B for y-maps) is scanned over its
    allowed range; the compact part is then forced by the tridiagonal system.
    The other boundary coefficient is pinned to 0 by the bound.
    """
    n = ch.n
    adj, det = _chain_adjugate(ch.alphas)
    fixed_boundary = "B" if free_boundary == "A" else "A"
    if bound[fixed_boundary] != 0:
        raise InternalInconsistencyError("bounding divisor must omit the opposite boundary")
    solutions = []
    for cb in range(bound[free_boundary] + 1):
        rhs = list(pairings)
        if free_boundary == "A":
            rhs[n - 1] -= cb
        else:
            rhs[0] -= cb
        ok = True
        comp = []
        for i in range(n):
            num = sum(adj[i][j] * rhs[j] for j in range(n))
            if num % det != 0:
                ok = False
                break
            c = num // det
            if not 0 <= c <= bound[f"E{i + 1}"]:
                ok = False
                break
            comp.append(c)
        if ok:
            sol = {f"E{i + 1}": comp[i] for i in range(n)}
            sol[free_boundary] = cb
            solutions.append(Cycle.of(sol))
    if len(solutions) != 1:
        raise InternalInconsistencyError(
            f"expected a unique bounded effective representative, found {len(solutions)}"
        )
    return solutions[0]


@dataclass(frozen=True)
class SectionDivisors:
    """Divisors of the multiplication maps between the rank-one sheaves.

    ``x_divs[l]`` is the divisor of the map R_l -> R_{l+1} given by the
    weight-1 coordinate; ``y_divs[l]`` of R_l -> R_{l+a} given by the
    weight-a one.  Summing each family over a full cycle of weights
    reproduces the corresponding pullback divisor.
    """

    x_divs: tuple[Cycle, ...]
    y_divs: tuple[Cycle, ...]


@lru_cache(maxsize=None)
def section_divisors(t: CyclicType) -> SectionDivisors:
    ch = chain(t)
    n = ch.n
    data = divisor_data(t)
    decs = [wunram_decomposition(t, l) for l in range(t.r)]

    def solve(l: int, step: int, bound: Cycle, free_boundary: str) -> Cycle:
        src, dst = decs[l], decs[(l + step) % t.r]
        pairings = [dst[i] - src[i] for i in range(n)]
        return _solve_in_box(ch, pairings, bound, free_boundary)

    x_divs = tuple(solve(l, 1, data.pullback_x, "A") for l in range(t.r))
    y_divs = tuple(solve(l, t.a, data.pullback_y, "B") for l in range(t.r))

    total_x = Cycle()
    total_y = Cycle()
    for l in range(t.r):
        total_x = total_x + x_divs[l]
        total_y = total_y + y_divs[l]
    if total_x != data.pullback_x or total_y != data.pullback_y:
        raise InternalInconsistencyError(f"section divisors of {t} do not compose to the pullbacks")
    return SectionDivisors(x_divs, y_divs)


# ---------------------------------------------------------------------------
# the toric oracle


def _boundary_free(cyc: Cycle) -> bool:
    return cyc["A"] == 0 and cyc["B"] == 0


def _disjoint(ch: Chain, u: Cycle, v: Cycle) -> bool:
    """No shared components and no intersection points between supports."""
    su, sv = set(u.support()), set(v.support())
    if su & sv:
        return False
    for p in su:
        for q in sv:
            if {p, q} == {"A", "B"}:
                continue  # the two boundary curves never meet
            if "A" in (p, q) or "B" in (p, q):
                other = q if p in ("A", "B") else p
                boundary = p if p in ("A", "B") else q
                touch = ch.n if boundary == "A" else 1
                if int(other[1:]) == touch:
                    return False
            elif abs(int(p[1:]) - int(q[1:])) <= 1:
                return False
    return True


def psi_toric_oracle(t: CyclicType, i: int, check: bool = True) -> SymbolicSheaf:
    """Recompute the image of the weight-i simple by pure divisor arithmetic.

    The dualized three-term complex [R*_{i+a+1} -> R*_{i+1} (+) R*_{i+a} -> R*_i]
    has second-map sections (u, v) and first-map sections (-v', u').  Writing
    s = gcd(u, v) and s'' for the common cofactor of the first map through the
    Koszul kernel of the coprime parts, the cohomology is:

    * O_{div s''}(kernel bundle)[1] when s'' is nonunit (middle cohomology),
    * O_{div s}(target bundle) when s is nonunit (cohomology at the end),
    * zero when both are units.

    Both being nonunit would mean two nonvanishing cohomologies and is a
    structural error.  With ``check`` set, any disagreement with the closed
    formula raises OracleMismatchError.
    """
    ch = chain(t)
    n = ch.n
    secs = section_divisors(t)
    decs = [wunram_decomposition(t, l) for l in range(t.r)]
    i %= t.r

    u = secs.x_divs[i]                       # R_i -> R_{i+1}
    v = secs.y_divs[i]                       # R_i -> R_{i+a}
    u_next = secs.x_divs[(i + t.a) % t.r]    # R_{i+a} -> R_{i+a+1}
    v_next = secs.y_divs[(i + 1) % t.r]      # R_{i+1} -> R_{i+a+1}

    if u + v_next != v + u_next:
        raise InternalInconsistencyError(f"multiplication square of {t} at weight {i} does not commute")

    s = u.min_with(v)
    u0, v0 = u - s, v - s
    if not _disjoint(ch, u0, v0):
        raise InternalInconsistencyError(f"coprime section parts of {t} at weight {i} are not disjoint")

    s2 = v_next - v0
    if s2 != u_next - u0 or not s2.is_effective():
        raise InternalInconsistencyError(f"first map of {t} at weight {i} does not factor through the kernel")

    if not (_boundary_free(s) and _boundary_free(s2)):
        raise InternalInconsistencyError(f"cohomology support of {t} at weight {i} touches the boundary")
    if not s.is_zero() and not s2.is_zero():
        raise InternalInconsistencyError(f"two nonvanishing cohomologies for {t} at weight {i}")

    if s2.is_zero() and s.is_zero():
        result = SymbolicSheaf.zero()
    elif not s2.is_zero():
        # middle cohomology: kernel bundle has pairings -(d_{i+1} + d_{i+a} - d_i)
        kern = [
            -(decs[(i + 1) % t.r][j] + decs[(i + t.a) % t.r][j] - decs[i][j])
            for j in range(n)
        ]
        degs = {name: kern[int(name[1:]) - 1] for name in s2.support()}
        result = SymbolicSheaf.of(s2.as_dict(), degs, shift=1)
    else:
        # cohomology at the target R*_i, whose pairings are -d_i
        degs = {name: -decs[i][int(name[1:]) - 1] for name in s.support()}
        result = SymbolicSheaf.of(s.as_dict(), degs, shift=0)

    if check:
        expected = psi_simple(t, i)
        if result != expected:
            raise OracleMismatchError(
                f"oracle mismatch for {t}, weight {i}: "
                f"divisor arithmetic gives {result.to_json()}, formula gives {expected.to_json()}"
            )
    return result
