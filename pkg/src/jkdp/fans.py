"""Simplicial cones and fans in rank 2 and 3, star subdivision, and the
fan-level verification of the resolution of the weighted hypersurface series.

Vectors are plain integer tuples; intermediate rational vectors are exact
``Fraction`` tuples whose integrality is asserted, never rounded.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .cyclic import CyclicType, ValidationError, hj_expand, i_series


Vec = tuple[int, ...]


def _gcd_all(xs) -> int:
    g = 0
    for x in xs:
        g = gcd(g, abs(x))
    return g


def is_primitive(v: Vec) -> bool:
    return _gcd_all(v) == 1


def primitivize(v) -> Vec:
    ints = tuple(int(x) for x in v)
    if tuple(Fraction(x) for x in v) != tuple(Fraction(i) for i in ints):
        raise ValidationError(f"vector {v} is not integral")
    g = _gcd_all(ints)
    if g == 0:
        raise ValidationError("zero vector has no primitive representative")
    return tuple(x // g for x in ints)


def vec_add(u: Vec, v: Vec) -> Vec:
    return tuple(a + b for a, b in zip(u, v))


def vec_scale(c, v):
    return tuple(c * x for x in v)


def _det(rows) -> Fraction:
    n = len(rows)
    m = [[Fraction(x) for x in row] for row in rows]
    det = Fraction(1)
    for col in range(n):
        piv = next((r for r in range(col, n) if m[r][col] != 0), None)
        if piv is None:
            return Fraction(0)
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
    return det


@dataclass(frozen=True)
class SimplicialCone:
    """A strictly convex simplicial cone, generators canonically ordered."""

    generators: tuple[Vec, ...]

    @staticmethod
    def of(gens) -> "SimplicialCone":
        prim = tuple(sorted(primitivize(g) for g in gens))
        if len(set(prim)) != len(prim):
            raise ValidationError(f"repeated generators in {gens}")
        cone = SimplicialCone(prim)
        if prim and not cone._independent():
            raise ValidationError(f"generators {gens} are linearly dependent")
        return cone

    def _independent(self) -> bool:
        k = len(self.generators)
        dim = len(self.generators[0])
        if k > dim:
            return False
        # rank via Gaussian elimination on a k x dim matrix
        m = [[Fraction(x) for x in g] for g in self.generators]
        rank = 0
        for col in range(dim):
            piv = next((r for r in range(rank, k) if m[r][col] != 0), None)
            if piv is None:
                continue
            m[rank], m[piv] = m[piv], m[rank]
            for r in range(k):
                if r != rank and m[r][col] != 0:
                    f = m[r][col] / m[rank][col]
                    m[r] = [x - f * y for x, y in zip(m[r], m[rank])]
            rank += 1
        return rank == k

    @property
    def dim(self) -> int:
        return len(self.generators)

    def faces(self):
        from itertools import combinations

        for k in range(len(self.generators) + 1):
            for sub in combinations(self.generators, k):
                yield SimplicialCone(tuple(sorted(sub)))

    def barycentric_coords(self, v: Vec):
        """Coefficients of v in the generators, or None if v is outside their span."""
        gens = self.generators
        if not gens:
            return None if any(v) else ()
        dim = len(v)
        k = len(gens)
        # solve [gens^T] x = v in the least-squares-free exact sense
        rows = [[Fraction(gens[j][i]) for j in range(k)] + [Fraction(v[i])] for i in range(dim)]
        # Gaussian elimination, then consistency check
        pivots = []
        r = 0
        for col in range(k):
            piv = next((i for i in range(r, dim) if rows[i][col] != 0), None)
            if piv is None:
                continue
            rows[r], rows[piv] = rows[piv], rows[r]
            inv = 1 / rows[r][col]
            rows[r] = [x * inv for x in rows[r]]
            for i in range(dim):
                if i != r and rows[i][col] != 0:
                    f = rows[i][col]
                    rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
            pivots.append(col)
            r += 1
        coords = [Fraction(0)] * k
        for idx, col in enumerate(pivots):
            coords[col] = rows[idx][k]
        for i in range(r, dim):
            if rows[i][k] != 0:
                return None
        # verify (guards the non-pivot columns)
        for i in range(dim):
            if sum(coords[j] * gens[j][i] for j in range(k)) != v[i]:
                return None
        return tuple(coords)

    def contains(self, v: Vec) -> bool:
        gens = self.generators
        if gens and len(gens) == len(gens[0]):
            # full-dimensional simplicial cone: integer Cramer
            det = _det(gens)
            for i in range(len(gens)):
                rows = [v if j == i else gens[j] for j in range(len(gens))]
                if _det(rows) * det < 0:
                    return False
            return True
        coords = self.barycentric_coords(v)
        return coords is not None and all(c >= 0 for c in coords)


@dataclass(frozen=True)
class Fan:
    """A finite face-closed set of simplicial cones."""

    cones: frozenset[SimplicialCone]

    @staticmethod
    def of(maximal) -> "Fan":
        all_cones = set()
        for c in maximal:
            all_cones.update(c.faces())
        return Fan(frozenset(all_cones))

    def maximal_cones(self) -> tuple[SimplicialCone, ...]:
        maxima = [
            c
            for c in self.cones
            if not any(set(c.generators) < set(d.generators) for d in self.cones)
        ]
        return tuple(sorted(maxima, key=lambda c: c.generators))

    def rays(self) -> tuple[Vec, ...]:
        return tuple(sorted({g for c in self.cones for g in c.generators}))

    def supports(self, v: Vec) -> bool:
        return any(c.contains(v) for c in self.cones)


def star_subdivide(fan: Fan, v: Vec) -> Fan:
    """Refine the fan at a primitive vector of its support.

    Keeps every cone not containing v; for every cone tau not containing v
    that sits with v inside some cone, adds cone(tau, v).  The result has the
    same support.
    """
    if not is_primitive(v):
        raise ValidationError(f"{v} is not primitive")
    containing = frozenset(c for c in fan.cones if c.contains(v))
    if not containing:
        raise ValidationError(f"{v} is not in the support of the fan")
    hosts = [set(sigma.generators) for sigma in containing]
    new_cones = set(fan.cones) - containing
    for tau in fan.cones:
        if tau in containing:
            continue
        tau_gens = set(tau.generators)
        if any(tau_gens <= host for host in hosts):
            new_cones.add(SimplicialCone.of(tau.generators + (v,)))
    return Fan(frozenset(c for nc in new_cones for c in nc.faces()))


@dataclass(frozen=True)
class NormalForm2D:
    """Index r, both weight normalizations, and a witnessing unimodular map."""

    r: int
    a: int
    a_pair: tuple[int, int]
    basis: tuple[tuple[int, int], tuple[int, int]]


def normal_form_2d(cone: SimplicialCone) -> NormalForm2D:
    """Bring a 2D strictly convex cone to the shape <(r, -a), (0, 1)>.

    Returns r = |det|, the canonical weight min(a, a') where a' inverts a
    mod r, and the unimodular matrix realizing the chosen normalization.
    """
    if cone.dim != 2 or len(cone.generators[0]) != 2:
        raise ValidationError("normal form needs a two-dimensional cone in rank 2")
    v1, v2 = cone.generators
    det = v1[0] * v2[1] - v1[1] * v2[0]
    if det == 0:
        raise ValidationError("degenerate cone")

    def reduce_pair(first: Vec, second: Vec):
        # unimodular U with U(second) = (0, 1), U(first) = (r, -a)
        p, q = second
        g, x, y = _xgcd(p, q)
        assert g == 1
        u = ((-q, p), (x, y))
        fx = u[0][0] * first[0] + u[0][1] * first[1]
        fy = u[1][0] * first[0] + u[1][1] * first[1]
        if fx < 0:
            u = ((q, -p), (x, y))
            fx, fy = -fx, fy
        m = (-fy) // fx if fx else 0
        # shear to put -a in [0, r)
        u = (u[0], (u[1][0] + m * u[0][0], u[1][1] + m * u[0][1]))
        fy = fy + m * fx
        return fx, (-fy) % fx, u

    r, a, u = reduce_pair(v1, v2)
    r2, a2, u2 = reduce_pair(v2, v1)
    assert r == r2 == abs(det)
    if r > 1:
        assert (a * a2) % r == 1
    if a2 < a:
        a, a2, u = a2, a, u2
    return NormalForm2D(r, a, (a, a2), u)


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t


def resolve_2d(t: CyclicType) -> tuple[Vec, ...]:
    """Rays of the resolved cone of 1/r(1,a): rho_0, ..., rho_{n+1}.

    rho_0 = (0, 1) and rho_{n+1} = (r, -a) bound the singular cone; each new
    ray is the exact rational combination (rho_{n+1} + i_t rho_{t-1}) / i_{t-1},
    which must be integral, and consecutive rays satisfy
    rho_{t-1} + rho_{t+1} = alpha_t rho_t.
    """
    ser = i_series(t)
    n = hj_expand(t).n
    alphas = hj_expand(t).alphas
    rho0: tuple[Fraction, ...] = (Fraction(0), Fraction(1))
    rho_top = (Fraction(t.r), Fraction(-t.a))
    rays: list[tuple[Fraction, ...]] = [rho0]
    for pos in range(1, n + 1):
        prev = rays[pos - 1]
        nxt = tuple((rho_top[c] + ser[pos] * prev[c]) / ser[pos - 1] for c in range(2))
        rays.append(nxt)
    rays.append(rho_top)
    out = []
    for v in rays:
        if any(x.denominator != 1 for x in v):
            raise ValidationError(f"non-integral resolution ray {v} for {t}")
        out.append(tuple(int(x) for x in v))
    for pos in range(1, n + 1):
        lhs = vec_add(out[pos - 1], out[pos + 1])
        if lhs != vec_scale(alphas[pos - 1], out[pos]):
            raise ValidationError(f"ray relation fails at position {pos} for {t}")
    return tuple(out)


# ---------------------------------------------------------------------------
# fan verification for the hypersurface series


@dataclass(frozen=True)
class FanCheck:
    name: str
    passed: bool
    detail: str


@dataclass(frozen=True)
class FanVerification:
    k: int
    checks: tuple[FanCheck, ...]

    @property
    def all_passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def to_json(self):
        return {
            "k": self.k,
            "all_passed": self.all_passed,
            "checks": [
                {"name": c.name, "passed": c.passed, "detail": c.detail} for c in self.checks
            ],
        }


def _frac_vec(num: Vec, den: int) -> tuple[Fraction, ...]:
    return tuple(Fraction(x, den) for x in num)


def _as_int_vec(v) -> Vec | None:
    if any(Fraction(x).denominator != 1 for x in v):
        return None
    return tuple(int(x) for x in v)


def jk_fan_verify(k: int) -> FanVerification:
    """Check the vector identities behind the staged resolution of the fan.

    Builds the ambient simplicial fan on rho_1..rho_4, performs the star
    subdivisions at v, v_0, ..., v_{k-1}, and verifies each arithmetic
    identity the construction relies on.  Every check is exact.
    """
    if k < 1:
        raise ValidationError("k must be a positive integer")
    rho1 = (k, k, 4 * k + 1)
    rho2 = (1, 0, 0)
    rho3 = (0, 1, 0)
    rho4 = (-1, -1, -2)
    checks: list[FanCheck] = []

    def add(name: str, passed: bool, detail: str) -> None:
        checks.append(FanCheck(name, bool(passed), detail))

    v_frac = _frac_vec(vec_add(vec_scale(4, rho1), vec_add(rho2, rho3)), 4 * k + 1)
    v = _as_int_vec(v_frac)
    add("v_integral_primitive", v is not None and is_primitive(v), f"v={v or tuple(map(str, v_frac))}")

    v0_frac = _frac_vec(vec_add(rho1, vec_scale(k, rho4)), 2 * k + 1)
    v0 = _as_int_vec(v0_frac)
    add("v0_integral_primitive", v0 is not None and is_primitive(v0), f"v0={v0 or tuple(map(str, v0_frac))}")

    vs = [v0]
    ok_chain = v0 is not None
    for i in range(1, k):
        prev = vs[-1]
        if prev is None:
            vs.append(None)
            continue
        vi_frac = _frac_vec(vec_add(rho1, vec_scale(k - i, prev)), k - (i - 1))
        vi = _as_int_vec(vi_frac)
        ok_chain = ok_chain and vi is not None and is_primitive(vi)
        vs.append(vi)
    add("vi_integral_primitive", ok_chain, f"v_i={vs}")

    if v is not None and all(x is not None for x in vs):
        half = tuple(Fraction(rho4[c] + (2 * k + 1) * v[c], 2) for c in range(3))
        add("rho1_from_v_and_rho4", _as_int_vec(half) == rho1, f"(rho4+(2k+1)v)/2={half}")
        add(
            "vi_increment",
            all(vs[i] == vec_add(vs[i - 1], v) for i in range(1, k)),
            "v_i = v_{i-1} + v",
        )
        add("rho1_top_increment", rho1 == vec_add(vs[k - 1], v), f"v_(k-1)+v={vec_add(vs[k - 1], v)}")
        add(
            "v_from_rho2_rho3_v0",
            v == vec_add(vec_add(rho2, rho3), vec_scale(4, vs[0])),
            f"rho2+rho3+4v0={vec_add(vec_add(rho2, rho3), vec_scale(4, vs[0]))}",
        )
        zero = vec_add(vec_add(vec_scale(2, vs[0]), rho2), vec_add(rho3, rho4))
        add("boundary_relation", zero == (0, 0, 0), f"2v0+rho2+rho3+rho4={zero}")
        basis_ok = _spans_lattice([rho2, rho3, rho4, vs[0]])
        add("lattice_basis", basis_ok, "rho2, rho3, rho4, v0 span the full lattice")

        ambient = Fan.of(
            [
                SimplicialCone.of(trip)
                for trip in (
                    (rho1, rho2, rho3),
                    (rho1, rho2, rho4),
                    (rho1, rho3, rho4),
                    (rho2, rho3, rho4),
                )
            ]
        )
        try:
            fan = star_subdivide(ambient, v)
            fan = star_subdivide(fan, vs[0])
            for i in range(1, k):
                fan = star_subdivide(fan, vs[i])
            ray_set = set(fan.rays())
            expected = {rho1, rho2, rho3, rho4, v, *vs}
            add("subdivision_rays", expected <= ray_set, f"rays={sorted(ray_set)}")
        except ValidationError as err:
            add("subdivision_rays", False, str(err))
    return FanVerification(k, tuple(checks))


def _spans_lattice(vectors) -> bool:
    """Do the integer vectors generate the full integer lattice?

    The index of the generated sublattice is the gcd of all maximal minors,
    so the span is everything exactly when that gcd is 1.
    """
    from itertools import combinations

    n = len(vectors[0])
    g = 0
    for rows in combinations(vectors, n):
        g = gcd(g, abs(int(_det(rows))))
    return g == 1
