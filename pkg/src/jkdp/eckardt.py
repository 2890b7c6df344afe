"""Exact rational plane geometry for the seven-point configurations whose
blow-ups carry four minus-one curves through one point.

Points are homogeneous rational triples, curves are integer coefficient
vectors over the monomial basis of their degree.  Every check is an exact
determinant or polynomial identity; there are no tolerances anywhere in
this module.

Three families are supported (the common point of the four members is
called the meeting point below):

* variant a: two lines and two conics through a plane point q;
* variant b: three conics through a common point with a common tangent,
  the fourth member being the blown-up point itself;
* variant c: a line, a conic, and a nodal cubic through a common point
  with a common tangent, again with the blown-up point as fourth member.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import gcd


class DegenerateSeedError(ValueError):
    """A configuration seed produced a degenerate picture; names the failure."""


# ---------------------------------------------------------------------------
# points, curves, exact linear algebra


@dataclass(frozen=True)
class PlanePoint:
    coords: tuple[Fraction, Fraction, Fraction]

    @staticmethod
    def of(x, y, z=1) -> "PlanePoint":
        raw = (Fraction(x), Fraction(y), Fraction(z))
        if not any(raw):
            raise ValueError("no point has all coordinates zero")
        lead = next(c for c in raw if c)
        return PlanePoint(tuple(c / lead for c in raw))

    def __iter__(self):
        return iter(self.coords)


def monomials(degree: int) -> tuple[tuple[int, int, int], ...]:
    return tuple(
        (i, j, degree - i - j)
        for i in range(degree, -1, -1)
        for j in range(degree - i, -1, -1)
    )


def _normalize_coeffs(raw) -> tuple[int, ...]:
    fracs = [Fraction(c) for c in raw]
    if not any(fracs):
        raise ValueError("zero coefficient vector")
    denom = 1
    for c in fracs:
        denom = denom * c.denominator // gcd(denom, c.denominator)
    ints = [int(c * denom) for c in fracs]
    g = 0
    for c in ints:
        g = gcd(g, abs(c))
    ints = [c // g for c in ints]
    lead = next(c for c in ints if c)
    if lead < 0:
        ints = [-c for c in ints]
    return tuple(ints)


@dataclass(frozen=True)
class PlaneCurve:
    degree: int
    coeffs: tuple[int, ...]

    @staticmethod
    def of(degree: int, coeffs) -> "PlaneCurve":
        mono = monomials(degree)
        if len(coeffs) != len(mono):
            raise ValueError(f"degree {degree} needs {len(mono)} coefficients")
        return PlaneCurve(degree, _normalize_coeffs(coeffs))

    def evaluate(self, p: PlanePoint) -> Fraction:
        x, y, z = p.coords
        return sum(
            c * x**i * y**j * z**k
            for c, (i, j, k) in zip(self.coeffs, monomials(self.degree))
        )

    def contains(self, p: PlanePoint) -> bool:
        return self.evaluate(p) == 0

    def gradient(self, p: PlanePoint) -> tuple[Fraction, Fraction, Fraction]:
        x, y, z = p.coords
        gx = gy = gz = Fraction(0)
        for c, (i, j, k) in zip(self.coeffs, monomials(self.degree)):
            if i:
                gx += c * i * x ** (i - 1) * y**j * z**k
            if j:
                gy += c * j * x**i * y ** (j - 1) * z**k
            if k:
                gz += c * k * x**i * y**j * z ** (k - 1)
        return (gx, gy, gz)

    def restrict_to_line(self, p: PlanePoint, q: PlanePoint) -> list[Fraction]:
        """Coefficients in u of the restriction to the line u -> p + u*q."""
        out = [Fraction(0)] * (self.degree + 1)
        for c, expo in zip(self.coeffs, monomials(self.degree)):
            term = [Fraction(c)]
            for coord, e in enumerate(expo):
                lin = [p.coords[coord], q.coords[coord]]
                for _ in range(e):
                    term = _poly_mul(term, lin)
            for d, val in enumerate(term):
                out[d] += val
        return out


def _poly_mul(a, b):
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def line_through(p: PlanePoint, q: PlanePoint) -> PlaneCurve:
    (x1, y1, z1), (x2, y2, z2) = p.coords, q.coords
    coeffs = (y1 * z2 - z1 * y2, z1 * x2 - x1 * z2, x1 * y2 - y1 * x2)
    return PlaneCurve.of(1, coeffs)


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
        m[col] = [v * inv for v in m[col]]
        for r in range(col + 1, n):
            if m[r][col] != 0:
                f = m[r][col]
                m[r] = [v - f * w for v, w in zip(m[r], m[col])]
    return det


def _nullspace(rows):
    """Basis of the right kernel of an exact rational matrix."""
    if not rows:
        return []
    ncols = len(rows[0])
    m = [[Fraction(x) for x in row] for row in rows]
    pivots = []
    r = 0
    for col in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][col] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = 1 / m[r][col]
        m[r] = [v * inv for v in m[r]]
        for i in range(len(m)):
            if i != r and m[i][col] != 0:
                f = m[i][col]
                m[i] = [v - f * w for v, w in zip(m[i], m[r])]
        pivots.append(col)
        r += 1
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        vec = [Fraction(0)] * ncols
        vec[fc] = Fraction(1)
        for row_idx, pc in enumerate(pivots):
            vec[pc] = -m[row_idx][fc]
        basis.append(vec)
    return basis


def point_condition(degree: int, p: PlanePoint):
    x, y, z = p.coords
    return [x**i * y**j * z**k for (i, j, k) in monomials(degree)]


def tangency_conditions(degree: int, p: PlanePoint, direction: PlanePoint):
    """Vanishing to order two at p along the line spanned by p and direction."""
    rows = [point_condition(degree, p)]
    row = []
    x, y, z = p.coords
    dx, dy, dz = direction.coords
    for i, j, k in monomials(degree):
        # derivative of the single monomial along the line at u = 0
        val = Fraction(0)
        if i:
            val += i * x ** (i - 1) * y**j * z**k * dx
        if j:
            val += j * x**i * y ** (j - 1) * z**k * dy
        if k:
            val += k * x**i * y**j * z ** (k - 1) * dz
        row.append(val)
    rows.append(row)
    return rows


def curve_from_conditions(degree: int, rows, what: str) -> PlaneCurve:
    basis = _nullspace(rows)
    if len(basis) != 1:
        raise DegenerateSeedError(f"{what}: expected a unique curve, kernel has dimension {len(basis)}")
    return PlaneCurve.of(degree, basis[0])


def second_intersection(curve: PlaneCurve, base: PlanePoint, other: PlanePoint) -> PlanePoint:
    """Residual intersection of a conic with the line (base, other), base on the conic."""
    poly = curve.restrict_to_line(base, other)
    assert poly[0] == 0, "base point must lie on the curve"
    if len(poly) != 3 or poly[2] == 0:
        raise DegenerateSeedError("line is a component of or tangent position failed on the conic")
    if poly[1] == 0:
        raise DegenerateSeedError("line is tangent to the conic at the base point")
    u = -poly[1] / poly[2]
    x = tuple(b + u * o for b, o in zip(base.coords, other.coords))
    return PlanePoint.of(*x)


# ---------------------------------------------------------------------------
# general position


@dataclass(frozen=True)
class PositionReport:
    ok: bool
    failures: tuple[tuple[str, tuple[int, ...]], ...]


def general_position_check(points) -> PositionReport:
    """Distinct, no three collinear, no six on a conic; names any violation."""
    failures = []
    for i, j in combinations(range(len(points)), 2):
        if points[i] == points[j]:
            failures.append(("duplicate", (i, j)))
    for tri in combinations(range(len(points)), 3):
        rows = [list(points[i].coords) for i in tri]
        if _det(rows) == 0:
            failures.append(("collinear", tri))
    for six in combinations(range(len(points)), 6):
        rows = [point_condition(2, points[i]) for i in six]
        if _det(rows) == 0:
            failures.append(("conic", six))
    return PositionReport(not failures, tuple(failures))


# ---------------------------------------------------------------------------
# configurations


@dataclass(frozen=True)
class Configuration:
    variant: str
    points: tuple[PlanePoint, ...]
    eckardt_point: PlanePoint
    curves: tuple[PlaneCurve, ...]
    tangent: PlaneCurve | None = None


@dataclass(frozen=True)
class ConfigASeed:
    """Two pencil members and two lines through the common point.

    ``q`` and the three ``base_points`` span the conic pencil; the two
    ``members`` are pencil parameters lambda selecting s = Q1 + lambda*Q2;
    the two ``line_points`` fix the lines through q.
    """

    q: PlanePoint
    base_points: tuple[PlanePoint, PlanePoint, PlanePoint]
    members: tuple[Fraction, Fraction]
    line_points: tuple[PlanePoint, PlanePoint]


DEFAULT_SEED_A = ConfigASeed(
    q=PlanePoint.of(0, 0),
    base_points=(PlanePoint.of(1, 0), PlanePoint.of(0, 1), PlanePoint.of(1, 1)),
    members=(Fraction(1), Fraction(2)),
    line_points=(PlanePoint.of(1, 2), PlanePoint.of(3, 1)),
)


def build_config_a(seed: ConfigASeed = DEFAULT_SEED_A) -> Configuration:
    """Two lines through q and two conics of a pencil through q.

    The pencil has base q plus the three seed points, so the residual
    intersection of the two chosen members is rational by construction.
    The four points on the lines come out as second intersections with the
    members, again rational.
    """
    q = seed.q
    b5, b6, b7 = seed.base_points
    quad1 = _product_of_lines(line_through(q, b5), line_through(b6, b7))
    quad2 = _product_of_lines(line_through(q, b6), line_through(b5, b7))
    conics = []
    for lam in seed.members:
        coeffs = [c1 + lam * c2 for c1, c2 in zip(quad1.coeffs, quad2.coeffs)]
        if not any(coeffs):
            raise DegenerateSeedError("pencil member vanished")
        conic = PlaneCurve.of(2, coeffs)
        if _conic_rank(conic) != 3:
            raise DegenerateSeedError(f"pencil member {lam} is a degenerate conic")
        conics.append(conic)
    s1, s2 = conics
    x1 = second_intersection(s1, q, seed.line_points[0])
    x2 = second_intersection(s2, q, seed.line_points[0])
    x3 = second_intersection(s1, q, seed.line_points[1])
    x4 = second_intersection(s2, q, seed.line_points[1])
    t1 = line_through(q, seed.line_points[0])
    t2 = line_through(q, seed.line_points[1])
    points = (x1, x2, x3, x4, b5, b6, b7)
    pos = general_position_check(points)
    if not pos.ok:
        raise DegenerateSeedError(f"points not in general position: {pos.failures}")
    config = Configuration("a", points, q, (t1, t2, s1, s2))
    report = validate_config(config)
    if not report.ok:
        raise DegenerateSeedError(f"built configuration fails validation: {report.failed_names()}")
    return config


def _product_of_lines(l1: PlaneCurve, l2: PlaneCurve) -> PlaneCurve:
    a1, b1, c1 = l1.coeffs
    a2, b2, c2 = l2.coeffs
    # (a1 x + b1 y + c1 z)(a2 x + b2 y + c2 z) over x2 xy xz y2 yz z2
    coeffs = (
        a1 * a2,
        a1 * b2 + b1 * a2,
        a1 * c2 + c1 * a2,
        b1 * b2,
        b1 * c2 + c1 * b2,
        c1 * c2,
    )
    return PlaneCurve.of(2, coeffs)


def _conic_rank(c: PlaneCurve) -> int:
    a, b, d, e, f, g = (Fraction(x) for x in c.coeffs)  # x2 xy xz y2 yz z2
    m = [
        [a, b / 2, d / 2],
        [b / 2, e, f / 2],
        [d / 2, f / 2, g],
    ]
    if _det(m) != 0:
        return 3
    for rows in combinations(range(3), 2):
        sub = [[m[r][c2] for c2 in rows] for r in rows]
        if _det(sub) != 0:
            return 2
    return 1


def fixture_config_b() -> Configuration:
    """Three conics through one point with a common tangent line there.

    Start from the conic x^2 = yz, rationally parametrized by
    u -> (u, u^2, 1), with tangent y = 0 at the origin of the chart.  Adding
    tangent * chord keeps membership of the chord ends and the tangency, so
    every residual intersection stays rational.
    """
    x1 = PlanePoint.of(0, 0)
    tangent = PlaneCurve.of(1, (0, 1, 0))
    s1 = PlaneCurve.of(2, (1, 0, 0, 0, -1, 0))

    def parabola(u):
        return PlanePoint.of(u, u * u)

    x2, x3, x4, x5 = (parabola(Fraction(u)) for u in (1, -1, 2, 3))
    chord = line_through(x2, x3)
    chord2 = line_through(x4, x5)

    def pencil_member(factor: Fraction, line: PlaneCurve) -> PlaneCurve:
        prod = _product_of_lines(tangent, line)
        return PlaneCurve.of(2, [a + factor * b for a, b in zip(s1.coeffs, prod.coeffs)])

    s2 = pencil_member(Fraction(1), chord)
    x6 = second_intersection(s2, x1, PlanePoint.of(1, 5, 0))
    factor = -s1.evaluate(x6) / (tangent.evaluate(x6) * chord2.evaluate(x6))
    s3 = pencil_member(factor, chord2)
    residual = PlaneCurve.of(
        1, [a - factor * b for a, b in zip(chord.coeffs, chord2.coeffs)]
    )
    x7 = second_intersection(s2, x6, _point_on_line_other_than(residual, x6))
    points = (x1, x2, x3, x4, x5, x6, x7)
    config = Configuration("b", points, x1, (s1, s2, s3), tangent)
    report = validate_config(config)
    if not report.ok:
        raise DegenerateSeedError(f"fixture b fails validation: {report.failed_names()}")
    return config


NODAL_CUBIC = PlaneCurve.of(3, (1, 0, 1, 0, 0, 0, 0, -1, 0, 0))  # y^2 z = x^2 (x + z)


def _cubic_param(u: Fraction) -> PlanePoint:
    return PlanePoint.of(u * u - 1, u**3 - u)


def _restrict_to_nodal_cubic(curve: PlaneCurve) -> list[Fraction]:
    """Coefficients in u of the curve pulled back along u -> (u^2-1, u^3-u, 1)."""
    x_poly = [Fraction(-1), Fraction(0), Fraction(1)]
    y_poly = [Fraction(0), Fraction(-1), Fraction(0), Fraction(1)]
    out = [Fraction(0)] * (3 * curve.degree + 1)
    for coeff, (i, j, _) in zip(curve.coeffs, monomials(curve.degree)):
        term = [Fraction(coeff)]
        for _ in range(i):
            term = _poly_mul(term, x_poly)
        for _ in range(j):
            term = _poly_mul(term, y_poly)
        for d, v in enumerate(term):
            out[d] += v
    return out


def _poly_divide(num, den):
    num = [Fraction(c) for c in num]
    while num and num[-1] == 0:
        num.pop()
    quot = [Fraction(0)] * max(1, len(num) - len(den) + 1)
    while len(num) >= len(den):
        f = num[-1] / den[-1]
        d = len(num) - len(den)
        quot[d] = f
        for i, c in enumerate(den):
            num[i + d] -= f * c
        while num and num[-1] == 0:
            num.pop()
    return quot, num


def _linear_factor(poly, roots, what: str) -> Fraction:
    """Divide off the known roots; the quotient must be linear with a root."""
    den = [Fraction(1)]
    for root in roots:
        den = _poly_mul(den, [-Fraction(root), Fraction(1)])
    quot, rem = _poly_divide(poly, den)
    if any(rem) or len(quot) < 2 or quot[1] == 0 or any(quot[2:]):
        raise DegenerateSeedError(f"{what}: residual intersection is not a single rational point")
    return -quot[0] / quot[1]


def fixture_config_c() -> Configuration:
    """A line, a conic, and a nodal cubic sharing a tangent direction.

    The cubic y^2 z = x^2(x+z) has its node at a rational point and a
    rational parametrization, so choosing the meeting point and three more
    points by parameter value forces every residual intersection (the third
    point on the tangent line, the fifth conic point) to be rational.
    """
    u1, u3, u4, u5 = (Fraction(u) for u in (2, -2, 3, 4))
    x1 = _cubic_param(u1)
    tangent = PlaneCurve.of(1, NODAL_CUBIC.gradient(x1))
    x3, x4, x5 = (_cubic_param(u) for u in (u3, u4, u5))
    rows = tangency_conditions(2, x1, _point_on_line_other_than(tangent, x1))
    for p in (x3, x4, x5):
        rows.append(point_condition(2, p))
    conic = curve_from_conditions(2, rows, "conic of variant c")
    u6 = _linear_factor(
        _restrict_to_nodal_cubic(conic), (u1, u1, u3, u4, u5), "conic of variant c"
    )
    u2 = _linear_factor(_restrict_to_nodal_cubic(tangent), (u1, u1), "tangent of variant c")
    x2, x6 = _cubic_param(u2), _cubic_param(u6)
    x7 = PlanePoint.of(0, 0)  # the node
    points = (x1, x2, x3, x4, x5, x6, x7)
    config = Configuration("c", points, x1, (tangent, conic, NODAL_CUBIC), tangent)
    report = validate_config(config)
    if not report.ok:
        raise DegenerateSeedError(f"fixture c fails validation: {report.failed_names()}")
    return config


def _point_on_line_other_than(line: PlaneCurve, p: PlanePoint) -> PlanePoint:
    a, b, c = line.coeffs
    for cand in (PlanePoint.of(b, -a, 0) if (a, b) != (0, 0) else None,
                 PlanePoint.of(c, 0, -a) if (a, c) != (0, 0) else None,
                 PlanePoint.of(0, c, -b)):
        if cand is not None and cand != p and line.contains(cand):
            return cand
    raise DegenerateSeedError("could not find a second point on the line")


# ---------------------------------------------------------------------------
# validation


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str = ""


@dataclass(frozen=True)
class ValidationReport:
    ok: bool
    checks: tuple[CheckResult, ...]

    def failed_names(self):
        return [c.name for c in self.checks if not c.passed]


def _tangency_holds(curve: PlaneCurve, line: PlaneCurve, p: PlanePoint) -> bool:
    """The curve meets the line at p with multiplicity at least two."""
    if not (curve.contains(p) and line.contains(p)):
        return False
    direction = _point_on_line_other_than(line, p)
    poly = curve.restrict_to_line(p, direction)
    return poly[0] == 0 and poly[1] == 0 and any(poly[2:])


def validate_config(config: Configuration) -> ValidationReport:
    checks: list[CheckResult] = []

    def add(name, passed, detail=""):
        checks.append(CheckResult(name, bool(passed), detail))

    pts = config.points
    pos = general_position_check(pts)
    add("general_position", pos.ok, str(pos.failures))

    if config.variant == "a":
        t1, t2, s1, s2 = config.curves
        add("curve_degrees", [c.degree for c in config.curves] == [1, 1, 2, 2])
        add("curves_through_meeting_point", all(c.contains(config.eckardt_point) for c in config.curves))
        add("line1_points", t1.contains(pts[0]) and t1.contains(pts[1]))
        add("line2_points", t2.contains(pts[2]) and t2.contains(pts[3]))
        add("conic1_points", all(s1.contains(p) for p in (pts[0], pts[2], pts[4], pts[5], pts[6])))
        add("conic2_points", all(s2.contains(p) for p in (pts[1], pts[3], pts[4], pts[5], pts[6])))
        add("conics_smooth", _conic_rank(s1) == 3 and _conic_rank(s2) == 3)
        add("members_distinct", len(set(config.curves)) == 4)
    elif config.variant == "b":
        s1, s2, s3 = config.curves
        add("curve_degrees", [c.degree for c in config.curves] == [2, 2, 2])
        add("has_tangent", config.tangent is not None and config.tangent.degree == 1)
        x1 = config.eckardt_point
        add("meeting_point_is_first_point", x1 == pts[0])
        if config.tangent is not None:
            add("common_tangent", all(_tangency_holds(s, config.tangent, x1) for s in config.curves))
        add("conic1_points", all(s1.contains(p) for p in (pts[0], pts[1], pts[2], pts[3], pts[4])))
        add("conic2_points", all(s2.contains(p) for p in (pts[0], pts[1], pts[2], pts[5], pts[6])))
        add("conic3_points", all(s3.contains(p) for p in (pts[0], pts[3], pts[4], pts[5], pts[6])))
        add("conics_smooth", all(_conic_rank(s) == 3 for s in config.curves))
        add("members_distinct", len(set(config.curves)) == 3)
    elif config.variant == "c":
        line, conic, cubic = config.curves
        add("curve_degrees", [c.degree for c in config.curves] == [1, 2, 3])
        x1 = config.eckardt_point
        add("meeting_point_is_first_point", x1 == pts[0])
        add("tangent_is_line_member", config.tangent == line)
        add("line_points", line.contains(pts[0]) and line.contains(pts[1]))
        add("conic_tangent_to_line", _tangency_holds(conic, line, x1))
        add("cubic_tangent_to_line", _tangency_holds(cubic, line, x1))
        add("conic_points", all(conic.contains(p) for p in (pts[0], pts[2], pts[3], pts[4], pts[5])))
        add("cubic_points", all(cubic.contains(p) for p in pts[:6]))
        add("cubic_node", _has_node(cubic, pts[6]))
        add("conic_smooth", _conic_rank(conic) == 3)
    else:
        add("variant", False, f"unknown variant {config.variant}")

    return ValidationReport(all(c.passed for c in checks), tuple(checks))


def _has_node(curve: PlaneCurve, p: PlanePoint) -> bool:
    """Singular at p with a nondegenerate tangent cone (an honest node)."""
    if not curve.contains(p):
        return False
    if any(curve.gradient(p)):
        return False
    # the quadratic part of the restriction to p + u*d is a well-defined
    # quadratic form in the direction d mod p; probe it on a local basis
    d0, d1 = _local_directions(p)
    q00 = _quadratic_part(curve, p, d0)
    q11 = _quadratic_part(curve, p, d1)
    cross = _quadratic_part(curve, p, _add_dirs(d0, d1)) - q00 - q11
    return 4 * q00 * q11 - cross * cross != 0


def _local_directions(p: PlanePoint):
    basis = [PlanePoint.of(1, 0, 0), PlanePoint.of(0, 1, 0), PlanePoint.of(0, 0, 1)]
    out = [b for b in basis if b != p]
    # two independent directions not equal to p; independence with p is
    # automatic for distinct standard basis points unless p is one of them
    picked = []
    for b in out:
        rows = [list(p.coords)] + [list(q.coords) for q in picked] + [list(b.coords)]
        if len(rows) <= 3 and _rank(rows) == len(rows):
            picked.append(b)
        if len(picked) == 2:
            return picked
    raise RuntimeError("could not pick local directions")


def _rank(rows) -> int:
    m = [[Fraction(x) for x in row] for row in rows]
    ncols = len(m[0])
    r = 0
    for col in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][col] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        for i in range(len(m)):
            if i != r and m[i][col] != 0:
                f = m[i][col] / m[r][col]
                m[i] = [v - f * w for v, w in zip(m[i], m[r])]
        r += 1
    return r


def _quadratic_part(curve: PlaneCurve, p: PlanePoint, d: PlanePoint) -> Fraction:
    poly = curve.restrict_to_line(p, d)
    return poly[2] if len(poly) > 2 else Fraction(0)


def _add_dirs(d1: PlanePoint, d2: PlanePoint) -> PlanePoint:
    return PlanePoint.of(*(a + b for a, b in zip(d1.coords, d2.coords)))


# ---------------------------------------------------------------------------
# lattice classes and serialization


def lattice_classes(config: Configuration) -> tuple[tuple[int, ...], ...]:
    """Classes of the four members on the blow-up at the seven points.

    Coordinates over (H, E_1..E_7): a curve of degree d through a subset of
    the points contributes d and -1 at each point it passes through (-2 at a
    node); the point member of variants b and c is the exceptional class.
    """
    pts = config.points

    def curve_class(c: PlaneCurve):
        mult = []
        for p in pts:
            if not c.contains(p):
                mult.append(0)
            elif c.degree == 3 and not any(c.gradient(p)):
                mult.append(2)
            else:
                mult.append(1)
        return (c.degree, *(-m for m in mult))

    if config.variant == "a":
        return tuple(curve_class(c) for c in config.curves)
    point_class = (0, 1, 0, 0, 0, 0, 0, 0)
    return (point_class,) + tuple(curve_class(c) for c in config.curves)


def _frac_str(f: Fraction) -> str:
    return str(f.numerator) if f.denominator == 1 else f"{f.numerator}/{f.denominator}"


def config_to_json(config: Configuration):
    def point_json(p):
        return [_frac_str(c) for c in p.coords]

    def curve_json(c):
        return {"degree": c.degree, "coefficients": [str(v) for v in c.coeffs]}

    return {
        "variant": config.variant,
        "points": [point_json(p) for p in config.points],
        "eckardt_point": point_json(config.eckardt_point),
        "curves": [curve_json(c) for c in config.curves],
        "tangent": curve_json(config.tangent) if config.tangent else None,
    }


def config_from_json(data) -> Configuration:
    def point_of(triple):
        x, y, z = (Fraction(v) for v in triple)
        return PlanePoint.of(x, y, z)

    def curve_of(d):
        return PlaneCurve.of(d["degree"], [Fraction(v) for v in d["coefficients"]])

    return Configuration(
        variant=data["variant"],
        points=tuple(point_of(p) for p in data["points"]),
        eckardt_point=point_of(data["eckardt_point"]),
        curves=tuple(curve_of(c) for c in data["curves"]),
        tangent=curve_of(data["tangent"]) if data.get("tangent") else None,
    )
