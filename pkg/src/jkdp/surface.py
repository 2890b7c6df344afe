"""Intersection theory of the minimal resolutions in the hypersurface series.

For each level k >= 1 the resolution is a rational surface of Picard rank
9 + 4k, realized here through an explicit blow-up bookkeeping: the plane
classes H, E_1..E_7, the class G_0 of the first extra blow-up, and classes
G_{i,1}..G_{i,k} for the four towers of infinitely-near points.  Every curve
the construction names (the central curve F, the four chains C_{i,0..k},
the lines L_t, the floor divisor D, the canonical class K) is an integer
vector in that basis, and every quoted intersection number is verified at
build time: the model refuses to construct if any fails.

The numerical K-theory layer (rank, first Chern class, half-integer ch2)
and the Euler pairing live here as well.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .cyclic import CyclicType, ValidationError
from .resolution import SymbolicSheaf, psi_simple

A_MATRIX = (
    (1, 1, 0, 0, 0, 0, 0),
    (0, 0, 1, 1, 0, 0, 0),
    (1, 0, 1, 0, 1, 1, 1),
    (0, 1, 0, 1, 1, 1, 1),
)


class SurfaceConsistencyError(RuntimeError):
    """A quoted intersection number failed during model construction."""


@dataclass(frozen=True)
class KClass:
    """Numerical K-theory class: rank, first Chern vector, half-integer ch2."""

    rank: int
    c1: tuple[int, ...]
    ch2: Fraction

    def __post_init__(self):
        if (2 * self.ch2).denominator != 1:
            raise ValidationError(f"ch2 must be a half integer, got {self.ch2}")

    def __add__(self, other: "KClass") -> "KClass":
        return KClass(
            self.rank + other.rank,
            tuple(a + b for a, b in zip(self.c1, other.c1)),
            self.ch2 + other.ch2,
        )

    def __sub__(self, other: "KClass") -> "KClass":
        return self + other.scale(-1)

    def scale(self, n: int) -> "KClass":
        return KClass(n * self.rank, tuple(n * c for c in self.c1), n * self.ch2)

    def shifted(self, m: int) -> "KClass":
        return self if m % 2 == 0 else self.scale(-1)


class SurfaceModel:
    """The Picard lattice and named curve classes at level k."""

    def __init__(self, k: int):
        if k < 1:
            raise ValidationError("k must be a positive integer")
        self.k = k
        self.basis = (
            ["H"]
            + [f"E{t}" for t in range(1, 8)]
            + ["G0"]
            + [f"G{i}.{j}" for i in range(1, 5) for j in range(1, k + 1)]
        )
        self._index = {name: pos for pos, name in enumerate(self.basis)}
        self.rank = len(self.basis)
        self.classes = self._build_classes()
        self._validate()

    # -- lattice plumbing ---------------------------------------------------

    def unit(self, name: str) -> tuple[int, ...]:
        vec = [0] * self.rank
        vec[self._index[name]] = 1
        return tuple(vec)

    def combine(self, terms: dict[str, int]) -> tuple[int, ...]:
        vec = [0] * self.rank
        for name, c in terms.items():
            vec[self._index[name]] += c
        return tuple(vec)

    def dot(self, u, v) -> int:
        return u[0] * v[0] - sum(a * b for a, b in zip(u[1:], v[1:]))

    def curve(self, label: str) -> tuple[int, ...]:
        return self.classes[label]

    def pair(self, label_u: str, label_v: str) -> int:
        return self.dot(self.classes[label_u], self.classes[label_v])

    # -- construction -------------------------------------------------------

    def _build_classes(self):
        k = self.k
        u = self.unit
        plane_images = (
            self.combine({"H": 1, "E1": -1, "E2": -1}),
            self.combine({"H": 1, "E3": -1, "E4": -1}),
            self.combine({"H": 2, "E1": -1, "E3": -1, "E5": -1, "E6": -1, "E7": -1}),
            self.combine({"H": 2, "E2": -1, "E4": -1, "E5": -1, "E6": -1, "E7": -1}),
        )
        classes: dict[str, tuple[int, ...]] = {"H": u("H")}
        all_g = {f"G{i}.{j}": -1 for i in range(1, 5) for j in range(1, k + 1)}
        classes["F"] = self.combine({"G0": 1} | all_g)
        for i in range(1, 5):
            base = list(plane_images[i - 1])
            base[self._index["G0"]] -= 1
            base[self._index[f"G{i}.1"]] -= 1
            classes[f"C{i}.0"] = tuple(base)
            for j in range(1, k):
                classes[f"C{i}.{j}"] = self.combine({f"G{i}.{j}": 1, f"G{i}.{j + 1}": -1})
            classes[f"C{i}.{k}"] = u(f"G{i}.{k}")
        for t in range(1, 8):
            classes[f"L{t}"] = u(f"E{t}")
        d = list(classes["F"])
        for i in range(1, 5):
            for j in range(1, k + 1):
                cij = classes[f"C{i}.{j}"]
                d = [a + j * b for a, b in zip(d, cij)]
        classes["D"] = tuple(d)
        classes["K"] = self.combine(
            {"H": -3}
            | {f"E{t}": 1 for t in range(1, 8)}
            | {"G0": 1}
            | {f"G{i}.{j}": 1 for i in range(1, 5) for j in range(1, k + 1)}
        )
        return classes

    def _validate(self) -> None:
        k = self.k
        checks: list[tuple[str, int, int]] = []

        def want(label: str, got: int, expected: int) -> None:
            checks.append((label, got, expected))

        want("F.F", self.pair("F", "F"), -(4 * k + 1))
        want("F.K", self.pair("F", "K"), 4 * k - 1)
        want("D.D", self.pair("D", "D"), -1)
        want("D.K", self.pair("D", "K"), -1)
        want("D.F", self.pair("D", "F"), -1)
        want("K.K", self.pair("K", "K"), 9 - (8 + 4 * k))
        for i in range(1, 5):
            want(f"C{i}.0^2", self.pair(f"C{i}.0", f"C{i}.0"), -3)
            want(f"C{i}.0.K", self.pair(f"C{i}.0", "K"), 1)
            for j in range(1, k):
                want(f"C{i}.{j}^2", self.pair(f"C{i}.{j}", f"C{i}.{j}"), -2)
                want(f"C{i}.{j}.K", self.pair(f"C{i}.{j}", "K"), 0)
            want(f"C{i}.{k}^2", self.pair(f"C{i}.{k}", f"C{i}.{k}"), -1)
            want(f"C{i}.{k}.K", self.pair(f"C{i}.{k}", "K"), -1)
            for j in range(0, k):
                want(
                    f"C{i}.{j}.C{i}.{j + 1}",
                    self.pair(f"C{i}.{j}", f"C{i}.{j + 1}"),
                    1,
                )
            want(f"C{i}.{k}.F", self.pair(f"C{i}.{k}", "F"), 1)
            for j in range(0, k):
                want(f"C{i}.{j}.F", self.pair(f"C{i}.{j}", "F"), 0)
            for j in range(0, k + 1):
                for j2 in range(j + 2, k + 1):
                    want(
                        f"C{i}.{j}.C{i}.{j2}",
                        self.pair(f"C{i}.{j}", f"C{i}.{j2}"),
                        0,
                    )
                # the floor divisor meets each tower once, through C_{i,1}
                want(f"D.C{i}.{j}", self.pair("D", f"C{i}.{j}"), 1 if j == 0 else 0)
            for i2 in range(i + 1, 5):
                for j in range(0, k + 1):
                    for j2 in range(0, k + 1):
                        want(
                            f"C{i}.{j}.C{i2}.{j2}",
                            self.pair(f"C{i}.{j}", f"C{i2}.{j2}"),
                            0,
                        )
        for t in range(1, 8):
            want(f"L{t}^2", self.pair(f"L{t}", f"L{t}"), -1)
            want(f"L{t}.K", self.pair(f"L{t}", "K"), -1)
            want(f"L{t}.F", self.pair(f"L{t}", "F"), 0)
            want(f"L{t}.D", self.pair(f"L{t}", "D"), 0)
            for i in range(1, 5):
                want(
                    f"C{i}.0.L{t}",
                    self.pair(f"C{i}.0", f"L{t}"),
                    A_MATRIX[i - 1][t - 1],
                )
                for j in range(1, k + 1):
                    want(f"C{i}.{j}.L{t}", self.pair(f"C{i}.{j}", f"L{t}"), 0)
            for t2 in range(t + 1, 8):
                want(f"L{t}.L{t2}", self.pair(f"L{t}", f"L{t2}"), 0)
        bad = [(lbl, got, exp) for lbl, got, exp in checks if got != exp]
        if bad:
            raise SurfaceConsistencyError(f"intersection numbers off: {bad[:10]}")
        if self.chi_structure(self.classes["D"]) != 1:
            raise SurfaceConsistencyError("chi(O_D) != 1")

    # -- sheaf-level numbers --------------------------------------------------

    def chi_structure(self, z: tuple[int, ...]) -> Fraction:
        """chi of the structure sheaf of an effective divisor class z."""
        zz = self.dot(z, z)
        zk = self.dot(z, self.classes["K"])
        return -Fraction(zz + zk, 2)

    def kclass_twisted_structure(self, sheaf: SymbolicSheaf) -> KClass:
        """K-class of a twisted structure sheaf given by support and degrees."""
        if sheaf.is_zero:
            return KClass(0, (0,) * self.rank, Fraction(0))
        support = dict(sheaf.support.coeffs)
        z = [0] * self.rank
        for label, mult in support.items():
            z = [a + mult * b for a, b in zip(z, self.classes[label])]
        z = tuple(z)
        chi = self.chi_structure(z) + sum(
            support[name] * deg for name, deg in sheaf.degrees
        )
        ch2 = chi + Fraction(self.dot(z, self.classes["K"]), 2)
        out = KClass(0, z, ch2)
        return out.shifted(sheaf.shift)

    def euler_pairing(self, x: KClass, y: KClass) -> int:
        # all-integer evaluation of twice the pairing; ch2 has denominator 2
        kv = self.classes["K"]
        mixed = tuple(x.rank * cy - y.rank * cx for cx, cy in zip(x.c1, y.c1))
        doubled = (
            2 * x.rank * y.rank
            + x.rank * int(2 * y.ch2)
            + y.rank * int(2 * x.ch2)
            - 2 * self.dot(x.c1, y.c1)
            - self.dot(kv, mixed)
        )
        if doubled % 2 != 0:
            raise SurfaceConsistencyError(f"non-integral Euler pairing {Fraction(doubled, 2)}")
        return doubled // 2


@lru_cache(maxsize=None)
def build_surface(k: int) -> SurfaceModel:
    return SurfaceModel(k)


# ---------------------------------------------------------------------------
# discrepancies


@dataclass(frozen=True)
class Discrepancies:
    """Log discrepancies of the resolution: d on F, d_j on C_{i,j-1}."""

    central: Fraction
    chain: tuple[Fraction, ...]


def discrepancies(k: int) -> Discrepancies:
    if k < 1:
        raise ValidationError("k must be a positive integer")
    central = -Fraction(4 * k - 1, 4 * k + 1)
    chain = tuple(-Fraction(k - (j - 1), 2 * k + 1) for j in range(1, k + 1))
    return Discrepancies(central, chain)


def discrepancies_solved(model: SurfaceModel) -> Discrepancies:
    """Recompute the discrepancies from the intersection matrix alone.

    Solves (K - sum d_E E) . E' = 0 over all curves E' contracted by the
    resolution, one unknown per contracted curve, and checks the four chains
    agree.  A singular system would mean the curve configuration is wrong.
    """
    k = model.k
    labels = ["F"] + [f"C{i}.{j}" for i in range(1, 5) for j in range(0, k)]
    n = len(labels)
    mat = [
        [Fraction(model.pair(labels[r], labels[c])) for c in range(n)]
        for r in range(n)
    ]
    rhs = [Fraction(model.pair(labels[r], "K")) for r in range(n)]
    sol = _solve(mat, rhs)
    central = sol[0]
    per_chain = [tuple(sol[1 + (i - 1) * k + j] for j in range(k)) for i in range(1, 5)]
    if len(set(per_chain)) != 1:
        raise SurfaceConsistencyError("chain discrepancies differ between the four towers")
    return Discrepancies(central, per_chain[0])


def _solve(mat, rhs):
    n = len(mat)
    aug = [row[:] + [rhs[i]] for i, row in enumerate(mat)]
    for col in range(n):
        piv = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if piv is None:
            raise SurfaceConsistencyError("singular discrepancy system")
        aug[col], aug[piv] = aug[piv], aug[col]
        inv = 1 / aug[col][col]
        aug[col] = [x * inv for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    return [aug[r][n] for r in range(n)]


# ---------------------------------------------------------------------------
# global images of the stack simples


@lru_cache(maxsize=None)
def psi_images_global(k: int) -> dict[str, SymbolicSheaf]:
    """Images of every stack simple as a sheaf on the resolution.

    The central point carries the type 1/(4k+1)(1,1) with its single curve
    renamed to F; the four chain points carry 1/(2k+1)(1,k) with curve t of
    the local chain renamed to C_{i,t-1}.
    """
    out: dict[str, SymbolicSheaf] = {}
    central = CyclicType(4 * k + 1, 1)
    for j in range(4 * k + 1):
        out[f"e{j}"] = psi_simple(central, j).relabel({"E1": "F"})
    branch = CyclicType(2 * k + 1, k)
    for i in range(1, 5):
        mapping = {f"E{t}": f"C{i}.{t - 1}" for t in range(1, k + 1)}
        for j in range(2 * k + 1):
            out[f"e{i}.{j}"] = psi_simple(branch, j).relabel(mapping)
    return out


def ranks(k: int) -> dict[str, int]:
    if k < 1:
        raise ValidationError("k must be a positive integer")
    return {
        "picard_rank_resolution": 9 + 4 * k,
        "ktheory_rank_resolution": 11 + 4 * k,
        "picard_rank_coarse": (9 + 4 * k) - (1 + 4 * k),
    }


# ---------------------------------------------------------------------------
# tabular exports


def curve_labels(k: int) -> list[str]:
    labels = ["F"]
    for i in range(1, 5):
        labels.extend(f"C{i}.{j}" for j in range(0, k + 1))
    labels.extend(f"L{t}" for t in range(1, 8))
    labels.extend(["D", "K"])
    return labels


def intersection_table(model: SurfaceModel) -> list[list]:
    labels = curve_labels(model.k)
    rows: list[list] = [["curve"] + labels]
    for a in labels:
        rows.append([a] + [model.pair(a, b) for b in labels])
    return rows


def classes_json(model: SurfaceModel):
    labels = curve_labels(model.k)
    return {
        "k": model.k,
        "basis": list(model.basis),
        "classes": {label: list(vec) for label, vec in sorted(model.classes.items())},
        "intersections": {
            a: {b: model.pair(a, b) for b in labels} for a in labels
        },
    }
