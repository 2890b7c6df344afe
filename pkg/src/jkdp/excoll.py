"""Exceptional collections on the resolutions and their stacks: object
algebra, a rule-based Hom-dimension engine, Gram matrices, table checks,
and the universal-extension construction of a tilting object.

Objects are symbolic: pullbacks of the three plane bundles, structure
sheaves of the lines L_t and the floor divisor D, the tower sheaves
b_{i,l}, the mutation bundle M, the stack simples at the five singular
points, and embedded copies of any resolution object.  Hom dimensions are
evaluated by the first matching support/adjunction rule; every answer is
closed against the Euler pairing of the underlying K-classes (a mismatch
raises, it is never patched), and pairs no rule covers come back Unknown
with their Euler number.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from fractions import Fraction
from functools import lru_cache

from .cyclic import CyclicType, ValidationError
from .mckay import simple_ext_dims
from .resolution import InternalInconsistencyError
from .surface import KClass, SurfaceModel, build_surface, psi_images_global

PULLBACK_KINDS = ("aO", "aT(-1)", "aO(1)")
PULLBACK_RANK = {"aO": 1, "aT(-1)": 2, "aO(1)": 1}
TORSION_KINDS = ("OL", "OD", "B")
IMAGE_DEGREES = (1, 1, 2, 2)  # plane degrees of the four tower images
A_MATRIX = (
    (1, 1, 0, 0, 0, 0, 0),
    (0, 0, 1, 1, 0, 0, 0),
    (1, 0, 1, 0, 1, 1, 1),
    (0, 1, 0, 1, 1, 1, 1),
)
COLLECTION_LABELS = ("sigma", "sigma_mut", "stack", "stack_shift", "stack_mut")


@dataclass(frozen=True)
class SymbolicObject:
    kind: str
    i: int = 0
    j: int = 0
    inner: "SymbolicObject | None" = None
    shift: int = 0

    def label(self) -> str:
        if self.kind == "Phi":
            base = self.inner.label()
        elif self.kind == "OL":
            base = f"OL{self.j}"
        elif self.kind == "B":
            base = f"b{self.i}.{self.j}"
        elif self.kind == "EP":
            base = f"e{self.j}"
        elif self.kind == "EPI":
            base = f"e{self.i}.{self.j}"
        else:
            base = self.kind
        return base if self.shift == 0 else f"{base}[{self.shift}]"

    def shifted(self, m: int) -> "SymbolicObject":
        return replace(self, shift=self.shift + m)

    def unshifted(self) -> "SymbolicObject":
        return replace(self, shift=0)


def a_o() -> SymbolicObject:
    return SymbolicObject("aO")


def a_t_twist() -> SymbolicObject:
    return SymbolicObject("aT(-1)")


def a_o_one() -> SymbolicObject:
    return SymbolicObject("aO(1)")


def o_line(t: int) -> SymbolicObject:
    if not 1 <= t <= 7:
        raise ValidationError(f"line index must be 1..7, got {t}")
    return SymbolicObject("OL", j=t)


def o_floor() -> SymbolicObject:
    return SymbolicObject("OD")


def b_sheaf(k: int, i: int, l: int) -> SymbolicObject:
    if not (1 <= i <= 4 and 1 <= l <= k):
        raise ValidationError(f"b indices out of range: i={i}, l={l}, k={k}")
    return SymbolicObject("B", i=i, j=l)


def mutation_bundle() -> SymbolicObject:
    return SymbolicObject("M")


def stack_p(k: int, j: int) -> SymbolicObject:
    if not 2 <= j <= 4 * k:
        raise ValidationError(f"central simple index must be 2..4k, got {j}")
    return SymbolicObject("EP", j=j)


def stack_pi(k: int, i: int, j: int) -> SymbolicObject:
    if not (1 <= i <= 4 and k + 1 <= j <= 2 * k):
        raise ValidationError(f"tower simple indices out of range: i={i}, j={j}, k={k}")
    return SymbolicObject("EPI", i=i, j=j)


def phi(obj: SymbolicObject) -> SymbolicObject:
    return SymbolicObject("Phi", inner=obj.unshifted(), shift=obj.shift)


@dataclass(frozen=True)
class ExceptionalCollection:
    k: int
    label: str
    objects: tuple[SymbolicObject, ...]

    def labels(self) -> list[str]:
        return [o.label() for o in self.objects]


def build(k: int, label: str) -> ExceptionalCollection:
    """The five ordered collections at level k.

    sigma / sigma_mut live on the resolution (11 + 4k objects); the three
    stack variants prepend the simples at the five singular points and embed
    the resolution collection, for 10 + 12k objects.
    """
    if k < 1:
        raise ValidationError("k must be a positive integer")
    if label not in COLLECTION_LABELS:
        raise ValidationError(f"unknown collection label {label!r}")
    lines = [o_line(t) for t in range(1, 8)]
    towers = [b_sheaf(k, i, l) for i in range(1, 5) for l in range(1, k + 1)]
    sigma = [a_o(), a_t_twist(), a_o_one(), *lines, o_floor(), *towers]
    sigma_mut = [a_o(), a_t_twist(), mutation_bundle(), a_o_one(), *lines, *towers]
    if label == "sigma":
        objects = sigma
    elif label == "sigma_mut":
        objects = sigma_mut
    else:
        central = [stack_p(k, j) for j in range(2, 4 * k + 1)]
        if label != "stack":
            central = [o.shifted(o.j - (4 * k + 1)) for o in central]
        tower_simples = [
            stack_pi(k, i, j) for i in range(1, 5) for j in range(k + 1, 2 * k + 1)
        ]
        tail = sigma_mut if label == "stack_mut" else sigma
        objects = central + tower_simples + [phi(o) for o in tail]
    expected = 11 + 4 * k if label in ("sigma", "sigma_mut") else 10 + 12 * k
    assert len(objects) == expected
    return ExceptionalCollection(k, label, tuple(objects))


# ---------------------------------------------------------------------------
# Hom dimensions


@dataclass(frozen=True)
class HomDims:
    hom: int | None
    ext1: int | None
    ext2: int | None
    chi: int

    @property
    def known(self) -> bool:
        return self.hom is not None

    def triple(self) -> tuple[int, int, int]:
        assert self.known
        return (self.hom, self.ext1, self.ext2)

    def to_json(self):
        if not self.known:
            return {"chi": self.chi, "status": "unknown"}
        return {"hom": self.hom, "ext1": self.ext1, "ext2": self.ext2}


def _central_type(k: int) -> CyclicType:
    return CyclicType(4 * k + 1, 1)


def _tower_type(k: int) -> CyclicType:
    return CyclicType(2 * k + 1, k)


def _base_dims(k: int, x: SymbolicObject, y: SymbolicObject):
    """(hom, ext1, ext2) for unshifted objects, or None if no rule applies."""
    stack_side = ("EP", "EPI", "Phi")
    if x.kind in stack_side or y.kind in stack_side:
        return _stack_dims(k, x, y)
    return _resolution_dims(k, x, y)


def _stack_dims(k: int, x: SymbolicObject, y: SymbolicObject):
    if x.kind == "Phi" and y.kind == "Phi":
        return _resolution_dims(k, x.inner, y.inner)
    if x.kind == "Phi":
        # nothing maps out of the embedded part into the simples
        return (0, 0, 0) if y.kind in ("EP", "EPI") else None
    if x.kind in ("EP", "EPI") and y.kind in ("EP", "EPI"):
        if x.kind != y.kind or (x.kind == "EPI" and x.i != y.i):
            return (0, 0, 0)
        t = _central_type(k) if x.kind == "EP" else _tower_type(k)
        return simple_ext_dims(t, x.j, y.j)
    if y.kind != "Phi":
        return None
    inner = y.inner
    if x.kind == "EP":
        return _central_vs_phi(k, x.j, inner)
    if x.kind == "EPI":
        return _tower_vs_phi(k, x.i, x.j, inner)
    return None


def _central_vs_phi(k: int, j: int, inner: SymbolicObject):
    """Adjunction through the image at the central point."""
    if inner.shift != 0 or inner.kind == "Phi":
        return None
    if j <= 4 * k - 2:
        return (0, 0, 0)
    if j == 4 * k - 1:
        # image is the degree -(4k+1) sheaf on F, placed in shift 1
        table = {
            "aO": (0, 0, 1),
            "aT(-1)": (0, 0, 2),
            "aO(1)": (0, 0, 1),
            "M": (0, 0, 2),
            "OD": (0, 2, 1),
            "OL": (0, 0, 0),
            "B": (0, 0, 1),
        }
        return table.get(inner.kind)
    if j == 4 * k:
        table = {
            "aO": (0, 0, 0),
            "aT(-1)": (0, 0, 0),
            "aO(1)": (0, 0, 0),
            "M": (0, 1, 0),
            "OD": (1, 0, 0),
            "OL": (0, 0, 0),
            "B": (0, 1, 0),
        }
        return table.get(inner.kind)
    return None


def _tower_vs_phi(k: int, i: int, j: int, inner: SymbolicObject):
    if inner.shift != 0 or inner.kind == "Phi":
        return None
    if j < k + 1 or j > 2 * k:
        return None
    if j < 2 * k:
        # image is a degree -1 sheaf on the middle curve C_{i,2k-j}
        if inner.kind in PULLBACK_KINDS + ("M", "OD", "OL"):
            return (0, 0, 0)
        if inner.kind == "B":
            if inner.i != i:
                return (0, 0, 0)
            if inner.j == 2 * k - j:
                return (1, 0, 0)
            if inner.j == 2 * k - j + 1:
                return (0, 1, 0)
            return (0, 0, 0)
        return None
    # j = 2k: image is the degree -2 sheaf on the (-3)-curve C_{i,0}
    deg = IMAGE_DEGREES[i - 1]
    if inner.kind == "aO":
        return (0, 0, 0)
    if inner.kind in ("aT(-1)", "aO(1)"):
        return (0, deg, 0)
    if inner.kind == "M":
        return (0, 0, 0) if i in (1, 2) else (0, 1, 0)
    if inner.kind == "OD":
        return (0, 1, 0)
    if inner.kind == "OL":
        return (0, A_MATRIX[i - 1][inner.j - 1], 0)
    if inner.kind == "B":
        if inner.i == i and inner.j == 1:
            return (0, 1, 0)
        return (0, 0, 0)
    return None


def _resolution_dims(k: int, x: SymbolicObject, y: SymbolicObject):
    kx, ky = x.kind, y.kind
    if kx in PULLBACK_KINDS and ky in PULLBACK_KINDS:
        forward = {"aO": 0, "aT(-1)": 1, "aO(1)": 2}
        if kx == ky:
            return (1, 0, 0)
        return (3, 0, 0) if forward[kx] < forward[ky] else (0, 0, 0)
    if kx in PULLBACK_KINDS and ky in TORSION_KINDS:
        return (PULLBACK_RANK[kx], 0, 0)
    if kx in TORSION_KINDS and ky in PULLBACK_KINDS:
        return (0, 0, 0)
    if "M" in (kx, ky):
        return _mutation_dims(x, y)
    # torsion against torsion, by support
    if kx == "OL" and ky == "OL":
        return (1, 0, 0) if x.j == y.j else (0, 0, 0)
    if (kx, ky) in (("OL", "OD"), ("OD", "OL"), ("OL", "B"), ("B", "OL")):
        return (0, 0, 0)
    if kx == "OD" and ky == "OD":
        return (1, 0, 0)
    if kx == "OD" and ky == "B":
        return (1, 1, 0)
    if kx == "B" and ky == "OD":
        return (0, 0, 0)
    if kx == "B" and ky == "B":
        if x.i != y.i:
            return (0, 0, 0)
        if x.j == y.j:
            return (1, 0, 0)
        return (1, 1, 0) if x.j < y.j else (0, 0, 0)
    return None


def _mutation_dims(x: SymbolicObject, y: SymbolicObject):
    if x.kind == "M":
        table = {
            "M": (1, 0, 0),
            "aO(1)": (1, 0, 0),
            "OL": (1, 0, 0),
            "B": (1, 0, 0),
            "aO": (0, 0, 0),
            "aT(-1)": (0, 0, 0),
        }
        return table.get(y.kind)
    table = {
        "aO": (2, 0, 0),
        "aT(-1)": (1, 0, 0),
        "aO(1)": (0, 0, 0),
        "OL": (0, 0, 0),
        "B": (0, 0, 0),
    }
    return table.get(x.kind)


def hom_dims(k: int, x: SymbolicObject, y: SymbolicObject) -> HomDims:
    """Dimensions of the three possible Hom degrees, or Unknown with chi.

    Shifts re-index the degrees.  A pair whose nonvanishing dimensions get
    pushed outside degrees 0..2 by the shifts (this happens for the floor
    sheaf column of the shifted unmutated stack collection, where maps land
    in degree -1) is reported Unknown: the three-slot contract cannot carry
    it.  Every known answer must close against the Euler pairing.
    """
    chi = chi_pair(k, x, y)
    base = _base_dims(k, x.unshifted(), y.unshifted())
    if base is None:
        return HomDims(None, None, None, chi)
    offset = y.shift - x.shift
    window = [0, 0, 0]
    for deg, val in enumerate(base):
        if val == 0:
            continue
        pos = deg - offset
        if not 0 <= pos <= 2:
            return HomDims(None, None, None, chi)
        window[pos] = val
    dims = HomDims(window[0], window[1], window[2], chi)
    if dims.hom - dims.ext1 + dims.ext2 != chi:
        raise InternalInconsistencyError(
            f"rule output {dims.triple()} for ({x.label()}, {y.label()}) "
            f"violates Euler closure chi={chi}"
        )
    return dims


# ---------------------------------------------------------------------------
# K-classes and the Euler pairing


def kclass_of_object(model: SurfaceModel, obj: SymbolicObject) -> KClass:
    """K-class of a resolution-side object (embedded copies unwrap)."""
    return _kclass_cached(model.k, obj)


@lru_cache(maxsize=None)
def _kclass_cached(k: int, obj: SymbolicObject) -> KClass:
    from .resolution import SymbolicSheaf

    model = build_surface(k)
    if obj.kind == "Phi":
        return _kclass_cached(k, obj.inner).shifted(obj.shift)
    h = model.unit("H")
    zero = (0,) * model.rank
    if obj.kind == "aO":
        out = KClass(1, zero, Fraction(0))
    elif obj.kind == "aT(-1)":
        out = KClass(2, h, Fraction(-1, 2))
    elif obj.kind == "aO(1)":
        out = KClass(1, h, Fraction(1, 2))
    elif obj.kind == "OL":
        out = model.kclass_twisted_structure(
            SymbolicSheaf.of({f"L{obj.j}": 1}, {f"L{obj.j}": 0})
        )
    elif obj.kind == "OD":
        out = model.kclass_twisted_structure(SymbolicSheaf.of({"D": 1}, {"D": 0}))
    elif obj.kind == "B":
        support = {f"C{obj.i}.{j}": 1 for j in range(obj.j, model.k + 1)}
        out = model.kclass_twisted_structure(
            SymbolicSheaf.of(support, {name: 0 for name in support})
        )
    elif obj.kind == "M":
        out = KClass(1, h, Fraction(1, 2)) - model.kclass_twisted_structure(
            SymbolicSheaf.of({"D": 1}, {"D": 0})
        )
    else:
        raise ValidationError(f"no resolution K-class for {obj.label()}")
    return out.shifted(obj.shift)


@lru_cache(maxsize=None)
def _psi_kclass_cached(k: int, obj: SymbolicObject) -> KClass:
    model = build_surface(k)
    images = psi_images_global(k)
    key = f"e{obj.j}" if obj.kind == "EP" else f"e{obj.i}.{obj.j}"
    return model.kclass_twisted_structure(images[key]).shifted(obj.shift)


def _psi_kclass(model: SurfaceModel, obj: SymbolicObject) -> KClass:
    return _psi_kclass_cached(model.k, obj)


@lru_cache(maxsize=None)
def chi_pair(k: int, x: SymbolicObject, y: SymbolicObject) -> int:
    """Euler pairing of any two collection objects."""
    model = build_surface(k)
    stack = ("EP", "EPI")
    if x.kind in stack and y.kind in stack:
        if x.kind != y.kind or (x.kind == "EPI" and x.i != y.i):
            return 0
        t = _central_type(k) if x.kind == "EP" else _tower_type(k)
        hom, e1, e2 = simple_ext_dims(t, x.j, y.j)
        sign = -1 if (y.shift - x.shift) % 2 else 1
        return sign * (hom - e1 + e2)
    if x.kind in stack and y.kind == "Phi":
        outer = -1 if (y.shift - x.shift) % 2 else 1
        em = _psi_kclass(model, x.unshifted())
        return outer * model.euler_pairing(em, kclass_of_object(model, y.unshifted()))
    if x.kind == "Phi" and y.kind in stack:
        return 0
    if x.kind in stack or y.kind in stack:
        raise ValidationError(f"cannot pair {x.label()} with {y.label()}")
    return model.euler_pairing(kclass_of_object(model, x), kclass_of_object(model, y))


def gram(k: int, label: str) -> list[list[int]]:
    coll = build(k, label)
    n = len(coll.objects)
    return [
        [chi_pair(k, coll.objects[r], coll.objects[c]) for c in range(n)]
        for r in range(n)
    ]


def gram_is_unit_upper_triangular(matrix) -> bool:
    n = len(matrix)
    for r in range(n):
        if matrix[r][r] != 1:
            return False
        for c in range(r):
            if matrix[r][c] != 0:
                return False
    return True
