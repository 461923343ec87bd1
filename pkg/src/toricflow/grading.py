"""Classification of the grading induced by a one-parameter subgroup.

An N-side vector l grades the monoid algebra by u -> <l, u>.  The sign
pattern of l on the rays of the weight cone sorts the action into four
mutually exclusive kinds:

  Hyperbolic             some ray value is negative
  Parabolic              l >= 0 and its zero face is a facet
  Elliptic               l > 0 on every ray (zero face is the origin)
  DegenerateNonnegative  l >= 0 with a zero face of intermediate dimension

Parabolic is tested before Elliptic: in rank one the origin is itself the
facet, the two conditions coincide there, and the straightening pairs
require the parabolic reading.  For a parabolic l the zero face is dual to
a unique ray of the dual cone, the distinguished ray; l is automatically a
positive multiple of its primitive generator.
"""

from dataclasses import dataclass
from enum import Enum

from .errors import NormalityRequired, NotParabolic
from .lattice import N_SIDE, LatticeVector, dot, gcd_all, primitive


class GradingKind(Enum):
    ELLIPTIC = "Elliptic"
    PARABOLIC = "Parabolic"
    HYPERBOLIC = "Hyperbolic"
    DEGENERATE_NONNEGATIVE = "DegenerateNonnegative"


@dataclass(frozen=True)
class GradingClass:
    """Outcome of classify.  zero_face and ray_index are None when the
    grading is hyperbolic; ray_index is set only for parabolic gradings."""

    kind: GradingKind
    zero_face: object
    ray_index: int | None
    degree_gcd: int
    effective: bool

    @property
    def facet(self):
        return self.zero_face if self.kind is GradingKind.PARABOLIC else None


def classify(mon, subgroup):
    """Sort the grading of mon by the N-side vector subgroup into a kind.

    Runs on any monoid, saturated or not; only the weight cone and the
    generator degrees matter.  degree_gcd is the gcd of the generator
    degrees, and the grading is effective exactly when it is 1.
    """
    if not isinstance(subgroup, LatticeVector) or subgroup.side != N_SIDE:
        raise ValueError("classify needs an N-side vector")
    if subgroup.rank != mon.rank:
        raise ValueError("rank mismatch")
    if subgroup.is_zero:
        raise ValueError("the zero vector does not grade")
    degree_gcd = gcd_all(dot(subgroup.entries, g.entries) for g in mon.generators)
    effective = degree_gcd == 1
    omega = mon.weight_cone
    values = [dot(subgroup.entries, r.entries) for r in omega.rays]
    if any(v < 0 for v in values):
        return GradingClass(GradingKind.HYPERBOLIC, None, None, degree_gcd, effective)
    face = omega.zero_face(subgroup)
    if face.dim == mon.rank - 1:
        assert len(face.saturated_normals) == 1
        ray_index = face.saturated_normals[0]
        assert primitive(subgroup).entries == mon.dual_cone.rays[ray_index].entries
        return GradingClass(GradingKind.PARABOLIC, face, ray_index, degree_gcd, effective)
    if face.dim == 0:
        return GradingClass(GradingKind.ELLIPTIC, face, None, degree_gcd, effective)
    return GradingClass(GradingKind.DEGENERATE_NONNEGATIVE, face, None, degree_gcd, effective)


@dataclass(frozen=True)
class FixedDivisor:
    """Fixed-point locus of a parabolic action, as coordinate data.

    vanishing lists the generator indices whose coordinates are zero on
    the divisor (positive degree), surviving those of degree zero.
    """

    ray_index: int
    ray: LatticeVector
    vanishing: tuple
    surviving: tuple


def fixed_locus(mon, subgroup):
    """The invariant divisor fixed pointwise by a parabolic action."""
    grading = classify(mon, subgroup)
    if grading.kind is not GradingKind.PARABOLIC:
        raise NotParabolic(grading.kind,
                           "fixed divisors exist only for parabolic gradings")
    ray_index = grading.ray_index
    ray = mon.dual_cone.rays[ray_index]
    degrees = [dot(ray.entries, g.entries) for g in mon.generators]
    vanishing = tuple(j for j, v in enumerate(degrees) if v > 0)
    surviving = tuple(j for j, v in enumerate(degrees) if v == 0)
    return FixedDivisor(ray_index, ray, vanishing, surviving)


@dataclass(frozen=True)
class StraighteningSet:
    """All subtori that straighten: one per ray of the dual cone, paired
    with the divisor it fixes."""

    subtori: tuple
    divisors: tuple


def straightening_subtori(mon):
    """Primitive dual-cone ray generators with their fixed divisors.

    Requires a saturated monoid; the induced product structure near the
    divisor is what saturation buys.
    """
    result = mon.saturation()
    if not result.saturated:
        raise NormalityRequired(result.witness.entries)
    divisors = []
    for ray in mon.dual_cone.rays:
        locus = fixed_locus(mon, ray)
        assert mon.dual_cone.rays[locus.ray_index] == ray
        divisors.append(locus)
    return StraighteningSet(tuple(mon.dual_cone.rays), tuple(divisors))
