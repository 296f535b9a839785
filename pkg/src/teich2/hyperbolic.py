"""Poincare-disk primitives: distance, geodesic arcs, SU(1,1) Mobius maps.

The model is the open unit disk |z| < 1 carrying the metric
4(dx^2+dy^2)/(1-x^2-y^2)^2 of curvature -1.  Orientation-preserving
isometries act as z -> (u z + v)/(conj(v) z + conj(u)) with
|u|^2 - |v|^2 = 1; the pair (u, v) and its negative give the same map,
so group equality is always taken up to global sign.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

__all__ = [
    "DiskPoint",
    "GeodesicArc",
    "MobiusTransform",
    "dist",
    "translation",
    "m_half_turn",
    "rotation",
    "projective_gap",
]

# constructors reject SU(1,1) pairs whose normalization defect exceeds this
SU_DEFECT_TOLERANCE = 1e-9
# |Tr| within this band of 2 classifies as parabolic
PARABOLIC_BAND = 1e-9
# components below this are treated as zero by the canonical-sign rule
_SIGN_EPS = 1e-9


def _as_complex(p: "DiskPoint | complex | float") -> complex:
    return complex(p)


def _require_in_disk(z: complex) -> complex:
    if abs(z) >= 1.0:
        raise ValueError(f"point {z!r} is not strictly inside the unit disk")
    return z


@dataclass(frozen=True)
class DiskPoint:
    """A validated point of the open unit disk."""

    z: complex

    def __post_init__(self):
        _require_in_disk(complex(self.z))

    def __complex__(self) -> complex:
        return complex(self.z)


def dist(z: "DiskPoint | complex | float", w: "DiskPoint | complex | float") -> float:
    """Hyperbolic distance arccosh(1 + 2|z-w|^2 / ((1-|z|^2)(1-|w|^2)))."""
    zc = _require_in_disk(_as_complex(z))
    wc = _require_in_disk(_as_complex(w))
    num = 2.0 * abs(zc - wc) ** 2
    den = (1.0 - abs(zc) ** 2) * (1.0 - abs(wc) ** 2)
    return math.acosh(1.0 + num / den)


@dataclass(frozen=True)
class GeodesicArc:
    """A complete geodesic: circle orthogonal to the boundary, or a diameter.

    Circular arcs store the Euclidean radius ``radius`` > 0 and the angle
    ``phi`` of the Euclidean center, which sits at sqrt(1+R^2) e^{i phi}.
    ``radius=None`` marks the diameter through the origin in direction
    ``phi`` (the R -> infinity limit of the circular parametrization).
    """

    radius: float | None
    phi: float

    def __post_init__(self):
        if self.radius is not None and not self.radius > 0.0:
            raise ValueError(f"arc radius must be positive, got {self.radius!r}")

    @classmethod
    def circular(cls, radius: float, phi: float) -> "GeodesicArc":
        return cls(float(radius), float(phi))

    @classmethod
    def diameter(cls, phi: float) -> "GeodesicArc":
        return cls(None, float(phi))

    @property
    def kind(self) -> str:
        return "diameter" if self.radius is None else "circular"

    @property
    def center(self) -> complex:
        """Euclidean center sqrt(1+R^2) e^{i phi} (circular arcs only)."""
        if self.radius is None:
            raise ValueError("a diameter has no Euclidean center")
        return math.sqrt(1.0 + self.radius**2) * cmath.exp(1j * self.phi)

    def point(self, s: float) -> complex:
        """Unit-speed point at arc length s from the point nearest the origin.

        Circular arcs evaluate
        (cosh s + i R sinh s) / (sqrt(1+R^2) cosh s + R) * e^{i phi},
        which traces the circle of radius R about sqrt(1+R^2) e^{i phi};
        diameters evaluate tanh(s/2) e^{i phi}.
        """
        if self.radius is None:
            return math.tanh(0.5 * s) * cmath.exp(1j * self.phi)
        r = self.radius
        ch, sh = math.cosh(s), math.sinh(s)
        w = (ch + 1j * r * sh) / (math.sqrt(1.0 + r * r) * ch + r)
        return w * cmath.exp(1j * self.phi)


@dataclass(frozen=True)
class MobiusTransform:
    """SU(1,1) matrix [[u, v], [conj(v), conj(u)]] acting on the disk.

    Construction renormalizes |u|^2 - |v|^2 to exactly 1 when the defect is
    below SU_DEFECT_TOLERANCE and rejects the pair otherwise.
    """

    u: complex
    v: complex

    def __post_init__(self):
        u, v = complex(self.u), complex(self.v)
        det = abs(u) ** 2 - abs(v) ** 2
        if abs(det - 1.0) > SU_DEFECT_TOLERANCE:
            raise ValueError(f"|u|^2-|v|^2 = {det!r} is not renormalizable to 1")
        scale = 1.0 / math.sqrt(det)
        object.__setattr__(self, "u", u * scale)
        object.__setattr__(self, "v", v * scale)

    @classmethod
    def identity(cls) -> "MobiusTransform":
        return cls(1.0 + 0.0j, 0.0j)

    def __call__(self, z: "DiskPoint | complex | float") -> complex:
        zc = _require_in_disk(_as_complex(z))
        return (self.u * zc + self.v) / (self.v.conjugate() * zc + self.u.conjugate())

    def __matmul__(self, other: "MobiusTransform") -> "MobiusTransform":
        return MobiusTransform(
            self.u * other.u + self.v * other.v.conjugate(),
            self.u * other.v + self.v * other.u.conjugate(),
        )

    def inverse(self) -> "MobiusTransform":
        return MobiusTransform(self.u.conjugate(), -self.v)

    @property
    def trace(self) -> float:
        return 2.0 * self.u.real

    def classify(self) -> str:
        """elliptic / parabolic / hyperbolic by |Tr| vs 2 (band 1e-9)."""
        t = abs(self.trace)
        if abs(t - 2.0) <= PARABOLIC_BAND:
            return "parabolic"
        return "hyperbolic" if t > 2.0 else "elliptic"

    def canonical(self) -> "MobiusTransform":
        """Sign representative: first nonzero of (Re u, Im u, Re v, Im v) > 0."""
        for c in (self.u.real, self.u.imag, self.v.real, self.v.imag):
            if abs(c) > _SIGN_EPS:
                if c < 0.0:
                    return MobiusTransform(-self.u, -self.v)
                return self
        return self

    def projective_gap(self, other: "MobiusTransform") -> float:
        return projective_gap(self, other)


def projective_gap(a: MobiusTransform, b: MobiusTransform) -> float:
    """Sup-norm distance between (u,v) pairs, minimized over the global sign."""
    plus = max(abs(a.u - b.u), abs(a.v - b.v))
    minus = max(abs(a.u + b.u), abs(a.v + b.v))
    return min(plus, minus)


def rotation(phi: float) -> MobiusTransform:
    """R_phi = diag(e^{i phi/2}, e^{-i phi/2}); acts as z -> e^{i phi} z."""
    return MobiusTransform(cmath.exp(0.5j * phi), 0.0j)


def translation(p: "DiskPoint | complex | float") -> MobiusTransform:
    """H(p) = -1/(1-|p|^2) [[1+|p|^2, 2p], [2 conj(p), 1+|p|^2]].

    Acts as the half turn about the origin followed by the half turn about
    p, so H(p)[-p] = p; a hyperbolic translation for p != 0.
    """
    pc = _require_in_disk(_as_complex(p))
    scale = -1.0 / (1.0 - abs(pc) ** 2)
    return MobiusTransform(scale * (1.0 + abs(pc) ** 2), scale * 2.0 * pc)


def m_half_turn(omega: complex) -> MobiusTransform:
    """M(omega) = i/sqrt(1-|omega|^2) [[1, -omega], [conj(omega), -1]].

    Trace-zero (a half turn about the disk point mapped from omega);
    M(omega)^2 = -identity.
    """
    oc = _require_in_disk(complex(omega))
    scale = 1j / math.sqrt(1.0 - abs(oc) ** 2)
    return MobiusTransform(scale, -scale * oc)
