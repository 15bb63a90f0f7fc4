"""Crease-curve descriptions and the reference folding scenario geometry.

The reference scenario works on the half strip (0, 2) x (-1/2, 0) whose
crease is the intersection with the unit circle: an arc running from
(1, 0) on the symmetry axis down to (sqrt(3)/2, -1/2) on the lower edge.
"""

import math
from dataclasses import dataclass, field

import numpy as np

S1, S2, S3 = "S1", "S2", "S3"
SETTINGS = (S1, S2, S3)

ARC_START = np.array([1.0, 0.0])
ARC_END = np.array([math.sqrt(3.0) / 2.0, -0.5])
ARC_ANGLE = math.pi / 6.0  # swept clockwise from angle 0 to -pi/6


def validate_point(p):
    p = np.asarray(p, dtype=float)
    if p.shape != (2,) or not np.all(np.isfinite(p)):
        raise ValueError(f"invalid point {p!r}")
    return p


class CircularArc:
    """Unit-speed parametrization of an arc of the circle |x - c| = R.

    b(s) runs from angle phi0 with signed sweep; |b'(s)| = 1.
    """

    def __init__(self, center=(0.0, 0.0), radius=1.0, phi0=0.0,
                 phi1=-ARC_ANGLE):
        self.center = np.asarray(center, dtype=float)
        self.radius = float(radius)
        self.phi0 = float(phi0)
        self.phi1 = float(phi1)

    @property
    def length(self):
        return abs(self.phi1 - self.phi0) * self.radius

    def _angle(self, s):
        sgn = 1.0 if self.phi1 >= self.phi0 else -1.0
        return self.phi0 + sgn * np.asarray(s, dtype=float) / self.radius

    def point(self, s):
        phi = self._angle(s)
        return self.center + self.radius * np.stack(
            [np.cos(phi), np.sin(phi)], axis=-1)

    def tangent(self, s):
        phi = self._angle(s)
        sgn = 1.0 if self.phi1 >= self.phi0 else -1.0
        return sgn * np.stack([-np.sin(phi), np.cos(phi)], axis=-1)

    def project(self, p):
        """Radial projection onto the circle (exact for this geometry)."""
        p = np.asarray(p, dtype=float)
        d = p - self.center
        r = np.linalg.norm(d, axis=-1, keepdims=True)
        return self.center + self.radius * d / r


@dataclass
class CreaseSpec:
    """Exact crease curve, its polygonal approximation, and the treatment.

    setting S1 resolves the exact curve with curved elements, S2 uses the
    polyline with continuity everywhere, S3 uses the polyline with
    continuity only at its vertices.
    """

    setting: str = S3
    n_interior_vertices: int = 1
    curve: CircularArc = field(default_factory=CircularArc)

    def __post_init__(self):
        if self.setting not in SETTINGS:
            raise ValueError(f"unknown crease setting {self.setting!r}")
        if self.n_interior_vertices < 0:
            raise ValueError("vertex count must be >= 0")
        self._check_unit_speed()

    def _check_unit_speed(self):
        s = np.linspace(0.0, self.curve.length, 33)
        t = self.curve.tangent(s)
        if np.max(np.abs(np.linalg.norm(t, axis=-1) - 1.0)) > 1e-10:
            raise ValueError("crease parametrization is not unit speed")

    @property
    def vertices(self):
        """Polyline vertices c_0 .. c_m at equal arclength on the curve."""
        return crease_polyline(self, self.n_interior_vertices)

    @property
    def n_segments(self):
        return self.n_interior_vertices + 1

    def vertex_arclengths(self, n_interior=None):
        n = self.n_interior_vertices if n_interior is None else n_interior
        return np.linspace(0.0, self.curve.length, n + 2)


def crease_polyline(crease, n_interior_vertices):
    """Endpoints plus n interior vertices, equally spaced in arclength."""
    spec = crease if isinstance(crease, CreaseSpec) else CreaseSpec(
        curve=crease, n_interior_vertices=n_interior_vertices)
    s = np.linspace(0.0, spec.curve.length, n_interior_vertices + 2)
    return spec.curve.point(s)


def polyline_max_distance(curve, n_interior_vertices, samples_per_seg=200):
    """Brute-force max distance between the polyline and the exact curve."""
    verts = crease_polyline(CreaseSpec(curve=curve), n_interior_vertices)
    s = np.linspace(0.0, curve.length, (n_interior_vertices + 1)
                    * samples_per_seg + 1)
    pts = curve.point(s)
    # distance from each curve sample to the nearest polyline segment
    dists = np.full(pts.shape[0], np.inf)
    for a, b in zip(verts[:-1], verts[1:]):
        d = b - a
        L2 = d @ d
        t = np.clip((pts - a) @ d / L2, 0.0, 1.0)
        seg = np.linalg.norm(pts - (a + t[:, None] * d), axis=1)
        dists = np.minimum(dists, seg)
    return float(dists.max())
