"""Geodetic/Cartesian coordinate primitives shared by every other module.

All positions are WGS-84 geodetic (latitude, longitude in degrees, altitude
in meters above the ellipsoid).  Local Cartesian work happens in East-North-Up
frames anchored at a declared origin; the ENU transform is a rigid motion of
ECEF, so 3-D Euclidean distances computed in any ENU frame are exact.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

# WGS-84 ellipsoid
WGS84_A = 6378137.0
WGS84_F = 1.0 / 298.257223563
WGS84_E2 = WGS84_F * (2.0 - WGS84_F)
WGS84_B = WGS84_A * (1.0 - WGS84_F)

# Vacuum speed of light; tropospheric slowdown is ignored on purpose.
SPEED_OF_LIGHT_MPS = 299_792_458.0

MIN_ALTITUDE_M = -500.0
MAX_ALTITUDE_M = 30_000.0


@dataclass(frozen=True)
class GeoPosition:
    """A WGS-84 geodetic position (degrees, degrees, meters)."""

    latitude_deg: float
    longitude_deg: float
    altitude_m: float = 0.0

    def __post_init__(self):
        if not (-90.0 <= self.latitude_deg <= 90.0):
            raise ValueError(f"latitude out of range: {self.latitude_deg}")
        if not (-180.0 <= self.longitude_deg < 180.0):
            raise ValueError(f"longitude out of range: {self.longitude_deg}")
        if not (MIN_ALTITUDE_M <= self.altitude_m <= MAX_ALTITUDE_M) or not math.isfinite(
            self.altitude_m
        ):
            raise ValueError(f"altitude out of range: {self.altitude_m}")


@dataclass(frozen=True)
class EnuPoint:
    """Local Cartesian offset (meters) relative to a declared geodetic origin."""

    east_m: float
    north_m: float
    up_m: float


@dataclass(frozen=True)
class PropagationModel:
    """Straight-line propagation at a constant speed (default: vacuum c)."""

    speed_mps: float = SPEED_OF_LIGHT_MPS

    def __post_init__(self):
        if not self.speed_mps > 0.0:
            raise ValueError("propagation speed must be positive")


DEFAULT_PROPAGATION = PropagationModel()


# ---------------------------------------------------------------------------
# Array-level transforms.  All accept scalars or ndarrays and broadcast.
# ---------------------------------------------------------------------------

def geodetic_to_ecef(lat_deg, lon_deg, alt_m):
    """WGS-84 geodetic to Earth-centered Earth-fixed (meters)."""
    lat = np.radians(lat_deg)
    lon = np.radians(lon_deg)
    sin_lat = np.sin(lat)
    cos_lat = np.cos(lat)
    n = WGS84_A / np.sqrt(1.0 - WGS84_E2 * sin_lat * sin_lat)
    x = (n + alt_m) * cos_lat * np.cos(lon)
    y = (n + alt_m) * cos_lat * np.sin(lon)
    z = (n * (1.0 - WGS84_E2) + alt_m) * sin_lat
    return x, y, z


def ecef_to_geodetic(x, y, z):
    """ECEF to WGS-84 geodetic via Bowring's closed form.

    Accurate to well below a millimeter for terrestrial altitudes, which is
    far tighter than the ENU round-trip tolerance this library guarantees.
    """
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    z = np.asarray(z, dtype=float)
    p = np.hypot(x, y)
    theta = np.arctan2(z * WGS84_A, p * WGS84_B)
    ep2 = (WGS84_A * WGS84_A - WGS84_B * WGS84_B) / (WGS84_B * WGS84_B)
    lat = np.arctan2(
        z + ep2 * WGS84_B * np.sin(theta) ** 3,
        p - WGS84_E2 * WGS84_A * np.cos(theta) ** 3,
    )
    lon = np.arctan2(y, x)
    sin_lat = np.sin(lat)
    n = WGS84_A / np.sqrt(1.0 - WGS84_E2 * sin_lat * sin_lat)
    cos_lat = np.cos(lat)
    # Near the poles cos(lat) ~ 0; fall back to the polar-axis formula there.
    alt = np.where(
        np.abs(cos_lat) > 1e-10,
        p / np.maximum(np.abs(cos_lat), 1e-300) - n,
        np.abs(z) / np.maximum(np.abs(sin_lat), 1e-300) - n * (1.0 - WGS84_E2),
    )
    lat_deg = np.degrees(lat)
    lon_deg = np.degrees(lon)
    # Keep longitudes in [-180, 180).
    lon_deg = np.where(lon_deg >= 180.0, lon_deg - 360.0, lon_deg)
    return lat_deg, lon_deg, alt


def _enu_rotation(origin: GeoPosition):
    lat = math.radians(origin.latitude_deg)
    lon = math.radians(origin.longitude_deg)
    sin_lat, cos_lat = math.sin(lat), math.cos(lat)
    sin_lon, cos_lon = math.sin(lon), math.cos(lon)
    return np.array(
        [
            [-sin_lon, cos_lon, 0.0],
            [-sin_lat * cos_lon, -sin_lat * sin_lon, cos_lat],
            [cos_lat * cos_lon, cos_lat * sin_lon, sin_lat],
        ]
    )


def geodetic_to_enu(lat_deg, lon_deg, alt_m, origin: GeoPosition):
    """Geodetic to local ENU (meters) at `origin`."""
    x, y, z = geodetic_to_ecef(lat_deg, lon_deg, alt_m)
    ox, oy, oz = geodetic_to_ecef(
        origin.latitude_deg, origin.longitude_deg, origin.altitude_m
    )
    rot = _enu_rotation(origin)
    d = np.stack(np.broadcast_arrays(x - ox, y - oy, z - oz), axis=-1)
    enu = d @ rot.T
    return enu[..., 0], enu[..., 1], enu[..., 2]


def enu_to_geodetic(east_m, north_m, up_m, origin: GeoPosition):
    """Inverse of :func:`geodetic_to_enu`."""
    ox, oy, oz = geodetic_to_ecef(
        origin.latitude_deg, origin.longitude_deg, origin.altitude_m
    )
    rot = _enu_rotation(origin)
    enu = np.stack(np.broadcast_arrays(east_m, north_m, up_m), axis=-1)
    ecef = enu @ rot
    return ecef_to_geodetic(ecef[..., 0] + ox, ecef[..., 1] + oy, ecef[..., 2] + oz)


def meters_per_degree(lat_deg: float) -> tuple[float, float]:
    """Local meridian and parallel arc lengths of one degree at `lat_deg`."""
    lat = math.radians(lat_deg)
    sin_lat = math.sin(lat)
    denom = math.sqrt(1.0 - WGS84_E2 * sin_lat * sin_lat)
    m_radius = WGS84_A * (1.0 - WGS84_E2) / denom**3
    n_radius = WGS84_A / denom
    return (
        math.radians(1.0) * m_radius,
        math.radians(1.0) * n_radius * math.cos(lat),
    )


# ---------------------------------------------------------------------------
# Scalar operations over the value types.
# ---------------------------------------------------------------------------

def to_enu(p: GeoPosition, origin: GeoPosition) -> EnuPoint:
    """Cartesian offset of `p` in the locally tangent ENU frame at `origin`."""
    e, n, u = geodetic_to_enu(p.latitude_deg, p.longitude_deg, p.altitude_m, origin)
    return EnuPoint(float(e), float(n), float(u))


def from_enu(pt: EnuPoint, origin: GeoPosition) -> GeoPosition:
    lat, lon, alt = enu_to_geodetic(pt.east_m, pt.north_m, pt.up_m, origin)
    return GeoPosition(float(lat), float(lon), float(alt))


def distance_3d(a: GeoPosition, b: GeoPosition) -> float:
    """Euclidean 3-D distance in meters (exact, computed in ECEF)."""
    ax, ay, az = geodetic_to_ecef(a.latitude_deg, a.longitude_deg, a.altitude_m)
    bx, by, bz = geodetic_to_ecef(b.latitude_deg, b.longitude_deg, b.altitude_m)
    return float(math.hypot(ax - bx, ay - by, az - bz))


def horizontal_distance(a: GeoPosition, b: GeoPosition) -> float:
    """Planar east-north distance in meters, in the ENU frame anchored at `a`."""
    e, n, _ = geodetic_to_enu(b.latitude_deg, b.longitude_deg, b.altitude_m, a)
    return float(math.hypot(e, n))


def propagation_time(
    a: GeoPosition, b: GeoPosition, model: PropagationModel = DEFAULT_PROPAGATION
) -> float:
    """Straight-line signal travel time between two positions, in seconds."""
    return distance_3d(a, b) / model.speed_mps
