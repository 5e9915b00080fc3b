"""Piecewise-affine plants and reference models in companion form.

A system is a list of modes (companion-form affine dynamics) paired with a
polyhedral partition of the state space.  Mode matrices are never stored
densely: the companion structure (superdiagonal of ones, free coefficients
in the last row, input and affine terms entering the last row only) is
rebuilt on demand, so it cannot be violated by construction.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import PartitionDefectError

#: Guard comparison operators accepted by :meth:`Guard.from_inequality`.
_OPS = ("<", "<=", ">", ">=")


@dataclass(frozen=True)
class Guard:
    """One affine half-space constraint ``normal . x (>|>=) offset``.

    Normals are unit length so that guard values are metric distances to
    the hyperplane.  ``strict`` selects ``>`` over ``>=``.
    """

    normal: tuple[float, ...]
    offset: float
    strict: bool

    @classmethod
    def from_inequality(cls, coeffs, op: str, rhs: float) -> "Guard":
        """Build a guard from ``coeffs . x  <op>  rhs``.

        ``<`` and ``<=`` inequalities are flipped so every stored guard
        reads ``normal . x > offset`` or ``normal . x >= offset``.
        """
        if op not in _OPS:
            raise ValueError(f"unknown guard operator {op!r}")
        h = np.asarray(coeffs, dtype=float)
        c = float(rhs)
        if h.ndim != 1:
            raise ValueError("guard normal must be a vector")
        if op in ("<", "<="):
            h = -h
            c = -c
        norm = math.sqrt(float(np.dot(h, h)))
        if norm == 0.0:
            raise ValueError("guard normal must be nonzero")
        h = h / norm
        c = c / norm
        return cls(tuple(float(v) for v in h), c, strict=op in ("<", ">"))

    @property
    def dim(self) -> int:
        return len(self.normal)

    def value(self, x) -> float:
        """Signed distance of ``x`` to the guard hyperplane (positive side
        is where the inequality holds)."""
        s = 0.0
        for hk, xk in zip(self.normal, x):
            s += hk * float(xk)
        return s - self.offset

    def holds(self, x, closure: bool = False) -> bool:
        v = self.value(x)
        if self.strict and not closure:
            return v > 0.0
        return v >= 0.0


@dataclass(frozen=True)
class Region:
    """Convex polyhedral cell: conjunction of affine guards.

    An empty guard tuple denotes the whole space (single-mode systems).
    """

    guards: tuple[Guard, ...]

    def contains(self, x, closure: bool = False) -> bool:
        return all(g.holds(x, closure=closure) for g in self.guards)


@dataclass(frozen=True)
class ModeDynamics:
    """One affine mode in control canonical form.

    ``last_row`` holds the free coefficients of the companion matrix,
    ``input_gain`` the scalar entering the last row of the input matrix,
    ``affine_term`` the scalar entering the last row of the affine vector.
    """

    last_row: tuple[float, ...]
    input_gain: float
    affine_term: float = 0.0

    def __post_init__(self):
        object.__setattr__(self, "last_row", tuple(float(v) for v in self.last_row))
        if not all(math.isfinite(v) for v in self.last_row):
            raise ValueError("mode coefficients must be finite")
        if not (self.input_gain > 0.0):
            raise ValueError("input gain must be positive")

    @property
    def dim(self) -> int:
        return len(self.last_row)

    def companion_matrix(self) -> np.ndarray:
        """Dense companion matrix (rebuilt, never stored)."""
        n = self.dim
        a = np.zeros((n, n))
        for k in range(n - 1):
            a[k, k + 1] = 1.0
        a[n - 1, :] = self.last_row
        return a


@dataclass(frozen=True)
class PwaSystem:
    """Multi-modal PWA system: modes over a polyhedral partition.

    All modes share the input gain (one input matrix for the whole
    system); this is checked at construction.
    """

    modes: tuple[ModeDynamics, ...]
    regions: tuple[Region, ...]

    def __post_init__(self):
        object.__setattr__(self, "modes", tuple(self.modes))
        object.__setattr__(self, "regions", tuple(self.regions))
        if len(self.modes) == 0:
            raise ValueError("system needs at least one mode")
        if len(self.modes) != len(self.regions):
            raise ValueError("modes and regions must have equal length")
        n = self.modes[0].dim
        if any(m.dim != n for m in self.modes):
            raise ValueError("all modes must share the state dimension")
        b = self.modes[0].input_gain
        if any(m.input_gain != b for m in self.modes):
            raise ValueError("all modes must share one input gain")
        for r in self.regions:
            for g in r.guards:
                if g.dim != n:
                    raise ValueError("guard dimension mismatch")

    @property
    def dim(self) -> int:
        return self.modes[0].dim

    @property
    def mode_count(self) -> int:
        return len(self.modes)

    @property
    def input_gain(self) -> float:
        return self.modes[0].input_gain

    def last_rows(self) -> np.ndarray:
        """(M, n) array of companion last rows."""
        return np.array([m.last_row for m in self.modes])

    def affine_terms(self) -> np.ndarray:
        return np.array([m.affine_term for m in self.modes])

    def guard_index(self) -> list[tuple[int, int, Guard]]:
        """Flat enumeration of all guards as (guard_id, region, Guard)."""
        out = []
        gid = 0
        for ri, region in enumerate(self.regions):
            for g in region.guards:
                out.append((gid, ri, g))
                gid += 1
        return out


def active_region(x, system: PwaSystem) -> int:
    """Index of the region owning ``x``.

    Guards are interpreted with their closures and ties go to the lowest
    index, so boundary points get a deterministic owner.
    """
    for i, region in enumerate(system.regions):
        if region.contains(x, closure=True):
            return i
    raise PartitionDefectError(
        f"no region claims state {np.asarray(x, dtype=float).tolist()} "
        "under closure interpretation"
    )


def indicator(x, system: PwaSystem) -> np.ndarray:
    """One-hot indicator vector over the system's regions."""
    sig = np.zeros(system.mode_count)
    sig[active_region(x, system)] = 1.0
    return sig


def mode_derivative(system: PwaSystem, mode: int, x, u: float) -> np.ndarray:
    """State derivative of one mode: shifted state plus last-row dynamics."""
    if not (0 <= mode < system.mode_count):
        raise IndexError(f"mode {mode} out of range (M={system.mode_count})")
    m = system.modes[mode]
    n = m.dim
    x = np.asarray(x, dtype=float)
    out = np.empty(n)
    out[: n - 1] = x[1:]
    s = 0.0
    for k in range(n):
        s += m.last_row[k] * float(x[k])
    out[n - 1] = s + m.input_gain * float(u) + m.affine_term
    return out


def boundary_distance(x, system: PwaSystem) -> list[tuple[int, float]]:
    """Signed distance of ``x`` to every guard hyperplane.

    Positive on the side where the region's inequality holds; unit normals
    make this the metric distance.
    """
    return [(gid, g.value(x)) for gid, _ri, g in system.guard_index()]


@dataclass
class PartitionReport:
    """Monte-Carlo cover/overlap check result."""

    sample_count: int
    cover_defects: list = field(default_factory=list)
    overlap_defects: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.cover_defects and not self.overlap_defects


def validate_partition(system: PwaSystem, sample_count: int, bounds, seed: int = 0,
                       max_defects: int = 32) -> PartitionReport:
    """Sample the box ``bounds`` and report cover and overlap defects.

    ``bounds`` is a sequence of (lo, hi) per state component.  Guards are
    interpreted as declared (strictness respected), so a valid partition
    claims every sample exactly once.  Statistical check only; it cannot
    prove exactness.
    """
    if sample_count < 1:
        raise ValueError("sample_count must be >= 1")
    lo = np.array([b[0] for b in bounds], dtype=float)
    hi = np.array([b[1] for b in bounds], dtype=float)
    if lo.shape != (system.dim,) or np.any(hi < lo):
        raise ValueError("bounds must be a nonempty box of the state dimension")
    rng = np.random.default_rng(seed)
    report = PartitionReport(sample_count=sample_count)
    for _ in range(sample_count):
        x = lo + (hi - lo) * rng.random(system.dim)
        claimants = [i for i, r in enumerate(system.regions) if r.contains(x)]
        if not claimants and len(report.cover_defects) < max_defects:
            report.cover_defects.append(x.tolist())
        elif len(claimants) > 1 and len(report.overlap_defects) < max_defects:
            report.overlap_defects.append((x.tolist(), claimants))
    return report
