"""Arnold germ normal forms and the gradient (Lagrangian) map.

Families A_mu, D_mu, E6, E7, E8 with their generating functions, the map
(t, q) -> (-dS/dt, q), quasihomogeneous coordinates and weights for the
E6 case, and closed-form component counts of the caustic complement used
as cross-check oracles.
"""

from dataclasses import dataclass
from typing import NamedTuple

import numpy as np


class DimensionMismatch(ValueError):
    pass


class UnsupportedClass(ValueError):
    pass


_FAMILY_MU = {"E6": 6, "E7": 7, "E8": 8}
_INTERNAL_DIMS = {"A": 1, "D": 2, "E6": 2, "E7": 2, "E8": 2}


@dataclass(frozen=True)
class GermClass:
    """One of Arnold's simple stable Lagrangian singularity classes."""

    family: str          # 'A', 'D', 'E6', 'E7', 'E8'
    mu: int
    delta: int = 1       # sign in the normal form where it matters
    n: int = 0           # ambient dimension; 0 means minimal (mu - 1)

    def __post_init__(self):
        if self.family not in _INTERNAL_DIMS:
            raise UnsupportedClass(f"unknown family {self.family!r}")
        if self.family in _FAMILY_MU and self.mu != _FAMILY_MU[self.family]:
            raise ValueError(f"{self.family} fixes mu = {_FAMILY_MU[self.family]}")
        if self.family == "D" and self.mu < 4:
            raise ValueError("family D needs mu >= 4")
        if self.family == "A" and self.mu < 1:
            raise ValueError("family A needs mu >= 1")
        if self.delta not in (-1, 1):
            raise ValueError("delta must be +-1")
        n = self.n if self.n else self.mu - 1
        if self.mu > n + 1:
            raise ValueError("mu must be <= n + 1")
        object.__setattr__(self, "n", max(n, _INTERNAL_DIMS[self.family]))
        # A_mu with even mu (or mu = 1) has Lagrangian-equivalent signs
        if self.family == "A" and (self.mu % 2 == 0 or self.mu == 1):
            object.__setattr__(self, "delta", 1)

    @property
    def k(self):
        """Number of internal variables."""
        return _INTERNAL_DIMS[self.family]

    @property
    def codim(self):
        return self.mu - 1


E6 = lambda delta=1: GermClass("E6", 6, delta, 5)


class Point5(NamedTuple):
    """Source point of the E6 map in quasihomogeneous coordinates."""

    t1: float
    t2: float
    S3: float
    S4: float
    q5: float


class TargetPoint(NamedTuple):
    q1: float
    q2: float
    q3: float
    q4: float
    q5: float


# quasihomogeneous weights of the E6 map, w(S) = 12
WEIGHTS_SOURCE = {"t1": 4, "t2": 3, "S3": 6, "S4": 5, "q5": 2, "q3": 6, "q4": 5}
WEIGHTS_TARGET = (8, 9, 6, 5, 2)       # (q1, q2, q3, q4, q5)
WEIGHTS_POINT5 = (4, 3, 6, 5, 2)       # (t1, t2, S3, S4, q5)
WEIGHTS_H = (10, 11, 12)               # (H1, H2, H3)


def generating_function(cls, t, q):
    """Value of the normal-form generating function S(t, q)."""
    t = np.atleast_1d(np.asarray(t, dtype=float))
    q = np.atleast_1d(np.asarray(q, dtype=float)) if np.size(q) else np.zeros(0)
    if t.size != cls.k:
        raise DimensionMismatch(f"{cls.family} needs {cls.k} internal variables")
    need_q = cls.n - cls.k
    if q.size != need_q:
        raise DimensionMismatch(f"{cls.family} with n={cls.n} needs {need_q} q-coordinates")
    d = float(cls.delta)
    if cls.family == "A":
        # S = delta t1^(mu+1) + q_{mu-1} t1^(mu-1) + ... + q2 t1^2
        t1 = t[0]
        s = d * t1 ** (cls.mu + 1)
        for j in range(2, cls.mu):
            s += q[j - 2] * t1 ** j
        return float(s)
    t1, t2 = t
    if cls.family == "D":
        # S = t1^2 t2 + delta t2^(mu-1) + q_{mu-1} t2^(mu-2) + ... + q3 t2^2
        s = t1 * t1 * t2 + d * t2 ** (cls.mu - 1)
        for j in range(3, cls.mu):
            s += q[j - 3] * t2 ** (j - 1)
        return float(s)
    if cls.family == "E6":
        q3, q4, q5 = q
        return float(t1**3 + d * t2**4 + q5 * t1 * t2**2 + q4 * t1 * t2 + q3 * t2**2)
    if cls.family == "E7":
        q3, q4, q5, q6 = q
        return float(t1**3 + t1 * t2**3 + q6 * t1**2 * t2 + q5 * t1**2
                     + q4 * t1 * t2 + q3 * t2**2)
    # E8
    q3, q4, q5, q6, q7 = q
    return float(t1**3 + t2**5 + q7 * t1 * t2**3 + q6 * t1 * t2**2
                 + q5 * t2**3 + q4 * t1 * t2 + q3 * t2**2)


def grad_t(cls, t, q):
    """Partials of S with respect to the internal variables."""
    t = np.atleast_1d(np.asarray(t, dtype=float))
    q = np.atleast_1d(np.asarray(q, dtype=float)) if np.size(q) else np.zeros(0)
    d = float(cls.delta)
    if cls.family == "A":
        t1 = t[0]
        g = (cls.mu + 1) * d * t1 ** cls.mu
        for j in range(2, cls.mu):
            g += j * q[j - 2] * t1 ** (j - 1)
        return np.array([g])
    t1, t2 = t
    if cls.family == "D":
        g1 = 2.0 * t1 * t2
        g2 = t1 * t1 + d * (cls.mu - 1) * t2 ** (cls.mu - 2)
        for j in range(3, cls.mu):
            g2 += (j - 1) * q[j - 3] * t2 ** (j - 2)
        return np.array([g1, g2])
    if cls.family == "E6":
        q3, q4, q5 = q
        return np.array([
            3 * t1 * t1 + q5 * t2 * t2 + q4 * t2,
            4 * d * t2**3 + 2 * q5 * t1 * t2 + q4 * t1 + 2 * q3 * t2,
        ])
    if cls.family == "E7":
        q3, q4, q5, q6 = q
        return np.array([
            3 * t1 * t1 + t2**3 + 2 * q6 * t1 * t2 + 2 * q5 * t1 + q4 * t2,
            3 * t1 * t2 * t2 + q6 * t1 * t1 + q4 * t1 + 2 * q3 * t2,
        ])
    q3, q4, q5, q6, q7 = q
    return np.array([
        3 * t1 * t1 + q7 * t2**3 + q6 * t2 * t2 + q4 * t2,
        5 * t2**4 + 3 * q7 * t1 * t2 * t2 + 2 * q6 * t1 * t2 + 3 * q5 * t2 * t2
        + q4 * t1 + 2 * q3 * t2,
    ])


def lagrangian_map(cls, t, q):
    """(t, q) -> (-dS/dt, q); the q-part is copied verbatim."""
    g = grad_t(cls, t, q)
    return np.concatenate([-g, np.atleast_1d(np.asarray(q, dtype=float))])


def e6_map(t1, t2, q3, q4, q5, delta=1):
    """E6 gradient map on raw coordinates; returns a TargetPoint."""
    d = float(delta)
    q1 = -(3 * t1 * t1 + q5 * t2 * t2 + q4 * t2)
    q2 = -(4 * d * t2**3 + 2 * q5 * t1 * t2 + q4 * t1 + 2 * q3 * t2)
    return TargetPoint(q1, q2, q3, q4, q5)


def to_point5(t1, t2, q3, q4, q5, delta=1):
    """Raw E6 source coordinates -> quasihomogeneous (t1,t2,S3,S4,q5)."""
    d = float(delta)
    s3 = 2.0 * (6.0 * d * t2 * t2 + q5 * t1 + q3)
    s4 = 2.0 * q5 * t2 + q4
    return Point5(t1, t2, s3, s4, q5)


def from_point5(x, delta=1):
    """Inverse of to_point5; returns (t1, t2, q3, q4, q5)."""
    d = float(delta)
    q3 = 0.5 * x.S3 - 6.0 * d * x.t2 * x.t2 - x.q5 * x.t1
    q4 = x.S4 - 2.0 * x.q5 * x.t2
    return (x.t1, x.t2, q3, q4, x.q5)


def map_point5(x, delta=1):
    """E6 map evaluated on a Point5."""
    t1, t2, q3, q4, q5 = from_point5(x, delta)
    return e6_map(t1, t2, q3, q4, q5, delta)


def h_invariants(x, delta=1):
    """(H1, H2, H3): the degeneracy invariants of the E6 map at x."""
    d = float(delta)
    t1, t2, s3, s4, q5 = x
    h1 = 6.0 * t1 * s3 - s4 * s4
    h2 = 144.0 * d * t1 * t1 * t2 - s3 * s4 - 6.0 * t1 * s4 * q5
    h3 = 48.0 * d * t1**3 - (s3 + 2.0 * t1 * q5) ** 2
    return (h1, h2, h3)


def scale(x, lam):
    """Quasihomogeneous scaling of a Point5 by lambda > 0."""
    if lam <= 0:
        raise ValueError("scaling factor must be positive")
    return Point5(*(xi * lam**w for xi, w in zip(x, WEIGHTS_POINT5)))


def scale_target(y, lam):
    if lam <= 0:
        raise ValueError("scaling factor must be positive")
    return TargetPoint(*(yi * lam**w for yi, w in zip(y, WEIGHTS_TARGET)))


def weights(cls):
    """Weight table {coordinate: weight} of the quasihomogeneous structure."""
    if cls.family == "E6":
        w = dict(WEIGHTS_SOURCE)
        w.update({"q1": 8, "q2": 9})
        return w
    if cls.family == "A":
        w = {"t1": 1, "q1": cls.mu}
        for j in range(2, cls.mu):
            w[f"q{j}"] = cls.mu + 1 - j
        return w
    if cls.family == "D":
        # w(t2) = 2, w(t1) = mu - 2, w(S) = 2(mu - 1)
        w = {"t1": cls.mu - 2, "t2": 2, "q1": cls.mu, "q2": 2 * cls.mu - 4}
        for j in range(3, cls.mu):
            w[f"q{j}"] = 2 * (cls.mu - j + 1)
        return w
    raise UnsupportedClass(f"no weight table for {cls.family}")


class ComponentCounts(NamedTuple):
    total: int
    noncontractible: int
    noncontractible_is_lower_bound: bool = False


def reference_component_counts(cls):
    """Closed-form component counts of the caustic complement.

    For E7/E8 the totals are known but only a lower bound exists for the
    noncontractible count; the flag marks that case.
    """
    if cls.family == "A":
        return ComponentCounts(cls.mu // 2 + 1, 0)
    if cls.family == "D":
        mu, d = cls.mu, cls.delta
        if mu % 2 == 0:
            k = mu // 2
            if d == 1:
                return ComponentCounts((k * k + 3 * k - 2) // 2, (k * k - 3 * k + 2) // 2)
            return ComponentCounts((k * k + k) // 2, (k * k - k) // 2)
        k = (mu - 1) // 2
        return ComponentCounts((k * k + 3 * k) // 2, (k * k - k) // 2)
    if cls.family == "E6":
        return ComponentCounts(7, 1)
    if cls.family == "E7":
        return ComponentCounts(10, 5, True)
    if cls.family == "E8":
        return ComponentCounts(15, 7, True)
    raise UnsupportedClass(cls.family)
