"""Vectors, atom sets with linear minimization oracles, finite-sum objectives,
and the Bregman/curvature machinery shared by every algorithm in the package.

Points are plain 1-D ``float64`` numpy arrays.  The feasible set ``W`` is the
convex hull of an atom set ``S``: either an explicit finite list of atoms or
the boundary sphere of a Euclidean ball (whose hull is the closed ball).
"""
from __future__ import annotations

import math
from typing import Callable, NamedTuple, Protocol, TypeAlias, Union

import numpy as np
from numpy.typing import NDArray

from .errors import (
    DimensionMismatchError,
    InvalidInputError,
    UnsupportedDomainError,
)

Vector: TypeAlias = NDArray[np.float64]

LMO_MODES = ("exact", "adversarial", "seeded-random")


def as_point(coords, dim: int | None = None) -> Vector:
    """Validate and convert ``coords`` to a finite 1-D float64 vector."""
    w = np.asarray(coords, dtype=np.float64)
    if w.ndim != 1 or w.size == 0:
        raise InvalidInputError(f"point must be a non-empty 1-D vector, got shape {w.shape}")
    if not np.all(np.isfinite(w)):
        raise InvalidInputError("point has non-finite coordinates")
    if dim is not None and w.size != dim:
        raise DimensionMismatchError(f"expected dimension {dim}, got {w.size}")
    return w


def _check_dim(a: int, b: int) -> None:
    if a != b:
        raise DimensionMismatchError(f"dimension mismatch: {a} vs {b}")


class FiniteAtoms:
    """Atom set given as an explicit non-empty list of points.

    The feasible set is the convex hull of the atoms.
    """

    def __init__(self, atoms) -> None:
        arr = np.asarray(atoms, dtype=np.float64)
        if arr.ndim != 2 or arr.shape[0] == 0:
            raise InvalidInputError("FiniteAtoms needs a non-empty (m, dim) array of atoms")
        if not np.all(np.isfinite(arr)):
            raise InvalidInputError("atoms have non-finite coordinates")
        self.atoms = arr

    @property
    def dim(self) -> int:
        return self.atoms.shape[1]

    def __len__(self) -> int:
        return self.atoms.shape[0]

    def diameter(self) -> float:
        """Largest pairwise Euclidean distance between atoms."""
        a = self.atoms
        diffs = a[:, None, :] - a[None, :, :]
        return float(np.sqrt((diffs**2).sum(axis=2).max()))

    def sample_atom(self, gen: np.random.Generator) -> Vector:
        return self.atoms[int(gen.integers(0, len(self)))]

    def sample_hull_point(self, gen: np.random.Generator) -> Vector:
        """Uniform Dirichlet convex combination of the atoms."""
        lam = gen.dirichlet(np.ones(len(self)))
        return lam @ self.atoms

    def __repr__(self) -> str:
        return f"FiniteAtoms(m={len(self)}, dim={self.dim})"


class Ball:
    """Atom set = the sphere ``{w: ||w - center|| = radius}``; hull = closed ball."""

    def __init__(self, center, radius: float) -> None:
        self.center = as_point(center)
        if not (radius > 0 and math.isfinite(radius)):
            raise InvalidInputError(f"radius must be positive and finite, got {radius}")
        self.radius = float(radius)

    @property
    def dim(self) -> int:
        return self.center.size

    def diameter(self) -> float:
        return 2.0 * self.radius

    def sample_atom(self, gen: np.random.Generator) -> Vector:
        u = gen.standard_normal(self.dim)
        n = np.linalg.norm(u)
        while n == 0.0:
            u = gen.standard_normal(self.dim)
            n = np.linalg.norm(u)
        return self.center + self.radius * (u / n)

    def sample_hull_point(self, gen: np.random.Generator) -> Vector:
        """Uniform direction with radius ``r * u**(1/dim)`` (uniform in the ball)."""
        d = self.sample_atom(gen) - self.center
        scale = float(gen.uniform()) ** (1.0 / self.dim)
        return self.center + scale * d

    def __repr__(self) -> str:
        return f"Ball(dim={self.dim}, radius={self.radius})"


AtomSet = Union[FiniteAtoms, Ball]


class Objective(Protocol):
    """Anything with a value and a gradient."""

    def value(self, w: Vector) -> float: ...

    def gradient(self, w: Vector) -> Vector: ...


class SimpleObjective:
    """Adapter wrapping plain ``value``/``gradient`` callables."""

    def __init__(self, value: Callable[[Vector], float], gradient: Callable[[Vector], Vector]):
        self._value = value
        self._gradient = gradient

    def value(self, w: Vector) -> float:
        return float(self._value(w))

    def gradient(self, w: Vector) -> Vector:
        return np.asarray(self._gradient(w), dtype=np.float64)


class LeastSquaresComponent:
    """One squared-residual term ``(x . w - y)**2`` with gradient ``2 (x . w - y) x``."""

    def __init__(self, x, y: float) -> None:
        self.x = as_point(x)
        self.y = float(y)

    def value(self, w: Vector) -> float:
        r = float(self.x @ w) - self.y
        return r * r

    def gradient(self, w: Vector) -> Vector:
        r = float(self.x @ w) - self.y
        return 2.0 * r * self.x

    def __repr__(self) -> str:
        return f"LeastSquaresComponent(x={self.x!r}, y={self.y})"


class FiniteSumObjective:
    """``f(w) = (1/n) sum_i f_i(w)`` over components with value/gradient."""

    def __init__(self, components) -> None:
        comps = list(components)
        if not comps:
            raise InvalidInputError("finite sum needs at least one component")
        self.components = comps
        self.n = len(comps)

    def value(self, w: Vector) -> float:
        acc = 0.0
        for c in self.components:
            acc += c.value(w)
        return acc / self.n

    def gradient(self, w: Vector) -> Vector:
        acc = np.zeros_like(np.asarray(w, dtype=np.float64))
        for c in self.components:
            acc += c.gradient(w)
        return acc / self.n


class LeastSquaresObjective(FiniteSumObjective):
    """Averaged least squares ``(1/n) sum_i (x_i . w - y_i)**2``.

    Caches the second-moment matrices so full values and gradients cost
    ``O(dim**2)`` regardless of ``n``; the component list is still exposed
    for per-sample access.
    """

    def __init__(self, X, Y) -> None:
        X = np.asarray(X, dtype=np.float64)
        Y = np.asarray(Y, dtype=np.float64)
        if X.ndim != 2 or Y.ndim != 1 or X.shape[0] != Y.size:
            raise InvalidInputError("need X of shape (n, dim) and Y of shape (n,)")
        super().__init__([LeastSquaresComponent(x, y) for x, y in zip(X, Y)])
        self.X = X
        self.Y = Y
        self.sxx = (X.T @ X) / self.n
        self.sxy = (X.T @ Y) / self.n
        self.syy = float(Y @ Y) / self.n

    @property
    def dim(self) -> int:
        return self.X.shape[1]

    def value(self, w: Vector) -> float:
        w = np.asarray(w, dtype=np.float64)
        return float(w @ (self.sxx @ w) - 2.0 * (self.sxy @ w) + self.syy)

    def gradient(self, w: Vector) -> Vector:
        w = np.asarray(w, dtype=np.float64)
        return 2.0 * (self.sxx @ w - self.sxy)

    def smoothness(self) -> float:
        """Smallest L with ||grad f(w) - grad f(w')|| <= L ||w - w'||: 2 lambda_max(sxx)."""
        return 2.0 * float(np.linalg.eigvalsh(self.sxx)[-1])


class LmoResult(NamedTuple):
    d: Vector
    value: float


def lmo(atoms: AtomSet, g) -> LmoResult:
    """Exact linear minimization: the atom minimizing ``g . d`` over ``S``.

    Finite atoms: exhaustive scan, ties broken by lowest index.  Ball: the
    closed form ``center - r g/||g||``; a zero gradient returns the
    conventional atom ``center + r e_1``.
    """
    g = as_point(g, atoms.dim)
    if isinstance(atoms, FiniteAtoms):
        idx, val = _lmo_index(atoms, g)
        return LmoResult(atoms.atoms[idx].copy(), val)
    norm = float(np.linalg.norm(g))
    if norm == 0.0:
        d = atoms.center.copy()
        d[0] += atoms.radius
    else:
        d = atoms.center - (atoms.radius / norm) * g
    return LmoResult(d, float(g @ d))


def _lmo_index(atoms: FiniteAtoms, g: Vector) -> tuple[int, float]:
    vals = atoms.atoms @ g
    best = 0
    for i in range(1, len(vals)):
        if vals[i] < vals[best]:
            best = i
    return best, float(vals[best])


def approx_lmo(atoms: AtomSet, g, eps: float, mode: str = "exact", rng=None) -> Vector:
    """eps-approximate linear minimization: some ``d`` in ``S`` with
    ``g . d <= min_{d'} g . d' + eps``.

    ``exact`` ignores ``eps``.  ``adversarial`` returns the worst admissible
    atom (finite sets: the highest ``g . d`` within slack, ties to the highest
    index; ball: the exact direction rotated in the first coordinate plane
    until the slack reaches ``eps``).  ``seeded-random`` picks uniformly among
    admissible finite atoms and needs ``rng`` (an ``Rng`` or numpy
    ``BitGenerator``).
    """
    g = as_point(g, atoms.dim)
    if eps < 0:
        raise InvalidInputError(f"eps must be nonnegative, got {eps}")
    if mode not in LMO_MODES:
        raise InvalidInputError(f"unknown mode {mode!r}; expected one of {LMO_MODES}")
    if mode == "exact" or eps == 0.0:
        return lmo(atoms, g).d

    if isinstance(atoms, FiniteAtoms):
        vals = atoms.atoms @ g
        vmin = float(vals.min())
        admissible = [i for i in range(len(vals)) if vals[i] - vmin <= eps]
        if mode == "adversarial":
            best = admissible[0]
            for i in admissible[1:]:
                if vals[i] >= vals[best]:
                    best = i
            return atoms.atoms[best].copy()
        if rng is None:
            raise InvalidInputError("seeded-random mode needs an rng")
        pick = admissible[_draw_index(rng, len(admissible))]
        return atoms.atoms[pick].copy()

    if mode == "seeded-random":
        raise UnsupportedDomainError("seeded-random approx_lmo is defined for finite atoms only")
    return _ball_adversarial(atoms, g, eps)


def _ball_adversarial(atoms: Ball, g: Vector, eps: float) -> Vector:
    """Rotate the exact ball LMO point in the (e1, e2) plane until the slack
    against ``g`` equals ``eps`` (capped at the largest achievable slack)."""
    exact = lmo(atoms, g).d
    v = exact - atoms.center
    if atoms.dim < 2:
        return exact
    a = g[0] * v[0] + g[1] * v[1]
    # slack(theta) = a (cos(theta) - 1) >= 0 since a <= 0 for the exact point
    if a >= 0.0:
        return exact
    slack_max = -2.0 * a
    target = min(eps, slack_max)
    for _ in range(8):
        cos_t = max(-1.0, min(1.0, 1.0 + target / a))
        sin_t = math.sqrt(max(0.0, 1.0 - cos_t * cos_t))
        d = exact.copy()
        d[0] = atoms.center[0] + (v[0] * cos_t - v[1] * sin_t)
        d[1] = atoms.center[1] + (v[0] * sin_t + v[1] * cos_t)
        slack = float(g @ d) - float(g @ exact)
        if slack <= eps:
            return d
        target *= 1.0 - 1e-12  # nudge against rounding overshoot
    return exact


def _draw_index(rng, n: int) -> int:
    """Uniform index in [0, n) from an Rng, BitGenerator, or Generator.

    Uses one raw 64-bit draw reduced modulo ``n`` (the package-wide
    convention; the modulo bias is below n / 2**64).
    """
    bitgen = getattr(rng, "bit_generator", None)
    if callable(bitgen):  # Rng dataclass
        bitgen = rng.bit_generator()
    elif bitgen is None:
        bitgen = rng  # assume BitGenerator
    raw = int(bitgen.random_raw())
    return raw % n


def duality_gap(f: Objective, w, atoms: AtomSet) -> float:
    """``max_{d in S} grad f(w) . (w - d)``; upper-bounds ``f(w) - f(w*)`` for convex f."""
    w = as_point(w, atoms.dim)
    g = np.asarray(f.gradient(w), dtype=np.float64)
    return float(g @ w) - lmo(atoms, g).value


def bregman(f: Objective, w, y) -> float:
    """Bregman divergence ``f(w) - f(y) - grad f(y) . (w - y)``; >= 0 for convex f."""
    w = as_point(w)
    y = as_point(y, w.size)
    gy = np.asarray(f.gradient(y), dtype=np.float64)
    return float(f.value(w)) - float(f.value(y)) - float(gy @ (w - y))


def curvature_bound_smooth(L: float, atoms: AtomSet) -> float:
    """Curvature bound ``L * diam(S)**2`` for an L-smooth objective."""
    if not L > 0:
        raise InvalidInputError(f"L must be positive, got {L}")
    d = atoms.diameter()
    return L * d * d


def empirical_curvature(f: Objective, atoms: AtomSet, samples: int, seed: int) -> float:
    """Lower estimate of the curvature: max of ``(2/eta**2) D_f((1-eta) w + eta d, w)``
    over random triples (w in W, d in S, eta in (0,1))."""
    if samples < 1:
        raise InvalidInputError("samples must be >= 1")
    gen = np.random.default_rng(seed)
    best = 0.0
    for _ in range(samples):
        w = atoms.sample_hull_point(gen)
        d = atoms.sample_atom(gen)
        eta = float(gen.uniform())
        while eta == 0.0:
            eta = float(gen.uniform())
        val = (2.0 / (eta * eta)) * bregman(f, (1.0 - eta) * w + eta * d, w)
        if val > best:
            best = val
    return best
