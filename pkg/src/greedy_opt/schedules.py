"""Step-size, oracle-error, batch-size, and gradient-weight schedules.

Rules are small frozen dataclasses so runs can be described declaratively,
replayed bit-identically, and handed to the compiled kernels (each rule kind
has an integer code mirrored there).  Power rules evaluate at ``max(k, 1)``
so they remain defined at ``k = 0`` for the 0-based deterministic loop.
"""
from __future__ import annotations

from dataclasses import dataclass

from .errors import InvalidInputError, InvalidScheduleError

# kind codes shared with the kernels
ETA_CONST, ETA_STANDARD, ETA_POWER = 0, 1, 2
EPS_ZERO, EPS_CONST, EPS_LINKED, EPS_POWER = 0, 1, 2, 3
BATCH_CONST, BATCH_LINEAR = 0, 1


@dataclass(frozen=True)
class EtaRule:
    """Step-size sequence eta_k in [0, 1]."""

    kind: int
    a: float = 0.0

    def __call__(self, k: int) -> float:
        if self.kind == ETA_CONST:
            return self.a
        if self.kind == ETA_STANDARD:
            return 2.0 / (k + 2.0)
        return float(max(k, 1)) ** (-self.a)

    @property
    def name(self) -> str:
        if self.kind == ETA_CONST:
            return f"const({self.a:g})"
        if self.kind == ETA_STANDARD:
            return "standard"
        return f"power({self.a:g})"


def standard_eta() -> EtaRule:
    """eta_k = 2 / (k + 2)."""
    return EtaRule(ETA_STANDARD)


def power_eta(q: float) -> EtaRule:
    """eta_k = max(k, 1) ** (-q), q in (0, 1]."""
    if not 0.0 < q <= 1.0:
        raise InvalidScheduleError(f"power exponent must be in (0, 1], got {q}")
    return EtaRule(ETA_POWER, q)


def const_eta(v: float) -> EtaRule:
    if not 0.0 <= v <= 1.0:
        raise InvalidScheduleError(f"constant step size must be in [0, 1], got {v}")
    return EtaRule(ETA_CONST, v)


@dataclass(frozen=True)
class EpsRule:
    """Oracle-error sequence eps_k >= 0.

    ``linked`` means eps_k = a * eta_k (the c-Jones / c-FW regime);
    ``power`` means eps_k = max(k, 1) ** (-a).
    """

    kind: int
    a: float = 0.0

    def value(self, k: int, eta_k: float) -> float:
        if self.kind == EPS_ZERO:
            return 0.0
        if self.kind == EPS_CONST:
            return self.a
        if self.kind == EPS_LINKED:
            return self.a * eta_k
        return float(max(k, 1)) ** (-self.a)

    @property
    def name(self) -> str:
        return {
            EPS_ZERO: "zero",
            EPS_CONST: f"const({self.a:g})",
            EPS_LINKED: f"linked({self.a:g})",
            EPS_POWER: f"power({self.a:g})",
        }[self.kind]


def zero_eps() -> EpsRule:
    return EpsRule(EPS_ZERO)


def linked_eps(c: float) -> EpsRule:
    """eps_k = c * eta_k."""
    if c < 0:
        raise InvalidScheduleError(f"c must be nonnegative, got {c}")
    return EpsRule(EPS_LINKED, c)


def const_eps(v: float) -> EpsRule:
    if v < 0:
        raise InvalidScheduleError(f"eps must be nonnegative, got {v}")
    return EpsRule(EPS_CONST, v)


def power_eps(q: float) -> EpsRule:
    """eps_k = max(k, 1) ** (-q)."""
    if q <= 0:
        raise InvalidScheduleError(f"power exponent must be positive, got {q}")
    return EpsRule(EPS_POWER, q)


def corollary_abs(c: float):
    """Absolute slack tau_k = 4c / (k + 2)**2 for joint-minimization steps."""
    if c < 0:
        raise InvalidScheduleError(f"c must be nonnegative, got {c}")

    def tau(k: int) -> float:
        return 4.0 * c / (k + 2.0) ** 2

    return tau


@dataclass(frozen=True)
class Schedules:
    """Schedule pair (eta_k, eps_k) for the deterministic run loop."""

    eta: EtaRule
    eps: EpsRule

    @classmethod
    def standard(cls, c: float = 0.0) -> "Schedules":
        """eta_k = 2/(k+2) with eps_k = c * eta_k."""
        return cls(standard_eta(), linked_eps(c) if c > 0 else zero_eps())

    def describe(self) -> str:
        return f"eta={self.eta.name},eps={self.eps.name}"


@dataclass(frozen=True)
class BatchRule:
    """Minibatch size b_k >= 1; ``linear`` is b_k = k (1-based loops)."""

    kind: int
    a: int = 1

    def __call__(self, k: int) -> int:
        if self.kind == BATCH_CONST:
            return self.a
        return max(k, 1)

    @property
    def name(self) -> str:
        return f"const({self.a})" if self.kind == BATCH_CONST else "linear"


def const_batch(b: int) -> BatchRule:
    if b < 1:
        raise InvalidInputError(f"batch size must be >= 1, got {b}")
    return BatchRule(BATCH_CONST, int(b))


def linear_batch() -> BatchRule:
    return BatchRule(BATCH_LINEAR)


@dataclass(frozen=True)
class SigmaRule:
    """Gradient-accumulation weights for the regularized stochastic runner.

    ``varying``: sigma_k = c * eta_k ** 1.5; ``fixed``: sigma_k = c * t ** -0.75
    for a horizon t fixed in advance.
    """

    kind: str  # "varying" | "fixed"
    c: float
    t: int = 0

    def value(self, k: int, eta_k: float) -> float:
        if self.kind == "varying":
            return self.c * eta_k**1.5
        return self.c * float(self.t) ** -0.75

    @property
    def name(self) -> str:
        if self.kind == "varying":
            return f"varying(c={self.c:g})"
        return f"fixed(c={self.c:g},t={self.t})"


@dataclass(frozen=True)
class StochasticSchedules:
    """Schedules for the stochastic runners; sigma only applies to the
    regularized variant."""

    eta: EtaRule
    eps: EpsRule
    batch: BatchRule
    sigma: SigmaRule | None = None

    @classmethod
    def asj_fixed_horizon(cls, t: int, c: float = 0.0) -> "StochasticSchedules":
        """b_k = t, eta_k = t**-0.5, eps_k = c * eta_k for a horizon t."""
        if t < 1:
            raise InvalidInputError(f"horizon must be >= 1, got {t}")
        eta = const_eta(float(t) ** -0.5)
        return cls(eta, linked_eps(c) if c > 0 else zero_eps(), const_batch(t))

    @classmethod
    def asj_anytime(cls, c: float = 0.0) -> "StochasticSchedules":
        """b_k = k, eta_k = k**-0.5."""
        return cls(power_eta(0.5), linked_eps(c) if c > 0 else zero_eps(), linear_batch())

    @classmethod
    def arsfw(cls, p: float, c: float, lam: float, R2: float, rho: float) -> "StochasticSchedules":
        """eta_k = k**-p, eps_k = (lam - 1) R^2 / rho * eta_k, sigma_k = c eta_k**1.5."""
        _check_arsfw_params(p, c, lam, rho)
        scale = (lam - 1.0) * R2 / rho
        eps = linked_eps(scale) if scale > 0 else zero_eps()
        return cls(power_eta(p), eps, const_batch(1), SigmaRule("varying", c))

    @classmethod
    def arsfw_fixed_sigma(
        cls, t: int, p: float, c: float, lam: float, R2: float, rho: float
    ) -> "StochasticSchedules":
        """As :meth:`arsfw` but with constant sigma = c * t**-0.75."""
        _check_arsfw_params(p, c, lam, rho)
        if t < 1:
            raise InvalidInputError(f"horizon must be >= 1, got {t}")
        scale = (lam - 1.0) * R2 / rho
        eps = linked_eps(scale) if scale > 0 else zero_eps()
        return cls(power_eta(p), eps, const_batch(1), SigmaRule("fixed", c, int(t)))

    def describe(self) -> str:
        parts = [f"eta={self.eta.name}", f"eps={self.eps.name}", f"b={self.batch.name}"]
        if self.sigma is not None:
            parts.append(f"sigma={self.sigma.name}")
        return ",".join(parts)


def _check_arsfw_params(p: float, c: float, lam: float, rho: float) -> None:
    if not 0.0 < p < 1.0:
        raise InvalidScheduleError(f"p must be in (0, 1), got {p}")
    if c < 0:
        raise InvalidInputError(f"c must be nonnegative, got {c}")
    if lam < 1.0:
        raise InvalidInputError(f"lambda must be >= 1, got {lam}")
    if rho <= 0:
        raise InvalidInputError(f"rho must be positive, got {rho}")
