"""Special functions for the closed-form link metrics.

Meijer G-functions (univariate and the bivariate EGBMGF) are evaluated as
Mellin-Barnes integrals along vertical contours with composite
Gauss-Legendre panels.  Gamma products are accumulated as sums of
log-gammas and exponentiated once per node, relative to the peak of the
integrand, so large imaginary parts and large parameters do not overflow.

Convention for the univariate kernel (``s = c + i t``)::

    G(z) = 1/(2 pi i) * int  prod_{j<=m} Gamma(b_j - s) prod_{j<=n} Gamma(1 - a_j + s)
                             -------------------------------------------------- z^s ds
                             prod_{j>m} Gamma(1 - b_j + s) prod_{j>n} Gamma(a_j - s)
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Sequence

import numpy as np
from scipy import optimize, special

__all__ = [
    "SpecfunError",
    "PoleProximityError",
    "NonConvergent",
    "ContourBlocked",
    "AccuracyNotReached",
    "MeijerGSpec",
    "MeijerBlock",
    "OuterBlock",
    "ContourConfig",
    "Egbmgf2Spec",
    "GResult",
    "log_gamma_complex",
    "erf",
    "meijer_g",
    "meijer_g_eval",
    "egbmgf",
    "egbmgf_eval",
]

_GL_ORDER = 16
_MAX_LEVELS = 9
_MAX_2D_NODES = 6_000_000
_POLE_EPS = 1e-12
_SHIFT_EPS = 1e-9
_EPS = np.finfo(float).eps
_LOG_PI = math.log(math.pi)


class SpecfunError(ArithmeticError):
    """Base class for evaluator failures."""


class PoleProximityError(SpecfunError, ValueError):
    """Argument lies on (or within 1e-12 of) a pole of the gamma function."""


class NonConvergent(SpecfunError):
    """The Mellin-Barnes integral does not converge on a vertical line."""


class ContourBlocked(SpecfunError):
    """No vertical line separates the ascending and descending pole sets."""

    def __init__(self, message: str, axis: str | None = None):
        super().__init__(message)
        self.axis = axis


class AccuracyNotReached(SpecfunError):
    """Adaptive refinement was exhausted before the target error was met."""

    def __init__(self, message: str, axis: str | None = None, estimate: float = math.nan):
        super().__init__(message)
        self.axis = axis
        self.estimate = estimate


# ---------------------------------------------------------------------------
# elementary functions


def log_gamma_complex(s: complex) -> complex:
    """Principal branch of log Gamma(s).

    Raises PoleProximityError when ``s`` is within 1e-12 of a non-positive
    integer.
    """
    s = complex(s)
    if s.real < 0.5:
        k = round(s.real)
        if k <= 0 and abs(s - k) < _POLE_EPS:
            raise PoleProximityError(f"log_gamma_complex: {s} is at the pole {k}")
    return complex(special.loggamma(s))


def erf(x: float) -> float:
    """Error function of a real argument."""
    return math.erf(float(x))


def _log_abs_gamma_lower(x: float) -> float:
    # Smooth lower bound of log|Gamma(x)|; the sin factor of the reflection
    # formula is dropped so the bound never dips into the zeros of 1/Gamma.
    if x >= 0.5:
        return math.lgamma(x)
    return _LOG_PI - math.lgamma(1.0 - x)


@lru_cache(maxsize=None)
def _gl_rule(order: int) -> tuple[np.ndarray, np.ndarray]:
    x, w = np.polynomial.legendre.leggauss(order)
    return x, w


def _panels(lo: float, hi: float, n: int, order: int = _GL_ORDER) -> tuple[np.ndarray, np.ndarray]:
    """Nodes and weights of ``n`` equal Gauss-Legendre panels on [lo, hi]."""
    x, w = _gl_rule(order)
    edges = np.linspace(lo, hi, n + 1)
    half = 0.5 * np.diff(edges)
    mid = 0.5 * (edges[1:] + edges[:-1])
    nodes = (mid[:, None] + half[:, None] * x[None, :]).ravel()
    weights = (half[:, None] * w[None, :]).ravel()
    return nodes, weights


# ---------------------------------------------------------------------------
# parameter containers


def _floats(values: Sequence[float]) -> tuple[float, ...]:
    return tuple(float(v) for v in values)


@dataclass(frozen=True)
class MeijerBlock:
    """Order and parameters of one Meijer G kernel, without the argument."""

    m: int
    n: int
    p: int
    q: int
    a: tuple[float, ...] = ()
    b: tuple[float, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "a", _floats(self.a))
        object.__setattr__(self, "b", _floats(self.b))
        if min(self.m, self.n, self.p, self.q) < 0:
            raise ValueError("orders must be non-negative")
        if not (self.m <= self.q and self.n <= self.p):
            raise ValueError(f"need 0 <= m <= q and 0 <= n <= p, got m={self.m} n={self.n} p={self.p} q={self.q}")
        if len(self.a) != self.p or len(self.b) != self.q:
            raise ValueError(f"expected {self.p} a-parameters and {self.q} b-parameters, "
                             f"got {len(self.a)} and {len(self.b)}")

    @property
    def delta(self) -> float:
        return self.m + self.n - 0.5 * (self.p + self.q)


@dataclass(frozen=True)
class MeijerGSpec(MeijerBlock):
    """A univariate Meijer G-function G^{m,n}_{p,q}(z | a; b) at real z > 0."""

    z: float = 1.0

    def __post_init__(self):
        super().__post_init__()
        object.__setattr__(self, "z", float(self.z))
        if not (self.z > 0 and math.isfinite(self.z)):
            raise ValueError(f"argument z must be positive and finite, got {self.z}")

    @property
    def block(self) -> MeijerBlock:
        return MeijerBlock(self.m, self.n, self.p, self.q, self.a, self.b)


@dataclass(frozen=True)
class OuterBlock:
    """Outer block of the bivariate function, a function of u = s + t.

    Numerator gammas are Gamma(a_j + u) for j <= m and Gamma(1 - b_j - u) for
    j <= n; the remaining parameters enter the denominator as
    Gamma(1 - a_j - u) and Gamma(b_j + u).
    """

    m: int
    n: int
    p: int
    q: int
    a: tuple[float, ...] = ()
    b: tuple[float, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "a", _floats(self.a))
        object.__setattr__(self, "b", _floats(self.b))
        if min(self.m, self.n, self.p, self.q) < 0:
            raise ValueError("orders must be non-negative")
        if not (self.m <= self.p and self.n <= self.q):
            raise ValueError("outer block needs m <= p and n <= q")
        if len(self.a) != self.p or len(self.b) != self.q:
            raise ValueError("outer block parameter counts do not match its order")


@dataclass(frozen=True)
class ContourConfig:
    """Vertical contour settings; ``None`` fields are chosen automatically.

    ``panels`` is the starting panel count; it doubles until two successive
    estimates agree within ``target_rel_err``.
    """

    abscissa: float | None = None
    half_height: float | None = None
    panels: int | None = None
    target_rel_err: float = 1e-8

    def __post_init__(self):
        if not (0.0 < self.target_rel_err < 1.0):
            raise ValueError("target_rel_err must lie in (0, 1)")
        if self.half_height is not None and not self.half_height > 0:
            raise ValueError("half_height must be positive")
        if self.panels is not None and self.panels < 1:
            raise ValueError("panels must be a positive integer")


@dataclass(frozen=True)
class Egbmgf2Spec:
    """Extended generalized bivariate Meijer G-function at (x, y).

    Value::

        1/(2 pi i)^2 int int Phi_outer(s + t) Phi_first(s) Phi_second(t) x^s y^t ds dt

    where the inner kernels follow the univariate convention of this module.
    """

    outer: OuterBlock
    first: MeijerBlock
    second: MeijerBlock
    x: float
    y: float

    def __post_init__(self):
        for name in ("x", "y"):
            v = float(getattr(self, name))
            object.__setattr__(self, name, v)
            if not (v > 0 and math.isfinite(v)):
                raise ValueError(f"argument {name} must be positive and finite, got {v}")

    @classmethod
    def capacity_kernel(cls, psi2: float, alpha: float, beta: float, x: float, y: float) -> "Egbmgf2Spec":
        """G^{1,0:1,1:6,0}_{1,0:1,1:1,6}(1; - | 0; 0 | (psi2+2)/2; chi1 | x, y)."""
        chi1 = (psi2 / 2, alpha / 2, (alpha + 1) / 2, beta / 2, (beta + 1) / 2, 0.0)
        return cls(
            outer=OuterBlock(1, 0, 1, 0, (1.0,), ()),
            first=MeijerBlock(1, 1, 1, 1, (0.0,), (0.0,)),
            second=MeijerBlock(6, 0, 1, 6, ((psi2 + 2) / 2,), chi1),
            x=x,
            y=y,
        )


@dataclass(frozen=True)
class GResult:
    """Value of a G-function evaluation with its achieved error estimate.

    The value is ``mantissa * exp(log_scale)``; callers that combine it with
    other log-domain factors should use the two parts directly.
    """

    mantissa: float
    log_scale: float
    abs_err: float
    abscissa: tuple[float, ...]
    half_height: tuple[float, ...]
    panels: tuple[int, ...]

    @property
    def value(self) -> float:
        return self.mantissa * math.exp(self.log_scale)

    @property
    def rel_err(self) -> float:
        return self.abs_err / abs(self.mantissa) if self.mantissa else math.inf


# ---------------------------------------------------------------------------
# kernels


class _Kernel:
    """Log of the gamma ratio of a univariate block as a function of s."""

    def __init__(self, block: MeijerBlock):
        m, n = block.m, block.n
        self.bm = np.array(block.b[:m])
        self.bq = np.array(block.b[m:])
        self.an = np.array(block.a[:n])
        self.ap = np.array(block.a[n:])
        self.hi = float(self.bm.min()) if m else math.inf
        self.lo = float(self.an.max() - 1.0) if n else -math.inf

    def log_at(self, s: np.ndarray) -> np.ndarray:
        s = np.asarray(s, dtype=complex)
        out = np.zeros(s.shape, dtype=complex)
        for b in self.bm:
            out += special.loggamma(b - s)
        for a in self.an:
            out += special.loggamma(1.0 - a + s)
        for b in self.bq:
            out -= special.loggamma(1.0 - b + s)
        for a in self.ap:
            out -= special.loggamma(a - s)
        return out

    def log_envelope(self, c: float) -> float:
        # log-modulus at real s = c; denominators use the smooth lower bound
        v = 0.0
        for b in self.bm:
            v += math.lgamma(b - c)
        for a in self.an:
            v += math.lgamma(1.0 - a + c)
        for b in self.bq:
            v -= _log_abs_gamma_lower(1.0 - b + c)
        for a in self.ap:
            v -= _log_abs_gamma_lower(a - c)
        return v

    def constraints(self, axis: int) -> list[tuple[tuple[float, float], float]]:
        """Separation constraints as (normal, offset): slack = offset - normal . c."""
        out = []
        for b in self.bm:
            k = [0.0, 0.0]
            k[axis] = 1.0
            out.append(((k[0], k[1]), float(b)))
        for a in self.an:
            k = [0.0, 0.0]
            k[axis] = -1.0
            out.append(((k[0], k[1]), float(1.0 - a)))
        return out


class _OuterKernel:
    def __init__(self, block: OuterBlock):
        self.am = np.array(block.a[: block.m])
        self.ap = np.array(block.a[block.m:])
        self.bn = np.array(block.b[: block.n])
        self.bq = np.array(block.b[block.n:])

    def log_at(self, u: np.ndarray) -> np.ndarray:
        u = np.asarray(u, dtype=complex)
        out = np.zeros(u.shape, dtype=complex)
        for a in self.am:
            out += special.loggamma(a + u)
        for b in self.bn:
            out += special.loggamma(1.0 - b - u)
        for a in self.ap:
            out -= special.loggamma(1.0 - a - u)
        for b in self.bq:
            out -= special.loggamma(b + u)
        return out

    def log_envelope(self, u: float) -> float:
        v = 0.0
        for a in self.am:
            v += math.lgamma(a + u)
        for b in self.bn:
            v += math.lgamma(1.0 - b - u)
        for a in self.ap:
            v -= _log_abs_gamma_lower(1.0 - a - u)
        for b in self.bq:
            v -= _log_abs_gamma_lower(b + u)
        return v

    def constraints(self) -> list[tuple[tuple[float, float], float]]:
        out = [((-1.0, -1.0), float(a)) for a in self.am]
        out += [((1.0, 1.0), float(1.0 - b)) for b in self.bn]
        return out


# ---------------------------------------------------------------------------
# univariate evaluation


def _check_abscissa(c: float, lo: float, hi: float, axis: str | None = None) -> float:
    if not (lo < c < hi):
        raise ContourBlocked(f"abscissa {c} does not separate the pole sets ({lo}, {hi})", axis)
    width = hi - lo
    if c - lo < _SHIFT_EPS:
        c = lo + min(0.25, 0.5 * width)
    elif hi - c < _SHIFT_EPS:
        c = hi - min(0.25, 0.5 * width)
    return c


def _auto_abscissa(objective: Callable[[float], float], lo: float, hi: float) -> float:
    """Real saddle point of the integrand, kept clear of the strip edges."""
    if math.isfinite(lo) and math.isfinite(hi):
        margin = min(0.25, 0.25 * (hi - lo))
        a, b = lo + margin, hi - margin
    elif math.isfinite(hi):
        b = hi - 0.25
        span = 1.0
        while span < 1e7 and objective(b - 2 * span) < objective(b - span):
            span *= 2
        a = b - 2 * span
    else:
        a = lo + 0.25
        span = 1.0
        while span < 1e7 and objective(a + 2 * span) < objective(a + span):
            span *= 2
        b = a + 2 * span
    if b - a < 1e-12:
        return 0.5 * (a + b)
    res = optimize.minimize_scalar(objective, bounds=(a, b), method="bounded",
                                   options={"xatol": 1e-4 * max(1.0, b - a)})
    return float(res.x)


def _tail_threshold(tol: float) -> float:
    return math.log(max(tol * 1e-6, 1e-17))


def _auto_half_height(logmod: Callable[[np.ndarray], np.ndarray], peak: float, tol: float) -> tuple[float, float]:
    thresh = _tail_threshold(tol)
    T = 1.0
    while True:
        t = np.linspace(0.0, T, 65)
        vals = logmod(t)
        peak = max(peak, float(np.max(vals)))
        if np.max(vals[-9:]) < peak + thresh:
            return T, peak
        T *= 2.0
        if T > 1e5:
            raise NonConvergent("integrand does not decay along the contour")


def meijer_g_eval(spec: MeijerGSpec, contour: ContourConfig | None = None) -> GResult:
    """Evaluate a Meijer G-function and return the value with error estimate."""
    contour = contour or ContourConfig()
    if spec.delta <= 0:
        raise NonConvergent(f"convergence index delta={spec.delta} <= 0; "
                            "the vertical contour integral diverges")
    kern = _Kernel(spec.block)
    lo, hi = kern.lo, kern.hi
    if not hi - lo > 2 * _SHIFT_EPS:
        raise ContourBlocked(f"ascending poles reach {lo} and descending poles start at {hi}")
    log_z = math.log(spec.z)

    def objective(c):
        return kern.log_envelope(c) + c * log_z

    if contour.abscissa is None:
        c = _auto_abscissa(objective, lo, hi)
    else:
        c = _check_abscissa(float(contour.abscissa), lo, hi)

    def logf(t):
        s = c + 1j * np.asarray(t)
        return kern.log_at(s) + s * log_z

    peak = float(logf(np.zeros(1)).real[0])
    tol = contour.target_rel_err
    if contour.half_height is None:
        T, peak = _auto_half_height(lambda t: logf(t).real, peak, tol)
    else:
        T = float(contour.half_height)
    pole_gap = min(c - lo, hi - c)
    n = contour.panels or max(2, math.ceil(T / (4.0 * min(pole_gap, 1.0))))

    prev = None
    for _ in range(_MAX_LEVELS):
        t, w = _panels(0.0, T, n)
        f = np.exp(logf(t) - peak)
        val = float(w @ f.real) / math.pi
        l1 = float(w @ np.abs(f)) / math.pi
        if prev is not None:
            err = abs(val - prev)
            if err <= tol * abs(val) or err <= 64 * _EPS * l1:
                return GResult(val, peak, err, (c,), (T,), (n,))
        prev = val
        n *= 2
    raise AccuracyNotReached(f"no convergence after {_MAX_LEVELS} panel doublings (last n={n // 2})",
                             estimate=prev * math.exp(peak))


def meijer_g(spec: MeijerGSpec, contour: ContourConfig | None = None) -> float:
    """Value of G^{m,n}_{p,q}(z | a; b) by Mellin-Barnes contour quadrature."""
    return meijer_g_eval(spec, contour).value


# ---------------------------------------------------------------------------
# bivariate evaluation


def _auto_abscissa_2d(objective, cons, fixed_s, fixed_t):
    """Saddle point of the real log-modulus inside the separating polygon."""
    normals = np.array([k for k, _ in cons], dtype=float).reshape(-1, 2)
    offsets = np.array([h for _, h in cons], dtype=float)
    # Chebyshev-style centre: maximise the smallest slack (capped at 0.5)
    c_obj = np.array([0.0, 0.0, -1.0])
    A = np.hstack([normals, np.ones((len(offsets), 1))]) if len(offsets) else np.zeros((0, 3))
    bounds = [(-1e3, 1e3), (-1e3, 1e3), (None, 0.5)]
    if fixed_s is not None:
        bounds[0] = (fixed_s, fixed_s)
    if fixed_t is not None:
        bounds[1] = (fixed_t, fixed_t)
    if len(offsets):
        lp = optimize.linprog(c_obj, A_ub=A, b_ub=offsets, bounds=bounds, method="highs")
        if lp.status != 0 or lp.x[2] <= 2 * _SHIFT_EPS:
            raise ContourBlocked("no pair of vertical lines separates the pole sets")
        centre, radius = lp.x[:2], lp.x[2]
    else:
        centre, radius = np.array([fixed_s or -0.5, fixed_t or -0.5]), 0.5
    margin = min(0.25, 0.5 * radius)

    def slack(v):
        return offsets - normals @ v - margin

    box = [(b[0], b[1]) for b in bounds[:2]]
    box = [(lo if lo is not None else -1e3, hi if hi is not None else 1e3) for lo, hi in box]
    box = [(centre[i] - 50.0, centre[i] + 50.0) if box[i][0] != box[i][1] else box[i] for i in range(2)]
    cons_list = [{"type": "ineq", "fun": slack, "jac": lambda v: -normals}] if len(offsets) else []
    try:
        res = optimize.minimize(objective, centre, method="SLSQP", bounds=box, constraints=cons_list,
                                options={"maxiter": 200, "ftol": 1e-10})
        x = res.x
        if not (np.all(slack(x) >= -1e-9) and np.isfinite(objective(x)) and objective(x) <= objective(centre)):
            x = centre
    except (ValueError, OverflowError):
        x = centre
    return float(x[0]), float(x[1])


def egbmgf_eval(spec: Egbmgf2Spec, contour_s: ContourConfig | None = None,
                contour_t: ContourConfig | None = None) -> GResult:
    """Evaluate the bivariate G-function with a per-axis error report."""
    contour_s = contour_s or ContourConfig(target_rel_err=1e-6)
    contour_t = contour_t or ContourConfig(target_rel_err=1e-6)
    for axis, blk in (("s", spec.first), ("t", spec.second)):
        if blk.delta <= 0:
            raise NonConvergent(f"inner block on axis {axis} has delta={blk.delta} <= 0")
    ks, kt, ko = _Kernel(spec.first), _Kernel(spec.second), _OuterKernel(spec.outer)
    for axis, k in (("s", ks), ("t", kt)):
        if not k.hi - k.lo > 2 * _SHIFT_EPS:
            raise ContourBlocked(f"axis {axis}: ascending poles reach {k.lo}, descending start at {k.hi}", axis)
    lx, ly = math.log(spec.x), math.log(spec.y)
    cons = ks.constraints(0) + kt.constraints(1) + ko.constraints()

    fixed_s = None if contour_s.abscissa is None else _check_abscissa(contour_s.abscissa, ks.lo, ks.hi, "s")
    fixed_t = None if contour_t.abscissa is None else _check_abscissa(contour_t.abscissa, kt.lo, kt.hi, "t")

    def objective(v):
        cs, ct = float(v[0]), float(v[1])
        try:
            return (ks.log_envelope(cs) + kt.log_envelope(ct) + ko.log_envelope(cs + ct)
                    + cs * lx + ct * ly)
        except ValueError:
            return math.inf

    if fixed_s is not None and fixed_t is not None:
        cs, ct = fixed_s, fixed_t
    else:
        cs, ct = _auto_abscissa_2d(objective, cons, fixed_s, fixed_t)
    for (kn, h) in cons:
        if h - (kn[0] * cs + kn[1] * ct) <= 0:
            raise ContourBlocked("contour pair crosses a pole line of the outer block")

    def logf(sig, tau):
        s = cs + 1j * np.asarray(sig)
        t = ct + 1j * np.asarray(tau)
        part_s = ks.log_at(s) + s * lx
        part_t = kt.log_at(t) + t * ly
        return part_s[:, None] + part_t[None, :] + ko.log_at(s[:, None] + t[None, :])

    tol_s, tol_t = contour_s.target_rel_err, contour_t.target_rel_err
    thresh = _tail_threshold(min(tol_s, tol_t))
    peak = float(logf(np.zeros(1), np.zeros(1)).real[0, 0])
    Ts = contour_s.half_height or 1.0
    Tt = contour_t.half_height or 1.0
    for _ in range(40):
        grid = logf(np.linspace(0.0, Ts, 41), np.linspace(-Tt, Tt, 81)).real
        peak = max(peak, float(grid.max()))
        grow_s = contour_s.half_height is None and grid[-4:, :].max() >= peak + thresh
        grow_t = contour_t.half_height is None and max(grid[:, :4].max(), grid[:, -4:].max()) >= peak + thresh
        if not (grow_s or grow_t):
            break
        Ts *= 2.0 if grow_s else 1.0
        Tt *= 2.0 if grow_t else 1.0
    else:
        raise NonConvergent("bivariate integrand does not decay along the contours")

    gap_s = min(cs - ks.lo, ks.hi - cs, 1.0)
    gap_t = min(ct - kt.lo, kt.hi - ct, 1.0)
    for kn, h in ko.constraints():
        gap = h - (kn[0] * cs + kn[1] * ct)
        gap_s, gap_t = min(gap_s, gap), min(gap_t, gap)
    ns = contour_s.panels or max(2, math.ceil(Ts / (4.0 * gap_s)))
    nt = contour_t.panels or max(2, math.ceil(2 * Tt / (4.0 * gap_t)))

    cache: dict[tuple[int, int], tuple[float, float]] = {}

    def integrate(ns_, nt_):
        key = (ns_, nt_)
        if key not in cache:
            sig, ws = _panels(0.0, Ts, ns_)
            tau, wt = _panels(-Tt, Tt, nt_)
            if sig.size * tau.size > _MAX_2D_NODES:
                raise AccuracyNotReached(f"node budget exhausted at {ns_}x{nt_} panels",
                                         axis="s" if sig.size >= tau.size else "t")
            f = np.exp(logf(sig, tau) - peak)
            val = float(ws @ f.real @ wt) / (2 * math.pi ** 2)
            l1 = float(ws @ np.abs(f) @ wt) / (2 * math.pi ** 2)
            cache[key] = (val, l1)
        return cache[key]

    for _ in range(2 * _MAX_LEVELS):
        base, l1 = integrate(ns, nt)
        floor = 64 * _EPS * l1
        try:
            err_s = abs(integrate(2 * ns, nt)[0] - base)
            err_t = abs(integrate(ns, 2 * nt)[0] - base)
        except AccuracyNotReached as exc:
            exc.estimate = base * math.exp(peak)
            raise
        ok_s = err_s <= tol_s * abs(base) or err_s <= floor
        ok_t = err_t <= tol_t * abs(base) or err_t <= floor
        if ok_s and ok_t:
            return GResult(base, peak, err_s + err_t, (cs, ct), (Ts, Tt), (ns, nt))
        if not ok_s:
            ns *= 2
        if not ok_t:
            nt *= 2
    axis = "s" if not ok_s else "t"
    raise AccuracyNotReached(f"bivariate refinement exhausted on axis {axis}", axis=axis,
                             estimate=base * math.exp(peak))


def egbmgf(spec: Egbmgf2Spec, contour_s: ContourConfig | None = None,
           contour_t: ContourConfig | None = None) -> float:
    """Value of the bivariate Meijer G-function by double contour quadrature."""
    return egbmgf_eval(spec, contour_s, contour_t).value
