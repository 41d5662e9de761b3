"""Phase-space symbols of the functional calculus and their quantization.

The building block is the semigroup symbol p_t(x, tau, xi), a complex
Gaussian in phase space whose exponent b grows linearly in t at small
times.  Fractional-power and Riesz-transform symbols are Gamma-weighted
time integrals of p_t, mirroring the kernel route but on the symbol
side.  Symbols here never depend on rho; that is structural (the
operator commutes with rho translations) and the evaluation signatures
enforce it.

Normalization: p_t_symbol carries the classical (2 pi)^(-d/2) prefactor
of the Weyl-style display.  The quantization used for cross-checks,
T_sigma f(z) = (2 pi)^(-(d+1)) iint e^(i(z-z')w) sigma(x, w) f(z') dz' dw,
sends the constant symbol 1 to the identity, so the fractional-power
and Riesz symbols are built from the prefactor-free exponential; with
the prefactor kept, T_{p_0} would be (2 pi)^(-d/2) Id instead of Id and
every cross-route comparison would be off by that constant.
"""
from __future__ import annotations

import math
import warnings
from dataclasses import dataclass, replace
from typing import Callable

import numpy as np

from .concurrency import map_ordered
from .errors import AliasingWarning, InvalidParameterError, QuadratureError
from .grid import UniformBox
from .heat_kernel import t_quadrature
from .report import Report

__all__ = [
    "SymbolFn",
    "SampleDomain",
    "b_symbol",
    "p_t_symbol",
    "sigma_alpha",
    "riesz_symbol",
    "sigma_symbol_fn",
    "riesz_symbol_fn",
    "constant_symbol_fn",
    "frequency_symbol_fn",
    "gm_bound_estimate",
    "symbol_decay_report",
    "quantize",
]


def _broadcast_point(x, tau, xi, d: int):
    """Normalize (x, tau, xi) to batch arrays (..., d), (...), (..., d)."""
    x = np.atleast_1d(np.asarray(x, dtype=np.float64))
    xi = np.atleast_1d(np.asarray(xi, dtype=np.float64))
    if x.shape[-1] != d:
        if d == 1:
            x = x[..., None]
        else:
            raise InvalidParameterError(f"x must have last axis {d}")
    if xi.shape[-1] != d:
        if d == 1:
            xi = xi[..., None]
        else:
            raise InvalidParameterError(f"xi must have last axis {d}")
    tau = np.asarray(tau, dtype=np.float64)
    batch = np.broadcast_shapes(x.shape[:-1], tau.shape, xi.shape[:-1])
    x = np.broadcast_to(x, batch + (d,))
    xi = np.broadcast_to(xi, batch + (d,))
    tau = np.broadcast_to(tau, batch)
    return x, tau, xi


def b_symbol(t, x, tau, xi):
    """Exponent of the semigroup symbol:
    b = (|x|^2+|xi|^2)/2 tanh 2t + 2i x.xi sech 2t sinh^2 t + t tau^2."""
    t = np.asarray(t, dtype=np.float64)
    x = np.asarray(x, dtype=np.float64)
    xi = np.asarray(xi, dtype=np.float64)
    tau = np.asarray(tau, dtype=np.float64)
    sq = np.sum(x * x, axis=-1) + np.sum(xi * xi, axis=-1)
    dot = np.sum(x * xi, axis=-1)
    return (0.5 * sq * np.tanh(2.0 * t)
            + 2.0j * dot * np.sinh(t) ** 2 / np.cosh(2.0 * t)
            + t * tau ** 2)


def _dt_b(t, x, tau, xi):
    """Analytic time derivative of b; the cross term simplifies because
    sinh 2t - 2 tanh 2t sinh^2 t = tanh 2t."""
    sq = np.sum(x * x, axis=-1) + np.sum(xi * xi, axis=-1)
    dot = np.sum(x * xi, axis=-1)
    sech = 1.0 / np.cosh(2.0 * t)
    return (sq * sech ** 2 + 2.0j * dot * sech * np.tanh(2.0 * t)
            + tau ** 2)


def _log_p_free(t, x, tau, xi, d: int):
    """log of the prefactor-free symbol (cosh 2t)^(-d/2) e^(-b)."""
    return -0.5 * d * np.log(np.cosh(2.0 * t)) - b_symbol(t, x, tau, xi)


def p_t_symbol(t, x, tau, xi, d: int):
    """Semigroup symbol with the classical (2 pi)^(-d/2) prefactor."""
    if np.any(np.asarray(t) < 0):
        raise InvalidParameterError("t must be nonnegative")
    x, tau, xi = _broadcast_point(x, tau, xi, d)
    return ((2.0 * math.pi) ** (-d / 2.0)
            * np.exp(_log_p_free(t, x, tau, xi, d)))


def _symbol_nodes(weight_alpha: float, d: int, refine: bool = False):
    return t_quadrature(weight_alpha, 0.0, d).nodes(refine)


def _check_refined(value, refined, what: str):
    scale = max(float(np.abs(value).max()), 1e-300)
    err = float(np.abs(refined - value).max()) / scale
    if err > 1e-3:
        raise QuadratureError(
            f"{what} quadrature unstable under refinement: {err:.3e}")
    return err


def _sigma_quad(x, tau, xi, alpha: float, d: int, refine: bool):
    xx = x[..., None, :]
    tt = tau[..., None]
    xxi = xi[..., None, :]
    if alpha < 0:
        gamma_ = -alpha
        t, w = _symbol_nodes(gamma_, d, refine)
        logs = (gamma_ - 1.0) * np.log(t) + _log_p_free(t, xx, tt, xxi, d)
        return np.sum(w * np.exp(logs), axis=-1) / math.gamma(gamma_)
    t, w = _symbol_nodes(1.0 - alpha, d, refine)
    vals = np.exp(_log_p_free(t, xx, tt, xxi, d)) \
        * (d * np.tanh(2.0 * t) + _dt_b(t, xx, tt, xxi))
    return np.sum(w * t ** (-alpha) * vals, axis=-1) / math.gamma(1.0 - alpha)


def sigma_alpha(x, tau, xi, alpha: float, d: int, with_error: bool = False):
    """Fractional-power symbol by time quadrature (order 2 alpha).

    alpha < 0: (1/Gamma(-alpha)) int t^(-alpha-1) p_t dt;
    0 < alpha < 1: the first-derivative route with -d/dt p_t expanded
    analytically as p_t (d tanh 2t + db/dt).  Prefactor-free
    normalization (see module docstring).  with_error reruns at doubled
    quadrature order and raises QuadratureError above 1e-3 relative.
    """
    if alpha == 0 or alpha >= 1:
        raise InvalidParameterError(
            "sigma_alpha needs alpha < 0 or 0 < alpha < 1")
    x, tau, xi = _broadcast_point(x, tau, xi, d)
    val = _sigma_quad(x, tau, xi, alpha, d, refine=False)
    if with_error:
        err = _check_refined(val, _sigma_quad(x, tau, xi, alpha, d, True),
                             f"sigma_alpha({alpha})")
        return val, err
    return val


def _dxj_b(t, x, xi, j: int):
    """d b / d x_j = x_j tanh 2t + 2i xi_j sech 2t sinh^2 t."""
    return (x[..., j] * np.tanh(2.0 * t)
            + 2.0j * xi[..., j] * np.sinh(t) ** 2 / np.cosh(2.0 * t))


def _riesz_quad(j: int, x, tau, xi, d: int, refine: bool):
    t, w = _symbol_nodes(0.5, d, refine)
    xx = x[..., None, :]
    tt = tau[..., None]
    xxi = xi[..., None, :]
    p = np.exp(_log_p_free(t, xx, tt, xxi, d))
    if j == 0:
        factor = -1.0j * tt
    else:
        factor = (xx[..., j - 1] - 1.0j * xxi[..., j - 1]
                  + _dxj_b(t, xx, xxi, j - 1))
    return np.sum(w * t ** -0.5 * factor * p, axis=-1) / math.sqrt(math.pi)


def riesz_symbol(j: int, x, tau, xi, d: int, with_error: bool = False):
    """Symbol of the Riesz transform A_j H^(-1/2) (order 0).

    j = 0 gives (1/sqrt pi) int t^(-1/2) (-i tau) p_t dt; 1 <= j <= d
    gives (1/sqrt pi) int t^(-1/2) (x_j - i xi_j + db/dx_j) p_t dt,
    the exact symbol of (x_j - d/dx_j) T_{sigma_(-1/2)} under the
    e^(izw) quantization used here: the derivative acting on e^(ixxi)
    brings down -i xi_j, acting on sigma brings up +db/dx_j.  The signs
    are convention-bound and pinned by the ladder cross-check tests.
    """
    if not 0 <= j <= d:
        raise InvalidParameterError(f"j = {j} outside 0..{d}")
    x, tau, xi = _broadcast_point(x, tau, xi, d)
    val = _riesz_quad(j, x, tau, xi, d, refine=False)
    if with_error:
        err = _check_refined(val, _riesz_quad(j, x, tau, xi, d, True),
                             f"riesz_symbol({j})")
        return val, err
    return val


# ---------------------------------------------------------------------------
# symbol objects and membership estimation

@dataclass(frozen=True)
class SymbolFn:
    """A rho-independent phase-space symbol with a declared order."""
    fn: Callable
    order: float
    label: str

    def __call__(self, x, tau, xi):
        return self.fn(x, tau, xi)


def sigma_symbol_fn(alpha: float, d: int) -> SymbolFn:
    return SymbolFn(lambda x, tau, xi: sigma_alpha(x, tau, xi, alpha, d),
                    order=2.0 * alpha, label=f"frac_power({alpha})")


def riesz_symbol_fn(j: int, d: int) -> SymbolFn:
    return SymbolFn(lambda x, tau, xi: riesz_symbol(j, x, tau, xi, d),
                    order=0.0, label=f"riesz({j})")


def constant_symbol_fn(value: complex = 1.0) -> SymbolFn:
    return SymbolFn(lambda x, tau, xi: np.full(np.asarray(tau).shape, value,
                                               dtype=np.complex128),
                    order=0.0, label="constant")


def frequency_symbol_fn() -> SymbolFn:
    """i tau: the symbol of the rho derivative (order 1)."""
    return SymbolFn(lambda x, tau, xi: 1.0j * np.asarray(tau,
                                                         dtype=np.float64),
                    order=1.0, label="i*tau")


@dataclass(frozen=True)
class SampleDomain:
    """Dyadic product shells in (|x|, |tau|, |xi|) with random directions.

    Magnitude levels are {0, 1, 2, 4, ..., cap} per factor, all triples
    combined, per_shell random direction draws each; axis-aligned
    points are included so pure-frequency suprema are attained.
    """
    d: int
    cap: float = 64.0
    per_shell: int = 4
    seed: int = 0

    def magnitudes(self) -> np.ndarray:
        n = int(round(math.log2(self.cap)))
        return np.concatenate([[0.0], 2.0 ** np.arange(n + 1)])

    def points(self):
        mags = self.magnitudes()
        if len(mags) < 5:
            raise InvalidParameterError("domain needs >= 4 dyadic shells")
        rng = np.random.default_rng(self.seed)
        xs, taus, xis = [], [], []

        def direction(k):
            v = rng.standard_normal(k)
            norm = np.linalg.norm(v)
            return v / norm if norm > 0 else np.eye(k)[0]

        for mx in mags:
            for mt in mags:
                for mxi in mags:
                    for _ in range(self.per_shell):
                        xs.append(mx * direction(self.d))
                        taus.append(mt * (1.0 if rng.uniform() < 0.5
                                          else -1.0))
                        xis.append(mxi * direction(self.d))
        # axis-aligned: pure x, pure tau, pure xi at every magnitude
        for m in mags[1:]:
            xs.extend([m * np.eye(self.d)[0], np.zeros(self.d),
                       np.zeros(self.d)])
            taus.extend([0.0, m, 0.0])
            xis.extend([np.zeros(self.d), np.zeros(self.d),
                        m * np.eye(self.d)[0]])
        return np.array(xs), np.array(taus), np.array(xis)

    def doubled(self) -> "SampleDomain":
        return replace(self, cap=2.0 * self.cap)


def _bracket(x, tau, xi, kind: str) -> np.ndarray:
    if kind == "combined":
        s = (np.linalg.norm(x, axis=-1) + np.abs(tau)
             + np.linalg.norm(xi, axis=-1))
    elif kind == "omega":
        s = np.abs(tau) + np.linalg.norm(xi, axis=-1)
    else:
        raise InvalidParameterError(f"unknown weight kind {kind!r}")
    return np.sqrt(1.0 + s * s)


def _derivative_stencil(symbol: SymbolFn, x, tau, xi, r: int):
    """All |beta| <= r central-difference derivatives at each sample.

    Variables are (x_1..x_d, tau, xi_1..xi_d); steps are relative,
    1e-3 * max(1, |X|) per sample.  Returns a list of (|beta|, values).
    """
    d = x.shape[-1]
    n_var = 2 * d + 1
    mag = np.sqrt(np.sum(x ** 2, axis=-1) + tau ** 2
                  + np.sum(xi ** 2, axis=-1))
    h = 1e-3 * np.maximum(1.0, mag)

    def pt(spec):
        xx, tt, xxi = x.copy(), tau.copy(), xi.copy()
        for var, sg in spec:
            if var < d:
                xx[..., var] = xx[..., var] + sg * h
            elif var == d:
                tt = tt + sg * h
            else:
                xxi[..., var - d - 1] = xxi[..., var - d - 1] + sg * h
        return symbol(xx, tt, xxi)

    specs = [()]
    if r >= 1:
        specs += [((v, s),) for v in range(n_var) for s in (+1, -1)]
    if r >= 2:
        specs += [((v1, s1), (v2, s2))
                  for v1 in range(n_var) for v2 in range(v1 + 1, n_var)
                  for s1 in (+1, -1) for s2 in (+1, -1)]
    # one evaluation per stencil point, shared across every derivative
    vals = dict(zip(specs, map_ordered(pt, specs)))

    center = vals[()]
    out = [(0, center)]
    if r >= 1:
        for v in range(n_var):
            plus, minus = vals[((v, +1),)], vals[((v, -1),)]
            out.append((1, (plus - minus) / (2.0 * h)))
            if r >= 2:
                out.append((2, (plus - 2.0 * center + minus) / h ** 2))
        if r >= 2:
            for v1 in range(n_var):
                for v2 in range(v1 + 1, n_var):
                    mixed = (vals[((v1, +1), (v2, +1))]
                             - vals[((v1, +1), (v2, -1))]
                             - vals[((v1, -1), (v2, +1))]
                             + vals[((v1, -1), (v2, -1))]) / (4.0 * h ** 2)
                    out.append((2, mixed))
    return out


def gm_bound_estimate(symbol: SymbolFn, m: float, domain: SampleDomain,
                      r: int = 0, weight: str = "combined",
                      stability_limit: float = 1.5) -> Report:
    """Empirical membership check: |D^beta sigma| <= C <w>^(m - |beta|).

    Sups of the normalized derivatives over the sample domain, compared
    against the same sups with the domain cap doubled; PASS iff the
    ratio stays below stability_limit (the constants are existential,
    only stability is claimed).
    """
    if r not in (0, 1, 2):
        raise InvalidParameterError("derivative order r must be 0, 1 or 2")
    rep = Report(suite="symbols",
                 params={"label": symbol.label, "m": m, "r": r,
                         "cap": domain.cap, "weight": weight})

    def sups(dom: SampleDomain):
        x, tau, xi = dom.points()
        best = {}
        for order, vals in _derivative_stencil(symbol, x, tau, xi, r):
            w = _bracket(x, tau, xi, weight) ** (m - order)
            ratio = np.abs(vals) / w
            best[order] = max(best.get(order, 0.0), float(ratio.max()))
        return best

    base = sups(domain)
    wide = sups(domain.doubled())
    for order in sorted(base):
        sup_w = max(wide[order], base[order])
        rep.add(f"sup_order_{order}", sup_w, None, np.isfinite(sup_w),
                f"normalized |D^beta|, |beta| = {order}")
        growth = sup_w / base[order] if base[order] > 0 else 1.0
        rep.add(f"stability_order_{order}", growth, stability_limit,
                growth < stability_limit, "doubling the domain cap")
    return rep


def symbol_decay_report(alpha: float, d: int, domain: SampleDomain,
                        stability_limit: float = 1.5) -> Report:
    """|sigma_alpha| <= C <|x|+|w|>^(2 alpha) over the shells, plus the
    S_(1,0)-style frequency-only weight for the class inclusion."""
    rep = Report(suite="symbols", params={"alpha": alpha, "d": d,
                                          "cap": domain.cap})
    sym = sigma_symbol_fn(alpha, d)
    for weight in ("combined", "omega"):
        sub = gm_bound_estimate(sym, 2.0 * alpha, domain, r=0, weight=weight,
                                stability_limit=stability_limit)
        for metric in sub.metrics:
            rep.add(f"{weight}_{metric.name}", metric.value,
                    metric.tolerance, metric.passed, metric.note)
    return rep


# ---------------------------------------------------------------------------
# quantization on a uniform box (d = 1)

def quantize(symbol: SymbolFn, values: np.ndarray, box: UniformBox,
             tail_tol: float = 1e-6) -> np.ndarray:
    """Kohn-Nirenberg quantization T_sigma f on a 2-D uniform box.

    T_sigma f(z) = (2 pi)^(-2) iint e^(i(z-z')w) sigma(x, w) f(z') dz' dw,
    realized as a full FFT of f followed, for each spatial x row, by an
    inverse transform weighted with sigma(x, tau, xi).  The constant
    symbol reproduces f exactly up to roundoff.
    """
    if len(box.counts) != 2:
        raise InvalidParameterError("quantization implemented for d = 1 "
                                    "(two-dimensional phase-space box)")
    values = np.asarray(values)
    if values.shape != tuple(box.counts):
        raise InvalidParameterError("values shape does not match the box")
    n_r, n_x = box.counts
    taus, xis = box.freq_axes()
    xs = box.axes()[1]
    fhat = np.fft.fft2(values)
    # boundary spectral mass: energy at the Nyquist rings
    power = np.abs(fhat) ** 2
    ring = (power[n_r // 2, :].sum() + power[:, n_x // 2].sum())
    total = power.sum()
    if total > 0 and ring / total > tail_tol:
        warnings.warn(
            f"boundary spectral energy {ring / total:.2e} exceeds "
            f"{tail_tol:.1e}; the box under-resolves the field",
            AliasingWarning, stacklevel=2)
    out = np.empty(values.shape, dtype=np.complex128)
    # plain index-space DFT phases on both sides: the box-offset phase
    # e^(i W w) of the forward transform cancels against the inverse,
    # sigma itself is evaluated at the true frequencies
    idx = np.arange(n_x)
    for m, x_val in enumerate(xs):
        sig = symbol(np.full(xis.shape, x_val)[None, :],
                     taus[:, None], xis[None, :])
        g = sig * fhat
        col = np.fft.ifft(g, axis=0)
        phase = np.exp(2.0j * math.pi * m * idx / n_x) / n_x
        out[:, m] = col @ phase
    return out
