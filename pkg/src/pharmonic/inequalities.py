"""Adapted Hardy-Littlewood-Sobolev, Gagliardo-Nirenberg-Sobolev and
Hardy inequality checks, plus the sharp-exponent failure demos.

Boundedness claims are verified empirically: the operator ratio is
maximized over a reproducible random family and accepted only when
enlarging the family four-fold and doubling the quadrature box both
move the sup by less than a stability factor.  Divergence claims are
demonstrated on the classical witness sequences (concentrating
Gaussians, the log-corrected borderline profile), which must show
monotone growth whose increments refuse to decay.

Every field that feeds an L^q norm with q != 2 goes through the
kernel route of the fractional power, resampled to a uniform box that
is auto-sized from the family's measured decay.  The spectral route
is computed alongside on every member and the two must agree to 1e-3
in relative L^2 before any norm is trusted (consistency gate).  That
gate needs generous Hermite headroom, so the default grids keep the
band limit K small and the node count M large; families should be
synthesized inside the band (band_limited is safe everywhere).
"""
from __future__ import annotations

import math
import warnings
from dataclasses import dataclass

import numpy as np

from .concurrency import map_ordered
from .errors import (DomainError, InvalidParameterError, QuadratureError,
                     ResolutionWarning)
from .grid import (Field, Grid, UniformBox, box_lp_norm, lp_norm, make_grid,
                   resample)
from .heat_kernel import frac_power_kernel, k_alpha, t_quadrature
from .ladder import grad_H
from .report import Report
from .sobolev import TestFamily, potential_norm
from .spectral import spectral_frac_power

GATE_TOL = 1e-3
_PROFILE_EPS = 0.1

_TAGS = ("hls", "hls-endpoint-1", "hls-endpoint-inf", "gns", "hardy")
_VERDICTS = ("bounded", "divergent")


# ---------------------------------------------------------------------------
# case type

def _admissible(p: float, q: float, gap: float) -> None:
    """1/p - gap <= 1/q < 1/p, the HLS/GNS exponent window."""
    if p < 1.0 or q < 1.0:
        raise InvalidParameterError("exponents must be >= 1")
    lo, hi = 1.0 / p - gap, 1.0 / p
    inv = 1.0 / q
    if not (lo - 1e-12 <= inv < hi - 1e-12):
        raise InvalidParameterError(
            f"1/q = {inv:.6g} outside [{lo:.6g}, {hi:.6g}): "
            "inadmissible exponents")


@dataclass(frozen=True)
class IneqCase:
    """One inequality instance: tag, exponents, dimension, family, and
    the verdict the theory predicts.

    Construction validates the exponent window of the tag, so an
    IneqCase that exists is runnable.  Unused exponent slots (q for
    hardy, alpha for gns) are ignored.
    """
    tag: str
    alpha: float
    p: float
    q: float
    d: int
    family: TestFamily | None = None
    expected: str = "bounded"

    def __post_init__(self) -> None:
        if self.tag not in _TAGS:
            raise InvalidParameterError(f"unknown tag {self.tag!r}")
        if self.expected not in _VERDICTS:
            raise InvalidParameterError(
                f"expected must be one of {_VERDICTS}")
        if self.d < 1:
            raise InvalidParameterError("d must be a positive integer")
        dim = self.d + 1.0
        if self.tag.startswith("hls") and not 0.0 < self.alpha < dim:
            raise InvalidParameterError("alpha must lie in (0, d+1)")
        if self.tag == "hls":
            _admissible(self.p, self.q, self.alpha / dim)
        elif self.tag == "hls-endpoint-1":
            if self.p != 1.0:
                raise InvalidParameterError("the L^1 endpoint fixes p = 1")
            if self.q < 1.0:
                raise InvalidParameterError("q must be >= 1")
        elif self.tag == "hls-endpoint-inf":
            if not math.isinf(self.q):
                raise InvalidParameterError(
                    "the L^inf endpoint fixes q = inf")
            if self.p < 1.0:
                raise InvalidParameterError("p must be >= 1")
        elif self.tag == "gns":
            if self.d < 3:
                raise InvalidParameterError("gns requires d >= 3")
            _admissible(self.p, self.q, 1.0 / dim)
        else:  # hardy
            if self.p not in (2.0, 4.0):
                raise InvalidParameterError("hardy supports p in {2, 4}")
            if not 0.0 < self.alpha < dim / self.p:
                raise InvalidParameterError(
                    "hardy needs 0 < alpha < (d+1)/p")


# ---------------------------------------------------------------------------
# shared plumbing

def _default_grid(d: int) -> Grid:
    # kernel-route heads need Hermite headroom well past the band limit
    if d == 1:
        return make_grid(1, 64, 10.0, 8, 40)
    return make_grid(d, 32, 8.0, 8, 32)


def _default_counts(d: int) -> tuple[int, ...]:
    return (64, 64) if d == 1 else (24,) * (d + 1)


def _measured_box(members: list[Field], counts: tuple[int, ...],
                  tol: float = 1e-6, pad: float = 1.3) -> UniformBox:
    """Box sized so every member has decayed below tol relative
    amplitude at the boundary, capped by the grid windows."""
    g = members[0].grid
    coords = [g.rho] + [g.nodes_x] * g.d
    caps = [g.L_rho] + [float(np.max(np.abs(g.nodes_x)))] * g.d
    half = []
    for ax in range(g.d + 1):
        need = 0.0
        for f in members:
            a = np.abs(f.values)
            peak = float(a.max())
            if peak == 0.0:
                continue
            others = tuple(i for i in range(g.d + 1) if i != ax)
            prof = a.max(axis=others) if others else a
            live = coords[ax][prof > tol * peak]
            if live.size:
                need = max(need, float(np.max(np.abs(live))))
        half.append(min(max(pad * need, 1.0), caps[ax]))
    return UniformBox(tuple(half), tuple(counts))


def _refined(box: UniformBox) -> UniformBox:
    return UniformBox(box.half_widths, tuple(2 * n for n in box.counts))


def _sup_stats(rep: Report, name: str, base: list[float],
               extra: list[float], fine: list[float], limit: float,
               prefix: str = "") -> float:
    sup_base = max(base)
    sup_all = max([sup_base] + extra)
    sup_fine = max(fine)
    fam = sup_all / sup_base
    lo = max(min(sup_fine, sup_base), 1e-300)
    boxr = max(sup_fine, sup_base) / lo
    rep.add(name, sup_all, None, bool(np.isfinite(sup_all)),
            note=f"max over {len(base) + len(extra)} fields")
    rep.add(prefix + "family_growth", fam, limit, fam < limit,
            note="sup change, family x4")
    rep.add(prefix + "box_change", boxr, limit, boxr < limit,
            note="sup change, box counts x2 (inert for q = 2)")
    return sup_all


def _grad_norm(f: Field, p: float) -> float:
    return sum(lp_norm(c, p) for c in grad_H(f))


# ---------------------------------------------------------------------------
# HLS

def _ratio_hls(f: Field, alpha: float, p: float, q: float,
               box: UniformBox, box_fine: UniformBox | None,
               shift: float) -> tuple[float, float, float]:
    k = frac_power_kernel(f, -0.5 * alpha, shift=shift)
    s = spectral_frac_power(f, -0.5 * alpha, shift=shift)
    ref = lp_norm(s, 2.0)
    rel = lp_norm(k - s, 2.0) / ref if ref > 0.0 else 0.0
    if rel > GATE_TOL:
        raise QuadratureError(
            f"kernel and spectral routes disagree ({rel:.2e} relative L^2 "
            f"> {GATE_TOL:g}); this grid cannot support the check")
    den = lp_norm(f, p)
    if den == 0.0:
        raise InvalidParameterError("zero field in family")
    if q == 2.0:
        r = lp_norm(k, 2.0) / den
        return rel, r, r
    r0 = box_lp_norm(resample(k, box), box, q) / den
    r1 = r0
    if box_fine is not None:
        r1 = box_lp_norm(resample(k, box_fine), box_fine, q) / den
    return rel, r0, r1


def _hls_core(alpha: float, p: float, q: float, d: int, shift: float,
              family: TestFamily, grid: Grid | None,
              counts: tuple[int, ...] | None, limit: float) -> Report:
    g = grid if grid is not None else _default_grid(d)
    if g.d != d:
        raise InvalidParameterError("grid dimension does not match d")
    base = family.members(g)
    extra = family.resized(4 * family.count).members(g)[family.count:]
    box = _measured_box(base, counts or _default_counts(d))
    fine = _refined(box)
    got = map_ordered(
        lambda f: _ratio_hls(f, alpha, p, q, box, fine, shift), base)
    got_e = map_ordered(
        lambda f: _ratio_hls(f, alpha, p, q, box, None, shift), extra)
    worst = max(r for r, _, _ in got + got_e)
    rep = Report(suite="hls",
                 params={"alpha": alpha, "p": p, "q": q, "d": d,
                         "shift": shift, "kind": family.kind,
                         "count": family.count, "seed": family.seed})
    rep.add("gate_rel_max", worst, GATE_TOL, worst <= GATE_TOL,
            note="kernel vs spectral fractional power, relative L^2")
    _sup_stats(rep, "operator_sup", [r for _, r, _ in got],
               [r for _, r, _ in got_e], [r for _, _, r in got], limit)
    return rep


def hls_check(alpha: float, p: float, q: float, d: int,
              family: TestFamily, grid: Grid | None = None,
              counts: tuple[int, ...] | None = None,
              stability_limit: float = 1.5) -> Report:
    """Empirical sup of |H^(-alpha/2) f|_q / |f|_p over the family.

    Requires 0 < alpha < d+1 and 1/p - alpha/(d+1) <= 1/q < 1/p.  The
    power is applied through the kernel route and cross-checked
    against the spectral route on every member; q != 2 norms are box
    quadratures on an auto-sized UniformBox.  PASS needs a finite sup
    that moves by less than stability_limit under a four-fold family
    enlargement and a doubling of the box resolution.
    """
    IneqCase("hls", alpha, p, q, d, family, "bounded")
    return _hls_core(alpha, p, q, d, 0.0, family, grid, counts,
                     stability_limit)


def shifted_hls_check(alpha: float, p: float, q: float, d: int, a: float,
                      family: TestFamily, grid: Grid | None = None,
                      counts: tuple[int, ...] | None = None,
                      stability_limit: float = 1.5) -> Report:
    """Same sup for (H + a)^(-alpha/2), a in {+2, -2}.

    a = -2 drops the spectral bottom to d - 2, so d >= 3 is required
    for a decaying semigroup.  a = +2 shrinks the kernel pointwise and
    the sup should land below the unshifted one.
    """
    if a not in (2.0, -2.0):
        raise InvalidParameterError("a must be +2 or -2")
    if a == -2.0 and d < 3:
        raise DomainError("a = -2 needs d >= 3: H - 2 is not positive")
    IneqCase("hls", alpha, p, q, d, family, "bounded")
    return _hls_core(alpha, p, q, d, float(a), family, grid, counts,
                     stability_limit)


# ---------------------------------------------------------------------------
# GNS

def _ratio_gns(f: Field, p: float, q: float, box: UniformBox,
               box_fine: UniformBox | None) -> tuple[float, float]:
    den = _grad_norm(f, p)
    if den == 0.0:
        raise InvalidParameterError("zero field in family")
    if q == 2.0:
        r = lp_norm(f, 2.0) / den
        return r, r
    r0 = box_lp_norm(resample(f, box), box, q) / den
    r1 = r0
    if box_fine is not None:
        r1 = box_lp_norm(resample(f, box_fine), box_fine, q) / den
    return r0, r1


def gns_check(p: float, q: float, d: int, family: TestFamily,
              grid: Grid | None = None,
              counts: tuple[int, ...] | None = None,
              stability_limit: float = 1.5) -> Report:
    """Empirical sup of |f|_q / sum_j |A_j f|_p (all 2d+1 components).

    Requires d >= 3 and 1/p - 1/(d+1) <= 1/q < 1/p.  The gradient norm
    is the l^1 combination of component L^p norms, computed by grid
    quadrature; the q norm uses the auto-sized box when q != 2.
    """
    IneqCase("gns", 1.0, p, q, d, family, "bounded")
    g = grid if grid is not None else _default_grid(d)
    if g.d != d:
        raise InvalidParameterError("grid dimension does not match d")
    base = family.members(g)
    extra = family.resized(4 * family.count).members(g)[family.count:]
    box = _measured_box(base, counts or _default_counts(d))
    fine = _refined(box)
    got = map_ordered(lambda f: _ratio_gns(f, p, q, box, fine), base)
    got_e = map_ordered(lambda f: _ratio_gns(f, p, q, box, None), extra)
    rep = Report(suite="gns",
                 params={"p": p, "q": q, "d": d, "kind": family.kind,
                         "count": family.count, "seed": family.seed})
    _sup_stats(rep, "gradient_ratio_sup", [r for r, _ in got],
               [r for r, _ in got_e], [r for _, r in got],
               stability_limit)
    return rep


# ---------------------------------------------------------------------------
# Hardy

def _singular_weight(box: UniformBox, alpha: float) -> np.ndarray:
    r2 = box.radius_sq()
    with np.errstate(divide="ignore"):
        w = r2 ** (-0.5 * alpha)
    # drop the cell containing the origin; its node can carry float
    # rounding residue when the half-width is not dyadic, so test
    # against the cell size rather than against zero
    w[r2 <= (0.25 * min(box.spacings())) ** 2] = 0.0
    return w


def hardy_ratio(field: Field, alpha: float, p: float,
                box: UniformBox) -> float:
    """| |z|^(-alpha) f |_p on the box, over |H^(alpha/2) f|_p.

    The weight is zeroed on the cell containing the origin; the
    stability of the sup under box refinement is the caller's check
    that the exclusion does not matter.
    """
    den = potential_norm(field, alpha, p)
    if den == 0.0:
        raise InvalidParameterError("zero field")
    num = box_lp_norm(_singular_weight(box, alpha) * resample(field, box),
                      box, p)
    return num / den


def hardy_check(alpha: float, p: float, d: int, family: TestFamily,
                grid: Grid | None = None,
                counts: tuple[int, ...] | None = None,
                stability_limit: float = 1.5) -> Report:
    """Empirical sup of | |z|^(-alpha) f |_p / |H^(alpha/2) f|_p.

    Requires p in {2, 4} and 0 < alpha < (d+1)/p.  For alpha = 1 with
    p < d+1 the gradient-controlled variant
    | |z|^(-1) f |_p / sum_j |A_j f|_p is reported as well.
    """
    IneqCase("hardy", alpha, p, 2.0, d, family, "bounded")
    g = grid if grid is not None else _default_grid(d)
    if g.d != d:
        raise InvalidParameterError("grid dimension does not match d")
    base = family.members(g)
    extra = family.resized(4 * family.count).members(g)[family.count:]
    box = _measured_box(base, counts or _default_counts(d))
    fine = _refined(box)
    w0 = _singular_weight(box, alpha)
    w1 = _singular_weight(fine, alpha)
    grad_variant = alpha == 1.0 and p < d + 1

    def worker(f: Field, with_fine: bool):
        den = potential_norm(f, alpha, p)
        if den == 0.0:
            raise InvalidParameterError("zero field in family")
        num0 = box_lp_norm(w0 * resample(f, box), box, p)
        num1 = num0
        if with_fine:
            num1 = box_lp_norm(w1 * resample(f, fine), fine, p)
        gden = _grad_norm(f, p) if grad_variant else math.inf
        return num0, num1, den, gden

    got = map_ordered(lambda f: worker(f, True), base)
    got_e = map_ordered(lambda f: worker(f, False), extra)
    rep = Report(suite="hardy",
                 params={"alpha": alpha, "p": p, "d": d,
                         "kind": family.kind, "count": family.count,
                         "seed": family.seed})
    _sup_stats(rep, "hardy_sup", [n0 / dn for n0, _, dn, _ in got],
               [n0 / dn for n0, _, dn, _ in got_e],
               [n1 / dn for _, n1, dn, _ in got], stability_limit)
    if grad_variant:
        _sup_stats(rep, "gradient_sup",
                   [n0 / gd for n0, _, _, gd in got],
                   [n0 / gd for n0, _, _, gd in got_e],
                   [n1 / gd for _, n1, _, gd in got], stability_limit,
                   prefix="gradient_")
    return rep


# ---------------------------------------------------------------------------
# endpoint demos

# Trend classification: a sequence counts as divergent when it grows
# monotonically and its increments refuse to decay.  The floors encode
# what "refuse" means per demo.  L^1 witnesses: subcritical increments
# decay geometrically at rate 2^(-2(1/q - 1/q*)) (measured 0.86 at
# q = 1.2, alpha = 1/2, seven levels) while critical and supercritical
# ones sit at 0.97 and above; exponents within a few percent of q*
# cannot be resolved at these depths.  Linf witness: the borderline
# profile's increments decay harmonically (measured 0.96) while its
# smooth control decays geometrically (0.71 for alpha = 1/2).
_L1_RATIO_FLOOR = 0.92
_LINF_RATIO_FLOOR = 0.90

# two-scale quadrature for the L^1-range images: a coarse global box
# plus a fine core window; all widths are dyadic so the coarse lattice
# tiles the window exactly
_OUT_HALF, _OUT_N = 8.0, 512
_CORE_HALF, _CORE_N = 0.25, 512


def _trend(rep: Report, seq: list[float], stem: str, notes: list[str],
           expected_divergent: bool, ratio_floor: float,
           threshold_note: str) -> None:
    for i, v in enumerate(seq):
        rep.add(f"{stem}{i}", v, None,
                bool(np.isfinite(v)) and v >= 0.0, note=notes[i])
    d_prev = seq[-2] - seq[-3]
    d_last = seq[-1] - seq[-2]
    monotone = all(b > a for a, b in zip(seq, seq[1:]))
    if d_prev > 0.0:
        ratio = d_last / d_prev
    else:
        ratio = math.inf if d_last > 0.0 else 0.0
    divergent = monotone and ratio >= ratio_floor
    rep.add("monotone", 1.0 if monotone else 0.0, None,
            monotone or not expected_divergent,
            note="strict increase across levels")
    rep.add("increment_ratio", ratio, ratio_floor, True,
            note="last increment over previous; floor separates the "
                 "verdicts")
    ok = divergent == expected_divergent
    rep.add("trend_matches", 1.0 if ok else 0.0, None, ok,
            note=("expected "
                  + ("divergent" if expected_divergent else "bounded")
                  + "; " + threshold_note))
    if expected_divergent and not divergent:
        warnings.warn(
            "expected divergence plateaued; resolution or level count "
            "is insufficient", ResolutionWarning, stacklevel=3)


def _gauss_image_axes(sigma: float, t: np.ndarray, rho: np.ndarray,
                      x: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """e^(-tH) applied to the unit-mass Gaussian of width sigma, in
    closed form, split into a rho factor and one x-axis factor.

    The x factor is the Mehler integral of a Gaussian, again Gaussian:
    amplitude (cosh 2t + sinh 2t / s^2)^(-1/2) and exponent
    -(coth 2t + s^2) / (2 (1 + s^2 coth 2t)) x^2; the algebra was
    reduced so that no large-coth cancellation occurs at small t.
    sigma = 1 reproduces e^(-t) times the stationary profile, which is
    the ground-mode eigenvalue check used in the tests.
    """
    s2 = sigma * sigma
    tt = t[:, None]
    u = (1.0 + 2.0 * tt / s2) ** -0.5 \
        * np.exp(-rho[None, :] ** 2 / (2.0 * (s2 + 2.0 * tt)))
    ch, sh = np.cosh(2.0 * tt), np.sinh(2.0 * tt)
    coth = ch / sh
    v = (ch + sh / s2) ** -0.5 \
        * np.exp(-x[None, :] ** 2
                 * (coth + s2) / (2.0 * (1.0 + s2 * coth)))
    return u, v


def _l1_image_q_norm(sigma: float, alpha: float, q: float,
                     t: np.ndarray, w: np.ndarray) -> float:
    """|H^(-alpha/2) f_sigma|_q for the unit-mass width-sigma Gaussian,
    d = 1, by closed-form evaluation under the time quadrature."""
    gam = 0.5 * alpha
    amp = w * t ** (gam - 1.0) / math.gamma(gam) \
        * (2.0 * math.pi * sigma * sigma) ** -1.0

    def image(box: UniformBox) -> np.ndarray:
        rho_ax, x_ax = box.axes()
        u, v = _gauss_image_axes(sigma, t, rho_ax, x_ax)
        return (amp[:, None] * u).T @ v

    out = UniformBox((_OUT_HALF, _OUT_HALF), (_OUT_N, _OUT_N))
    core = UniformBox((_CORE_HALF, _CORE_HALF), (_CORE_N, _CORE_N))
    a_out = np.abs(image(out)) ** q
    a_core = np.abs(image(core)) ** q
    # Riemann cell sums; the core window is removed at the coarse
    # spacing and re-added at the fine one
    ax = out.axes()[0]
    m = (ax >= -_CORE_HALF) & (ax < _CORE_HALF)
    win = np.outer(m, m)
    total = out.cell_volume * (a_out.sum() - a_out[win].sum()) \
        + core.cell_volume * a_core.sum()
    return float(total) ** (1.0 / q)


def _polar_nodes(r_lo: float, r_hi: float, n_theta: int = 32,
                 order: int = 10):
    n_pan = max(2, int(np.ceil(np.log2(r_hi / r_lo))))
    edges = r_lo * (r_hi / r_lo) ** (np.arange(n_pan + 1) / n_pan)
    xg, wg = np.polynomial.legendre.leggauss(order)
    r = np.concatenate([0.5 * (b - a) * xg + 0.5 * (a + b)
                        for a, b in zip(edges, edges[1:])])
    wr = np.concatenate([np.full(order, 0.5 * (b - a)) * wg
                         for a, b in zip(edges, edges[1:])])
    th = 2.0 * np.pi * np.arange(n_theta) / n_theta
    return r, wr, th, 2.0 * np.pi / n_theta


def _center_value(fr, delta: float, alpha: float) -> float:
    """int_{delta <= |z| <= 1/2} K_{alpha/2}(0, z) fr(|z|) dz, d = 1."""
    r, wr, th, wth = _polar_nodes(delta, 0.5)
    zp = np.empty((r.size, th.size, 2))
    zp[:, :, 0] = r[:, None] * np.cos(th)[None, :]
    zp[:, :, 1] = r[:, None] * np.sin(th)[None, :]
    ker = k_alpha(np.zeros(2), zp, 0.5 * alpha)
    ang = ker.sum(axis=1) * wth
    return float(np.sum(wr * r * fr(r) * ang))


def _profile_lp(alpha: float, kappa: float, p: float) -> float:
    """|f|_p of the borderline profile, polar quadrature from 1e-6 with
    the closed-form inner remainder added when alpha p = d + 1 (the
    integral converges too slowly there to truncate honestly)."""
    r, wr, _, _ = _polar_nodes(1e-6, 0.5, n_theta=1)
    vals = (r ** -alpha * np.log(1.0 / r) ** -kappa) ** p
    total = 2.0 * np.pi * float(np.sum(wr * r * vals))
    if kappa * p > 1.0 and abs(alpha * p - 2.0) < 1e-12:
        total += 2.0 * np.pi \
            * np.log(1e6) ** (1.0 - kappa * p) / (kappa * p - 1.0)
    return total ** (1.0 / p)


def hls_endpoint_demo(which: str, alpha: float, d: int, exponent: float,
                      levels: int = 7, control: bool = False) -> Report:
    """Sharp-exponent dichotomy demos at the ends of the HLS range.

    which = "L1-range": f_n are unit-mass Gaussians of width 2^-n and
    the reported sequence is |H^(-alpha/2) f_n|_q with q = exponent,
    evaluated in closed form (the heat flow of a Gaussian is Gaussian)
    on a two-scale box, so no spectral grid enters.  Below
    q* = (d+1)/(d+1-alpha) the sequence stabilizes; at or above q* its
    increments keep growing.

    which = "Linf-range": the borderline profile
    |z|^(-alpha) (log 1/|z|)^(-(alpha/(d+1))(1+eps)) 1_{|z| <= 1/2}
    lies in L^p for p = exponent <= p* = (d+1)/alpha, yet the value
    H^(-alpha/2)f(0), integrated in polar coordinates down to
    shrinking inner cutoffs 2^-m, grows without stabilizing.  For
    exponent > p* the demo verifies the bounded direction instead:
    sup |H^(-alpha/2) f|_inf / |f|_p over a Gaussian family.

    control = True swaps in a smooth non-concentrating input, which
    must stabilize.  Implemented for d = 1; higher d would need the
    sphere quadratures this package does not carry.
    """
    if which not in ("L1-range", "Linf-range"):
        raise InvalidParameterError("which must be L1-range or Linf-range")
    if d != 1:
        raise InvalidParameterError("endpoint demos are implemented "
                                    "for d = 1")
    if not 0.0 < alpha < d + 1.0:
        raise InvalidParameterError("alpha must lie in (0, d+1)")
    if exponent < 1.0:
        raise InvalidParameterError("exponent must be >= 1")
    if not 3 <= levels <= 8:
        raise InvalidParameterError("levels must lie in [3, 8]")
    rep = Report(suite="hls",
                 params={"which": which, "alpha": alpha, "d": d,
                         "exponent": exponent, "levels": levels,
                         "control": control})

    if which == "L1-range":
        q = float(exponent)
        q_star = (d + 1.0) / (d + 1.0 - alpha)
        sigs = [1.0] * levels if control \
            else [2.0 ** -n for n in range(levels)]
        t, w = t_quadrature(0.5 * alpha, 0.0, d).nodes()
        norms = map_ordered(
            lambda s: _l1_image_q_norm(s, alpha, q, t, w), sigs)
        expected_divergent = (not control) and q >= q_star - 1e-12
        notes = [f"sigma = {s:g}, q = {q:g}" for s in sigs]
        _trend(rep, norms, "norm_level_", notes, expected_divergent,
               _L1_RATIO_FLOOR, f"q* = {q_star:.6g}")
        return rep

    p = float(exponent)
    p_star = (d + 1.0) / alpha
    if p > p_star + 1e-12:
        # bounded direction: p beyond the threshold
        g = _default_grid(d)
        fam = TestFamily("gaussian", 8, seed=11)

        def ratio(f: Field) -> float:
            img = spectral_frac_power(f, -0.5 * alpha)
            return lp_norm(img, np.inf) / lp_norm(f, p)

        base = map_ordered(ratio, fam.members(g))
        ext = map_ordered(ratio, fam.resized(32).members(g)[8:])
        sup_b = max(base)
        sup_a = max([sup_b] + ext)
        growth = sup_a / sup_b
        rep.add("bounded_sup", sup_a, None, bool(np.isfinite(sup_a)),
                note=f"sup |H^(-a/2)f|_inf / |f|_p, p > p* = {p_star:g}")
        rep.add("family_growth", growth, 1.5, growth < 1.5,
                note="sup change, family x4")
        rep.add("trend_matches", 1.0, None, growth < 1.5,
                note="expected bounded; p beyond the L^inf threshold")
        return rep

    kappa = (alpha / (d + 1.0)) * (1.0 + _PROFILE_EPS)
    if control:
        def fr(r):
            return np.exp(-2.0 * r * r)
    else:
        def fr(r):
            return r ** -alpha * np.log(1.0 / r) ** -kappa
        rep.add("profile_lp_norm", _profile_lp(alpha, kappa, p), None,
                True, note=f"witness membership |f|_p, p = {p:g} <= "
                           f"p* = {p_star:g}, eps = {_PROFILE_EPS:g}")
    deltas = [2.0 ** -(m + 2) for m in range(levels)]
    vals = map_ordered(lambda dl: _center_value(fr, dl, alpha), deltas)
    notes = [f"inner cutoff {dl:g}" for dl in deltas]
    _trend(rep, vals, "value_level_", notes, not control,
           _LINF_RATIO_FLOOR, f"p* = {p_star:.6g}")
    return rep


# ---------------------------------------------------------------------------
# dispatch

def run_case(case: IneqCase, grid: Grid | None = None) -> Report:
    """Route one IneqCase to its checker."""
    if case.tag == "hls":
        return hls_check(case.alpha, case.p, case.q, case.d, case.family,
                         grid=grid)
    if case.tag == "hls-endpoint-1":
        return hls_endpoint_demo("L1-range", case.alpha, case.d, case.q)
    if case.tag == "hls-endpoint-inf":
        return hls_endpoint_demo("Linf-range", case.alpha, case.d, case.p)
    if case.tag == "gns":
        return gns_check(case.p, case.q, case.d, case.family, grid=grid)
    return hardy_check(case.alpha, case.p, case.d, case.family, grid=grid)
