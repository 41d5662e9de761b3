"""Ladder operators, Riesz transforms, and their exact identities.

The first-order factors of H are A_0 = -d/drho, the raising operators
A_j = -d/dx_j + x_j for 1 <= j <= d, and the lowering operators
A_{-j} = d/dx_j + x_j.  On the eigenbasis they act by

    A_0:   c[n, mu] -> -i tau_n c[n, mu]
    A_j:   contributes sqrt(2 mu_j) c[n, mu - e_j] at mu
    A_{-j}: contributes sqrt(2 (mu_j + 1)) c[n, mu + e_j] at mu

so every operator in this module is coefficientwise-exact; residual
checks test identities, not discretization.  Raising pushes the top
degree shell past the cutoff; that energy is dropped, loudly if it
matters (see apply_A).

The commutation shifts come from the eigenvalue bookkeeping: raising
adds 2 to lambda, so A_j F(H) = F(H - 2) A_j and A_{-j} F(H) =
F(H + 2) A_{-j}; A_0 commutes with the calculus outright.
"""
from __future__ import annotations

import numpy as np

from .errors import (
    InvalidParameterError,
    SingularMultiplierError,
    TruncationError,
)
from .grid import Field, Grid, inner, lp_norm
from .report import Report
from .spectral import (
    SpectralCoeffs,
    apply_multiplier,
    forward,
    inverse,
    power_multiplier,
)

__all__ = [
    "apply_A",
    "riesz",
    "riesz_multi",
    "grad_H",
    "commute_check",
    "duality_check",
    "inverse_riesz_check",
    "commute_matrix_report",
]

# input energy allowed on the top shell before raising is meaningless
_RAISE_TAIL_TOL = 1e-8


def _to_cube(coeffs: SpectralCoeffs) -> np.ndarray:
    g = coeffs.grid
    cube = np.zeros((g.N_rho,) + (g.K + 1,) * g.d, dtype=np.complex128)
    cube[(slice(None),) + tuple(g.mu.T)] = coeffs.data
    return cube


def _from_cube(grid: Grid, cube: np.ndarray) -> SpectralCoeffs:
    return SpectralCoeffs(grid, cube[(slice(None),) + tuple(grid.mu.T)])


def apply_A(j: int, coeffs: SpectralCoeffs) -> SpectralCoeffs:
    """Apply the ladder operator with index j in {-d, ..., d} to coefficients.

    Raising (j > 0) shifts degrees up, so coefficients on the top shell
    |mu| = K would leave the representation; they are dropped, and if
    they carry more than 1e-8 of the total energy the call raises
    TruncationError instead of silently biasing norms.
    """
    g = coeffs.grid
    if abs(j) > g.d:
        raise InvalidParameterError(f"ladder index {j} outside |j| <= {g.d}")
    if j == 0:
        return SpectralCoeffs(g, (-1j * g.tau)[:, None] * coeffs.data)
    if j > 0:
        total = float(np.sum(np.abs(coeffs.data) ** 2))
        top = float(np.sum(np.abs(coeffs.data[:, g.mu_abs == g.K]) ** 2))
        if total > 0 and top > _RAISE_TAIL_TOL * total:
            raise TruncationError(
                f"top degree shell carries {top / total:.3e} of the energy; "
                "raising would drop it (refine K)")
    cube = _to_cube(coeffs)
    axis = abs(j)                       # cube axis for x_j is axis j
    out = np.zeros_like(cube)
    k = np.arange(g.K + 1)
    if j > 0:
        src = [slice(None)] * cube.ndim
        dst = [slice(None)] * cube.ndim
        src[axis] = slice(0, g.K)
        dst[axis] = slice(1, g.K + 1)
        shape = [1] * cube.ndim
        shape[axis] = g.K
        out[tuple(dst)] = np.sqrt(2.0 * k[1:]).reshape(shape) * cube[tuple(src)]
    else:
        src = [slice(None)] * cube.ndim
        dst = [slice(None)] * cube.ndim
        src[axis] = slice(1, g.K + 1)
        dst[axis] = slice(0, g.K)
        shape = [1] * cube.ndim
        shape[axis] = g.K
        out[tuple(dst)] = np.sqrt(2.0 * (k[:g.K] + 1)).reshape(shape) * cube[tuple(src)]
    return _from_cube(g, out)


def riesz(j: int, field: Field) -> Field:
    """Riesz transform R_j f = A_j H^(-1/2) f."""
    c = forward(field)
    c = apply_multiplier(c, power_multiplier(field.grid, -0.5))
    return inverse(apply_A(j, c))


def riesz_multi(jj: tuple[int, int], field: Field) -> Field:
    """Second-order transform A_j1 A_j2 H^(-1) f."""
    j1, j2 = jj
    c = forward(field)
    c = apply_multiplier(c, power_multiplier(field.grid, -1.0))
    return inverse(apply_A(j1, apply_A(j2, c)))


def grad_H(field: Field) -> list[Field]:
    """The 2d+1 first-order components (A_0 f, A_1..A_d f, A_{-1}..A_{-d} f)."""
    c = forward(field)
    order = [0] + list(range(1, field.grid.d + 1)) \
        + [-j for j in range(1, field.grid.d + 1)]
    return [inverse(apply_A(j, c)) for j in order]


def _rel_residual(a: Field, b: Field) -> float:
    den = max(lp_norm(a, 2), lp_norm(b, 2))
    if den == 0.0:
        return 0.0
    return lp_norm(a - b, 2) / den


def _power_on_support(coeffs: SpectralCoeffs, alpha: float,
                      shift: float) -> SpectralCoeffs:
    """(H + shift)^alpha restricted to the modes the input lives on.

    After a raising operator the bottom modes hold structural zeros, so
    a shifted power that is singular there is still well defined on the
    image.  Modes where the power is undefined must carry (numerically)
    no energy; the multiplier is zeroed there.
    """
    g = coeffs.grid
    base = g.eigenvalues(shift)
    bad = base <= 0 if alpha < 0 else (base < 0) & (alpha != int(alpha))
    if not bad.any():
        return apply_multiplier(coeffs, power_multiplier(g, alpha, shift))
    total = float(np.sum(np.abs(coeffs.data) ** 2))
    stray = float(np.sum(np.abs(coeffs.data[bad]) ** 2))
    if total > 0 and stray > 1e-26 * total:
        raise SingularMultiplierError(
            f"(lambda + {shift})^{alpha} undefined on modes carrying "
            f"{stray / total:.3e} of the energy")
    m = np.zeros_like(base)
    good = ~bad
    m[good] = np.power(base[good], alpha)
    data = coeffs.data * m
    return SpectralCoeffs(g, data)


def commute_check(j: int, alpha: float, field: Field,
                  tol: float = 1e-10) -> Report:
    """Residuals of the commutation identities for the index j.

    j = 0 checks that A_0 commutes with H^alpha.  j > 0 checks
    A_j H^alpha = (H-2)^alpha A_j and H^alpha A_j = A_j (H+2)^alpha;
    j < 0 the mirrored pair.  The identities that apply (H-2)^alpha
    before lowering touch the bottom of the spectrum, so they need
    d >= 3 for fractional alpha (lambda - 2 >= d - 2 must stay
    positive); the singular-multiplier error propagates otherwise.
    """
    g = field.grid
    c = forward(field)
    rep = Report(suite="commute",
                 params={"j": j, "alpha": alpha, "d": g.d})

    def power(cc, shift=0.0):
        return _power_on_support(cc, alpha, shift)

    if j == 0:
        lhs = inverse(apply_A(0, power(c)))
        rhs = inverse(power(apply_A(0, c)))
        r = _rel_residual(lhs, rhs)
        rep.add("A0_commutes", r, tol, r < tol, "spectral route, exact identity")
        return rep
    if j > 0:
        # A_j H^a f = (H-2)^a A_j f ; H^a A_j f = A_j (H+2)^a f
        lhs1 = inverse(apply_A(j, power(c)))
        rhs1 = inverse(power(apply_A(j, c), shift=-2.0))
        lhs2 = inverse(power(apply_A(j, c)))
        rhs2 = inverse(apply_A(j, power(c, shift=2.0)))
        names = ("raise_pre_shift", "raise_post_shift")
    else:
        # A_{-j} H^a f = (H+2)^a A_{-j} f ; H^a A_{-j} f = A_{-j} (H-2)^a f
        lhs1 = inverse(apply_A(j, power(c)))
        rhs1 = inverse(power(apply_A(j, c), shift=2.0))
        lhs2 = inverse(power(apply_A(j, c)))
        rhs2 = inverse(apply_A(j, power(c, shift=-2.0)))
        names = ("lower_pre_shift", "lower_post_shift")
    for name, lhs, rhs in ((names[0], lhs1, rhs1), (names[1], lhs2, rhs2)):
        r = _rel_residual(lhs, rhs)
        rep.add(name, r, tol, r < tol, "spectral route, exact identity")
    return rep


def commute_matrix_report(field: Field,
                          alphas=(-1.0, -0.5, 0.5),
                          js=(0, 1, -1),
                          tol: float = 1e-10) -> Report:
    """All commutation residuals over a (j, alpha) matrix, one report."""
    rep = Report(suite="commute",
                 params={"alphas": list(alphas), "js": list(js),
                         "d": field.grid.d})
    for a in alphas:
        for j in js:
            sub = commute_check(j, a, field, tol=tol)
            for m in sub.metrics:
                rep.add(f"{m.name}[j={j},alpha={a}]", m.value, m.tolerance,
                        m.passed, m.note)
    return rep


def duality_check(f: Field, g: Field) -> Report:
    """Compare I = <f, g> with S = sum_j <R_j f, R_j g>.

    Mode-wise S/I is (tau^2 + 4|mu| + 2d)/(tau^2 + 2|mu| + d), which
    lies in [1, 2]; for f = g the two-sided bound I <= S <= 2I is
    asserted.  A constant-2 identity, which the factor only attains at
    the bottom mode, cannot hold; the report carries that observation.
    """
    I = inner(f, g).real
    S = 0.0
    d = f.grid.d
    for j in range(-d, d + 1):
        S += inner(riesz(j, f), riesz(j, g)).real
    rep = Report(suite="duality", params={"d": d})
    rep.add("I", I, None, True, "inner product")
    rep.add("S", S, None, True, "sum over 2d+1 Riesz components")
    same = f is g or np.array_equal(f.values, g.values)
    if same and I > 0:
        ok = (I <= S * (1 + 1e-12)) and (S <= 2 * I * (1 + 1e-12))
        rep.add("sandwich_I_le_S_le_2I", S / I, 2.0, ok,
                "two-sided bound; an exact constant-2 identity is "
                "attained only at the bottom mode")
    return rep


def inverse_riesz_check(f: Field, p: float) -> Report:
    """Check ||H^(1/2) f||_p against sum_j ||A_j f||_p.

    For p = 2 the mode-wise bound lambda <= tau^2 + 4|mu| + 2d makes
    ||H^(1/2) f||_2^2 <= sum_j ||A_j f||_2^2 sharp; the report carries
    the empirical ratio for any p.
    """
    if p < 1:
        raise InvalidParameterError("p must be >= 1")
    c = forward(f)
    lhs = lp_norm(inverse(apply_multiplier(
        c, power_multiplier(f.grid, 0.5))), p)
    parts = grad_H(f)
    rhs = sum(lp_norm(u, p) for u in parts)
    rep = Report(suite="inverse_riesz", params={"p": p, "d": f.grid.d})
    rep.add("lhs_half_power_norm", lhs, None, True, "spectral H^(1/2)")
    rep.add("rhs_ladder_sum", rhs, None, True, "2d+1 ladder components")
    ratio = lhs / rhs if rhs > 0 else 0.0
    if p == 2:
        # sharp constant 1 at p=2, mode-wise inequality
        sq_rhs = np.sqrt(sum(lp_norm(u, 2) ** 2 for u in parts))
        ok = lhs <= sq_rhs * (1 + 1e-12)
        rep.add("p2_sharp_ratio", lhs / sq_rhs if sq_rhs else 0.0, 1.0, ok,
                "l2 aggregation: lambda <= tau^2 + 4|mu| + 2d mode-wise")
    rep.add("empirical_ratio", ratio, None, True, "lhs / sum of norms")
    return rep
