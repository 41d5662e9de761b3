"""Mixed Fourier-Hermite grids and fields on R^(d+1).

A point is z = (rho, x) with rho on a uniform periodic grid over
[-L_rho, L_rho) and x on a tensor Gauss-Hermite grid in R^d.  The DFT
frequencies in rho are tau_n = pi n / L_rho for n in
{-N_rho/2, ..., N_rho/2 - 1}; Hermite degrees are truncated at total
degree |mu| <= K.

Gauss-Hermite weights are stored pre-multiplied by exp(+node^2), so a
plain weighted sum approximates the unweighted integral over R^d of any
integrand that decays at least like a Gaussian.
"""
from __future__ import annotations

import warnings
from dataclasses import dataclass

import numpy as np

from .errors import (
    InvalidParameterError,
    NonFiniteSampleError,
    TruncationWarning,
)
from .hermite import gauss_hermite, hermite_all, multi_indices

__all__ = [
    "Grid",
    "Field",
    "UniformBox",
    "make_grid",
    "sample",
    "lp_norm",
    "inner",
    "box_lp_norm",
    "resample",
]


@dataclass(frozen=True, eq=False)
class Grid:
    d: int
    N_rho: int
    L_rho: float
    K: int
    M: int
    nodes_x: np.ndarray      # (M,) Gauss-Hermite nodes, one axis, reused per dim
    weights_x: np.ndarray    # (M,) compensated weights w * exp(node^2)
    rho: np.ndarray          # (N_rho,) uniform points, left-closed
    tau: np.ndarray          # (N_rho,) frequencies in FFT storage order
    mu: np.ndarray           # (n_mu, d) multi-indices, degree-then-lex order
    mu_abs: np.ndarray       # (n_mu,) total degrees
    hermite_table: np.ndarray  # (K+1, M) h_k at the nodes

    @property
    def drho(self) -> float:
        return 2.0 * self.L_rho / self.N_rho

    @property
    def n_mu(self) -> int:
        return self.mu.shape[0]

    @property
    def x_shape(self) -> tuple[int, ...]:
        return (self.M,) * self.d

    @property
    def shape(self) -> tuple[int, ...]:
        return (self.N_rho,) + self.x_shape

    def x_weight(self) -> np.ndarray:
        """Tensor of compensated x-quadrature weights, shape (M,)*d."""
        w = self.weights_x
        out = w
        for _ in range(self.d - 1):
            out = np.multiply.outer(out, w)
        return out

    def eigenvalues(self, shift: float = 0.0) -> np.ndarray:
        """lambda + shift = tau^2 + 2|mu| + d + shift, shape (N_rho, n_mu)."""
        return (self.tau ** 2)[:, None] + 2.0 * self.mu_abs[None, :] + self.d + shift

    def mode_index(self, mu) -> int:
        """Row of the multi-index mu in the coefficient layout."""
        mu = np.asarray(mu, dtype=np.int64)
        hits = np.nonzero((self.mu == mu).all(axis=1))[0]
        if hits.size == 0:
            raise InvalidParameterError(f"multi-index {tuple(mu)} not on grid")
        return int(hits[0])


def make_grid(d: int, N_rho: int, L_rho: float, K: int, M: int) -> Grid:
    """Build the mixed grid; validates the resolution contract M >= K + 1."""
    if d < 1:
        raise InvalidParameterError("d must be >= 1")
    if N_rho < 2 or (N_rho & (N_rho - 1)) != 0:
        raise InvalidParameterError("N_rho must be a power of two, >= 2")
    if L_rho <= 0:
        raise InvalidParameterError("L_rho must be positive")
    if K < 0:
        raise InvalidParameterError("K must be >= 0")
    if M < K + 1:
        raise InvalidParameterError(f"M = {M} violates M >= K + 1 = {K + 1}")
    rule = gauss_hermite(M)
    comp = rule.weights * np.exp(rule.nodes ** 2)
    if not np.isfinite(comp).all() or (comp <= 0).any():
        raise InvalidParameterError("compensated weights are not positive finite")
    rho = -L_rho + (2.0 * L_rho / N_rho) * np.arange(N_rho)
    n_int = np.fft.fftfreq(N_rho, d=1.0 / N_rho)  # 0, 1, .., -N/2, .., -1
    tau = (np.pi / L_rho) * n_int
    mu = multi_indices(d, K)
    return Grid(
        d=d, N_rho=N_rho, L_rho=float(L_rho), K=K, M=M,
        nodes_x=rule.nodes, weights_x=comp,
        rho=rho, tau=tau, mu=mu, mu_abs=mu.sum(axis=1),
        hermite_table=hermite_all(K, rule.nodes),
    )


@dataclass(frozen=True, eq=False)
class Field:
    """Complex values on the mixed grid, shape (N_rho,) + (M,)*d."""
    grid: Grid
    values: np.ndarray

    def __post_init__(self) -> None:
        if self.values.shape != self.grid.shape:
            raise InvalidParameterError(
                f"field shape {self.values.shape} != grid shape {self.grid.shape}")
        if not np.isfinite(self.values).all():
            raise NonFiniteSampleError("field contains non-finite entries")

    def __add__(self, other: "Field") -> "Field":
        return Field(self.grid, self.values + other.values)

    def __sub__(self, other: "Field") -> "Field":
        return Field(self.grid, self.values - other.values)

    def __mul__(self, c) -> "Field":
        return Field(self.grid, self.values * c)

    __rmul__ = __mul__


def sample(grid: Grid, fn) -> Field:
    """Sample fn(rho, x_1, ..., x_d) on the grid.

    The arguments passed to fn broadcast to the field shape
    (N_rho, M, ..., M).  Non-finite samples raise.
    """
    mesh_rho = grid.rho.reshape((grid.N_rho,) + (1,) * grid.d)
    xs = []
    for axis in range(grid.d):
        shp = [1] * (grid.d + 1)
        shp[axis + 1] = grid.M
        xs.append(grid.nodes_x.reshape(shp))
    values = np.asarray(fn(mesh_rho, *xs))
    values = np.broadcast_to(values, grid.shape).astype(np.complex128)
    if not np.isfinite(values).all():
        raise NonFiniteSampleError("sampled function returned non-finite values")
    return Field(grid, values.copy())


def lp_norm(field: Field, p: float) -> float:
    """L^p norm by grid quadrature (trapezoid in rho, Gauss-Hermite in x).

    Accurate when |field|^p decays at least like exp(-|x|^2) in x; for
    heavy-tailed integrands use a UniformBox and box_lp_norm instead.
    p = inf returns the grid maximum.
    """
    if p != np.inf and p < 1:
        raise InvalidParameterError("p must be >= 1 or inf")
    a = np.abs(field.values)
    if p == np.inf:
        return float(a.max())
    w = field.grid.x_weight() * field.grid.drho
    return float(np.sum(w * a ** p) ** (1.0 / p))


def inner(f: Field, g: Field) -> complex:
    """Sesquilinear inner product, conjugate on the second argument."""
    ga, gb = f.grid, g.grid
    if ga is not gb and (ga.d, ga.N_rho, ga.L_rho, ga.K, ga.M) != \
            (gb.d, gb.N_rho, gb.L_rho, gb.K, gb.M):
        raise InvalidParameterError("fields live on different grids")
    w = f.grid.x_weight() * f.grid.drho
    return complex(np.sum(w * f.values * np.conjugate(g.values)))


@dataclass(frozen=True)
class UniformBox:
    """Uniform tensor grid on a centered box, axis 0 is rho.

    half_widths[i] = R_i and counts[i] = n_i give points
    -R_i + k 2R_i/n_i for k = 0..n_i-1 (left-closed, origin included
    since counts are even).
    """
    half_widths: tuple[float, ...]
    counts: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.half_widths) != len(self.counts):
            raise InvalidParameterError("half_widths and counts length mismatch")
        if len(self.counts) < 1:
            raise InvalidParameterError("box needs at least one axis")
        if any(r <= 0 for r in self.half_widths):
            raise InvalidParameterError("half widths must be positive")
        if any(n < 2 or n % 2 for n in self.counts):
            raise InvalidParameterError("counts must be even and >= 2")

    @property
    def ndim(self) -> int:
        return len(self.counts)

    def axes(self) -> list[np.ndarray]:
        return [-r + (2.0 * r / n) * np.arange(n)
                for r, n in zip(self.half_widths, self.counts)]

    def spacings(self) -> list[float]:
        return [2.0 * r / n for r, n in zip(self.half_widths, self.counts)]

    @property
    def cell_volume(self) -> float:
        return float(np.prod(self.spacings()))

    def freq_axes(self) -> list[np.ndarray]:
        """Conjugate frequencies per axis, FFT storage order."""
        return [2.0 * np.pi * np.fft.fftfreq(n, d=h)
                for n, h in zip(self.counts, self.spacings())]

    def mesh(self) -> list[np.ndarray]:
        return list(np.meshgrid(*self.axes(), indexing="ij"))

    def radius_sq(self) -> np.ndarray:
        rr = 0.0
        for i, ax in enumerate(self.axes()):
            shp = [1] * self.ndim
            shp[i] = ax.size
            rr = rr + ax.reshape(shp) ** 2
        return rr


def box_lp_norm(values: np.ndarray, box: UniformBox, p: float,
                radius: float | None = None,
                exclude_origin: bool = False) -> float:
    """L^p norm of samples on a uniform box, optionally restricted.

    radius restricts the domain to max_i |z_i| <= radius; exclude_origin
    drops the single cell containing z = 0 (used with singular weights).
    """
    if p != np.inf and p < 1:
        raise InvalidParameterError("p must be >= 1 or inf")
    values = np.asarray(values)
    mask = np.ones(values.shape, dtype=bool)
    if radius is not None:
        for i, ax in enumerate(box.axes()):
            shp = [1] * box.ndim
            shp[i] = ax.size
            mask &= np.broadcast_to(np.abs(ax.reshape(shp)) <= radius + 1e-12,
                                    values.shape)
    if exclude_origin:
        hmin = min(box.spacings())
        mask &= np.broadcast_to(box.radius_sq() > (0.25 * hmin) ** 2, values.shape)
    a = np.abs(values)
    if p == np.inf:
        return float(a[mask].max()) if mask.any() else 0.0
    return float((np.sum(a[mask] ** p) * box.cell_volume) ** (1.0 / p))


def resample(field: Field, box: UniformBox, tail_tol: float = 1e-6) -> np.ndarray:
    """Evaluate the truncated Fourier-Hermite series of field on a box.

    The box must have 1 + d axes matching the field's grid.  Warns with
    TruncationWarning when the relative coefficient energy in the top
    Hermite shell or the top rho-frequency ring exceeds tail_tol, since
    the series truncation then limits off-grid accuracy.
    """
    from .spectral import forward  # layering: transform lives one level up

    g = field.grid
    if box.ndim != g.d + 1:
        raise InvalidParameterError("box dimension must be d + 1")
    coeffs = forward(field)
    c = coeffs.data
    total = float(np.sum(np.abs(c) ** 2))
    if total > 0:
        top_shell = float(np.sum(np.abs(c[:, g.mu_abs == g.K]) ** 2))
        nyq = np.abs(np.fft.fftfreq(g.N_rho, d=1.0 / g.N_rho)) >= g.N_rho // 2 - 1
        top_freq = float(np.sum(np.abs(c[nyq, :]) ** 2))
        tail = (top_shell + top_freq) / total
        if tail > tail_tol:
            warnings.warn(
                f"coefficient tail energy {tail:.3e} exceeds {tail_tol:.1e}; "
                "resampled values limited by series truncation",
                TruncationWarning, stacklevel=2)
    axes = box.axes()
    # scatter to the dense degree cube, then contract axis by axis
    cube_shape = (g.N_rho,) + (g.K + 1,) * g.d
    cube = np.zeros(cube_shape, dtype=np.complex128)
    cube[(slice(None),) + tuple(g.mu.T)] = c
    out = cube
    for axis in range(g.d):
        h_tab = hermite_all(g.K, axes[axis + 1])      # (K+1, n_axis)
        # consumes the leftmost remaining degree axis, appends the point axis,
        # so after d passes the shape is (N_rho, n_1, ..., n_d)
        out = np.tensordot(out, h_tab, axes=([1], [0]))
    phases = np.exp(1j * np.outer(axes[0], g.tau))    # (n_rho_box, N_rho)
    out = np.tensordot(phases, out, axes=([1], [0]))
    return out
