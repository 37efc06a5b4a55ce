"""Symmetric eigensolver and certified spectral-radius intervals.

The dense reference path is a cyclic Jacobi iteration: rotate away every
off-diagonal entry until all magnitudes drop below a tolerance.  It yields
the full eigensystem needed by the walk formula

    w_k(G) = sum_i c_i mu_i^{k-1},     c_i = (sum_j u_ij)^2,

where u_1..u_n are orthonormal eigenvectors.

For inequality verdicts the float eigenvalues are not enough: the
certified interval combines two rigorous rational bounds.  The lower end
is a Rayleigh quotient x'Ax / x'x of a power-iteration vector, evaluated
in exact rational arithmetic (any nonzero x gives a true lower bound on
the largest eigenvalue).  The upper end comes from per-vertex walk ratios:
max_u w_{p+r}(u)/w_p(u) bounds mu^r from above for every p,r >= 1, so
one-step ratios bound mu directly and two-step ratios bound mu^2 (the
latter still converge on bipartite graphs, where one-step ratios
oscillate).  Both ends are exact fractions; nothing floating enters the
guarantee.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .graphs import Graph, connected_components, induced_subgraph
from .walks import WalkTable

DEFAULT_JACOBI_TOL = 1e-12
DEFAULT_CERT_EPS = Fraction(1, 10**10)


class EigensolverError(RuntimeError):
    """Jacobi iteration failed to reach the requested tolerance."""


@dataclass(frozen=True)
class Spectrum:
    """Full eigensystem of one adjacency matrix.

    eigenvalues are descending; eigenvectors[i] is the unit eigenvector for
    eigenvalues[i]; coefficients[i] is the squared entry sum of that
    eigenvector.  Individual coefficients are basis-dependent inside a
    degenerate eigenspace -- use eigenspace_ones_projection for grouped,
    basis-independent values.  residual certifies max_i |A u_i - mu_i u_i|.
    """

    eigenvalues: tuple[float, ...]
    eigenvectors: tuple[tuple[float, ...], ...]
    coefficients: tuple[float, ...]
    residual: float

    @property
    def n(self) -> int:
        return len(self.eigenvalues)

    @property
    def radius(self) -> float:
        return self.eigenvalues[0]


def _jacobi(a: np.ndarray, tol: float, max_sweeps: int = 100) -> tuple[np.ndarray, np.ndarray]:
    n = a.shape[0]
    a = a.astype(float).copy()
    v = np.eye(n)
    if n == 1:
        return np.array([a[0, 0]]), v
    for _ in range(max_sweeps):
        off = np.abs(a - np.diag(np.diag(a)))
        if off.max() < tol:
            return np.diag(a).copy(), v
        small = off.max() * 1e-12
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if abs(apq) <= small:
                    continue
                theta = (a[q, q] - a[p, p]) / (2.0 * apq)
                t = 1.0 / (abs(theta) + math.sqrt(theta * theta + 1.0))
                if theta < 0.0:
                    t = -t
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c
                col_p, col_q = a[:, p].copy(), a[:, q].copy()
                a[:, p] = c * col_p - s * col_q
                a[:, q] = s * col_p + c * col_q
                row_p, row_q = a[p, :].copy(), a[q, :].copy()
                a[p, :] = c * row_p - s * row_q
                a[q, :] = s * row_p + c * row_q
                a[p, q] = a[q, p] = 0.0
                vp, vq = v[:, p].copy(), v[:, q].copy()
                v[:, p] = c * vp - s * vq
                v[:, q] = s * vp + c * vq
    achieved = float(np.abs(a - np.diag(np.diag(a))).max())
    raise EigensolverError(
        f"Jacobi did not converge in {max_sweeps} sweeps; "
        f"largest off-diagonal magnitude {achieved:.3e} (target {tol:.3e})"
    )


def eigen_decompose(g: Graph, tol: float = DEFAULT_JACOBI_TOL) -> Spectrum:
    """Full eigensystem of the adjacency matrix via cyclic Jacobi rotations."""
    if tol <= 0:
        raise ValueError(f"tolerance must be positive, got {tol}")
    a = g.adjacency_matrix().astype(float)
    vals, vecs = _jacobi(a, tol)
    order = np.argsort(-vals, kind="stable")
    vals = vals[order]
    vecs = vecs[:, order]
    for i in range(g.n):
        col = vecs[:, i]
        j = int(np.argmax(np.abs(col)))
        if col[j] < 0:
            vecs[:, i] = -col
    residual = float(np.abs(a @ vecs - vecs * vals).max()) if g.n else 0.0
    coeffs = tuple(float(vecs[:, i].sum() ** 2) for i in range(g.n))
    return Spectrum(
        eigenvalues=tuple(float(x) for x in vals),
        eigenvectors=tuple(tuple(float(x) for x in vecs[:, i]) for i in range(g.n)),
        coefficients=coeffs,
        residual=residual,
    )


def spectral_walk_check(g: Graph, spectrum: Spectrum, horizon: int) -> float:
    """Largest relative deviation of w_k from its spectral expansion, k <= horizon."""
    wt = WalkTable(g, horizon)
    worst = 0.0
    for k in range(1, horizon + 1):
        approx = sum(
            c * mu ** (k - 1)
            for c, mu in zip(spectrum.coefficients, spectrum.eigenvalues)
        )
        exact = wt.total(k)
        worst = max(worst, abs(approx - exact) / max(1.0, float(exact)))
    return worst


@dataclass(frozen=True)
class EigenspaceProjection:
    eigenvalue: float
    multiplicity: int
    projection_sq: float


def eigenspace_ones_projection(
    spectrum: Spectrum, group_tol: float = 1e-8
) -> tuple[EigenspaceProjection, ...]:
    """Squared norm of the all-ones vector's projection onto each eigenspace.

    Eigenvalues within group_tol of each other are clustered; the summed
    coefficients per cluster are basis-independent even when the cluster is
    degenerate.
    """
    if group_tol <= 0:
        raise ValueError(f"group tolerance must be positive, got {group_tol}")
    groups: list[EigenspaceProjection] = []
    i = 0
    vals = spectrum.eigenvalues
    while i < len(vals):
        j = i
        while j + 1 < len(vals) and vals[j] - vals[j + 1] <= group_tol:
            j += 1
        members = range(i, j + 1)
        proj = sum(spectrum.coefficients[k] for k in members)
        mean = sum(vals[k] for k in members) / len(members)
        groups.append(EigenspaceProjection(mean, len(members), float(proj)))
        i = j + 1
    return tuple(groups)


@dataclass(frozen=True)
class CertifiedInterval:
    """Rigorous bracket lo <= mu(G) <= hi.

    lo_exact and hi_exact are the exact rational guarantees; lo and hi are
    the same bounds rounded outward to floats.
    """

    lo_exact: Fraction
    hi_exact: Fraction

    @property
    def lo(self) -> float:
        f = float(self.lo_exact)
        return math.nextafter(f, -math.inf) if Fraction(f) > self.lo_exact else f

    @property
    def hi(self) -> float:
        f = float(self.hi_exact)
        return math.nextafter(f, math.inf) if Fraction(f) < self.hi_exact else f

    @property
    def midpoint(self) -> float:
        return float((self.lo_exact + self.hi_exact) / 2)

    @property
    def width(self) -> Fraction:
        return self.hi_exact - self.lo_exact

    def contains(self, x) -> bool:
        return self.lo_exact <= x <= self.hi_exact

    def power(self, r: int) -> tuple[Fraction, Fraction]:
        """Exact rational bracket of mu^r (mu >= 0 always holds here)."""
        if r < 0:
            raise ValueError("exponent must be nonnegative")
        return self.lo_exact**r, self.hi_exact**r


def _sqrt_upper(f: Fraction, bits: int = 64) -> Fraction:
    """Rational upper bound on sqrt(f), within relative 2**-bits."""
    if f < 0:
        raise ValueError("negative operand")
    if f == 0:
        return Fraction(0)
    a, b = f.numerator, f.denominator
    m = a * b << (2 * bits)
    s = math.isqrt(m)
    if s * s < m:
        s += 1
    return Fraction(s, b << bits)


def _rational_rayleigh(g: Graph, comp: tuple[int, ...], x: np.ndarray) -> Fraction:
    """Exact Rayleigh quotient of the adjacency matrix on component comp
    for the float vector x (indexed by position within comp)."""
    fx = [Fraction(float(v)) for v in x]
    index = {u: i for i, u in enumerate(comp)}
    num = Fraction(0)
    for u in comp:
        xi = fx[index[u]]
        for w in g.neighbors(u):
            if w in index:
                num += xi * fx[index[w]]
    den = sum(v * v for v in fx)
    if den == 0:
        return Fraction(0)
    return num / den


def spectral_radius_certified(
    g: Graph,
    eps: Fraction | float = DEFAULT_CERT_EPS,
    max_rounds: int = 200,
) -> CertifiedInterval:
    """Bracket mu(G) by exact rational bounds with relative width <= eps.

    Lower end: per nontrivial component, shifted power iteration started
    from the degree vector, certified through an exact Rayleigh quotient.
    Upper end: running minimum of the one-step and two-step per-vertex walk
    ratios (square roots taken with outward rational rounding).
    """
    eps = Fraction(eps)
    if eps <= 0:
        raise ValueError(f"eps must be positive, got {eps}")
    if g.edge_count == 0:
        return CertifiedInterval(Fraction(0), Fraction(0))

    comps = [c for c in connected_components(g) if len(c) > 1]
    mats = []
    iterates = []
    for comp in comps:
        sub = induced_subgraph(g, comp)
        a = sub.adjacency_matrix().astype(float)
        x = np.array(sub.degrees, dtype=float)
        mats.append(a)
        iterates.append(x / np.linalg.norm(x))

    wt = WalkTable(g, 3)
    active = [u - 1 for u in g.vertices if g.degree(u) > 0]

    lo = Fraction(0)
    hi: Fraction | None = None
    p = 1
    for _ in range(max_rounds):
        # sharpen the upper end with fresh walk ratios
        for _ in range(2):
            wt.extend(p + 2)
            w_p = wt.per_vertex(p)
            w_p1 = wt.per_vertex(p + 1)
            w_p2 = wt.per_vertex(p + 2)
            one_step = max(Fraction(w_p1[u], w_p[u]) for u in active)
            two_step = _sqrt_upper(max(Fraction(w_p2[u], w_p[u]) for u in active))
            cand = min(one_step, two_step)
            hi = cand if hi is None else min(hi, cand)
            p += 1
        # sharpen the lower end with more power iterations
        for i, (a, x) in enumerate(zip(mats, iterates)):
            for _ in range(12):
                x = a @ x + x
                x /= np.linalg.norm(x)
            iterates[i] = x
        lo = max(lo, max(_rational_rayleigh(g, comp, x)
                         for comp, x in zip(comps, iterates)))
        assert hi is not None
        if lo > hi:  # only possible through a bug in one of the two bounds
            raise EigensolverError(f"certified bounds crossed: {lo} > {hi}")
        if hi - lo <= eps * max(Fraction(1), hi):
            return CertifiedInterval(lo, hi)
    raise EigensolverError(
        f"certified interval did not reach relative width {float(eps):.1e} "
        f"after {max_rounds} rounds; best [{float(lo)}, {float(hi)}]"
    )
