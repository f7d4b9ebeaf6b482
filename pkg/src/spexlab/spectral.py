"""Spectral radius by shifted power iteration, plus the classical spectral bounds.

The eigensolver iterates on A + I: adding the identity makes the top adjacency
eigenvalue strictly dominant in magnitude even on bipartite graphs (whose
spectra are symmetric about 0), so the iteration converges on every connected
graph. Disconnected input is solved per component and the maximum reported.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from .graphs import Graph, bits

DEFAULT_TOL = 1e-10
DEFAULT_MAX_ITER = 1_000_000


class ConvergenceError(RuntimeError):
    """Power iteration ran out of budget; carries the last residual."""

    def __init__(self, residual: float, iterations: int):
        super().__init__(
            f"power iteration did not converge in {iterations} iterations "
            f"(last residual {residual:.3e})"
        )
        self.residual = residual
        self.iterations = iterations


@dataclass(frozen=True)
class SpectralResult:
    """Spectral radius estimate with its Perron vector (unit max-norm)."""

    rho: float
    vector: tuple[float, ...]
    residual: float
    iterations: int
    disconnected: bool = False


def adjacency_matrix(g: Graph) -> np.ndarray:
    a = np.zeros((g.n, g.n))
    for i in range(g.n):
        for j in bits(g.rows[i]):
            a[i, j] = 1.0
    return a


def _power_iterate_dense(a: np.ndarray, tol: float, max_iter: int, seed: int):
    n = a.shape[0]
    rng = np.random.default_rng(seed)
    x = 1.0 + 1e-8 * rng.random(n)
    x /= x.max()
    rho = 0.0
    res = math.inf
    for it in range(1, max_iter + 1):
        ax = a @ x
        rho = float(x @ ax) / float(x @ x)
        res = float(np.abs(ax - rho * x).max())
        if res <= tol:
            return rho, x, res, it
        y = ax + x  # one step of A + I
        x = y / y.max()
    raise ConvergenceError(res, max_iter)


def _power_iterate_fsum(g: Graph, verts: Sequence[int], tol: float, max_iter: int, seed: int):
    """Pure-Python iteration with exactly rounded row sums (math.fsum)."""
    idx = {v: k for k, v in enumerate(verts)}
    nbrs = [[idx[w] for w in bits(g.rows[v]) if w in idx] for v in verts]
    n = len(verts)
    rng = np.random.default_rng(seed)
    x = [1.0 + 1e-8 * t for t in rng.random(n)]
    mx = max(x)
    x = [t / mx for t in x]
    rho = 0.0
    res = math.inf
    for it in range(1, max_iter + 1):
        ax = [math.fsum(x[j] for j in nbrs[i]) for i in range(n)]
        num = math.fsum(x[i] * ax[i] for i in range(n))
        den = math.fsum(t * t for t in x)
        rho = num / den
        res = max(abs(ax[i] - rho * x[i]) for i in range(n))
        if res <= tol:
            return rho, np.array(x), res, it
        y = [ax[i] + x[i] for i in range(n)]
        mx = max(y)
        x = [t / mx for t in y]
    raise ConvergenceError(res, max_iter)


def spectral_radius(
    g: Graph,
    tol: float = DEFAULT_TOL,
    max_iter: int = DEFAULT_MAX_ITER,
    seed: int = 0,
    precise: bool = False,
) -> SpectralResult:
    """Largest adjacency eigenvalue of g with |A x - rho x|_inf <= tol.

    ``precise`` switches to exactly rounded (fsum) accumulation, intended for
    re-checking near-ties at tol around 1e-13 on small graphs.
    """
    if g.n < 1:
        raise ValueError("spectral radius needs at least one vertex")
    if tol <= 0:
        raise ValueError("tol must be positive")
    comps = g.components()
    best: Optional[tuple[float, Sequence[int], np.ndarray, float, int]] = None
    for comp in comps:
        if len(comp) == 1 or all(g.rows[v] == 0 for v in comp):
            rho, vec, res, its = 0.0, np.ones(len(comp)), 0.0, 0
        elif precise:
            rho, vec, res, its = _power_iterate_fsum(g, comp, tol, max_iter, seed)
        else:
            a = adjacency_matrix(g.induced(comp))
            rho, vec, res, its = _power_iterate_dense(a, tol, max_iter, seed)
        if best is None or rho > best[0]:
            best = (rho, comp, vec, res, its)
    rho, comp, vec, res, its = best
    full = [0.0] * g.n
    top = float(np.max(vec))
    for k, v in enumerate(comp):
        full[v] = float(vec[k]) / top
    return SpectralResult(
        rho=rho,
        vector=tuple(full),
        residual=res,
        iterations=its,
        disconnected=len(comps) > 1,
    )


def rayleigh_quotient(g: Graph, x: Sequence[float]) -> float:
    """(2 * sum_{uv in E} x_u x_v) / sum_v x_v^2; never exceeds rho(g)."""
    if len(x) != g.n:
        raise ValueError("vector length must equal the vertex count")
    den = math.fsum(t * t for t in x)
    if den == 0.0:
        raise ValueError("vector must not be all zeros")
    num = math.fsum(2.0 * x[i] * x[j] for i, j in g.edges())
    return num / den


@dataclass(frozen=True)
class WilfReport:
    bound: float
    rho: float
    holds: bool


def check_wilf(g: Graph, r: int, tol: float = 1e-9) -> WilfReport:
    """Compare rho(g) against (1 - 1/r) n; caller guarantees no (r+1)-clique."""
    if r < 1:
        raise ValueError("need r >= 1")
    bound = (1.0 - 1.0 / r) * g.n
    rho = spectral_radius(g).rho
    return WilfReport(bound=bound, rho=rho, holds=rho <= bound + tol)


@dataclass(frozen=True)
class DeletionBoundReport:
    lhs: float
    rhs: float
    holds: bool
    equality: bool


def deletion_bound(g: Graph, v: int, tol: float = 1e-8) -> DeletionBoundReport:
    """rho(G) vs sqrt(rho(G - v)^2 + 2 d(v) - 1), with the equality cases flagged."""
    d = g.degree(v)
    if d < 1:
        raise ValueError("vertex must have degree at least 1")
    lhs = spectral_radius(g).rho
    rho_del = spectral_radius(g.delete_vertex(v)).rho if g.n > 1 else 0.0
    rhs = math.sqrt(rho_del * rho_del + 2.0 * d - 1.0)
    return DeletionBoundReport(
        lhs=lhs,
        rhs=rhs,
        holds=lhs <= rhs + tol,
        equality=abs(lhs - rhs) <= tol,
    )


def rotate_edges(g: Graph, u: int, v: int, s: Sequence[int]) -> Graph:
    """Move the edges from v into u: G - {vw : w in S} + {uw : w in S}.

    Requires S nonempty and S contained in N(v) minus the closed neighbourhood
    of u. When additionally x_u >= x_v for the Perron vector of a connected
    graph, the move strictly increases the spectral radius.
    """
    sset = set(s)
    if not sset:
        raise ValueError("S must be non-empty")
    nv = g.rows[v]
    closed_u = g.rows[u] | (1 << u)
    for w in sset:
        if not (nv >> w) & 1:
            raise ValueError(f"vertex {w} is not a neighbour of {v}")
        if (closed_u >> w) & 1:
            raise ValueError(f"vertex {w} lies in the closed neighbourhood of {u}")
    out = g
    for w in sorted(sset):
        out = out.remove_edge(v, w).add_edge(u, w)
    return out
