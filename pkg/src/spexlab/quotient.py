"""Equitable partitions, exact integer quotient matrices and characteristic
polynomials, certified real-root isolation, and the six-cell verification
pipeline for the folded-Turán family.

All polynomial work is exact (big integers / rationals); floats only appear in
the final root refinement and in cross-checks against the dense eigensolver.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence, Union

from .graphs import Graph, y_graph, y_graph_layout
from .spectral import spectral_radius
from .structure import Partition


class EquitabilityError(ValueError):
    """A quotient was requested for a non-equitable partition."""

    def __init__(self, cell_i: int, cell_j: int, u: int, v: int, du: int, dv: int):
        super().__init__(
            f"partition not equitable: vertices {u} and {v} of cell {cell_i} "
            f"have {du} vs {dv} neighbours in cell {cell_j}"
        )
        self.cells = (cell_i, cell_j)
        self.vertices = (u, v)


class NoRealRootError(ArithmeticError):
    """largest_root found no real root inside the Cauchy bound."""


# ---------------------------------------------------------------------
# exact integer matrices and polynomials
# ---------------------------------------------------------------------


@dataclass(frozen=True)
class IntMatrix:
    """Square matrix with arbitrary-precision integer entries."""

    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        ell = len(self.entries)
        for row in self.entries:
            if len(row) != ell:
                raise ValueError("matrix must be square")

    @property
    def order(self) -> int:
        return len(self.entries)

    def __getitem__(self, ij: tuple[int, int]) -> int:
        return self.entries[ij[0]][ij[1]]

    @staticmethod
    def of(rows: Sequence[Sequence[int]]) -> "IntMatrix":
        return IntMatrix(tuple(tuple(int(x) for x in row) for row in rows))


@dataclass(frozen=True)
class IntPoly:
    """Univariate polynomial, big-integer coefficients ascending (c0..cd)."""

    coeffs: tuple[int, ...]

    def __post_init__(self):
        if not self.coeffs:
            raise ValueError("coefficient list must be non-empty")
        if len(self.coeffs) > 1 and self.coeffs[-1] == 0:
            raise ValueError("leading coefficient must be nonzero")

    @staticmethod
    def of(coeffs: Sequence[int]) -> "IntPoly":
        cs = [int(c) for c in coeffs]
        while len(cs) > 1 and cs[-1] == 0:
            cs.pop()
        return IntPoly(tuple(cs))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, x: Union[int, Fraction]) -> Union[int, Fraction]:
        acc: Union[int, Fraction] = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def eval_float(self, x: float) -> float:
        acc = 0.0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def sign_at(self, x: Fraction) -> int:
        """Sign of p(x) at a rational point, by pure integer arithmetic."""
        num, den = x.numerator, x.denominator
        d = self.degree
        acc = 0
        for k, c in enumerate(self.coeffs):
            acc += c * num**k * den ** (d - k)
        return (acc > 0) - (acc < 0)

    def derivative(self) -> "IntPoly":
        if self.degree == 0:
            return IntPoly((0,))
        return IntPoly.of([k * c for k, c in enumerate(self.coeffs)][1:])

    def scale(self, factor: int) -> "IntPoly":
        return IntPoly.of([factor * c for c in self.coeffs])

    def to_json_dict(self) -> dict:
        return {"coeffs": [str(c) for c in self.coeffs]}


def char_poly(m: IntMatrix) -> IntPoly:
    """Exact characteristic polynomial det(xI - M), monic, via the
    Faddeev-LeVerrier recurrence (every division is exact over the integers)."""
    ell = m.order
    if ell == 0:
        return IntPoly((1,))
    a = [list(row) for row in m.entries]
    coeffs = [0] * (ell + 1)
    coeffs[ell] = 1
    mk = [row[:] for row in a]
    for k in range(1, ell + 1):
        if k > 1:
            t = [row[:] for row in mk]
            c = coeffs[ell - k + 1]
            for i in range(ell):
                t[i][i] += c
            mk = [
                [sum(a[i][s] * t[s][j] for s in range(ell)) for j in range(ell)]
                for i in range(ell)
            ]
        tr = sum(mk[i][i] for i in range(ell))
        assert tr % k == 0, "Faddeev-LeVerrier division must be exact"
        coeffs[ell - k] = -tr // k
    return IntPoly(tuple(coeffs))


def det_exact(m: IntMatrix) -> int:
    """Exact determinant by Bareiss fraction-free elimination."""
    ell = m.order
    if ell == 0:
        return 1
    a = [list(row) for row in m.entries]
    sign = 1
    prev = 1
    for k in range(ell - 1):
        if a[k][k] == 0:
            for s in range(k + 1, ell):
                if a[s][k] != 0:
                    a[k], a[s] = a[s], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, ell):
            for j in range(k + 1, ell):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return sign * a[ell - 1][ell - 1]


# ---------------------------------------------------------------------
# real roots
# ---------------------------------------------------------------------


def _cauchy_bound(p: IntPoly) -> Fraction:
    lead = abs(p.coeffs[-1])
    mx = max((abs(c) for c in p.coeffs[:-1]), default=0)
    return 1 + Fraction(mx, lead)


def _bisect(p: IntPoly, lo: Fraction, hi: Fraction, width: Fraction) -> Fraction:
    # precondition: sign(p(lo)) * sign(p(hi)) < 0
    slo = p.sign_at(lo)
    while hi - lo > width:
        mid = (lo + hi) / 2
        sm = p.sign_at(mid)
        if sm == 0:
            return mid
        if sm == slo:
            lo = mid
        else:
            hi = mid
    return (lo + hi) / 2


def real_roots(p: IntPoly, width: Fraction = Fraction(1, 10**14)) -> list[Fraction]:
    """All real roots, isolated by recursion on the derivative's roots.

    Between consecutive critical points the polynomial is monotone, so each
    interval holds at most one root, certified by exact sign evaluation.
    """
    d = p.degree
    if d == 0:
        return []
    if d == 1:
        return [Fraction(-p.coeffs[0], p.coeffs[1])]
    bound = _cauchy_bound(p)
    crit = real_roots(p.derivative(), width)
    pts = [-bound] + sorted(c for c in crit if -bound < c < bound) + [bound]
    roots: list[Fraction] = []
    for lo, hi in zip(pts, pts[1:]):
        slo, shi = p.sign_at(lo), p.sign_at(hi)
        if slo == 0:
            if not roots or roots[-1] != lo:
                roots.append(lo)
            continue
        if shi == 0:
            continue  # picked up as the lo endpoint of the next interval
        if slo * shi < 0:
            roots.append(_bisect(p, lo, hi, width))
    if p.sign_at(pts[-1]) == 0:
        roots.append(pts[-1])
    return roots


def largest_root(p: IntPoly, tol: float = 1e-12) -> float:
    """Largest real root: exact bisection to width <= tol, then two Newton steps."""
    if p.degree < 1:
        raise ValueError("polynomial must have degree >= 1")
    width = Fraction(tol).limit_denominator(10**18)
    if width <= 0:
        width = Fraction(1, 10**14)
    roots = real_roots(p, width)
    if not roots:
        raise NoRealRootError("no real root inside the Cauchy bound")
    x = float(max(roots))
    dp = p.derivative()
    for _ in range(2):
        slope = dp.eval_float(x)
        if slope == 0.0:
            break
        x -= p.eval_float(x) / slope
    return x


# ---------------------------------------------------------------------
# equitable refinement and quotient matrices
# ---------------------------------------------------------------------


def equitable_refine(g: Graph, initial: Partition) -> Partition:
    """Coarsest equitable partition refining ``initial`` (colour refinement).

    Cells split by their vector of neighbour counts into the current cells;
    sub-cells are ordered by signature, so the result is deterministic. The
    output is re-verified equitable by a direct row-sum check.
    """
    initial.validate(g.n, allow_empty=False)
    cells = [tuple(sorted(c)) for c in initial.cells]
    while True:
        masks = [sum(1 << v for v in c) for c in cells]
        new_cells = []
        changed = False
        for c in cells:
            sig = {}
            for v in c:
                key = tuple((g.rows[v] & m).bit_count() for m in masks)
                sig.setdefault(key, []).append(v)
            if len(sig) == 1:
                new_cells.append(c)
            else:
                changed = True
                for key in sorted(sig):
                    new_cells.append(tuple(sig[key]))
        cells = new_cells
        if not changed:
            break
    out = Partition(tuple(cells))
    quotient_matrix(g, out)  # direct verification; raises if refinement failed
    return out


def quotient_matrix(g: Graph, partition: Partition) -> IntMatrix:
    """Cell-by-cell neighbour counts; raises EquitabilityError if any count
    varies inside a cell, naming the offending cells and vertices."""
    partition.validate(g.n, allow_empty=False)
    masks = partition.masks()
    ell = partition.r
    rows = []
    for i, cell in enumerate(partition.cells):
        row = []
        for j in range(ell):
            first = cell[0]
            d0 = (g.rows[first] & masks[j]).bit_count()
            for v in cell[1:]:
                dv = (g.rows[v] & masks[j]).bit_count()
                if dv != d0:
                    raise EquitabilityError(i, j, first, v, d0, dv)
            row.append(d0)
        rows.append(tuple(row))
    return IntMatrix(tuple(rows))


def adjacency_int_matrix(g: Graph) -> IntMatrix:
    return IntMatrix.of(
        [[1 if g.has_edge(i, j) else 0 for j in range(g.n)] for i in range(g.n)]
    )


# ---------------------------------------------------------------------
# the six-cell pipeline for the folded-Turán family
# ---------------------------------------------------------------------


def y_graph_quotient_partition(r: int, n: int) -> Partition:
    """The (r+3)-cell partition of y_graph(r, n):
    {v}, {u}, {w}, T1-{v}, T2-{u,w}, then each remaining part.

    For r = 3 this needs n >= 9 so that every cell is non-empty; for r >= 4
    the large part must have at least three vertices.
    """
    lay = y_graph_layout(r, n)
    sizes = [len(b) for b in lay.parts]
    if r == 3 and n < 9:
        raise ValueError("six-cell partition needs n >= 9 for r = 3")
    if sizes[lay.t2] < 3 or sizes[lay.t1] < 2:
        raise ValueError("quotient partition needs a large part of size >= 3")
    t1_rest = tuple(x for x in lay.parts[lay.t1] if x != lay.v)
    t2_rest = tuple(x for x in lay.parts[lay.t2] if x not in (lay.u, lay.w))
    cells = [(lay.v,), (lay.u,), (lay.w,), t1_rest, t2_rest]
    for i, block in enumerate(lay.parts):
        if i not in (lay.t1, lay.t2):
            cells.append(block)
    return Partition(tuple(cells))


def _scaled_coeffs_mod0(n: int) -> list[int]:
    return [
        -135 * n**3 + 1215 * n**2 - 2430 * n,
        162 * n**3 - 1296 * n**2 + 2916 * n - 2916,
        27 * n**3 + 324 * n**2 - 2673 * n + 2187,
        -54 * n**3 + 162 * n**2 - 486 * n,
        -243 * n**2 + 243 * n - 729,
        0,
        729,
    ]


def _scaled_coeffs_mod1(n: int) -> list[int]:
    return [
        -135 * n**3 + 1215 * n**2 - 3240 * n + 2160,
        162 * n**3 - 1296 * n**2 + 3564 * n - 3888,
        27 * n**3 + 324 * n**2 - 2430 * n + 2808,
        -54 * n**3 + 162 * n**2 - 648 * n + 540,
        -243 * n**2 + 243 * n - 729,
        0,
        729,
    ]


def _scaled_coeffs_mod2(n: int) -> list[int]:
    return [
        -135 * n**3 + 1215 * n**2 - 2025 * n - 3375,
        162 * n**3 - 1296 * n**2 + 2754 * n - 1620,
        27 * n**3 + 324 * n**2 - 2835 * n + 2700,
        -54 * n**3 + 162 * n**2 - 486 * n - 702,
        -243 * n**2 + 243 * n - 972,
        0,
        729,
    ]


def lemma32_polynomial(n: int) -> IntPoly:
    """729-scaled closed-form characteristic polynomial of the six-cell
    quotient of y_graph(3, n); the branch is selected by n mod 3."""
    if n < 6:
        raise ValueError("need n >= 6")
    branch = {0: _scaled_coeffs_mod0, 1: _scaled_coeffs_mod1, 2: _scaled_coeffs_mod2}
    return IntPoly(tuple(branch[n % 3](n)))


def y_spectral_lower_bound(r: int, n: int) -> float:
    """The closed-form strict lower bound claimed for rho(y_graph(r, n))."""
    if r == 3:
        return 2.0 * n / 3.0 - 7.0 / 12.0
    return (1.0 - 1.0 / r) * n - 2.0 / r - r / (4.0 * n)


@dataclass(frozen=True)
class Lemma32Report:
    n: int
    poly_match: bool
    mismatch_index: Optional[int]
    sign_ok: bool
    rho_quotient: float
    rho_dense: float
    rho_agree: bool
    above_lower_bound: bool
    scaled_polynomial: IntPoly

    @property
    def ok(self) -> bool:
        return self.poly_match and self.sign_ok and self.rho_agree and self.above_lower_bound

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "poly_match": self.poly_match,
            "mismatch_index": self.mismatch_index,
            "sign_ok": self.sign_ok,
            "rho_quotient": self.rho_quotient,
            "rho_dense": self.rho_dense,
            "rho_agree": self.rho_agree,
            "above_lower_bound": self.above_lower_bound,
            "scaled_polynomial": self.scaled_polynomial.to_json_dict(),
            "pass": self.ok,
        }


def verify_lemma32(n: int, tol: float = 1e-8) -> Lemma32Report:
    """Full cross-check at one n: exact coefficient match of the six-cell
    quotient characteristic polynomial against the closed form, integer-exact
    negativity at x = 2n/3 - 7/12, and agreement of the largest quotient root
    with the dense spectral radius of y_graph(3, n)."""
    if n < 9:
        raise ValueError("need n >= 9")
    g = y_graph(3, n)
    part = y_graph_quotient_partition(3, n)
    computed = char_poly(quotient_matrix(g, part)).scale(729)
    closed = lemma32_polynomial(n)
    mismatch = None
    if computed.coeffs != closed.coeffs:
        for idx, (a, b) in enumerate(zip(computed.coeffs, closed.coeffs)):
            if a != b:
                mismatch = idx
                break
        else:
            mismatch = min(len(computed.coeffs), len(closed.coeffs))
    sign_ok = closed.sign_at(Fraction(2 * n, 3) - Fraction(7, 12)) < 0
    rho_q = largest_root(closed)
    rho_d = spectral_radius(g).rho
    return Lemma32Report(
        n=n,
        poly_match=mismatch is None,
        mismatch_index=mismatch,
        sign_ok=sign_ok,
        rho_quotient=rho_q,
        rho_dense=rho_d,
        rho_agree=abs(rho_q - rho_d) <= tol,
        above_lower_bound=rho_d > y_spectral_lower_bound(3, n),
        scaled_polynomial=closed,
    )


@dataclass(frozen=True)
class QuotientCrossCheck:
    r: int
    n: int
    rho_quotient: float
    rho_dense: float
    rho_agree: bool
    above_lower_bound: bool


def y_quotient_cross_check(r: int, n: int, tol: float = 1e-8) -> QuotientCrossCheck:
    """Generic pipeline for any r: quotient largest root vs dense radius of
    y_graph(r, n), plus the closed-form lower bound (no coefficient oracle)."""
    g = y_graph(r, n)
    part = y_graph_quotient_partition(r, n)
    p = char_poly(quotient_matrix(g, part))
    rho_q = largest_root(p)
    rho_d = spectral_radius(g).rho
    return QuotientCrossCheck(
        r=r,
        n=n,
        rho_quotient=rho_q,
        rho_dense=rho_d,
        rho_agree=abs(rho_q - rho_d) <= tol,
        above_lower_bound=rho_d > y_spectral_lower_bound(r, n),
    )
