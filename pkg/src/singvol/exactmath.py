"""Exact rational arithmetic, linear algebra, linear programming and
low-dimensional polytope volumes.

Everything in this package computes over ``fractions.Fraction``; no floating
point is used anywhere.  The linear programming solver is a dense two-phase
simplex with Bland's anti-cycling rule.  It always returns a certificate:
an optimal point, an unbounded improving ray, or a Farkas combination
witnessing infeasibility.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .errors import DomainError, InputError, UnsupportedDimensionError

Vec = tuple[Fraction, ...]
Mat = tuple[Vec, ...]

_RATIONAL_RE = re.compile(r"^[+-]?\d+(/[1-9]\d*)?$")


def parse_rational(text) -> Fraction:
    """Parse the wire format for rationals: "p" or "p/q" with q > 0."""
    if isinstance(text, int):
        return Fraction(text)
    if isinstance(text, Fraction):
        return text
    if not isinstance(text, str) or not _RATIONAL_RE.match(text):
        raise InputError(f"not a rational in p/q form: {text!r}")
    return Fraction(text)


def format_rational(x: Fraction) -> str:
    """Canonical string form: lowest terms, positive denominator."""
    return str(Fraction(x))


def as_vector(entries) -> Vec:
    return tuple(Fraction(e) for e in entries)


def as_matrix(rows) -> Mat:
    mat = tuple(as_vector(r) for r in rows)
    if mat and any(len(r) != len(mat[0]) for r in mat):
        raise InputError("matrix rows have inconsistent lengths")
    return mat


def dot(u, v) -> Fraction:
    if len(u) != len(v):
        raise InputError(f"dimension mismatch: {len(u)} vs {len(v)}")
    return sum((Fraction(a) * Fraction(b) for a, b in zip(u, v)), Fraction(0))


def mat_vec(m: Mat, v) -> Vec:
    return tuple(dot(row, v) for row in m)


def vec_add(u, v) -> Vec:
    if len(u) != len(v):
        raise InputError("dimension mismatch in vector sum")
    return tuple(Fraction(a) + Fraction(b) for a, b in zip(u, v))


def vec_sub(u, v) -> Vec:
    if len(u) != len(v):
        raise InputError("dimension mismatch in vector difference")
    return tuple(Fraction(a) - Fraction(b) for a, b in zip(u, v))


def vec_scale(c, v) -> Vec:
    c = Fraction(c)
    return tuple(c * Fraction(x) for x in v)


def primitive_vector(v) -> tuple[int, ...]:
    """Divide an integer vector by the gcd of its entries (orientation kept)."""
    ints = tuple(int(x) for x in v)
    if any(Fraction(x) != i for x, i in zip(v, ints)):
        raise InputError(f"not an integer vector: {v}")
    g = 0
    for x in ints:
        g = gcd(g, abs(x))
    if g == 0:
        raise InputError("cannot reduce the zero vector to a primitive one")
    return tuple(x // g for x in ints)


def scale_to_primitive_integer(v) -> tuple[int, ...]:
    """Scale a rational vector by a positive factor to a primitive integer one."""
    fracs = [Fraction(x) for x in v]
    denom = 1
    for x in fracs:
        denom = denom * x.denominator // gcd(denom, x.denominator)
    return primitive_vector([x * denom for x in fracs])


def determinant(m: Mat) -> Fraction:
    m = as_matrix(m)
    k = len(m)
    if k == 0:
        return Fraction(1)
    if any(len(row) != k for row in m):
        raise InputError("determinant requires a square matrix")
    rows = [list(r) for r in m]
    det = Fraction(1)
    for col in range(k):
        pivot = next((r for r in range(col, k) if rows[r][col] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            rows[col], rows[pivot] = rows[pivot], rows[col]
            det = -det
        det *= rows[col][col]
        inv = Fraction(1) / rows[col][col]
        for r in range(col + 1, k):
            factor = rows[r][col] * inv
            if factor:
                for c in range(col, k):
                    rows[r][c] -= factor * rows[col][c]
    return det


def matrix_rank(m) -> int:
    rows = [list(as_vector(r)) for r in m]
    if not rows:
        return 0
    ncols = len(rows[0])
    rank = 0
    for col in range(ncols):
        pivot = next((r for r in range(rank, len(rows)) if rows[r][col] != 0), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        inv = Fraction(1) / rows[rank][col]
        for r in range(len(rows)):
            if r != rank and rows[r][col] != 0:
                factor = rows[r][col] * inv
                for c in range(ncols):
                    rows[r][c] -= factor * rows[rank][c]
        rank += 1
        if rank == len(rows):
            break
    return rank


def solve_linear(m: Mat, b) -> Vec:
    """Solve Mx = b exactly for square nonsingular M."""
    m = as_matrix(m)
    b = as_vector(b)
    k = len(m)
    if k == 0 or any(len(row) != k for row in m):
        raise InputError("solve_linear requires a square matrix")
    if len(b) != k:
        raise InputError("right-hand side length does not match the matrix")
    rows = [list(r) + [bv] for r, bv in zip(m, b)]
    for col in range(k):
        pivot = next((r for r in range(col, k) if rows[r][col] != 0), None)
        if pivot is None:
            raise DomainError("singular matrix in solve_linear")
        rows[col], rows[pivot] = rows[pivot], rows[col]
        inv = Fraction(1) / rows[col][col]
        rows[col] = [x * inv for x in rows[col]]
        for r in range(k):
            if r != col and rows[r][col] != 0:
                factor = rows[r][col]
                rows[r] = [x - factor * y for x, y in zip(rows[r], rows[col])]
    return tuple(rows[i][k] for i in range(k))


def solve_general(a, b):
    """Solve a (possibly overdetermined) system A x = b.

    Returns ``(solution, None)`` with one exact solution when the system is
    consistent, or ``(None, lam)`` where ``lam`` certifies inconsistency:
    lam @ A = 0 while lam @ b != 0.
    """
    a = as_matrix(a)
    b = as_vector(b)
    nrows = len(a)
    if nrows == 0:
        return (), None
    ncols = len(a[0])
    if len(b) != nrows:
        raise InputError("right-hand side length does not match the matrix")
    # Augment with b and an identity block recording the row operations.
    rows = [
        list(a[i]) + [b[i]] + [Fraction(int(i == j)) for j in range(nrows)]
        for i in range(nrows)
    ]
    pivots = []
    rank = 0
    for col in range(ncols):
        pivot = next((r for r in range(rank, nrows) if rows[r][col] != 0), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        inv = Fraction(1) / rows[rank][col]
        rows[rank] = [x * inv for x in rows[rank]]
        for r in range(nrows):
            if r != rank and rows[r][col] != 0:
                factor = rows[r][col]
                rows[r] = [x - factor * y for x, y in zip(rows[r], rows[rank])]
        pivots.append(col)
        rank += 1
    for r in range(rank, nrows):
        if rows[r][ncols] != 0:
            lam = tuple(rows[r][ncols + 1:])
            return None, lam
    solution = [Fraction(0)] * ncols
    for r, col in enumerate(pivots):
        solution[col] = rows[r][ncols]
    return tuple(solution), None


def is_negative_definite(m: Mat) -> bool:
    """Sylvester test: (-1)^k times the k-th leading principal minor is > 0."""
    m = as_matrix(m)
    k = len(m)
    if k == 0 or any(len(row) != k for row in m):
        raise InputError("negative-definiteness requires a square matrix")
    for i in range(k):
        for j in range(i + 1, k):
            if m[i][j] != m[j][i]:
                raise InputError("negative-definiteness requires a symmetric matrix")
    for size in range(1, k + 1):
        minor = determinant(tuple(row[:size] for row in m[:size]))
        if (-1) ** size * minor <= 0:
            return False
    return True


def failing_principal_minor(m: Mat):
    """Index (1-based) and value of the first leading minor violating
    negative definiteness, or None when the matrix is negative definite."""
    m = as_matrix(m)
    for size in range(1, len(m) + 1):
        minor = determinant(tuple(row[:size] for row in m[:size]))
        if (-1) ** size * minor <= 0:
            return size, minor
    return None


# ---------------------------------------------------------------------------
# Linear programming
# ---------------------------------------------------------------------------

OPTIMAL = "optimal"
UNBOUNDED = "unbounded"
INFEASIBLE = "infeasible"


@dataclass(frozen=True)
class LPProblem:
    """Maximize <objective, x> subject to <normal_i, x> <= bound_i, x free."""

    objective: Vec
    constraints: tuple[tuple[Vec, Fraction], ...]

    def __post_init__(self):
        obj = as_vector(self.objective)
        cons = tuple((as_vector(n), Fraction(b)) for n, b in self.constraints)
        object.__setattr__(self, "objective", obj)
        object.__setattr__(self, "constraints", cons)
        if not obj:
            raise InputError("LP objective must have positive dimension")
        for normal, _ in cons:
            if len(normal) != len(obj):
                raise InputError(
                    f"constraint dimension {len(normal)} does not match "
                    f"objective dimension {len(obj)}"
                )


@dataclass(frozen=True)
class LPOutcome:
    """Result of lp_max with an exact certificate for each status."""

    status: str
    value: Fraction | None = None
    point: Vec | None = None
    ray: Vec | None = None
    farkas: Vec | None = None


class _Tableau:
    """Dense simplex tableau over Fraction with Bland's rule."""

    def __init__(self, rows, rhs, basis, ncols):
        self.rows = rows
        self.rhs = rhs
        self.basis = basis
        self.ncols = ncols
        self.obj = [Fraction(0)] * ncols
        self.obj_val = Fraction(0)

    def set_objective(self, costs):
        self.obj = list(costs)
        self.obj_val = Fraction(0)
        for k, j in enumerate(self.basis):
            cb = costs[j]
            if cb:
                row = self.rows[k]
                for c in range(self.ncols):
                    self.obj[c] -= cb * row[c]
                self.obj_val += cb * self.rhs[k]

    def pivot(self, k, j):
        row = self.rows[k]
        inv = Fraction(1) / row[j]
        if inv != 1:
            self.rows[k] = row = [x * inv for x in row]
            self.rhs[k] *= inv
        for r in range(len(self.rows)):
            if r != k and self.rows[r][j]:
                factor = self.rows[r][j]
                other = self.rows[r]
                self.rows[r] = [x - factor * y for x, y in zip(other, row)]
                self.rhs[r] -= factor * self.rhs[k]
        if self.obj[j]:
            factor = self.obj[j]
            self.obj = [x - factor * y for x, y in zip(self.obj, row)]
            self.obj_val += factor * self.rhs[k]
        self.basis[k] = j

    def run(self, eligible):
        """Bland-rule simplex; returns ("optimal", None) or ("unbounded", j)."""
        while True:
            enter = next(
                (j for j in range(self.ncols) if eligible[j] and self.obj[j] > 0),
                None,
            )
            if enter is None:
                return OPTIMAL, None
            leave = None
            best = None
            for k in range(len(self.rows)):
                a = self.rows[k][enter]
                if a > 0:
                    t = self.rhs[k] / a
                    if best is None or t < best or (
                        t == best and self.basis[k] < self.basis[leave]
                    ):
                        best = t
                        leave = k
            if leave is None:
                return UNBOUNDED, enter
            self.pivot(leave, enter)


def lp_max(problem: LPProblem) -> LPOutcome:
    """Exact maximization over {x : <normal_i, x> <= bound_i} with free x.

    Internally splits x into a difference of nonnegative variables, adds
    slacks and artificials, and runs a two-phase simplex.  Deterministic:
    Bland's rule with a fixed column order.
    """
    n = len(problem.objective)
    m = len(problem.constraints)
    normals = [c[0] for c in problem.constraints]
    bounds = [c[1] for c in problem.constraints]

    ncols = 2 * n + 2 * m
    slack0 = 2 * n
    art0 = 2 * n + m
    rows = []
    rhs = []
    flips = []
    for i in range(m):
        row = [Fraction(0)] * ncols
        for j in range(n):
            row[j] = Fraction(normals[i][j])
            row[n + j] = -Fraction(normals[i][j])
        row[slack0 + i] = Fraction(1)
        b = Fraction(bounds[i])
        flip = b < 0
        if flip:
            row = [-x for x in row]
            b = -b
        row[art0 + i] = Fraction(1)
        rows.append(row)
        rhs.append(b)
        flips.append(flip)

    tab = _Tableau(rows, rhs, list(range(art0, art0 + m)), ncols)

    # Phase 1: maximize minus the sum of artificials.
    phase1 = [Fraction(0)] * ncols
    for i in range(m):
        phase1[art0 + i] = Fraction(-1)
    tab.set_objective(phase1)
    status, _ = tab.run([True] * ncols)
    assert status == OPTIMAL
    if tab.obj_val != 0:
        # Farkas certificate from the simplex multipliers of phase 1.
        y_dual = []
        for i in range(m):
            yi = Fraction(0)
            for k, bj in enumerate(tab.basis):
                if phase1[bj]:
                    yi += phase1[bj] * tab.rows[k][art0 + i]
            y_dual.append(yi)
        farkas = tuple(-y if flip else y for y, flip in zip(y_dual, flips))
        assert all(y >= 0 for y in farkas)
        combo = [Fraction(0)] * n
        for y, normal in zip(farkas, normals):
            for j in range(n):
                combo[j] += y * normal[j]
        assert all(c == 0 for c in combo)
        assert sum(y * b for y, b in zip(farkas, bounds)) < 0
        return LPOutcome(status=INFEASIBLE, farkas=farkas)

    # Drive basic artificials out, dropping redundant rows.
    keep = []
    for k in range(len(tab.rows)):
        if tab.basis[k] >= art0:
            j = next(
                (c for c in range(art0) if tab.rows[k][c] != 0),
                None,
            )
            if j is None:
                continue  # redundant constraint row
            tab.pivot(k, j)
        keep.append(k)
    tab.rows = [tab.rows[k] for k in keep]
    tab.rhs = [tab.rhs[k] for k in keep]
    tab.basis = [tab.basis[k] for k in keep]

    # Phase 2: the real objective on x = u - w.
    phase2 = [Fraction(0)] * ncols
    for j in range(n):
        phase2[j] = Fraction(problem.objective[j])
        phase2[n + j] = -Fraction(problem.objective[j])
    tab.set_objective(phase2)
    eligible = [c < art0 for c in range(ncols)]
    status, enter = tab.run(eligible)

    def current_point() -> Vec:
        uw = [Fraction(0)] * (2 * n)
        for k, j in enumerate(tab.basis):
            if j < 2 * n:
                uw[j] = tab.rhs[k]
        return tuple(uw[j] - uw[n + j] for j in range(n))

    if status == UNBOUNDED:
        direction = [Fraction(0)] * ncols
        direction[enter] = Fraction(1)
        for k, j in enumerate(tab.basis):
            direction[j] = -tab.rows[k][enter]
        ray = tuple(direction[j] - direction[n + j] for j in range(n))
        assert all(dot(normal, ray) <= 0 for normal in normals)
        assert dot(problem.objective, ray) > 0
        return LPOutcome(status=UNBOUNDED, ray=ray, point=current_point())

    point = current_point()
    value = dot(problem.objective, point)
    assert value == tab.obj_val
    for normal, bound in problem.constraints:
        assert dot(normal, point) <= bound
    return LPOutcome(status=OPTIMAL, value=value, point=point)


# ---------------------------------------------------------------------------
# Convex hulls and volumes in dimension <= 3
# ---------------------------------------------------------------------------


def _cross2(o, a, b) -> Fraction:
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def convex_hull_2d(points) -> list:
    """Andrew's monotone chain over exact rationals; returns the hull in
    counter-clockwise order without collinear interior points."""
    pts = sorted(set(tuple(Fraction(c) for c in p) for p in points))
    if len(pts) <= 2:
        return pts
    lower = []
    for p in pts:
        while len(lower) >= 2 and _cross2(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    upper = []
    for p in reversed(pts):
        while len(upper) >= 2 and _cross2(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    return lower[:-1] + upper[:-1]


def cross3(u, v) -> Vec:
    return (
        u[1] * v[2] - u[2] * v[1],
        u[2] * v[0] - u[0] * v[2],
        u[0] * v[1] - u[1] * v[0],
    )


def det3(a, b, c) -> Fraction:
    return dot(a, cross3(b, c))


def hull_facets_3d(points):
    """Facets of the convex hull of full-dimensional ``points``.

    Returns a list of (outward primitive integer normal, offset, vertex cycle)
    with each vertex cycle ordered around the facet polygon.
    """
    pts = sorted(set(tuple(Fraction(c) for c in p) for p in points))
    facets = {}
    for p1, p2, p3 in itertools.combinations(pts, 3):
        normal = cross3(vec_sub(p2, p1), vec_sub(p3, p1))
        if normal == (0, 0, 0):
            continue
        sides = [dot(vec_sub(q, p1), normal) for q in pts]
        if all(s <= 0 for s in sides):
            outward = normal
        elif all(s >= 0 for s in sides):
            outward = vec_scale(-1, normal)
        else:
            continue
        key_normal = scale_to_primitive_integer(outward)
        offset = dot(p1, key_normal)
        on_plane = frozenset(q for q in pts if dot(q, key_normal) == offset)
        facets[(key_normal, offset)] = on_plane
    result = []
    for (normal, offset), plane_pts in sorted(facets.items()):
        result.append((normal, offset, order_coplanar_polygon(plane_pts, normal)))
    return result


def order_coplanar_polygon(points, normal) -> list:
    """Order coplanar 3D points along their convex polygon boundary."""
    drop = max(range(3), key=lambda j: abs(normal[j]))
    keep = [j for j in range(3) if j != drop]
    projected = {}
    for p in points:
        projected[(p[keep[0]], p[keep[1]])] = p
    hull = convex_hull_2d(projected.keys())
    return [projected[q] for q in hull]


def polytope_volume(vertices, dim: int) -> Fraction:
    """Exact Euclidean volume of the convex hull of ``vertices``.

    Supported in ambient dimension 1, 2 and 3; degenerate hulls have
    volume 0.  The 3D computation enumerates hull facets exactly and sums
    tetrahedra of a fan from the vertex centroid.
    """
    if dim > 3:
        raise UnsupportedDimensionError(
            f"polytope volumes are only computed for dimension <= 3, got {dim}"
        )
    if dim < 1:
        raise InputError("dimension must be at least 1")
    pts = sorted(set(tuple(Fraction(c) for c in p) for p in vertices))
    if not pts:
        raise InputError("empty vertex list")
    if any(len(p) != dim for p in pts):
        raise InputError("vertex does not match the stated dimension")

    if dim == 1:
        return pts[-1][0] - pts[0][0]

    if dim == 2:
        hull = convex_hull_2d(pts)
        if len(hull) < 3:
            return Fraction(0)
        area2 = Fraction(0)
        for i in range(len(hull)):
            x1, y1 = hull[i]
            x2, y2 = hull[(i + 1) % len(hull)]
            area2 += x1 * y2 - x2 * y1
        return abs(area2) / 2

    if matrix_rank([vec_sub(p, pts[0]) for p in pts[1:]]) < 3:
        return Fraction(0)
    centroid = vec_scale(Fraction(1, len(pts)), [sum(col) for col in zip(*pts)])
    total = Fraction(0)
    for _, _, cycle in hull_facets_3d(pts):
        base = vec_sub(cycle[0], centroid)
        for t in range(1, len(cycle) - 1):
            total += abs(
                det3(base, vec_sub(cycle[t], centroid), vec_sub(cycle[t + 1], centroid))
            )
    return total / 6
