"""Affine toric singularities given by rational cones.

A strongly convex full-dimensional cone sigma in Z^n carries an isolated
torus-fixed point.  This module computes, exactly over the rationals:

* nef envelopes of toric Weil divisors, as linear programs on the dual
  lattice (the envelope of D at a valuation v in sigma is the maximum of
  <m, v> over all linear forms m with <m, ray_i> <= d_i);
* the numerically-Cartier test with a linear-form certificate or an
  interior witness where the envelope sum goes negative;
* monomial ideals: orders along valuations, Samuel and mixed
  multiplicities via exact Newton-region covolumes, products, powers,
  Hilbert bases and maximal ideals;
* defect ideals of Weil divisors, via minimal module generators of the
  section modules found by exact lattice search;
* Izumi comparison constants between interior valuations;
* the log-discrepancy function, whose nonnegativity certifies that the
  toric volume vanishes.

Conventions.  Rays of sigma live in N = Z^n, exponents and linear forms in
the dual lattice M.  A divisor D = sum d_i D_i is recorded by the vector of
its coefficients at the rays, so a Cartier divisor with support function m
has d_i = <m, ray_i>.  Sections of O(D) are the lattice points u with
<u, ray_i> >= -d_i.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import ceil, floor, gcd

from .errors import DomainError, InputError, UnsupportedDimensionError
from . import exactmath as xm
from .exactmath import LPProblem, lp_max, OPTIMAL


def _as_lattice_vector(v, dim) -> tuple[int, ...]:
    vec = tuple(int(x) for x in v)
    if len(vec) != dim:
        raise InputError(f"lattice vector {v} does not have dimension {dim}")
    if any(Fraction(x) != i for x, i in zip(v, vec)):
        raise InputError(f"not an integer vector: {v}")
    return vec


def _idot(u, v) -> int:
    return sum(a * b for a, b in zip(u, v))


def _kernel_vector(rows, dim):
    """A nonzero rational kernel vector of a rank-(dim-1) system, else None."""
    mat = [list(Fraction(x) for x in row) for row in rows]
    pivots = []
    rank = 0
    for col in range(dim):
        pivot = next((r for r in range(rank, len(mat)) if mat[r][col] != 0), None)
        if pivot is None:
            continue
        mat[rank], mat[pivot] = mat[pivot], mat[rank]
        inv = Fraction(1) / mat[rank][col]
        mat[rank] = [x * inv for x in mat[rank]]
        for r in range(len(mat)):
            if r != rank and mat[r][col] != 0:
                factor = mat[r][col]
                mat[r] = [x - factor * y for x, y in zip(mat[r], mat[rank])]
        pivots.append(col)
        rank += 1
    if rank != dim - 1:
        return None
    free = next(c for c in range(dim) if c not in pivots)
    vec = [Fraction(0)] * dim
    vec[free] = Fraction(1)
    for r, col in enumerate(pivots):
        vec[col] = -mat[r][free]
    return vec


class ToricCone:
    """A strongly convex full-dimensional rational cone with primitive rays.

    The constructor derives the inward facet normals (the H-representation)
    and checks that every listed ray is extreme.  For dimension <= 3 it also
    checks that every proper face is smooth, which is exactly the condition
    for the toric variety to have an isolated singularity; in higher
    dimension the check is skipped and ``isolated_checked`` is False.
    """

    def __init__(self, rays, dim=None):
        rays = list(rays)
        if not rays:
            raise InputError("a cone needs at least one ray")
        if dim is None:
            dim = len(rays[0])
        self.dim = int(dim)
        if self.dim < 1:
            raise InputError("cone dimension must be at least 1")
        seen = set()
        prim_rays = []
        for ray in rays:
            vec = _as_lattice_vector(ray, self.dim)
            if all(x == 0 for x in vec):
                raise InputError("the zero vector cannot be a ray")
            g = 0
            for x in vec:
                g = gcd(g, abs(x))
            if g != 1:
                reduced = tuple(x // g for x in vec)
                raise InputError(
                    f"ray {vec} is not primitive; divide by gcd {g} to get {reduced}"
                )
            if vec in seen:
                raise InputError(f"duplicate ray {vec}")
            seen.add(vec)
            prim_rays.append(vec)
        self.rays = tuple(prim_rays)

        if xm.matrix_rank(self.rays) != self.dim:
            raise DomainError("cone is not full-dimensional: rays do not span")

        self.facet_normals = self._compute_facet_normals()
        if xm.matrix_rank(self.facet_normals) != self.dim:
            raise DomainError("cone is not strongly convex: it contains a line")

        for ray in self.rays:
            tight = [f for f in self.facet_normals if _idot(f, ray) == 0]
            if xm.matrix_rank(tight) != self.dim - 1:
                raise DomainError(
                    f"ray {ray} is not an extreme ray of the cone spanned by the input"
                )

        self.isolated_checked = self.dim <= 3
        if self.dim == 3:
            self._check_smooth_facets()

    def _compute_facet_normals(self):
        if self.dim == 1:
            if len(self.rays) != 1:
                raise DomainError(
                    "a one-dimensional strongly convex cone has exactly one ray"
                )
            return (self.rays[0],)
        normals = set()
        for subset in itertools.combinations(self.rays, self.dim - 1):
            if xm.matrix_rank(subset) != self.dim - 1:
                continue
            kernel = _kernel_vector(subset, self.dim)
            if kernel is None:
                continue
            normal = xm.scale_to_primitive_integer(kernel)
            sides = [_idot(normal, ray) for ray in self.rays]
            if all(s >= 0 for s in sides):
                candidate = normal
            elif all(s <= 0 for s in sides):
                candidate = tuple(-x for x in normal)
            else:
                continue
            tight = [r for r in self.rays if _idot(candidate, r) == 0]
            if xm.matrix_rank(tight) == self.dim - 1:
                normals.add(candidate)
        return tuple(sorted(normals))

    def _check_smooth_facets(self):
        for normal in self.facet_normals:
            tight = [r for r in self.rays if _idot(normal, r) == 0]
            if len(tight) != 2:
                raise DomainError(f"facet with normal {normal} is not simplicial")
            u, v = tight
            minors = [
                u[i] * v[j] - u[j] * v[i]
                for i in range(3)
                for j in range(i + 1, 3)
            ]
            g = 0
            for m in minors:
                g = gcd(g, abs(m))
            if g != 1:
                raise DomainError(
                    f"facet spanned by {u} and {v} is a singular cone, so the "
                    "singularity is not isolated"
                )

    # -- membership ---------------------------------------------------------

    def contains(self, v) -> bool:
        v = _as_lattice_vector(v, self.dim)
        return all(_idot(f, v) >= 0 for f in self.facet_normals)

    def interior_contains(self, v) -> bool:
        v = _as_lattice_vector(v, self.dim)
        return all(_idot(f, v) > 0 for f in self.facet_normals)

    def dual_contains(self, u) -> bool:
        """Membership of an M-lattice vector in the dual cone."""
        if len(u) != self.dim:
            raise InputError(f"vector {u} does not have dimension {self.dim}")
        return all(_idot(u, ray) >= 0 for ray in self.rays)

    @property
    def dual_rays(self):
        """Primitive generators of the extreme rays of the dual cone."""
        return self.facet_normals

    def interior_point(self) -> tuple[int, ...]:
        return tuple(sum(col) for col in zip(*self.rays))

    def __eq__(self, other):
        return isinstance(other, ToricCone) and set(self.rays) == set(other.rays)

    def __hash__(self):
        return hash(frozenset(self.rays))

    def __repr__(self):
        return f"ToricCone(dim={self.dim}, rays={list(self.rays)})"


@dataclass(frozen=True)
class ToricDivisor:
    """A toric Weil divisor, one rational coefficient per ray."""

    cone: ToricCone
    coeffs: tuple[Fraction, ...]

    def __post_init__(self):
        coeffs = tuple(Fraction(c) for c in self.coeffs)
        object.__setattr__(self, "coeffs", coeffs)
        if len(coeffs) != len(self.cone.rays):
            raise InputError(
                f"divisor has {len(coeffs)} coefficients but the cone has "
                f"{len(self.cone.rays)} rays"
            )

    def __neg__(self):
        return ToricDivisor(self.cone, tuple(-c for c in self.coeffs))

    def __add__(self, other):
        if self.cone != other.cone:
            raise InputError("divisors live on different cones")
        return ToricDivisor(
            self.cone, tuple(a + b for a, b in zip(self.coeffs, other.coeffs))
        )

    def scale(self, t):
        t = Fraction(t)
        return ToricDivisor(self.cone, tuple(t * c for c in self.coeffs))


def minimal_elements(cone: ToricCone, points):
    """Minimal elements of a set of M-lattice points under dual-cone order.

    u is dominated when u - u' lies in the dual cone for another point u' of
    the set.  Points are processed by increasing total pairing against the
    rays, which is a strictly positive grading on the dual cone.
    """
    def grade(u):
        return sum(_idot(u, ray) for ray in cone.rays)

    kept = []
    for u in sorted(set(points), key=lambda u: (grade(u), u)):
        diff_ok = any(
            cone.dual_contains(tuple(a - b for a, b in zip(u, g))) for g in kept
        )
        if not diff_ok:
            kept.append(u)
    return tuple(kept)


class MonomialIdeal:
    """A monomial ideal in the semigroup ring of the dual cone.

    Stored by its minimal generating exponents.  The m-primary flag holds
    exactly when the quotient by the ideal is finite dimensional, which for
    a proper monomial ideal means every extreme ray of the dual cone carries
    a generator.
    """

    def __init__(self, cone: ToricCone, gens):
        self.cone = cone
        raw = [_as_lattice_vector(g, cone.dim) for g in gens]
        if not raw:
            raise InputError("a monomial ideal needs at least one generator")
        for g in raw:
            if not cone.dual_contains(g):
                raise DomainError(f"exponent {g} lies outside the dual cone")
        self.gens = minimal_elements(cone, raw)

    @property
    def is_unit(self) -> bool:
        return self.gens == ((0,) * self.cone.dim,)

    @property
    def is_m_primary(self) -> bool:
        if self.is_unit:
            return False
        for w in self.cone.dual_rays:
            if not any(
                any(x != 0 for x in g) and xm.primitive_vector(g) == w
                for g in self.gens
            ):
                return False
        return True

    def __eq__(self, other):
        return (
            isinstance(other, MonomialIdeal)
            and self.cone == other.cone
            and self.gens == other.gens
        )

    def __hash__(self):
        return hash((self.cone, self.gens))

    def __repr__(self):
        return f"MonomialIdeal(gens={list(self.gens)})"


def ideal_product(a: MonomialIdeal, b: MonomialIdeal) -> MonomialIdeal:
    if a.cone != b.cone:
        raise InputError("ideals live on different cones")
    sums = {tuple(x + y for x, y in zip(g, h)) for g in a.gens for h in b.gens}
    return MonomialIdeal(a.cone, sums)


def ideal_power(a: MonomialIdeal, k: int) -> MonomialIdeal:
    if k < 0:
        raise InputError("ideal power wants a nonnegative exponent")
    if k == 0:
        return MonomialIdeal(a.cone, [(0,) * a.cone.dim])
    sums = {
        tuple(sum(col) for col in zip(*combo))
        for combo in itertools.combinations_with_replacement(a.gens, k)
    }
    return MonomialIdeal(a.cone, sums)


def ideal_sum(a: MonomialIdeal, b: MonomialIdeal) -> MonomialIdeal:
    if a.cone != b.cone:
        raise InputError("ideals live on different cones")
    return MonomialIdeal(a.cone, set(a.gens) | set(b.gens))


def hilbert_basis(cone: ToricCone):
    """Minimal generating set of the dual-cone semigroup.

    Every irreducible element lies in the half-open zonotope spanned by the
    primitive dual rays, so an exact search over that box suffices.
    """
    margins = [
        sum(_idot(w, ray) for w in cone.dual_rays) for ray in cone.rays
    ]
    points = [
        u
        for u in _lattice_points_between(cone, [0] * len(cone.rays), margins)
        if any(x != 0 for x in u)
    ]
    return minimal_elements(cone, points)


def maximal_ideal(cone: ToricCone) -> MonomialIdeal:
    """The ideal of the torus-fixed point, generated by the Hilbert basis."""
    return MonomialIdeal(cone, hilbert_basis(cone))


def _lattice_points_between(cone: ToricCone, lower, upper):
    """Integer points u with lower_i <= <u, ray_i> <= lower_i + upper_i."""
    n = cone.dim
    constraints = []
    for ray, lo, hi in zip(cone.rays, lower, upper):
        constraints.append((tuple(-Fraction(x) for x in ray), Fraction(-lo)))
        constraints.append((tuple(Fraction(x) for x in ray), Fraction(lo) + hi))
    box = []
    for j in range(n):
        hi_out = lp_max(LPProblem(tuple(Fraction(int(i == j)) for i in range(n)), tuple(constraints)))
        lo_out = lp_max(LPProblem(tuple(Fraction(-int(i == j)) for i in range(n)), tuple(constraints)))
        if hi_out.status != OPTIMAL or lo_out.status != OPTIMAL:
            raise DomainError("lattice search region is unbounded")
        box.append((ceil(-lo_out.value), floor(hi_out.value)))
    points = []
    for u in itertools.product(*[range(lo, hi + 1) for lo, hi in box]):
        pairings = [_idot(u, ray) for ray in cone.rays]
        if all(lo <= p <= lo + hi for p, lo, hi in zip(pairings, lower, upper)):
            points.append(tuple(u))
    return points


def module_generators(cone: ToricCone, lower_bounds, margin_scale: int = 1):
    """Minimal generators of {u in M : <u, ray_i> >= c_i} as a module over
    the dual-cone semigroup.

    Any element decomposes as a convex combination of the region's vertices
    plus a nonnegative combination of dual rays; if any dual-ray coefficient
    reaches 1 the element is dominated.  Minimal generators therefore lie
    within the vertex margins plus one zonotope of dual rays, and an exact
    search over that slab finds them all.  ``margin_scale`` widens the slab;
    the result must not depend on it, which the tests assert by doubling.
    """
    lower = [Fraction(c) for c in lower_bounds]
    if len(lower) != len(cone.rays):
        raise InputError("one lower bound per ray is required")
    vertices = _region_vertices(cone, lower)
    assert vertices, "a pointed nonempty section region always has vertices"
    margins = []
    for i, ray in enumerate(cone.rays):
        vertex_margin = max(
            [xm.dot(v, ray) - lower[i] for v in vertices], default=Fraction(0)
        )
        shift = sum(_idot(w, ray) for w in cone.dual_rays)
        margins.append(margin_scale * (max(Fraction(0), vertex_margin) + shift))
    points = _lattice_points_between(cone, lower, margins)
    return minimal_elements(cone, points)


def _region_vertices(cone: ToricCone, lower):
    rows = cone.rays
    n = cone.dim
    vertices = []
    for subset in itertools.combinations(range(len(rows)), n):
        mat = tuple(tuple(Fraction(x) for x in rows[i]) for i in subset)
        if xm.determinant(mat) == 0:
            continue
        point = xm.solve_linear(mat, tuple(lower[i] for i in subset))
        if all(xm.dot(point, ray) >= lo for ray, lo in zip(rows, lower)):
            vertices.append(point)
    return vertices


# ---------------------------------------------------------------------------
# Nef envelopes
# ---------------------------------------------------------------------------


def envelope_certificate(cone: ToricCone, divisor: ToricDivisor, v):
    """Envelope value at a valuation v in sigma, with an optimal linear form.

    Solves max <m, v> subject to <m, ray_i> <= d_i.  Boundedness is exactly
    membership of v in the cone, which is checked first.
    """
    v = _as_lattice_vector(v, cone.dim)
    if not cone.contains(v):
        raise DomainError(f"valuation vector {v} lies outside the cone")
    problem = LPProblem(
        tuple(Fraction(x) for x in v),
        tuple(
            (tuple(Fraction(x) for x in ray), Fraction(d))
            for ray, d in zip(cone.rays, divisor.coeffs)
        ),
    )
    outcome = lp_max(problem)
    assert outcome.status == OPTIMAL, "envelope LP must be bounded inside the cone"
    return outcome.value, outcome.point


def envelope_value(cone: ToricCone, divisor: ToricDivisor, v) -> Fraction:
    return envelope_certificate(cone, divisor, v)[0]


@dataclass(frozen=True)
class EnvelopeFunction:
    """The nef envelope of a toric divisor, as a function on valuations."""

    cone: ToricCone
    divisor: ToricDivisor

    def value(self, v) -> Fraction:
        return envelope_value(self.cone, self.divisor, v)

    def certificate(self, v):
        return envelope_certificate(self.cone, self.divisor, v)


@dataclass(frozen=True)
class NumericallyCartierResult:
    is_numerically_cartier: bool
    certificate: tuple | None = None
    witness: tuple | None = None
    gap: Fraction | None = None


def is_numerically_cartier(cone: ToricCone, divisor: ToricDivisor) -> NumericallyCartierResult:
    """Decide whether a toric divisor is numerically Cartier.

    On a toric variety this happens exactly when the coefficients extend to
    a single linear form m with <m, ray_i> = d_i, which is returned as the
    certificate.  Otherwise the inconsistency of that linear system yields,
    constructively, an interior valuation where the sum of the envelopes of
    D and -D is negative; that witness is returned together with the gap.
    """
    solution, lam = xm.solve_general(
        [tuple(Fraction(x) for x in ray) for ray in cone.rays],
        divisor.coeffs,
    )
    if solution is not None:
        for ray, d in zip(cone.rays, divisor.coeffs):
            assert xm.dot(solution, ray) == d
        sample = cone.interior_point()
        total = envelope_value(cone, divisor, sample) + envelope_value(
            cone, -divisor, sample
        )
        if total != 0:
            raise RuntimeError(
                "numerically-Cartier contradiction: a linear certificate exists "
                f"but the envelope sum at {sample} is {total}"
            )
        return NumericallyCartierResult(True, certificate=solution)

    # lam pairs to zero against every ray matrix row yet not against d.
    if xm.dot(lam, divisor.coeffs) > 0:
        lam = tuple(-x for x in lam)
    scale = 1
    for x in lam:
        scale = scale * Fraction(x).denominator // gcd(scale, Fraction(x).denominator)
    lam = [int(Fraction(x) * scale) for x in lam]
    w = tuple(
        sum(max(l, 0) * ray[j] for l, ray in zip(lam, cone.rays))
        for j in range(cone.dim)
    )
    assert any(x != 0 for x in w)

    def envelope_sum(v):
        return envelope_value(cone, divisor, v) + envelope_value(cone, -divisor, v)

    gap_w = envelope_sum(w)
    assert gap_w < 0
    if cone.interior_contains(w):
        witness = xm.primitive_vector(w)
    else:
        p = cone.interior_point()
        gap_p = envelope_sum(p)
        if gap_p < 0:
            witness = xm.primitive_vector(p)
        else:
            # Envelopes are subadditive, so k*gap_w + gap_p < 0 forces a
            # negative sum at the interior point k*w + p.
            k = floor(gap_p / (-gap_w)) + 1
            witness = xm.primitive_vector(
                tuple(k * a + b for a, b in zip(w, p))
            )
    assert cone.interior_contains(witness)
    gap = envelope_sum(witness)
    assert gap < 0
    return NumericallyCartierResult(False, witness=witness, gap=gap)


# ---------------------------------------------------------------------------
# Orders, multiplicities
# ---------------------------------------------------------------------------


def ord_value(a: MonomialIdeal, v) -> Fraction:
    """Order of the ideal along the monomial valuation v: min <u, v>."""
    v = _as_lattice_vector(v, a.cone.dim)
    if not a.cone.contains(v):
        raise DomainError(f"valuation vector {v} lies outside the cone")
    return Fraction(min(_idot(g, v) for g in a.gens))


def z_value(a: MonomialIdeal, v) -> Fraction:
    """Coefficient at v of the Cartier divisor cut out by the ideal (anti-effective)."""
    return -ord_value(a, v)


def samuel_multiplicity(cone: ToricCone, a: MonomialIdeal) -> Fraction:
    """n! times the covolume of the Newton region of an m-primary ideal.

    The region between the dual cone and the Newton polyhedron is fanned
    from the origin over the bounded facets of the polyhedron; bounded
    facets are exactly those whose inward normal is interior to sigma, and
    their cones contribute exact lattice determinants.
    """
    if cone.dim > 3:
        raise UnsupportedDimensionError(
            "exact Samuel multiplicity is implemented for dimension <= 3; "
            "use the counting oracle for higher dimensions"
        )
    if a.cone != cone:
        raise InputError("ideal does not live on the given cone")
    if not a.is_m_primary:
        raise DomainError("Samuel multiplicity needs an m-primary ideal")
    gens = a.gens
    n = cone.dim

    if n == 1:
        return Fraction(min(_idot(g, cone.dual_rays[0]) for g in gens))

    total = Fraction(0)
    if n == 2:
        facets = {}
        for g1, g2 in itertools.combinations(gens, 2):
            d = tuple(b - a_ for a_, b in zip(g1, g2))
            normal = (-d[1], d[0])
            for candidate in (normal, (-normal[0], -normal[1])):
                c = _idot(candidate, g1)
                if all(_idot(candidate, g) >= c for g in gens) and cone.interior_contains(candidate):
                    key = xm.primitive_vector(candidate)
                    cval = Fraction(_idot(key, g1))
                    on_facet = tuple(
                        sorted(g for g in gens if _idot(key, g) == cval)
                    )
                    facets[(key, cval)] = on_facet
                    break
        for (_, _), pts in sorted(facets.items()):
            chain = sorted(pts)
            total += abs(chain[0][0] * chain[-1][1] - chain[-1][0] * chain[0][1])
        return total

    facets = {}
    for g1, g2, g3 in itertools.combinations(gens, 3):
        normal = xm.cross3(
            tuple(Fraction(b - a_) for a_, b in zip(g1, g2)),
            tuple(Fraction(b - a_) for a_, b in zip(g1, g3)),
        )
        if normal == (0, 0, 0):
            continue
        normal = xm.primitive_vector(normal)
        for candidate in (normal, tuple(-x for x in normal)):
            c = _idot(candidate, g1)
            if all(_idot(candidate, g) >= c for g in gens) and cone.interior_contains(candidate):
                cval = _idot(candidate, g1)
                pts = frozenset(g for g in gens if _idot(candidate, g) == cval)
                facets[(candidate, cval)] = pts
                break
    for (normal, _), pts in sorted(facets.items()):
        cycle = xm.order_coplanar_polygon(
            [tuple(Fraction(x) for x in p) for p in pts],
            tuple(Fraction(x) for x in normal),
        )
        for t in range(1, len(cycle) - 1):
            total += abs(xm.det3(cycle[0], cycle[t], cycle[t + 1]))
    return total


def mixed_multiplicity(cone: ToricCone, ideals) -> Fraction:
    """Mixed multiplicity by inclusion-exclusion polarization of products.

    e(a_1, ..., a_n) = (1/n!) sum over nonempty S of (-1)^(n-|S|) e(prod_S).
    Minus this value is the intersection number over the fixed point of the
    nef divisors cut out by the ideals.
    """
    ideals = list(ideals)
    n = cone.dim
    if len(ideals) != n:
        raise InputError(f"mixed multiplicity needs exactly {n} ideals, got {len(ideals)}")
    if n > 3:
        raise UnsupportedDimensionError(
            "exact mixed multiplicity is implemented for dimension <= 3"
        )
    for a in ideals:
        if not a.is_m_primary:
            raise DomainError("mixed multiplicity needs m-primary ideals")
    total = Fraction(0)
    for size in range(1, n + 1):
        for subset in itertools.combinations(range(n), size):
            product = ideals[subset[0]]
            for i in subset[1:]:
                product = ideal_product(product, ideals[i])
            total += (-1) ** (n - size) * samuel_multiplicity(cone, product)
    factorial = 1
    for i in range(2, n + 1):
        factorial *= i
    return total / factorial


def defect_ideal(cone: ToricCone, divisor: ToricDivisor, m: int = 1) -> MonomialIdeal:
    """The defect ideal of mD: sections of mD times sections of -mD.

    Generated by sums of a minimal module generator of each factor, then
    minimalized.  It is the unit ideal exactly when mD is Cartier.
    """
    if cone.dim > 3:
        raise UnsupportedDimensionError("defect ideals are computed for dimension <= 3")
    if m < 1:
        raise InputError("defect ideal wants a positive multiple m")
    coeffs = []
    for d in divisor.coeffs:
        if Fraction(d).denominator != 1:
            raise InputError("defect ideals are defined for integer divisors")
        coeffs.append(int(d))
    plus = module_generators(cone, [-m * d for d in coeffs])
    minus = module_generators(cone, [m * d for d in coeffs])
    sums = {tuple(x + y for x, y in zip(u, u2)) for u in plus for u2 in minus}
    return MonomialIdeal(cone, sums)


def izumi_constant(cone: ToricCone, v, w) -> Fraction:
    """Best constant c with c*v - w in sigma, for interior v and w.

    Equals the maximum over inward facet normals of the pairing ratio
    <normal, w> / <normal, v>; it bounds ord_w above by c times ord_v on
    every monomial ideal.
    """
    v = _as_lattice_vector(v, cone.dim)
    w = _as_lattice_vector(w, cone.dim)
    if not cone.interior_contains(v) or not cone.interior_contains(w):
        raise DomainError("Izumi constants compare interior valuations only")
    return max(
        Fraction(_idot(f, w), _idot(f, v)) for f in cone.facet_normals
    )


def log_discrepancy_value(cone: ToricCone, v) -> Fraction:
    """Log discrepancy of the primitive interior monomial valuation v.

    With the toric canonical divisor minus the sum of the ray divisors,
    this is the envelope of the all-ones divisor at v.  The zero linear
    form is always feasible, so the value is nonnegative; hence the toric
    volume vanishes.
    """
    v = _as_lattice_vector(v, cone.dim)
    if not cone.interior_contains(v):
        raise DomainError(f"log discrepancies are evaluated at interior valuations, got {v}")
    if xm.primitive_vector(v) != v:
        raise DomainError(f"valuation vector {v} must be primitive")
    ones = ToricDivisor(cone, (Fraction(1),) * len(cone.rays))
    value = envelope_value(cone, ones, v)
    assert value >= 0
    return value
