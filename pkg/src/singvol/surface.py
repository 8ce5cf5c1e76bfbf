"""Normal surface singularities presented by resolution dual graphs.

A graph records the exceptional curves of a good resolution: one vertex per
smooth curve with its self-intersection and genus, one edge per transverse
intersection (with multiplicity).  The intersection matrix must be negative
definite, which is the contractibility condition, and is checked at
construction.

From this combinatorial data the module computes the Mumford numerical
pull-back of Weil divisors, the log-discrepancy divisor, relative Zariski
decompositions, the volume of the singularity (minus the self-intersection
of the nef part of the log-discrepancy divisor), the local volume of an
arbitrary exceptional divisor, and the numerical log-canonical / klt
classification.  All arithmetic is exact.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainError, InputError
from . import exactmath as xm


@dataclass(frozen=True)
class Vertex:
    self_int: int
    genus: int

    def __post_init__(self):
        if not isinstance(self.self_int, int) or not isinstance(self.genus, int):
            raise InputError("vertex data must be integers")
        if self.genus < 0:
            raise InputError(f"genus must be nonnegative, got {self.genus}")


class ResolutionGraph:
    """Weighted dual graph of a resolution with exact validity checks."""

    def __init__(self, vertices, edges):
        verts = []
        for v in vertices:
            if isinstance(v, Vertex):
                verts.append(v)
            else:
                self_int, genus = v
                verts.append(Vertex(int(self_int), int(genus)))
        if not verts:
            raise InputError("a resolution graph needs at least one vertex")
        self.vertices = tuple(verts)
        k = len(verts)
        cleaned = []
        for e in edges:
            i, j, mult = (int(x) for x in e)
            if not (0 <= i < k and 0 <= j < k):
                raise InputError(f"edge {e} references a missing vertex")
            if i == j:
                raise InputError(
                    f"edge {e} is a loop; blow up to a simple normal crossing model first"
                )
            if mult < 1:
                raise InputError(f"edge {e} must have positive multiplicity")
            cleaned.append((min(i, j), max(i, j), mult))
        self.edges = tuple(sorted(cleaned))

        rows = [[Fraction(0)] * k for _ in range(k)]
        for idx, v in enumerate(verts):
            rows[idx][idx] = Fraction(v.self_int)
        for i, j, mult in self.edges:
            rows[i][j] += mult
            rows[j][i] += mult
        self.intersection_matrix = tuple(tuple(r) for r in rows)

        if k > 1:
            adjacency = {i: set() for i in range(k)}
            for i, j, _ in self.edges:
                adjacency[i].add(j)
                adjacency[j].add(i)
            seen = {0}
            stack = [0]
            while stack:
                for nb in adjacency[stack.pop()]:
                    if nb not in seen:
                        seen.add(nb)
                        stack.append(nb)
            if len(seen) != k:
                raise DomainError("resolution graph is not connected")

        failing = xm.failing_principal_minor(self.intersection_matrix)
        if failing is not None:
            size, minor = failing
            raise DomainError(
                "intersection matrix is not negative definite: leading principal "
                f"minor of size {size} has determinant {xm.format_rational(minor)}"
            )

    def __len__(self):
        return len(self.vertices)

    def __eq__(self, other):
        return (
            isinstance(other, ResolutionGraph)
            and self.vertices == other.vertices
            and self.edges == other.edges
        )

    def __hash__(self):
        return hash((self.vertices, self.edges))

    def __repr__(self):
        verts = [(v.self_int, v.genus) for v in self.vertices]
        return f"ResolutionGraph(vertices={verts}, edges={list(self.edges)})"

    def permuted(self, order):
        """The same graph with vertices relabelled by the permutation
        new_index = order.index(old_index)."""
        order = list(order)
        if sorted(order) != list(range(len(self))):
            raise InputError("not a permutation of the vertex indices")
        position = {old: new for new, old in enumerate(order)}
        verts = [self.vertices[old] for old in order]
        edges = [(position[i], position[j], m) for i, j, m in self.edges]
        return ResolutionGraph(verts, edges)


def _as_coeffs(graph, d):
    coeffs = tuple(Fraction(c) for c in d)
    if len(coeffs) != len(graph):
        raise InputError(
            f"divisor has {len(coeffs)} coefficients but the graph has {len(graph)} vertices"
        )
    return coeffs


def intersect(graph: ResolutionGraph, d1, d2) -> Fraction:
    """Intersection number of two exceptional divisors."""
    return xm.dot(_as_coeffs(graph, d1), xm.mat_vec(graph.intersection_matrix, _as_coeffs(graph, d2)))


def canonical_intersections(graph: ResolutionGraph):
    """The vector of intersections of the canonical class with each curve.

    Adjunction on a smooth curve of genus g with self-intersection s gives
    2g - 2 - s.
    """
    return tuple(
        Fraction(2 * v.genus - 2 - v.self_int) for v in graph.vertices
    )


def numerical_pullback(graph: ResolutionGraph, rhs):
    """The unique exceptional divisor x with x . E_j equal to rhs_j.

    This inverts the intersection matrix, which is nonsingular by negative
    definiteness.  With rhs the canonical intersection numbers it returns
    the discrepancy coefficients."""
    rhs = _as_coeffs(graph, rhs)
    return xm.solve_linear(graph.intersection_matrix, rhs)


def discrepancies(graph: ResolutionGraph):
    return numerical_pullback(graph, canonical_intersections(graph))


def log_discrepancy_divisor(graph: ResolutionGraph):
    """Coefficients of the log-discrepancy divisor: discrepancy plus one."""
    return tuple(a + 1 for a in discrepancies(graph))


@dataclass(frozen=True)
class ZariskiDecomposition:
    nef_part: tuple[Fraction, ...]
    neg_part: tuple[Fraction, ...]


def zariski_decompose(graph: ResolutionGraph, d, order=None) -> ZariskiDecomposition:
    """Relative Zariski decomposition d = P + N of an exceptional divisor.

    N is the smallest effective divisor making P = d - N nef against every
    exceptional curve.  The support of N grows monotonically: vertices whose
    intersection with P is negative are added and the linear system
    (d - N) . E_j = 0 on the support is re-solved until no violation is
    left.  The answer is unique, so the processing order (exposed for
    testing) cannot change it.
    """
    d = _as_coeffs(graph, d)
    k = len(graph)
    matrix = graph.intersection_matrix
    priority = list(order) if order is not None else None
    if priority is not None and sorted(priority) != list(range(k)):
        raise InputError("order must be a permutation of the vertex indices")

    support: set[int] = set()
    neg = (Fraction(0),) * k
    for _ in range(k + 1):
        nef = tuple(a - b for a, b in zip(d, neg))
        products = xm.mat_vec(matrix, nef)
        violating = [j for j in range(k) if products[j] < 0 and j not in support]
        if not violating:
            assert all(c >= 0 for c in neg)
            assert all(
                products[j] == 0 for j in range(k) if neg[j] != 0
            )
            return ZariskiDecomposition(nef_part=nef, neg_part=neg)
        if priority is None:
            support.update(violating)
        else:
            support.add(min(violating, key=priority.index))
        # Solve for N supported on the current set: (d - N) . E_j = 0 there,
        # i.e. the restriction of N solves M_SS n = (M d)_S.
        rows = sorted(support)
        sub = tuple(tuple(matrix[i][j] for j in rows) for i in rows)
        rhs = tuple(xm.dot(matrix[i], d) for i in rows)
        sol = xm.solve_linear(sub, rhs)
        neg_list = [Fraction(0)] * k
        for idx, j in enumerate(rows):
            neg_list[j] = sol[idx]
        neg = tuple(neg_list)
    raise AssertionError("Zariski decomposition failed to stabilize")


def volume(graph: ResolutionGraph) -> Fraction:
    """Minus the self-intersection of the nef part of the log-discrepancy
    divisor; zero exactly in the numerically log-canonical case."""
    return local_volume(graph, log_discrepancy_divisor(graph))


def local_volume(graph: ResolutionGraph, d) -> Fraction:
    """Minus the self-intersection of the nef part of d."""
    decomposition = zariski_decompose(graph, d)
    value = -intersect(graph, decomposition.nef_part, decomposition.nef_part)
    assert value >= 0
    return value


class SingularityKind(enum.Enum):
    KLT = "klt"
    LC_NOT_KLT = "lc_not_klt"
    NOT_LC = "not_lc"


@dataclass(frozen=True)
class SingularityClass:
    kind: SingularityKind
    log_discrepancies: tuple[Fraction, ...]


def classify(graph: ResolutionGraph) -> SingularityClass:
    """Numerical classification from the sign pattern of log discrepancies."""
    coeffs = log_discrepancy_divisor(graph)
    if all(a > 0 for a in coeffs):
        kind = SingularityKind.KLT
    elif all(a >= 0 for a in coeffs):
        kind = SingularityKind.LC_NOT_KLT
    else:
        kind = SingularityKind.NOT_LC
    return SingularityClass(kind=kind, log_discrepancies=coeffs)


# ---------------------------------------------------------------------------
# Standard families
# ---------------------------------------------------------------------------


def cone_graph(genus: int, degree: int) -> ResolutionGraph:
    """Cone over a smooth curve of the given genus and polarization degree:
    one exceptional curve of that genus with self-intersection -degree."""
    if degree < 1:
        raise InputError("cone degree must be positive")
    if genus < 0:
        raise InputError("genus must be nonnegative")
    return ResolutionGraph([(-degree, genus)], [])


def cusp_cycle_graph(self_ints) -> ResolutionGraph:
    """Cycle of smooth rational curves (a cusp singularity resolution).

    All self-intersections must be at most -2 with at least one at most -3,
    otherwise the intersection matrix is not negative definite.  A cycle of
    length two is encoded by a double edge; length one would need a loop,
    which a simple normal crossing dual graph cannot carry.
    """
    selfs = [int(s) for s in self_ints]
    if len(selfs) < 2:
        raise InputError(
            "cusp cycles need length at least two; present a one-curve cycle "
            "on a blown-up model instead"
        )
    if any(s > -2 for s in selfs):
        raise DomainError("cusp cycle self-intersections must be at most -2")
    if all(s == -2 for s in selfs):
        raise DomainError(
            "a cycle of only -2 curves has a degenerate intersection matrix; "
            "at least one self-intersection must be at most -3"
        )
    vertices = [(s, 0) for s in selfs]
    if len(selfs) == 2:
        edges = [(0, 1, 2)]
    else:
        edges = [(i, (i + 1) % len(selfs), 1) for i in range(len(selfs))]
    return ResolutionGraph(vertices, edges)


_DU_VAL_RE = re.compile(r"^([ADE])_?(\d+)$")


def du_val_graph(name: str) -> ResolutionGraph:
    """Standard rational double point trees: A_n, D_n, E_6, E_7, E_8."""
    match = _DU_VAL_RE.match(name.strip().upper())
    if not match:
        raise InputError(f"unknown Du Val name {name!r}; expected like A2, D4, E6")
    letter, rank = match.group(1), int(match.group(2))
    if letter == "A":
        if rank < 1:
            raise InputError("A_n needs n >= 1")
        edges = [(i, i + 1, 1) for i in range(rank - 1)]
        count = rank
    elif letter == "D":
        if rank < 4:
            raise InputError("D_n needs n >= 4")
        # Chain of n-2 vertices with two extra leaves on its last vertex.
        edges = [(i, i + 1, 1) for i in range(rank - 3)]
        edges += [(rank - 3, rank - 2, 1), (rank - 3, rank - 1, 1)]
        count = rank
    else:
        arms = {6: (1, 2, 2), 7: (1, 2, 3), 8: (1, 2, 4)}.get(rank)
        if arms is None:
            raise InputError("E_n exists for n in {6, 7, 8}")
        edges = []
        count = 1
        for arm in arms:
            prev = 0
            for _ in range(arm):
                edges.append((prev, count, 1))
                prev = count
                count += 1
    vertices = [(-2, 0)] * count
    return ResolutionGraph(vertices, edges)


def standard_graph(family: str, **params) -> ResolutionGraph:
    """Dispatch for the generator families used on the command line."""
    if family == "cone":
        return cone_graph(int(params["genus"]), int(params["degree"]))
    if family == "cusp_cycle":
        return cusp_cycle_graph(params["self_ints"])
    if family == "duval":
        return du_val_graph(params["name"])
    raise InputError(f"unknown family {family!r}; expected cone, cusp_cycle or duval")
