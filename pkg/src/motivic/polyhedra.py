"""Newton polyhedra with positive-orthant recession cone.

Provides the support function, a partition of the strictly positive lattice
orthant into half-open unimodular cones on which the support function is
linear, and the resulting closed-form zeta value together with a truncated
direct-summation oracle.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import cmp_to_key
from math import gcd
from typing import Dict, List, Optional, Sequence, Tuple

from .errors import DimensionUnsupported
from .grring import CompletionExpansion, LaurentPoly, MotClass

Vec = Tuple[int, ...]


def _primitive(v: Vec) -> Vec:
    g = 0
    for x in v:
        g = gcd(g, abs(x))
    if g <= 1:
        return tuple(v)
    return tuple(x // g for x in v)


def _dot(a: Sequence[int], b: Sequence[int]) -> int:
    return sum(x * y for x, y in zip(a, b))


def _det(rows: Sequence[Vec]) -> int:
    k = len(rows)
    if k == 1:
        return rows[0][0]
    if k == 2:
        return rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0]
    if k == 3:
        a, b, c = rows
        return (a[0] * (b[1] * c[2] - b[2] * c[1])
                - a[1] * (b[0] * c[2] - b[2] * c[0])
                + a[2] * (b[0] * c[1] - b[1] * c[0]))
    raise ValueError("determinant only implemented for k <= 3")


def _solve_coords(rays: Sequence[Vec], point: Sequence[int]) -> Optional[Tuple[Fraction, ...]]:
    """Coordinates c with point = sum c_j rays_j, or None if inconsistent.

    Rays are linearly independent; the system may be overdetermined when
    there are fewer rays than ambient dimensions.
    """
    k = len(point)
    e = len(rays)
    # augmented matrix of the k x e system (columns are rays)
    rows = [[Fraction(rays[j][i]) for j in range(e)] + [Fraction(point[i])]
            for i in range(k)]
    piv_cols: List[int] = []
    r = 0
    for c in range(e):
        piv = next((i for i in range(r, k) if rows[i][c] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        lead = rows[r][c]
        rows[r] = [x / lead for x in rows[r]]
        for i in range(k):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        piv_cols.append(c)
        r += 1
    for i in range(r, k):
        if rows[i][e] != 0:
            return None
    coords = [Fraction(0)] * e
    for i, c in enumerate(piv_cols):
        coords[c] = rows[i][e]
    return tuple(coords)


class NewtonPolyhedron:
    """Convex hull of generator points plus the nonnegative orthant."""

    __slots__ = ("k", "generators")

    def __init__(self, k: int, generators: Sequence[Sequence[int]]):
        if k < 1:
            raise ValueError("ambient dimension must be positive")
        gens = []
        for g in generators:
            g = tuple(int(x) for x in g)
            if len(g) != k:
                raise ValueError(f"generator {g} has wrong dimension (expected {k})")
            if any(x < 1 for x in g):
                raise ValueError(f"generator {g} has an entry < 1")
            gens.append(g)
        if not gens:
            raise ValueError("generator set must be nonempty")
        self.k = k
        self.generators = tuple(gens)

    def minimal_generators(self) -> Tuple[Vec, ...]:
        """Generators with componentwise-dominated ones removed."""
        out = []
        for g in set(self.generators):
            dominated = any(
                h != g and all(h_i <= g_i for h_i, g_i in zip(h, g))
                for h in set(self.generators))
            if not dominated:
                out.append(g)
        return tuple(sorted(out))

    def __repr__(self) -> str:
        return f"NewtonPolyhedron(k={self.k}, generators={list(self.generators)})"


@dataclass(frozen=True)
class HalfOpenCone:
    """The set {sum c_j rays_j : c_j integer >= 1}, rays linearly independent.

    linear_value holds the support-function values at the rays, so the
    support function at sum c_j rays_j is sum c_j linear_value_j.
    """

    rays: Tuple[Vec, ...]
    linear_value: Tuple[int, ...]

    def contains(self, xi: Vec) -> bool:
        coords = _solve_coords(self.rays, xi)
        if coords is None:
            return False
        return all(c.denominator == 1 and c >= 1 for c in coords)

    def value_at(self, xi: Vec) -> int:
        coords = _solve_coords(self.rays, xi)
        assert coords is not None
        total = Fraction(0)
        for c, lam in zip(coords, self.linear_value):
            total += c * lam
        assert total.denominator == 1
        return int(total)


def support_eval(delta: NewtonPolyhedron, xi: Sequence[int]) -> int:
    """min over the polyhedron of xi . v, attained at a generator for xi >= 0."""
    if any(x < 0 for x in xi):
        raise ValueError("support function evaluated outside the nonnegative orthant")
    return min(_dot(xi, g) for g in delta.generators)


# -- chamber construction ---------------------------------------------------

def _chambers_2d(gens: Sequence[Vec]) -> List[Tuple[Vec, Vec]]:
    rays = {(1, 0), (0, 1)}
    for g, h in itertools.combinations(gens, 2):
        d = (g[0] - h[0], g[1] - h[1])
        # wall where xi . d = 0 inside the open quadrant
        if d[0] * d[1] < 0:
            wall = (abs(d[1]), abs(d[0]))
            rays.add(_primitive(wall))

    def cmp(a: Vec, b: Vec) -> int:
        cr = a[0] * b[1] - a[1] * b[0]
        return -1 if cr > 0 else (1 if cr < 0 else 0)

    ordered = sorted(rays, key=cmp_to_key(cmp))
    return [(ordered[i], ordered[i + 1]) for i in range(len(ordered) - 1)]


def _extreme_pair(plane_rays: List[Vec]) -> Tuple[Vec, Vec]:
    """The two angular extremes of a pointed 2-dimensional cone in 3-space."""
    if len(plane_rays) == 2:
        return plane_rays[0], plane_rays[1]
    for a, b in itertools.combinations(plane_rays, 2):
        if all(r in (a, b) or _is_conic_comb_2(r, a, b) for r in plane_rays):
            return a, b
    raise AssertionError("no extreme pair found in planar cone")


def _is_conic_comb_2(r: Vec, a: Vec, b: Vec) -> bool:
    coords = _solve_coords((a, b), r)
    return coords is not None and all(c >= 0 for c in coords)


def _rank(vectors: Sequence[Vec]) -> int:
    rows = [[Fraction(x) for x in v] for v in vectors]
    rank = 0
    cols = len(rows[0]) if rows else 0
    r = 0
    for c in range(cols):
        piv = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        lead = rows[r][c]
        rows[r] = [x / lead for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        r += 1
    rank = r
    return rank


def _chambers_3d(gens: Sequence[Vec]) -> List[Tuple[Vec, Vec, Vec]]:
    tris: List[Tuple[Vec, Vec, Vec]] = []
    units = [(1, 0, 0), (0, 1, 0), (0, 0, 1)]
    for g in gens:
        normals = [tuple(h[i] - g[i] for i in range(3)) for h in gens if h != g]
        normals = [n for n in normals if any(n)] + units
        # candidate extreme rays from pairs of active constraints
        cands = set()
        for n1, n2 in itertools.combinations(normals, 2):
            cr = (n1[1] * n2[2] - n1[2] * n2[1],
                  n1[2] * n2[0] - n1[0] * n2[2],
                  n1[0] * n2[1] - n1[1] * n2[0])
            if not any(cr):
                continue
            for s in (1, -1):
                v = tuple(s * x for x in cr)
                if all(_dot(n, v) >= 0 for n in normals):
                    cands.add(_primitive(v))
        extremes = [v for v in cands
                    if _rank([n for n in normals if _dot(n, v) == 0]) >= 2]
        if _rank(extremes) < 3:
            continue  # chamber not full-dimensional
        # 2-dimensional faces: active sets of rank 2
        faces = set()
        for n in normals:
            active = [v for v in extremes if _dot(n, v) == 0]
            if len(active) >= 2 and _rank(active) == 2:
                faces.add(frozenset(_extreme_pair(active)))
        r0 = min(extremes)
        for face in faces:
            a, b = sorted(face)
            if r0 in face:
                continue
            tris.append((r0, a, b))
    return tris


# -- unimodular subdivision -------------------------------------------------

def _par_point(rays: Sequence[Vec]) -> Vec:
    """A nonzero lattice point in the half-open parallelepiped of the cone."""
    k = len(rays)
    best = None
    best_key = None
    box = [sum(r[i] for r in rays) for i in range(k)]
    for point in itertools.product(*(range(0, b + 1) for b in box)):
        if not any(point):
            continue
        coords = _solve_coords(rays, point)
        if coords is None:
            continue
        if all(0 <= c < 1 for c in coords):
            key = (sum(coords), point)
            if best_key is None or key < best_key:
                best, best_key = point, key
    assert best is not None, "non-unimodular cone without interior parallelepiped point"
    return _primitive(best)


def _unimodularize(maxcones: List[Tuple[Vec, ...]], k: int) -> List[Tuple[Vec, ...]]:
    fan = [tuple(c) for c in maxcones]
    guard = 0
    while True:
        guard += 1
        assert guard < 10000, "unimodular subdivision failed to terminate"
        target = next((c for c in fan if abs(_det(c)) != 1), None)
        if target is None:
            return fan
        w = _par_point(target)
        newfan: List[Tuple[Vec, ...]] = []
        for cone in fan:
            coords = _solve_coords(cone, w)
            if coords is None or any(c < 0 for c in coords):
                newfan.append(cone)
                continue
            if w in cone:
                newfan.append(cone)
                continue
            for j, cj in enumerate(coords):
                if cj > 0:
                    replaced = cone[:j] + (w,) + cone[j + 1:]
                    newfan.append(replaced)
        fan = newfan


def linearity_partition(delta: NewtonPolyhedron) -> List[HalfOpenCone]:
    """Disjoint half-open unimodular cones covering the open lattice orthant,
    with the support function linear on each."""
    k = delta.k
    if k > 3:
        raise DimensionUnsupported(f"closed-form partition supports k <= 3, got {k}")
    gens = delta.minimal_generators()
    if k == 1:
        nu = min(g[0] for g in gens)
        return [HalfOpenCone(((1,),), (nu,))]
    if k == 2:
        maxcones = [tuple(c) for c in _chambers_2d(gens)]
    else:
        maxcones = [tuple(c) for c in _chambers_3d(gens)]
    fan = _unimodularize(maxcones, k)
    faces: Dict[frozenset, Tuple[Vec, ...]] = {}
    for cone in fan:
        for size in range(1, k + 1):
            for subset in itertools.combinations(cone, size):
                faces[frozenset(subset)] = tuple(sorted(subset))
    out = []
    for rays in sorted(set(faces.values())):
        # drop faces inside a coordinate hyperplane: they miss the open orthant
        if any(all(r[i] == 0 for r in rays) for i in range(k)):
            continue
        values = tuple(support_eval(delta, r) for r in rays)
        out.append(HalfOpenCone(rays, values))
    return out


def z_of_delta(delta: NewtonPolyhedron) -> MotClass:
    """(L-1)^k sum over the open lattice orthant of L^{-support}, in closed form."""
    cones = linearity_partition(delta)  # raises DimensionUnsupported for k > 3
    k = delta.k
    total = MotClass.zero()
    for cone in cones:
        total = total + MotClass(LaurentPoly.const(1), cone.linear_value)
    return total * MotClass(LaurentPoly.binom(1) ** k)


def z_truncated(delta: NewtonPolyhedron, m: int) -> CompletionExpansion:
    """Expansion of the zeta value through order m by direct summation."""
    if m < 1:
        raise ValueError("truncation order must be >= 1")
    k = delta.k
    bound = m + k
    raw: Dict[int, int] = {}
    for xi in itertools.product(range(1, bound + 1), repeat=k):
        val = support_eval(delta, xi)
        if val <= bound:
            raw[val] = raw.get(val, 0) + 1
    # multiply sum_l raw[l] L^{-l} by (L-1)^k and truncate at order m
    factor = LaurentPoly.binom(1) ** k
    coeffs: Dict[int, int] = {}
    for e, c in factor.terms.items():
        for l, cnt in raw.items():
            n = l - e
            if n <= m:
                coeffs[n] = coeffs.get(n, 0) + c * cnt
    return CompletionExpansion(coeffs, m)
