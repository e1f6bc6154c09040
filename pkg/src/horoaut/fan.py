"""Fans of smooth complete toric varieties and their Demazure roots.

A Demazure root of a fan is a lattice character pairing to -1 against exactly
one ray and >= 0 against all others; each root gives a one-parameter additive
automorphism group of the variety.  For a complete fan the rays positively
span the whole space, so the per-ray constraint polytopes are bounded and the
root set is finite.

Everything is exact: determinants, cone duals and polytope vertices are
computed over the integers/rationals, never with floats.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, product
from math import ceil, floor

from .errors import BadFaceStructure, NotComplete, NotPrimitiveRay, NotSmooth
from .linalg import det, invert_unimodular, is_primitive, kernel_vector, solve_unique, vdot


@dataclass(frozen=True)
class Fan:
    """Rays (primitive integer vectors) and maximal cones (ray-index sets)."""

    dim: int
    rays: tuple[tuple[int, ...], ...]
    maximal_cones: tuple[tuple[int, ...], ...]
    _validated: bool = field(default=False, init=False, compare=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "rays", tuple(tuple(int(v) for v in r) for r in self.rays))
        object.__setattr__(
            self, "maximal_cones", tuple(tuple(sorted(int(i) for i in c)) for c in self.maximal_cones)
        )


@dataclass(frozen=True)
class DemazureRoot:
    """Character m with <m, ray[ray_index]> = -1 and >= 0 on every other ray."""

    m: tuple[int, ...]
    ray_index: int


@dataclass(frozen=True)
class ToricAutReport:
    dim_aut: int
    n_semisimple: int
    n_unipotent: int
    reductive: bool


def projective_space_fan(n: int) -> Fan:
    """The standard fan of projective n-space: e_1..e_n and -(e_1+...+e_n)."""
    if n == 0:
        return validate_fan(Fan(0, (), ()))
    rays = [tuple(1 if j == i else 0 for j in range(n)) for i in range(n)]
    rays.append(tuple(-1 for _ in range(n)))
    cones = [tuple(sorted(c)) for c in combinations(range(n + 1), n)]
    return validate_fan(Fan(n, tuple(rays), tuple(cones)))


def _check_cone_smooth(rays: list[tuple[int, ...]], n: int):
    """Generators extend to a lattice basis iff the gcd of maximal minors is 1."""
    k = len(rays)
    if k > n:
        raise NotSmooth(f"cone with rays {rays} has more generators than the dimension")
    g = 0
    for cols in combinations(range(n), k):
        sub = [[ray[c] for c in cols] for ray in rays]
        g = _gcd(g, abs(det(sub)))
    if g == 0:
        raise NotSmooth(f"cone with rays {rays} has linearly dependent generators")
    if g != 1:
        raise NotSmooth(f"cone with rays {rays} is singular (minor gcd {g})")


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return abs(a)


def _cone_hrep(ray_matrix_cols: list[tuple[int, ...]]) -> tuple[tuple[int, ...], ...]:
    """Facet normals of a smooth full-dimensional simplicial cone.

    With the rays as the columns of a unimodular U, the cone is
    {x : U^{-1} x >= 0}; the rows of U^{-1} are integral.
    """
    n = len(ray_matrix_cols)
    U = [[ray_matrix_cols[j][i] for j in range(n)] for i in range(n)]
    return invert_unimodular(U)


def _common_face_ok(
    rays_a: list[tuple[int, ...]],
    hrep_a,
    rays_b: list[tuple[int, ...]],
    hrep_b,
    n: int,
) -> bool:
    """Whether the intersection of two smooth full-dim cones is a face of both.

    For simplicial cones the candidate face is spanned by the rays of one cone
    lying in the other; the test is that every extreme ray of the actual
    intersection is supported on those generators (on both sides).
    """
    in_b = [all(vdot(row, u) >= 0 for row in hrep_b) for u in rays_a]
    in_a = [all(vdot(row, u) >= 0 for row in hrep_a) for u in rays_b]
    rows = list(hrep_a) + list(hrep_b)
    candidates = set()
    for subset in combinations(range(len(rows)), n - 1):
        v = kernel_vector([rows[i] for i in subset], n)
        if v is None or all(x == 0 for x in v):
            continue
        for w in (v, tuple(-x for x in v)):
            if all(vdot(row, w) >= 0 for row in rows):
                candidates.add(w)
    for w in candidates:
        coords_a = [vdot(row, w) for row in hrep_a]
        if any(c != 0 and not in_b[i] for i, c in enumerate(coords_a)):
            return False
        coords_b = [vdot(row, w) for row in hrep_b]
        if any(c != 0 and not in_a[i] for i, c in enumerate(coords_b)):
            return False
    return True


def validate_fan(fan: Fan) -> Fan:
    """Check all fan invariants; downstream operations require the result.

    Raises NotPrimitiveRay, NotSmooth, BadFaceStructure or NotComplete,
    naming the offending object.  Completeness is checked by facet pairing:
    every facet of every maximal cone must be shared with exactly one other
    maximal cone (given valid face structure this forces the support to be
    the whole space).
    """
    if fan._validated:
        return fan
    n = fan.dim
    for r in fan.rays:
        if len(r) != n:
            raise BadFaceStructure(f"ray {r} does not have {n} coordinates")
        if all(v == 0 for v in r):
            raise NotPrimitiveRay(f"zero vector listed as a ray")
        if not is_primitive(r):
            raise NotPrimitiveRay(f"ray {r} is not primitive")
    if len(set(fan.rays)) != len(fan.rays):
        raise BadFaceStructure("duplicate ray")

    if n == 0:
        if fan.rays or any(c for c in fan.maximal_cones):
            raise BadFaceStructure("a zero-dimensional fan has no rays")
        object.__setattr__(fan, "_validated", True)
        return fan

    seen = set()
    for cone in fan.maximal_cones:
        for i in cone:
            if not (0 <= i < len(fan.rays)):
                raise BadFaceStructure(f"cone {cone} names nonexistent ray {i}")
        if len(set(cone)) != len(cone):
            raise BadFaceStructure(f"cone {cone} repeats a ray")
        if cone in seen:
            raise BadFaceStructure(f"duplicate maximal cone {cone}")
        seen.add(cone)

    for cone in fan.maximal_cones:
        _check_cone_smooth([fan.rays[i] for i in cone], n)

    for cone in fan.maximal_cones:
        if len(cone) != n:
            raise NotComplete(f"maximal cone {cone} is not full-dimensional")

    used = {i for cone in fan.maximal_cones for i in cone}
    if used != set(range(len(fan.rays))):
        unused = sorted(set(range(len(fan.rays))) - used)
        raise BadFaceStructure(f"rays {unused} belong to no maximal cone")

    hreps = [_cone_hrep([fan.rays[i] for i in cone]) for cone in fan.maximal_cones]
    for a, b in combinations(range(len(fan.maximal_cones)), 2):
        ra = [fan.rays[i] for i in fan.maximal_cones[a]]
        rb = [fan.rays[i] for i in fan.maximal_cones[b]]
        if not _common_face_ok(ra, hreps[a], rb, hreps[b], n):
            raise BadFaceStructure(
                f"cones {fan.maximal_cones[a]} and {fan.maximal_cones[b]} "
                "do not intersect in a common face"
            )

    if not fan.maximal_cones:
        raise NotComplete("fan has no maximal cones")
    facets = Counter()
    for cone in fan.maximal_cones:
        for facet in combinations(cone, n - 1):
            facets[frozenset(facet)] += 1
    for facet, count in sorted(facets.items(), key=lambda kv: sorted(kv[0])):
        if count != 2:
            raise NotComplete(
                f"facet {sorted(facet)} lies in {count} maximal cone(s), expected 2"
            )

    object.__setattr__(fan, "_validated", True)
    return fan


def _ray_polytope_vertices(fan: Fan, k: int) -> list[tuple[Fraction, ...]]:
    """Vertices of {m : <m, ray_k> = -1, <m, ray_i> >= 0 for i != k}.

    The polytope is bounded because the rays of a complete fan positively
    span; every vertex is cut out by the equality plus n-1 of the other
    ray constraints.
    """
    n = fan.dim
    others = [i for i in range(len(fan.rays)) if i != k]
    verts = set()
    for subset in combinations(others, n - 1):
        rows = [fan.rays[k]] + [fan.rays[i] for i in subset]
        sol = solve_unique(rows, [-1] + [0] * (n - 1))
        if sol is None:
            continue
        if all(vdot(sol, fan.rays[i]) >= 0 for i in others):
            verts.add(tuple(sol))
    return sorted(verts)


def demazure_roots(fan: Fan) -> tuple[DemazureRoot, ...]:
    """All Demazure roots, per ray, by exact integer-point enumeration.

    For each ray the vertex description of the constraint polytope gives an
    integer bounding box; the box is scanned and every candidate is checked
    against the defining inequalities exactly.  Output is ordered
    lexicographically by the character.
    """
    fan = validate_fan(fan)
    found = []
    for k in range(len(fan.rays)):
        verts = _ray_polytope_vertices(fan, k)
        if not verts:
            continue
        lo = [ceil(min(v[j] for v in verts)) for j in range(fan.dim)]
        hi = [floor(max(v[j] for v in verts)) for j in range(fan.dim)]
        for m in product(*(range(l, h + 1) for l, h in zip(lo, hi))):
            if vdot(m, fan.rays[k]) != -1:
                continue
            if all(vdot(m, r) >= 0 for i, r in enumerate(fan.rays) if i != k):
                found.append(DemazureRoot(m, k))
    return tuple(sorted(found, key=lambda r: r.m))


def safe_oracle_radius(fan: Fan) -> int:
    """Sup-norm bound covering every per-ray constraint polytope.

    Scanning the box of this radius is guaranteed to find every root, so
    demazure_roots_bruteforce(fan, radius) equals demazure_roots(fan) for any
    radius at least this value.
    """
    fan = validate_fan(fan)
    radius = 0
    for k in range(len(fan.rays)):
        for v in _ray_polytope_vertices(fan, k):
            for c in v:
                radius = max(radius, ceil(abs(c)))
    return radius


def demazure_roots_bruteforce(fan: Fan, radius: int) -> tuple[DemazureRoot, ...]:
    """Testing oracle: scan all m with sup-norm <= radius against the definition."""
    fan = validate_fan(fan)
    found = []
    for m in product(range(-radius, radius + 1), repeat=fan.dim):
        for k, ray in enumerate(fan.rays):
            if vdot(m, ray) == -1 and all(
                vdot(m, r) >= 0 for i, r in enumerate(fan.rays) if i != k
            ):
                found.append(DemazureRoot(m, k))
    return tuple(sorted(found, key=lambda r: r.m))


def classify_roots(
    roots,
) -> tuple[tuple[DemazureRoot, ...], tuple[DemazureRoot, ...]]:
    """Split a complete root list into (semisimple, unipotent).

    A root is semisimple when its negative is also a root; the two parts
    partition the input.
    """
    members = {r.m for r in roots}
    semisimple = tuple(r for r in roots if tuple(-v for v in r.m) in members)
    unipotent = tuple(r for r in roots if tuple(-v for v in r.m) not in members)
    return semisimple, unipotent


def toric_aut_report(fan: Fan) -> ToricAutReport:
    """Structure of the connected automorphism group of the toric variety.

    Its dimension is dim(fan) + #roots; it is reductive exactly when every
    root is semisimple.
    """
    fan = validate_fan(fan)
    roots = demazure_roots(fan)
    ss, un = classify_roots(roots)
    return ToricAutReport(
        dim_aut=fan.dim + len(roots),
        n_semisimple=len(ss),
        n_unipotent=len(un),
        reductive=not un,
    )
