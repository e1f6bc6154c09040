"""Shared test fixtures: standard fans, a randomized fan corpus, and an
independent reflection-closure oracle for positive roots."""

from __future__ import annotations

import random

from horoaut import Fan, validate_fan


def p2_fan() -> Fan:
    return validate_fan(Fan(2, ((1, 0), (0, 1), (-1, -1)), ((0, 1), (1, 2), (2, 0))))


def p1p1_fan() -> Fan:
    return validate_fan(
        Fan(2, ((1, 0), (-1, 0), (0, 1), (0, -1)), ((0, 2), (2, 1), (1, 3), (3, 0)))
    )


def hirzebruch_fan(a: int) -> Fan:
    return validate_fan(
        Fan(2, ((1, 0), (0, 1), (-1, a), (0, -1)), ((0, 1), (1, 2), (2, 3), (3, 0)))
    )


def product_fan(f: Fan, g: Fan) -> Fan:
    """Direct product: rays padded with zeros, cones are unions."""
    rays = [r + (0,) * g.dim for r in f.rays]
    rays += [(0,) * f.dim + r for r in g.rays]
    cones = []
    for cf in f.maximal_cones:
        for cg in g.maximal_cones:
            cones.append(tuple(cf) + tuple(len(f.rays) + i for i in cg))
    return validate_fan(Fan(f.dim + g.dim, tuple(rays), tuple(cones)))


def refine_once(fan: Fan, rng: random.Random) -> Fan:
    """Star-subdivide a random maximal cone at the sum of its two rays.

    The sum of a lattice basis of Z^2 is primitive and splits the cone into
    two unimodular halves, so smoothness and completeness are preserved.
    """
    assert fan.dim == 2
    idx = rng.randrange(len(fan.maximal_cones))
    cone = fan.maximal_cones[idx]
    u, v = fan.rays[cone[0]], fan.rays[cone[1]]
    new_ray = (u[0] + v[0], u[1] + v[1])
    rays = fan.rays + (new_ray,)
    new_idx = len(fan.rays)
    cones = list(fan.maximal_cones)
    cones[idx : idx + 1] = [
        tuple(sorted((cone[0], new_idx))),
        tuple(sorted((new_idx, cone[1]))),
    ]
    return validate_fan(Fan(2, rays, tuple(cones)))


def random_refined_fans(count: int, seed: int = 20240406, max_steps: int = 5):
    """Smooth complete 2D fans obtained by unimodular refinement of the P^2 fan."""
    rng = random.Random(seed)
    fans = []
    for _ in range(count):
        fan = p2_fan()
        for _ in range(rng.randint(1, max_steps)):
            fan = refine_once(fan, rng)
        fans.append(fan)
    return fans


def reflection_closure_roots(cartan) -> set[tuple[int, ...]]:
    """All roots by closing the simple roots under the simple reflections.

    Independent of the height-induction enumeration used by the package:
    s_i(beta) = beta - <beta, alpha_i^vee> alpha_i.
    """
    l = len(cartan)
    simples = [tuple(1 if j == i else 0 for j in range(l)) for i in range(l)]
    roots = set(simples) | {tuple(-v for v in s) for s in simples}
    frontier = list(roots)
    while frontier:
        new = []
        for beta in frontier:
            for i in range(l):
                pairing = sum(cartan[i][j] * beta[j] for j in range(l))
                refl = tuple(
                    beta[j] - (pairing if j == i else 0) for j in range(l)
                )
                if refl not in roots:
                    roots.add(refl)
                    new.append(refl)
        frontier = new
    return roots


def reflection_closure_positive_roots(cartan) -> set[tuple[int, ...]]:
    return {r for r in reflection_closure_roots(cartan) if all(c >= 0 for c in r)}
