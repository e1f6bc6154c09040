"""Projectivized sums of line bundles over rational homogeneous spaces.

For X = P(L_1 + ... + L_k) over Y = G/P the fiber roots are the pairwise
differences of the defining characters, a difference survives to X exactly
when the corresponding bundle quotient is nef, and it is semisimple exactly
when the two bundles are isomorphic.  Non-reductivity of a Fano member then
certifies K-unstability (the polystable and semistable notions coincide for
this class, and polystability forces a reductive automorphism group).

Line bundles are given by their coefficients over the marked nodes, listed
in marking order; only differences matter, so a common twist changes nothing.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from math import gcd

from .errors import PreconditionViolated
from .fan import projective_space_fan
from .horospherical import HorosphericalDatum, validate_datum
from .rootsystem import (
    ParabolicMarking,
    RootSystemSpec,
    Weight,
    anticanonical_character,
    aut_dim_homogeneous,
    build_root_system,
    weyl_dim,
)

CERTIFIED_FANO = "certified_fano"
CERTIFIED_NOT_FANO = "certified_not_fano"
CERTIFIED = "certified"
NOT_APPLICABLE = "not_applicable"
UNKNOWN = "unknown"


@dataclass(frozen=True)
class BundleSpec:
    """P(L_1 + ... + L_k) -> G/P with the semisimple part of G acting on the base.

    ``marking`` is an ordered tuple of (factor, node) pairs; each line bundle
    is a vector of coefficients over exactly those nodes, in that order.
    """

    base: RootSystemSpec
    marking: tuple[tuple[int, int], ...]
    line_bundles: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "marking", tuple((int(f), int(n)) for f, n in self.marking))
        object.__setattr__(
            self, "line_bundles", tuple(tuple(int(v) for v in lb) for lb in self.line_bundles)
        )
        if self.base.torus_rank != 0:
            raise PreconditionViolated("bundle base must have torus rank 0")
        marked_factors = {f for f, _ in self.marking}
        if marked_factors != set(range(len(self.base.simple_factors))):
            raise PreconditionViolated("every base factor needs at least one marked node")
        if len(self.line_bundles) < 2:
            raise PreconditionViolated("need at least two line bundles")
        for lb in self.line_bundles:
            if len(lb) != len(self.marking):
                raise PreconditionViolated(
                    f"line bundle {lb} has {len(lb)} coefficients, "
                    f"marking has {len(self.marking)} nodes"
                )
        # constructing the marking validates node existence and duplicates
        object.__setattr__(self, "_pm", ParabolicMarking.of(self.base, self.marking))

    _pm: ParabolicMarking = field(init=False, compare=False, repr=False, default=None)

    @property
    def k(self) -> int:
        return len(self.line_bundles)

    @property
    def parabolic_marking(self) -> ParabolicMarking:
        return self._pm

    def full_fw(self, marked_vec) -> tuple[int, ...]:
        """Spread a marked-order coefficient vector over the full weight lattice."""
        fw = [0] * self.base.rank_total
        offs = self.base.offsets
        for (f, node), c in zip(self.marking, marked_vec):
            fw[offs[f] + node - 1] = c
        return tuple(fw)


@dataclass(frozen=True)
class PairRoot:
    """The character chi_i - chi_j (1-based indices into the bundle list)."""

    i: int
    j: int
    nef: bool
    iso: bool
    v_dim: int | None  # module dimension when nef, else None

    def __post_init__(self):
        assert not self.iso or self.nef


@dataclass(frozen=True)
class BundleReport:
    pair_roots: tuple[PairRoot, ...]
    reductive: bool
    dim_aut_total: int
    fano: str
    k_unstable: str
    base_fano_index: int

    def __post_init__(self):
        assert self.reductive == all(p.iso for p in self.pair_roots if p.nef)


def _diff(a, b) -> tuple[int, ...]:
    return tuple(x - y for x, y in zip(a, b))


def _anticanonical_marked(spec: BundleSpec) -> tuple[int, ...]:
    tables = build_root_system(spec.base)
    anti = anticanonical_character(tables, spec.parabolic_marking)
    offs = spec.base.offsets
    return tuple(anti.fw[offs[f] + node - 1] for f, node in spec.marking)


def base_fano_index(spec: BundleSpec) -> int:
    """Fano index of the base: gcd of the anticanonical coefficients."""
    g = 0
    for c in _anticanonical_marked(spec):
        g = gcd(g, c)
    return g


def bundle_roots(spec: BundleSpec) -> BundleReport:
    """Roots, reductivity and the total automorphism dimension.

    dim Aut0(X) = dim Aut0(G/P) + (k-1) + #isomorphic ordered pairs
                  + sum of module dimensions over nef non-isomorphic pairs.
    Fano/K-stability fields are left "unknown"; see fano_certificate and
    k_unstability_certificate, or bundle_report for everything at once.
    """
    tables = build_root_system(spec.base)
    pairs = []
    for i in range(1, spec.k + 1):
        for j in range(1, spec.k + 1):
            if i == j:
                continue
            d = _diff(spec.line_bundles[i - 1], spec.line_bundles[j - 1])
            nef = all(v >= 0 for v in d)
            iso = all(v == 0 for v in d)
            v_dim = weyl_dim(tables, Weight(spec.full_fw(d), ())) if nef else None
            pairs.append(PairRoot(i, j, nef, iso, v_dim))
    dim_gp, _ = aut_dim_homogeneous(spec.base, spec.parabolic_marking)
    n_iso = sum(1 for p in pairs if p.iso)
    unip = sum(p.v_dim for p in pairs if p.nef and not p.iso)
    reductive = all(p.iso for p in pairs if p.nef)
    return BundleReport(
        pair_roots=tuple(pairs),
        reductive=reductive,
        dim_aut_total=dim_gp + (spec.k - 1) + n_iso + unip,
        fano=UNKNOWN,
        k_unstable=UNKNOWN,
        base_fano_index=base_fano_index(spec),
    )


def fano_certificate(spec: BundleSpec) -> str:
    """Three-valued Fano test.

    Exact over a product of projective lines with k = 2: Fano iff every
    coefficient of L_2 - L_1 lies in {-1, 0, 1}.  In general only a
    sufficient twist test runs: X is Fano if for some j every L_j - L_i is
    nef and the base anticanonical plus sum_i (L_i - L_j) is ample.  Outside
    both rules the answer is "unknown"; the certificate never claims
    "not Fano" beyond the exact case.
    """
    if spec.k == 2 and all(t == "A" and r == 1 for t, r in spec.base.simple_factors):
        a = _diff(spec.line_bundles[1], spec.line_bundles[0])
        return CERTIFIED_FANO if all(abs(v) <= 1 for v in a) else CERTIFIED_NOT_FANO
    anti = _anticanonical_marked(spec)
    for j in range(spec.k):
        diffs = [_diff(spec.line_bundles[j], lb) for lb in spec.line_bundles]
        if not all(v >= 0 for d in diffs for v in d):
            continue
        candidate = list(anti)
        for d in diffs:
            for idx, v in enumerate(d):
                candidate[idx] -= v  # anti + sum_i (L_i - L_j)
        if all(v > 0 for v in candidate):
            return CERTIFIED_FANO
    return UNKNOWN


def k_unstability_certificate(spec: BundleSpec) -> str:
    """Certify K-unstability from (Fano, non-reductive).

    Returns "not_applicable" when the automorphism group is reductive (the
    obstruction sees nothing) and "unknown" when the Fano status is unknown
    or certified negative.
    """
    if bundle_roots(spec).reductive:
        return NOT_APPLICABLE
    if fano_certificate(spec) == CERTIFIED_FANO:
        return CERTIFIED
    return UNKNOWN


def bundle_report(spec: BundleSpec) -> BundleReport:
    """bundle_roots with the Fano and K-stability fields filled in."""
    rep = bundle_roots(spec)
    return replace(
        rep,
        fano=fano_certificate(spec),
        k_unstable=k_unstability_certificate(spec),
    )


def picard_rank_one_rule(spec: BundleSpec) -> bool:
    """Reductivity shortcut for k = 2 over a base of Picard rank one.

    P(L_1 + L_2) has reductive automorphism group iff L_1 = L_2 (iff the
    bundle is a product with a projective line).  Requires exactly one
    marked node overall and k = 2.
    """
    if len(spec.marking) != 1:
        raise PreconditionViolated("base must have exactly one marked node")
    if spec.k != 2:
        raise PreconditionViolated("rule applies to two line bundles only")
    same = spec.line_bundles[0] == spec.line_bundles[1]
    assert same == bundle_roots(spec).reductive
    return same


def to_horospherical_datum(spec: BundleSpec) -> HorosphericalDatum:
    """Present the bundle through the general pipeline.

    The group gains one torus factor per line bundle, the fiber is the
    standard fan of projective (k-1)-space, and the i-th basis vector of the
    fiber character lattice maps to chi_{i+1} - chi_1.  With this orientation
    the fiber Demazure roots map exactly onto the chi_i - chi_j.
    """
    group = RootSystemSpec(spec.base.simple_factors, torus_rank=spec.k)
    marking = ParabolicMarking.of(group, spec.marking)
    fan = projective_space_fan(spec.k - 1)
    emb = []
    for i in range(1, spec.k):
        fw = spec.full_fw(_diff(spec.line_bundles[i], spec.line_bundles[0]))
        torus = tuple(
            (1 if t == i else 0) - (1 if t == 0 else 0) for t in range(spec.k)
        )
        emb.append(Weight(fw, torus))
    return validate_datum(HorosphericalDatum(group, marking, fan, tuple(emb)))
