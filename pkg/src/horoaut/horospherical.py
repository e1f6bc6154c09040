"""Automorphism-group structure of toroidal horospherical varieties.

The input datum is a reductive group, a parabolic marking, a smooth complete
fan for the torus fiber, and an embedding of the fiber character lattice into
the weight lattice of the group.  The fiber's Demazure roots whose images are
dominant against the marked simple coroots survive to the total space; each
survivor contributes an irreducible module of its highest weight to the Lie
algebra of the automorphism group, and the dimension bookkeeping follows.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import (
    DimensionMismatch,
    EmbeddingNotCharacterOfP,
    EmbeddingNotInjective,
)
from .fan import Fan, classify_roots, demazure_roots, validate_fan
from .linalg import rank
from .rootsystem import (
    ParabolicMarking,
    RootSystemSpec,
    Weight,
    aut_dim_homogeneous,
    build_root_system,
    weyl_dim,
)

SEMISIMPLE = "semisimple"
UNIPOTENT = "unipotent"


@dataclass(frozen=True)
class HorosphericalDatum:
    """Combinatorial model of a smooth complete toroidal horospherical variety.

    ``embedding[i]`` is the image of the i-th standard basis vector of the
    fiber character lattice inside the weight lattice (fundamental-weight
    coordinates plus central-torus coordinates).
    """

    group: RootSystemSpec
    marking: ParabolicMarking
    fiber_fan: Fan
    embedding: tuple[Weight, ...]
    _validated: bool = field(default=False, init=False, compare=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "embedding", tuple(self.embedding))


@dataclass(frozen=True)
class BRoot:
    """A fiber Demazure root that survives on the total space."""

    m_fiber: tuple[int, ...]
    m_ambient: Weight
    kind: str  # SEMISIMPLE or UNIPOTENT
    v_dim: int


@dataclass(frozen=True)
class ExtendingRoot:
    m_fiber: tuple[int, ...]
    g_normalized: bool


@dataclass(frozen=True)
class Extendability:
    """Which fiber roots extend to the total space, and how equivariantly."""

    extends: tuple[ExtendingRoot, ...]
    does_not_extend: tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class AutReport:
    """Full structure report for the connected automorphism group."""

    dim_aut_gp: int
    g_surjects: bool
    dim_s: int
    roots: tuple[BRoot, ...]
    n_semisimple: int
    unipotent_dims: tuple[int, ...]
    dim_aut_total: int
    dim_unipotent_radical: int
    dim_levi: int
    reductive: bool
    levi_note: str

    def __post_init__(self):
        assert self.dim_aut_total == (
            self.dim_aut_gp + self.dim_s + self.n_semisimple + sum(self.unipotent_dims)
        )
        assert self.dim_unipotent_radical == sum(self.unipotent_dims)
        assert self.dim_levi == self.dim_aut_total - self.dim_unipotent_radical
        assert self.reductive == (not self.unipotent_dims)


def validate_datum(datum: HorosphericalDatum) -> HorosphericalDatum:
    """Check all datum invariants; raises the first violated one.

    Fan errors propagate unchanged.  The embedding must be injective and
    every embedding weight must vanish on unmarked nodes (characters of the
    fiber torus pull back to characters of the parabolic).
    """
    if datum._validated:
        return datum
    validate_fan(datum.fiber_fan)
    if datum.marking.spec != datum.group:
        raise DimensionMismatch("marking was built for a different root system")
    n = datum.fiber_fan.dim
    if len(datum.embedding) != n:
        raise DimensionMismatch(
            f"embedding has {len(datum.embedding)} weights, fiber fan has dimension {n}"
        )
    spec = datum.group
    marked = datum.marking.flat_indices
    for idx, w in enumerate(datum.embedding):
        if len(w.fw) != spec.rank_total or len(w.torus) != spec.torus_rank:
            raise DimensionMismatch(f"embedding weight {idx} has the wrong shape")
        for j, v in enumerate(w.fw):
            if v != 0 and j not in marked:
                raise EmbeddingNotCharacterOfP(
                    f"embedding basis vector {idx} has coefficient {v} "
                    f"at unmarked node index {j}"
                )
    rows = [list(w.fw) + list(w.torus) for w in datum.embedding]
    ncols = spec.rank_total + spec.torus_rank
    if rank(rows, ncols) != n:
        raise EmbeddingNotInjective(
            f"embedding matrix has rank {rank(rows, ncols)}, expected {n}"
        )
    object.__setattr__(datum, "_validated", True)
    return datum


def _ambient_image(datum: HorosphericalDatum, m: tuple[int, ...]) -> Weight:
    w = Weight.zero(datum.group)
    for coeff, emb in zip(m, datum.embedding):
        if coeff:
            w = w + emb.scale(coeff)
    return w


def b_plus_roots(datum: HorosphericalDatum) -> tuple[BRoot, ...]:
    """Fiber Demazure roots whose ambient weights are dominant on marked nodes.

    A surviving root is semisimple when its negative also survives
    (equivalently its fundamental-weight part vanishes and the negative is a
    root of the fiber fan); otherwise it is unipotent.  The module dimension
    is the Weyl dimension of the ambient weight; it is 1 exactly for weights
    with zero fundamental-weight part.
    """
    datum = validate_datum(datum)
    tables = build_root_system(datum.group)
    marked = datum.marking.flat_indices
    survivors: list[tuple[tuple[int, ...], Weight]] = []
    for root in demazure_roots(datum.fiber_fan):
        ambient = _ambient_image(datum, root.m)
        if all(ambient.fw[i] >= 0 for i in marked):
            survivors.append((root.m, ambient))
    kept = {m for m, _ in survivors}
    out = []
    for m, ambient in survivors:
        kind = SEMISIMPLE if tuple(-v for v in m) in kept else UNIPOTENT
        out.append(BRoot(m, ambient, kind, weyl_dim(tables, ambient)))
    return tuple(sorted(out, key=lambda r: r.m_fiber))


def extendable_fiber_roots(datum: HorosphericalDatum) -> Extendability:
    """Partition the fiber roots by whether their additive action extends.

    An extending root acts compatibly with the whole group (not just the
    Borel) exactly when all of its marked pairings vanish, i.e. when the
    fundamental-weight part of the ambient weight is zero.
    """
    datum = validate_datum(datum)
    surviving = {r.m_fiber: r for r in b_plus_roots(datum)}
    extends = []
    rest = []
    for root in demazure_roots(datum.fiber_fan):
        hit = surviving.get(root.m)
        if hit is not None:
            extends.append(ExtendingRoot(root.m, hit.m_ambient.is_fw_zero))
        else:
            rest.append(root.m)
    return Extendability(tuple(extends), tuple(rest))


def _levi_note(g_surjects: bool, roots: tuple[BRoot, ...]) -> str:
    labels = ", ".join(str(r.m_fiber) for r in roots if r.kind == SEMISIMPLE) or "none"
    if g_surjects:
        return (
            "Levi subgroup generated by the acting group, its equivariant torus, "
            f"and the semisimple root subgroups ({labels})"
        )
    return (
        "dim_levi is numerical only: the acting group does not surject onto "
        "Aut0(G/P), so the Levi generation statement requires enlarging the "
        "acting group (not computed here); semisimple roots: " + labels
    )


def aut_report(datum: HorosphericalDatum) -> AutReport:
    """Assemble the dimension and reductivity report.

    dim Aut0(X) = dim Aut0(G/P) + dim S + #semisimple roots
                  + sum of dim V(m) over unipotent roots,
    the unipotent summands being the Lie algebra of the unipotent radical.
    """
    datum = validate_datum(datum)
    dim_gp, g_surjects = aut_dim_homogeneous(datum.group, datum.marking)
    roots = b_plus_roots(datum)
    n_ss = sum(1 for r in roots if r.kind == SEMISIMPLE)
    unip = tuple(r.v_dim for r in roots if r.kind == UNIPOTENT)
    dim_s = datum.fiber_fan.dim
    total = dim_gp + dim_s + n_ss + sum(unip)
    return AutReport(
        dim_aut_gp=dim_gp,
        g_surjects=g_surjects,
        dim_s=dim_s,
        roots=roots,
        n_semisimple=n_ss,
        unipotent_dims=unip,
        dim_aut_total=total,
        dim_unipotent_radical=sum(unip),
        dim_levi=total - sum(unip),
        reductive=not unip,
        levi_note=_levi_note(g_surjects, roots),
    )


def torus_datum(fan: Fan) -> HorosphericalDatum:
    """Degenerate datum with a trivial group: the variety is the toric fiber.

    The report then reproduces the toric one: dim = dim S + #roots and the
    semisimple/unipotent split agrees with the toric classification.
    """
    spec = RootSystemSpec((), torus_rank=fan.dim)
    marking = ParabolicMarking.of(spec, [])
    emb = tuple(
        Weight((), tuple(1 if j == i else 0 for j in range(fan.dim)))
        for i in range(fan.dim)
    )
    return HorosphericalDatum(spec, marking, fan, emb)
