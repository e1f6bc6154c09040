"""Exact root-system arithmetic for reductive groups.

Conventions, fixed once and used everywhere:

* Dynkin nodes are numbered 1..l per factor in Bourbaki order.  The stored
  Cartan matrix has ``C[i][j] = <alpha_j, alpha_i^vee>``, so the
  fundamental-weight coordinates of a root written as ``sum c_j alpha_j``
  are the matrix-vector product ``C @ c``.
* Short/long data per type: B_l has alpha_l short; C_l has alpha_1..alpha_{l-1}
  short and alpha_l long; F_4 has alpha_3, alpha_4 short; G_2 has alpha_1 short.
* B_2 input is accepted and silently stored as C_2 with the node relabeling
  1<->2 (B_2 and C_2 are the same group; a single convention keeps the
  exceptional-parabolic table free of low-rank special cases).  Use
  :meth:`RootSystemSpec.to_internal_node` / :meth:`to_internal_fw` to convert
  node-indexed data written against the raw B_2 numbering.

Weights are integer vectors over the fundamental weights of the semisimple
part (factor-blocked) plus coordinates on a central torus.  All arithmetic is
exact; dimensions are computed as integers.
"""

from __future__ import annotations

from collections import namedtuple
from dataclasses import dataclass, field
from functools import lru_cache, cached_property
from itertools import combinations
from math import prod

from .errors import (
    DimensionMismatch,
    InvalidMarking,
    InvalidRank,
    NotACharacterOfP,
    NotDominant,
)

# (min rank, max rank or None) per Cartan-Killing type
_RANK_BOUNDS = {
    "A": (1, None),
    "B": (2, None),
    "C": (2, None),
    "D": (4, None),
    "E": (6, 8),
    "F": (4, 4),
    "G": (2, 2),
}

AMPLE = "ample"
NEF_NOT_AMPLE = "nef_not_ample"
NOT_NEF = "not_nef"


def _edges(typ: str, l: int) -> list[tuple[int, int]]:
    """Dynkin-diagram edges, 0-based node indices."""
    chain = [(i, i + 1) for i in range(l - 1)]
    if typ == "D":
        return chain[: l - 2] + [(l - 3, l - 1)]
    if typ == "E":
        # Bourbaki: node 2 hangs off node 4; the rest is the chain 1-3-4-5-...
        edges = [(0, 2), (1, 3), (2, 3), (3, 4), (4, 5)]
        edges += [(i, i + 1) for i in range(5, l - 1)]
        return edges
    return chain


def _symmetrizer(typ: str, l: int) -> tuple[int, ...]:
    """d_i = (alpha_i, alpha_i)/2 with short roots normalized to 1."""
    if typ == "B":
        return tuple([2] * (l - 1) + [1])
    if typ == "C":
        return tuple([1] * (l - 1) + [2])
    if typ == "F":
        return (2, 2, 1, 1)
    if typ == "G":
        return (1, 3)
    return tuple([1] * l)


def _cartan_matrix(typ: str, l: int) -> tuple[tuple[int, ...], ...]:
    d = _symmetrizer(typ, l)
    C = [[2 if i == j else 0 for j in range(l)] for i in range(l)]
    for i, j in _edges(typ, l):
        # (alpha_i, alpha_j) = -max(d_i, d_j) on every Dynkin edge
        m = max(d[i], d[j])
        C[i][j] = -m // d[i]
        C[j][i] = -m // d[j]
    return tuple(tuple(row) for row in C)


def _positive_roots(cartan: tuple[tuple[int, ...], ...]) -> tuple[tuple[int, ...], ...]:
    """All positive roots in simple-root coordinates, by height induction.

    beta + alpha_i is a root iff the alpha_i-string through beta goes at
    least one step up, i.e. q - <beta, alpha_i^vee> >= 1 where q is the
    number of steps down.  Roots of lower height are always known first.
    """
    l = len(cartan)
    simples = [tuple(1 if j == i else 0 for j in range(l)) for i in range(l)]
    roots = set(simples)
    frontier = list(simples)
    while frontier:
        new = []
        for beta in frontier:
            for i in range(l):
                pairing = sum(cartan[i][j] * beta[j] for j in range(l))
                q = 0
                gamma = list(beta)
                gamma[i] -= 1
                while tuple(gamma) in roots:
                    q += 1
                    gamma[i] -= 1
                if q - pairing >= 1:
                    up = list(beta)
                    up[i] += 1
                    up = tuple(up)
                    if up not in roots:
                        roots.add(up)
                        new.append(up)
        frontier = new
    return tuple(sorted(roots, key=lambda r: (sum(r), r)))


@dataclass(frozen=True)
class RootSystemSpec:
    """A reductive group: ordered simple factors plus a central torus."""

    simple_factors: tuple[tuple[str, int], ...]
    torus_rank: int = 0
    node_maps: tuple[tuple[int, ...], ...] = field(
        init=False, compare=False, repr=False, default=()
    )

    def __post_init__(self):
        factors = []
        maps = []
        for entry in self.simple_factors:
            typ, rnk = entry
            typ = str(typ)
            if typ not in _RANK_BOUNDS or not isinstance(rnk, int) or isinstance(rnk, bool):
                raise InvalidRank(f"unknown factor {entry!r}")
            lo, hi = _RANK_BOUNDS[typ]
            if rnk < lo or (hi is not None and rnk > hi):
                raise InvalidRank(f"{typ}_{rnk} is outside the rank bounds")
            if typ == "B" and rnk == 2:
                factors.append(("C", 2))
                maps.append((2, 1))
            else:
                factors.append((typ, rnk))
                maps.append(tuple(range(1, rnk + 1)))
        if not isinstance(self.torus_rank, int) or isinstance(self.torus_rank, bool) or self.torus_rank < 0:
            raise InvalidRank(f"torus rank must be a non-negative integer, got {self.torus_rank!r}")
        object.__setattr__(self, "simple_factors", tuple(factors))
        object.__setattr__(self, "node_maps", tuple(maps))

    @property
    def rank_total(self) -> int:
        return sum(r for _, r in self.simple_factors)

    @property
    def offsets(self) -> tuple[int, ...]:
        out = []
        off = 0
        for _, r in self.simple_factors:
            out.append(off)
            off += r
        return tuple(out)

    def to_internal_node(self, factor: int, node: int) -> int:
        """Convert a user node index (pre-normalization numbering) to internal."""
        if not (0 <= factor < len(self.simple_factors)):
            raise InvalidMarking(f"no factor with index {factor}")
        if not (1 <= node <= self.simple_factors[factor][1]):
            raise InvalidMarking(
                f"factor {factor} has no node {node} (rank {self.simple_factors[factor][1]})"
            )
        return self.node_maps[factor][node - 1]

    def to_internal_fw(self, fw_coords) -> tuple[int, ...]:
        """Permute fundamental-weight blocks from user numbering to internal."""
        if len(fw_coords) != self.rank_total:
            raise DimensionMismatch(
                f"expected {self.rank_total} fundamental-weight coordinates, got {len(fw_coords)}"
            )
        out = list(fw_coords)
        for f, (off, mp) in enumerate(zip(self.offsets, self.node_maps)):
            for i, target in enumerate(mp):
                out[off + target - 1] = fw_coords[off + i]
        return tuple(out)


@dataclass(frozen=True)
class FactorTables:
    """Derived tables for one simple factor."""

    typ: str
    rank: int
    cartan: tuple[tuple[int, ...], ...]
    sym_d: tuple[int, ...]
    pos_roots: tuple[tuple[int, ...], ...]
    pos_coroots: tuple[tuple[int, ...], ...]
    root_norms: tuple[int, ...]

    @property
    def dim(self) -> int:
        return 2 * len(self.pos_roots) + self.rank

    @cached_property
    def short_simple_nodes(self) -> frozenset[int]:
        """1-based nodes whose simple root is short (empty when simply laced)."""
        mx = max(self.sym_d)
        return frozenset(i + 1 for i, d in enumerate(self.sym_d) if d < mx)

    @cached_property
    def end_nodes(self) -> frozenset[int]:
        """1-based nodes with exactly one Dynkin neighbor."""
        ends = []
        for i in range(self.rank):
            nbrs = sum(1 for j in range(self.rank) if j != i and self.cartan[i][j] != 0)
            if nbrs == 1:
                ends.append(i + 1)
        return frozenset(ends)


@dataclass(frozen=True)
class Coroot:
    """A positive coroot in simple-coroot coordinates.

    `coords` is local to its factor; `vec` is the same data embedded in a
    full-length vector so the pairing with a Weight is a plain dot product.
    """

    factor: int
    coords: tuple[int, ...]
    vec: tuple[int, ...]


@dataclass(frozen=True)
class RootSystemTables:
    spec: RootSystemSpec
    factors: tuple[FactorTables, ...]

    @property
    def total_rank(self) -> int:
        return self.spec.rank_total

    @property
    def offsets(self) -> tuple[int, ...]:
        return self.spec.offsets

    @cached_property
    def pos_coroots(self) -> tuple[Coroot, ...]:
        total = self.total_rank
        out = []
        for f, (ft, off) in enumerate(zip(self.factors, self.offsets)):
            for co in ft.pos_coroots:
                vec = [0] * total
                vec[off : off + ft.rank] = co
                out.append(Coroot(f, co, tuple(vec)))
        return tuple(out)

    @cached_property
    def rho(self) -> "Weight":
        return Weight((1,) * self.total_rank, (0,) * self.spec.torus_rank)

    @property
    def group_dim(self) -> int:
        return sum(ft.dim for ft in self.factors) + self.spec.torus_rank


@lru_cache(maxsize=None)
def build_root_system(spec: RootSystemSpec) -> RootSystemTables:
    """Derive Cartan matrices, positive roots and coroots for every factor."""
    factors = []
    for typ, rnk in spec.simple_factors:
        cartan = _cartan_matrix(typ, rnk)
        d = _symmetrizer(typ, rnk)
        pos = _positive_roots(cartan)
        # coroots are the positive roots of the dual system (transposed Cartan)
        dual = tuple(tuple(cartan[j][i] for j in range(rnk)) for i in range(rnk))
        cos = _positive_roots(dual)
        bform = [[d[i] * cartan[i][j] for j in range(rnk)] for i in range(rnk)]
        norms = tuple(
            sum(r[i] * bform[i][j] * r[j] for i in range(rnk) for j in range(rnk))
            for r in pos
        )
        factors.append(FactorTables(typ, rnk, cartan, d, pos, cos, norms))
    return RootSystemTables(spec, tuple(factors))


@dataclass(frozen=True)
class Weight:
    """Integer weight: fundamental-weight block plus central-torus block."""

    fw: tuple[int, ...]
    torus: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "fw", tuple(int(v) for v in self.fw))
        object.__setattr__(self, "torus", tuple(int(v) for v in self.torus))

    def _check_same_shape(self, other: "Weight"):
        if len(self.fw) != len(other.fw) or len(self.torus) != len(other.torus):
            raise DimensionMismatch("weights live in different lattices")

    def __add__(self, other: "Weight") -> "Weight":
        self._check_same_shape(other)
        return Weight(
            tuple(a + b for a, b in zip(self.fw, other.fw)),
            tuple(a + b for a, b in zip(self.torus, other.torus)),
        )

    def __sub__(self, other: "Weight") -> "Weight":
        return self + (-other)

    def __neg__(self) -> "Weight":
        return self.scale(-1)

    def scale(self, k: int) -> "Weight":
        return Weight(tuple(k * v for v in self.fw), tuple(k * v for v in self.torus))

    @property
    def is_fw_zero(self) -> bool:
        return all(v == 0 for v in self.fw)

    @staticmethod
    def zero(spec: RootSystemSpec) -> "Weight":
        return Weight((0,) * spec.rank_total, (0,) * spec.torus_rank)


@dataclass(frozen=True)
class ParabolicMarking:
    """A set of marked Dynkin nodes, i.e. a parabolic subgroup up to conjugacy."""

    spec: RootSystemSpec
    pairs: frozenset[tuple[int, int]]

    def __post_init__(self):
        object.__setattr__(self, "pairs", frozenset(self.pairs))
        for f, node in self.pairs:
            if not (0 <= f < len(self.spec.simple_factors)):
                raise InvalidMarking(f"marking names nonexistent factor {f}")
            if not (1 <= node <= self.spec.simple_factors[f][1]):
                raise InvalidMarking(f"marking names nonexistent node ({f}, {node})")

    @classmethod
    def of(cls, spec: RootSystemSpec, pairs) -> "ParabolicMarking":
        pairs = [(int(f), int(n)) for f, n in pairs]
        if len(pairs) != len(set(pairs)):
            raise InvalidMarking("duplicate marked node")
        return cls(spec, frozenset(pairs))

    @cached_property
    def flat_indices(self) -> frozenset[int]:
        offs = self.spec.offsets
        return frozenset(offs[f] + node - 1 for f, node in self.pairs)

    def nodes_in_factor(self, f: int) -> frozenset[int]:
        return frozenset(node for ff, node in self.pairs if ff == f)


def _check_weight(spec: RootSystemSpec, w: Weight):
    if len(w.fw) != spec.rank_total or len(w.torus) != spec.torus_rank:
        raise DimensionMismatch(
            f"weight shape ({len(w.fw)}, {len(w.torus)}) does not match "
            f"root system shape ({spec.rank_total}, {spec.torus_rank})"
        )


def coroot_pairing(w: Weight, coroot: Coroot) -> int:
    """Pairing <w, coroot>; torus coordinates never contribute."""
    if len(coroot.vec) != len(w.fw):
        raise DimensionMismatch(
            f"coroot has {len(coroot.vec)} coordinates, weight has {len(w.fw)}"
        )
    return sum(c * v for c, v in zip(coroot.vec, w.fw))


Dominance = namedtuple(
    "Dominance",
    ["dominant_on_marked", "zero_on_unmarked", "strictly_dominant_on_marked"],
)


def is_dominant(w: Weight, marking: ParabolicMarking) -> Dominance:
    """Dominance pattern of a weight against a parabolic marking."""
    _check_weight(marking.spec, w)
    marked = marking.flat_indices
    dom = all(w.fw[i] >= 0 for i in marked)
    strict = all(w.fw[i] > 0 for i in marked)
    zero = all(v == 0 for i, v in enumerate(w.fw) if i not in marked)
    return Dominance(dom, zero, strict)


def weyl_dim(tables: RootSystemTables, w: Weight) -> int:
    """dim V(w) by the Weyl dimension formula, as an exact integer.

    Product over positive coroots of <w+rho, a^vee>/<rho, a^vee>, evaluated
    factor by factor; torus coordinates are ignored.
    """
    _check_weight(tables.spec, w)
    if any(v < 0 for v in w.fw):
        raise NotDominant(f"fundamental-weight coordinates {w.fw} are not all >= 0")
    total = 1
    for ft, off in zip(tables.factors, tables.offsets):
        block = w.fw[off : off + ft.rank]
        num = prod(sum(c * (block[i] + 1) for i, c in enumerate(co)) for co in ft.pos_coroots)
        den = prod(sum(co) for co in ft.pos_coroots)
        q, r = divmod(num, den)
        assert r == 0, "Weyl product must be an integer"
        total *= q
    return total


def _exceptional_dim(ft: FactorTables, nodes: frozenset[int]) -> int | None:
    """Dimension of Aut0 when it is strictly bigger than the acting factor.

    Occurs only for a maximal parabolic (a single marked node), detected by
    root-length and end-node properties of the marked node.
    """
    if len(nodes) != 1:
        return None
    node = next(iter(nodes))
    l = ft.rank
    if ft.typ == "B" and l >= 3 and ft.short_simple_nodes == {node}:
        return (l + 1) * (2 * l + 1)  # adjoint group of type D_{l+1}
    if ft.typ == "C" and node in ft.short_simple_nodes and node in ft.end_nodes:
        return 4 * l * l - 1  # adjoint group of type A_{2l-1}
    if ft.typ == "G" and node in ft.short_simple_nodes:
        return 21  # adjoint group of type B_3
    return None


def aut_dim_homogeneous(spec: RootSystemSpec, marking: ParabolicMarking) -> tuple[int, bool]:
    """(dim Aut0(G/P), does G surject onto it).

    Factors without a marked node act trivially and contribute 0.  A marked
    factor contributes its own dimension unless its marking hits one of the
    three exceptional maximal parabolics, in which case the full automorphism
    group is a bigger adjoint group and the surjection fails.
    """
    if marking.spec != spec:
        raise DimensionMismatch("marking was built for a different root system")
    tables = build_root_system(spec)
    total = 0
    surjects = True
    for f, ft in enumerate(tables.factors):
        nodes = marking.nodes_in_factor(f)
        if not nodes:
            continue
        exc = _exceptional_dim(ft, nodes)
        if exc is None:
            total += ft.dim
        else:
            total += exc
            surjects = False
    return total, surjects


def anticanonical_character(tables: RootSystemTables, marking: ParabolicMarking) -> Weight:
    """Character of the anticanonical bundle of G/P.

    Sum of the positive roots with a strictly positive coefficient on at
    least one marked simple root, expressed in fundamental-weight coordinates.
    """
    if marking.spec != tables.spec:
        raise DimensionMismatch("marking was built for a different root system")
    fw = [0] * tables.total_rank
    for f, (ft, off) in enumerate(zip(tables.factors, tables.offsets)):
        marked_local = [node - 1 for node in marking.nodes_in_factor(f)]
        if not marked_local:
            continue
        total = [0] * ft.rank
        for root in ft.pos_roots:
            if any(root[j] > 0 for j in marked_local):
                for j in range(ft.rank):
                    total[j] += root[j]
        for i in range(ft.rank):
            fw[off + i] = sum(ft.cartan[i][j] * total[j] for j in range(ft.rank))
    w = Weight(tuple(fw), (0,) * tables.spec.torus_rank)
    dom = is_dominant(w, marking)
    assert dom.zero_on_unmarked and dom.strictly_dominant_on_marked
    return w


def line_bundle_positivity(w: Weight, marking: ParabolicMarking) -> str:
    """Classify the homogeneous line bundle of a character of P on G/P.

    Torus coordinates twist the linearization, not the bundle, and are
    ignored.  Raises NotACharacterOfP when an unmarked coefficient is nonzero.
    """
    dom = is_dominant(w, marking)
    if not dom.zero_on_unmarked:
        bad = next(
            i for i, v in enumerate(w.fw) if v != 0 and i not in marking.flat_indices
        )
        raise NotACharacterOfP(f"nonzero coefficient at unmarked node index {bad}")
    if not dom.dominant_on_marked:
        return NOT_NEF
    if dom.strictly_dominant_on_marked:
        return AMPLE
    return NEF_NOT_AMPLE
