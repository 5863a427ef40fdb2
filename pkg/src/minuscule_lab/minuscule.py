"""Minuscule weights, their graded weight sets, and Dynkin polynomials.

The Dynkin polynomial of a minuscule ``lam`` is computed three ways: summing
``q^deg`` over the principally graded orbit, as a product over positive roots,
and from the degrees of ``W`` and ``W_lam``. The q = -1 value is compared with
a direct count of weights fixed by ``w0``.
"""
from __future__ import annotations

import functools
import itertools
from collections import Counter
from collections.abc import Sequence
from dataclasses import dataclass

from ._exact import sparse_rank
from .polyarith import CycloRatio, IntPoly, even_part, ratio_to_poly
from .rootsys import (
    SemisimpleType,
    SimpleType,
    Weight,
    as_semisimple,
    cartan_matrix,
    fundamental_weight,
    positive_coroot_coords,
    positive_root_coords,
    rho_check_pairing,
    weyl_degrees,
)
from .weyl import (
    NodePermutation,
    NotDominantError,
    WeightOrbit,
    apply_w0,
    orbit,
    stabilizer_subtype,
)


class NotMinusculeError(ValueError):
    pass


class InvariantViolation(AssertionError):
    """A property guaranteed by the theory failed to hold."""


# nodes of minuscule fundamental weights, Bourbaki numbering
MINUSCULE_NODES = {
    "A": lambda n: list(range(1, n + 1)),
    "B": lambda n: [n],
    "C": lambda n: [1],
    "D": lambda n: [1, n - 1, n],
    "E": lambda n: {6: [1, 6], 7: [7], 8: []}[n],
    "F": lambda n: [],
    "G": lambda n: [],
}


def _require_dominant(lam: Weight) -> None:
    if not lam.is_dominant():
        raise NotDominantError(f"{lam} is not dominant")


def is_minuscule(lam: Weight) -> bool:
    """``<lam, alpha^vee>`` lies in {0, 1} for every positive root.

    >>> from .rootsys import SimpleType, fundamental_weight
    >>> is_minuscule(fundamental_weight(SimpleType("C", 3), 1))
    True
    """
    _require_dominant(lam)
    mu = lam.coords
    return all(sum(c * m for c, m in zip(co, mu) if m) <= 1
               for co in positive_coroot_coords(cartan_matrix(lam.ambient)))


def is_minuscule_by_dominance(lam: Weight) -> bool:
    """No positive root ``alpha`` with ``lam - alpha`` dominant."""
    _require_dominant(lam)
    cartan = cartan_matrix(lam.ambient)
    for r in positive_root_coords(cartan):
        # alpha in fundamental weights: sum_i c_i * (row i of the Cartan matrix)
        diff = [m - sum(c * cartan[i][j] for i, c in enumerate(r) if c)
                for j, m in enumerate(lam.coords)]
        if min(diff) >= 0:
            return False
    return True


def is_minuscule_by_table(lam: Weight) -> bool:
    """Classification lookup, factor by factor."""
    _require_dominant(lam)
    t = lam.ambient
    for j, f in enumerate(t.factors):
        part = [lam.coords[k - 1] for k in t.factor_nodes(j)]
        support = [i for i, c in enumerate(part, 1) if c]
        if not support:
            continue
        if len(support) > 1 or part[support[0] - 1] != 1:
            return False
        if support[0] not in MINUSCULE_NODES[f.family](f.rank):
            return False
    return True


def list_minuscule(t: SimpleType | SemisimpleType) -> list[Weight]:
    """Minuscule fundamental weights in node order (zero excluded)."""
    t = as_semisimple(t)
    return [w for w in (fundamental_weight(t, i) for i in range(1, t.rank + 1))
            if is_minuscule(w)]


def lambda_star(lam: Weight) -> Weight:
    """``-w0(lam)``, through the reduced word."""
    return -apply_w0(lam)


@dataclass(frozen=True)
class GradedOrbit:
    orbit: WeightOrbit
    degrees: tuple[int, ...]
    lam: Weight
    lam_star: Weight

    def __len__(self) -> int:
        return len(self.orbit)

    def degree(self, mu: Weight) -> int:
        return self.degrees[self.orbit.index[mu]]

    @property
    def top_degree(self) -> int:
        return max(self.degrees)

    def rank_sizes(self) -> tuple[int, ...]:
        cnt = Counter(self.degrees)
        return tuple(cnt.get(k, 0) for k in range(self.top_degree + 1))

    def poincare(self) -> IntPoly:
        return IntPoly.from_exponents(self.degrees)


def _check_graded(go: GradedOrbit) -> None:
    if go.degrees[go.orbit.index[-go.lam_star]] != 0:
        raise InvariantViolation("lowest weight not in degree 0")
    if any(d < 0 for d in go.degrees):
        raise InvariantViolation("negative principal degree")
    top = rho_check_pairing(go.lam + go.lam_star)
    if top.denominator != 1 or go.top_degree != top:
        raise InvariantViolation("top degree differs from <rho^vee, lam + lam*>")
    sizes = go.rank_sizes()
    if sizes[0] != 1 or sizes[-1] != 1:
        raise InvariantViolation("graded orbit lacks unique bottom/top")
    if sizes != sizes[::-1]:
        raise InvariantViolation("rank sizes are not palindromic")


@functools.lru_cache(maxsize=None)
def graded_orbit(lam: Weight) -> GradedOrbit:
    """``wt(lam)`` with principal degrees ``<rho^vee, mu + lam*>``, ordered by
    degree then coordinates (descending)."""
    _require_dominant(lam)
    if not is_minuscule(lam):
        raise NotMinusculeError(f"{lam} is not minuscule for {lam.ambient}")
    star = lambda_star(lam)
    pairs = []
    for mu in orbit(lam):
        k = rho_check_pairing(mu + star)
        if k.denominator != 1:
            raise InvariantViolation(f"non-integral principal degree at {mu}")
        pairs.append((int(k), mu))
    pairs.sort(key=lambda p: (p[0], tuple(-c for c in p[1].coords)))
    go = GradedOrbit(WeightOrbit(tuple(mu for _, mu in pairs)),
                     tuple(k for k, _ in pairs), lam, star)
    _check_graded(go)
    return go


def dynkin_sum(lam: Weight) -> IntPoly:
    """Rank generating function of the graded weight set."""
    return graded_orbit(lam).poincare()


def dynkin_product(lam: Weight) -> CycloRatio:
    """``prod_{alpha>0} (1 - q^{<rho+lam, alpha^vee>}) / (1 - q^{<rho, alpha^vee>})``."""
    _require_dominant(lam)
    num, den = [], []
    for co in positive_coroot_coords(cartan_matrix(lam.ambient)):
        h = sum(co)
        num.append(h + sum(c * m for c, m in zip(co, lam.coords) if m))
        den.append(h)
    return CycloRatio(tuple(num), tuple(den))


def dynkin_even(lam: Weight) -> IntPoly:
    """Even Dynkin polynomial: the product form restricted to even exponents."""
    p = ratio_to_poly(even_part(dynkin_product(lam)))
    if not p.is_even():
        raise InvariantViolation("even Dynkin polynomial has odd terms")
    if is_minuscule(lam) and p(1) != dynkin_sum(lam)(-1):
        raise InvariantViolation("D_ev(1) != D(-1)")
    return p


def w0_delta_permutation(go: GradedOrbit, delta: NodePermutation | None = None) -> tuple[int, ...]:
    """Indices of ``w0(delta(mu))`` for each ``mu`` in the graded orbit."""
    t = go.lam.ambient
    if delta is not None and not delta.preserves(cartan_matrix(t)):
        raise ValueError("delta does not preserve the Cartan matrix")
    idx = go.orbit.index
    out = []
    for mu in go.orbit:
        nu = delta.apply(mu) if delta is not None else mu
        out.append(idx[apply_w0(nu)])
    return tuple(out)


def fixed_weight_count(lam: Weight, delta: NodePermutation | None = None) -> int:
    """``#{mu in wt(lam) : w0(delta(mu)) = mu}``; ``delta=None`` is the identity."""
    perm = w0_delta_permutation(graded_orbit(lam), delta)
    return sum(1 for i, j in enumerate(perm) if i == j)


@dataclass(frozen=True)
class FibrePermutation:
    ground: GradedOrbit | None
    perm: tuple[int, ...]

    def __post_init__(self) -> None:
        if sorted(self.perm) != list(range(len(self.perm))):
            raise ValueError("not a permutation")

    @classmethod
    def from_w0(cls, go: GradedOrbit, delta: NodePermutation | None = None) -> FibrePermutation:
        return cls(go, w0_delta_permutation(go, delta))

    def is_involution(self) -> bool:
        return all(self.perm[j] == i for i, j in enumerate(self.perm))


def permutation_trace(perm: Sequence[int]) -> int:
    """Trace of the permutation matrix ``P[i][j] = [perm(j) == i]``."""
    n = len(perm)
    matrix = [[int(perm[j] == i) for j in range(n)] for i in range(n)]
    return sum(matrix[i][i] for i in range(n))


def fixed_points(perm: Sequence[int]) -> int:
    return sum(1 for i, j in enumerate(perm) if i == j)


def cycle_count(perm: Sequence[int]) -> int:
    seen = [False] * len(perm)
    cycles = 0
    for i in range(len(perm)):
        if not seen[i]:
            cycles += 1
            j = i
            while not seen[j]:
                seen[j] = True
                j = perm[j]
    return cycles


def coinvariant_dim(f: FibrePermutation | Sequence[int]) -> int:
    """``dim C^X / span{e_x - e_perm(x)}`` by exact rank; also checks that the
    fixed-point count equals the trace of the permutation matrix."""
    perm = f.perm if isinstance(f, FibrePermutation) else tuple(f)
    n = len(perm)
    rows = ({i: 1, perm[i]: -1} for i in range(n) if perm[i] != i)
    dim = n - sparse_rank(rows)
    if fixed_points(perm) != permutation_trace(perm):
        raise InvariantViolation("fixed points != trace")
    return dim


def direct_sum(data: Sequence[tuple[SimpleType, Weight | Sequence[int]]]) -> GradedOrbit:
    """Graded orbit of a direct sum, assembled from the factors' graded orbits."""
    factors = tuple(t for t, _ in data)
    total = SemisimpleType(factors)
    parts = []
    for t, w in data:
        lam = w if isinstance(w, Weight) else Weight(tuple(w), as_semisimple(t))
        if lam.ambient != as_semisimple(t):
            raise ValueError(f"weight ambient {lam.ambient} does not match {t}")
        parts.append(graded_orbit(lam))
    pairs = []
    for combo in itertools.product(*(zip(p.degrees, p.orbit) for p in parts)):
        coords = tuple(itertools.chain.from_iterable(mu.coords for _, mu in combo))
        pairs.append((sum(k for k, _ in combo), Weight(coords, total)))
    pairs.sort(key=lambda p: (p[0], tuple(-c for c in p[1].coords)))

    def glue(ws: Sequence[Weight]) -> Weight:
        return Weight(tuple(itertools.chain.from_iterable(w.coords for w in ws)), total)

    go = GradedOrbit(WeightOrbit(tuple(mu for _, mu in pairs)), tuple(k for k, _ in pairs),
                     glue([p.lam for p in parts]), glue([p.lam_star for p in parts]))
    _check_graded(go)
    return go


@dataclass(frozen=True)
class DegreePoincare:
    full: CycloRatio
    even: CycloRatio


def levi_degrees(lam: Weight):
    """Degrees of ``W_lam`` acting on the full Cartan: the parabolic's degrees
    plus a degree-1 invariant per dimension of the Levi centre."""
    sub = weyl_degrees(stabilizer_subtype(lam))
    centre = lam.ambient.rank - stabilizer_subtype(lam).rank
    return sub.degrees + (1,) * centre


def degrees_poincare(lam: Weight) -> DegreePoincare:
    """``prod_{D(W)} (1-q^d) / prod_{D(W_lam)} (1-q^d)`` and its even filtering."""
    _require_dominant(lam)
    full = CycloRatio(weyl_degrees(lam.ambient).degrees, levi_degrees(lam))
    dp = DegreePoincare(full, even_part(full))
    if is_minuscule(lam):
        if ratio_to_poly(dp.full) != dynkin_sum(lam):
            raise InvariantViolation("degree ratio differs from the Dynkin polynomial")
        if ratio_to_poly(dp.even) != dynkin_even(lam):
            raise InvariantViolation("even degree ratio differs from D_ev")
    return dp


def freeness_split(lam: Weight) -> bool:
    """Freeness criterion for the split class: ``D_ev(1) != 0``."""
    free = dynkin_even(lam)(1) != 0
    if free != (fixed_weight_count(lam) != 0):
        raise InvariantViolation("D_ev(1) != 0 disagrees with fixed-weight nonemptiness")
    return free


def minuscule_sweep(max_rank: int = 8, extra: Sequence[SimpleType] = ()) -> list[Weight]:
    """Every minuscule fundamental weight of every simple type with rank at most
    ``max_rank`` (plus ``extra`` types), in a fixed order."""
    types = list(simple_types_up_to(max_rank))
    for t in extra:
        if t not in types:
            types.append(t)
    return [w for t in types for w in list_minuscule(t)]


def simple_types_up_to(max_rank: int) -> list[SimpleType]:
    out = []
    for n in range(1, max_rank + 1):
        for fam in "ABCDEFG":
            try:
                out.append(SimpleType(fam, n))
            except ValueError:
                pass
    return out

