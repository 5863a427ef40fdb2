"""Root-system data for simple and semisimple Cartan types.

Everything uses Bourbaki numbering. Weights live in the fundamental-weight
basis, roots in the simple-root basis, and the Cartan matrix convention is
``a[i][j] = <alpha_i, alpha_j^vee>`` so that row ``i`` is ``alpha_i`` written
in fundamental weights (G2 is ``[[2, -1], [-3, 2]]`` with ``alpha_1`` short).
"""
from __future__ import annotations

import functools
import math
import re
from collections import deque
from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

from ._exact import inverse

FAMILIES = "ABCDEFG"

CartanMatrix = tuple[tuple[int, ...], ...]


class InvalidTypeError(ValueError):
    """Raised for malformed Cartan types."""


class AmbientMismatchError(ValueError):
    """Raised when weights or roots of different types are combined."""


@dataclass(frozen=True, order=True)
class SimpleType:
    family: str
    rank: int

    def __post_init__(self) -> None:
        f, n = self.family, self.rank
        ok = (
            f in FAMILIES and isinstance(n, int) and (
                (f == "A" and n >= 1)
                or (f in "BC" and n >= 2)
                or (f == "D" and n >= 3)
                or (f == "E" and n in (6, 7, 8))
                or (f == "F" and n == 4)
                or (f == "G" and n == 2)
            )
        )
        if not ok:
            raise InvalidTypeError(f"invalid type: {f}{n}")

    def __str__(self) -> str:
        return f"{self.family}{self.rank}"

    @classmethod
    def parse(cls, text: str) -> SimpleType:
        m = re.fullmatch(r"\s*([A-Ga-g])_?(\d+)\s*", text)
        if not m:
            raise InvalidTypeError(f"invalid type: {text!r}")
        return cls(m.group(1).upper(), int(m.group(2)))


@dataclass(frozen=True)
class SemisimpleType:
    """Ordered direct sum of simple types; node ``k`` of factor ``j`` is
    global node ``offsets[j] + k``."""

    factors: tuple[SimpleType, ...] = ()

    @property
    def rank(self) -> int:
        return sum(f.rank for f in self.factors)

    @property
    def offsets(self) -> tuple[int, ...]:
        out, acc = [], 0
        for f in self.factors:
            out.append(acc)
            acc += f.rank
        return tuple(out)

    def factor_nodes(self, j: int) -> range:
        off = self.offsets[j]
        return range(off + 1, off + self.factors[j].rank + 1)

    def __str__(self) -> str:
        return "+".join(map(str, self.factors)) or "0"

    @classmethod
    def parse(cls, text: str) -> SemisimpleType:
        text = text.strip()
        if text in ("", "0"):
            return cls(())
        return cls(tuple(SimpleType.parse(p) for p in re.split(r"[+x×]", text)))


def as_semisimple(t: SimpleType | SemisimpleType) -> SemisimpleType:
    return SemisimpleType((t,)) if isinstance(t, SimpleType) else t


# --------------------------------------------------------------------------
# Cartan matrices

def _simple_cartan(t: SimpleType) -> list[list[int]]:
    n = t.rank
    a = [[2 if i == j else 0 for j in range(n)] for i in range(n)]

    def link(i: int, j: int, aij: int = -1, aji: int = -1) -> None:
        a[i - 1][j - 1] = aij
        a[j - 1][i - 1] = aji

    f = t.family
    if f in "ABC":
        for i in range(1, n):
            link(i, i + 1)
        if f == "B":
            link(n - 1, n, -2, -1)
        elif f == "C":
            link(n - 1, n, -1, -2)
    elif f == "D":
        for i in range(1, n - 1):
            link(i, i + 1)
        link(n - 2, n)
    elif f == "E":
        for i, j in [(1, 3), (3, 4), (4, 5), (2, 4)] + [(k, k + 1) for k in range(5, n)]:
            link(i, j)
    elif f == "F":
        link(1, 2)
        link(2, 3, -2, -1)
        link(3, 4)
    else:
        link(1, 2, -1, -3)
    return a


@functools.lru_cache(maxsize=None)
def cartan_matrix(t: SimpleType | SemisimpleType) -> CartanMatrix:
    """Block-diagonal Bourbaki Cartan matrix.

    >>> cartan_matrix(SimpleType("G", 2))
    ((2, -1), (-3, 2))
    """
    t = as_semisimple(t)
    n = t.rank
    a = [[0] * n for _ in range(n)]
    for off, f in zip(t.offsets, t.factors):
        block = _simple_cartan(f)
        for i in range(f.rank):
            for j in range(f.rank):
                a[off + i][off + j] = block[i][j]
    return tuple(map(tuple, a))


@functools.lru_cache(maxsize=None)
def root_lengths(cartan: CartanMatrix) -> tuple[int, ...]:
    """Squared lengths of simple roots, shortest root of each component = 1."""
    n = len(cartan)
    d: list[Fraction | None] = [None] * n
    for start in range(n):
        if d[start] is not None:
            continue
        comp = [start]
        d[start] = Fraction(1)
        queue = deque([start])
        while queue:
            i = queue.popleft()
            for j in range(n):
                if j != i and cartan[i][j] != 0 and d[j] is None:
                    # a_ij / a_ji = |alpha_i|^2 / |alpha_j|^2
                    d[j] = d[i] * Fraction(cartan[j][i], cartan[i][j])
                    comp.append(j)
                    queue.append(j)
        low = min(d[k] for k in comp)
        for k in comp:
            d[k] = d[k] / low
    assert all(x is not None and x.denominator == 1 for x in d)
    return tuple(int(x) for x in d)


# --------------------------------------------------------------------------
# roots

@dataclass(frozen=True, order=True)
class RootVec:
    coords: tuple[int, ...]
    ambient: SemisimpleType | None = None

    @property
    def height(self) -> int:
        return sum(self.coords)

    def is_positive(self) -> bool:
        return all(c >= 0 for c in self.coords) and any(c > 0 for c in self.coords)


@functools.lru_cache(maxsize=None)
def positive_root_coords(cartan: CartanMatrix) -> tuple[tuple[int, ...], ...]:
    """Positive roots by reflection closure of the simple roots, sorted by
    height then lexicographically."""
    n = len(cartan)
    simple = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    seen = set(simple)
    queue = deque(simple)
    while queue:
        beta = queue.popleft()
        for i in range(n):
            # <beta, alpha_i^vee> = sum_j c_j a_ji
            p = sum(c * cartan[j][i] for j, c in enumerate(beta) if c)
            if p == 0:
                continue
            gamma = tuple(c - p * (k == i) for k, c in enumerate(beta))
            if min(gamma) >= 0 and gamma not in seen:
                seen.add(gamma)
                queue.append(gamma)
    return tuple(sorted(seen, key=lambda r: (sum(r), r)))


def positive_roots(t: SimpleType | SemisimpleType) -> list[RootVec]:
    t = as_semisimple(t)
    return [RootVec(r, t) for r in positive_root_coords(cartan_matrix(t))]


@functools.lru_cache(maxsize=None)
def positive_coroot_coords(cartan: CartanMatrix) -> tuple[tuple[int, ...], ...]:
    """For each positive root (same order), its coroot in the simple-coroot basis."""
    d = root_lengths(cartan)
    out = []
    for r in positive_root_coords(cartan):
        norm2 = Fraction(sum(r[i] * r[j] * cartan[i][j] * d[j]
                             for i in range(len(r)) for j in range(len(r))), 2)
        co = [Fraction(c * d[i]) / norm2 for i, c in enumerate(r)]
        assert all(x.denominator == 1 for x in co)
        out.append(tuple(int(x) for x in co))
    return tuple(out)


def highest_root(t: SimpleType) -> RootVec:
    """The unique positive root of maximal height.

    >>> highest_root(SimpleType("C", 3)).coords
    (2, 2, 1)
    """
    roots = positive_roots(t)
    top = roots[-1]
    assert sum(1 for r in roots if r.height == top.height) == 1
    return top


def coxeter_number(t: SimpleType) -> int:
    h = highest_root(t).height + 1
    n_roots = 2 * len(positive_root_coords(cartan_matrix(t)))
    if n_roots != h * t.rank:
        raise AssertionError(f"Coxeter number formulas disagree for {t}")
    return h


# --------------------------------------------------------------------------
# weights

@dataclass(frozen=True)
class Weight:
    coords: tuple[int, ...]
    ambient: SemisimpleType

    def __post_init__(self) -> None:
        if len(self.coords) != self.ambient.rank:
            raise AmbientMismatchError(
                f"{len(self.coords)} coordinates for type {self.ambient}")

    def _check(self, other: Weight) -> None:
        if other.ambient != self.ambient:
            raise AmbientMismatchError(f"{self.ambient} vs {other.ambient}")

    def __add__(self, other: Weight) -> Weight:
        self._check(other)
        return Weight(tuple(a + b for a, b in zip(self.coords, other.coords)), self.ambient)

    def __sub__(self, other: Weight) -> Weight:
        return self + (-other)

    def __neg__(self) -> Weight:
        return Weight(tuple(-a for a in self.coords), self.ambient)

    def is_dominant(self) -> bool:
        return all(c >= 0 for c in self.coords)

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.coords)) + ")"


def fundamental_weight(t: SimpleType | SemisimpleType, i: int) -> Weight:
    t = as_semisimple(t)
    if not 1 <= i <= t.rank:
        raise IndexError(f"node {i} out of range for {t}")
    return Weight(tuple(int(k == i) for k in range(1, t.rank + 1)), t)


def rho(t: SimpleType | SemisimpleType) -> Weight:
    t = as_semisimple(t)
    return Weight((1,) * t.rank, t)


def zero_weight(t: SimpleType | SemisimpleType) -> Weight:
    t = as_semisimple(t)
    return Weight((0,) * t.rank, t)


def pairing(mu: Weight, alpha: RootVec) -> Fraction:
    """``<mu, alpha^vee>``, exact."""
    if alpha.ambient is not None and alpha.ambient != mu.ambient:
        raise AmbientMismatchError(f"{mu.ambient} vs {alpha.ambient}")
    if len(alpha.coords) != len(mu.coords):
        raise AmbientMismatchError("rank mismatch")
    cartan = cartan_matrix(mu.ambient)
    d = root_lengths(cartan)
    r = alpha.coords
    norm2 = Fraction(sum(r[i] * r[j] * cartan[i][j] * d[j]
                         for i in range(len(r)) for j in range(len(r))), 2)
    return sum((Fraction(c * d[i] * mu.coords[i]) for i, c in enumerate(r)),
               Fraction(0)) / norm2


@functools.lru_cache(maxsize=None)
def _rho_check_vector(cartan: CartanMatrix) -> tuple[Fraction, ...]:
    # mu_j = sum_i c_i a_ij, so c = (A^T)^{-1} mu and <rho^vee, mu> = sum_i c_i
    n = len(cartan)
    if n == 0:
        return ()
    inv_t = inverse([[cartan[j][i] for j in range(n)] for i in range(n)])
    return tuple(sum((inv_t[i][j] for i in range(n)), Fraction(0)) for j in range(n))


def to_root_coords(mu: Weight) -> tuple[Fraction, ...]:
    """Coordinates of ``mu`` in the simple-root basis."""
    cartan = cartan_matrix(mu.ambient)
    n = len(cartan)
    inv_t = inverse([[cartan[j][i] for j in range(n)] for i in range(n)])
    return tuple(sum((inv_t[i][j] * mu.coords[j] for j in range(n)), Fraction(0))
                 for i in range(n))


def rho_check_pairing(mu: Weight) -> Fraction:
    """``<rho^vee, mu>``: the sum of the simple-root coordinates of ``mu``.

    >>> t = SimpleType("A", 2)
    >>> rho_check_pairing(fundamental_weight(t, 1))
    Fraction(1, 1)
    """
    v = _rho_check_vector(cartan_matrix(mu.ambient))
    return sum((x * c for x, c in zip(v, mu.coords) if c), Fraction(0))


# --------------------------------------------------------------------------
# degrees

@dataclass(frozen=True)
class DegreeMultiset:
    degrees: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "degrees", tuple(sorted(self.degrees)))

    @property
    def product(self) -> int:
        return math.prod(self.degrees)

    @property
    def exponent_sum(self) -> int:
        return sum(d - 1 for d in self.degrees)

    def __or__(self, other: DegreeMultiset) -> DegreeMultiset:
        return DegreeMultiset(self.degrees + other.degrees)

    def even(self) -> DegreeMultiset:
        return DegreeMultiset(tuple(d for d in self.degrees if d % 2 == 0))


def _degree_table(t: SimpleType) -> tuple[int, ...]:
    n = t.rank
    return {
        "A": lambda: tuple(range(2, n + 2)),
        "B": lambda: tuple(range(2, 2 * n + 1, 2)),
        "C": lambda: tuple(range(2, 2 * n + 1, 2)),
        "D": lambda: tuple(range(2, 2 * n - 1, 2)) + (n,),
        "E": lambda: {6: (2, 5, 6, 8, 9, 12),
                      7: (2, 6, 8, 10, 12, 14, 18),
                      8: (2, 8, 12, 14, 18, 20, 24, 30)}[n],
        "F": lambda: (2, 6, 8, 12),
        "G": lambda: (2, 6),
    }[t.family]()


@functools.lru_cache(maxsize=None)
def _validated_degrees(t: SimpleType) -> DegreeMultiset:
    from .weyl import weyl_group_order

    dm = DegreeMultiset(_degree_table(t))
    n_pos = len(positive_root_coords(cartan_matrix(t)))
    if dm.exponent_sum != n_pos or dm.product != weyl_group_order(t):
        raise AssertionError(f"degree table for {t} fails |W| / |positive roots| check")
    return dm


def weyl_degrees(t: SimpleType | SemisimpleType) -> DegreeMultiset:
    """Degrees of the basic invariants, as a union over simple factors."""
    out = DegreeMultiset(())
    for f in as_semisimple(t).factors:
        out = out | _validated_degrees(f)
    return out


# --------------------------------------------------------------------------
# subdiagrams and type identification

class Component(NamedTuple):
    """A connected subdiagram: ``nodes[k]`` is the global node that plays
    Bourbaki node ``k + 1`` of ``type``."""

    type: SimpleType
    nodes: tuple[int, ...]


def _identify(cartan: Sequence[Sequence[int]], nodes: list[int]) -> Component:
    # nodes are 1-based global indices forming a connected subdiagram
    def a(i: int, j: int) -> int:
        return cartan[i - 1][j - 1]

    nbrs = {i: sorted(j for j in nodes if j != i and a(i, j) != 0) for i in nodes}
    n = len(nodes)
    if n == 1:
        return Component(SimpleType("A", 1), (nodes[0],))

    def longer(x: int, y: int) -> bool:
        return abs(a(x, y)) > abs(a(y, x))

    def path_from(end: int) -> list[int]:
        order, prev = [end], None
        while True:
            nxt = [j for j in nbrs[order[-1]] if j != prev]
            if not nxt:
                return order
            prev = order[-1]
            order.append(nxt[0])

    bonds = {(i, j): a(i, j) * a(j, i) for i in nodes for j in nbrs[i]}
    ends = [i for i in nodes if len(nbrs[i]) == 1]
    branch = [i for i in nodes if len(nbrs[i]) == 3]

    if 3 in bonds.values():
        x, y = nodes
        short, long_ = (x, y) if longer(y, x) else (y, x)
        return Component(SimpleType("G", 2), (short, long_))
    if 2 in bonds.values():
        if n == 2:
            x, y = nodes
            return Component(SimpleType("B", 2), (x, y) if longer(x, y) else (y, x))
        for end in ends:
            order = path_from(end)
            last, before = order[-1], order[-2]
            if bonds[(before, last)] == 2:
                fam = "B" if longer(before, last) else "C"
                return Component(SimpleType(fam, n), tuple(order))
        order = path_from(ends[0])
        if not longer(order[1], order[2]):
            order.reverse()
        return Component(SimpleType("F", 4), tuple(order))
    if not branch:
        return Component(SimpleType("A", n), tuple(path_from(min(ends))))
    (b,) = branch
    arms = []
    for start in nbrs[b]:
        arm, prev = [start], b
        while True:
            nxt = [j for j in nbrs[arm[-1]] if j != prev]
            if not nxt:
                break
            prev = arm[-1]
            arm.append(nxt[0])
        arms.append(arm)
    arms.sort(key=lambda arm: (len(arm), arm[0]))
    lens = tuple(len(x) for x in arms)
    if lens[:2] == (1, 1):
        order = list(reversed(arms[2])) + [b, arms[0][0], arms[1][0]]
        return Component(SimpleType("D", n), tuple(order))
    if lens[:2] == (1, 2) and lens[2] in (2, 3, 4):
        two, rest = arms[1], arms[2]
        order = [two[1], arms[0][0], two[0], b] + rest
        return Component(SimpleType("E", n), tuple(order))
    raise InvalidTypeError("subdiagram is not of finite type")


def components(cartan: Sequence[Sequence[int]], nodes: Iterable[int]) -> tuple[Component, ...]:
    """Connected components of the subdiagram on ``nodes`` with their types,
    ordered by smallest global node."""
    remaining = sorted(set(nodes))
    out = []
    seen: set[int] = set()
    for start in remaining:
        if start in seen:
            continue
        comp, queue = [start], deque([start])
        seen.add(start)
        while queue:
            i = queue.popleft()
            for j in remaining:
                if j not in seen and cartan[i - 1][j - 1] != 0:
                    seen.add(j)
                    comp.append(j)
                    queue.append(j)
        c = _identify(cartan, sorted(comp))
        expected = _simple_cartan(c.type)
        got = [[cartan[i - 1][j - 1] for j in c.nodes] for i in c.nodes]
        if got != expected:
            raise AssertionError(f"misidentified subdiagram as {c.type}")
        out.append(c)
    return tuple(out)


def subdiagram_type(t: SimpleType | SemisimpleType, nodes: Iterable[int]) -> SemisimpleType:
    return SemisimpleType(tuple(c.type for c in components(cartan_matrix(t), nodes)))


def normalize(t: SimpleType | SemisimpleType) -> tuple[SimpleType, ...]:
    """Sorted isomorphism-class representatives (C2 -> B2, D3 -> A3)."""
    out = []
    for f in as_semisimple(t).factors:
        if (f.family, f.rank) == ("C", 2):
            f = SimpleType("B", 2)
        elif (f.family, f.rank) == ("D", 3):
            f = SimpleType("A", 3)
        out.append(f)
    return tuple(sorted(out))


def langlands_dual(t: SimpleType) -> SimpleType:
    """B and C are exchanged; every other diagram is self-dual."""
    swap = {"B": "C", "C": "B"}
    return SimpleType(swap.get(t.family, t.family), t.rank)
