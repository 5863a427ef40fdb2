"""Weyl-group actions on weights: reflections, orbits, and the longest element.

Elements of W are never enumerated; the longest element is carried as one
reduced word per type and everything else goes through orbits.
"""
from __future__ import annotations

import functools
from collections import deque
from collections.abc import Sequence
from dataclasses import dataclass

from .rootsys import (
    AmbientMismatchError,
    CartanMatrix,
    SemisimpleType,
    SimpleType,
    Weight,
    as_semisimple,
    cartan_matrix,
    components,
    positive_root_coords,
    weyl_degrees,
)


class NotDominantError(ValueError):
    pass


@dataclass(frozen=True)
class WeylWord:
    letters: tuple[int, ...]
    ambient: SemisimpleType

    def __post_init__(self) -> None:
        n = self.ambient.rank
        if any(not 1 <= i <= n for i in self.letters):
            raise IndexError(f"letter out of range for {self.ambient}")

    def __len__(self) -> int:
        return len(self.letters)


@dataclass(frozen=True)
class NodePermutation:
    """Bijection of nodes ``1..n``; ``images[i - 1]`` is the image of node ``i``."""

    images: tuple[int, ...]

    def __post_init__(self) -> None:
        if sorted(self.images) != list(range(1, len(self.images) + 1)):
            raise ValueError(f"not a permutation: {self.images}")

    @classmethod
    def identity(cls, n: int) -> NodePermutation:
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def from_cycles(cls, n: int, *cycles: Sequence[int]) -> NodePermutation:
        img = list(range(1, n + 1))
        for cyc in cycles:
            for a, b in zip(cyc, list(cyc[1:]) + [cyc[0]]):
                img[a - 1] = b
        return cls(tuple(img))

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def __len__(self) -> int:
        return len(self.images)

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self.images, 1))

    def compose(self, other: NodePermutation) -> NodePermutation:
        """``self after other``."""
        return NodePermutation(tuple(self(other(i)) for i in range(1, len(self) + 1)))

    def inverse(self) -> NodePermutation:
        inv = [0] * len(self)
        for i, j in enumerate(self.images, 1):
            inv[j - 1] = i
        return NodePermutation(tuple(inv))

    def preserves(self, cartan: CartanMatrix) -> bool:
        n = len(cartan)
        return len(self) == n and all(
            cartan[self(i) - 1][self(j) - 1] == cartan[i - 1][j - 1]
            for i in range(1, n + 1) for j in range(1, n + 1))

    def apply(self, mu: Weight) -> Weight:
        """Action on weights through ``omega_i -> omega_{perm(i)}``."""
        out = [0] * len(mu.coords)
        for i, c in enumerate(mu.coords, 1):
            out[self(i) - 1] = c
        return Weight(tuple(out), mu.ambient)

    def cycles(self) -> list[tuple[int, ...]]:
        seen, out = set(), []
        for i in range(1, len(self) + 1):
            if i in seen:
                continue
            cyc = [i]
            seen.add(i)
            j = self(i)
            while j != i:
                cyc.append(j)
                seen.add(j)
                j = self(j)
            out.append(tuple(cyc))
        return out

    def __str__(self) -> str:
        cyc = [c for c in self.cycles() if len(c) > 1]
        return "".join("(" + " ".join(map(str, c)) + ")" for c in cyc) or "id"


# --------------------------------------------------------------------------
# raw actions on coordinate tuples

def _reflect(cartan: CartanMatrix, i: int, mu: tuple[int, ...]) -> tuple[int, ...]:
    c = mu[i]
    if c == 0:
        return mu
    row = cartan[i]
    return tuple(m - c * r for m, r in zip(mu, row))


def _orbit_coords(cartan: CartanMatrix, mu: tuple[int, ...]) -> list[tuple[int, ...]]:
    seen = {mu}
    order = [mu]
    queue = deque([mu])
    n = len(cartan)
    while queue:
        cur = queue.popleft()
        for i in range(n):
            nxt = _reflect(cartan, i, cur)
            if nxt not in seen:
                seen.add(nxt)
                order.append(nxt)
                queue.append(nxt)
    return order


@functools.lru_cache(maxsize=None)
def _w0_letters(cartan: CartanMatrix) -> tuple[int, ...]:
    # descent from rho, smallest positive coordinate first
    cur = (1,) * len(cartan)
    letters = []
    while True:
        i = next((k for k, c in enumerate(cur) if c > 0), None)
        if i is None:
            break
        letters.append(i + 1)
        cur = _reflect(cartan, i, cur)
    return tuple(letters)


@functools.lru_cache(maxsize=None)
def _w0_matrix(cartan: CartanMatrix) -> tuple[tuple[int, ...], ...]:
    # column j is w0(omega_j), obtained by running the cached word
    n = len(cartan)
    cols = []
    for j in range(n):
        v = tuple(int(k == j) for k in range(n))
        for letter in _w0_letters(cartan):
            v = _reflect(cartan, letter - 1, v)
        cols.append(v)
    return tuple(tuple(cols[j][i] for j in range(n)) for i in range(n))


def _apply_matrix(m: tuple[tuple[int, ...], ...], v: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(sum(a * b for a, b in zip(row, v) if b) for row in m)


@functools.lru_cache(maxsize=None)
def opposition(cartan: CartanMatrix) -> tuple[int, ...]:
    """Images of ``-w0`` on nodes (1-based) for an arbitrary Cartan matrix."""
    m = _w0_matrix(cartan)
    n = len(cartan)
    out = []
    for j in range(n):
        col = [-m[i][j] for i in range(n)]
        if sorted(col) != [0] * (n - 1) + [1]:
            raise AssertionError("w0(omega_j) is not minus a fundamental weight")
        out.append(col.index(1) + 1)
    return tuple(out)


# --------------------------------------------------------------------------
# public operations

def reflect(i: int, mu: Weight) -> Weight:
    """Simple reflection ``s_i``.

    >>> from .rootsys import SimpleType, fundamental_weight
    >>> reflect(1, fundamental_weight(SimpleType("A", 2), 1)).coords
    (-1, 1)
    """
    if not 1 <= i <= mu.ambient.rank:
        raise IndexError(f"node {i} out of range for {mu.ambient}")
    return Weight(_reflect(cartan_matrix(mu.ambient), i - 1, mu.coords), mu.ambient)


@dataclass(frozen=True)
class WeightOrbit:
    elements: tuple[Weight, ...]

    @functools.cached_property
    def index(self) -> dict[Weight, int]:
        return {w: k for k, w in enumerate(self.elements)}

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, mu: object) -> bool:
        return mu in self.index

    def dominant(self) -> Weight:
        (d,) = [w for w in self.elements if w.is_dominant()]
        return d


def orbit(mu: Weight) -> WeightOrbit:
    """W-orbit of ``mu``, ordered lexicographically by coordinates (descending)."""
    t = mu.ambient
    coords = _orbit_coords(cartan_matrix(t), mu.coords)
    coords.sort(reverse=True)
    return WeightOrbit(tuple(Weight(c, t) for c in coords))


def w0_word(t: SimpleType | SemisimpleType) -> WeylWord:
    """A reduced word for the longest element (length = number of positive roots)."""
    t = as_semisimple(t)
    return WeylWord(_w0_letters(cartan_matrix(t)), t)


def act(word: WeylWord, mu: Weight) -> Weight:
    """Apply the letters of ``word`` to ``mu``, first letter first."""
    if word.ambient != mu.ambient:
        raise AmbientMismatchError(f"{word.ambient} vs {mu.ambient}")
    cartan = cartan_matrix(mu.ambient)
    v = mu.coords
    for letter in word.letters:
        v = _reflect(cartan, letter - 1, v)
    return Weight(v, mu.ambient)


def apply_w0(mu: Weight) -> Weight:
    """``w0(mu)`` via the linear map assembled from the cached reduced word."""
    return Weight(_apply_matrix(_w0_matrix(cartan_matrix(mu.ambient)), mu.coords), mu.ambient)


def minus_w0_automorphism(t: SimpleType | SemisimpleType) -> NodePermutation:
    """The permutation ``delta`` with ``w0(omega_i) = -omega_{delta(i)}``."""
    return NodePermutation(opposition(cartan_matrix(as_semisimple(t))))


def diagram_automorphisms(cartan: CartanMatrix) -> list[NodePermutation]:
    """All Cartan-preserving node permutations (backtracking search)."""
    n = len(cartan)
    out: list[NodePermutation] = []
    img = [0] * n

    def extend(i: int, used: set[int]) -> None:
        if i == n:
            out.append(NodePermutation(tuple(k + 1 for k in img)))
            return
        for cand in range(n):
            if cand in used or cartan[cand][cand] != cartan[i][i]:
                continue
            if all(cartan[cand][img[j]] == cartan[i][j] and cartan[img[j]][cand] == cartan[j][i]
                   for j in range(i)):
                img[i] = cand
                used.add(cand)
                extend(i + 1, used)
                used.discard(cand)

    extend(0, set())
    return out


def stabilizer_subtype(lam: Weight) -> SemisimpleType:
    """Type of the parabolic subgroup fixing a dominant weight."""
    if not lam.is_dominant():
        raise NotDominantError(f"{lam} is not dominant")
    zeros = [i for i, c in enumerate(lam.coords, 1) if c == 0]
    return SemisimpleType(tuple(c.type for c in components(cartan_matrix(lam.ambient), zeros)))


def weyl_group_order(t: SimpleType | SemisimpleType) -> int:
    """|W| as a product of orbit sizes along the chain of parabolics on
    nodes ``1..k``; independent of the degree tables."""
    cartan = cartan_matrix(as_semisimple(t))
    total = 1
    for k in range(1, len(cartan) + 1):
        sub = tuple(row[:k] for row in cartan[:k])
        total *= len(_orbit_coords(sub, tuple(int(i == k - 1) for i in range(k))))
    return total


def orbit_size_by_index(lam: Weight) -> int:
    """``|W| / |W_lambda|`` from degree products."""
    full = weyl_degrees(lam.ambient).product
    sub = weyl_degrees(stabilizer_subtype(lam)).product
    q, r = divmod(full, sub)
    assert r == 0
    return q


def number_of_positive_roots(t: SimpleType | SemisimpleType) -> int:
    return len(positive_root_coords(cartan_matrix(as_semisimple(t))))

