"""Satake diagrams, node deletion, inner classes, and the quasi-compact catalog."""
from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass

from ..rootsys import (
    SemisimpleType,
    SimpleType,
    as_semisimple,
    cartan_matrix,
    components,
)
from ..weyl import NodePermutation, diagram_automorphisms, minus_w0_automorphism, opposition


class SatakeError(ValueError):
    pass


@dataclass(frozen=True)
class SatakeDiagram:
    """Dynkin diagram with painted nodes and an arrow involution on unpainted
    nodes. ``crossed`` optionally marks the node of a coweight."""

    base: SemisimpleType
    painted: frozenset[int] = frozenset()
    arrows: frozenset[tuple[int, int]] = frozenset()
    crossed: int | None = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "base", as_semisimple(self.base))
        object.__setattr__(self, "painted", frozenset(self.painted))
        arrows = frozenset(tuple(sorted(p)) for p in self.arrows)
        object.__setattr__(self, "arrows", arrows)
        n = self.base.rank
        ends = [i for p in arrows for i in p]
        if any(not 1 <= i <= n for i in list(self.painted) + ends):
            raise SatakeError("node out of range")
        if len(ends) != len(set(ends)) or any(a == b for a, b in arrows):
            raise SatakeError("arrows must pair distinct nodes at most once")
        if self.painted & set(ends):
            raise SatakeError("painted nodes cannot carry arrows")
        if not self.arrow_permutation().preserves(cartan_matrix(self.base)):
            raise SatakeError("arrows do not preserve the Cartan matrix")
        if self.crossed is not None and not 1 <= self.crossed <= n:
            raise SatakeError("crossed node out of range")

    @property
    def nodes(self) -> range:
        return range(1, self.base.rank + 1)

    def partner(self, i: int) -> int:
        for a, b in self.arrows:
            if i == a:
                return b
            if i == b:
                return a
        return i

    def arrow_permutation(self) -> NodePermutation:
        return NodePermutation(tuple(self.partner(i) for i in range(1, self.base.rank + 1)))

    @classmethod
    def from_string(cls, base: SimpleType | SemisimpleType, text: str,
                    arrows: Iterable[tuple[int, int]] = ()) -> SatakeDiagram:
        """``o`` unpainted, ``*`` painted, ``x`` crossed (unpainted), Bourbaki order."""
        base = as_semisimple(base)
        if len(text) != base.rank or set(text) - set("o*x"):
            raise SatakeError(f"bad Satake string {text!r} for {base}")
        crossed = [i for i, ch in enumerate(text, 1) if ch == "x"]
        if len(crossed) > 1:
            raise SatakeError("at most one crossed node")
        return cls(base, frozenset(i for i, ch in enumerate(text, 1) if ch == "*"),
                   frozenset(arrows), crossed[0] if crossed else None)

    def node_string(self) -> str:
        return "".join("x" if i == self.crossed else "*" if i in self.painted else "o"
                       for i in self.nodes)

    def render(self) -> str:
        s = self.node_string()
        if self.arrows:
            s += " " + " ".join(f"{a}<->{b}" for a, b in sorted(self.arrows))
        return s

    def uncrossed(self) -> SatakeDiagram:
        return SatakeDiagram(self.base, self.painted, self.arrows, None)

    def restrict(self, factor_indices: Iterable[int]) -> SatakeDiagram:
        """Sub-diagram on a selection of the base's simple factors."""
        idx = sorted(factor_indices)
        new_base = SemisimpleType(tuple(self.base.factors[j] for j in idx))
        relabel = {}
        for new_off, j in zip(new_base.offsets, idx):
            for k, g in enumerate(self.base.factor_nodes(j), 1):
                relabel[g] = new_off + k
        arrows = [(relabel[a], relabel[b]) for a, b in self.arrows if a in relabel]
        if any(b not in relabel for a, b in self.arrows if a in relabel) or \
                any(a not in relabel for a, b in self.arrows if b in relabel):
            raise SatakeError("restriction cuts an arrow")
        return SatakeDiagram(new_base, frozenset(relabel[p] for p in self.painted if p in relabel),
                             frozenset(arrows),
                             relabel.get(self.crossed) if self.crossed is not None else None)


def delete_node(s: SatakeDiagram, node: int) -> SatakeDiagram:
    """Remove an unpainted, arrow-free node; the remaining subdiagram is split
    into connected components and relabelled in Bourbaki order."""
    if node in s.painted or s.partner(node) != node:
        raise SatakeError("node painted or arrowed")
    cartan = cartan_matrix(s.base)
    comps = components(cartan, [i for i in s.nodes if i != node])
    relabel = {}
    off = 0
    for c in comps:
        for k, g in enumerate(c.nodes, 1):
            relabel[g] = off + k
        off += c.type.rank
    base = SemisimpleType(tuple(c.type for c in comps))
    crossed = relabel.get(s.crossed) if s.crossed not in (None, node) else None
    return SatakeDiagram(base, frozenset(relabel[p] for p in s.painted),
                         frozenset((relabel[a], relabel[b]) for a, b in s.arrows), crossed)


def isomorphic(d1: SatakeDiagram, d2: SatakeDiagram, with_cross: bool = False) -> bool:
    """Decorated-diagram isomorphism: a node bijection preserving Cartan
    entries, paint, arrows (and optionally the crossed node)."""
    a1, a2 = cartan_matrix(d1.base), cartan_matrix(d2.base)
    n = len(a1)
    if n != len(a2):
        return False

    def label(d: SatakeDiagram, i: int) -> tuple:
        return (i in d.painted, d.partner(i) != i, with_cross and d.crossed == i)

    img = [0] * (n + 1)
    used: set[int] = set()

    def extend(i: int) -> bool:
        if i > n:
            return all(img[d1.partner(k)] == d2.partner(img[k]) for k in range(1, n + 1))
        for cand in range(1, n + 1):
            if cand in used or label(d1, i) != label(d2, cand):
                continue
            if all(a2[cand - 1][img[j] - 1] == a1[i - 1][j - 1]
                   and a2[img[j] - 1][cand - 1] == a1[j - 1][i - 1]
                   for j in range(1, i + 1) if j != i) and a2[cand - 1][cand - 1] == 2:
                img[i] = cand
                used.add(cand)
                if extend(i + 1):
                    return True
                used.discard(cand)
        return False

    return extend(1)


# --------------------------------------------------------------------------
# inner classes

@dataclass(frozen=True)
class InnerClass:
    """Inner class of real structures on a simple type, recorded by the
    diagram automorphism induced by a pinning-preserving Cartan involution
    (identity for the class of the compact form)."""

    base: SimpleType
    outer: NodePermutation

    def __post_init__(self) -> None:
        if not self.outer.preserves(cartan_matrix(self.base)):
            raise SatakeError("outer part does not preserve the Cartan matrix")
        if not self.outer.compose(self.outer).is_identity():
            raise SatakeError("outer part is not an involution")

    def is_split_class(self) -> bool:
        return self.outer == minus_w0_automorphism(self.base)

    def __str__(self) -> str:
        return f"{self.base}[{self.outer}]"


@dataclass(frozen=True)
class SwapClass:
    """The class of ``g_s + g_s`` with the summands exchanged."""

    base: SimpleType

    def __str__(self) -> str:
        return f"{self.base}+{self.base}[swap]"


def _painted_opposition(d: SatakeDiagram, nodes: tuple[int, ...]) -> dict[int, int]:
    """``-w0`` of the painted subdiagram inside ``nodes``, on global labels."""
    cartan = cartan_matrix(d.base)
    x = [i for i in nodes if i in d.painted]
    out = {}
    for comp in components(cartan, x):
        sub = tuple(tuple(cartan[i - 1][j - 1] for j in comp.nodes) for i in comp.nodes)
        for k, img in enumerate(opposition(sub)):
            out[comp.nodes[k]] = comp.nodes[img - 1]
    return out


def simple_inner_class(d: SatakeDiagram) -> InnerClass:
    """Inner class of a Satake diagram on a simple base.

    The Galois-side involution acts by the arrows on unpainted nodes and by
    the opposition involution of the painted subdiagram on painted nodes;
    composing with ``-w0`` gives the Cartan-involution side.
    """
    if len(d.base.factors) != 1:
        raise SatakeError("expected a simple base")
    (t,) = d.base.factors
    nodes = tuple(d.nodes)
    opp = _painted_opposition(d, nodes)
    eps = NodePermutation(tuple(opp[i] if i in d.painted else d.partner(i) for i in nodes))
    return InnerClass(t, eps.compose(minus_w0_automorphism(t)))


def blocks(d: SatakeDiagram) -> list[tuple[int, ...]]:
    """Groups of simple factors of the base joined by arrows."""
    owner = {}
    for j in range(len(d.base.factors)):
        for g in d.base.factor_nodes(j):
            owner[g] = j
    parent = list(range(len(d.base.factors)))

    def find(j: int) -> int:
        while parent[j] != j:
            j = parent[j]
        return j

    for a, b in d.arrows:
        ra, rb = find(owner[a]), find(owner[b])
        if ra != rb:
            parent[max(ra, rb)] = min(ra, rb)
    groups: dict[int, list[int]] = {}
    for j in range(len(d.base.factors)):
        groups.setdefault(find(j), []).append(j)
    return [tuple(g) for _, g in sorted(groups.items())]


def block_inner_classes(d: SatakeDiagram) -> list[InnerClass | SwapClass]:
    out: list[InnerClass | SwapClass] = []
    for blk in blocks(d):
        sub = d.restrict(blk)
        if len(blk) == 1:
            out.append(simple_inner_class(sub))
        elif len(blk) == 2 and sub.base.factors[0] == sub.base.factors[1]:
            out.append(SwapClass(sub.base.factors[0]))
        else:
            raise SatakeError("arrows join factors in an unsupported pattern")
    return out


# --------------------------------------------------------------------------
# quasi-compact catalog

def _standard_outer(t: SimpleType) -> NodePermutation | None:
    n = t.rank
    if t.family == "A" and n >= 2:
        return NodePermutation(tuple(range(n, 0, -1)))
    if t.family == "D":
        return NodePermutation.from_cycles(n, (n - 1, n))
    if t.family == "E" and n == 6:
        return NodePermutation.from_cycles(6, (1, 6), (3, 5))
    return None


def _standard_quasi_compact(t: SimpleType) -> SatakeDiagram:
    n, f = t.rank, t.family
    if f == "A" and n % 2 == 1:
        painted = {i for i in range(1, n + 1) if i % 2 == 1}       # su*(n+1)
    elif f == "A":
        painted = set()                                            # sl_{n+1}(R)
    elif f == "D":
        painted = set(range(2, n + 1))                             # so_{1,2n-1}(R)
    else:
        painted = {2, 3, 4, 5}                                     # e6(-26)
    return SatakeDiagram(as_semisimple(t), frozenset(painted))


def involutive_outer_parts(t: SimpleType) -> list[NodePermutation]:
    """Identity and every involutive diagram automorphism of ``t``."""
    autos = diagram_automorphisms(cartan_matrix(t))
    return sorted((p for p in autos if p.compose(p).is_identity()),
                  key=lambda p: (not p.is_identity(), p.images))


class QuasiCompactCatalog:
    """The quasi-compact real form of each inner class, as a Satake diagram.

    Inner-trivial classes map to the compact form (everything painted). The
    nontrivial classes are: su*(2m) on A_{2m-1}, sl_{2m+1}(R) on A_{2m},
    so_{1,2n-1}(R) on D_n, and e6(-26) on E6; swap classes of ``g_s + g_s``
    map to two unpainted copies joined by arrows.
    """

    def lookup(self, cls: InnerClass | SwapClass) -> SatakeDiagram:
        if isinstance(cls, SwapClass):
            return self.lookup_swap(cls.base)
        t, outer = cls.base, cls.outer
        if outer.is_identity():
            return SatakeDiagram(as_semisimple(t), frozenset(range(1, t.rank + 1)))
        std = _standard_outer(t)
        if std is None:
            raise KeyError(str(cls))
        for g in diagram_automorphisms(cartan_matrix(t)):
            if g.compose(std).compose(g.inverse()) == outer:
                d = _standard_quasi_compact(t)
                return SatakeDiagram(d.base, frozenset(g(i) for i in d.painted))
        raise KeyError(str(cls))

    def lookup_swap(self, t: SimpleType) -> SatakeDiagram:
        r = t.rank
        return SatakeDiagram(SemisimpleType((t, t)), frozenset(),
                             frozenset((i, i + r) for i in range(1, r + 1)))

    def entries(self, types: Iterable[SimpleType]) -> list[tuple[InnerClass, SatakeDiagram]]:
        return [(InnerClass(t, p), self.lookup(InnerClass(t, p)))
                for t in types for p in involutive_outer_parts(t)]


def quasi_compact_catalog() -> QuasiCompactCatalog:
    return QuasiCompactCatalog()


def is_quasi_compact(d: SatakeDiagram, catalog: QuasiCompactCatalog | None = None) -> bool:
    """Every arrow-block of ``d`` matches the catalog entry of its own inner class."""
    catalog = catalog or quasi_compact_catalog()
    d = d.uncrossed()
    for blk, cls in zip(blocks(d), block_inner_classes(d)):
        if not isomorphic(d.restrict(blk), catalog.lookup(cls)):
            return False
    return True
