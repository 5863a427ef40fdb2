"""Adapted real forms for minuscule coweights, as parameterized table rows.

Each template describes a family of rows in ``n`` (and sometimes ``k``);
:meth:`RowTemplate.instantiate` produces concrete :class:`TableRow` objects
with an explicit Satake diagram whose crossed node is the coweight's node.
"""
from __future__ import annotations

import re
from collections.abc import Callable
from dataclasses import dataclass, field
from typing import Any

from ..rootsys import SemisimpleType, SimpleType
from .satake import SatakeDiagram


def _sub(name: str, *idx: int) -> str:
    body = ",".join(map(str, idx))
    return f"{name}_{body}" if len(body) == 1 else f"{name}_{{{body}}}"


_LABEL = re.compile(r"^(sl|so|sp)_\{?(\d+)\}?$")


def levi_from_label(label: str) -> SemisimpleType:
    """Parse a sum of complex classical/exceptional labels into a type.

    >>> str(levi_from_label("sl_3 + sl_2"))
    'A2+A1'
    """
    factors: list[SimpleType] = []
    for tok in (t.strip() for t in label.split("+")):
        if tok in ("e6", "e7", "e8"):
            factors.append(SimpleType("E", int(tok[1])))
            continue
        m = _LABEL.match(tok)
        if not m:
            raise ValueError(f"unrecognized label {tok!r}")
        name, size = m.group(1), int(m.group(2))
        if name == "sl":
            if size >= 2:
                factors.append(SimpleType("A", size - 1))
        elif name == "sp":
            if size % 2:
                raise ValueError(f"odd symplectic size in {tok!r}")
            if size == 2:
                factors.append(SimpleType("A", 1))
            elif size >= 4:
                factors.append(SimpleType("C", size // 2))
        else:
            r = size // 2
            if size == 3:
                factors.append(SimpleType("A", 1))
            elif size == 4:
                factors += [SimpleType("A", 1), SimpleType("A", 1)]
            elif size % 2 and size >= 5:
                factors.append(SimpleType("B", r))
            elif size >= 6:
                factors.append(SimpleType("D", r))
    return SemisimpleType(tuple(factors))


@dataclass(frozen=True)
class TableRow:
    table: int
    family: str
    params: tuple[tuple[str, int], ...]
    dual_type: SimpleType
    node: int
    levi_label: str
    real_form: str
    levi_fixed_form: str
    satake: SatakeDiagram
    quasi_compact: bool

    def __post_init__(self) -> None:
        if self.satake.crossed != self.node:
            raise ValueError("the coweight's node must be the crossed node")

    @property
    def levi_derived(self) -> SemisimpleType:
        return levi_from_label(self.levi_label)

    @property
    def dual_label(self) -> str:
        return _complex_label(self.dual_type)

    @property
    def subject(self) -> str:
        p = " ".join(f"{k}={v}" for k, v in self.params)
        return f"T{self.table}/{self.family}" + (f" {p}" if p else "") + \
            f" ({self.dual_type} node {self.node})"

    def to_dict(self) -> dict[str, Any]:
        return {
            "table": self.table,
            "family": self.family,
            "params": dict(self.params),
            "type": str(self.dual_type),
            "node": self.node,
            "g_dual": self.dual_label,
            "levi_derived": self.levi_label,
            "real_form": self.real_form,
            "levi_real_form": self.levi_fixed_form,
            "satake": self.satake.render(),
            "quasi_compact": self.quasi_compact,
        }

    @classmethod
    def from_dict(cls, d: dict[str, Any]) -> TableRow:
        t = SimpleType.parse(d["type"])
        text, *arrows = d["satake"].split()
        pairs = [tuple(int(x) for x in a.split("<->")) for a in arrows]
        return cls(d["table"], d["family"], tuple(sorted(d["params"].items())), t,
                   d["node"], d["levi_derived"], d["real_form"], d["levi_real_form"],
                   SatakeDiagram.from_string(t, text, pairs), d["quasi_compact"])


def _complex_label(t: SimpleType) -> str:
    n = t.rank
    return {
        "A": lambda: _sub("sl", n + 1),
        "B": lambda: _sub("so", 2 * n + 1),
        "C": lambda: _sub("sp", 2 * n),
        "D": lambda: _sub("so", 2 * n),
        "E": lambda: f"e{n}",
        "F": lambda: "f4",
        "G": lambda: "g2",
    }[t.family]()


@dataclass(frozen=True)
class RowTemplate:
    """One family of rows; ``build(n, k)`` returns the concrete pieces."""

    table: int
    family: str
    symbolic: tuple[str, str, str, str, str]   # g_dual, levi, form, levi form, satake
    quasi_compact: bool
    build: Callable[[int, int], tuple[SimpleType, int, str, str, str, SatakeDiagram]]
    k_range: Callable[[int], range] | None = None
    parameterized: bool = True
    min_n: int = 1
    notes: tuple[str, ...] = field(default=())

    def instantiate(self, n: int | None = None) -> list[TableRow]:
        if not self.parameterized:
            return [self._row((), 0, 0)]
        if n is None or n < self.min_n:
            return []
        if self.k_range is None:
            return [self._row((("n", n),), n, 0)]
        return [self._row((("k", k), ("n", n)), n, k) for k in self.k_range(n)]

    def _row(self, params, n: int, k: int) -> TableRow:
        t, node, levi, form, levi_form, sat = self.build(n, k)
        return TableRow(self.table, self.family, params, t, node, levi, form, levi_form,
                        sat, self.quasi_compact)

    def symbolic_dict(self) -> dict[str, Any]:
        g, levi, form, lform, sat = self.symbolic
        d = {"table": self.table, "family": self.family, "g_dual": g, "levi_derived": levi,
             "real_form": form, "levi_real_form": lform, "satake": sat,
             "quasi_compact": self.quasi_compact}
        if self.notes:
            d["notes"] = list(self.notes)
        return d


def _diagram(t: SimpleType, painted, crossed: int, arrows=()) -> SatakeDiagram:
    return SatakeDiagram(SemisimpleType((t,)), frozenset(painted), frozenset(arrows), crossed)


def _odd(limit: int) -> range:
    return range(1, limit + 1, 2)


def _a_su_star(n: int, k: int):
    t = SimpleType("A", 2 * n - 1)
    return (t, 2 * k, f"{_sub('sl', 2 * k)} + {_sub('sl', 2 * n - 2 * k)}", f"su*({2 * n})",
            f"su*({2 * k}) + su*({2 * n - 2 * k})", _diagram(t, _odd(2 * n - 1), 2 * k))


def _a_split_even(n: int, k: int):
    t = SimpleType("A", 2 * n - 1)
    a, b = 2 * k + 1, 2 * n - 2 * k - 1
    return (t, a, f"{_sub('sl', a)} + {_sub('sl', b)}", f"{_sub('sl', 2 * n)}(R)",
            f"{_sub('sl', a)}(R) + {_sub('sl', b)}(R)", _diagram(t, (), a))


def _a_split_odd(n: int, k: int):
    t = SimpleType("A", 2 * n)
    return (t, k, f"{_sub('sl', k)} + {_sub('sl', 2 * n + 1 - k)}", f"{_sub('sl', 2 * n + 1)}(R)",
            f"{_sub('sl', k)}(R) + {_sub('sl', 2 * n + 1 - k)}(R)", _diagram(t, (), k))


def _b_vector(n: int, k: int):
    t = SimpleType("B", n)
    return (t, 1, _sub("so", 2 * n - 1), f"{_sub('so', 1, 2 * n)}(R)",
            f"{_sub('so', 2 * n - 1)}(R)", _diagram(t, range(2, n + 1), 1))


def _c_even(n: int, k: int):
    t = SimpleType("C", 2 * n)
    return (t, 2 * n, _sub("sl", 2 * n), f"{_sub('sp', 2 * n, 2 * n)}(R)", f"su*({2 * n})",
            _diagram(t, _odd(2 * n - 1), 2 * n))


def _c_odd(n: int, k: int):
    t = SimpleType("C", 2 * n + 1)
    return (t, 2 * n + 1, _sub("sl", 2 * n + 1), f"{_sub('sp', 4 * n + 2)}(R)",
            f"{_sub('sl', 2 * n + 1)}(R)", _diagram(t, (), 2 * n + 1))


def _d_even_vector_split(n: int, k: int):
    t = SimpleType("D", 2 * n)
    return (t, 1, _sub("so", 4 * n - 2), f"{_sub('so', 2, 4 * n - 2)}(R)",
            f"{_sub('so', 1, 4 * n - 3)}(R)", _diagram(t, range(3, 2 * n + 1), 1))


def _d_even_spin(n: int, k: int):
    t = SimpleType("D", 2 * n)
    return (t, 2 * n, _sub("sl", 2 * n), f"so*({4 * n})", f"su*({2 * n})",
            _diagram(t, _odd(2 * n - 1), 2 * n))


def _d_odd_vector(n: int, k: int):
    t = SimpleType("D", 2 * n + 1)
    return (t, 1, _sub("so", 4 * n), f"{_sub('so', 1, 4 * n + 1)}(R)", f"{_sub('so', 4 * n)}(R)",
            _diagram(t, range(2, 2 * n + 2), 1))


def _d_odd_spin(n: int, k: int):
    t = SimpleType("D", 2 * n + 1)
    return (t, 2 * n + 1, _sub("sl", 2 * n + 1), f"{_sub('so', 2 * n + 1, 2 * n + 1)}(R)",
            f"{_sub('sl', 2 * n + 1)}(R)", _diagram(t, (), 2 * n + 1))


def _e6(n: int, k: int):
    t = SimpleType("E", 6)
    return (t, 6, "so_{10}", "e6(-26)", "so_{1,9}(R)", _diagram(t, (2, 3, 4, 5), 6))


def _e7(n: int, k: int):
    t = SimpleType("E", 7)
    return (t, 7, "e6", "e7(-25)", "e6(-26)", _diagram(t, (2, 3, 4, 5), 7))


def _a_quasi_split(n: int, k: int):
    t = SimpleType("A", 2 * n - 1)
    arrows = [(i, 2 * n - i) for i in range(1, n)]
    return (t, n, f"{_sub('sl', n)} + {_sub('sl', n)}", f"{_sub('su', n, n)}",
            f"{_sub('sl', n)}(C)_R", _diagram(t, (), n, arrows))


def _d_even_vector_outer(n: int, k: int):
    t = SimpleType("D", 2 * n)
    return (t, 1, _sub("so", 4 * n - 2), f"{_sub('so', 1, 4 * n - 1)}(R)",
            f"{_sub('so', 4 * n - 2)}(R)", _diagram(t, range(2, 2 * n + 1), 1))


def _d_odd_vector_outer(n: int, k: int):
    t = SimpleType("D", 2 * n + 1)
    return (t, 1, _sub("so", 4 * n), f"{_sub('so', 2, 4 * n)}(R)",
            f"{_sub('so', 1, 4 * n - 1)}(R)", _diagram(t, range(3, 2 * n + 2), 1))


_D_ARROW_NOTE = "fork arrows left implicit; encoded arrow-free"

TEMPLATES: tuple[RowTemplate, ...] = (
    RowTemplate(1, "A_{2n-1}/even", ("sl_{2n}", "sl_{2k} + sl_{2n-2k}", "su*(2n)",
                                     "su*(2k) + su*(2n-2k)", "*o*.x.o*"),
                True, _a_su_star, lambda n: range(1, n)),
    RowTemplate(1, "A_{2n-1}/odd", ("sl_{2n}", "sl_{2k+1} + sl_{2n-2k-1}", "sl_{2n}(R)",
                                    "sl_{2k+1}(R) + sl_{2n-2k-1}(R)", "ooo.x.oo"),
                False, _a_split_even, lambda n: range(0, n)),
    RowTemplate(1, "A_{2n}", ("sl_{2n+1}", "sl_k + sl_{2n+1-k}", "sl_{2n+1}(R)",
                              "sl_k(R) + sl_{2n+1-k}(R)", "ooo.x.oo"),
                True, _a_split_odd, lambda n: range(1, 2 * n + 1)),
    RowTemplate(1, "B_n", ("so_{2n+1}", "so_{2n-1}", "so_{1,2n}(R)", "so_{2n-1}(R)", "x**.**"),
                False, _b_vector, min_n=2),
    RowTemplate(1, "C_{2n}", ("sp_{4n}", "sl_{2n}", "sp_{2n,2n}(R)", "su*(2n)", "*o*.o*x"),
                False, _c_even),
    RowTemplate(1, "C_{2n+1}", ("sp_{4n+2}", "sl_{2n+1}", "sp_{4n+2}(R)", "sl_{2n+1}(R)",
                                "ooo.oox"),
                False, _c_odd),
    RowTemplate(1, "D_{2n}/vector", ("so_{4n}", "so_{4n-2}", "so_{2,4n-2}(R)", "so_{1,4n-3}(R)",
                                     "xo*.***"),
                False, _d_even_vector_split, min_n=2, notes=(_D_ARROW_NOTE,)),
    RowTemplate(1, "D_{2n}/spin", ("so_{4n}", "sl_{2n}", "so*(4n)", "su*(2n)", "*o*.o*x"),
                False, _d_even_spin, min_n=2),
    RowTemplate(1, "D_{2n+1}/vector", ("so_{4n+2}", "so_{4n}", "so_{1,4n+1}(R)", "so_{4n}(R)",
                                       "x**.***"),
                True, _d_odd_vector, min_n=2),
    RowTemplate(1, "D_{2n+1}/spin", ("so_{4n+2}", "sl_{2n+1}", "so_{2n+1,2n+1}(R)",
                                     "sl_{2n+1}(R)", "ooo.oox"),
                False, _d_odd_spin, min_n=2),
    RowTemplate(1, "E6", ("e6", "so_{10}", "e6(-26)", "so_{1,9}(R)", "o****x"),
                True, _e6, parameterized=False),
    RowTemplate(1, "E7", ("e7", "e6", "e7(-25)", "e6(-26)", "o****ox"),
                False, _e7, parameterized=False),
    RowTemplate(2, "A_{2n-1}/middle", ("sl_{2n}", "sl_n + sl_n", "su_{n,n}", "sl_n(C)_R",
                                       "oo.oxo.oo i<->2n-i"),
                False, _a_quasi_split, min_n=2),
    RowTemplate(2, "D_{2n}/vector", ("so_{4n}", "so_{4n-2}", "so_{1,4n-1}(R)", "so_{4n-2}(R)",
                                     "x**.***"),
                True, _d_even_vector_outer, min_n=2, notes=(_D_ARROW_NOTE,)),
    RowTemplate(2, "D_{2n+1}/vector", ("so_{4n+2}", "so_{4n}", "so_{2,4n}(R)", "so_{1,4n-1}(R)",
                                       "xo*.***"),
                False, _d_odd_vector_outer, min_n=2),
)


def appendix_tables() -> tuple[RowTemplate, ...]:
    """All row families: split-inner classes first, then the rest."""
    return TEMPLATES


def instantiate(n: int) -> list[TableRow]:
    return [row for tpl in TEMPLATES for row in tpl.instantiate(n)]


def instantiate_range(n_min: int = 2, n_max: int = 6) -> list[TableRow]:
    """Every row for ``n_min <= n <= n_max``; unparameterized rows appear once."""
    out: list[TableRow] = []
    for tpl in TEMPLATES:
        if not tpl.parameterized:
            out += tpl.instantiate()
            continue
        for n in range(n_min, n_max + 1):
            out += tpl.instantiate(n)
    return out


_HEADER = "| g∨ | 𝔩'_λ | (𝔤^∨)^σ | (𝔩_λ^σ)' | Satake |"
_TITLES = {1: "Inner to a split real form", 2: "Not inner to a split real form"}


def _md_cell(text: str, qc: bool) -> str:
    return f"{text} (quasi-compact)" if qc else text


def tables_markdown(rows: list[TableRow] | None = None) -> str:
    """Markdown rendering; symbolic families when ``rows`` is None."""
    out: list[str] = []
    for table in (1, 2):
        out += [f"### {_TITLES[table]}", "", _HEADER, "|---|---|---|---|---|"]
        if rows is None:
            for tpl in TEMPLATES:
                if tpl.table == table:
                    g, levi, form, lform, sat = tpl.symbolic
                    out.append(f"| {g} | {levi} | {_md_cell(form, tpl.quasi_compact)} "
                               f"| {lform} | `{sat}` |")
        else:
            for r in rows:
                if r.table == table:
                    out.append(f"| {r.dual_label} | {r.levi_label} "
                               f"| {_md_cell(r.real_form, r.quasi_compact)} "
                               f"| {r.levi_fixed_form} | `{r.satake.render()}` |")
        out.append("")
    return "\n".join(out)


def tables_document(rows: list[TableRow] | None = None) -> dict[str, Any]:
    """JSON-ready document: symbolic families, or concrete rows when given."""
    if rows is None:
        return {"schema": "1", "kind": "symbolic",
                "rows": [tpl.symbolic_dict() for tpl in TEMPLATES]}
    return {"schema": "1", "kind": "instantiated", "rows": [r.to_dict() for r in rows]}


def rows_from_document(doc: dict[str, Any]) -> list[TableRow]:
    if doc.get("kind") != "instantiated":
        raise ValueError("document does not hold concrete rows")
    return [TableRow.from_dict(d) for d in doc["rows"]]
