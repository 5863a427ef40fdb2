"""Mechanical checks of table rows, the quasi-compact catalog, rank
inequalities, and Coxeter-number parity."""
from __future__ import annotations

from ..minuscule import fixed_weight_count, freeness_split, simple_types_up_to
from ..report import CheckRecord
from ..rootsys import (
    SimpleType,
    coxeter_number,
    fundamental_weight,
    highest_root,
    langlands_dual,
    normalize,
)
from ..weyl import minus_w0_automorphism, stabilizer_subtype
from .satake import (
    SatakeError,
    delete_node,
    is_quasi_compact,
    quasi_compact_catalog,
    simple_inner_class,
)
from .tables import TableRow

A_EVEN_NOTE = ("split class on A_2n: the Levi restriction keeps an odd-rank split A factor, "
               "which is never quasi-compact")


def _types_str(t) -> str:
    return "+".join(map(str, normalize(t))) or "0"


def verify_row(r: TableRow) -> list[CheckRecord]:
    """Checks (in order): node free, restriction quasi-compact, Levi type,
    quasi-compact flag, inner class, freeness."""
    s = r.satake
    recs: list[CheckRecord] = []
    free = r.node not in s.painted and s.partner(r.node) == r.node and s.crossed == r.node
    recs.append(CheckRecord.compare("satake.node_free", r.subject, True, free))

    try:
        levi = delete_node(s, r.node)
        restricted = is_quasi_compact(levi)
        note = A_EVEN_NOTE if (not restricted and r.dual_type.family == "A"
                               and r.dual_type.rank % 2 == 0) else ""
        recs.append(CheckRecord.compare("satake.restriction_quasi_compact", r.subject,
                                        True, restricted, note))
    except SatakeError as exc:
        levi = None
        recs.append(CheckRecord("satake.restriction_quasi_compact", r.subject, "fail",
                                True, str(exc)))

    stab = stabilizer_subtype(fundamental_weight(r.dual_type, r.node))
    expected = _types_str(r.levi_derived)
    got = [_types_str(stab)] + ([_types_str(levi.base)] if levi is not None else [])
    recs.append(CheckRecord.compare("satake.levi_type", r.subject, expected,
                                    got[0] if len(set(got)) == 1 else " vs ".join(got)))

    whole = s.uncrossed()
    recs.append(CheckRecord.compare("satake.quasi_compact_flag", r.subject,
                                    r.quasi_compact, is_quasi_compact(whole)))

    cls = simple_inner_class(whole)
    recs.append(CheckRecord.compare("satake.inner_class", r.subject,
                                    "split" if r.table == 1 else "non-split",
                                    "split" if cls.is_split_class() else "non-split"))

    g = langlands_dual(r.dual_type)
    lam = fundamental_weight(g, r.node)
    if r.table == 1:
        recs.append(CheckRecord.compare("freeness.split", r.subject, r.quasi_compact,
                                        freeness_split(lam)))
    else:
        delta = cls.outer.compose(minus_w0_automorphism(g).inverse())
        count = fixed_weight_count(lam, delta)
        agree = (count != 0) == r.quasi_compact
        recs.append(CheckRecord("freeness.twisted", r.subject, "uncertified",
                                r.quasi_compact, count != 0,
                                f"twisted fixed count {count} under {delta}; "
                                + ("agrees" if agree else "disagrees") + " with the flag"))
    return recs


def catalog_checks(max_rank: int = 8) -> list[CheckRecord]:
    """Each catalog diagram lies in its own inner class and is quasi-compact;
    the inner-trivial entries are fully painted."""
    cat = quasi_compact_catalog()
    recs = []
    types = simple_types_up_to(max_rank)
    for t in (SimpleType("E", 6), SimpleType("E", 7)):
        if t not in types:
            types.append(t)
    for cls, d in cat.entries(types):
        subject = str(cls)
        recs.append(CheckRecord.compare("catalog.inner_class", subject, str(cls),
                                        str(simple_inner_class(d))))
        if cls.outer.is_identity():
            recs.append(CheckRecord.compare("catalog.compact", subject, cls.base.rank,
                                            len(d.painted)))
    for t in types[: min(len(types), 12)]:
        d = cat.lookup_swap(t)
        recs.append(CheckRecord.compare("catalog.swap", f"{t}+{t}", True, is_quasi_compact(d)))
    return recs


def _rank_so(m: int) -> int:
    return m // 2


def rank_comparison_cases(max_param: int = 6) -> list[CheckRecord]:
    """Fixed-subalgebra ranks in the two unequal-rank families, at all small
    parameters; each instance must be a strict inequality."""
    recs = []
    for n in range(1, max_param + 1):
        for k in range(0, n):
            a = _rank_so(2 * n)
            b = _rank_so(2 * k + 1) + _rank_so(2 * n - 2 * k - 1)
            recs.append(CheckRecord.compare(
                "rank.sl_even", f"sl_{2 * n} k={k}", [n, n - 1, True], [a, b, a > b]))
    for n in range(1, max_param + 1):
        a, b = 2 * n + 1, _rank_so(2 * n + 1)
        recs.append(CheckRecord.compare(
            "rank.sp", f"sp_{4 * n + 2}", [2 * n + 1, n, True], [a, b, a > b]))
    return recs


def coxeter_parity_check(max_rank: int = 8) -> list[CheckRecord]:
    recs = []
    for t in simple_types_up_to(max_rank):
        c = coxeter_number(t)
        excluded = t.family == "A" and t.rank % 2 == 0
        recs.append(CheckRecord.compare(
            "coxeter.parity", str(t), [c - 1, not excluded],
            [highest_root(t).height, c % 2 == 0]))
    return recs
