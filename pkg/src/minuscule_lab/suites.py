"""Verification suites assembled into deterministic reports."""
from __future__ import annotations

import itertools
import os
import random
from concurrent.futures import ProcessPoolExecutor

from .minuscule import (
    InvariantViolation,
    coinvariant_dim,
    cycle_count,
    degrees_poincare,
    direct_sum,
    dynkin_even,
    dynkin_product,
    dynkin_sum,
    fixed_points,
    fixed_weight_count,
    graded_orbit,
    list_minuscule,
    minuscule_sweep,
    permutation_trace,
    simple_types_up_to,
    w0_delta_permutation,
)
from .polyarith import ratio_to_poly
from .realforms import (
    catalog_checks,
    coxeter_parity_check,
    instantiate_range,
    rank_comparison_cases,
    verify_row,
)
from .realforms.tables import TableRow
from .report import CheckRecord, Report
from .rootsys import SimpleType, Weight, weyl_degrees
from .weyl import number_of_positive_roots, weyl_group_order

EXTRA_TYPES = (SimpleType("E", 6), SimpleType("E", 7))
SEED = 20240601


def describe(lam: Weight) -> str:
    (t,) = lam.ambient.factors
    return f"{t} node {lam.coords.index(1) + 1}"


def identity_records(lam: Weight) -> list[CheckRecord]:
    """Identities A-D and F (orbit part) plus dimension and symmetry for one weight."""
    s = describe(lam)
    recs = []
    try:
        d = dynkin_sum(lam)
        recs.append(CheckRecord.compare("identity.two_route", s, d.render(),
                                        ratio_to_poly(dynkin_product(lam)).render()))
        recs.append(CheckRecord.compare("identity.q_minus_one", s, d(-1),
                                        fixed_weight_count(lam)))
        ev = dynkin_even(lam)
        recs.append(CheckRecord.compare("identity.even_bridge", s, [d(-1), True],
                                        [ev(1), ev.is_even()]))
        dp = degrees_poincare(lam)
        recs.append(CheckRecord.compare("identity.degrees", s, [d.render(), ev.render()],
                                        [ratio_to_poly(dp.full).render(),
                                         ratio_to_poly(dp.even).render()]))
        go = graded_orbit(lam)
        recs.append(CheckRecord.compare("identity.dimension", s, len(go), d(1)))
        recs.append(CheckRecord.compare("identity.palindromic", s, True, d.is_palindromic()))
        perm = w0_delta_permutation(go)
        recs.append(CheckRecord.compare(
            "identity.coinvariants", s, [fixed_points(perm), cycle_count(perm),
                                         2 * cycle_count(perm) - len(perm)],
            [permutation_trace(perm), coinvariant_dim(perm), fixed_points(perm)]))
    except InvariantViolation as exc:
        recs.append(CheckRecord("identity.internal", s, "fail", None, str(exc)))
    return recs


def structural_records(t: SimpleType) -> list[CheckRecord]:
    deg = weyl_degrees(t)
    return [CheckRecord.compare("structure.degrees", str(t),
                                [weyl_group_order(t), number_of_positive_roots(t)],
                                [deg.product, deg.exponent_sum])]


def multiplicativity_records(max_rank: int = 4) -> list[CheckRecord]:
    cases = minuscule_sweep(max_rank)
    recs = []
    for a, b in itertools.combinations_with_replacement(cases, 2):
        (ta,), (tb,) = a.ambient.factors, b.ambient.factors
        go = direct_sum([(ta, a), (tb, b)])
        prod_poly = dynkin_sum(a) * dynkin_sum(b)
        fixed = sum(1 for i, j in enumerate(w0_delta_permutation(go)) if i == j)
        recs.append(CheckRecord.compare(
            "identity.multiplicative", f"{describe(a)} + {describe(b)}",
            [prod_poly.render(), fixed_weight_count(a) * fixed_weight_count(b)],
            [go.poincare().render(), fixed]))
    return recs


def random_permutation_records(count: int = 200, max_size: int = 60,
                               seed: int = SEED) -> list[CheckRecord]:
    rng = random.Random(seed)
    recs = []
    for trial in range(count):
        size = rng.randint(1, max_size)
        perm = list(range(size))
        if trial % 2:
            # random involution: pair up a random subset
            pts = rng.sample(range(size), 2 * rng.randint(0, size // 2))
            for x, y in zip(pts[::2], pts[1::2]):
                perm[x], perm[y] = y, x
        else:
            rng.shuffle(perm)
        inv = all(perm[perm[i]] == i for i in range(size))
        expected = [permutation_trace(perm), cycle_count(perm)]
        actual = [fixed_points(perm), coinvariant_dim(perm)]
        if inv:
            expected.append(2 * cycle_count(perm) - size)
            actual.append(fixed_points(perm))
        recs.append(CheckRecord.compare("identity.coinvariants_random",
                                        f"trial {trial} size {size}", expected, actual))
    return recs


def worker_count() -> int:
    raw = os.environ.get("MINUSCULE_LAB_THREADS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def _ordered_map(fn, items):
    workers = min(worker_count(), len(items))
    if workers <= 1:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items))


def identities_suite(max_rank: int = 8) -> list[CheckRecord]:
    types = list(simple_types_up_to(max_rank))
    types += [t for t in EXTRA_TYPES if t not in types]
    weights = [w for t in types for w in list_minuscule(t)]
    recs: list[CheckRecord] = []
    for part in _ordered_map(identity_records, weights):
        recs += part
    for t in types:
        recs += structural_records(t)
    recs += coxeter_parity_check(max_rank)
    recs += multiplicativity_records(min(max_rank, 4))
    recs += random_permutation_records()
    return recs


def table_rows_for(max_rank: int) -> list[TableRow]:
    """Rows for 2 <= n <= 6 whose type has rank at most ``max_rank``; the
    exceptional rows are always included."""
    return [r for r in instantiate_range(2, 6)
            if r.dual_type.rank <= max_rank or r.dual_type.family == "E"]


def tables_suite(max_rank: int = 8) -> list[CheckRecord]:
    recs: list[CheckRecord] = []
    for part in _ordered_map(verify_row, table_rows_for(max_rank)):
        recs += part
    recs += catalog_checks(max_rank)
    recs += rank_comparison_cases()
    return recs


def run_suite(name: str, max_rank: int = 8) -> Report:
    if max_rank < 1:
        raise ValueError("max_rank must be at least 1")
    rep = Report(name)
    if name in ("identities", "all"):
        rep.extend(identities_suite(max_rank))
    if name in ("tables", "all"):
        rep.extend(tables_suite(max_rank))
    if name not in ("identities", "tables", "all"):
        raise ValueError(f"unknown suite {name!r}")
    return rep
