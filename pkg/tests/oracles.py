"""Reference computations that share no code with the package.

Each oracle uses a combinatorial model or plain list arithmetic. Running this
file rewrites ``data/oracle_values.json``; tests compare against that frozen
file, never against values typed in by hand.
"""
from __future__ import annotations

import itertools
import json
import math
from pathlib import Path

FROZEN = Path(__file__).with_name("data") / "oracle_values.json"


def poly_mul(a: list[int], b: list[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def poly_divide(num: list[int], den: list[int]) -> list[int]:
    """Long division with zero remainder required (den[0] = 1 by construction)."""
    num = list(num)
    out = []
    while len(num) >= len(den):
        c = num[0] // den[0]
        out.append(c)
        for j, y in enumerate(den):
            num[j] -= c * y
        num.pop(0)
    assert not any(num), "division left a remainder"
    return trim(out)


def trim(p: list[int]) -> list[int]:
    while p and p[-1] == 0:
        p = p[:-1]
    return p


def one_minus(a: int) -> list[int]:
    return [1] + [0] * (a - 1) + [-1]


def product_ratio(num: list[int], den: list[int]) -> list[int]:
    top = [1]
    for a in num:
        top = poly_mul(top, one_minus(a))
    bot = [1]
    for b in den:
        bot = poly_mul(bot, one_minus(b))
    return poly_divide(top, bot)


def gaussian_by_subsets(n: int, k: int) -> list[int]:
    """Coefficients of [n choose k]_q as a sum over k-subsets of q^(sum - min)."""
    base = k * (k - 1) // 2
    coeffs = [0] * (k * (n - k) + 1)
    for s in itertools.combinations(range(n), k):
        coeffs[sum(s) - base] += 1
    return coeffs


def gaussian_by_division(n: int, k: int) -> list[int]:
    return product_ratio(list(range(n - k + 1, n + 1)), list(range(1, k + 1)))


def reversal_fixed_subsets(n: int, k: int) -> int:
    """k-subsets of {0..n-1} stable under i -> n-1-i."""
    return sum(1 for s in itertools.combinations(range(n), k)
               if set(s) == {n - 1 - i for i in s})


def evaluate(p: list[int], x: int) -> int:
    return sum(c * x ** i for i, c in enumerate(p))


def spin_b(n: int) -> list[int]:
    """Subsets of {1..n} graded by their sum: prod (1 + q^i)."""
    p = [1]
    for i in range(1, n + 1):
        p = poly_mul(p, [1] + [0] * (i - 1) + [1])
    return p


def spin_d(n: int) -> list[int]:
    p = [1]
    for i in range(1, n):
        p = poly_mul(p, [1] + [0] * (i - 1) + [1])
    return p


def vector_d(n: int) -> list[int]:
    """e_1 > ... > e_{n-1} > +-e_n > -e_{n-1} > ... > -e_1."""
    p = [1] * (2 * n - 1)
    p[n - 1] = 2
    return p


def signed_chain(length: int) -> list[int]:
    return [1] * length


def classical_dynkin(family: str, rank: int, node: int) -> list[int] | None:
    n = rank
    if family == "A":
        return gaussian_by_subsets(n + 1, node)
    if family == "B" and node == n:
        return spin_b(n)
    if family == "C" and node == 1:
        return signed_chain(2 * n)
    if family == "D" and node == 1:
        return vector_d(n)
    if family == "D" and node in (n - 1, n):
        return spin_d(n)
    return None


def exceptional_dynkin() -> dict[str, list[int]]:
    # ratios of degree products: degrees of W over degrees of the Levi, with a
    # degree 1 for the one-dimensional centre
    return {
        "E6:1": product_ratio([9, 12], [1, 4]),
        "E6:6": product_ratio([9, 12], [1, 4]),
        "E7:7": product_ratio([10, 14, 18], [1, 5, 9]),
    }


def cases(max_rank: int = 8) -> list[tuple[str, int, int]]:
    out = []
    for n in range(1, max_rank + 1):
        out += [("A", n, k) for k in range(1, n + 1)]
        if n >= 2:
            out += [("B", n, n), ("C", n, 1)]
        if n >= 3:
            out += [("D", n, 1), ("D", n, n - 1), ("D", n, n)]
    out += [("E", 6, 1), ("E", 6, 6), ("E", 7, 7)]
    return out


def build() -> dict:
    dynkin = {}
    for fam, n, k in cases():
        key = f"{fam}{n}:{k}"
        p = classical_dynkin(fam, n, k) if fam != "E" else exceptional_dynkin()[f"E{n}:{k}"]
        dynkin[key] = {"coeffs": p, "at_minus_one": evaluate(p, -1), "size": sum(p)}
    gauss = {}
    for n in range(1, 10):
        for k in range(0, n + 1):
            sub, div = gaussian_by_subsets(n, k), gaussian_by_division(n, k)
            assert sub == div, (n, k)
            gauss[f"{n}:{k}"] = {"coeffs": sub, "fixed_subsets": reversal_fixed_subsets(n, k)}
    return {
        "dynkin": dynkin,
        "gaussian": gauss,
        "weyl_order": {"A2": 6, "B2": 8, "G2": 12, "F4": 1152, "D4": 192,
                       "E6": 51840, "E7": 2903040, "E8": 696729600,
                       "A8": math.factorial(9), "B8": 2 ** 8 * math.factorial(8)},
    }


if __name__ == "__main__":
    FROZEN.parent.mkdir(exist_ok=True)
    FROZEN.write_text(json.dumps(build(), indent=1, sort_keys=True) + "\n")
    print(f"wrote {FROZEN}")
