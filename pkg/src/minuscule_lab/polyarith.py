"""Exact integer polynomials and ratios of products of ``(1 - q^a)``."""
from __future__ import annotations

import functools
from collections import Counter
from collections.abc import Iterable
from dataclasses import dataclass
from fractions import Fraction

_SUPERSCRIPTS = str.maketrans("0123456789", "⁰¹²³⁴⁵⁶⁷⁸⁹")


class NotAPolynomialError(ArithmeticError):
    """A ratio failed to reduce to a polynomial."""

    def __init__(self, msg: str = "not a polynomial") -> None:
        super().__init__(msg)


@dataclass(frozen=True)
class IntPoly:
    """Dense integer polynomial in ``q``; ``coeffs[k]`` multiplies ``q^k``."""

    coeffs: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        c = list(self.coeffs)
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(int(x) for x in c))

    @classmethod
    def one(cls) -> IntPoly:
        return cls((1,))

    @classmethod
    def monomial(cls, k: int, c: int = 1) -> IntPoly:
        return cls((0,) * k + (c,))

    @classmethod
    def from_exponents(cls, exps: Iterable[int]) -> IntPoly:
        """``sum q^e`` over a multiset of exponents."""
        cnt = Counter(exps)
        if not cnt:
            return cls()
        return cls(tuple(cnt.get(k, 0) for k in range(max(cnt) + 1)))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __add__(self, other: IntPoly) -> IntPoly:
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (0,) * (n - len(self.coeffs))
        b = other.coeffs + (0,) * (n - len(other.coeffs))
        return IntPoly(tuple(x + y for x, y in zip(a, b)))

    def __neg__(self) -> IntPoly:
        return IntPoly(tuple(-x for x in self.coeffs))

    def __sub__(self, other: IntPoly) -> IntPoly:
        return self + (-other)

    def __mul__(self, other: IntPoly) -> IntPoly:
        if not self.coeffs or not other.coeffs:
            return IntPoly()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPoly(tuple(out))

    def divmod_exact(self, divisor: IntPoly) -> tuple[IntPoly, IntPoly]:
        """Long division by a divisor with leading coefficient +-1."""
        if not divisor.coeffs:
            raise ZeroDivisionError("division by zero polynomial")
        lead = divisor.coeffs[-1]
        if lead not in (1, -1):
            raise ValueError("divisor must have unit leading coefficient")
        rem = list(self.coeffs)
        dd = divisor.degree
        quot = [0] * max(len(rem) - dd, 0)
        for k in range(len(rem) - 1, dd - 1, -1):
            c = rem[k]
            if c == 0:
                continue
            f = c * lead
            quot[k - dd] = f
            for j, b in enumerate(divisor.coeffs):
                rem[k - dd + j] -= f * b
        return IntPoly(tuple(quot)), IntPoly(tuple(rem))

    def __floordiv__(self, divisor: IntPoly) -> IntPoly:
        q, r = self.divmod_exact(divisor)
        if r:
            raise NotAPolynomialError()
        return q

    def __call__(self, x: int | Fraction) -> int | Fraction:
        acc: int | Fraction = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def is_even(self) -> bool:
        return all(c == 0 for c in self.coeffs[1::2])

    def is_palindromic(self) -> bool:
        return self.coeffs == self.coeffs[::-1]

    def render(self, unicode: bool = False) -> str:
        """Ascending canonical text, e.g. ``1 + q^4 + q^8``."""
        if not self.coeffs:
            return "0"
        parts: list[str] = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mag = abs(c)
            if k == 0:
                body = str(mag)
            else:
                power = "" if k == 1 else (str(k).translate(_SUPERSCRIPTS) if unicode else f"^{k}")
                body = ("" if mag == 1 else str(mag)) + "q" + power
            if not parts:
                parts.append(("-" if c < 0 else "") + body)
            else:
                parts.append(("- " if c < 0 else "+ ") + body)
        return " ".join(parts)

    def __str__(self) -> str:
        return self.render()

    @classmethod
    def parse(cls, text: str) -> IntPoly:
        """Inverse of :meth:`render` (ASCII form)."""
        text = text.replace(" ", "")
        if text == "0":
            return cls()
        out: Counter[int] = Counter()
        for sign, body in _split_terms(text):
            if "q" in body:
                coef, _, power = body.partition("q")
                k = int(power[1:]) if power else 1
                c = int(coef) if coef else 1
            else:
                k, c = 0, int(body)
            out[k] += sign * c
        return cls(tuple(out.get(k, 0) for k in range(max(out) + 1)))


def _split_terms(text: str) -> list[tuple[int, str]]:
    terms, sign, cur = [], 1, ""
    for ch in text:
        if ch in "+-" and cur and not cur.endswith("^"):
            terms.append((sign, cur))
            sign, cur = (1 if ch == "+" else -1), ""
        elif ch in "+-" and not cur:
            sign = 1 if ch == "+" else -1
        else:
            cur += ch
    terms.append((sign, cur))
    return terms


def one_minus_q_power(a: int) -> IntPoly:
    return IntPoly((1,) + (0,) * (a - 1) + (-1,))


@functools.lru_cache(maxsize=None)
def cyclotomic(d: int) -> IntPoly:
    """``Phi_d``, by exact division of ``q^d - 1`` by the lower ``Phi_e``."""
    p = IntPoly((-1,) + (0,) * (d - 1) + (1,))
    for e in range(1, d):
        if d % e == 0:
            p = p // cyclotomic(e)
    return p


def _divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


@dataclass(frozen=True)
class CycloRatio:
    """``prod (1 - q^a) / prod (1 - q^b)`` over multisets ``num`` and ``den``.

    Construction cancels common exponents, so equal ratios of this shape with
    the same factor multisets compare equal.
    """

    num: tuple[int, ...] = ()
    den: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        if any(a <= 0 for a in self.num + self.den):
            raise ValueError("exponents must be positive")
        n, d = Counter(self.num), Counter(self.den)
        common = n & d
        object.__setattr__(self, "num", tuple(sorted((n - common).elements())))
        object.__setattr__(self, "den", tuple(sorted((d - common).elements())))

    def __mul__(self, other: CycloRatio) -> CycloRatio:
        return CycloRatio(self.num + other.num, self.den + other.den)

    def __truediv__(self, other: CycloRatio) -> CycloRatio:
        return CycloRatio(self.num + other.den, self.den + other.num)

    def to_poly(self) -> IntPoly:
        return ratio_to_poly(self)

    def __str__(self) -> str:
        return f"num {{{','.join(map(str, self.num))}}} / den {{{','.join(map(str, self.den))}}}"


class _Indeterminate:
    _inst: _Indeterminate | None = None

    def __new__(cls) -> _Indeterminate:
        if cls._inst is None:
            cls._inst = super().__new__(cls)
        return cls._inst

    def __repr__(self) -> str:
        return "INDETERMINATE"

    def __reduce__(self) -> str:
        return "INDETERMINATE"


INDETERMINATE = _Indeterminate()


def _ratio_by_cyclotomics(r: CycloRatio) -> IntPoly:
    mult: Counter[int] = Counter()
    for a in r.num:
        for d in _divisors(a):
            mult[d] += 1
    for b in r.den:
        for d in _divisors(b):
            mult[d] -= 1
    if any(m < 0 for m in mult.values()):
        raise NotAPolynomialError()
    # 1 - q^a = -(q^a - 1) = -prod_{d | a} Phi_d
    sign = -1 if (len(r.num) - len(r.den)) % 2 else 1
    p = IntPoly((sign,))
    for d in sorted(mult):
        for _ in range(mult[d]):
            p = p * cyclotomic(d)
    return p


def _ratio_by_division(r: CycloRatio) -> IntPoly:
    p = IntPoly.one()
    for a in r.num:
        p = p * one_minus_q_power(a)
    for b in r.den:
        p = p // one_minus_q_power(b)
    return p


def ratio_to_poly(r: CycloRatio, method: str = "cyclotomic") -> IntPoly:
    """Materialize a ratio as a polynomial.

    ``method`` is ``"cyclotomic"`` (multiplicity bookkeeping of ``Phi_d``)
    or ``"division"`` (expand the numerator, then exact long division).
    Raises :class:`NotAPolynomialError` when the ratio is not a polynomial.

    >>> ratio_to_poly(CycloRatio((12,), (4,))).render()
    '1 + q^4 + q^8'
    """
    if method == "cyclotomic":
        return _cached_cyclotomic_route(r)
    if method == "division":
        return _ratio_by_division(r)
    raise ValueError(f"unknown method {method!r}")


@functools.lru_cache(maxsize=4096)
def _cached_cyclotomic_route(r: CycloRatio) -> IntPoly:
    return _ratio_by_cyclotomics(r)


def is_polynomial(r: CycloRatio) -> bool:
    try:
        ratio_to_poly(r)
    except NotAPolynomialError:
        return False
    return True


def evaluate(p: IntPoly, x: int) -> int:
    return p(x)


def even_part(r: CycloRatio) -> CycloRatio:
    """Keep only even exponents in numerator and denominator."""
    return CycloRatio(tuple(a for a in r.num if a % 2 == 0),
                      tuple(b for b in r.den if b % 2 == 0))


def eval_ratio_at_minus1(r: CycloRatio) -> int | Fraction | _Indeterminate:
    """Value (as a limit) at ``q = -1`` without expanding.

    Odd exponents contribute a factor 2; even exponents vanish to first order
    and ``(1 - q^{2a}) / (1 - q^{2b}) -> a / b``. With more vanishing factors
    below than above the result is ``INDETERMINATE``.
    """
    ev_n = [a for a in r.num if a % 2 == 0]
    ev_d = [b for b in r.den if b % 2 == 0]
    if len(ev_n) > len(ev_d):
        return 0
    if len(ev_n) < len(ev_d):
        return INDETERMINATE
    odd_surplus = (len(r.num) - len(ev_n)) - (len(r.den) - len(ev_d))
    val = Fraction(2) ** odd_surplus
    for a in ev_n:
        val *= Fraction(a, 2)
    for b in ev_d:
        val /= Fraction(b, 2)
    return int(val) if val.denominator == 1 else val


def eval_ratio_at_one(r: CycloRatio) -> int | Fraction | _Indeterminate:
    """Value (as a limit) at ``q = 1``: each factor vanishes to first order."""
    if len(r.num) > len(r.den):
        return 0
    if len(r.num) < len(r.den):
        return INDETERMINATE
    val = Fraction(1)
    for a in r.num:
        val *= a
    for b in r.den:
        val /= b
    return int(val) if val.denominator == 1 else val


def multiply(a, b):
    """Product of two IntPolys or two CycloRatios."""
    if type(a) is not type(b):
        raise TypeError("operands must have the same type")
    return a * b
