"""Exact univariate rational functions in T over Q.

``Polynomial`` stores ascending coefficients with trailing zeros trimmed.
``RationalFunction`` is always kept reduced: gcd(num, den) = 1, and either
``den(0) == 1`` or (when T divides den) den is monic.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import NotExpandableError


def _trim(coeffs):
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


class Polynomial:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        self.coeffs = _trim(Fraction(c) for c in coeffs)

    @classmethod
    def monomial(cls, k: int, c=1) -> Polynomial:
        return cls([0] * k + [c])

    @classmethod
    def one_minus_power(cls, b: int) -> Polynomial:
        """``1 - T^b``."""
        return cls([1] + [0] * (b - 1) + [-1])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def __getitem__(self, k):
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else Fraction(0)

    def lead(self) -> Fraction:
        return self.coeffs[-1]

    def valuation(self) -> int:
        return next(i for i, c in enumerate(self.coeffs) if c != 0)

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other):
        a, b = self.coeffs, other.coeffs
        n = max(len(a), len(b))
        return Polynomial([(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)])

    def __neg__(self):
        return Polynomial([-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            return Polynomial([c * other for c in self.coeffs])
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Polynomial()
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return Polynomial(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        out = Polynomial([1])
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def divmod(self, other: Polynomial):
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        r = list(self.coeffs)
        db = other.degree
        lb = other.lead()
        q = [Fraction(0)] * max(len(r) - db, 0)
        b = other.coeffs
        for k in range(len(r) - 1 - db, -1, -1):
            c = r[k + db] / lb
            if c:
                q[k] = c
                for i in range(db + 1):
                    r[k + i] -= c * b[i]
        return Polynomial(q), Polynomial(r[:db] if db > 0 else [])

    def __floordiv__(self, other):
        return self.divmod(other)[0]

    def __mod__(self, other):
        return self.divmod(other)[1]

    def monic(self) -> Polynomial:
        return self * (1 / self.lead()) if self.coeffs else self

    def reversed(self) -> Polynomial:
        return Polynomial(self.coeffs[::-1])

    def shift(self, k: int) -> Polynomial:
        return Polynomial([0] * k + list(self.coeffs)) if self.coeffs else self

    def __call__(self, x):
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __repr__(self):
        return f"Polynomial({[str(c) for c in self.coeffs]})"

    def __str__(self):
        return render_polynomial(self)


def poly_gcd(a: Polynomial, b: Polynomial) -> Polynomial:
    """Monic gcd (zero if both are zero)."""
    while b:
        a, b = b, a % b
        if b:
            b = b.monic()
    return a.monic()


def _coef_str(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def render_polynomial(p: Polynomial, var: str = "T") -> str:
    """Ascending rendering, e.g. ``1+2T^3-T^5`` or ``(1/2)T``."""
    if p.is_zero():
        return "0"
    out = []
    for k, c in enumerate(p.coeffs):
        if c == 0:
            continue
        neg = c < 0
        a = -c if neg else c
        mono = "" if k == 0 else (var if k == 1 else f"{var}^{k}")
        if k == 0:
            body = _coef_str(a)
        elif a == 1:
            body = mono
        elif a.denominator == 1:
            body = f"{a.numerator}{mono}"
        else:
            body = f"({_coef_str(a)}){mono}"
        if out:
            out.append(("-" if neg else "+") + body)
        else:
            out.append(("-" if neg else "") + body)
    return "".join(out)


@dataclass(frozen=True, eq=False)
class RationalFunction:
    num: Polynomial
    den: Polynomial

    def __post_init__(self):
        if self.den.is_zero():
            raise ZeroDivisionError("zero denominator")
        num, den = self.num, self.den
        if num.is_zero():
            num, den = Polynomial(), Polynomial([1])
        else:
            g = poly_gcd(num, den)
            if g.degree > 0:
                num, den = num // g, den // g
            scale = den[0] if den[0] != 0 else den.lead()
            if scale != 1:
                num, den = num * (1 / scale), den * (1 / scale)
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    @classmethod
    def from_polys(cls, num, den=None) -> RationalFunction:
        num = num if isinstance(num, Polynomial) else Polynomial(num)
        den = Polynomial([1]) if den is None else den if isinstance(den, Polynomial) else Polynomial(den)
        return cls(num, den)

    @classmethod
    def constant(cls, c) -> RationalFunction:
        return cls(Polynomial([c]), Polynomial([1]))

    @classmethod
    def T(cls, k: int = 1) -> RationalFunction:
        return cls(Polynomial.monomial(k) if k >= 0 else Polynomial([1]),
                   Polynomial([1]) if k >= 0 else Polynomial.monomial(-k))

    @classmethod
    def cyclotomic_product(cls, num, exponents: Sequence[int]) -> RationalFunction:
        """``num / prod_b (1 - T^b)``."""
        den = Polynomial([1])
        for b in exponents:
            den = den * Polynomial.one_minus_power(b)
        num = num if isinstance(num, Polynomial) else Polynomial(num)
        return cls(num, den)

    def is_zero(self):
        return self.num.is_zero()

    def __add__(self, other):
        other = _coerce(other)
        return RationalFunction(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction(-self.num, self.den)

    def __sub__(self, other):
        return self + (-_coerce(other))

    def __rsub__(self, other):
        return _coerce(other) - self

    def __mul__(self, other):
        other = _coerce(other)
        return RationalFunction(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _coerce(other)
        if other.is_zero():
            raise ZeroDivisionError("division by zero rational function")
        return RationalFunction(self.num * other.den, self.den * other.num)

    def __pow__(self, k: int):
        if k < 0:
            return RationalFunction.constant(1) / (self ** (-k))
        return RationalFunction(self.num ** k, self.den ** k)

    def __eq__(self, other):
        if isinstance(other, (RationalFunction, int, Fraction)):
            return equals(self, _coerce(other))
        return NotImplemented

    def __hash__(self):
        return hash((self.num, self.den))

    def __str__(self):
        return render(self)

    def __repr__(self):
        return f"RationalFunction({render(self)!r})"


def _coerce(x) -> RationalFunction:
    if isinstance(x, RationalFunction):
        return x
    if isinstance(x, Polynomial):
        return RationalFunction(x, Polynomial([1]))
    return RationalFunction.constant(x)


def add(a: RationalFunction, b: RationalFunction) -> RationalFunction:
    return a + b


def mul(a: RationalFunction, b: RationalFunction) -> RationalFunction:
    return a * b


def equals(a: RationalFunction, b: RationalFunction) -> bool:
    """Cross-multiplication test; independent of normalisation."""
    return a.num * b.den == b.num * a.den


def substitute_inverse(R: RationalFunction) -> RationalFunction:
    """``R(1/T)``."""
    if R.is_zero():
        return R
    p, q = R.num.degree, R.den.degree
    num, den = R.num.reversed(), R.den.reversed()
    if q >= p:
        num = num.shift(q - p)
    else:
        den = den.shift(p - q)
    return RationalFunction(num, den)


def series(R: RationalFunction, M: int) -> list[Fraction]:
    """Taylor coefficients of R at 0 up to degree M."""
    if M < 0:
        raise ValueError("M must be nonnegative")
    d0 = R.den[0]
    if d0 == 0:
        raise NotExpandableError("denominator vanishes at T = 0")
    den = R.den.coeffs
    out: list[Fraction] = []
    for n in range(M + 1):
        acc = R.num[n]
        for k in range(1, min(n, len(den) - 1) + 1):
            acc -= den[k] * out[n - k]
        out.append(acc / d0)
    return out


@dataclass(frozen=True)
class FunEqReport:
    exists: bool
    epsilon: int | None = None
    b: int | None = None


def detect_functional_equation(R: RationalFunction) -> FunEqReport:
    """Test ``R(1/T) = (-1)^epsilon T^b R(T)``."""
    if R.is_zero():
        raise ValueError("functional equation of the zero function is undefined")
    Q = substitute_inverse(R) / R
    num, den = Q.num, Q.den
    nz_num = [k for k, c in enumerate(num.coeffs) if c != 0]
    nz_den = [k for k, c in enumerate(den.coeffs) if c != 0]
    if len(nz_num) != 1 or len(nz_den) != 1:
        return FunEqReport(False)
    c = num.lead() / den.lead()
    if c not in (1, -1):
        return FunEqReport(False)
    return FunEqReport(True, 0 if c == 1 else 1, num.degree - den.degree)


def factor_denominator(den: Polynomial):
    """Greedy split ``den = T^k * prod (1 - T^b)^m * rest``, largest b first.

    Returns ``(k, {b: m}, rest, sign)`` with ``den = sign * T^k * prod * rest``.
    Not canonical; only used for display.
    """
    k = den.valuation() if den else 0
    rest = Polynomial(den.coeffs[k:])
    sign = Fraction(1)
    if rest[0] != 1:
        sign = rest[0]
        rest = rest * (1 / sign)
    mult: dict[int, int] = {}
    for b in range(rest.degree, 0, -1):
        f = Polynomial.one_minus_power(b)
        while rest.degree >= b:
            q, r = rest.divmod(f)
            if r:
                break
            rest = q
            mult[b] = mult.get(b, 0) + 1
    return k, mult, rest, sign


def display_factored(R: RationalFunction) -> str:
    """E.g. ``(1+2T^3+2T^5+T^8) / (1-T)^3 (1-T^3) (1-T^5) (1-T^6)``."""
    if R.is_zero():
        return "0"
    k, mult, rest, sign = factor_denominator(R.den)
    num = R.num * (1 / sign) if sign != 1 else R.num
    factors = []
    if k:
        factors.append("T" if k == 1 else f"T^{k}")
    for b in sorted(mult):
        base = "(1-T)" if b == 1 else f"(1-T^{b})"
        factors.append(base if mult[b] == 1 else f"{base}^{mult[b]}")
    if rest.degree > 0:
        factors.append(f"({render_polynomial(rest)})")
    nz = sum(1 for c in num.coeffs if c != 0)
    num_s = render_polynomial(num)
    if nz > 1 and factors:
        num_s = f"({num_s})"
    if not factors:
        return num_s
    return f"{num_s} / {' '.join(factors)}"


def render(R: RationalFunction) -> str:
    """Plain ``num / den`` rendering of the normalised fraction."""
    if R.den == Polynomial([1]):
        return render_polynomial(R.num)
    return f"({render_polynomial(R.num)}) / ({render_polynomial(R.den)})"
