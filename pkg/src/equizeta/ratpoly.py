"""Exact rational-function arithmetic.

Univariate integer polynomials in u are plain tuples of ints in ascending
powers with no trailing zeros (the empty tuple is 0).  On top of those sit:

* ``RatFunc``      -- reduced fractions of integer polynomials in u,
* ``BiPoly``       -- integer polynomials in (u, T) as sparse coefficient maps,
* ``ZetaRational`` -- fractions of ``BiPoly`` compared by cross-multiplication,
* ``TSeries``      -- truncated power series in T with ``RatFunc`` coefficients.

Everything is arbitrary-precision and immutable; there is no floating point
anywhere in this package.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence

from .errors import (
    DivisionByZero,
    NotExpandable,
    NotSeriesExpandable,
    SchemaError,
    ZeroDenominator,
)


# ---------------------------------------------------------------------------
# tuple-based univariate polynomials
# ---------------------------------------------------------------------------

def ptrim(coeffs: Iterable[int]) -> tuple:
    cs = list(coeffs)
    while cs and cs[-1] == 0:
        cs.pop()
    return tuple(cs)


def pdeg(a: tuple) -> int:
    """Degree; -1 for the zero polynomial."""
    return len(a) - 1


def padd(a: tuple, b: tuple) -> tuple:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] += c
    return ptrim(out)


def pneg(a: tuple) -> tuple:
    return tuple(-c for c in a)


def pmul(a: tuple, b: tuple) -> tuple:
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca:
            for j, cb in enumerate(b):
                out[i + j] += ca * cb
    return ptrim(out)


def pmonomial(k: int, c: int = 1) -> tuple:
    if c == 0:
        return ()
    return (0,) * k + (c,)


def pcontent(a: tuple) -> int:
    g = 0
    for c in a:
        g = gcd(g, abs(c))
    return g


def pprimitive(a: tuple) -> tuple:
    """Content 1 and positive leading coefficient; () stays ()."""
    if not a:
        return ()
    g = pcontent(a)
    if a[-1] < 0:
        g = -g
    return tuple(c // g for c in a)


def peval(a: tuple, x: int) -> int:
    out = 0
    for c in reversed(a):
        out = out * x + c
    return out


def _qdivmod(num: list, den: list):
    """Division with remainder over Fraction coefficient lists."""
    num = list(num)
    q = [Fraction(0)] * max(len(num) - len(den) + 1, 0)
    d = len(den) - 1
    lead = den[-1]
    for k in range(len(num) - 1, d - 1, -1):
        if num[k] == 0:
            continue
        c = num[k] / lead
        q[k - d] = c
        for j, cd in enumerate(den):
            num[k - d + j] -= c * cd
    while num and num[-1] == 0:
        num.pop()
    return q, num


def pgcd(a: tuple, b: tuple) -> tuple:
    """Primitive gcd with positive leading coefficient (Euclid over Q)."""
    fa = [Fraction(c) for c in a]
    fb = [Fraction(c) for c in b]
    while fb:
        _, fa = _qdivmod(fa, fb)
        fa, fb = fb, fa
    if not fa:
        return ()
    # clear denominators, then reduce to primitive form
    mult = 1
    for c in fa:
        mult = mult * c.denominator // gcd(mult, c.denominator)
    return pprimitive(tuple(int(c * mult) for c in fa))


def pdivexact(a: tuple, b: tuple) -> tuple:
    """Exact quotient a / b; raises if b does not divide a over the integers."""
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    if not a:
        return ()
    q, r = _qdivmod([Fraction(c) for c in a], [Fraction(c) for c in b])
    if r:
        raise ValueError("inexact polynomial division")
    out = []
    for c in q:
        if c.denominator != 1:
            raise ValueError("inexact polynomial division")
        out.append(int(c))
    return ptrim(out)


def plcm(a: tuple, b: tuple) -> tuple:
    if not a or not b:
        return ()
    return pprimitive(pdivexact(pmul(a, b), pgcd(a, b)))


def pstr(a: tuple, var: str = "u") -> str:
    """Human-readable form, descending powers: ``u^2 - u + 1``."""
    if not a:
        return "0"
    parts = []
    for k in range(len(a) - 1, -1, -1):
        c = a[k]
        if c == 0:
            continue
        if k == 0:
            body = str(abs(c))
        else:
            v = var if k == 1 else f"{var}^{k}"
            body = v if abs(c) == 1 else f"{abs(c)}*{v}"
        if not parts:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(f"+ {body}" if c > 0 else f"- {body}")
    return " ".join(parts)


# ---------------------------------------------------------------------------
# reduced rational functions of u
# ---------------------------------------------------------------------------

def _canonical(num, den):
    num = ptrim(num)
    den = ptrim(den)
    if not den:
        raise ZeroDenominator("denominator is the zero polynomial")
    if not num:
        return (), (1,)
    g = pgcd(num, den)
    if g != (1,):
        num = pdivexact(num, g)
        den = pdivexact(den, g)
    c = gcd(pcontent(num), pcontent(den))
    if den[-1] < 0:
        c = -c
    if c != 1:
        num = tuple(x // c for x in num)
        den = tuple(x // c for x in den)
    return num, den


class RatFunc:
    """Canonical reduced fraction of integer polynomials in u.

    The representative is unique: gcd(num, den) is a unit over Q, the joint
    integer content of (num, den) is 1, and den has a positive leading
    coefficient.  This makes structural equality and hashing meaningful.
    """

    __slots__ = ("num", "den")

    def __init__(self, num=0, den=1):
        if isinstance(num, RatFunc) or isinstance(den, RatFunc):
            raise TypeError("nest RatFunc via arithmetic, not the constructor")
        if isinstance(num, int):
            num = (num,)
        if isinstance(den, int):
            den = (den,)
        num, den = _canonical(num, den)
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, *args):
        raise AttributeError("RatFunc is immutable")

    # -- constructors ------------------------------------------------------

    @classmethod
    def poly(cls, coeffs) -> "RatFunc":
        return cls(tuple(coeffs), (1,))

    @classmethod
    def monomial(cls, k: int, c: int = 1) -> "RatFunc":
        """c * u^k, with negative k allowed."""
        if k >= 0:
            return cls(pmonomial(k, c), (1,))
        return cls((c,), pmonomial(-k))

    # -- predicates ----------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.num

    def __bool__(self) -> bool:
        return bool(self.num)

    # -- ring/field operations ----------------------------------------------

    def _coerce(self, other):
        if isinstance(other, RatFunc):
            return other
        if isinstance(other, int):
            return RatFunc(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return RatFunc(
            padd(pmul(self.num, other.den), pmul(other.num, self.den)),
            pmul(self.den, other.den),
        )

    __radd__ = __add__

    def __neg__(self):
        return RatFunc(pneg(self.num), self.den)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return RatFunc(pmul(self.num, other.num), pmul(self.den, other.den))

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if other.is_zero():
            raise DivisionByZero("division of rational functions by zero")
        return RatFunc(pmul(self.num, other.den), pmul(self.den, other.num))

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other / self

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    # -- expansion ------------------------------------------------------------

    def laurent(self, k_min: int) -> list:
        """Coefficients of the expansion in Z[u][[u^-1]].

        Returns the integer coefficients of u^k for k from the top exponent
        deg(num) - deg(den) down to ``k_min``.  Empty when ``k_min`` exceeds
        the top exponent.
        """
        if self.is_zero():
            return []
        top = pdeg(self.num) - pdeg(self.den)
        if k_min > top:
            return []
        # reverse both polynomials so the expansion becomes an ordinary
        # power-series division in v = u^-1
        n_rev = [Fraction(c) for c in reversed(self.num)]
        d_rev = [Fraction(c) for c in reversed(self.den)]
        if d_rev[0] == 0:
            raise NotExpandable("denominator has no leading coefficient")
        count = top - k_min + 1
        out = []
        for j in range(count):
            acc = n_rev[j] if j < len(n_rev) else Fraction(0)
            for i in range(1, min(j, len(d_rev) - 1) + 1):
                acc -= d_rev[i] * out[j - i]
            c = acc / d_rev[0]
            out.append(c)
        ints = []
        for c in out:
            if c.denominator != 1:
                raise NotExpandable("expansion has non-integer coefficients")
            ints.append(int(c))
        return ints

    def eval_fraction(self, x: int) -> Fraction:
        return Fraction(peval(self.num, x), peval(self.den, x))

    # -- presentation -----------------------------------------------------------

    def __str__(self) -> str:
        if self.den == (1,):
            return pstr(self.num)
        n = pstr(self.num)
        if len([c for c in self.num if c]) > 1:
            n = f"({n})"
        return f"{n}/({pstr(self.den)})"

    def __repr__(self) -> str:
        return f"RatFunc({self.num!r}, {self.den!r})"

    # -- serialization -------------------------------------------------------

    def to_json(self) -> dict:
        return {
            "num": [str(c) for c in self.num],
            "den": [str(c) for c in self.den],
        }

    @classmethod
    def from_json(cls, obj) -> "RatFunc":
        if not isinstance(obj, dict) or "num" not in obj or "den" not in obj:
            raise SchemaError("rational function must be {num, den}")
        return cls(_ints_from_json(obj["num"]), _ints_from_json(obj["den"]))


def _ints_from_json(seq) -> tuple:
    if not isinstance(seq, (list, tuple)):
        raise SchemaError("polynomial must be an array of integer strings")
    out = []
    for c in seq:
        if isinstance(c, bool) or not isinstance(c, (int, str)):
            raise SchemaError(f"bad polynomial coefficient {c!r}")
        try:
            out.append(int(c))
        except ValueError as exc:
            raise SchemaError(f"bad polynomial coefficient {c!r}") from exc
    return tuple(out)


ZERO = RatFunc(0)
ONE = RatFunc(1)
U = RatFunc.monomial(1)
U_MINUS_1 = RatFunc.poly((-1, 1))


# ---------------------------------------------------------------------------
# sparse bivariate polynomials in (u, T)
# ---------------------------------------------------------------------------

class BiPoly:
    """Integer polynomial in (u, T) stored as {(u_exp, t_exp): coeff}."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean = {}
        if terms:
            for (ue, te), c in dict(terms).items():
                if ue < 0 or te < 0:
                    raise ValueError("BiPoly exponents must be non-negative")
                if c:
                    clean[(int(ue), int(te))] = c
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, *args):
        raise AttributeError("BiPoly is immutable")

    @classmethod
    def from_upoly(cls, p: tuple, t_exp: int = 0) -> "BiPoly":
        return cls({(k, t_exp): c for k, c in enumerate(p) if c})

    @classmethod
    def monomial(cls, u_exp: int, t_exp: int, c: int = 1) -> "BiPoly":
        return cls({(u_exp, t_exp): c})

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __add__(self, other):
        out = dict(self.terms)
        for k, c in other.terms.items():
            v = out.get(k, 0) + c
            if v:
                out[k] = v
            else:
                out.pop(k, None)
        return BiPoly(out)

    def __neg__(self):
        return BiPoly({k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if not self.terms or not other.terms:
            return BiPoly()
        out = {}
        for (ua, ta), ca in self.terms.items():
            for (ub, tb), cb in other.terms.items():
                k = (ua + ub, ta + tb)
                v = out.get(k, 0) + ca * cb
                if v:
                    out[k] = v
                else:
                    del out[k]
        return BiPoly(out)

    def __eq__(self, other):
        if not isinstance(other, BiPoly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def eval_at(self, u0: int, t0: int) -> int:
        return sum(c * u0**ue * t0**te for (ue, te), c in self.terms.items())

    def t_profile(self) -> dict:
        """Group coefficients by T-exponent into u-polynomial tuples."""
        byt = {}
        for (ue, te), c in self.terms.items():
            byt.setdefault(te, {})[ue] = c
        out = {}
        for te, umap in byt.items():
            width = max(umap) + 1
            row = [0] * width
            for ue, c in umap.items():
                row[ue] = c
            out[te] = ptrim(row)
        return out

    def to_json(self) -> list:
        return [
            {"u": ue, "t": te, "c": str(c)}
            for (ue, te), c in sorted(self.terms.items(), key=lambda kv: (kv[0][1], kv[0][0]))
        ]

    @classmethod
    def from_json(cls, obj) -> "BiPoly":
        if not isinstance(obj, list):
            raise SchemaError("bivariate polynomial must be an array")
        terms = {}
        for entry in obj:
            if not isinstance(entry, dict) or not {"u", "t", "c"} <= set(entry):
                raise SchemaError("bivariate term must be {u, t, c}")
            try:
                terms[(int(entry["u"]), int(entry["t"]))] = int(entry["c"])
            except (TypeError, ValueError) as exc:
                raise SchemaError(f"bad bivariate term {entry!r}") from exc
        return cls(terms)

    def __repr__(self):
        return f"BiPoly({self.terms!r})"


BI_ONE = BiPoly({(0, 0): 1})


# ---------------------------------------------------------------------------
# zeta-function fractions
# ---------------------------------------------------------------------------

class ZetaRational:
    """Fraction of bivariate polynomials; equality by cross-multiplication.

    Deliberately not gcd-reduced: bivariate gcds are expensive and equality
    does not need them.  Engine outputs keep their denominator as a product
    of (u^nu - T^N) factors and powers of u and (u - 1).
    """

    __slots__ = ("num", "den")

    def __init__(self, num: BiPoly, den: BiPoly = BI_ONE):
        if den.is_zero():
            raise ZeroDenominator("zeta denominator is zero")
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, *args):
        raise AttributeError("ZetaRational is immutable")

    @classmethod
    def zero(cls) -> "ZetaRational":
        return cls(BiPoly(), BI_ONE)

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __eq__(self, other):
        if not isinstance(other, ZetaRational):
            return NotImplemented
        return self.num * other.den == other.num * self.den

    def __hash__(self):
        raise TypeError("ZetaRational is not hashable (no canonical form)")

    def __add__(self, other):
        if not isinstance(other, ZetaRational):
            return NotImplemented
        return ZetaRational(
            self.num * other.den + other.num * self.den, self.den * other.den
        )

    def t_series(self, order: int) -> "TSeries":
        """Unique power-series expansion in T through T^order."""
        if order < 0:
            raise ValueError("order must be non-negative")
        nprof = self.num.t_profile()
        dprof = self.den.t_profile()
        d0 = dprof.get(0, ())
        if not d0:
            raise NotSeriesExpandable("denominator has zero T-constant part")
        d0rf = RatFunc.poly(d0)
        coeffs = []
        for n in range(order + 1):
            acc = RatFunc.poly(nprof.get(n, ()))
            for j in range(1, n + 1):
                dj = dprof.get(j)
                if dj:
                    acc = acc - RatFunc.poly(dj) * coeffs[n - j]
            coeffs.append(acc / d0rf)
        return TSeries(tuple(coeffs))

    def to_json(self) -> dict:
        return {"num": self.num.to_json(), "den": self.den.to_json()}

    @classmethod
    def from_json(cls, obj) -> "ZetaRational":
        if not isinstance(obj, dict) or "num" not in obj or "den" not in obj:
            raise SchemaError("zeta fraction must be {num, den}")
        return cls(BiPoly.from_json(obj["num"]), BiPoly.from_json(obj["den"]))

    def __repr__(self):
        return f"ZetaRational({self.num!r}, {self.den!r})"


# ---------------------------------------------------------------------------
# truncated T-series
# ---------------------------------------------------------------------------

class TSeries:
    """Truncated series sum_{n=0..order} c_n T^n with RatFunc coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Sequence[RatFunc]):
        if not coeffs:
            raise ValueError("a TSeries holds at least the T^0 coefficient")
        object.__setattr__(self, "coeffs", tuple(coeffs))

    def __setattr__(self, *args):
        raise AttributeError("TSeries is immutable")

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, n: int) -> RatFunc:
        return self.coeffs[n]

    def truncate(self, order: int) -> "TSeries":
        if order > self.order:
            raise ValueError("cannot extend a truncated series")
        return TSeries(self.coeffs[: order + 1])

    def __eq__(self, other):
        if not isinstance(other, TSeries):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def to_json(self) -> dict:
        return {"order": self.order, "coeffs": [c.to_json() for c in self.coeffs]}

    @classmethod
    def from_json(cls, obj) -> "TSeries":
        if not isinstance(obj, dict) or "coeffs" not in obj:
            raise SchemaError("series must be {order, coeffs}")
        coeffs = [RatFunc.from_json(c) for c in obj["coeffs"]]
        if obj.get("order") is not None and obj["order"] != len(coeffs) - 1:
            raise SchemaError("series order does not match coefficient count")
        return cls(coeffs)

    def __str__(self):
        parts = []
        for n, c in enumerate(self.coeffs):
            if not c.is_zero():
                parts.append(f"({c}) T^{n}")
        return " + ".join(parts) if parts else "0"

    def __repr__(self):
        return f"TSeries({self.coeffs!r})"
