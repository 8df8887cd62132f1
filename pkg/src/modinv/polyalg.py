"""Polynomials: univariate in t (series ring), sparse multivariate (elements
of k[x1..xn]) and reduced rational functions in t.

Monomial order is graded-lexicographic with x1 > x2 > ... throughout.
"""
from __future__ import annotations

from fractions import Fraction
from functools import reduce

from .errors import InputError, PoleError
from .textio import parse_expression

MONOMIAL_ORDER = "grlex"


def _grlex_key(e):
    return (sum(e), e)


# --------------------------------------------------------------- univariate

class UPoly:
    """Univariate polynomial over a field, coefficients low to high."""

    __slots__ = ("field", "c")

    def __init__(self, field, coeffs=()):
        c = list(coeffs)
        while c and not c[-1]:
            c.pop()
        self.field = field
        self.c = tuple(c)

    @classmethod
    def const(cls, field, x):
        return cls(field, [field(x)])

    @classmethod
    def monomial(cls, field, k, coeff=None):
        return cls(field, [field.zero] * k + [field.one if coeff is None else field(coeff)])

    @property
    def deg(self) -> int:
        return len(self.c) - 1

    @property
    def lc(self):
        return self.c[-1]

    def is_zero(self) -> bool:
        return not self.c

    def __bool__(self):
        return bool(self.c)

    def coeff(self, k):
        return self.c[k] if 0 <= k < len(self.c) else self.field.zero

    def __add__(self, other):
        a, b = self.c, other.c
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, x in enumerate(b):
            out[i] = out[i] + x
        return UPoly(self.field, out)

    def __neg__(self):
        return UPoly(self.field, [-x for x in self.c])

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, UPoly):
            x = self.field(other)
            return UPoly(self.field, [a * x for a in self.c])
        if not self.c or not other.c:
            return UPoly(self.field)
        zero = self.field.zero
        out = [zero] * (len(self.c) + len(other.c) - 1)
        for i, a in enumerate(self.c):
            if a:
                for j, b in enumerate(other.c):
                    if b:
                        out[i + j] = out[i + j] + a * b
        return UPoly(self.field, out)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        out = UPoly.const(self.field, 1)
        for _ in range(e):
            out = out * self
        return out

    def shift(self, k: int) -> "UPoly":
        return UPoly(self.field, [self.field.zero] * k + list(self.c))

    def reverse(self, length=None) -> "UPoly":
        """t^deg * p(1/t) (or padded to ``length`` coefficients)."""
        c = list(self.c)
        if length is not None:
            c += [self.field.zero] * (length - len(c))
        return UPoly(self.field, c[::-1])

    def divmod(self, other):
        if not other.c:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.c)
        dv = len(other.c) - 1
        inv = other.lc.inv()
        if len(rem) - 1 < dv:
            return UPoly(self.field), self
        q = [self.field.zero] * (len(rem) - dv)
        for k in range(len(rem) - 1, dv - 1, -1):
            coef = rem[k]
            if not coef:
                continue
            coef = coef * inv
            q[k - dv] = coef
            for i, b in enumerate(other.c):
                if b:
                    rem[k - dv + i] = rem[k - dv + i] - coef * b
        return UPoly(self.field, q), UPoly(self.field, rem[:dv])

    def __floordiv__(self, other):
        return self.divmod(other)[0]

    def __mod__(self, other):
        return self.divmod(other)[1]

    def monic(self) -> "UPoly":
        if not self.c:
            return self
        inv = self.lc.inv()
        return UPoly(self.field, [x * inv for x in self.c])

    def __call__(self, x):
        acc = self.field.zero
        for a in reversed(self.c):
            acc = acc * x + a
        return acc

    def derivative(self) -> "UPoly":
        return UPoly(self.field, [a * k for k, a in enumerate(self.c)][1:])

    def root_multiplicity(self, x) -> int:
        k, p = 0, self
        lin = UPoly(self.field, [-x, self.field.one])
        while p.c and not p(x):
            p = p // lin
            k += 1
        return k

    def low_order(self) -> int:
        """Largest k with t^k dividing the polynomial."""
        for i, a in enumerate(self.c):
            if a:
                return i
        return 0

    def __eq__(self, other):
        return isinstance(other, UPoly) and self.c == other.c

    def __hash__(self):
        return hash(self.c)

    def format(self, var="t") -> str:
        return _format_terms([((k,), a) for k, a in reversed(list(enumerate(self.c))) if a],
                             [var], self.field)

    def __repr__(self):
        return self.format()


def upoly_gcd(a: UPoly, b: UPoly) -> UPoly:
    """Monic gcd (zero only if both are zero)."""
    while b.c:
        a, b = b, a % b
    return a.monic()


# ------------------------------------------------------- rational functions

class RationalFunction:
    """num/den in t with gcd(num, den) = 1 and den monic."""

    __slots__ = ("num", "den")

    def __init__(self, num: UPoly, den: UPoly | None = None, *, reduced=False):
        if den is None:
            den = UPoly.const(num.field, 1)
        if not den.c:
            raise ZeroDivisionError("rational function with zero denominator")
        if not reduced:
            if not num.c:
                den = UPoly.const(num.field, 1)
            else:
                g = upoly_gcd(num, den)
                if g.deg > 0:
                    num, den = num // g, den // g
                if den.lc != den.field.one:
                    inv = den.lc.inv()
                    num, den = num * inv, den * inv
        self.num = num
        self.den = den

    @property
    def field(self):
        return self.num.field

    @classmethod
    def const(cls, field, x):
        return cls(UPoly.const(field, x), reduced=True)

    @classmethod
    def t_power(cls, field, k: int):
        if k >= 0:
            return cls(UPoly.monomial(field, k), reduced=True)
        return cls(UPoly.const(field, 1), UPoly.monomial(field, -k), reduced=True)

    def is_zero(self) -> bool:
        return not self.num.c

    def __add__(self, other):
        if not isinstance(other, RationalFunction):
            other = RationalFunction.const(self.field, other)
        if self.den == other.den:
            return RationalFunction(self.num + other.num, self.den)
        return RationalFunction(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction(-self.num, self.den, reduced=True)

    def __sub__(self, other):
        if not isinstance(other, RationalFunction):
            other = RationalFunction.const(self.field, other)
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, RationalFunction):
            c = self.field(other)
            if not c:
                return RationalFunction.const(self.field, 0)
            return RationalFunction(self.num * c, self.den, reduced=True)
        # cross-cancel before multiplying to keep degrees small
        g1 = upoly_gcd(self.num, other.den) if self.num.c else None
        g2 = upoly_gcd(other.num, self.den) if other.num.c else None
        n1, d2 = (self.num // g1, other.den // g1) if g1 is not None else (self.num, other.den)
        n2, d1 = (other.num // g2, self.den // g2) if g2 is not None else (other.num, self.den)
        return RationalFunction(n1 * n2, d1 * d2)

    __rmul__ = __mul__

    def inv(self) -> "RationalFunction":
        if not self.num.c:
            raise ZeroDivisionError("division by the zero rational function")
        return RationalFunction(self.den, self.num)

    def __truediv__(self, other):
        if not isinstance(other, RationalFunction):
            c = self.field(other)
            return self * c.inv()
        return self * other.inv()

    def __pow__(self, e: int):
        if e < 0:
            return self.inv() ** (-e)
        return RationalFunction(self.num ** e, self.den ** e, reduced=True)

    def __eq__(self, other):
        return (isinstance(other, RationalFunction)
                and self.num == other.num and self.den == other.den)

    def __hash__(self):
        return hash((self.num, self.den))

    def degree(self) -> int:
        """deg(num) - deg(den); the a-invariant of a Hilbert series."""
        if not self.num.c:
            raise ValueError("degree of the zero function")
        return self.num.deg - self.den.deg

    def substitute_inverse(self) -> "RationalFunction":
        """F(1/t), cleared of negative powers of t."""
        if not self.num.c:
            raise ValueError("zero function")
        a, b = self.num.deg, self.den.deg
        num = self.num.reverse().shift(max(b - a, 0))
        den = self.den.reverse().shift(max(a - b, 0))
        return RationalFunction(num, den)

    def evaluate(self, at):
        x = self.field(at)
        d = self.den(x)
        if not d:
            raise PoleError(self.den.root_multiplicity(x), f"pole at t = {x}")
        return self.num(x) * d.inv()

    def series(self, D: int) -> list:
        """Taylor coefficients c_0..c_D at t = 0."""
        d0 = self.den.coeff(0)
        if not d0:
            raise PoleError(self.den.low_order(), "denominator vanishes at t = 0")
        inv = d0.inv()
        zero = self.field.zero
        out = []
        dc = self.den.c
        for k in range(D + 1):
            acc = self.num.coeff(k)
            for j in range(1, min(k, len(dc) - 1) + 1):
                if dc[j]:
                    acc = acc - dc[j] * out[k - j]
            out.append(acc * inv if acc else zero)
        return out

    def as_monomial(self):
        """(c, k) if the function equals c * t^k, else None."""
        if len(self.den.c) - 1 > 0 and any(self.den.c[:-1]):
            return None
        nz = [i for i, a in enumerate(self.num.c) if a]
        if len(nz) != 1:
            return None
        return self.num.c[nz[0]], nz[0] - self.den.deg

    def format(self, var="t") -> str:
        if self.den.deg == 0:
            return self.num.format(var)
        return f"({self.num.format(var)})/({self.den.format(var)})"

    def __repr__(self):
        return self.format()


# ------------------------------------------------------------- multivariate

class MultiPoly:
    """Sparse polynomial in x1..xn: dict exponent-tuple -> nonzero coefficient."""

    __slots__ = ("n", "field", "terms")

    def __init__(self, n, field, terms=None):
        self.n = n
        self.field = field
        self.terms = {e: c for e, c in (terms or {}).items() if c}

    @classmethod
    def zero(cls, field, n):
        return cls(n, field)

    @classmethod
    def const(cls, field, n, c):
        c = field(c)
        return cls(n, field, {(0,) * n: c}) if c else cls(n, field)

    @classmethod
    def var(cls, field, n, i):
        e = [0] * n
        e[i] = 1
        return cls(n, field, {tuple(e): field.one})

    @classmethod
    def monomial(cls, field, exps, coeff=None):
        return cls(len(exps), field, {tuple(exps): field.one if coeff is None else field(coeff)})

    def _check(self, other):
        if self.n != other.n or self.field != other.field:
            raise InputError("polynomials live in different rings")

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def is_constant(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and (0,) * self.n in self.terms)

    def __add__(self, other):
        if not isinstance(other, MultiPoly):
            other = MultiPoly.const(self.field, self.n, other)
        self._check(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            v = out.get(e)
            if v is None:
                out[e] = c
            else:
                s = v + c
                if s:
                    out[e] = s
                else:
                    del out[e]
        return MultiPoly(self.n, self.field, out)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly(self.n, self.field, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, MultiPoly):
            other = MultiPoly.const(self.field, self.n, other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, MultiPoly):
            c = self.field(other)
            if not c:
                return MultiPoly(self.n, self.field)
            return MultiPoly(self.n, self.field, {e: v * c for e, v in self.terms.items()})
        self._check(other)
        out: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                v = out.get(e)
                out[e] = c1 * c2 if v is None else v + c1 * c2
        return MultiPoly(self.n, self.field, out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, MultiPoly):
            return self.divexact(other)
        return self * self.field(other).inv()

    def __pow__(self, e: int):
        out = MultiPoly.const(self.field, self.n, 1)
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, MultiPoly):
            return self.n == other.n and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self == MultiPoly.const(self.field, self.n, other)
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def total_degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def homogeneous_degree(self):
        """Common total degree, or None if zero; raises if inhomogeneous."""
        degs = {sum(e) for e in self.terms}
        if not degs:
            return None
        if len(degs) > 1:
            raise ValueError("polynomial is not homogeneous")
        return degs.pop()

    def is_homogeneous(self) -> bool:
        return len({sum(e) for e in self.terms}) <= 1

    def leading_term(self):
        e = max(self.terms, key=_grlex_key)
        return e, self.terms[e]

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda it: _grlex_key(it[0]), reverse=True)

    def monic(self) -> "MultiPoly":
        if not self.terms:
            return self
        return self * self.leading_term()[1].inv()

    def degree_in(self, v: int) -> int:
        return max((e[v] for e in self.terms), default=-1)

    def coeff_in(self, v: int, k: int) -> "MultiPoly":
        """Coefficient of x_v^k, as a polynomial free of x_v."""
        out = {}
        for e, c in self.terms.items():
            if e[v] == k:
                out[e[:v] + (0,) + e[v + 1:]] = c
        return MultiPoly(self.n, self.field, out)

    def variables(self) -> set[int]:
        return {i for e in self.terms for i, a in enumerate(e) if a}

    def divexact(self, other: "MultiPoly") -> "MultiPoly":
        """Quotient self/other; raises if other does not divide self."""
        if not other.terms:
            raise ZeroDivisionError("division by zero polynomial")
        le, lc = other.leading_term()
        inv = lc.inv()
        rem = MultiPoly(self.n, self.field, self.terms)
        quo: dict = {}
        while rem.terms:
            re, rc = rem.leading_term()
            diff = tuple(a - b for a, b in zip(re, le))
            if min(diff) < 0:
                raise ArithmeticError("inexact multivariate division")
            q = rc * inv
            quo[diff] = q
            rem = rem - MultiPoly(self.n, self.field, {diff: q}) * other
        return MultiPoly(self.n, self.field, quo)

    def divides(self, other: "MultiPoly") -> bool:
        try:
            other.divexact(self)
            return True
        except ArithmeticError:
            return False

    def vector(self, monomials) -> list:
        """Coefficients along a list of exponent tuples."""
        z = self.field.zero
        return [self.terms.get(m, z) for m in monomials]

    def format(self, names=None) -> str:
        names = names or [f"x{i + 1}" for i in range(self.n)]
        return _format_terms(self.sorted_terms(), names, self.field)

    def __repr__(self):
        return self.format()

    @classmethod
    def parse(cls, text: str, field, n: int) -> "MultiPoly":
        def const(fr):
            return cls.const(field, n, fr)

        def name(s):
            if s.startswith("x") and s[1:].isdigit():
                i = int(s[1:]) - 1
                if not 0 <= i < n:
                    raise InputError(f"variable {s} out of range for n = {n}")
                return cls.var(field, n, i)
            return cls.const(field, n, field.parse(s))

        val = parse_expression(text, const, name)
        if not isinstance(val, MultiPoly):
            val = cls.const(field, n, val)
        return val


def _format_coeff(field, c):
    s = field.format(c)
    compound = any(ch in s[1:] for ch in "+-") or (" " in s)
    return s, compound


def _format_terms(terms, names, field) -> str:
    pieces = []
    for e, c in terms:
        mono = "*".join(
            (names[i] if a == 1 else f"{names[i]}^{a}") for i, a in enumerate(e) if a
        )
        s, compound = _format_coeff(field, c)
        neg = False
        if not compound and s.startswith("-"):
            neg, s = True, s[1:]
        if mono:
            if s == "1":
                body = mono
            elif compound:
                body = f"({s})*{mono}"
            else:
                body = f"{s}*{mono}"
        else:
            body = f"({s})" if compound and pieces else s
        pieces.append((neg, body))
    if not pieces:
        return "0"
    out = ("-" if pieces[0][0] else "") + pieces[0][1]
    for neg, body in pieces[1:]:
        out += (" - " if neg else " + ") + body
    return out


# -------------------------------------------------------------------- gcd

def _content(f: MultiPoly, v: int) -> MultiPoly:
    coeffs = [f.coeff_in(v, k) for k in range(f.degree_in(v) + 1)]
    g = None
    for c in coeffs:
        if c.terms:
            g = c if g is None else _gcd2(g, c)
            if g.is_constant():
                break
    return g


def _prem(f: MultiPoly, g: MultiPoly, v: int) -> MultiPoly:
    dg = g.degree_in(v)
    lg = g.coeff_in(v, dg)
    r = f
    while r.terms and r.degree_in(v) >= dg:
        dr = r.degree_in(v)
        lr = r.coeff_in(v, dr)
        e = [0] * f.n
        e[v] = dr - dg
        r = lg * r - lr * MultiPoly.monomial(f.field, e) * g
    return r


def _gcd2(f: MultiPoly, g: MultiPoly) -> MultiPoly:
    if not f.terms:
        return g.monic()
    if not g.terms:
        return f.monic()
    if f.is_constant() or g.is_constant():
        return MultiPoly.const(f.field, f.n, 1)
    vs = f.variables() | g.variables()
    v = max(vs)
    if v not in f.variables():
        return _gcd2(f, _content(g, v))
    if v not in g.variables():
        return _gcd2(_content(f, v), g)
    cf, cg = _content(f, v), _content(g, v)
    c = _gcd2(cf, cg)
    a, b = f.divexact(cf), g.divexact(cg)
    if a.degree_in(v) < b.degree_in(v):
        a, b = b, a
    while b.terms:
        r = _prem(a, b, v)
        a = b
        if not r.terms:
            b = r
        elif r.degree_in(v) <= 0:
            a = MultiPoly.const(f.field, f.n, 1)
            b = MultiPoly.zero(f.field, f.n)
        else:
            b = r.divexact(_content(r, v))
    a = a.divexact(_content(a, v)) if a.degree_in(v) > 0 else MultiPoly.const(f.field, f.n, 1)
    return (c * a).monic()


def multipoly_gcd(fs) -> MultiPoly:
    """Monic (grlex) gcd of a nonempty list of nonzero polynomials."""
    fs = list(fs)
    if not fs:
        raise InputError("gcd of an empty set")
    if any(not f.terms for f in fs):
        raise InputError("zero polynomial in gcd input")

    def step(g, f):
        if g.is_constant():
            return g
        return _gcd2(g, f)

    return reduce(step, fs[1:], fs[0].monic())
