"""Exact scalars: the rationals, cyclotomic fields Q(zeta_N) and finite fields.

Q is handled as Q(zeta_1).  Cyclotomic numbers are integer coefficient
vectors in the power basis of zeta_N modulo the N-th cyclotomic polynomial,
with one shared positive denominator.  Finite-field elements are integer
codes ``sum c_i p^i`` of their coefficient vectors; multiplication and
addition run through discrete-log and Zech-log tables built once per field.
"""
from __future__ import annotations

import math
import random
from fractions import Fraction
from functools import lru_cache

from .errors import FieldError, InputError, PSingularError
from .textio import parse_expression

MAX_FIELD_SIZE = 1_000_000


# ---------------------------------------------------------------- integers

def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def factorize(n: int) -> dict[int, int]:
    out: dict[int, int] = {}
    f = 2
    while f * f <= n:
        while n % f == 0:
            out[f] = out.get(f, 0) + 1
            n //= f
        f += 1 if f == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


def euler_phi(n: int) -> int:
    out = n
    for p in factorize(n):
        out = out // p * (p - 1)
    return out


def lcm(*xs: int) -> int:
    out = 1
    for x in xs:
        out = out * x // math.gcd(out, x)
    return out


def order_mod(a: int, n: int) -> int:
    """Multiplicative order of ``a`` modulo ``n`` (gcd(a, n) = 1)."""
    if n == 1:
        return 1
    if math.gcd(a, n) != 1:
        raise ValueError(f"{a} is not a unit mod {n}")
    k, x = 1, a % n
    while x != 1:
        x = x * a % n
        k += 1
    return k


def p_part(n: int, p: int) -> int:
    out = 1
    while p and n % p == 0:
        n //= p
        out *= p
    return out


@lru_cache(maxsize=None)
def cyclotomic_poly(n: int) -> tuple[int, ...]:
    """Coefficients (low to high) of the n-th cyclotomic polynomial."""
    num = [-1] + [0] * (n - 1) + [1]
    for d in divisors(n)[:-1]:
        num = _int_exact_div(num, cyclotomic_poly(d))
    return tuple(num)


def _int_exact_div(a, b):
    a = list(a)
    db = len(b) - 1
    q = [0] * (len(a) - db)
    for k in range(len(q) - 1, -1, -1):
        c = a[k + db]  # b is monic
        q[k] = c
        if c:
            for i, bc in enumerate(b):
                a[k + i] -= c * bc
    assert not any(a[:db]), "inexact cyclotomic division"
    return q


# ------------------------------------------------ polynomials over F_p

def _fp_trim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def _fp_mod(a, b, p):
    a = [x % p for x in a]
    _fp_trim(a)
    db = len(b) - 1
    inv = pow(b[-1], -1, p)
    while len(a) - 1 >= db and a:
        c = a[-1] * inv % p
        shift = len(a) - 1 - db
        for i, bc in enumerate(b):
            a[shift + i] = (a[shift + i] - c * bc) % p
        _fp_trim(a)
    return a


def _fp_mul(a, b, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return _fp_trim(out)


def _fp_powmod(base, e, f, p):
    result = [1]
    base = _fp_mod(base, f, p)
    while e:
        if e & 1:
            result = _fp_mod(_fp_mul(result, base, p), f, p)
        base = _fp_mod(_fp_mul(base, base, p), f, p)
        e >>= 1
    return result


def _fp_gcd(a, b, p):
    a, b = _fp_trim([x % p for x in a]), _fp_trim([x % p for x in b])
    while b:
        a, b = b, _fp_mod(a, b, p)
    return a


def is_irreducible_mod_p(f, p: int) -> bool:
    """Ben-Or test: f has no factor of degree k <= deg(f)/2."""
    f = _fp_trim([c % p for c in f])
    m = len(f) - 1
    if m < 1:
        return False
    if m == 1:
        return True
    h = [0, 1]
    for _ in range(m // 2):
        h = _fp_powmod(h, p, f, p)
        diff = list(h) + [0] * max(0, 2 - len(h))
        diff[1] = (diff[1] - 1) % p
        g = _fp_gcd(f, _fp_trim(diff), p)
        if len(g) > 1:
            return False
    return True


@lru_cache(maxsize=None)
def least_irreducible(p: int, m: int) -> tuple[int, ...]:
    """Least monic irreducible of degree m over F_p (ordered by code)."""
    for code in range(p ** m):
        low = [(code // p ** i) % p for i in range(m)]
        f = low + [1]
        if m > 1 and low[0] == 0:
            continue
        if is_irreducible_mod_p(f, p):
            return tuple(f)
    raise FieldError(f"no irreducible polynomial of degree {m} over F_{p}")


# ------------------------------------------------------ cyclotomic fields

class CyclotomicField:
    """Q(zeta_N); N = 1 is Q itself."""

    characteristic = 0
    is_finite = False
    gen_name = "z"

    def __init__(self, n: int):
        if not isinstance(n, int) or n < 1:
            raise FieldError(f"cyclotomic order must be a positive integer, got {n!r}")
        self.n = n
        self.phi = cyclotomic_poly(n)
        d = self.degree = len(self.phi) - 1
        red = []
        cur = [-c for c in self.phi[:d]]
        for _ in range(d, 2 * d - 1):
            red.append(tuple((i, c) for i, c in enumerate(cur) if c))
            top = cur[-1]
            cur = [0] + cur[:-1]
            if top:
                for i in range(d):
                    cur[i] -= top * self.phi[i]
        self._red = red
        self.root_capacity = lcm(2, n)
        self.zero = Cyc(self, (0,) * d, 1)
        self.one = Cyc(self, (1,) + (0,) * (d - 1), 1)
        self._zeta = []
        vec = [1] + [0] * (d - 1)
        for _ in range(n):
            self._zeta.append(Cyc(self, tuple(vec), 1))
            top = vec[-1]
            vec = [0] + vec[:-1]
            if top:
                for i in range(d):
                    vec[i] -= top * self.phi[i]
        if n % 2 == 0:
            self.root_generator = self._zeta[1 % n]
        else:
            self.root_generator = -self._zeta[((n + 1) // 2) % n]
        self._root_log = {}
        x = self.one
        for k in range(self.root_capacity):
            self._root_log[x] = k
            x = x * self.root_generator

    def __repr__(self):
        return "Q" if self.n == 1 else f"Q(zeta_{self.n})"

    def __eq__(self, other):
        return isinstance(other, CyclotomicField) and other.n == self.n

    def __hash__(self):
        return hash(("cyc", self.n))

    def __call__(self, x) -> "Cyc":
        if isinstance(x, Cyc):
            if x.field.n == self.n:
                return x
            return self.embed(x)
        if isinstance(x, bool):
            x = int(x)
        if isinstance(x, int):
            return Cyc(self, (x,) + (0,) * (self.degree - 1), 1)
        if isinstance(x, Fraction):
            return Cyc(self, (x.numerator,) + (0,) * (self.degree - 1), x.denominator)
        if isinstance(x, str):
            return self.parse(x)
        raise FieldError(f"cannot convert {x!r} into {self}")

    def descriptor(self) -> dict:
        if self.n == 1:
            return {"kind": "rational"}
        return {"kind": "cyclotomic", "n": self.n}

    @property
    def gen(self) -> "Cyc":
        return self._zeta[1 % self.n]

    def zeta(self, j: int) -> "Cyc":
        return self._zeta[j % self.n]

    def from_coeffs(self, coeffs) -> "Cyc":
        """Element sum coeffs[i] * zeta^i (any length, rational coefficients)."""
        fr = [Fraction(c) for c in coeffs]
        den = lcm(*(c.denominator for c in fr)) if fr else 1
        ints = [c.numerator * (den // c.denominator) for c in fr]
        d = self.degree
        vec = ints[:d] + [0] * max(0, d - len(ints))
        for k in range(d, len(ints)):
            c = ints[k]
            if c:
                z = self._zeta[k % self.n]
                for i in range(d):
                    vec[i] += c * z.c[i]
        return _cyc(self, vec, den)

    def embed(self, x: "Cyc") -> "Cyc":
        m = x.field.n
        if self.n % m:
            raise FieldError(f"cannot embed Q(zeta_{m}) into {self}")
        step = self.n // m
        vec = [0] * self.degree
        for i, c in enumerate(x.c):
            if c:
                z = self._zeta[(i * step) % self.n]
                for k in range(self.degree):
                    vec[k] += c * z.c[k]
        return _cyc(self, vec, x.d)

    def root_dlog(self, x: "Cyc") -> int:
        """k with root_generator**k == x, for x a root of unity in the field."""
        try:
            return self._root_log[x]
        except KeyError:
            raise FieldError(f"{x} is not a root of unity in {self}") from None

    def parse(self, text: str) -> "Cyc":
        def name(s):
            if s in ("z", "zeta"):
                return self.gen
            raise InputError(f"unknown symbol {s!r} for {self}")
        val = parse_expression(str(text), self, name)
        return self(val)

    def random(self, rng: random.Random, height: int = 3) -> "Cyc":
        vec = [rng.randint(-height, height) for _ in range(self.degree)]
        return _cyc(self, vec, rng.randint(1, height))

    def format(self, x: "Cyc") -> str:
        terms = []
        for i in range(self.degree - 1, -1, -1):
            c = Fraction(x.c[i], x.d)
            if c == 0:
                continue
            mono = "" if i == 0 else ("z" if i == 1 else f"z^{i}")
            mag = abs(c)
            if mono and mag == 1:
                body = mono
            elif mono:
                body = f"{mag}*{mono}"
            else:
                body = str(mag)
            terms.append(("-" if c < 0 else "+", body))
        if not terms:
            return "0"
        s = ("-" if terms[0][0] == "-" else "") + terms[0][1]
        for sign, body in terms[1:]:
            s += f" {sign} {body}"
        return s


def _cyc(field, vec, den) -> "Cyc":
    if den < 0:
        den = -den
        vec = [-c for c in vec]
    g = math.gcd(den, *vec)
    if g != 1:
        vec = [c // g for c in vec]
        den //= g
    if not any(vec):
        den = 1
    return Cyc(field, tuple(vec), den)


class Cyc:
    """Element of Q(zeta_N): (c[0] + c[1] z + ... ) / d, gcd-normalized."""

    __slots__ = ("field", "c", "d")

    def __init__(self, field, c, d):
        self.field = field
        self.c = c
        self.d = d

    def _coerce(self, other):
        if isinstance(other, Cyc):
            if other.field.n != self.field.n:
                raise FieldError(f"field mismatch: {self.field} vs {other.field}")
            return other
        return self.field(other)

    def __add__(self, other):
        o = self._coerce(other)
        if self.d == o.d:
            return _cyc(self.field, [a + b for a, b in zip(self.c, o.c)], self.d)
        return _cyc(self.field, [a * o.d + b * self.d for a, b in zip(self.c, o.c)], self.d * o.d)

    __radd__ = __add__

    def __neg__(self):
        return Cyc(self.field, tuple(-a for a in self.c), self.d)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        o = self._coerce(other)
        f = self.field
        deg = f.degree
        if deg == 1:
            return _cyc(f, [self.c[0] * o.c[0]], self.d * o.d)
        conv = [0] * (2 * deg - 1)
        for i, a in enumerate(self.c):
            if a:
                for j, b in enumerate(o.c):
                    if b:
                        conv[i + j] += a * b
        res = conv[:deg]
        for k in range(deg, 2 * deg - 1):
            ck = conv[k]
            if ck:
                for i, r in f._red[k - deg]:
                    res[i] += ck * r
        return _cyc(f, res, self.d * o.d)

    __rmul__ = __mul__

    def inv(self) -> "Cyc":
        if not any(self.c):
            raise ZeroDivisionError("inverse of zero")
        return _cyc_inverse(self.field.n, self.c, self.d)

    def __truediv__(self, other):
        return self * self._coerce(other).inv()

    def __rtruediv__(self, other):
        return self._coerce(other) * self.inv()

    def __pow__(self, e: int):
        if e < 0:
            return self.inv() ** (-e)
        result = self.field.one
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, Cyc):
            return self.field.n == other.field.n and self.c == other.c and self.d == other.d
        if isinstance(other, (int, Fraction)):
            return self == self.field(other)
        return NotImplemented

    def __hash__(self):
        return hash((self.field.n, self.c, self.d))

    def __bool__(self):
        return any(self.c)

    def is_zero(self) -> bool:
        return not any(self.c)

    def is_rational(self) -> bool:
        return not any(self.c[1:])

    def to_fraction(self) -> Fraction:
        if not self.is_rational():
            raise FieldError(f"{self} is not rational")
        return Fraction(self.c[0], self.d)

    def is_integral(self) -> bool:
        return self.d == 1

    def __repr__(self):
        return self.field.format(self)

    __str__ = __repr__


@lru_cache(maxsize=4096)
def _cyc_inverse(n, c, d):
    field = cyclotomic_field(n)
    # extended Euclid in Q[x]: s*a + t*phi = 1
    a = [Fraction(x) for x in c]
    phi = [Fraction(x) for x in field.phi]

    def trim(p):
        while p and p[-1] == 0:
            p.pop()
        return p

    def divmod_(u, v):
        u = list(u)
        q = [Fraction(0)] * max(1, len(u) - len(v) + 1)
        while len(trim(u)) >= len(v):
            coef = u[-1] / v[-1]
            sh = len(u) - len(v)
            q[sh] = coef
            for i, vc in enumerate(v):
                u[sh + i] -= coef * vc
        return q, u

    def sub_mul(x, q, y):
        out = list(x) + [Fraction(0)] * max(0, len(q) + len(y) - 1 - len(x))
        for i, qc in enumerate(q):
            if qc:
                for j, yc in enumerate(y):
                    out[i + j] -= qc * yc
        return trim(out)

    r0, r1 = phi, trim(a)
    s0, s1 = [], [Fraction(1)]
    while len(r1) > 1:
        q, r = divmod_(r0, r1)
        r0, r1 = r1, trim(r)
        s0, s1 = s1, sub_mul(s0, q, s1)
    inv_lead = 1 / r1[0]
    coeffs = [x * inv_lead * d for x in s1]
    return field.from_coeffs(coeffs)


@lru_cache(maxsize=None)
def cyclotomic_field(n: int) -> CyclotomicField:
    return CyclotomicField(n)


def rational_field() -> CyclotomicField:
    return cyclotomic_field(1)


# ---------------------------------------------------------- finite fields

class FiniteField:
    """F_{p^m} = F_p[x]/(modulus), element codes sum c_i p^i."""

    is_finite = True
    gen_name = "a"

    def __init__(self, p: int, modulus=None):
        if not isinstance(p, int) or not is_prime(p):
            raise FieldError(f"characteristic must be prime, got {p!r}")
        if modulus is None:
            modulus = (0, 1)
        mod = [int(c) % p for c in modulus]
        _fp_trim(mod)
        if len(mod) < 2 or mod[-1] != 1:
            raise FieldError("modulus must be monic of degree >= 1")
        if not is_irreducible_mod_p(mod, p):
            raise FieldError(f"modulus {list(modulus)} is reducible over F_{p}")
        self.p = self.characteristic = p
        self.modulus = tuple(mod)
        m = self.m = len(mod) - 1
        q = self.q = p ** m
        if q > MAX_FIELD_SIZE:
            raise FieldError(f"F_{p}^{m} exceeds the supported size {MAX_FIELD_SIZE}")
        self.root_capacity = q - 1
        self.zero = FF(self, 0)
        self.one = FF(self, 1)
        if m == 1:
            gamma = next(c for c in range(1, p) if self._slow_order(c) == q - 1)
        else:
            gamma = next(c for c in range(1, q) if self._slow_order(c) == q - 1)
        exp = [1] * (q - 1)
        log = [None] * q
        x = 1
        for i in range(q - 1):
            exp[i] = x
            log[x] = i
            x = self._slow_mul(x, gamma)
        self._exp = exp
        self._log = log
        zech = [None] * (q - 1)
        for i in range(q - 1):
            s = self._code_add(exp[i], 1)
            zech[i] = log[s] if s else None
        self._zech = zech
        self._neg_one_log = 0 if p == 2 else (q - 1) // 2
        self.gamma = FF(self, gamma)
        self.root_generator = self.gamma

    # -- construction helpers (only used while building tables)
    def _vec(self, code):
        return [(code // self.p ** i) % self.p for i in range(self.m)]

    def _code(self, vec):
        return sum((c % self.p) * self.p ** i for i, c in enumerate(vec))

    def _code_add(self, a, b):
        if self.m == 1:
            return (a + b) % self.p
        return self._code([x + y for x, y in zip(self._vec(a), self._vec(b))])

    def _slow_mul(self, a, b):
        if self.m == 1:
            return a * b % self.p
        prod = _fp_mod(_fp_mul(self._vec(a), self._vec(b), self.p), list(self.modulus), self.p)
        return self._code(prod)

    def _slow_pow(self, a, e):
        r = 1
        while e:
            if e & 1:
                r = self._slow_mul(r, a)
            a = self._slow_mul(a, a)
            e >>= 1
        return r

    def _slow_order(self, a):
        n = self.q - 1
        for ell in factorize(n):
            while n % ell == 0 and self._slow_pow(a, n // ell) == 1:
                n //= ell
        return n

    # -- public surface
    def __repr__(self):
        if self.m == 1:
            return f"F_{self.p}"
        return f"F_{self.p}^{self.m}[{list(self.modulus)}]"

    def __eq__(self, other):
        return isinstance(other, FiniteField) and (other.p, other.modulus) == (self.p, self.modulus)

    def __hash__(self):
        return hash(("ff", self.p, self.modulus))

    def __call__(self, x) -> "FF":
        if isinstance(x, FF):
            if x.field == self:
                return x
            raise FieldError(f"cannot convert {x.field} element into {self}")
        if isinstance(x, bool):
            x = int(x)
        if isinstance(x, int):
            return FF(self, x % self.p)
        if isinstance(x, Fraction):
            if x.denominator % self.p == 0:
                raise FieldError(f"{x} has no image in {self}")
            return FF(self, x.numerator * pow(x.denominator, -1, self.p) % self.p)
        if isinstance(x, str):
            return self.parse(x)
        raise FieldError(f"cannot convert {x!r} into {self}")

    def descriptor(self) -> dict:
        return {"kind": "finite", "p": self.p, "modulus": list(self.modulus)}

    @property
    def gen(self) -> "FF":
        return self.gamma

    def from_vector(self, vec) -> "FF":
        return FF(self, self._code(vec))

    def vector(self, x: "FF") -> list[int]:
        return self._vec(x.v)

    def elements(self) -> list["FF"]:
        return [FF(self, c) for c in range(self.q)]

    def log(self, x: "FF") -> int:
        if x.v == 0:
            raise ZeroDivisionError("log of zero")
        return self._log[x.v]

    def root_dlog(self, x: "FF") -> int:
        return self.log(x)

    def power_of_gen(self, k: int) -> "FF":
        return FF(self, self._exp[k % (self.q - 1)])

    def parse(self, text: str) -> "FF":
        def name(s):
            if s in ("a", "gamma"):
                return self.gamma
            raise InputError(f"unknown symbol {s!r} for {self}")
        val = parse_expression(str(text), self, name)
        return self(val)

    def random(self, rng: random.Random) -> "FF":
        return FF(self, rng.randrange(self.q))

    def format(self, x: "FF") -> str:
        if x.v < self.p:
            return str(x.v)
        k = self._log[x.v]
        return "a" if k == 1 else f"a^{k}"

    def brauer_lift(self, a: "FF", order: int | None = None) -> Cyc:
        """zeta_L^(e L / (q-1)) for a = gamma^e; L defaults to q - 1."""
        if a.v == 0:
            raise FieldError("cannot lift zero")
        M = self.q - 1
        L = M if order is None else order
        if L % self.p == 0:
            raise PSingularError("lift target order divisible by the characteristic")
        e = self._log[a.v]
        if (e * L) % M:
            raise FieldError(f"order of {a} does not divide {L}")
        return cyclotomic_field(L).zeta(e * L // M)


class FF:
    __slots__ = ("field", "v")

    def __init__(self, field, v):
        self.field = field
        self.v = v

    def _coerce(self, other):
        if isinstance(other, FF):
            if other.field is not self.field and other.field != self.field:
                raise FieldError(f"field mismatch: {self.field} vs {other.field}")
            return other
        return self.field(other)

    def __add__(self, other):
        o = self._coerce(other)
        f = self.field
        if f.m == 1:
            return FF(f, (self.v + o.v) % f.p)
        if self.v == 0:
            return o
        if o.v == 0:
            return self
        la, lb = f._log[self.v], f._log[o.v]
        z = f._zech[(lb - la) % (f.q - 1)]
        if z is None:
            return f.zero
        return FF(f, f._exp[(la + z) % (f.q - 1)])

    __radd__ = __add__

    def __neg__(self):
        f = self.field
        if f.m == 1:
            return FF(f, (-self.v) % f.p)
        if self.v == 0 or f.p == 2:
            return self
        return FF(f, f._exp[(f._log[self.v] + f._neg_one_log) % (f.q - 1)])

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        o = self._coerce(other)
        f = self.field
        if f.m == 1:
            return FF(f, self.v * o.v % f.p)
        if self.v == 0 or o.v == 0:
            return f.zero
        return FF(f, f._exp[(f._log[self.v] + f._log[o.v]) % (f.q - 1)])

    __rmul__ = __mul__

    def inv(self) -> "FF":
        f = self.field
        if self.v == 0:
            raise ZeroDivisionError("inverse of zero")
        if f.m == 1:
            return FF(f, pow(self.v, -1, f.p))
        return FF(f, f._exp[(-f._log[self.v]) % (f.q - 1)])

    def __truediv__(self, other):
        return self * self._coerce(other).inv()

    def __rtruediv__(self, other):
        return self._coerce(other) * self.inv()

    def __pow__(self, e: int):
        f = self.field
        if self.v == 0:
            if e < 0:
                raise ZeroDivisionError("inverse of zero")
            return f.one if e == 0 else f.zero
        return FF(f, f._exp[(f._log[self.v] * e) % (f.q - 1)])

    def __eq__(self, other):
        if isinstance(other, FF):
            return self.v == other.v and self.field == other.field
        if isinstance(other, (int, Fraction)):
            return self == self.field(other)
        return NotImplemented

    def __hash__(self):
        return hash((self.field.p, self.field.modulus, self.v))

    def __bool__(self):
        return self.v != 0

    def is_zero(self) -> bool:
        return self.v == 0

    def __repr__(self):
        return self.field.format(self)

    __str__ = __repr__


@lru_cache(maxsize=None)
def finite_field(p: int, modulus: tuple[int, ...] | None = None) -> FiniteField:
    return FiniteField(p, modulus)


def make_field(spec: dict):
    """Build a field from ``{"kind": ...}`` as found in group-spec files."""
    if not isinstance(spec, dict) or "kind" not in spec:
        raise FieldError(f"malformed field specification {spec!r}")
    kind = spec["kind"]
    if kind == "rational":
        return rational_field()
    if kind == "cyclotomic":
        n = spec.get("n")
        if not isinstance(n, int) or n < 1:
            raise FieldError(f"cyclotomic order must be >= 1, got {n!r}")
        return cyclotomic_field(n)
    if kind == "finite":
        p = spec.get("p")
        if not isinstance(p, int) or not is_prime(p):
            raise FieldError(f"p must be prime, got {p!r}")
        if "modulus" in spec:
            return finite_field(p, tuple(int(c) for c in spec["modulus"]))
        m = int(spec.get("m", 1))
        return finite_field(p, least_irreducible(p, m))
    raise FieldError(f"unknown field kind {kind!r}")


def mult_order(a) -> int:
    """Least r >= 1 with a**r == 1."""
    if a.is_zero():
        raise FieldError("zero has no multiplicative order")
    f = a.field
    if f.is_finite:
        e = f.log(a)
        return (f.q - 1) // math.gcd(e, f.q - 1)
    R = f.root_capacity
    k = f.root_dlog(a)
    return R // math.gcd(k, R)


def brauer_lift(a, order: int | None = None) -> Cyc:
    """Lift a p-regular finite-field element to a root of unity in Q(zeta_L).

    The fixed generator gamma of the field (least code among generators of
    the multiplicative group) maps to zeta_{q-1}; with ``order`` the value is
    expressed in Q(zeta_order) instead, which must be a multiple of the
    order of ``a``.
    """
    return a.field.brauer_lift(a, order)
