"""Finite matrix groups: enumeration, subgroups, abelianization, eigenvalues.

Matrices act on the variable space V* = <x1..xn>: column j of a matrix is
the image of x_j.  Group elements are kept in BFS discovery order from the
generators, so every derived listing is reproducible.
"""
from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from itertools import product

from . import linalg
from .errors import CapExceededError, ComputationError, FieldError, InputError
from .exactnum import (
    cyclotomic_field, factorize, finite_field, least_irreducible, lcm, order_mod,
    p_part,
)
from .polyalg import UPoly

DEFAULT_CAP = 10_000


class Mat:
    __slots__ = ("field", "rows", "_hash")

    def __init__(self, field, rows):
        self.field = field
        self.rows = tuple(tuple(r) for r in rows)
        self._hash = None

    @classmethod
    def from_entries(cls, field, rows):
        rows = [[field(x) for x in r] for r in rows]
        n = len(rows)
        if any(len(r) != n for r in rows):
            raise InputError("matrix must be square")
        return cls(field, rows)

    @classmethod
    def identity(cls, field, n):
        return cls(field, [[field.one if i == j else field.zero for j in range(n)]
                           for i in range(n)])

    @classmethod
    def diag(cls, field, entries):
        n = len(entries)
        return cls(field, [[field(entries[i]) if i == j else field.zero for j in range(n)]
                           for i in range(n)])

    @property
    def n(self) -> int:
        return len(self.rows)

    def __mul__(self, other: "Mat") -> "Mat":
        if other.field != self.field or other.n != self.n:
            raise InputError("matrix field or size mismatch")
        cols = list(zip(*other.rows))
        zero = self.field.zero
        out = []
        for r in self.rows:
            row = []
            for c in cols:
                acc = zero
                for a, b in zip(r, c):
                    if a and b:
                        acc = acc + a * b
                row.append(acc)
            out.append(row)
        return Mat(self.field, out)

    def __pow__(self, e: int) -> "Mat":
        if e < 0:
            return self.inv() ** (-e)
        out = Mat.identity(self.field, self.n)
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def __sub__(self, other: "Mat") -> "Mat":
        return Mat(self.field, [[a - b for a, b in zip(r, s)]
                                for r, s in zip(self.rows, other.rows)])

    def __eq__(self, other):
        return isinstance(other, Mat) and self.rows == other.rows

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.rows)
        return self._hash

    def is_identity(self) -> bool:
        return all((x == self.field.one) if i == j else not x
                   for i, r in enumerate(self.rows) for j, x in enumerate(r))

    def det(self):
        return linalg.det(self.rows, self.field)

    def trace(self):
        acc = self.field.zero
        for i in range(self.n):
            acc = acc + self.rows[i][i]
        return acc

    def inv(self) -> "Mat":
        return Mat(self.field, linalg.inverse(self.rows, self.field))

    def rank(self) -> int:
        return linalg.rank(self.rows, self.n)

    def minus_identity(self) -> "Mat":
        return self - Mat.identity(self.field, self.n)

    def transpose(self) -> "Mat":
        return Mat(self.field, list(zip(*self.rows)))

    def charpoly(self) -> UPoly:
        return UPoly(self.field, linalg.charpoly(self.rows, self.field))

    def to_json(self):
        return [[str(x) for x in r] for r in self.rows]

    def __repr__(self):
        return "[" + ", ".join("[" + ", ".join(str(x) for x in r) + "]" for r in self.rows) + "]"


def _exponent_bound(field, n: int) -> int:
    """A multiple of the order of every element of GL(n, F_q)."""
    q = field.q
    pa = 1
    while pa < n:
        pa *= field.p
    return pa * lcm(*(q ** k - 1 for k in range(1, n + 1)))


def element_order(g: Mat, cap: int = DEFAULT_CAP) -> int:
    """Least r >= 1 with g^r = I."""
    if not g.det():
        raise InputError("singular matrix has no order")
    if g.field.is_finite:
        N = _exponent_bound(g.field, g.n)
        for ell in factorize(N):
            while N % ell == 0 and (g ** (N // ell)).is_identity():
                N //= ell
        return N
    x, r = g, 1
    while not x.is_identity():
        x = x * g
        r += 1
        if r > cap:
            raise CapExceededError(f"element order exceeds {cap} (infinite order?)")
    return r


class FiniteMatrixGroup:
    def __init__(self, field, n, generators, elements):
        self.field = field
        self.n = n
        self.generators = tuple(generators)
        self.elements = list(elements)
        self.index = {g: i for i, g in enumerate(self.elements)}
        self._orders = None

    def __len__(self):
        return len(self.elements)

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def characteristic(self) -> int:
        return self.field.characteristic

    @property
    def identity(self) -> Mat:
        return self.elements[0]

    def __contains__(self, g: Mat) -> bool:
        return g in self.index

    def index_of(self, g: Mat) -> int:
        return self.index[g]

    @property
    def element_orders(self) -> list[int]:
        if self._orders is None:
            self._orders = [element_order(g) for g in self.elements]
        return self._orders

    def exponent(self) -> int:
        return lcm(*self.element_orders)

    def is_p_regular(self, i: int) -> bool:
        p = self.characteristic
        return p == 0 or self.element_orders[i] % p != 0

    def is_subgroup_of(self, other: "FiniteMatrixGroup") -> bool:
        return all(g in other for g in self.elements)

    def is_normal_in(self, other: "FiniteMatrixGroup") -> bool:
        for g in other.generators:
            gi = g.inv()
            for h in self.generators:
                if g * h * gi not in self:
                    return False
        return True

    def is_trivial(self) -> bool:
        return len(self.elements) == 1

    def __repr__(self):
        return f"<FiniteMatrixGroup order={self.order} n={self.n} over {self.field}>"


def enumerate_group(gens, cap: int = DEFAULT_CAP, *, field=None, n=None) -> FiniteMatrixGroup:
    """BFS closure of ``gens`` under right multiplication."""
    gens = list(gens)
    if cap < 1:
        raise InputError("cap must be >= 1")
    if gens:
        field = gens[0].field
        n = gens[0].n
    if field is None or n is None:
        raise InputError("field and dimension are required for an empty generator list")
    for g in gens:
        if g.field != field or g.n != n:
            raise InputError("generators over different fields or sizes")
        if not g.det():
            raise InputError("singular generator")
    ident = Mat.identity(field, n)
    elements = [ident]
    seen = {ident}
    i = 0
    while i < len(elements):
        x = elements[i]
        for s in gens:
            y = x * s
            if y not in seen:
                seen.add(y)
                elements.append(y)
                if len(elements) > cap:
                    raise CapExceededError(
                        f"group has more than {cap} elements (too large or infinite)")
        i += 1
    return FiniteMatrixGroup(field, n, gens, elements)


def generated_subgroup(G: FiniteMatrixGroup, S) -> FiniteMatrixGroup:
    """<S> inside G, with a greedily pruned generating set."""
    gens = []
    H = enumerate_group([], field=G.field, n=G.n)
    for s in S:
        if s not in G:
            raise InputError("element outside the ambient group")
        if s not in H:
            gens.append(s)
            H = enumerate_group(gens, cap=G.order)
    return H


def conjugation_closure(G: FiniteMatrixGroup, S) -> list[Mat]:
    out = list(dict.fromkeys(S))
    seen = set(out)
    i = 0
    ginv = [(g, g.inv()) for g in G.generators]
    while i < len(out):
        s = out[i]
        for g, gi in ginv:
            c = g * s * gi
            if c not in seen:
                seen.add(c)
                out.append(c)
        i += 1
    return out


def normal_closure(G: FiniteMatrixGroup, S) -> FiniteMatrixGroup:
    return generated_subgroup(G, conjugation_closure(G, S))


def commutator(a: Mat, b: Mat) -> Mat:
    return a.inv() * b.inv() * a * b


def commutator_subgroup(G: FiniteMatrixGroup) -> FiniteMatrixGroup:
    comms = [commutator(a, b) for a in G.generators for b in G.generators]
    return normal_closure(G, comms)


# ----------------------------------------------------------- abelian groups

def decompose_abelian(elements, mul, identity):
    """Invariant factors of a finite abelian group given by its element list.

    Returns (factors, basis, coords): factors ascend with m_i | m_{i+1},
    basis[i] has order factors[i], and coords maps each element to its
    exponent vector along the basis.
    """
    def order_mod_subgroup(x, H):
        k, y = 1, x
        while y not in H:
            y = mul(y, x)
            k += 1
        return k

    H = {identity}
    Hlist = [identity]
    basis, factors = [], []
    while len(H) < len(elements):
        img = [order_mod_subgroup(x, H) for x in elements]
        m = max(img)
        pick = None
        for x, k in zip(elements, img):
            if k == m and order_mod_subgroup(x, {identity}) == m:
                pick = x
                break
        if pick is None:
            raise ComputationError("abelian decomposition failed (group not abelian?)")
        basis.append(pick)
        factors.append(m)
        powers = [identity]
        for _ in range(m - 1):
            powers.append(mul(powers[-1], pick))
        Hlist = [mul(h, c) for h in Hlist for c in powers]
        H = set(Hlist)
    basis.reverse()
    factors.reverse()
    coords = {}
    for vec in product(*(range(m) for m in factors)):
        x = identity
        for b, e in zip(basis, vec):
            for _ in range(e):
                x = mul(x, b)
        coords[x] = vec
    if len(coords) != len(elements):
        raise ComputationError("abelian decomposition is not a direct product")
    return tuple(factors), basis, coords


@dataclass
class FiniteAbelianGroup:
    invariant_factors: tuple
    generators: list = dc_field(default_factory=list)

    @property
    def order(self) -> int:
        out = 1
        for m in self.invariant_factors:
            out *= m
        return out


class Abelianization:
    """G/[G,G] with an explicit homomorphism g -> exponent vector."""

    def __init__(self, G: FiniteMatrixGroup):
        self.group = G
        K = self.commutator = commutator_subgroup(G)
        coset_of = [None] * G.order
        reps = []
        for i, g in enumerate(G.elements):
            if coset_of[i] is None:
                cid = len(reps)
                reps.append(g)
                for k in K.elements:
                    coset_of[G.index[g * k]] = cid
        self.coset_of = coset_of
        table = [[coset_of[G.index[a * b]] for b in reps] for a in reps]
        factors, basis, coords = decompose_abelian(
            list(range(len(reps))), lambda a, b: table[a][b], 0)
        self.invariant_factors = factors
        self.basis = [reps[b] for b in basis]
        self._coords = coords
        self.abstract = FiniteAbelianGroup(factors, self.basis)

    def vector(self, g: Mat) -> tuple:
        return self._coords[self.coset_of[self.group.index[g]]]

    def vector_at(self, i: int) -> tuple:
        return self._coords[self.coset_of[i]]


def abelianization(G: FiniteMatrixGroup) -> Abelianization:
    return Abelianization(G)


# ------------------------------------------------------ eigenvalues / lifts

class LiftContext:
    """Fixed embedding of the L-th roots of unity of k-bar into Q(zeta_L).

    Characteristic 0: k = Q(zeta_N) sits inside Q(zeta_L) and the lift is
    the identity.  Characteristic p: eigenvalues live in F_{p^D} with
    D = ord_L(p); its least-code multiplicative generator gamma is sent to
    zeta_{p^D - 1}, so omega = gamma^((p^D-1)/L) goes to zeta_L.
    """

    def __init__(self, field, L: int):
        R = field.root_capacity
        if L % R:
            raise FieldError(f"lift order {L} must be a multiple of the root capacity {R}")
        self.field = field
        self.L = L
        self.cyclo = cyclotomic_field(L)
        p = field.characteristic
        if p == 0:
            self.big = self.cyclo
            self.omega = self.cyclo.gen
            self.D = None
            self._rho = None
        else:
            if L % p == 0:
                raise FieldError("lift order divisible by the characteristic")
            D = order_mod(p, L)
            self.D = D
            if D == field.m:
                self.big = field
                self._rho = None
            elif field.m == 1:
                self.big = finite_field(p, least_irreducible(p, D))
                self._rho = "prime"
            else:
                self.big = finite_field(p, least_irreducible(p, D))
                mod = UPoly(self.big, [self.big(c) for c in field.modulus])
                self._rho = next(x for x in self.big.elements() if x and not mod(x))
            self.omega = self.big.power_of_gen((self.big.q - 1) // L)
        self._dlog = {}
        x = self.big.one
        for j in range(L):
            self._dlog[x] = j
            x = x * self.omega
        self._root_step = self.dlog(self.embed(field.root_generator))

    @classmethod
    def for_orders(cls, field, orders) -> "LiftContext":
        p = field.characteristic
        e = lcm(*orders) if orders else 1
        if p:
            e //= p_part(e, p)
        return cls(field, lcm(field.root_capacity, e))

    @classmethod
    def for_group(cls, G: FiniteMatrixGroup) -> "LiftContext":
        return cls.for_orders(G.field, G.element_orders)

    @classmethod
    def for_matrix(cls, g: Mat) -> "LiftContext":
        return cls.for_orders(g.field, [element_order(g)])

    def embed(self, x):
        """k -> the eigenvalue field (Q(zeta_L) or F_{p^D})."""
        if self.field.characteristic == 0:
            return self.big.embed(x)
        if self._rho is None:
            return x
        if self._rho == "prime":
            return self.big(x.v)
        vec = self.field.vector(x)
        acc = self.big.zero
        for c in reversed(vec):
            acc = acc * self._rho + c
        return acc

    def dlog(self, y) -> int:
        try:
            return self._dlog[y]
        except KeyError:
            raise FieldError(f"{y} is not an L-th root of unity (L = {self.L})") from None

    def lift(self, x):
        """Brauer lift of a root of unity of k (or of the eigenvalue field)."""
        if x.field == self.field:
            x = self.embed(x)
        return self.cyclo.zeta(self.dlog(x))

    def root_exponent(self, k: int) -> int:
        """Exponent j with lift(root_generator**k) = zeta_L^j."""
        return (k * self._root_step) % self.L

    def reduce(self, c):
        """Reduction Z[zeta_L] -> eigenvalue field, zeta_L -> omega."""
        if self.field.characteristic == 0:
            return c
        if c.d % self.field.characteristic == 0:
            raise FieldError("cannot reduce a number with p in the denominator")
        acc = self.big.zero
        for a in reversed(c.c):
            acc = acc * self.omega + self.big(a)
        return acc * self.big(c.d).inv()

    def eigen_exponents(self, g: Mat) -> list[int]:
        """Sorted exponents j (with multiplicity): eigenvalues omega^j of g."""
        cp = g.charpoly()
        poly = UPoly(self.big, [self.embed(a) for a in cp.c])
        out = []
        x = self.big.one
        for j in range(self.L):
            if not poly(x):
                out.extend([j] * poly.root_multiplicity(x))
            x = x * self.omega
        if len(out) != g.n:
            raise FieldError(f"eigenvalues of {g} are not L-th roots of unity (L = {self.L})")
        return out

    def describe(self) -> dict:
        out = {"L": self.L, "zeta": f"zeta_{self.L}"}
        if self.field.characteristic:
            out["extension"] = self.big.descriptor()
            out["generator_code"] = self.big.gamma.v
            out["convention"] = "least-code generator of F_{p^D}* maps to zeta_{p^D-1}"
        else:
            out["extension"] = self.big.descriptor()
        return out


@dataclass
class Eigenvalues:
    values: list          # (element of the eigenvalue field, multiplicity)
    exponents: list       # omega-exponents with multiplicity
    context: LiftContext
    p_singular: bool

    @property
    def extension(self):
        return self.context.big


def eigenvalues(g: Mat, ctx: LiftContext | None = None) -> Eigenvalues:
    if not g.det():
        raise InputError("singular matrix")
    r = element_order(g)
    if ctx is None:
        ctx = LiftContext.for_orders(g.field, [r])
    exps = ctx.eigen_exponents(g)
    values = []
    for j in dict.fromkeys(exps):
        values.append((ctx.omega ** j, exps.count(j)))
    p = g.field.characteristic
    return Eigenvalues(values, exps, ctx, bool(p and r % p == 0))
