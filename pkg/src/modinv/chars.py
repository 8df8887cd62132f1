"""Linear characters G -> mu_m(k), restriction, determinant characters and
the divisor class group of A^G realised as characters trivial on W.

A character is stored as exponents c_i in Z/m on the abelianization basis:
chi(g) = zeta_m ** <c, ab(g)>, where zeta_m = root_generator ** (R/m) and R
is the number of roots of unity in k.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from math import gcd

from .errors import ComputationError, FieldError, InputError
from .matgroup import Abelianization, FiniteMatrixGroup, Mat, abelianization, decompose_abelian


class LinearCharacter:
    __slots__ = ("ab", "m", "exponents")

    def __init__(self, ab: Abelianization, m: int, exponents):
        R = ab.group.field.root_capacity
        if m < 1 or R % m:
            raise InputError(f"character order {m} must divide the root capacity {R}")
        ex = tuple(int(e) % m for e in exponents)
        if len(ex) != len(ab.invariant_factors):
            raise InputError("exponent vector length does not match the abelianization")
        for e, mi in zip(ex, ab.invariant_factors):
            if (e * mi) % m:
                raise InputError(f"exponent {e} is not a homomorphism on Z/{mi} into mu_{m}")
        self.ab = ab
        self.m = m
        self.exponents = ex

    @property
    def group(self) -> FiniteMatrixGroup:
        return self.ab.group

    @property
    def field(self):
        return self.ab.group.field

    def exponent_at(self, g: Mat) -> int:
        """k in Z/m with chi(g) = zeta_m^k."""
        v = self.ab.vector(g)
        return sum(a * b for a, b in zip(self.exponents, v)) % self.m

    def root_exponent(self, g: Mat) -> int:
        """k in Z/R with chi(g) = root_generator^k."""
        R = self.field.root_capacity
        return self.exponent_at(g) * (R // self.m) % R

    def value(self, g: Mat):
        return self.field.root_generator ** self.root_exponent(g)

    def __call__(self, g: Mat):
        return self.value(g)

    def is_trivial(self) -> bool:
        return not any(self.exponents)

    def _same(self, other):
        if other.ab is not self.ab or other.m != self.m:
            raise InputError("characters of different groups or orders")

    def __mul__(self, other: "LinearCharacter") -> "LinearCharacter":
        self._same(other)
        return LinearCharacter(self.ab, self.m,
                               [a + b for a, b in zip(self.exponents, other.exponents)])

    def inverse(self) -> "LinearCharacter":
        return LinearCharacter(self.ab, self.m, [-a for a in self.exponents])

    def __pow__(self, k: int) -> "LinearCharacter":
        return LinearCharacter(self.ab, self.m, [a * k for a in self.exponents])

    def __eq__(self, other):
        return (isinstance(other, LinearCharacter) and other.ab is self.ab
                and other.m == self.m and other.exponents == self.exponents)

    def __hash__(self):
        return hash((id(self.ab), self.m, self.exponents))

    def order(self) -> int:
        out = 1
        for e in self.exponents:
            k = self.m // gcd(e, self.m)
            out = out * k // gcd(out, k)
        return out

    def restrict(self, H: FiniteMatrixGroup, ab_H: Abelianization | None = None) -> "LinearCharacter":
        return restrict_character(self, H, ab_H)

    def is_trivial_on(self, H: FiniteMatrixGroup) -> bool:
        return all(self.exponent_at(h) == 0 for h in H.generators)

    def to_json(self) -> dict:
        f = self.field
        return {
            "m": self.m,
            "exponents": list(self.exponents),
            "values_on_generators": [f.format(self.value(g)) for g in self.group.generators],
        }

    def __repr__(self):
        return f"LinearCharacter(m={self.m}, exponents={list(self.exponents)})"


def character_from_values(ab: Abelianization, m: int, value_of) -> LinearCharacter:
    """Build the character whose value at g is ``value_of(g)`` (a scalar of k).

    Values are read on the abelianization basis and then checked on every
    generator, so a non-homomorphic input raises ``ComputationError``.
    """
    f = ab.group.field
    R = f.root_capacity
    step = R // m
    ex = []
    for b in ab.basis:
        k = _root_log(f, value_of(b))
        if k % step:
            raise FieldError(f"character value outside mu_{m}")
        ex.append(k // step)
    try:
        chi = LinearCharacter(ab, m, ex)
    except InputError as exc:
        raise ComputationError(f"values do not define a character: {exc}") from exc
    for g in ab.group.generators:
        if chi.value(g) != value_of(g):
            raise ComputationError("values are not multiplicative (not a character)")
    return chi


def _root_log(f, x) -> int:
    try:
        return f.root_dlog(x)
    except (FieldError, ZeroDivisionError) as exc:
        raise FieldError(f"{x} is not a root of unity in {f}") from exc


@dataclass
class CharacterGroup:
    ab: Abelianization
    m: int
    characters: list

    def __len__(self):
        return len(self.characters)

    def __iter__(self):
        return iter(self.characters)

    def __getitem__(self, i):
        return self.characters[i]

    def index(self, chi: LinearCharacter) -> int:
        return self.characters.index(chi)

    def trivial(self) -> LinearCharacter:
        return self.characters[0]

    def expected_order(self) -> int:
        out = 1
        for mi in self.ab.invariant_factors:
            out *= gcd(mi, self.m)
        return out


def character_group(G: FiniteMatrixGroup, m: int | None = None,
                    ab: Abelianization | None = None) -> CharacterGroup:
    """All homomorphisms G -> mu_m, in lexicographic exponent order."""
    if m is None:
        m = G.field.root_capacity
    ab = ab or abelianization(G)
    ranges = []
    for mi in ab.invariant_factors:
        step = m // gcd(m, mi)
        ranges.append(range(0, m, step))
    chars = [LinearCharacter(ab, m, ex) for ex in product(*ranges)]
    return CharacterGroup(ab, m, chars)


def restrict_character(chi: LinearCharacter, H: FiniteMatrixGroup,
                       ab_H: Abelianization | None = None) -> LinearCharacter:
    if not all(h in chi.group for h in H.generators):
        raise InputError("restriction target is not a subgroup of the source")
    ab_H = ab_H or abelianization(H)
    return character_from_values(ab_H, chi.m, chi.value)


@dataclass
class ClassGroup:
    """ker(res_W) inside Hom(G, mu_m): the divisor class group of A^G."""
    characters: list
    invariant_factors: tuple
    basis: list
    ambient: CharacterGroup

    @property
    def order(self) -> int:
        return len(self.characters)

    def is_trivial(self) -> bool:
        return len(self.characters) == 1

    def contains(self, chi: LinearCharacter) -> bool:
        return chi in self.characters

    def describe(self) -> str:
        if not self.invariant_factors:
            return "trivial"
        return " x ".join(f"Z/{m}" for m in self.invariant_factors)


def class_group(G: FiniteMatrixGroup, W: FiniteMatrixGroup, m: int | None = None,
                chars: CharacterGroup | None = None) -> ClassGroup:
    chars = chars or character_group(G, m)
    kernel = [chi for chi in chars if chi.is_trivial_on(W)]
    factors, basis, _ = decompose_abelian(kernel, lambda a, b: a * b, chars.trivial())
    return ClassGroup(kernel, factors, basis, chars)


def det_character(G: FiniteMatrixGroup, ab: Abelianization | None = None,
                  m: int | None = None) -> LinearCharacter:
    ab = ab or abelianization(G)
    m = m or G.field.root_capacity
    return character_from_values(ab, m, lambda g: g.det())


def graded_det_characters(G: FiniteMatrixGroup, actions, ab: Abelianization | None = None,
                          m: int | None = None) -> list[LinearCharacter]:
    """det_i(g) = det(g on U_i) for each graded piece.

    ``actions`` is a list of dicts mapping group elements to matrices on U_i;
    every element that appears is checked against the resulting character.
    """
    ab = ab or abelianization(G)
    m = m or G.field.root_capacity
    out = []
    for act in actions:
        dims = {M.n for M in act.values()}
        if len(dims) > 1:
            raise ComputationError("inconsistent dimensions in a graded action")
        chi = character_from_values(ab, m, lambda g, act=act: act[g].det())
        for g, M in act.items():
            if chi.value(g) != M.det():
                raise ComputationError("graded determinant is not a character")
        out.append(chi)
    return out
