"""Pseudo-reflections and the subgroups W and W-tilde.

For a linear action, g is a (generalised) reflection on A = Sym(V*) exactly
when it fixes a hyperplane pointwise, i.e. rank(g - I) = 1.  Such a g is
either diagonalizable (one eigenvalue != 1) or a transvection
((g - I)^2 = 0, only in positive characteristic).
"""
from __future__ import annotations

from dataclasses import dataclass

from .matgroup import FiniteMatrixGroup, Mat, element_order, generated_subgroup

IDENTITY = "identity"
DIAGONALIZABLE = "diagonalizable-reflection"
TRANSVECTION = "transvection"
NON_REFLECTION = "non-reflection"

REFLECTION_TAGS = (DIAGONALIZABLE, TRANSVECTION)


@dataclass(frozen=True)
class ElementClassification:
    tag: str
    fixed_dim: int
    order: int

    @property
    def is_reflection(self) -> bool:
        return self.tag in REFLECTION_TAGS


def classify_element(g: Mat, order: int | None = None) -> ElementClassification:
    n = g.n
    if order is None:
        order = element_order(g)
    N = g.minus_identity()
    r = N.rank()
    fixed = n - r
    if r == 0:
        tag = IDENTITY
    elif r > 1:
        tag = NON_REFLECTION
    elif (N * N).rank() == 0:
        # rank one and nilpotent; only possible when p > 0
        tag = TRANSVECTION
    else:
        tag = DIAGONALIZABLE
    return ElementClassification(tag, fixed, order)


@dataclass
class ReflectionReport:
    group: FiniteMatrixGroup
    classifications: list
    W: FiniteMatrixGroup
    Wtilde: FiniteMatrixGroup

    @property
    def NR(self) -> bool:
        return not any(c.is_reflection for c in self.classifications)

    @property
    def index_W(self) -> int:
        return self.group.order // self.W.order

    @property
    def index_Wtilde(self) -> int:
        return self.group.order // self.Wtilde.order

    def reflections(self) -> list[Mat]:
        return [g for g, c in zip(self.group.elements, self.classifications) if c.is_reflection]

    def table(self) -> list[dict]:
        return [{"element": i, "tag": c.tag, "order": c.order, "fixed_dim": c.fixed_dim}
                for i, c in enumerate(self.classifications)]


def classify_group(G: FiniteMatrixGroup) -> list[ElementClassification]:
    return [classify_element(g, o) for g, o in zip(G.elements, G.element_orders)]


def reflection_subgroup(G: FiniteMatrixGroup, classes=None) -> FiniteMatrixGroup:
    # the set of reflections is closed under conjugation, so <refl> is normal
    classes = classes or classify_group(G)
    return generated_subgroup(G, [g for g, c in zip(G.elements, classes) if c.is_reflection])


def wtilde_subgroup(G: FiniteMatrixGroup, classes=None) -> FiniteMatrixGroup:
    classes = classes or classify_group(G)
    p = G.characteristic
    gens = []
    for g, c in zip(G.elements, classes):
        if c.is_reflection:
            gens.append(g)
        elif p and c.tag != IDENTITY and _is_power_of(c.order, p):
            gens.append(g)
    return generated_subgroup(G, gens)


def _is_power_of(n: int, p: int) -> bool:
    while n % p == 0:
        n //= p
    return n == 1


def check_NR(G: FiniteMatrixGroup, classes=None) -> bool:
    classes = classes or classify_group(G)
    return not any(c.is_reflection for c in classes)


def reflection_report(G: FiniteMatrixGroup) -> ReflectionReport:
    classes = classify_group(G)
    W = reflection_subgroup(G, classes)
    Wt = wtilde_subgroup(G, classes) if G.characteristic else W
    return ReflectionReport(G, classes, W, Wt)
