# Homological bookkeeping for plane fields of open books: obstruction
# classes, relative framings, the pi_3(S^2) action, and the stable
# equivalence decision with its H^- budget.
from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .plumbing import BandSign, PlumbingTree


class ManifoldMismatchError(ValueError):
    pass


class NotHomologousError(ValueError):
    pass


@dataclass(frozen=True)
class ManifoldModel:
    """Homological descriptor of a closed oriented three-manifold.

    h1 lists the invariant factors of H_1 (0 marks a free Z factor); by
    duality H^2 elements are represented as H_1 elements.
    """

    name: str
    h1: tuple = ()

    def __post_init__(self):
        factors = tuple(int(d) for d in self.h1)
        object.__setattr__(self, "h1", factors)
        if any(d < 0 for d in factors):
            raise ValueError("invariant factors must be nonnegative")
        nonzero = [d for d in factors if d != 0]
        for a, b in zip(nonzero, nonzero[1:]):
            if b % a != 0:
                raise ValueError("invariant factors must form a divisibility chain")

    @property
    def is_homology_sphere(self):
        return not self.h1


SPHERE = ManifoldModel("S3", ())


@dataclass(frozen=True)
class H1Element:
    """Element of H_1 of a manifold model, one coefficient per factor."""

    manifold: ManifoldModel
    coefficients: tuple = None

    def __post_init__(self):
        coeffs = self.coefficients
        if coeffs is None:
            coeffs = (0,) * len(self.manifold.h1)
        coeffs = tuple(int(c) for c in coeffs)
        if len(coeffs) != len(self.manifold.h1):
            raise ValueError(
                f"expected {len(self.manifold.h1)} coefficients, got {len(coeffs)}"
            )
        coeffs = tuple(
            c % d if d > 0 else c for c, d in zip(coeffs, self.manifold.h1)
        )
        object.__setattr__(self, "coefficients", coeffs)

    def is_zero(self):
        return all(c == 0 for c in self.coefficients)

    def _check(self, other):
        if self.manifold != other.manifold:
            raise ManifoldMismatchError("elements live on different manifolds")

    def __add__(self, other):
        self._check(other)
        return H1Element(
            self.manifold,
            tuple(a + b for a, b in zip(self.coefficients, other.coefficients)),
        )

    def __sub__(self, other):
        self._check(other)
        return H1Element(
            self.manifold,
            tuple(a - b for a, b in zip(self.coefficients, other.coefficients)),
        )

    def __neg__(self):
        return H1Element(self.manifold, tuple(-c for c in self.coefficients))


class PlaneFieldClass:
    """Homotopy-class data of an oriented plane field, in an absolute chart.

    c is the section class relative to the model's fixed reference field,
    euler the Euler class under duality, framing an absolute integer.
    Equality reduces the framing modulo the Euler divisibility.
    """

    __slots__ = ("manifold", "c", "euler", "framing")

    def __init__(self, manifold, c=None, euler=None, framing=0):
        self.manifold = manifold
        self.c = c if c is not None else H1Element(manifold)
        self.euler = euler if euler is not None else H1Element(manifold)
        if self.c.manifold != manifold or self.euler.manifold != manifold:
            raise ManifoldMismatchError("class data on a different manifold")
        self.framing = int(framing)

    def _framing_residue(self):
        div = euler_divisibility(self)
        return self.framing % div if div > 0 else self.framing

    def __eq__(self, other):
        if not isinstance(other, PlaneFieldClass):
            return NotImplemented
        return (
            self.manifold == other.manifold
            and self.c == other.c
            and self.euler == other.euler
            and self._framing_residue() == other._framing_residue()
        )

    def __hash__(self):
        return hash((self.manifold, self.c, self.euler, self._framing_residue()))

    def __repr__(self):
        return (
            f"PlaneFieldClass({self.manifold.name!r}, c={self.c.coefficients}, "
            f"euler={self.euler.coefficients}, framing={self.framing})"
        )


@dataclass(frozen=True)
class OpenBookClass:
    """A plumbing presentation together with its plane-field class."""

    tree: PlumbingTree
    field: PlaneFieldClass

    @classmethod
    def from_tree(cls, tree, manifold=SPHERE):
        # Over the sphere model, the reference field is the trivial open
        # book (U) at framing 0; each negative band advances the framing.
        field = PlaneFieldClass(manifold, framing=tree.lam)
        return cls(tree=tree, field=field)


@dataclass(frozen=True)
class EquivalenceVerdict:
    equivalent: bool
    hminus_budget: int | None = None


def obstruction_class(xi: PlaneFieldClass, eta: PlaneFieldClass) -> H1Element:
    """First obstruction c(xi, eta) to homotoping xi to eta, in H_1."""
    if xi.manifold != eta.manifold:
        raise ManifoldMismatchError("plane fields on different manifolds")
    return eta.c - xi.c


def euler_divisibility(xi: PlaneFieldClass) -> int:
    """Divisibility of the torsion-free part of the Euler class.

    0 means the pi_3(S^2) = Z action is free (e.g. homology spheres).
    """
    d = 0
    for coeff, factor in zip(xi.euler.coefficients, xi.manifold.h1):
        if factor == 0:
            d = gcd(d, abs(coeff))
    return d


def relative_framing(xi: PlaneFieldClass, eta: PlaneFieldClass) -> int:
    """d(xi, eta): the framing shift taking xi to eta.

    Reduced into {0, ..., |xi|-1} when |xi| > 0; a signed integer when the
    action is free.
    """
    if not obstruction_class(xi, eta).is_zero():
        raise NotHomologousError("relative framing needs homologous fields")
    diff = eta.framing - xi.framing
    div = euler_divisibility(xi)
    return diff % div if div > 0 else diff


def act_pi3(k: int, xi: PlaneFieldClass) -> PlaneFieldClass:
    """Action of k in pi_3(S^2) = Z: shifts the framing, fixes c and euler."""
    return PlaneFieldClass(xi.manifold, xi.c, xi.euler, xi.framing + int(k))


def plumb_effect(xi: PlaneFieldClass, sign: BandSign) -> PlaneFieldClass:
    """Effect of one Hopf plumbing on the plane-field class.

    A positive band fixes the class; a negative band advances the framing
    by exactly 1.
    """
    if sign is BandSign.POSITIVE:
        return xi
    return act_pi3(1, xi)


def pontryagin_class(framed_curves) -> int:
    """Class in pi_3(S^2) = Z of a union of standard framed circles in a
    ball, one twist count per circle."""
    return sum(int(u) for u in framed_curves)


def stable_equivalence(a: OpenBookClass, b: OpenBookClass) -> EquivalenceVerdict:
    """Decide whether two open books admit isotopic stabilizations.

    Equivalent iff the plane-field classes are homologous; the budget
    2 + min(d, d') bounds the number of H^- plumbings that suffice.
    """
    if a.field.manifold != b.field.manifold:
        raise ManifoldMismatchError("open books on different manifolds")
    if not obstruction_class(a.field, b.field).is_zero():
        return EquivalenceVerdict(equivalent=False)
    div = euler_divisibility(a.field)
    diff = b.field.framing - a.field.framing
    if div > 0:
        d = diff % div
        budget = 2 + min(d, (-d) % div)
    else:
        budget = 2 + abs(diff)
    return EquivalenceVerdict(equivalent=True, hminus_budget=budget)


def manifold_to_json(model: ManifoldModel) -> dict:
    return {"name": model.name, "h1": list(model.h1)}


def manifold_from_json(data: dict) -> ManifoldModel:
    return ManifoldModel(data["name"], tuple(data.get("h1", ())))


def plane_field_to_json(xi: PlaneFieldClass) -> dict:
    return {
        "c": list(xi.c.coefficients),
        "euler": list(xi.euler.coefficients),
        "framing": xi.framing,
    }


def plane_field_from_json(data: dict, manifold: ManifoldModel) -> PlaneFieldClass:
    return PlaneFieldClass(
        manifold,
        H1Element(manifold, tuple(data["c"])),
        H1Element(manifold, tuple(data["euler"])),
        data["framing"],
    )
