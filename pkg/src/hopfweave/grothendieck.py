# Rank-two free abelian group arithmetic for fibered-link classes.
from __future__ import annotations

from dataclasses import dataclass

from .plumbing import PlumbingTree


class ParityObstructionError(ValueError):
    """No decomposition over the knot basis: mu - 2*lambda is odd."""


@dataclass(frozen=True)
class GkClass:
    """Class (mu, lambda) of a fibered link in the rank-two group."""

    mu: int
    lam: int

    def __add__(self, other):
        return GkClass(self.mu + other.mu, self.lam + other.lam)

    def __sub__(self, other):
        return GkClass(self.mu - other.mu, self.lam - other.lam)


def gk_class(tree: PlumbingTree) -> GkClass:
    return GkClass(tree.mu, tree.lam)


def decompose_link_class(g: GkClass):
    """Coefficients (a, b) over the link basis [H+], [H-].

    Solves a*(1,0) + b*(1,1) = (mu, lambda); coefficients may be negative.
    """
    return (g.mu - g.lam, g.lam)


def decompose_knot_class(g: GkClass):
    """Coefficients (a, b) over the knot basis [T+], [E].

    Solves a*(2,0) + b*(2,1) = (mu, lambda); fails when mu - 2*lambda is odd.
    """
    b = g.lam
    remainder = g.mu - 2 * g.lam
    if remainder % 2 != 0:
        raise ParityObstructionError(
            f"({g.mu},{g.lam}) has no knot-basis decomposition: "
            f"mu - 2*lambda = {remainder} is odd"
        )
    return (remainder // 2, b)
