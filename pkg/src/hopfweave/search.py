# Bounded iterative-deepening search for explicit common stabilizations,
# plus independent certificate verification.
from __future__ import annotations

import itertools
from dataclasses import dataclass

from .plumbing import (
    Band,
    BandSign,
    PlumbingTree,
    canonical_form,
    hopf_plumb,
    invariants,
    tree_from_json,
    tree_to_json,
)


@dataclass(frozen=True)
class SearchConfig:
    max_moves_per_side: int
    coord_bound: int = 1
    mu_cap: int = 10
    deterministic_order: bool = True

    def __post_init__(self):
        if self.max_moves_per_side < 0:
            raise ValueError("max_moves_per_side must be nonnegative")
        if self.coord_bound < 0:
            raise ValueError("coord_bound must be nonnegative")
        if self.mu_cap <= 0:
            raise ValueError("mu_cap must be positive")


@dataclass(frozen=True)
class StabilizationCertificate:
    """Witness of a common stabilization.

    Replaying moves_left on the first tree and moves_right on the second
    and canonicalizing yields matched_form on both sides; budget_used
    counts the negative bands added across both sides.
    """

    moves_left: tuple
    moves_right: tuple
    matched_form: PlumbingTree
    budget_used: int


def _enumerate_sequences(tree, length, cfg, neg_range, prune):
    """Yield (moves, stabilized tree) for every move sequence of the given
    length, in deterministic enumeration order.

    neg_range bounds the admissible total of negative bands; sequences
    that cannot land in it are pruned when prune is set.
    """
    lo, hi = neg_range
    coords = range(-cfg.coord_bound, cfg.coord_bound + 1)

    def walk(current, moves, negs):
        remaining = length - len(moves)
        if prune and (negs > hi or negs + remaining < lo):
            return
        if remaining == 0:
            if lo <= negs <= hi:
                yield tuple(moves), current
            return
        for sign in (BandSign.POSITIVE, BandSign.NEGATIVE):
            for vec in itertools.product(coords, repeat=current.mu):
                move = Band(sign, vec)
                moves.append(move)
                yield from walk(
                    hopf_plumb(current, sign, vec),
                    moves,
                    negs + (1 if sign is BandSign.NEGATIVE else 0),
                )
                moves.pop()

    yield from walk(tree, [], 0)


def common_stabilization(t1: PlumbingTree, t2: PlumbingTree,
                         cfg: SearchConfig, _prune: bool = True):
    """Search for a common stabilization within the configured bounds.

    Iterative deepening over the total move count, then over the per-side
    split; ties go to enumeration order (left sequence first, then right).
    Returns a StabilizationCertificate, or None when the bounds are
    exhausted.  Exhaustion is definitive only for the searched bounds.
    """
    if t1.mu + cfg.max_moves_per_side > cfg.mu_cap:
        raise ValueError("left tree exceeds mu_cap within the move budget")
    if t2.mu + cfg.max_moves_per_side > cfg.mu_cap:
        raise ValueError("right tree exceeds mu_cap within the move budget")

    gap = t2.lam - t1.lam
    for total in range(0, 2 * cfg.max_moves_per_side + 1):
        for left_moves in range(0, total + 1):
            right_moves = total - left_moves
            if left_moves > cfg.max_moves_per_side:
                break
            if right_moves > cfg.max_moves_per_side:
                continue
            # stabilized trees must agree, so mu must balance exactly
            if t1.mu + left_moves != t2.mu + right_moves:
                continue
            # negL - negR = lam2 - lam1 must be solvable in the budget
            neg_left = (max(0, gap), min(left_moves, gap + right_moves))
            neg_right = (max(0, -gap), min(right_moves, left_moves - gap))
            if _prune and neg_left[0] > neg_left[1]:
                continue

            matched = {}
            for moves, stabilized in _enumerate_sequences(
                    t2, right_moves, cfg, neg_right, _prune):
                key = canonical_form(stabilized, cap=cfg.mu_cap)
                matched.setdefault(key, moves)
            for moves, stabilized in _enumerate_sequences(
                    t1, left_moves, cfg, neg_left, _prune):
                key = canonical_form(stabilized, cap=cfg.mu_cap)
                other = matched.get(key)
                if other is not None:
                    budget = sum(
                        1 for m in moves + other
                        if m.sign is BandSign.NEGATIVE
                    )
                    return StabilizationCertificate(
                        moves_left=moves,
                        moves_right=other,
                        matched_form=key,
                        budget_used=budget,
                    )
    return None


def verify_certificate(t1: PlumbingTree, t2: PlumbingTree,
                       cert: StabilizationCertificate) -> bool:
    """Independent replay of a certificate; never trusts the search."""
    try:
        left = t1
        for move in cert.moves_left:
            left = hopf_plumb(left, move.sign, move.gluing)
        right = t2
        for move in cert.moves_right:
            right = hopf_plumb(right, move.sign, move.gluing)
        left_canon = canonical_form(left)
        right_canon = canonical_form(right)
    except ValueError:
        return False
    if left_canon != right_canon or left_canon != cert.matched_form:
        return False
    if invariants(left_canon).fingerprint != invariants(right_canon).fingerprint:
        return False
    negatives = sum(
        1 for m in cert.moves_left + cert.moves_right
        if m.sign is BandSign.NEGATIVE
    )
    return negatives == cert.budget_used


def _moves_to_json(moves):
    return [{"sign": m.sign.value, "x": list(m.gluing)} for m in moves]


def _moves_from_json(data):
    return tuple(Band(BandSign.from_str(m["sign"]), tuple(m["x"])) for m in data)


def certificate_to_json(cert: StabilizationCertificate) -> dict:
    return {
        "left": _moves_to_json(cert.moves_left),
        "right": _moves_to_json(cert.moves_right),
        "matched": tree_to_json(cert.matched_form),
        "budget": cert.budget_used,
    }


def certificate_from_json(data: dict) -> StabilizationCertificate:
    return StabilizationCertificate(
        moves_left=_moves_from_json(data["left"]),
        moves_right=_moves_from_json(data["right"]),
        matched_form=tree_from_json(data["matched"]),
        budget_used=int(data["budget"]),
    )
