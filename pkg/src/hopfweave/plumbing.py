# Plumbing trees of Hopf bands: moves, Seifert-matrix assembly, invariant
# reports, canonical forms and JSON serialization.
from __future__ import annotations

import enum
import itertools
import os
from dataclasses import dataclass, field

from .laurent import LaurentPolynomial
from .linalg import (
    IntMatrix,
    alexander_from_seifert,
    det_exact,
    homological_monodromy,
    signature_symmetric,
    smith_invariants,
)

DEFAULT_MU_CAP = 10
MU_CAP_ENV = "HOPFWEAVE_MU_CAP"


class BandSign(enum.Enum):
    POSITIVE = "+"
    NEGATIVE = "-"

    @property
    def seifert_entry(self):
        # V(H+) = [-1], V(H-) = [+1]: reproduces the standard trefoil and
        # figure-eight values (Delta, sigma) from knot tables.
        return -1 if self is BandSign.POSITIVE else 1

    @classmethod
    def from_str(cls, text):
        for sign in cls:
            if sign.value == text:
                return sign
        raise ValueError(f"unknown band sign {text!r}")


class KnotMove(enum.Enum):
    TPLUS = "T+"
    E = "E"


@dataclass(frozen=True)
class Band:
    sign: BandSign
    gluing: tuple

    def __post_init__(self):
        object.__setattr__(self, "gluing", tuple(int(x) for x in self.gluing))


@dataclass(frozen=True)
class PlumbingTree:
    """An ordered sequence of Hopf-band additions.

    Band k carries a gluing vector of length k-1: its linking pattern with
    every previously added band.  The empty tree is the unknot presentation.
    """

    bands: tuple = ()
    labels: tuple | None = field(default=None, compare=False)

    def __post_init__(self):
        bands = tuple(self.bands)
        object.__setattr__(self, "bands", bands)
        for k, band in enumerate(bands):
            if len(band.gluing) != k:
                raise ValueError(
                    f"band {k + 1} gluing vector has length {len(band.gluing)}, "
                    f"expected {k}"
                )

    @property
    def mu(self):
        """Milnor number: band count = first Betti number of the page."""
        return len(self.bands)

    @property
    def lam(self):
        """Enhanced Milnor number of the presentation: negative-band count."""
        return sum(1 for b in self.bands if b.sign is BandSign.NEGATIVE)

    def coupling(self, i, j):
        """Linking between bands i < j (0-based original positions)."""
        if i == j:
            raise ValueError("coupling needs two distinct bands")
        lo, hi = (i, j) if i < j else (j, i)
        return self.bands[hi].gluing[lo]


@dataclass(frozen=True)
class InvariantReport:
    mu: int
    lam: int
    alexander: LaurentPolynomial
    sigma: int
    det_v: int
    fingerprint: tuple


class CanonicalizationCapError(ValueError):
    pass


class NotRemovableError(ValueError):
    pass


def unknot() -> PlumbingTree:
    return PlumbingTree(())


def hopf_plumb(tree: PlumbingTree, sign: BandSign, x) -> PlumbingTree:
    """Plumb one Hopf band onto the tree with gluing vector x."""
    x = tuple(int(v) for v in x)
    if len(x) != tree.mu:
        raise ValueError(
            f"gluing vector has length {len(x)}, expected {tree.mu}"
        )
    return PlumbingTree(tree.bands + (Band(sign, x),))


def plumb(t1: PlumbingTree, t2: PlumbingTree, x: IntMatrix) -> PlumbingTree:
    """Plumb two trees with coupling matrix x (mu1 rows, mu2 columns).

    The assembled Seifert matrix is the block matrix [[V1, X], [0, V2]].
    """
    if (x.rows, x.cols) != (t1.mu, t2.mu):
        raise ValueError(
            f"coupling matrix is {x.rows}x{x.cols}, expected {t1.mu}x{t2.mu}"
        )
    bands = list(t1.bands)
    for j, band in enumerate(t2.bands):
        column = tuple(x[i, j] for i in range(t1.mu))
        bands.append(Band(band.sign, column + band.gluing))
    return PlumbingTree(tuple(bands))


def knot_plumb(tree: PlumbingTree, kind: KnotMove, x, c: int = 1) -> PlumbingTree:
    """Plumb a positive trefoil (T+) or figure-eight (E) presentation.

    Two successive Hopf plumbings: a positive band glued by x, then a
    second band crossing it once (c = +-1, the non-separating arc).
    """
    if c not in (1, -1):
        raise ValueError("the second band must cross the first once: c = +-1")
    second = BandSign.POSITIVE if kind is KnotMove.TPLUS else BandSign.NEGATIVE
    out = hopf_plumb(tree, BandSign.POSITIVE, x)
    return hopf_plumb(out, second, (0,) * tree.mu + (c,))


def deplumb(tree: PlumbingTree, index: int) -> PlumbingTree:
    """Remove band `index` (0-based); inverse of the matching hopf_plumb.

    The band must be free: no later band may glue over it.
    """
    if not 0 <= index < tree.mu:
        raise IndexError(f"no band {index} in a {tree.mu}-band tree")
    for k in range(index + 1, tree.mu):
        if tree.bands[k].gluing[index] != 0:
            raise NotRemovableError(
                f"band {index + 1} is still plumbed over by band {k + 1}"
            )
    bands = []
    for k, band in enumerate(tree.bands):
        if k == index:
            continue
        if k > index:
            band = Band(band.sign,
                        band.gluing[:index] + band.gluing[index + 1:])
        bands.append(band)
    return PlumbingTree(tuple(bands))


def seifert_matrix(tree: PlumbingTree) -> IntMatrix:
    """Upper block-triangular Seifert matrix of the presentation.

    Diagonal entries are +-1, so |det| = 1: the fibered certificate.
    """
    n = tree.mu
    rows = []
    for i in range(n):
        row = [0] * n
        row[i] = tree.bands[i].sign.seifert_entry
        for j in range(i + 1, n):
            row[j] = tree.bands[j].gluing[i]
        rows.append(tuple(row))
    return IntMatrix(n, n, tuple(rows))


def invariants(tree: PlumbingTree) -> InvariantReport:
    v = seifert_matrix(tree)
    delta = alexander_from_seifert(v)
    sym = v + v.transpose()
    sigma = signature_symmetric(sym)
    h = homological_monodromy(v)
    fingerprint = (
        tree.mu,
        tree.lam,
        delta.key(),
        sigma,
        tuple(smith_invariants(sym)),
        tuple(smith_invariants(h - IntMatrix.identity(tree.mu))),
    )
    return InvariantReport(
        mu=tree.mu,
        lam=tree.lam,
        alexander=delta,
        sigma=sigma,
        det_v=det_exact(v),
        fingerprint=fingerprint,
    )


def _matrix_key(tree: PlumbingTree):
    return tuple(itertools.chain.from_iterable(seifert_matrix(tree).entries))


def _reorder(tree: PlumbingTree, order) -> PlumbingTree:
    bands = []
    for p, orig in enumerate(order):
        gluing = tuple(tree.coupling(order[q], orig) for q in range(p))
        bands.append(Band(tree.bands[orig].sign, gluing))
    return PlumbingTree(tuple(bands))


def effective_mu_cap(cap=None):
    if cap is not None:
        return cap
    return int(os.environ.get(MU_CAP_ENV, DEFAULT_MU_CAP))


def canonical_form(tree: PlumbingTree, cap=None) -> PlumbingTree:
    """Representative with lexicographically minimal Seifert matrix.

    Minimizes the row-major flattened matrix over all band reorderings
    that keep the assembled matrix upper triangular (topological reorders
    of the coupling graph).  Idempotent.
    """
    cap = effective_mu_cap(cap)
    n = tree.mu
    if n > cap:
        raise CanonicalizationCapError(
            f"canonicalization cap exceeded: mu = {n} > {cap}"
        )
    if n <= 1:
        return tree

    deps = [
        {i for i in range(k) if tree.bands[k].gluing[i] != 0}
        for k in range(n)
    ]
    best = {"key": None, "order": None}

    def interchangeable(a, b):
        if tree.bands[a].sign is not tree.bands[b].sign:
            return False
        return all(tree.coupling(a, x) == tree.coupling(b, x)
                   for x in range(n) if x not in (a, b))

    def extend(order, placed):
        if len(order) == n:
            candidate = _reorder(tree, order)
            key = _matrix_key(candidate)
            if best["key"] is None or key < best["key"]:
                best["key"] = key
                best["order"] = tuple(order)
            return
        tried = []
        for nxt in range(n):
            if nxt in placed or not deps[nxt] <= placed:
                continue
            if any(interchangeable(nxt, seen) for seen in tried):
                continue
            tried.append(nxt)
            order.append(nxt)
            placed.add(nxt)
            extend(order, placed)
            order.pop()
            placed.remove(nxt)

    extend([], set())
    return _reorder(tree, best["order"])


def tree_to_json(tree: PlumbingTree) -> dict:
    return {
        "bands": [
            {"sign": band.sign.value, "x": list(band.gluing)}
            for band in tree.bands
        ]
    }


def tree_from_json(data: dict) -> PlumbingTree:
    bands = tuple(
        Band(BandSign.from_str(entry["sign"]), tuple(entry["x"]))
        for entry in data["bands"]
    )
    return PlumbingTree(bands)
