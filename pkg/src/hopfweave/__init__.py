"""Exact-arithmetic engine for open books plumbed from Hopf bands.

Computes Milnor numbers, Alexander polynomials, plane-field classes and
rank-two group decompositions of plumbing presentations, decides stable
equivalence over manifold descriptors, and searches for explicit common
stabilization certificates.
"""

from .laurent import LaurentPolynomial
from .linalg import (
    IntMatrix,
    NonFiberedError,
    alexander_from_seifert,
    char_poly,
    det_exact,
    homological_monodromy,
    signature_symmetric,
    smith_invariants,
)
from .plumbing import (
    Band,
    BandSign,
    CanonicalizationCapError,
    InvariantReport,
    KnotMove,
    NotRemovableError,
    PlumbingTree,
    canonical_form,
    deplumb,
    hopf_plumb,
    invariants,
    knot_plumb,
    plumb,
    seifert_matrix,
    tree_from_json,
    tree_to_json,
    unknot,
)
from .plane_fields import (
    EquivalenceVerdict,
    H1Element,
    ManifoldModel,
    OpenBookClass,
    PlaneFieldClass,
    SPHERE,
    act_pi3,
    euler_divisibility,
    obstruction_class,
    plumb_effect,
    pontryagin_class,
    relative_framing,
    stable_equivalence,
)
from .grothendieck import (
    GkClass,
    ParityObstructionError,
    decompose_knot_class,
    decompose_link_class,
    gk_class,
)
from .search import (
    SearchConfig,
    StabilizationCertificate,
    certificate_from_json,
    certificate_to_json,
    common_stabilization,
    verify_certificate,
)
from .expr import ParseError, elaborate, parse_expr, render_expr

__version__ = "0.1.0"
