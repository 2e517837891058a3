"""Exact root-system computations for twisted Coxeter elements and the
moduli of principal bundles over an elliptic curve.

The package is organized bottom-up: `exact` (rational linear algebra),
`cartan` (types, Cartan matrices, Kac labels, folding), `roots` (root
systems and the extended affine Weyl group), `engine` (the orbit/degree
pipeline), `corpus` (the tabulated regression cases and their verifier)
and `cli` (command-line front end).
"""

from .cartan import (
    CartanData,
    DiagramAutomorphism,
    DynkinType,
    FoldedDiagram,
    KacLabels,
    cartan_from_finite,
    cartan_matrix,
    fold,
    kac_labels,
    pi1_automorphisms,
)
from .engine import (
    BundleReport,
    CoxeterAnalysis,
    OrbitData,
    analyze,
    analyze_gluing,
    aut_plus_dimension,
    invariant_coweight,
    moduli_weights,
    orbit_decomposition,
    partition_roots,
    step2_certificates,
    twisted_coxeter,
)
from .errors import DomainError, StructuralError
from .roots import (
    ExtAffineElement,
    RootSet,
    WeylElement,
    act_on_coweight,
    act_on_root,
    affine_simple_action,
    char_poly,
    compose,
    ext_compose,
    ext_inverse,
    ext_power,
    generate_roots,
    order,
    pairing,
    sigma_representative,
)

__version__ = "0.1.0"
