"""Exact computations with crossed products of finite-dimensional Hopf algebras.

Algebras are given by structure constants over Q, F_p or F_p(X1..Xn); all
arithmetic is exact.  The main entry points are re-exported here.
"""

from .catalog import cyclic_group_algebra, line_nilpotent, line_semisimple, resolve, sweedler4, trivial_hopf
from .crossed import (
    CrossedProduct,
    CrossedSystem,
    build_crossed_product,
    check_crossed_system,
    cohomologous_transform,
    coinvariants,
    extract_from_splitting,
    hopf_structure_implies_axioms,
)
from .errors import HopfError
from .fields import GF, QQ, FieldSpec
from .hopf import HopfAlgebra, LinearMap, VerificationReport, check_map_properties, convolution, tensor_hopf, verify_hopf
from .morphisms import (
    MorphismQuadruple,
    endo_search_by_generators,
    hopf_maps_by_generators,
    psi_u_beta,
    quadruple_to_map,
    stabilization_check,
    triple_to_map,
)
from .structure import center, cocentral_maps, group_likes, primitives, skew_primitives, zp
from .sweedler import (
    H4CocycleParam,
    aut_group_A_a,
    build_A_a,
    classification_report,
    cocycle_from_param,
    decide_orbit,
    decide_seq_equiv,
    enumerate_h4_systems,
    iso_test_A_a,
)

__version__ = "0.1.0"
