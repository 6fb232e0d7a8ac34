"""Exact root systems, Weyl groups, rational cones, fans and momentum polytopes."""
from .cones import (
    Cone,
    apply_transform,
    cone_from_generators,
    cone_from_inequalities,
    dual_cone,
    faces,
    intersect,
    is_face_of,
    is_strongly_convex,
    union_of_chamber_translates,
)
from .fans import (
    Fan,
    dabrowski_fan,
    fan_from_maximal_cones,
    fan_isomorphic_signed_perm,
    fans_equal,
    product_p1_fan,
    validate,
)
from .flagcomb import (
    FlagDatum,
    euler_characteristic,
    flag_datum,
    gelfand_serganova_equal,
    momentum_image,
    nondegenerate_stratum_cells,
    plucker_weight,
)
from .polytope import Polytope, contains, convex_hull, polytopes_equal
from .rootsys import (
    RootSystem,
    build_root_system,
    fundamental_chamber,
    fundamental_weights,
    hermitian_simple_roots,
)
from .weyl import (
    ParabolicSubgroup,
    WeylElement,
    WeylGroup,
    act,
    generate_weyl_group,
    parabolic,
    reflection,
)

__version__ = "0.1.0"
