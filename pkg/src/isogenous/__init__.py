"""Regular surfaces isogenous to a product with abelian Galois group."""

from .abelian import (
    AbelianGroup,
    Character,
    GroupElement,
    Subgroup,
    characters,
    combine,
    element_order,
    intersect,
    kernel,
    subgroup_generated,
)
from .lefschetz import check_numerically_trivial_necessary, fixed_locus, lefschetz_number
from .spherical import (
    CoverData,
    SphericalSystem,
    eigenspace_dim,
    eigenspace_profile,
    fixed_count,
    genus,
    is_disjoint,
    sigma_set,
    validate_system,
)
from .search import (
    ClassificationResult,
    SearchConstraints,
    abelian_groups,
    automorphisms,
    classify_pgq0,
    enumerate_systems,
    find_disjoint_pairs,
)
from .surface import (
    ProductSurface,
    build_surface,
    family,
    h2_table,
    invariants,
    numerically_trivial_subgroup,
)

__version__ = "0.1.0"
