"""Nearness approximation spaces and the algebraic structures that live on them."""
from .descriptive import (
    descriptive_intersection,
    family_upper_approx,
    is_descriptively_near,
    nearness_collection,
    set_description,
)
from .errors import (
    ClosureError,
    InputError,
    NearnessError,
    PreconditionError,
    ResourceError,
    StructuralAnomaly,
    StructuralError,
)
from .morphisms import (
    MappingTable,
    check_hom_properties,
    check_image_subring,
    check_kernel_ideal,
    check_nearness_hom,
    check_restricted_hom,
    first_iso_check,
    kernel,
    natural_hom,
)
from .nas import ApproximationResult, FeatureSystem, Partition, overlap
from .quotient import (
    CosetFamily,
    CosetSpace,
    WeakCoset,
    build_quotient_ring,
    check_quotient_hypothesis,
    coset_family,
    coset_product,
    coset_sum,
    weak_coset,
)
from .structures import (
    FAIL,
    NA,
    PASS,
    AxiomReport,
    BinaryOpTable,
    Counterexample,
    StructureCandidate,
    check_element_props,
    check_ideal,
    check_intersection_theorem,
    check_near_group,
    check_near_semigroup,
    check_nearness_ring,
    check_subnearness_ring,
    classify_units,
)

__version__ = "0.1.0"
