from longref.search.canonical import (
    CanonicalForm,
    canonical_form,
    canonical_labelling,
    certificate,
    is_isomorphic,
)
from longref.search.enumerate import (
    SearchBudget,
    SearchSpec,
    children,
    cut_vertices,
    enumerate_graphs,
    frontier,
    is_canonical_child,
)
from longref.search.oracle import brute_force_enumerate
from longref.search.search import (
    CrossValidateConfig,
    CrossValidationTarget,
    SearchConfig,
    SearchHit,
    cross_validate,
    find_long_refinement,
)
