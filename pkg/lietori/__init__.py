from .axioms import verify_axioms
from .classify import (
    ClosedFormInput, Outcome, Verdict, closed_form_tuple, decide_isomorphic,
    disjointness_scan, exceptional_lookup, f_injectivity_scan, f_value,
)
from .exactnum import Cyclotomic, root_of_unity
from .exceptions import (
    ConstructionError, CosetBudgetExceeded, CyclotomicError,
    DegreeNotInLatticeError, DeltaCollisionError, InvalidModelFile,
    InvariantError, LatticeError, LieToriError, NonHermitianDeltaError,
    RankExclusionError, RootSystemError, TooFewExtraIndicesError, TorusError,
)
from .invariants import (
    InvariantTuple, centroid_oracle, centroid_support, invariant_tuple,
    rank_of_rootspace, redundancy_check,
)
from .lietorus import ConstructionParams, LieTorusModel, construct, gl_control
from .reproduce import check_model, run_tables
from .rootsys import RootSet, RootSystemInfo, RootTypeLabel, classify
from .torus import TorusElement, TorusSpec
from .zlattice import IntMatrix, Quotient, Sublattice, smith_normal_form
from ._version import __version__

# Workaround to avoid F401 "imported but unused" linter errors.
(
    ClosedFormInput,
    ConstructionError,
    ConstructionParams,
    CosetBudgetExceeded,
    Cyclotomic,
    CyclotomicError,
    DegreeNotInLatticeError,
    DeltaCollisionError,
    IntMatrix,
    InvalidModelFile,
    InvariantError,
    InvariantTuple,
    LatticeError,
    LieToriError,
    LieTorusModel,
    NonHermitianDeltaError,
    Outcome,
    Quotient,
    RankExclusionError,
    RootSet,
    RootSystemError,
    RootSystemInfo,
    RootTypeLabel,
    Sublattice,
    TooFewExtraIndicesError,
    TorusElement,
    TorusError,
    Verdict,
    centroid_oracle,
    centroid_support,
    check_model,
    classify,
    closed_form_tuple,
    construct,
    decide_isomorphic,
    disjointness_scan,
    exceptional_lookup,
    f_injectivity_scan,
    f_value,
    gl_control,
    invariant_tuple,
    rank_of_rootspace,
    redundancy_check,
    root_of_unity,
    run_tables,
    smith_normal_form,
    verify_axioms,
    __version__,
)
