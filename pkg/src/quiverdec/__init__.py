"""Quiver representations over finite fields.

Decide absolute indecomposability in polynomial time, classify
dimension vectors against the root system of the underlying graph, and
count isomorphism classes by brute force with exact polynomial
interpolation.
"""

from .field import (
    DivisionByZero,
    FieldError,
    FieldSpec,
    MixedFields,
    NoDefaultModulus,
    NonPrimeP,
    ReducibleModulus,
    ff_arith,
    ff_enumerate,
    ff_make,
    parse_field_flag,
    parse_field_header,
)
from .linalg import (
    LengthMismatch,
    LinalgError,
    NotSquare,
    PolyGF,
    char_poly,
    format_matrix,
    is_nilpotent,
    kernel_basis,
    rref,
    span_basis,
)
from .rep import (
    EndAlgebra,
    FieldMismatch,
    FileFormatError,
    IndecVerdict,
    NotSinkOrSource,
    Quiver,
    QuiverMismatch,
    Representation,
    SelfLoopAtV,
    ShapeMismatch,
    TooLarge,
    ZeroDimension,
    all_elements_qn_oracle,
    decide_abs_indec,
    direct_sum,
    end_basis,
    find_abs_indec,
    format_quiver,
    format_representation,
    lie_nilpotency,
    m_alpha,
    parse_quiver,
    parse_representation,
    qn_test,
    random_rep,
    reflect_functor,
)
from .roots import (
    IMAGINARY,
    NOT_POSITIVE_ROOT,
    REAL,
    CartanData,
    NegativeCoordinate,
    RootClassification,
    RootsError,
    SelfLoopPresent,
    UnknownVertex,
    VertexMismatch,
    ZeroVector,
    bilinear,
    bilinear2,
    cartan,
    classify,
    norm,
    real_roots_up_to,
    reflect_simple,
    schur_probe,
)
from .census import (
    CensusError,
    InsufficientPoints,
    IntPolynomial,
    KacCountTable,
    NonIntegerCoefficients,
    NonIntegerResult,
    count_classes_canonical,
    count_classes_stabilizer,
    enumerate_reps,
    gl_order,
    interpolate_kac,
    orientation_sweep,
)

__all__ = [name for name in dir() if not name.startswith("_")]
