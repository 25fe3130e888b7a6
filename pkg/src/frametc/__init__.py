"""Exact cup-length engine and topological-complexity bound rules for frame bundles."""

from .algebra import (
    Algebra,
    CapacityError,
    DEFAULT_CAPACITY,
    DomainMismatchError,
    Element,
    GeneratorSpec,
    InvalidPresentationError,
    MonomialAlgebra,
    ProductAlgebra,
    TableAlgebra,
    ring_from_json,
    ring_to_json,
    tensor,
    tensor_square,
)
from .bounds import (
    BoundEntry,
    BoundReport,
    cat_so,
    cat_so_lower,
    compute_bounds,
    korbas_cl,
    zcl_so_closed_form,
)
from .catalog import CatalogError, catalog_entries, catalog_ring, parse_catalog_id
from .cuplength import (
    CupLengthResult,
    ZeroDivisorBasis,
    bar,
    cup_length,
    zcl_basic,
    zcl_full,
    zero_divisor_generators,
)
from .examples import evaluate_examples, example_rows, torus_descriptor
from .fields import F2, Field, FieldError, QQ, field_of, parse_field
from .manifold import DescriptorError, ManifoldDescriptor, load_descriptor

__all__ = [
    "Algebra",
    "BoundEntry",
    "BoundReport",
    "CapacityError",
    "CatalogError",
    "CupLengthResult",
    "DEFAULT_CAPACITY",
    "DescriptorError",
    "DomainMismatchError",
    "Element",
    "F2",
    "Field",
    "FieldError",
    "GeneratorSpec",
    "InvalidPresentationError",
    "ManifoldDescriptor",
    "MonomialAlgebra",
    "ProductAlgebra",
    "QQ",
    "TableAlgebra",
    "ZeroDivisorBasis",
    "bar",
    "cat_so",
    "cat_so_lower",
    "catalog_entries",
    "catalog_ring",
    "compute_bounds",
    "cup_length",
    "evaluate_examples",
    "example_rows",
    "field_of",
    "korbas_cl",
    "load_descriptor",
    "parse_catalog_id",
    "parse_field",
    "ring_from_json",
    "ring_to_json",
    "tensor",
    "tensor_square",
    "torus_descriptor",
    "zcl_basic",
    "zcl_full",
    "zcl_so_closed_form",
    "zero_divisor_generators",
]

__version__ = "0.1.0"
