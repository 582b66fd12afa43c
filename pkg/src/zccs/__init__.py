"""Zero-correlation-zone complementary code sets from generalized Boolean functions."""

__version__ = "0.1.0"

from .construct import (
    CodeIndex,
    ConstructionSpec,
    ModulusError,
    SpecError,
    build_code,
    build_zccs,
    closed_form_value,
    closed_form_values,
    direct_ccc,
    lemma3_ccc,
    min_shift,
    spec_to_gbf,
    tau_structure,
    theorem1_value,
    theorem1_values,
)
from .correlation import CodeSet, ZccsParams, bound_check, code_ccf, is_ccc, is_zccs, zcz_width
from .exactring import CycVal
from .enumeration import EnumParams, count_distinct, enumerate_specs, sample_spec
from .gbf import GBF, restrict, reverse, sequence, truncate
from .quadgraph import ClassificationError, GraphPartition, QuadGraph, classify

__all__ = [
    "bound_check",
    "build_code",
    "build_zccs",
    "closed_form_value",
    "closed_form_values",
    "ClassificationError",
    "classify",
    "code_ccf",
    "CodeIndex",
    "CodeSet",
    "ConstructionSpec",
    "count_distinct",
    "CycVal",
    "direct_ccc",
    "enumerate_specs",
    "EnumParams",
    "GBF",
    "GraphPartition",
    "is_ccc",
    "is_zccs",
    "lemma3_ccc",
    "min_shift",
    "ModulusError",
    "QuadGraph",
    "restrict",
    "reverse",
    "sample_spec",
    "sequence",
    "spec_to_gbf",
    "SpecError",
    "tau_structure",
    "theorem1_value",
    "theorem1_values",
    "truncate",
    "ZccsParams",
    "zcz_width",
]
