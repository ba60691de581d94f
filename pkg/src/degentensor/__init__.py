"""Degeneracy, conciseness and tensor rank of tridimensional hypermatrices
over the rationals, through their associated determinantal schemes."""

__version__ = "0.1.0"

from .classify import AnalysisReport, classify, classify_222, classify_223, classify_22r
from .degeneracy import (DegeneracyVerdict, KernelTriple, certificate_from_point,
                         decide_degeneracy, hyperdet_222, schlafli_binary, verify_kernel_triple)
from .errors import DimensionError, FormatError, PreconditionError, ZeroTensorError
from .schemes import DetScheme, ProjPoint, diagnose_point, tensor_scheme
from .tensor_core import Axis, Tensor3, assoc_matrix, essential_format, reduce_to_essential

__all__ = [
    "AnalysisReport", "Axis", "DegeneracyVerdict", "DetScheme", "DimensionError",
    "FormatError", "KernelTriple", "PreconditionError", "ProjPoint", "Tensor3",
    "ZeroTensorError", "assoc_matrix", "certificate_from_point", "classify", "classify_222",
    "classify_223", "classify_22r", "decide_degeneracy", "diagnose_point", "essential_format",
    "hyperdet_222", "reduce_to_essential", "schlafli_binary", "tensor_scheme",
    "verify_kernel_triple",
]
