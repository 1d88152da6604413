# Path: src/operators/__init__.py
from .kernels import KernelEval, kernel_factors, resolvent_kernel, resolvent_kernel_dx
from .operator_spec import Family, Interval, OperatorSpec, endpoint_indices
from .spectrum import SpectrumDescriptor, eigenfunction, spectrum

__all__ = [
    "KernelEval",
    "kernel_factors",
    "resolvent_kernel",
    "resolvent_kernel_dx",
    "Family",
    "Interval",
    "OperatorSpec",
    "endpoint_indices",
    "SpectrumDescriptor",
    "eigenfunction",
    "spectrum",
]
