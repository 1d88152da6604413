# Path: src/special/__init__.py
from .complexmath import Polar, gamma, pochhammer, principal_pow, reciprocal_gamma
from .hypergeom import EvalPath, SeriesPolicy, SpecialValue
from .registry import evaluate_named, function_names
from .whittaker import WhittakerParams

__all__ = [
    "Polar",
    "gamma",
    "pochhammer",
    "principal_pow",
    "reciprocal_gamma",
    "EvalPath",
    "SeriesPolicy",
    "SpecialValue",
    "evaluate_named",
    "function_names",
    "WhittakerParams",
]
