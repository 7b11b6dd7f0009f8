"""Canonic forms and minimal decompositions of linear quaternion functions."""

from ._core import (
    CanonicFormLeft,
    CanonicFormRight,
    GeneralLinearFunction,
    MeisterForm,
    MinimalDecomposition,
    MixedForm,
    NoConvergence,
    PureBilateralForm,
    PureQuaternion,
    Quaternion,
    SingularFunction,
    action_matrix,
    build_meister,
    canonic_left,
    canonic_right,
    evaluate,
    function_matrix,
    functions_equal,
    minimal_decomposition,
    mixed_form,
    numeric_rank,
    pure_bilateral_form,
    random_function,
    solve,
    svd,
    term_matrix,
)

__all__ = [
    "CanonicFormLeft",
    "CanonicFormRight",
    "GeneralLinearFunction",
    "MeisterForm",
    "MinimalDecomposition",
    "MixedForm",
    "NoConvergence",
    "PureBilateralForm",
    "PureQuaternion",
    "Quaternion",
    "SingularFunction",
    "action_matrix",
    "build_meister",
    "canonic_left",
    "canonic_right",
    "evaluate",
    "function_matrix",
    "functions_equal",
    "minimal_decomposition",
    "mixed_form",
    "numeric_rank",
    "pure_bilateral_form",
    "random_function",
    "solve",
    "svd",
    "term_matrix",
]
