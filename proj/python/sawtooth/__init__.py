"""Exact piecewise-affine compilation of 1-D ReLU networks.

Rationals cross the boundary as fractions.Fraction; int and "p/q" strings
are accepted as inputs too.
"""

from ._core import (
    PwlFunction,
    ap_image_check,
    classification_error,
    compile_network,
    mirror_closed_form,
    mirror_closed_form_pwl,
    mirror_map,
    mirror_network,
    n_ap,
    network_lower_bound,
    pwl_add,
    pwl_compose,
    pwl_scale_shift,
    run_suite,
    sawtooth_lower_bound,
    suite_names,
    threshold_regions,
)

__all__ = [
    "PwlFunction",
    "ap_image_check",
    "classification_error",
    "compile_network",
    "mirror_closed_form",
    "mirror_closed_form_pwl",
    "mirror_map",
    "mirror_network",
    "n_ap",
    "network_lower_bound",
    "pwl_add",
    "pwl_compose",
    "pwl_scale_shift",
    "run_suite",
    "sawtooth_lower_bound",
    "suite_names",
    "threshold_regions",
]
