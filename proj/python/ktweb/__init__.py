"""SE(2) classification of planar Killing two-tensors and orthogonal separation.

Thin wrapper over the C++ module. Tensor parameters are sequences of six
values; ints and "p/q" strings stay on the exact rational backend, floats
route to the real one. Potentials are iterables of (i, j, coeff) monomials.
"""

import json as _json

try:
    from ._ktweb import (
        DegenerateInput,
        DegreeOverflow,
        Incompatible,
        ParseError,
        compatible,
        group_apply_point,
        induced_action,
        kt_components,
        kt_eigenvalues,
    )
    from . import _ktweb as _impl
except ImportError:  # build-tree layout: module next to the package
    from _ktweb import (  # noqa: F401
        DegenerateInput,
        DegreeOverflow,
        Incompatible,
        ParseError,
        compatible,
        group_apply_point,
        induced_action,
        kt_components,
        kt_eigenvalues,
    )
    import _ktweb as _impl

__all__ = [
    "DegenerateInput",
    "DegreeOverflow",
    "Incompatible",
    "ParseError",
    "canonical",
    "classify",
    "compatible",
    "equivalent",
    "frame",
    "group_apply_point",
    "induced_action",
    "kt_components",
    "kt_eigenvalues",
    "render_csv",
    "render_svg",
    "separate",
]


def classify(alpha):
    """Stratum, web type, stratifying invariants and leaf label."""
    return _json.loads(_impl.classify_json(alpha))


def equivalent(alpha, alpha2, tol=1e-9):
    """SE(2)-equivalence verdict plus both leaf labels."""
    return _json.loads(_impl.equivalent_json(alpha, alpha2, tol))


def frame(alpha):
    """Chart, moving-frame group element and canonical parameters."""
    return _json.loads(_impl.frame_json(alpha))


def canonical(alpha):
    """Canonical parameters on the stratum's cross-section."""
    return _json.loads(_impl.canonical_json(alpha))


def separate(alpha, potential):
    """Full pipeline: compatibility, frame, transformed potential, first integral."""
    return _json.loads(_impl.separate_json(alpha, potential))


def render_svg(alpha, path, region=(-2.0, -2.0, 2.0, 2.0), curves=8, samples=512):
    return _json.loads(_impl.render_svg_file(alpha, tuple(region), curves, samples, path))


def render_csv(alpha, path, region=(-2.0, -2.0, 2.0, 2.0), curves=8, samples=512):
    return _json.loads(_impl.render_csv_file(alpha, tuple(region), curves, samples, path))
