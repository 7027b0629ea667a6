"""Fejer kernel density and distribution function estimation for circular data."""

from ._core import (
    CircularModel,
    DegenerateSample,
    ErrorModel,
    InfeasibleDeconvolution,
    ParseError,
    berkson,
    cdf,
    classical,
    criterion_cn,
    density,
    fejer_kernel,
    integrated_kernel,
    kernel_moments,
    lambert_w0,
    m_opt_cdf,
    m_opt_classical_wl,
    m_opt_density,
    rainfall,
    reproduce,
    select_origin,
    theta1_nonparametric,
    theta1_parametric,
)

__version__ = "0.1.0"

__all__ = [
    "CircularModel",
    "DegenerateSample",
    "ErrorModel",
    "InfeasibleDeconvolution",
    "ParseError",
    "berkson",
    "cdf",
    "classical",
    "criterion_cn",
    "density",
    "fejer_kernel",
    "integrated_kernel",
    "kernel_moments",
    "lambert_w0",
    "m_opt_cdf",
    "m_opt_classical_wl",
    "m_opt_density",
    "rainfall",
    "reproduce",
    "select_origin",
    "theta1_nonparametric",
    "theta1_parametric",
]
