"""Anharmonic-oscillator energies by double-exponential Sinc collocation."""

from ._descm import (
    AnalyticCase,
    ConvergenceRecord,
    ConvergenceTrace,
    EvenPolynomialPotential,
    MeshKind,
    MeshStrategy,
    NumericalError,
    SpectrumResult,
    analytic_catalog,
    assemble_K,
    chebyshev_well,
    converge,
    eigen_symmetric,
    lambert_w0,
    optimal_h,
    parse_potential,
    reconstruct_wavefunction,
    solve,
    trace_minimized_h,
    trace_of_K,
    transformed_potential,
)

__all__ = [
    "AnalyticCase",
    "ConvergenceRecord",
    "ConvergenceTrace",
    "EvenPolynomialPotential",
    "MeshKind",
    "MeshStrategy",
    "NumericalError",
    "SpectrumResult",
    "analytic_catalog",
    "assemble_K",
    "chebyshev_well",
    "converge",
    "eigen_symmetric",
    "lambert_w0",
    "optimal_h",
    "parse_potential",
    "reconstruct_wavefunction",
    "solve",
    "trace_minimized_h",
    "trace_of_K",
    "transformed_potential",
]
