"""Catenary and arc well-path design with soft-string hook-load analysis."""

__version__ = "0.1.0"

from .arc_design import ArcDesignInput, design_arc_well
from .catenary import CatenaryParams, solve_catenary_parameter
from .catenary_design import CatenaryDesignInput, compare_plans, design_catenary_well
from .loads import HookLoadBreakdown, HookLoadCase, hookload, percent_difference
from .numerics import Tolerance
from .sensitivity import SweepSpec, run_sweep
from .study import LoadInputs, hookload_case, hookload_report

__all__ = [
    "ArcDesignInput",
    "CatenaryDesignInput",
    "CatenaryParams",
    "HookLoadBreakdown",
    "HookLoadCase",
    "LoadInputs",
    "SweepSpec",
    "Tolerance",
    "compare_plans",
    "design_arc_well",
    "design_catenary_well",
    "hookload",
    "hookload_case",
    "hookload_report",
    "percent_difference",
    "run_sweep",
    "solve_catenary_parameter",
]
