"""k-dispersed labellings of graphs: constructions, exact search and bounds."""
from .bounds import BoundsReport, bounds_report
from .errors import (
    BudgetExceeded,
    ConnectivityError,
    DispersalError,
    InputError,
    InvariantViolation,
    PreconditionError,
)
from .graph import DistanceMatrix, EccentricityReport, Graph, distance_matrix, eccentricity_report
from .labelling import DispersionResult, Labelling, dispersion
from .solver import SolveResult, brute_force_dl, exact_dl, exact_dlo

__version__ = "0.1.0"
