"""Exactly solvable 1D quantum models, the first-order operators that
connect their eigenstates across levels and couplings, and a numerical
harness that certifies every identity involved, cross-validated by an
independent finite-difference eigensolver."""

from ._backend import BACKEND
from .models import ModelId, ParameterSet, eigenfunction, eigenvalue

__version__ = "0.1.0"

__all__ = ["BACKEND", "ModelId", "ParameterSet", "eigenfunction",
           "eigenvalue", "__version__"]
