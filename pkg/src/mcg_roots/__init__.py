"""Exact computations around roots and symmetries of mapping classes."""

from .sentinels import INFINITE, NOT_FOUND
from .sl2z import Sl2Matrix, mth_roots, torsion_class

__version__ = "0.1.0"
