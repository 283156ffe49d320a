"""Cubic prime counts, cubic residues, D_f and Dirichlet/Epstein partial sums."""

from ._core import *  # noqa: F401,F403
from ._core import __version__  # noqa: F401
