"""Entangling perturbations and separability certification for bipartite
states at finite truncation."""

from ._core import *  # noqa: F401,F403
from ._core import __doc__, __version__  # noqa: F401
