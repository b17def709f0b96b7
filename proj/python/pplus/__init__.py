"""Complex-mass representations of the causal Poincare semigroup.

Thin wrapper around the C++ core; see the project README for the physics
and the experiment CLI.
"""

from ._pplus import *  # noqa: F401,F403
from ._pplus import __version__  # noqa: F401
