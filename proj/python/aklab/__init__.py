"""Exact arithmetic for cross t-intersecting families.

All measure and ratio computations return fractions.Fraction; inputs that
would lose exactness (floats) are rejected at the boundary.
"""

from ._aklab import *  # noqa: F401,F403
from ._aklab import __version__  # noqa: F401
