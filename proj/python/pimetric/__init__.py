"""Symmetries and automorphisms of F_q^n under the pi-metric.

Thin wrapper over the compiled ``_core`` extension. Group orders come back as
Python ints, so they stay exact however large they get.
"""

from ._core import *  # noqa: F401,F403
from ._core import PimetricError

__version__ = "0.1.0"
