"""Spin transport along radial infall into a Schwarzschild black hole.

Thin re-export of the compiled core: chart maps, tetrads and connection
one-forms, the worldline integrator, accumulated spinor maps, channel
diagnostics, and the run drivers.
"""

from spinfall._core import *  # noqa: F401,F403
