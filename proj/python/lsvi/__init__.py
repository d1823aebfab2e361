"""Momentum-constrained variational integrators for dissipative systems.

The compiled core exposes the integrators (``integrate``, ``variational_step``,
``method_i``, ``method_ii``), the reference methods, the bundled test problems,
and the benchmark harness (``execute``, ``sweep``, CSV emitters).
"""

from ._lsvi import *  # noqa: F401,F403
from ._lsvi import __version__  # noqa: F401
