"""Adaptive friction pulley toolkit.

Thin wrapper over the compiled core: capstan tendon-pulley friction, the
dual-material switch model, synthetic rig simulation, friction-curve
extraction, and switch-parameter fitting.
"""

from ._core import *  # noqa: F401,F403
from ._core import __doc__ as _core_doc

__doc__ = _core_doc if _core_doc else __doc__
__version__ = "0.1.0"
