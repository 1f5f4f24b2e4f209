"""Stability analysis of uniform rotations of a torque-free gyrostat."""

try:
    from ._gyrostab import *  # noqa: F401,F403
    from ._gyrostab import __doc__  # noqa: F401
except ImportError:
    # Build-tree layout: the extension sits next to the package on sys.path.
    from _gyrostab import *  # noqa: F401,F403
