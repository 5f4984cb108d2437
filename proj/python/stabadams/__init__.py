"""Explicit Adams-type multistep methods with extended stability intervals.

Thin wrapper around the C++ extension: method synthesis (closed-form
first-order family, damping, constrained optimization for higher orders),
stability-region analysis, and fixed-step integration of the bundled test
problems.
"""

try:
    from ._stabadams import *  # noqa: F401,F403
except ImportError:
    # Uninstalled build tree: the extension sits next to the package dir.
    from _stabadams import *  # noqa: F401,F403
