"""Exact triangle/rhombus pairs with a common area and a common perimeter.

Thin wrapper over the _hrpairs extension module. Rational values cross the
boundary as exact "num/den" strings; nothing is ever rounded.
"""

try:
    from ._hrpairs import *  # noqa: F401,F403  (installed layout)
    from ._hrpairs import __version__  # noqa: F401
except ImportError:  # in-tree build: extension sits directly on sys.path
    from _hrpairs import *  # noqa: F401,F403
    from _hrpairs import __version__  # noqa: F401
