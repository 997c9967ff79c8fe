"""External difference family toolkit: search, classification, constructions."""

try:
    from ._sedf import *  # noqa: F401,F403  (installed wheel layout)
    from ._sedf import __version__  # noqa: F401
except ImportError:  # build-tree layout: extension sits next to the package
    from _sedf import *  # noqa: F401,F403
    from _sedf import __version__  # noqa: F401
