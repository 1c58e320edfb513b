"""L-embeddings and monotone L-embeddings of graphs."""

try:
    from ._core import *  # noqa: F401,F403
    from ._core import __doc__ as _core_doc
except ImportError:  # extension built out of tree (plain cmake build)
    from _core import *  # noqa: F401,F403
    from _core import __doc__ as _core_doc

__doc__ = _core_doc
__version__ = "0.1.0"
