"""Degree-preserving hypergraph randomization toolkit."""

try:
    from ._hcb import *  # noqa: F401,F403  (installed layout)
    from . import _hcb as _core
except ImportError:  # build-tree layout: extension sits on sys.path
    from _hcb import *  # noqa: F401,F403
    import _hcb as _core

__all__ = [name for name in dir(_core) if not name.startswith("_")]
__version__ = "0.1.0"
