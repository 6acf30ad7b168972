"""Doubling, splitting, and exact counting of Eulerian cycles in T-nets.

Thin python face over the compiled core: nets travel in the same text
format the ``tnet`` command-line tool reads, cycles as lists of edge ids,
sequences as '0'/'1' strings, and counts as exact python integers.
"""

try:
    from ._core import *  # noqa: F401,F403  (installed package layout)
except ImportError:  # pragma: no cover - build-tree layout used by ctest
    from _core import *  # type: ignore  # noqa: F401,F403

__version__ = "1.0.0"
