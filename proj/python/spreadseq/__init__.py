"""Spreading sequence sets from quadratic functions over F_p.

Thin re-export of the compiled extension; see the project README for the
construction and analysis entry points.
"""

try:  # packaged builds place the extension inside this package
    from ._spreadseq import *  # noqa: F401,F403
except ImportError:  # in-tree builds put it on sys.path directly
    from _spreadseq import *  # noqa: F401,F403
