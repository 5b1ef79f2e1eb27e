"""Bilevel independent set and interval selection solvers."""

from ._core import *  # noqa: F401,F403
from ._core import BilevelError, __doc__  # noqa: F401
