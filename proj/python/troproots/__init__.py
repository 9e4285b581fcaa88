"""Moduli of roots of divisors on tropical curves."""

from ._troproots import *  # noqa: F401,F403
from ._troproots import __doc__  # noqa: F401
