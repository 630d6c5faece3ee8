"""Taylor polynomials with guaranteed two-sided remainder enclosures."""

from ._taylorbound import *  # noqa: F401,F403
from ._taylorbound import __doc__  # noqa: F401

__version__ = "0.1.0"
