"""Corpus construction and translation-direction identification toolkit.

Thin re-export of the compiled extension; see the C++ headers for the
authoritative contracts.
"""

from translationese._core import *  # noqa: F401,F403
from translationese._core import __version__  # noqa: F401
