"""Complete non-ambiguous trees: validation, the sign-reversing involution
``phi``, exhaustive enumeration and the determinant parity theorem."""

from .core import *  # noqa: F401,F403
from .transform import *  # noqa: F401,F403
from .enumeration import *  # noqa: F401,F403

__version__ = "0.1.0"
