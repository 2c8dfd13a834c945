"""
Perfect quaternion sequences and Williamson sequences.
"""

from .version import __version__  # noqa: F401
