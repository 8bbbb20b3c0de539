"""Weighted Korobov space approximation (C++ core)."""

from ._korobov import *  # noqa: F401,F403
from ._korobov import __doc__  # noqa: F401

__all__ = [name for name in dir() if not name.startswith("_")]
