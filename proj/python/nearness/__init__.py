"""Nearness approximation spaces and algebraic structure verification."""

from ._nearness import *  # noqa: F401,F403
