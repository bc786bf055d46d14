"""Exact Hecke-algebra relations and Siegel eigenform distinguishers."""

from siegelhecke._core import *  # noqa: F401,F403
from siegelhecke._core import __doc__  # noqa: F401

__version__ = "0.1.0"
