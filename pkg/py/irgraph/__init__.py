"""Irredundance, IR-graphs and structural checks on small graph censuses.
"""
from __future__ import absolute_import, division, print_function
from ._version import __version__
