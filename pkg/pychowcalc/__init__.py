"""
Created on 2 Sep 2026

@author: semuadmin
"""

from pychowcalc._version import __version__

version = __version__
