"""
PyChowCalc version

Created on 2 Sep 2026

@author: semuadmin
"""

__version__ = "0.1.0"
