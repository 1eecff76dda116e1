"""
Entry point for PyChowCalc command line application

Created on 2 Sep 2026

@author: semuadmin
"""

import sys

from pychowcalc.app import main

if __name__ == "__main__":
    sys.exit(main())
