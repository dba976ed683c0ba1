"""combicount
Exact enumerative combinatorics: binomials, maps, inclusion-exclusion and Stirling's formula.
"""

from combicount.core import CountingEngine

__author__ = """MIT Data To AI Lab"""
__email__ = 'dailabmit@gmail.com'
__version__ = '0.1.0-dev'

# this defines which modules will be imported by "from combicount import *"
__all__ = ['CountingEngine', 'asymptotics', 'binomials', 'config', 'constants', 'errors',
           'exactnum', 'expand', 'family', 'inclexcl', 'mapscount', 'oracle', 'utilities']
