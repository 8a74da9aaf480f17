# Affine Orbit Toolkit Package
"""
Exact arithmetic for affine Weyl groups: root data, alcove geometry, Kostant's
expansion of powers of the Euler product and permutation representations.
"""

__version__ = "1.0.0"
__author__ = "Affine Orbit Toolkit Team"
