# Affine Orbit Toolkit Package
"""
Affine Orbit Toolkit - exact computations with affine Weyl groups, Kostant's
expansion of powers of the Euler product and periodic permutations of the integers.
"""

__version__ = "1.0.0"
__author__ = "Affine Orbit Toolkit Team"
