# Affine Orbit Toolkit Package
"""
Saving and loading reports and window files.
"""
