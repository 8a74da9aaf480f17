# Affine Orbit Toolkit Package
"""
Environment-driven defaults for the command line and the dashboard.
"""
