# Affine Orbit Toolkit Package
"""
Streamlit components for the dashboard.
"""
