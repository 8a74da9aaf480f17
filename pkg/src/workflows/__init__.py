# Affine Orbit Toolkit Package
"""
Workflows shared by the command line and the dashboard.
"""

from src.workflows.euler_workflow import EulerWorkflow
from src.workflows.oracle_workflow import OracleWorkflow, build_context
from src.workflows.permutation_workflow import PermutationWorkflow, parse_word

__all__ = ["EulerWorkflow", "OracleWorkflow", "PermutationWorkflow", "build_context", "parse_word"]
