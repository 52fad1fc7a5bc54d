"""Exact computations with twisted Yetter-Drinfeld modules and Nichols algebras.

The compiled core exposes descriptor-level functions: groups, cocycles,
modules and cochains travel as plain dicts/lists mirroring the JSON formats
of the command-line tool.
"""

try:
    from ._nichols import *  # noqa: F401,F403
    from ._nichols import __doc__ as _core_doc  # noqa: F401
except ImportError:  # build-tree layout: the module sits next to the package
    from _nichols import *  # noqa: F401,F403

__all__ = [
    "Phase",
    "Group",
    "enumerate_cocycles",
    "verify_cocycle",
    "is_abelian_cocycle",
    "eval_cocycle",
    "simple_module",
    "module_sum",
    "solve_twist",
    "twist_module",
    "change_base",
    "classify",
    "hilbert_series",
    "graded_dimension",
    "dynkin_dot",
    "BudgetError",
    "DescriptorError",
]
