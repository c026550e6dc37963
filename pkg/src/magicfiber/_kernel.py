"""Selects the compiled evaluation kernel, falling back to pure Python.

Both implementations are bit-identical, so the choice never affects results,
only speed.  ``KERNEL_BACKEND`` records which one is active.
"""

try:
    from ._kernel_cy import eval_enclosure, pow_enclosure

    KERNEL_BACKEND = "cython"
except ImportError:  # extension not built
    from ._kernel_py import eval_enclosure, pow_enclosure

    KERNEL_BACKEND = "python"

__all__ = ["eval_enclosure", "pow_enclosure", "KERNEL_BACKEND"]
