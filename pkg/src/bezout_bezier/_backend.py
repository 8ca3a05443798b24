"""Kernel backend selection: compiled extension if built, else pure Python."""

try:
    from . import _kernels as kernels

    COMPILED = True
except ImportError:  # extension not built; fall back
    from . import _kernels_py as kernels

    COMPILED = False


def backend_name() -> str:
    return "compiled" if COMPILED else "python"
