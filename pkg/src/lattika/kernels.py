"""Backend selection for the table kernels.

The compiled extension is used when it was built; otherwise the NumPy
fallback is loaded. Set ``LATTIKA_KERNELS=python`` to force the fallback.
"""
import os

from lattika import _pykernels

if os.environ.get("LATTIKA_KERNELS", "").lower() == "python":
    _impl = _pykernels
    BACKEND = "python"
else:
    try:
        from lattika import _ckernels as _impl

        BACKEND = "cython"
    except ImportError:
        _impl = _pykernels
        BACKEND = "python"

transitive_closure = _impl.transitive_closure
meet_join_tables = _impl.meet_join_tables
cosmall_matrix = _impl.cosmall_matrix
modular_violation = _impl.modular_violation
meet_independent = _impl.meet_independent

__all__ = [
    "BACKEND",
    "transitive_closure",
    "meet_join_tables",
    "cosmall_matrix",
    "modular_violation",
    "meet_independent",
]
