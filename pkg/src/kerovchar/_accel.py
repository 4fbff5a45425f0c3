"""Backend selection for the enumeration kernels.

``KEROV_BACKEND=numpy`` forces the pure-numpy path; anything else (or unset)
uses numba when it can be imported.
"""

import functools
import os

try:
    import numba as nb
except ImportError:  # pragma: no cover - numba is a declared dependency
    nb = None

HAS_NUMBA = nb is not None

BACKENDS = ("numba", "numpy")


def default_backend() -> str:
    requested = os.environ.get("KEROV_BACKEND", "numba").strip().lower()
    if requested not in BACKENDS:
        raise ValueError(f"KEROV_BACKEND must be one of {BACKENDS}, got {requested!r}")
    if requested == "numba" and not HAS_NUMBA:
        return "numpy"
    return requested


def resolve_backend(backend: str | None) -> str:
    if backend is None:
        return default_backend()
    if backend not in BACKENDS:
        raise ValueError(f"unknown backend {backend!r}")
    if backend == "numba" and not HAS_NUMBA:
        raise RuntimeError("numba backend requested but numba is not importable")
    return backend


if HAS_NUMBA:
    njit = functools.partial(nb.njit, cache=True, nogil=True)
else:  # pragma: no cover
    def njit(*args, **kwargs):
        if args and callable(args[0]):
            return args[0]
        return lambda f: f
