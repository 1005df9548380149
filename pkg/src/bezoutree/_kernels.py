"""Select the scan kernel: the compiled extension when built, else pure Python."""
from __future__ import annotations

from types import ModuleType

from . import _pykernels

try:
    from . import _ckernels
except ImportError:  # extension not built
    _ckernels = None

INT64_LIMIT = 2**62


def available() -> list[str]:
    return ["cython", "python"] if _ckernels is not None else ["python"]


def default_backend() -> str:
    return "cython" if _ckernels is not None else "python"


def get(name: str | None = None) -> ModuleType:
    name = name or default_backend()
    if name == "python":
        return _pykernels
    if name == "cython":
        if _ckernels is None:
            raise RuntimeError("compiled kernels are not built; reinstall to compile _ckernels")
        return _ckernels
    raise ValueError(f"unknown kernel backend {name!r}")


def fits_int64(entries, bound: int) -> bool:
    """True when a scan of ``entries`` over ``|m|, |n| <= bound`` stays inside int64."""
    biggest = max(abs(x) for x in entries)
    # transformed pair, both Bezout sides and their products all stay below this
    return 4 * (biggest + 1) * (biggest + 1) * (bound + 1) < INT64_LIMIT
