"""Backend selection for the hot-loop kernels.

The compiled extension is preferred when it was built; otherwise the numpy
fallback takes over transparently.  Set CIRCROOTS_BACKEND=pure (or =compiled)
to force a choice, e.g. for benchmarking or debugging.
"""

from __future__ import annotations

import os

from . import _kernels_pure

_choice = os.environ.get("CIRCROOTS_BACKEND", "auto").strip().lower() or "auto"

if _choice == "pure":
    _impl = _kernels_pure
    BACKEND = "pure"
elif _choice in ("auto", "compiled"):
    try:
        from . import _kernels_cy as _impl  # type: ignore[no-redef]

        BACKEND = "compiled"
    except ImportError:
        if _choice == "compiled":
            raise ImportError(
                "CIRCROOTS_BACKEND=compiled but the extension is not built; "
                "reinstall with a C compiler or drop the override"
            )
        _impl = _kernels_pure
        BACKEND = "pure"
else:
    raise ImportError(f"unknown CIRCROOTS_BACKEND value: {_choice!r} (use auto, compiled, or pure)")

dft = _impl.dft
gf_rank = _impl.gf_rank
min_weight = _impl.min_weight


def backends() -> list[tuple[str, object]]:
    """(name, module) pairs for every importable backend, pure first."""
    out: list[tuple[str, object]] = [("pure", _kernels_pure)]
    try:
        from . import _kernels_cy

        out.append(("compiled", _kernels_cy))
    except ImportError:
        pass
    return out
