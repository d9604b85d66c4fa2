"""Hot numeric kernels with a compiled/pure-Python split.

The Cython extension ``_speed`` is preferred when it imported cleanly; the
pure-Python module ``_pure`` implements the identical contract and is the
fallback (and the reference the extension is tested against).  Setting the
environment variable ``HURMOD_PURE=1`` forces the fallback, which the test
suite and the kernel benchmark use to compare both paths.
"""

from __future__ import annotations

import os

from . import _pure

if os.environ.get("HURMOD_PURE") == "1":
    _impl = _pure
    IMPLEMENTATION = "pure"
else:
    try:
        from . import _speed as _impl  # type: ignore[no-redef]

        IMPLEMENTATION = "cython"
    except ImportError:
        _impl = _pure
        IMPLEMENTATION = "pure"

hurwitz_sixfold = _impl.hurwitz_sixfold
hurwitz_sixfold_primitive = _impl.hurwitz_sixfold_primitive
lattice_counts = _impl.lattice_counts

__all__ = [
    "IMPLEMENTATION",
    "hurwitz_sixfold",
    "hurwitz_sixfold_primitive",
    "lattice_counts",
]
