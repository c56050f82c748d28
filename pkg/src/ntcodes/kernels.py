"""Kernel backend selection.

The Cython extension ``_ckernels`` is used when it was built; otherwise the
numpy twin in ``_pykernels`` is loaded. Setting ``NTCODES_PURE=1`` forces the
fallback.
"""

import os

from ntcodes import _pykernels

if os.environ.get("NTCODES_PURE", "") not in ("", "0"):
    _impl = _pykernels
    BACKEND = "python"
else:
    try:
        from ntcodes import _ckernels as _impl
        BACKEND = "cython"
    except ImportError:
        _impl = _pykernels
        BACKEND = "python"

pair_histogram_packed = _impl.pair_histogram_packed
pair_histogram_digits = _impl.pair_histogram_digits
distance_profile_packed = _impl.distance_profile_packed
distance_profile_digits = _impl.distance_profile_digits
bfs_distances = _impl.bfs_distances
orbit_labels = _impl.orbit_labels

__all__ = [
    "BACKEND",
    "pair_histogram_packed",
    "pair_histogram_digits",
    "distance_profile_packed",
    "distance_profile_digits",
    "bfs_distances",
    "orbit_labels",
]
