"""Exact invariants of polyomino coordinate rings."""

try:
    from polyalg._polyalg import *  # noqa: F401,F403  (installed layout)
except ImportError:
    from _polyalg import *  # noqa: F401,F403  (in-tree build)

__all__ = [
    "Polyomino",
    "classify",
    "rook_polynomial",
    "rook_number",
    "invariants",
    "hilbert_series",
    "generate",
    "PolyalgError",
]
