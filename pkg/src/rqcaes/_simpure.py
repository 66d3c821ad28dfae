"""Pure-Python simulation backend.

Single basis states are packed into one Python int (bit i = wire i);
batch simulation is bit-sliced across states in a (wires, words) uint64
array.  The compiled extension in ``_simcore`` implements the same two
entry points; ``sim`` picks whichever is importable.
"""

from __future__ import annotations

import numpy as np

BACKEND_NAME = "pure"


def run_single(gates: np.ndarray, state: int) -> int:
    """Apply gates (int32 array of [kind, c1, c2, target]) to a packed state."""
    s = state
    for kind, a, b, t in gates:
        if kind == 2:
            if (s >> int(a)) & (s >> int(b)) & 1:
                s ^= 1 << int(t)
        elif kind == 1:
            if (s >> int(a)) & 1:
                s ^= 1 << int(t)
        else:
            s ^= 1 << int(t)
    return s


def run_batch(gates: np.ndarray, words: np.ndarray) -> None:
    """Bit-sliced batch run, in place on a (wires, nwords) uint64 array."""
    full = np.uint64(0xFFFFFFFFFFFFFFFF)
    for kind, a, b, t in gates:
        if kind == 2:
            words[t] ^= words[a] & words[b]
        elif kind == 1:
            words[t] ^= words[a]
        else:
            words[t] ^= full
