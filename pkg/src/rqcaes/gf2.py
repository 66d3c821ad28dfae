"""GF(2) linear algebra and in-place CNOT synthesis for linear/affine layers.

Matrices act on column vectors whose component i is wire i of the circuit.
Synthesis is plain Gauss-Jordan with deterministic pivoting (first usable
row in column order), emitting one CNOT per row operation.  This is
correct-by-construction, not count-optimal; builders that need a specific
published gate count carry their own transcribed gate lists and verify
them against these matrices.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .circuit import CNOT, Circuit, CircuitBuilder, CircuitError, Gate


@dataclass(frozen=True)
class BinaryMatrix:
    """Dense matrix over GF(2), stored row-major as uint8 0/1 entries."""

    bits: np.ndarray

    def __post_init__(self):
        arr = np.asarray(self.bits, dtype=np.uint8) & 1
        if arr.ndim != 2:
            raise CircuitError("BinaryMatrix needs a 2-D array")
        arr = np.ascontiguousarray(arr)
        arr.setflags(write=False)
        object.__setattr__(self, "bits", arr)

    @property
    def rows(self) -> int:
        return self.bits.shape[0]

    @property
    def cols(self) -> int:
        return self.bits.shape[1]

    @classmethod
    def identity(cls, n: int) -> "BinaryMatrix":
        return cls(np.eye(n, dtype=np.uint8))

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> "BinaryMatrix":
        return cls(np.array(rows, dtype=np.uint8))

    def __eq__(self, other) -> bool:
        if not isinstance(other, BinaryMatrix):
            return NotImplemented
        return self.bits.shape == other.bits.shape and bool(np.all(self.bits == other.bits))

    def __hash__(self):
        return hash((self.bits.shape, self.bits.tobytes()))

    def __matmul__(self, other: "BinaryMatrix") -> "BinaryMatrix":
        return BinaryMatrix((self.bits.astype(np.uint16) @ other.bits) & 1)

    def apply(self, v: int) -> int:
        """Multiply onto a bit vector packed as an int (component 0 = MSB)."""
        n = self.cols
        vec = np.array([(v >> (n - 1 - j)) & 1 for j in range(n)], dtype=np.uint8)
        out = (self.bits.astype(np.uint16) @ vec) & 1
        r = 0
        for i, b in enumerate(out):
            r |= int(b) << (self.rows - 1 - i)
        return r

    def is_square(self) -> bool:
        return self.rows == self.cols

    def rank(self) -> int:
        work = [_row_to_int(self.bits[i]) for i in range(self.rows)]
        rank = 0
        for col in range(self.cols):
            mask = 1 << col
            piv = next((r for r in range(rank, len(work)) if work[r] & mask), None)
            if piv is None:
                continue
            work[rank], work[piv] = work[piv], work[rank]
            for r in range(len(work)):
                if r != rank and work[r] & mask:
                    work[r] ^= work[rank]
            rank += 1
        return rank

    def is_invertible(self) -> bool:
        return self.is_square() and self.rank() == self.rows

    def inverse(self) -> "BinaryMatrix":
        if not self.is_square():
            raise CircuitError("only square matrices invert")
        n = self.rows
        work = [_row_to_int(self.bits[i]) | (1 << (n + i)) for i in range(n)]
        for col in range(n):
            mask = 1 << col
            piv = next((r for r in range(col, n) if work[r] & mask), None)
            if piv is None:
                raise CircuitError("matrix is singular over GF(2)")
            work[col], work[piv] = work[piv], work[col]
            for r in range(n):
                if r != col and work[r] & mask:
                    work[r] ^= work[col]
        inv = np.zeros((n, n), dtype=np.uint8)
        for i in range(n):
            for j in range(n):
                inv[i, j] = (work[i] >> (n + j)) & 1
        return BinaryMatrix(inv)


def _row_to_int(row: np.ndarray) -> int:
    r = 0
    for j, b in enumerate(row):
        if b:
            r |= 1 << j
    return r


@dataclass(frozen=True)
class AffineLayer:
    """x -> matrix @ x xor constant, constant as a 0/1 vector per row."""

    matrix: BinaryMatrix
    constant: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "constant", tuple(int(b) & 1 for b in self.constant))
        if len(self.constant) != self.matrix.rows:
            raise CircuitError("constant length must match matrix rows")


def synth_inplace_linear(m: BinaryMatrix) -> Circuit:
    """In-place CNOT circuit computing m @ v on n wires, no ancillas.

    Gauss-Jordan row reduction of m emits the row operations; replaying
    their inverses in reverse order is the circuit.  Deterministic pivot
    choice: a missing diagonal pivot is repaired by adding the first lower
    row that has one.
    """
    if not m.is_square():
        raise CircuitError("synthesis needs a square matrix")
    n = m.rows
    if n == 0:
        return Circuit(0)
    work = [_row_to_int(m.bits[i]) for i in range(n)]
    ops: list[tuple[int, int]] = []  # row ops: work[t] ^= work[c]

    def row_op(c: int, t: int) -> None:
        work[t] ^= work[c]
        ops.append((c, t))

    for col in range(n):
        mask = 1 << col
        if not work[col] & mask:
            piv = next((r for r in range(col + 1, n) if work[r] & mask), None)
            if piv is None:
                raise CircuitError("matrix is singular over GF(2)")
            row_op(piv, col)
        for r in range(n):
            if r != col and work[r] & mask:
                row_op(col, r)

    # Reducing m to I with left-multiplied elementaries E1..Eq means
    # m = E1 Eq ... reversed; a circuit's matrix is the product of its gate
    # elementaries right-to-left, so emit the recorded ops in reverse order.
    builder = CircuitBuilder(n)
    for c, t in reversed(ops):
        builder.cx(c, t)
    return builder.build()


def circuit_to_matrix(c: Circuit) -> BinaryMatrix:
    """The unique GF(2) matrix a CNOT-only circuit realizes.

    Tracks each wire's value as a linear combination of the inputs.
    """
    for g in c.gates:
        if g.kind != CNOT:
            raise CircuitError(f"circuit_to_matrix needs CNOT-only circuits, found {g.kind}")
    n = c.wire_count
    rows = [1 << i for i in range(n)]  # wire i = input i
    for g in c.gates:
        rows[g.target] ^= rows[g.controls[0]]
    out = np.zeros((n, n), dtype=np.uint8)
    for i in range(n):
        for j in range(n):
            out[i, j] = (rows[i] >> j) & 1
    return BinaryMatrix(out)


def synth_affine(layer: AffineLayer) -> Circuit:
    """Linear synthesis followed by NOT gates where the constant bit is 1."""
    linear = synth_inplace_linear(layer.matrix)
    builder = CircuitBuilder(layer.matrix.rows)
    builder.extend(linear.gates)
    for i, bit in enumerate(layer.constant):
        if bit:
            builder.x(i)
    return builder.build()


def random_invertible(n: int, rng: np.random.Generator) -> BinaryMatrix:
    """Uniformly-ish random invertible n x n matrix (rejection sampling)."""
    while True:
        m = BinaryMatrix(rng.integers(0, 2, size=(n, n), dtype=np.uint8))
        if m.is_invertible():
            return m
