"""Reversible-gate IR: gates, registers, circuits and exact resource counts.

Circuits are immutable once constructed; builders accumulate gates through
:class:`CircuitBuilder` and freeze them.  Only the three classical
reversible gate kinds exist (NOT / CNOT / TOFFOLI), all self-inverse, so
inversion is just reversing the gate order.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

NOT = "NOT"
CNOT = "CNOT"
TOFFOLI = "TOFFOLI"

_CONTROL_COUNT = {NOT: 0, CNOT: 1, TOFFOLI: 2}


class CircuitError(ValueError):
    """Invalid gate, register or composition request."""


@dataclass(frozen=True)
class Gate:
    """One reversible primitive acting on distinct wires."""

    kind: str
    target: int
    controls: tuple[int, ...] = ()

    def __post_init__(self):
        if self.kind not in _CONTROL_COUNT:
            raise CircuitError(f"unknown gate kind {self.kind!r}")
        controls = tuple(self.controls)
        object.__setattr__(self, "controls", controls)
        if len(controls) != _CONTROL_COUNT[self.kind]:
            raise CircuitError(
                f"{self.kind} takes {_CONTROL_COUNT[self.kind]} controls, got {len(controls)}")
        wires = controls + (self.target,)
        if len(set(wires)) != len(wires):
            raise CircuitError(f"duplicate wire in gate: {wires}")
        if any(w < 0 for w in wires):
            raise CircuitError(f"negative wire index in gate: {wires}")

    @property
    def wires(self) -> tuple[int, ...]:
        return self.controls + (self.target,)

    def remapped(self, wire_map: Mapping[int, int]) -> "Gate":
        return Gate(self.kind, wire_map[self.target],
                    tuple(wire_map[c] for c in self.controls))


def x(target: int) -> Gate:
    return Gate(NOT, target)


def cx(control: int, target: int) -> Gate:
    return Gate(CNOT, target, (control,))


def ccx(c1: int, c2: int, target: int) -> Gate:
    return Gate(TOFFOLI, target, (c1, c2))


@dataclass(frozen=True)
class Register:
    """Named group of wires with a role.

    Roles: ``key``, ``state-block``, ``ancilla``, ``output``.
    Wire order is significant: wires[0] is the most significant bit when
    the register is read as an integer.
    """

    name: str
    wires: tuple[int, ...]
    role: str

    ROLES = ("key", "state-block", "ancilla", "output")

    def __post_init__(self):
        object.__setattr__(self, "wires", tuple(self.wires))
        if self.role not in self.ROLES:
            raise CircuitError(f"unknown register role {self.role!r}")
        if len(set(self.wires)) != len(self.wires):
            raise CircuitError(f"register {self.name} repeats a wire")

    def __len__(self) -> int:
        return len(self.wires)


@dataclass(frozen=True)
class ResourceReport:
    """Exact gate counts for one circuit."""

    toffoli: int
    cnot: int
    not_: int
    wires: int
    ancilla_wires: int
    depth: int

    @property
    def total_gates(self) -> int:
        return self.toffoli + self.cnot + self.not_

    def as_dict(self) -> dict:
        return {"toffoli": self.toffoli, "cnot": self.cnot, "not": self.not_,
                "wires": self.wires, "ancilla_wires": self.ancilla_wires,
                "depth": self.depth}


@dataclass(frozen=True)
class Circuit:
    """Ordered gate sequence over a fixed wire space.

    Gate order is kept verbatim; nothing is reordered or peephole-optimized,
    so resource reports are exactly those of the transcribed construction.
    """

    wire_count: int
    gates: tuple[Gate, ...] = ()
    registers: tuple[Register, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "gates", tuple(self.gates))
        object.__setattr__(self, "registers", tuple(self.registers))
        if self.wire_count < 0:
            raise CircuitError("wire_count must be non-negative")
        seen: set[int] = set()
        for reg in self.registers:
            for w in reg.wires:
                if w >= self.wire_count:
                    raise CircuitError(f"register {reg.name} exceeds wire space")
                if w in seen:
                    raise CircuitError(f"wire {w} belongs to two registers")
                seen.add(w)
        for g in self.gates:
            _check_gate(g, self.wire_count)

    def __len__(self) -> int:
        return len(self.gates)

    def register(self, name: str) -> Register:
        for reg in self.registers:
            if reg.name == name:
                return reg
        raise KeyError(name)


def _check_gate(gate: Gate, wire_count: int) -> None:
    for w in gate.wires:
        if w >= wire_count:
            raise CircuitError(f"wire {w} out of range for {wire_count}-wire circuit")


def append_gate(circuit: Circuit, gate: Gate) -> Circuit:
    """Functional append; the input circuit is unchanged."""
    _check_gate(gate, circuit.wire_count)
    return Circuit(circuit.wire_count, circuit.gates + (gate,), circuit.registers)


def compose(a: Circuit, b: Circuit, wire_map: Mapping[int, int] | None = None) -> Circuit:
    """a's gates followed by b's gates, b remapped into a's wire space.

    ``wire_map`` maps each of b's wires to a wire of a; it must be injective.
    Omitting it requires matching wire counts (identity mapping).
    """
    if wire_map is None:
        if b.wire_count > a.wire_count:
            raise CircuitError("cannot identity-compose a wider circuit")
        wire_map = {w: w for w in range(b.wire_count)}
    else:
        missing = [w for w in range(b.wire_count) if w not in wire_map]
        used = {w for g in b.gates for w in g.wires}
        if used - set(wire_map):
            raise CircuitError("wire_map does not cover all wires b touches")
        wire_map = dict(wire_map)
        for w in missing:
            wire_map[w] = -1  # unused wires need no image
    images = [v for v in wire_map.values() if v >= 0]
    if len(set(images)) != len(images):
        raise CircuitError("wire_map is not injective")
    if any(v >= a.wire_count for v in images):
        raise CircuitError("wire_map image exceeds target wire space")
    remapped = tuple(g.remapped(wire_map) for g in b.gates)
    return Circuit(a.wire_count, a.gates + remapped, a.registers)


def invert(circuit: Circuit) -> Circuit:
    """Reverse the gate order; every gate kind is its own inverse."""
    return Circuit(circuit.wire_count, tuple(reversed(circuit.gates)),
                   circuit.registers)


def depth(circuit: Circuit) -> int:
    """ASAP layer count: gates on disjoint wire sets share a layer.

    Each gate lands on layer 1 + max(layer of the last gate touching any of
    its wires); the depth is the maximum layer.  Deterministic for a given
    gate order.
    """
    level = [0] * circuit.wire_count
    out = 0
    for g in circuit.gates:
        ws = g.wires
        lay = 1 + max(level[w] for w in ws)
        for w in ws:
            level[w] = lay
        if lay > out:
            out = lay
    return out


def resources(circuit: Circuit) -> ResourceReport:
    """Exact per-kind counts plus wire/ancilla accounting and ASAP depth."""
    tof = cn = nt = 0
    for g in circuit.gates:
        if g.kind == TOFFOLI:
            tof += 1
        elif g.kind == CNOT:
            cn += 1
        else:
            nt += 1
    anc = sum(len(r) for r in circuit.registers if r.role == "ancilla")
    return ResourceReport(toffoli=tof, cnot=cn, not_=nt,
                          wires=circuit.wire_count, ancilla_wires=anc,
                          depth=depth(circuit))


@dataclass
class CircuitBuilder:
    """Mutable gate accumulator used by the cipher builders."""

    wire_count: int
    gates: list[Gate] = field(default_factory=list)
    registers: list[Register] = field(default_factory=list)

    def x(self, target: int) -> "CircuitBuilder":
        return self.append(Gate(NOT, target))

    def cx(self, control: int, target: int) -> "CircuitBuilder":
        return self.append(Gate(CNOT, target, (control,)))

    def ccx(self, c1: int, c2: int, target: int) -> "CircuitBuilder":
        return self.append(Gate(TOFFOLI, target, (c1, c2)))

    def append(self, gate: Gate) -> "CircuitBuilder":
        _check_gate(gate, self.wire_count)
        self.gates.append(gate)
        return self

    def extend(self, gates: Iterable[Gate]) -> "CircuitBuilder":
        for g in gates:
            self.append(g)
        return self

    def extend_remapped(self, sub: Circuit | Sequence[Gate],
                        wire_map: Mapping[int, int]) -> "CircuitBuilder":
        gates = sub.gates if isinstance(sub, Circuit) else sub
        for g in gates:
            self.append(g.remapped(wire_map))
        return self

    def add_register(self, name: str, wires: Sequence[int], role: str) -> Register:
        reg = Register(name, tuple(wires), role)
        self.registers.append(reg)
        return reg

    def mark(self) -> int:
        """Current gate count, for step-range bookkeeping."""
        return len(self.gates)

    def build(self) -> Circuit:
        return Circuit(self.wire_count, tuple(self.gates), tuple(self.registers))
