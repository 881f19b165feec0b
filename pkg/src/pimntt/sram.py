"""Digital model of a 6T SRAM bank used as a bit-serial compute fabric.

The bank is a plain binary grid plus event counters.  Three micro-operations
are exposed: a single-row read, a dual-row activation that yields per-column
AND / NOR of the two stored words, and a masked row write.  Every
micro-operation bumps the matching event counter so that energy can be
estimated structurally, and optionally reports itself to a trace hook.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np

from .errors import RowOutOfRange, SameRow

TraceHook = Callable[[str, tuple, int], None]


@dataclass
class EventCounts:
    """Tallies of bank micro-events."""

    single_activations: int = 0
    dual_activations: int = 0
    writes: int = 0
    senses: int = 0

    def copy(self) -> "EventCounts":
        return EventCounts(self.single_activations, self.dual_activations,
                           self.writes, self.senses)

    def __add__(self, other: "EventCounts") -> "EventCounts":
        return EventCounts(
            self.single_activations + other.single_activations,
            self.dual_activations + other.dual_activations,
            self.writes + other.writes,
            self.senses + other.senses,
        )

    def __sub__(self, other: "EventCounts") -> "EventCounts":
        return EventCounts(
            self.single_activations - other.single_activations,
            self.dual_activations - other.dual_activations,
            self.writes - other.writes,
            self.senses - other.senses,
        )


@dataclass
class RowReadout:
    """Result of a dual-row activation: per-column AND and NOR bits."""

    and_bits: np.ndarray
    nor_bits: np.ndarray


def _is_pow2(x: int) -> bool:
    return x >= 1 and (x & (x - 1)) == 0


class SramBank:
    """One SRAM bank: ``rows`` word lines by ``cols`` bit lines.

    ``active_cols`` models column-wise power gating: gated columns are never
    sensed or written, and do not contribute to the event counters.
    """

    def __init__(self, rows: int, cols: int, active_cols: Optional[int] = None):
        if rows < 1:
            raise ValueError("bank needs at least one row")
        if not _is_pow2(cols) or cols < 2:
            raise ValueError("cols must be a power of two >= 2")
        if active_cols is None:
            active_cols = cols
        if not 1 <= active_cols <= cols:
            raise ValueError("active_cols out of range")
        self.rows = rows
        self.cols = cols
        self.active_cols = active_cols
        self.bits = np.zeros((rows, cols), dtype=np.uint8)
        self.events = EventCounts()
        self.cycle = 0
        self.phase = ""
        self.trace_hook: Optional[TraceHook] = None

    # -- cycle bookkeeping -------------------------------------------------

    def begin_cycle(self) -> None:
        """Advance the clock by one cycle.  Drivers call this once per step."""
        self.cycle += 1

    def _trace(self, kind: str, rows: tuple) -> None:
        if self.trace_hook is not None:
            self.trace_hook(kind, rows, self.cycle)

    # -- micro-operations ----------------------------------------------------

    def _check_row(self, row: int) -> None:
        if not 0 <= row < self.rows:
            raise RowOutOfRange(f"row {row} outside 0..{self.rows - 1}")

    def read_row(self, row: int) -> np.ndarray:
        """Single-row activation; returns the stored bits unchanged."""
        self._check_row(row)
        self.events.single_activations += 1
        self.events.senses += self.active_cols
        self._trace("read", (row,))
        return self.bits[row].copy()

    def read_two_rows(self, row_a: int, row_b: int,
                      gate_a: Optional[np.ndarray] = None) -> RowReadout:
        """Dual-row activation.

        The bit line carries A AND B and its complement line A NOR B.  When a
        per-column ``gate_a`` mask is given, columns with gate 0 disconnect the
        cell of ``row_a`` so the readout degenerates to (B, NOT B) there; this
        is how a tag bit keeps one operand from influencing the result.
        """
        self._check_row(row_a)
        self._check_row(row_b)
        if row_a == row_b:
            raise SameRow(f"dual activation of row {row_a} twice")
        a = self.bits[row_a]
        b = self.bits[row_b]
        if gate_a is None:
            and_bits = a & b
            nor_bits = (1 ^ a) & (1 ^ b)
        else:
            g = gate_a.astype(np.uint8)
            and_bits = b & (a | (1 ^ g))
            nor_bits = (1 ^ b) & ((1 ^ a) | (1 ^ g))
        self.events.dual_activations += 1
        self.events.senses += self.active_cols
        self._trace("read2", (row_a, row_b))
        return RowReadout(and_bits.copy(), nor_bits.copy())

    def write_row(self, row: int, values, mask=None) -> None:
        """Write per-column bits into ``row``; unmasked columns are untouched.

        Only the active (non-power-gated) columns are ever modified.
        """
        self._check_row(row)
        act = self.active_cols
        vals = np.asarray(values, dtype=np.uint8)
        if vals.ndim == 0:
            vals = np.full(act, int(vals), dtype=np.uint8)
        target = self.bits[row]
        if mask is None:
            target[:act] = vals[:act] & 1
        else:
            m = np.asarray(mask, dtype=bool)
            sl = target[:act]
            sl[m[:act]] = vals[:act][m[:act]] & 1
        self.events.writes += 1
        self._trace("write", (row,))


def bank_for(params, cols: Optional[int] = None) -> SramBank:
    """Build a bank sized for ``params``: 5N+2 rows, one point per column.

    An n-point run keeps the leftmost n/2 columns active (each column holds a
    pair of points) and power-gates the rest.
    """
    n = params.n
    if cols is None:
        cols = n
    if cols < n:
        raise ValueError(f"{cols} columns cannot hold {n} points")
    return SramBank(5 * params.N + 2, cols, active_cols=n // 2)
