"""Per-column near-memory peripheral: serial adder, comparator, reduction mux.

All functions are branchless over bit-valued inputs so the same logic serves
both the scalar unit tests and the vectorized column arrays used by the
bit-serial operations (ints and numpy arrays behave identically here).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, replace


class ReductionSelect(enum.Enum):
    """Which shifted multiple of q the next accumulation round subtracts."""

    NONE = "none"
    SUBTRACT_Q_SHIFT1 = "subtract_q_shift1"
    SUBTRACT_Q_SHIFT2 = "subtract_q_shift2"


@dataclass
class ColumnPeripheralState:
    """Latches of one column peripheral.  Reset state is all zero."""

    carry: int = 0
    borrow: int = 0
    tag: int = 0
    cmp_2q: int = 0
    cmp_4q: int = 0
    overflow_2q: int = 0
    overflow_4q: int = 0
    overflow: int = 0


def serial_add_bit(a_bit, b_bit, subtract_bit, carry, borrow):
    """One step of the serial adder/subtractor.

    Computes ``a + b - subtract + carry - borrow`` as a signed value in
    [-2, 3], emits its LSB, and re-latches carry (value > 1) and borrow
    (value < 0).  Carry and borrow can never be set by the same step.
    """
    value = a_bit + b_bit - subtract_bit + carry - borrow
    sum_bit = value & 1
    new_carry = (value > 1) * 1
    new_borrow = (value < 0) * 1
    return sum_bit, new_carry, new_borrow


def adder_step(state: ColumnPeripheralState, a_bit, b_bit, subtract_q_bit):
    """Functional wrapper around :func:`serial_add_bit` over peripheral state."""
    sum_bit, carry, borrow = serial_add_bit(
        a_bit, b_bit, subtract_q_bit, state.carry, state.borrow)
    return sum_bit, replace(state, carry=carry, borrow=borrow)


def comparator_step(cmp_prev, value_bit, ref_bit):
    """One step of the bit-serial comparator, LSB first.

    Keeps the previous flag when the bits agree, otherwise takes the value
    bit.  Folded over all bits, an initial flag of 1 yields [value >= ref]
    and an initial flag of 0 yields [value > ref].
    """
    differ = value_bit ^ ref_bit
    return cmp_prev ^ (differ & (cmp_prev ^ value_bit))


def reduction_select(state: ColumnPeripheralState) -> ReductionSelect:
    """Priority mux over the overflow flags; the 4q flag wins."""
    if state.overflow_4q:
        return ReductionSelect.SUBTRACT_Q_SHIFT2
    if state.overflow_2q:
        return ReductionSelect.SUBTRACT_Q_SHIFT1
    return ReductionSelect.NONE
