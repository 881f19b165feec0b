"""Exception types shared across the simulator."""


class PimNttError(Exception):
    """Base class for all simulator errors."""


class NotPrime(PimNttError):
    """The requested modulus is not prime."""


class NotPowerOfTwo(PimNttError):
    """The transform size is not a power of two."""


class NoRootExists(PimNttError):
    """No root of unity of the requested order exists modulo q."""


class InsufficientBitWidth(PimNttError):
    """The operand bit width leaves no headroom above the modulus."""


class ModulusMismatch(PimNttError):
    """Residues with different moduli were combined."""


class LengthMismatch(PimNttError):
    """A coefficient vector has the wrong length."""


class StageOutOfRange(PimNttError):
    """Stage index outside 1..log2(n)."""


class RowOutOfRange(PimNttError):
    """Row index outside the bank."""


class SameRow(PimNttError):
    """A dual-row activation addressed the same row twice."""


class SlotOverlapInvalid(PimNttError):
    """Word slots overlap where the operation forbids it."""


class WidthMismatch(PimNttError):
    """Word slots of different widths were combined."""


class HeadroomViolated(PimNttError):
    """q is too wide for the operand width; partial sums would overflow."""


class IndexOutOfRange(PimNttError):
    """Index outside the address space."""


class FileFormatError(PimNttError):
    """A coefficient file could not be parsed."""
