"""Exception types shared across the simulator."""


class SimulationError(Exception):
    """Base class for every domain error raised by this package."""


class ZeroVector(SimulationError):
    """A construction produced the zero vector."""


class DuplicateLabel(SimulationError):
    """A basis label appeared more than once."""


class BasisMismatch(SimulationError):
    """Two objects live on different bases."""


class NotHermitian(SimulationError):
    """An observable matrix is not Hermitian."""


class InvalidWidth(SimulationError):
    """Pointer width must be positive."""


class WidthMismatch(SimulationError):
    """Pointer states of different widths were combined."""


class RangeTooNarrow(SimulationError):
    """Grid range does not cover the wavefunction support."""


class OrthogonalSelection(SimulationError):
    """Pre- and post-selection are orthogonal; the weak value is undefined."""


class PostSelectionImpossible(SimulationError):
    """The conditioned pointer state has exactly zero norm."""


class InvalidAngle(SimulationError):
    """Spin scenario angle outside (0, pi)."""


class InvalidData(SimulationError):
    """Power-law fit input is unusable."""
