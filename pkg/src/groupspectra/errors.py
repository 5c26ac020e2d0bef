"""Exception types shared across the package.

The CLI maps these onto its exit-code contract: configuration and input
problems exit 2, precision/band problems exit 3.
"""

from __future__ import annotations


class GroupSpectraError(Exception):
    """Base class for all package-specific errors."""


class InvalidElementError(GroupSpectraError):
    """An object is not a valid element of the group it was used with."""


class UnknownIrrepError(GroupSpectraError):
    """An irrep label does not belong to the group's unitary dual."""


class DimensionError(GroupSpectraError):
    """A value does not conform to the shape its value space requires."""


class UnsupportedOperationError(GroupSpectraError):
    """The operation needs structure the operands do not have (e.g. an algebra)."""


class UnsupportedGridError(GroupSpectraError):
    """Direct convolution was asked for on a node set not closed under the group law."""


class PrecisionError(GroupSpectraError):
    """A quadrature rule's declared band is too small for the requested computation."""


class ConfigurationError(GroupSpectraError):
    """Invalid configuration: missing weight/symbol entries, bad parameters, bad schema."""
