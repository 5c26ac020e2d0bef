"""Finite-dimensional complex value spaces for vector-valued functions.

A value space A is C^dim carrying one of the norms l1, l2, linf, or, for
matrix-shaped values, the operator (largest singular value) norm.  Values
are vectors of shape (dim,) except under the operator norm, where they are
matrices of shape (dim, dim).

When ``algebra`` is set the space is a Banach algebra: scalar
multiplication for dim 1 and the matrix product under the operator norm.
Those are the submultiplicative cases, which convolution of A-valued
functions relies on; other combinations are rejected.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import ConfigurationError, DimensionError, UnsupportedOperationError

NORMS = ("l1", "l2", "linf", "operator")


@dataclass(frozen=True)
class ValueSpace:
    dim: int
    norm: str = "l2"
    algebra: bool = False

    def __post_init__(self):
        if int(self.dim) < 1:
            raise ConfigurationError(f"value space dim must be >= 1, got {self.dim}")
        object.__setattr__(self, "dim", int(self.dim))
        if self.norm not in NORMS:
            raise ConfigurationError(f"norm must be one of {NORMS}, got {self.norm!r}")
        if self.algebra and self.dim > 1 and self.norm != "operator":
            raise ConfigurationError(
                "algebra structure needs the operator norm (or dim 1); "
                f"got dim={self.dim}, norm={self.norm!r}"
            )

    # -- shapes and validation -------------------------------------------------

    @property
    def value_shape(self) -> tuple[int, ...]:
        if self.norm == "operator":
            return (self.dim, self.dim)
        return (self.dim,)

    def check(self, value) -> np.ndarray:
        """Coerce to a complex array of the space's value shape."""
        arr = np.asarray(value, dtype=complex)
        if arr.shape != self.value_shape:
            raise DimensionError(
                f"value shape {arr.shape} does not match space shape {self.value_shape}"
            )
        return arr

    def zero(self) -> np.ndarray:
        return np.zeros(self.value_shape, dtype=complex)

    # -- norms -------------------------------------------------------------------

    def norms(self, values: np.ndarray) -> np.ndarray:
        """Entrywise A-norms over any batch shape (..., *value_shape)."""
        arr = np.asarray(values, dtype=complex)
        k = len(self.value_shape)
        if arr.shape[arr.ndim - k :] != self.value_shape:
            raise DimensionError(
                f"batch shape {arr.shape} does not end with {self.value_shape}"
            )
        if self.norm == "l1":
            return np.sum(np.abs(arr), axis=-1)
        if self.norm == "l2":
            return np.sqrt(np.sum(np.abs(arr) ** 2, axis=-1))
        if self.norm == "linf":
            return np.max(np.abs(arr), axis=-1)
        return np.linalg.svd(arr, compute_uv=False)[..., 0]

    def norm_of(self, value) -> float:
        return float(self.norms(self.check(value)))

    # -- algebra -------------------------------------------------------------------

    def _require_algebra(self):
        if not self.algebra:
            raise UnsupportedOperationError(
                f"{self.descriptor()} is not an algebra; products are undefined"
            )

    def multiply(self, a, b) -> np.ndarray:
        self._require_algebra()
        x, y = self.check(a), self.check(b)
        if self.norm == "operator":
            return x @ y
        return x * y

    def one(self) -> np.ndarray:
        self._require_algebra()
        if self.norm == "operator":
            return np.eye(self.dim, dtype=complex)
        return np.ones(1, dtype=complex)

    # -- randomness ---------------------------------------------------------------

    def random_value(self, rng: np.random.Generator, scale: float = 1.0) -> np.ndarray:
        re = rng.normal(size=self.value_shape)
        im = rng.normal(size=self.value_shape)
        return scale * (re + 1j * im) / np.sqrt(2.0)

    # -- serialization ---------------------------------------------------------------

    def descriptor(self) -> dict:
        return {"dim": self.dim, "norm": self.norm, "algebra": self.algebra}

    def value_to_json(self, value) -> list:
        arr = self.check(value)
        if self.norm == "operator":
            return [[[v.real, v.imag] for v in row] for row in arr]
        return [[v.real, v.imag] for v in arr]

    def value_from_json(self, obj) -> np.ndarray:
        try:
            arr = np.asarray(obj, dtype=float)
        except (TypeError, ValueError):
            raise DimensionError(f"value entries must be [re, im] pairs, got {obj!r}") from None
        want = self.value_shape + (2,)
        if arr.shape != want:
            raise DimensionError(
                f"value JSON shape {arr.shape} does not match expected {want}"
            )
        return arr[..., 0] + 1j * arr[..., 1]


def make_value_space(descriptor: dict) -> ValueSpace:
    """Build a value space from JSON, e.g. {"dim": 2, "norm": "l2", "algebra": false}."""
    if not isinstance(descriptor, dict) or "dim" not in descriptor:
        raise ConfigurationError(
            f"value space descriptor must be an object with 'dim', got {descriptor!r}"
        )
    extra = set(descriptor) - {"dim", "norm", "algebra"}
    if extra:
        raise ConfigurationError(f"unknown value space fields {sorted(extra)}")
    try:
        dim = int(descriptor["dim"])
    except (TypeError, ValueError):
        raise ConfigurationError(f"value space dim must be an integer, got {descriptor['dim']!r}") from None
    return ValueSpace(
        dim=dim,
        norm=descriptor.get("norm", "l2"),
        algebra=bool(descriptor.get("algebra", False)),
    )
