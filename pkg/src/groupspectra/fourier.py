"""Vector-valued Fourier analysis: transform, synthesis, band-limited functions.

Conventions.  For an A-valued function f and an irrep sigma of dimension d
with matrix coefficients u_ij, the coefficient block stored at sigma is

    data[sigma][i, j] = integral of f(x) * conj(u_ij(x)) dx      (A-valued)

and synthesis reconstructs

    f(x) = sum over sigma of d_sigma * sum_ij data[sigma][i, j] * u_ij(x).

Schur orthogonality makes these mutually inverse on band-limited functions.
The pairing of (i, j) between analysis and synthesis is easy to get wrong
in a way every round-trip test on abelian groups would miss, so the module
runs a one-time self-test on a two-dimensional irrep before the first
transform and refuses to operate if the conventions disagree.

JSON form of a band-limited function:

    {"group": {...}, "space": {...},
     "modes": [{"sigma": <label>, "i": 1, "j": 1, "value": ...}]}

with i, j one-based and bounded by the irrep dimension.
"""

from __future__ import annotations

import numpy as np

from .errors import (
    ConfigurationError,
    DimensionError,
    GroupSpectraError,
    PrecisionError,
)
from .groups import CompactGroup, QuadratureRule, TruncatedDual, make_group
from .values import ValueSpace, make_value_space


class GridFunction:
    """Samples of an A-valued function at the nodes of a quadrature rule."""

    def __init__(self, rule: QuadratureRule, space: ValueSpace, samples: np.ndarray):
        self.rule = rule
        self.space = space
        arr = np.asarray(samples, dtype=complex)
        want = (len(rule),) + space.value_shape
        if arr.shape != want:
            raise DimensionError(f"samples have shape {arr.shape}, expected {want}")
        self.samples = arr

    @classmethod
    def from_callable(cls, rule: QuadratureRule, space: ValueSpace, fn) -> "GridFunction":
        samples = np.stack([space.check(fn(x)) for x in rule.nodes])
        return cls(rule, space, samples)

    def integrate(self) -> np.ndarray:
        """Haar integral of the function, an element of A."""
        flat = self.samples.reshape(len(self.rule), -1)
        return (self.rule.weights @ flat).reshape(self.space.value_shape)

    def lp_norm(self, p: float) -> float:
        """L^p norm with respect to normalized Haar measure, using A-norms pointwise."""
        entry = self.space.norms(self.samples)
        if p == float("inf"):
            return float(np.max(entry))
        if p <= 0:
            raise ConfigurationError(f"L^p norm needs p > 0, got {p}")
        return float(np.sum(self.rule.weights * entry**p) ** (1.0 / p))

    def sup_norm(self) -> float:
        return self.lp_norm(float("inf"))

    def __add__(self, other: "GridFunction") -> "GridFunction":
        self._compatible(other)
        return GridFunction(self.rule, self.space, self.samples + other.samples)

    def __sub__(self, other: "GridFunction") -> "GridFunction":
        self._compatible(other)
        return GridFunction(self.rule, self.space, self.samples - other.samples)

    def _compatible(self, other: "GridFunction"):
        if self.rule is not other.rule and (
            self.rule.group != other.rule.group or len(self.rule) != len(other.rule)
        ):
            raise ConfigurationError("grid functions live on different grids")
        if self.space != other.space:
            raise ConfigurationError("grid functions take values in different spaces")


class BandlimitedFunction:
    """A function determined by finitely many Fourier coefficient blocks.

    ``data[label]`` has shape (d, d) + value_shape; blocks exist for every
    label of the truncated dual, zero where the function has no mass.
    """

    def __init__(
        self,
        group: CompactGroup,
        space: ValueSpace,
        dual: TruncatedDual,
        data: dict[int, np.ndarray] | None = None,
    ):
        if dual.group != group:
            raise ConfigurationError("dual belongs to a different group")
        self.group = group
        self.space = space
        self.dual = dual
        self.data: dict[int, np.ndarray] = {}
        for lab in dual.labels:
            d = dual.dim(lab)
            shape = (d, d) + space.value_shape
            if data is not None and lab in data:
                block = np.asarray(data[lab], dtype=complex)
                if block.shape != shape:
                    raise DimensionError(
                        f"block for irrep {lab} has shape {block.shape}, expected {shape}"
                    )
                self.data[lab] = block.copy()
            else:
                self.data[lab] = np.zeros(shape, dtype=complex)
        if data is not None:
            stray = set(data) - set(dual.labels)
            if stray:
                raise ConfigurationError(f"blocks for labels {sorted(stray)} outside the dual")

    @property
    def band(self) -> int:
        return self.dual.band

    def copy(self) -> "BandlimitedFunction":
        return BandlimitedFunction(self.group, self.space, self.dual, self.data)

    # -- entries -----------------------------------------------------------------

    def entry(self, label: int, i: int, j: int) -> np.ndarray:
        return self.data[label][i, j]

    def set_entry(self, label: int, i: int, j: int, value) -> None:
        d = self.dual.dim(label)
        if not (0 <= i < d and 0 <= j < d):
            raise DimensionError(f"entry ({i}, {j}) outside irrep {label} of dimension {d}")
        self.data[label][i, j] = self.space.check(value)

    def entry_norms(self, label: int) -> np.ndarray:
        """Matrix of A-norms of the block at this label, shape (d, d)."""
        return self.space.norms(self.data[label])

    # -- evaluation ----------------------------------------------------------------

    def evaluate(self, points) -> np.ndarray:
        """Values at a list of group elements, shape (len(points),) + value_shape."""
        k = len(points)
        m = int(np.prod(self.space.value_shape, dtype=int))
        out = np.zeros((k, m), dtype=complex)
        for lab in self.dual.labels:
            block = self.data[lab]
            if not np.any(block):
                continue
            d = self.dual.dim(lab)
            mats = self.group.irrep_matrices(lab, points)
            out += d * np.tensordot(
                mats.reshape(k, d * d), block.reshape(d * d, m), axes=(1, 0)
            )
        return out.reshape((k,) + self.space.value_shape)

    def sample(self, rule: QuadratureRule) -> GridFunction:
        return synthesize(self, rule)

    # -- arithmetic ------------------------------------------------------------------

    def _compatible(self, other: "BandlimitedFunction"):
        if self.group != other.group or self.space != other.space:
            raise ConfigurationError("functions live on different groups or value spaces")
        if self.dual.labels != other.dual.labels:
            raise ConfigurationError(
                "functions have different duals; promote to a common band first"
            )

    def __add__(self, other: "BandlimitedFunction") -> "BandlimitedFunction":
        self._compatible(other)
        return BandlimitedFunction(
            self.group,
            self.space,
            self.dual,
            {lab: self.data[lab] + other.data[lab] for lab in self.dual.labels},
        )

    def __sub__(self, other: "BandlimitedFunction") -> "BandlimitedFunction":
        self._compatible(other)
        return BandlimitedFunction(
            self.group,
            self.space,
            self.dual,
            {lab: self.data[lab] - other.data[lab] for lab in self.dual.labels},
        )

    def __mul__(self, scalar) -> "BandlimitedFunction":
        c = complex(scalar)
        return BandlimitedFunction(
            self.group,
            self.space,
            self.dual,
            {lab: c * self.data[lab] for lab in self.dual.labels},
        )

    __rmul__ = __mul__

    def __neg__(self) -> "BandlimitedFunction":
        return self * (-1.0)

    def max_abs_diff(self, other: "BandlimitedFunction") -> float:
        self._compatible(other)
        return max(
            float(np.max(np.abs(self.data[lab] - other.data[lab])))
            for lab in self.dual.labels
        )

    def max_abs(self) -> float:
        return max(float(np.max(np.abs(self.data[lab]))) for lab in self.dual.labels)

    def promoted(self, band: int) -> "BandlimitedFunction":
        """The same function inside the (larger) band's dual."""
        dual = self.group.truncated_dual(band)
        missing = set(self.dual.labels) - set(dual.labels)
        if missing:
            raise ConfigurationError(
                f"band {band} dual does not contain labels {sorted(missing)}"
            )
        return BandlimitedFunction(self.group, self.space, dual, self.data)

    # -- serialization -----------------------------------------------------------------

    def to_json(self) -> dict:
        modes = []
        for lab in self.dual.labels:
            block = self.data[lab]
            d = self.dual.dim(lab)
            for i in range(d):
                for j in range(d):
                    if np.any(block[i, j]):
                        modes.append(
                            {
                                "sigma": int(lab),
                                "i": i + 1,
                                "j": j + 1,
                                "value": self.space.value_to_json(block[i, j]),
                            }
                        )
        return {
            "group": self.group.descriptor(),
            "space": self.space.descriptor(),
            "modes": modes,
        }

    @classmethod
    def from_json(cls, obj: dict, band: int | None = None) -> "BandlimitedFunction":
        if not isinstance(obj, dict):
            raise ConfigurationError(f"function JSON must be an object, got {type(obj).__name__}")
        for key in ("group", "space", "modes"):
            if key not in obj:
                raise ConfigurationError(f"function JSON is missing {key!r}")
        group = make_group(obj["group"])
        space = make_value_space(obj["space"])
        modes = obj["modes"]
        if not isinstance(modes, list):
            raise ConfigurationError("'modes' must be a list")
        parsed = []
        for k, mode in enumerate(modes):
            where = f"modes[{k}]"
            if not isinstance(mode, dict):
                raise ConfigurationError(f"{where} must be an object")
            for key in ("sigma", "i", "j", "value"):
                if key not in mode:
                    raise ConfigurationError(f"{where} is missing {key!r}")
            ir = group.irrep(mode["sigma"])
            i, j = mode["i"], mode["j"]
            if not (isinstance(i, int) and isinstance(j, int) and 1 <= i <= ir.dim and 1 <= j <= ir.dim):
                raise ConfigurationError(
                    f"{where}: indices must be integers in 1..{ir.dim}, got i={i!r}, j={j!r}"
                )
            try:
                value = space.value_from_json(mode["value"])
            except DimensionError as exc:
                raise ConfigurationError(f"{where}: {exc}") from None
            parsed.append((ir.label, i - 1, j - 1, value))
        need = minimal_band(group, [lab for lab, _, _, _ in parsed])
        use = need if band is None else max(int(band), need)
        out = cls(group, space, group.truncated_dual(use))
        seen = set()
        for k, (lab, i, j, value) in enumerate(parsed):
            if (lab, i, j) in seen:
                raise ConfigurationError(f"modes[{k}]: duplicate mode (sigma={lab}, i={i + 1}, j={j + 1})")
            seen.add((lab, i, j))
            out.set_entry(lab, i, j, value)
        return out


def minimal_band(group: CompactGroup, labels) -> int:
    """Smallest band whose truncated dual contains all the given labels."""
    if group.kind == "torus":
        return max((abs(int(lab)) for lab in labels), default=0)
    if group.kind == "su2":
        return max(((int(lab) + 1) // 2 for lab in labels), default=0)
    return 0


# -- transform pair ------------------------------------------------------------


def forward(grid: GridFunction, dual: TruncatedDual) -> BandlimitedFunction:
    """Fourier coefficients of a sampled function against a truncated dual.

    Exact when the sampled function is band-limited within the grid's band;
    the grid must be at least as fine as the dual requires.
    """
    _self_test_once()
    rule = grid.rule
    if rule.group != dual.group:
        raise ConfigurationError("grid and dual belong to different groups")
    if rule.band < dual.band:
        raise PrecisionError(
            f"grid of band {rule.band} is too coarse for a band-{dual.band} dual"
        )
    k = len(rule)
    flat = grid.samples.reshape(k, -1)
    data = {}
    for lab in dual.labels:
        mats = rule.coefficient_matrices(lab)
        weighted = np.conj(mats) * rule.weights[:, None, None]
        d = dual.dim(lab)
        block = np.tensordot(weighted, flat, axes=(0, 0))
        data[lab] = block.reshape((d, d) + grid.space.value_shape)
    return BandlimitedFunction(rule.group, grid.space, dual, data)


def synthesize(blf: BandlimitedFunction, rule: QuadratureRule) -> GridFunction:
    """Sample the function on a quadrature grid (cached coefficient matrices)."""
    _self_test_once()
    if rule.group != blf.group:
        raise ConfigurationError("rule and function belong to different groups")
    k = len(rule)
    m = int(np.prod(blf.space.value_shape, dtype=int))
    out = np.zeros((k, m), dtype=complex)
    for lab in blf.dual.labels:
        block = blf.data[lab]
        if not np.any(block):
            continue
        d = blf.dual.dim(lab)
        mats = rule.coefficient_matrices(lab)
        out += d * np.tensordot(mats.reshape(k, d * d), block.reshape(d * d, m), axes=(1, 0))
    return GridFunction(rule, blf.space, out.reshape((k,) + blf.space.value_shape))


def dense_sup_norm(blf: BandlimitedFunction, factor: int = 10) -> float:
    """Grid sup of the A-norm over a dense deterministic sampling of the group.

    A lower bound for the true L-infinity norm; exact on finite groups,
    where the grid is the whole group.
    """
    rule = blf.group.quadrature(blf.band)
    points = blf.group.dense_elements(rule, factor)
    values = blf.evaluate(points)
    return float(np.max(blf.space.norms(values)))


# -- convention self-test ---------------------------------------------------------


_SELF_TESTED = False


def _self_test_once() -> None:
    """Round-trip a two-dimensional irrep once per process.

    Abelian round trips cannot tell the (i, j) pairing conventions of
    analysis and synthesis apart; a nonabelian irrep can.  Runs before the
    first transform and raises if the two halves of the module disagree.
    """
    global _SELF_TESTED
    if _SELF_TESTED:
        return
    _SELF_TESTED = True
    from .groups import DihedralGroup

    group = DihedralGroup(3)
    space = ValueSpace(1, "l2")
    dual = group.truncated_dual(0)
    rule = group.quadrature(0)
    label = next(lab for lab in dual.labels if dual.dim(lab) == 2)
    probe = BandlimitedFunction(group, space, dual)
    values = [0.8 + 0.1j, -0.3 + 0.4j, 0.2 - 0.9j, 0.5 + 0.5j]
    for (i, j), v in zip(((0, 0), (0, 1), (1, 0), (1, 1)), values):
        probe.set_entry(label, i, j, [v])
    back = forward(synthesize(probe, rule), dual)
    if back.max_abs_diff(probe) > 1e-12:
        raise GroupSpectraError(
            "Fourier convention self-test failed: analysis and synthesis "
            "pair matrix entries inconsistently"
        )
