"""Sequence-space and smoothness norms on Fourier coefficient packs.

The S_p norm of a coefficient pack phi is

    || phi ||_{S_p} = ( sum_sigma d_sigma sum_ij || phi[sigma][i,j] ||_A^p )^(1/p)

with the p = infinity case read as the sup of the entry norms.  Smoothness
enters through a weight gamma on irrep labels: the spectral Barron norm of
order s is

    || f ||_{B^s} = sum_sigma d_sigma (1 + gamma(sigma)^2)^(s/2)
                    sum_ij || fhat[sigma][i,j] ||_A

and the spectral Sobolev norm squares the same data,

    || f ||_{H^s}^2 = sum_sigma d_sigma (1 + gamma(sigma)^2)^s
                      sum_ij || fhat[sigma][i,j] ||_A^2.

All sums run in the canonical dual order, so values are reproducible to
the last bit.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import ConfigurationError
from .fourier import BandlimitedFunction
from .groups import CompactGroup

BUILTIN_WEIGHTS = ("abs_n", "sqrt_l_lplus1", "constant")


@dataclass(frozen=True)
class Weight:
    """A non-negative weight gamma on irrep labels.

    Builtins: ``abs_n`` reads the label as an integer frequency (the circle
    and cyclic groups), ``sqrt_l_lplus1`` reads it as twice the spin and
    returns sqrt(l (l + 1)) (SU(2)), ``constant`` ignores the label.  A
    table weight looks labels up explicitly and rejects labels it does not
    know.  ``default_s`` carries an optional smoothness order bundled with
    the weight's JSON form; it plays no part in gamma itself.
    """

    name: str
    table: tuple[tuple[int, float], ...] | None = None
    value: float = 1.0
    default_s: float | None = None
    _lookup: dict = field(default=None, repr=False, compare=False)

    def __post_init__(self):
        if self.name not in BUILTIN_WEIGHTS and self.name != "table":
            raise ConfigurationError(
                f"weight must be one of {BUILTIN_WEIGHTS} or 'table', got {self.name!r}"
            )
        if self.name == "constant" and not (
            isinstance(self.value, (int, float)) and math.isfinite(self.value) and self.value >= 0
        ):
            raise ConfigurationError(f"constant weight value must be >= 0, got {self.value!r}")
        if self.name == "table":
            if not self.table:
                raise ConfigurationError("table weight needs at least one entry")
            for lab, g in self.table:
                if not (isinstance(g, (int, float)) and math.isfinite(g) and g >= 0):
                    raise ConfigurationError(
                        f"weight table entry for label {lab} must be >= 0, got {g!r}"
                    )
            object.__setattr__(self, "_lookup", dict(self.table))

    def gamma(self, label: int) -> float:
        if self.name == "abs_n":
            return float(abs(int(label)))
        if self.name == "sqrt_l_lplus1":
            half = int(label) / 2.0
            return math.sqrt(half * (half + 1.0))
        if self.name == "constant":
            return float(self.value)
        try:
            return float(self._lookup[int(label)])
        except KeyError:
            raise ConfigurationError(f"weight table has no entry for irrep label {label}") from None

    def factor(self, label: int, exponent: float) -> float:
        """The bracket power (1 + gamma(label)^2) ** exponent."""
        g = self.gamma(label)
        return (1.0 + g * g) ** exponent

    @classmethod
    def canonical(cls, group: CompactGroup) -> "Weight":
        """The natural Laplacian weight: |n| on the circle and cyclic duals,
        sqrt(l (l + 1)) on SU(2), the constant 1 on dihedral groups."""
        if group.kind == "torus" or group.kind == "cyclic":
            return cls("abs_n")
        if group.kind == "su2":
            return cls("sqrt_l_lplus1")
        return cls("constant", value=1.0)

    def to_json(self) -> dict:
        if self.name == "table":
            out = {"table": {str(lab): g for lab, g in self.table}}
        elif self.name == "constant":
            out = {"builtin": "constant", "value": self.value}
        else:
            out = {"builtin": self.name}
        if self.default_s is not None:
            out["s"] = self.default_s
        return out


def make_weight(obj: dict) -> Weight:
    """Build a weight from JSON: {"builtin": ...} or {"table": {...}}, optional "s"."""
    if not isinstance(obj, dict):
        raise ConfigurationError(f"weight JSON must be an object, got {type(obj).__name__}")
    extra = set(obj) - {"builtin", "table", "value", "s"}
    if extra:
        raise ConfigurationError(f"unknown weight fields {sorted(extra)}")
    default_s = obj.get("s")
    if default_s is not None and not isinstance(default_s, (int, float)):
        raise ConfigurationError(f"weight 's' must be a number, got {default_s!r}")
    has_builtin, has_table = "builtin" in obj, "table" in obj
    if has_builtin == has_table:
        raise ConfigurationError("weight JSON needs exactly one of 'builtin' or 'table'")
    if has_builtin:
        name = obj["builtin"]
        if name == "constant":
            return Weight("constant", value=obj.get("value", 1.0), default_s=default_s)
        if "value" in obj:
            raise ConfigurationError(f"'value' only applies to the constant builtin, not {name!r}")
        return Weight(name, default_s=default_s)
    table = obj["table"]
    if not isinstance(table, dict):
        raise ConfigurationError("weight 'table' must be an object of label: gamma pairs")
    entries = []
    for key, g in table.items():
        try:
            lab = int(key)
        except (TypeError, ValueError):
            raise ConfigurationError(f"weight table key {key!r} is not an integer label") from None
        entries.append((lab, g))
    return Weight("table", table=tuple(entries), default_s=default_s)


@dataclass(frozen=True)
class NormReport:
    """A norm value together with each irrep's contribution.

    For the Barron norm the contributions sum to the value; for the Sobolev
    norm they sum to its square.  Contributions are keyed by irrep label
    and listed in canonical dual order.
    """

    value: float
    per_irrep: dict[int, float]


def sp_norm(blf: BandlimitedFunction, p: float) -> float:
    """The S_p norm of the coefficient pack; p may be math.inf."""
    if p == math.inf:
        return max(
            (float(np.max(blf.entry_norms(lab))) for lab in blf.dual.labels),
            default=0.0,
        )
    if not p >= 1:
        raise ConfigurationError(f"S_p norm needs p >= 1 or infinity, got {p}")
    total = 0.0
    for lab in blf.dual.labels:
        total += blf.dual.dim(lab) * float(np.sum(blf.entry_norms(lab) ** p))
    return total ** (1.0 / p)


def barron_norm(blf: BandlimitedFunction, weight: Weight, s: float) -> NormReport:
    per: dict[int, float] = {}
    total = 0.0
    for lab in blf.dual.labels:
        term = (
            blf.dual.dim(lab)
            * weight.factor(lab, s / 2.0)
            * float(np.sum(blf.entry_norms(lab)))
        )
        per[lab] = term
        total += term
    return NormReport(total, per)


def sobolev_norm(blf: BandlimitedFunction, weight: Weight, s: float) -> NormReport:
    per: dict[int, float] = {}
    total = 0.0
    for lab in blf.dual.labels:
        term = (
            blf.dual.dim(lab)
            * weight.factor(lab, s)
            * float(np.sum(blf.entry_norms(lab) ** 2))
        )
        per[lab] = term
        total += term
    return NormReport(math.sqrt(total), per)
