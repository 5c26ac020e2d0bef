"""Fourier multiplier operators and convolution.

A scalar spectral symbol a assigns one complex number to each irrep label;
the operator a(D) multiplies the coefficient block at sigma by a(sigma).
The Bessel potential of order s is the special case a(sigma) =
(1 + gamma(sigma)^2)^s, which shifts the spectral Barron scale by 2s and
the Sobolev scale by s isometrically.

Convolution follows (f * g)(x) = integral of f(y) g(y^-1 x) dy, with the
pointwise product taken in the value algebra.  On the spectral side this
is the block matrix product

    (f * g)hat[sigma] = fhat[sigma] @ ghat[sigma]

with entries multiplied in A (f's value on the left), which is exact:
the direct and spectral routes agree to rounding on any grid whose node
set is closed under the group law.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import ConfigurationError
from .fourier import BandlimitedFunction, GridFunction
from .spectra import Weight


@dataclass(frozen=True)
class SpectralSymbol:
    """Scalar multiplier: an explicit table, or the Bessel builtin.

    The Bessel symbol (1 + gamma^2)^s depends on a weight, which callers
    supply when the symbol is evaluated.
    """

    name: str
    table: tuple[tuple[int, complex], ...] | None = None
    s: float | None = None

    def __post_init__(self):
        if self.name == "table":
            if not self.table:
                raise ConfigurationError("symbol table needs at least one entry")
        elif self.name == "bessel":
            if self.s is None or not np.isfinite(self.s):
                raise ConfigurationError("bessel symbol needs a finite order 's'")
        else:
            raise ConfigurationError(f"symbol must be 'table' or 'bessel', got {self.name!r}")

    def value(self, label: int, weight: Weight | None = None) -> complex:
        if self.name == "bessel":
            if weight is None:
                raise ConfigurationError("bessel symbol needs a weight to evaluate")
            return complex(weight.factor(label, self.s))
        for lab, v in self.table:
            if lab == int(label):
                return complex(v)
        raise ConfigurationError(f"symbol table has no entry for irrep label {label}")

    def to_json(self) -> dict:
        if self.name == "bessel":
            return {"builtin": "bessel", "s": self.s}
        return {"table": {str(lab): [v.real, v.imag] for lab, v in self.table}}


def make_symbol(obj: dict) -> SpectralSymbol:
    """Build a symbol from JSON: {"table": {label: [re, im]}} or {"builtin": "bessel", "s": ...}."""
    if not isinstance(obj, dict):
        raise ConfigurationError(f"symbol JSON must be an object, got {type(obj).__name__}")
    has_builtin, has_table = "builtin" in obj, "table" in obj
    if has_builtin == has_table:
        raise ConfigurationError("symbol JSON needs exactly one of 'builtin' or 'table'")
    if has_builtin:
        if obj["builtin"] != "bessel":
            raise ConfigurationError(f"unknown symbol builtin {obj['builtin']!r}")
        if "s" not in obj or not isinstance(obj["s"], (int, float)):
            raise ConfigurationError("bessel symbol JSON needs a numeric 's'")
        return SpectralSymbol("bessel", s=float(obj["s"]))
    table = obj["table"]
    if not isinstance(table, dict):
        raise ConfigurationError("symbol 'table' must be an object of label: [re, im] pairs")
    entries = []
    for key, pair in table.items():
        try:
            lab = int(key)
        except (TypeError, ValueError):
            raise ConfigurationError(f"symbol table key {key!r} is not an integer label") from None
        if not (isinstance(pair, (list, tuple)) and len(pair) == 2):
            raise ConfigurationError(f"symbol value for label {key} must be [re, im], got {pair!r}")
        entries.append((lab, complex(float(pair[0]), float(pair[1]))))
    return SpectralSymbol("table", table=tuple(entries))


# -- multiplier operators ---------------------------------------------------------


def pseudo_diff(
    blf: BandlimitedFunction, symbol: SpectralSymbol, weight: Weight | None = None
) -> BandlimitedFunction:
    """Apply the Fourier multiplier a(D): block at sigma scales by a(sigma)."""
    data = {
        lab: symbol.value(lab, weight) * blf.data[lab] for lab in blf.dual.labels
    }
    return BandlimitedFunction(blf.group, blf.space, blf.dual, data)


def bessel_potential(blf: BandlimitedFunction, weight: Weight, s: float) -> BandlimitedFunction:
    """(I - Delta)^s: multiply the block at sigma by (1 + gamma(sigma)^2)^s."""
    return pseudo_diff(blf, SpectralSymbol("bessel", s=float(s)), weight)


# -- convolution ---------------------------------------------------------------------


def convolve_spectral(f: BandlimitedFunction, g: BandlimitedFunction) -> BandlimitedFunction:
    """Convolution via coefficient blocks; needs an algebra value space."""
    f._compatible(g)
    space = f.space
    space._require_algebra()
    data = {}
    for lab in f.dual.labels:
        a, b = f.data[lab], g.data[lab]
        if space.norm == "operator":
            data[lab] = np.einsum("ikab,kjbc->ijac", a, b)
        else:
            data[lab] = np.einsum("ika,kja->ija", a, b)
    return BandlimitedFunction(f.group, space, f.dual, data)


def convolve_direct(f: GridFunction, g: GridFunction) -> GridFunction:
    """Convolution by quadrature over the shared grid.

    Requires the grid's node set to be closed under the group law (finite
    groups, uniform circle grids); exact for band-limited inputs within
    the rule's band.
    """
    f._compatible(g)
    space = f.space
    space._require_algebra()
    rule = f.rule
    idx = rule.group.convolution_index(rule)
    shifted = g.samples[idx]  # (M, K) + value_shape
    if space.norm == "operator":
        out = np.einsum("m,mab,mkbc->kac", rule.weights, f.samples, shifted)
    else:
        out = np.einsum("m,ma,mka->ka", rule.weights, f.samples, shifted)
    return GridFunction(rule, space, out)
