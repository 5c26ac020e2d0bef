"""Compact groups with exact Haar quadrature and truncated unitary duals.

Four groups are provided: the cyclic group Z_N, the dihedral group D_n
(order 2n), the circle group T identified with [0, 1) under addition mod 1,
and SU(2) whose elements are unit pairs (alpha, beta).

Conventions fixed here and relied on everywhere else:

* Irrep labels are plain integers: the character index k for Z_N, a row
  index into the irrep table for D_n, the frequency n for T, and twice the
  spin (twoL = 2l) for SU(2), so that labels are exact dict keys.
* Dual labels are listed in a canonical deterministic order: 0, -1, 1,
  -2, 2, ... for T; increasing twoL for SU(2); table order for the finite
  groups.  All coefficient sums iterate in this order, row-major over
  matrix entries, so repeated runs are bit-reproducible.
* A quadrature rule requested at band B integrates products of two matrix
  coefficients drawn from irreps of band up to 2B exactly (margin factor
  two), so the forward transform of a band-B function against a band-B
  dual is exact, with headroom.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

import numpy as np

from .errors import ConfigurationError, InvalidElementError, UnknownIrrepError

UNIT_TOL = 1e-12


@dataclass(frozen=True)
class Irrep:
    """One irreducible unitary representation: its label and dimension."""

    label: int
    dim: int


class TruncatedDual:
    """A finite, canonically ordered slice of a group's unitary dual."""

    def __init__(self, group: "CompactGroup", band: int, irreps: Sequence[Irrep]):
        self.group = group
        self.band = int(band)
        self.irreps = tuple(irreps)
        self._by_label = {ir.label: ir for ir in self.irreps}
        if len(self._by_label) != len(self.irreps):
            raise ConfigurationError("dual contains a repeated irrep label")

    @property
    def labels(self) -> tuple[int, ...]:
        return tuple(ir.label for ir in self.irreps)

    def __contains__(self, label: int) -> bool:
        return label in self._by_label

    def __len__(self) -> int:
        return len(self.irreps)

    def dim(self, label: int) -> int:
        try:
            return self._by_label[label].dim
        except KeyError:
            raise UnknownIrrepError(
                f"label {label!r} is not in the band-{self.band} dual of {self.group}"
            ) from None

    def max_dim(self) -> int:
        return max(ir.dim for ir in self.irreps)

    def __repr__(self) -> str:
        return f"TruncatedDual({self.group}, band={self.band}, size={len(self)})"


class QuadratureRule:
    """Nodes and weights realizing the normalized Haar integral exactly.

    Exactness contract: integrating u^sigma_ij * conj(u^tau_kl) over the
    rule reproduces the Schur orthogonality value for every sigma, tau with
    band up to twice the declared band.
    """

    def __init__(self, group: "CompactGroup", band: int, nodes: list, weights: np.ndarray):
        self.group = group
        self.band = int(band)
        self.nodes = nodes
        self.weights = np.asarray(weights, dtype=float)
        if len(self.nodes) != self.weights.shape[0]:
            raise ConfigurationError("quadrature nodes and weights differ in length")
        self._matrices: dict[int, np.ndarray] = {}

    def __len__(self) -> int:
        return len(self.nodes)

    def coefficient_matrices(self, label: int) -> np.ndarray:
        """All irrep matrices at the rule's nodes, shape (K, d, d). Cached."""
        cached = self._matrices.get(label)
        if cached is None:
            cached = self.group.irrep_matrices(label, self.nodes)
            self._matrices[label] = cached
        return cached

    def __repr__(self) -> str:
        return f"QuadratureRule({self.group}, band={self.band}, nodes={len(self)})"


class CompactGroup:
    """Common interface of the four concrete groups."""

    kind: str
    is_finite = False
    is_abelian = False

    # -- element arithmetic -------------------------------------------------

    def multiply(self, x, y):
        raise NotImplementedError

    def inverse(self, x):
        raise NotImplementedError

    def identity(self):
        raise NotImplementedError

    def validate_element(self, x):
        """Return the canonical form of x, raising InvalidElementError otherwise."""
        raise NotImplementedError

    def random_element(self, rng: np.random.Generator):
        raise NotImplementedError

    # -- dual and representations -------------------------------------------

    def truncated_dual(self, band: int) -> TruncatedDual:
        if band < 0:
            raise ConfigurationError(f"band must be >= 0, got {band}")
        return TruncatedDual(self, band, self._dual_irreps(band))

    def _dual_irreps(self, band: int) -> list[Irrep]:
        raise NotImplementedError

    def irrep(self, label: int) -> Irrep:
        """The irrep with this label; raises UnknownIrrepError for bad labels."""
        raise NotImplementedError

    def irrep_matrix(self, label: int, x) -> np.ndarray:
        """The unitary matrix of irrep `label` at element x, shape (d, d)."""
        return self.irrep_matrices(label, [x])[0]

    def irrep_matrices(self, label: int, nodes: Iterable) -> np.ndarray:
        """Irrep matrices at many elements at once, shape (K, d, d)."""
        raise NotImplementedError

    # -- quadrature -----------------------------------------------------------

    def quadrature(self, band: int) -> QuadratureRule:
        if band < 0:
            raise ConfigurationError(f"band must be >= 0, got {band}")
        return self._quadrature(band)

    def _quadrature(self, band: int) -> QuadratureRule:
        raise NotImplementedError

    def dense_elements(self, rule: QuadratureRule, factor: int = 10) -> list:
        """A deterministic sampling grid at least `factor` times denser than the rule.

        Used for grid-sup lower bounds of the L-infinity norm; always
        contains the identity.  Finite groups return every element, which
        makes the grid sup exact.
        """
        raise NotImplementedError

    # -- convolution support ---------------------------------------------------

    def convolution_index(self, rule: QuadratureRule) -> np.ndarray:
        """Index table idx[m, k] with node[idx[m, k]] = node[m]^-1 * node[k].

        Only defined when the rule's node set is closed under the group law;
        concrete groups without such grids do not override this.
        """
        from .errors import UnsupportedGridError

        raise UnsupportedGridError(
            f"{self.kind} quadrature nodes are not closed under the group law"
        )

    # -- serialization -----------------------------------------------------------

    def descriptor(self) -> dict:
        raise NotImplementedError

    def _key(self) -> tuple:
        raise NotImplementedError

    def __eq__(self, other) -> bool:
        return isinstance(other, CompactGroup) and self._key() == other._key()

    def __hash__(self) -> int:
        return hash(self._key())

    def __repr__(self) -> str:
        params = ",".join(f"{k}={v}" for k, v in self.descriptor().items() if k != "kind")
        return f"{self.kind}({params})"


class CyclicGroup(CompactGroup):
    """Z_N with elements 0..N-1 under addition mod N."""

    kind = "cyclic"
    is_finite = True
    is_abelian = True

    def __init__(self, N: int):
        if int(N) < 1:
            raise ConfigurationError(f"cyclic group needs N >= 1, got {N}")
        self.N = int(N)
        self.order = self.N

    def _key(self):
        return ("cyclic", self.N)

    def descriptor(self) -> dict:
        return {"kind": "cyclic", "N": self.N}

    def elements(self) -> list[int]:
        return list(range(self.N))

    def validate_element(self, x) -> int:
        xi = _as_index(x, self.N, self)
        return xi

    def multiply(self, x, y) -> int:
        return (self.validate_element(x) + self.validate_element(y)) % self.N

    def inverse(self, x) -> int:
        return (-self.validate_element(x)) % self.N

    def identity(self) -> int:
        return 0

    def random_element(self, rng) -> int:
        return int(rng.integers(0, self.N))

    def _dual_irreps(self, band: int) -> list[Irrep]:
        return [Irrep(k, 1) for k in range(self.N)]

    def irrep(self, label: int) -> Irrep:
        k = _as_label_int(label, self)
        if not 0 <= k < self.N:
            raise UnknownIrrepError(f"cyclic irrep label must be in 0..{self.N - 1}, got {k}")
        return Irrep(k, 1)

    def irrep_matrices(self, label: int, nodes) -> np.ndarray:
        k = self.irrep(label).label
        a = np.array([self.validate_element(x) for x in nodes], dtype=float)
        return np.exp(2j * math.pi * k * a / self.N)[:, None, None]

    def _quadrature(self, band: int) -> QuadratureRule:
        w = np.full(self.N, 1.0 / self.N)
        return QuadratureRule(self, band, self.elements(), w)

    def dense_elements(self, rule, factor: int = 10) -> list[int]:
        return self.elements()

    def convolution_index(self, rule: QuadratureRule) -> np.ndarray:
        n = np.arange(self.N)
        return (n[None, :] - n[:, None]) % self.N


class DihedralGroup(CompactGroup):
    """D_n of order 2n; element eps*n + a encodes s^eps r^a.

    Presentation r^n = s^2 = e, s r s = r^-1, which gives the product rule
    (e1, a1)(e2, a2) = (e1 xor e2, a2 + (-1)^e2 a1 mod n).
    """

    kind = "dihedral"
    is_finite = True

    def __init__(self, n: int):
        if int(n) < 3:
            raise ConfigurationError(f"dihedral group needs n >= 3, got {n}")
        self.n = int(n)
        self.order = 2 * self.n
        self._irreps = self._build_irrep_table()

    def _key(self):
        return ("dihedral", self.n)

    def descriptor(self) -> dict:
        return {"kind": "dihedral", "n": self.n}

    def elements(self) -> list[int]:
        return list(range(self.order))

    def _split(self, x: int) -> tuple[int, int]:
        return x // self.n, x % self.n

    def validate_element(self, x) -> int:
        return _as_index(x, self.order, self)

    def multiply(self, x, y) -> int:
        e1, a1 = self._split(self.validate_element(x))
        e2, a2 = self._split(self.validate_element(y))
        sign = -1 if e2 else 1
        return ((e1 ^ e2) * self.n) + (a2 + sign * a1) % self.n

    def inverse(self, x) -> int:
        e, a = self._split(self.validate_element(x))
        if e:
            return x
        return (-a) % self.n

    def identity(self) -> int:
        return 0

    def random_element(self, rng) -> int:
        return int(rng.integers(0, self.order))

    # Irrep table order: trivial, reflection sign, (for even n) the two
    # rotation signs, then the 2-dim irreps rho_h for h = 1..ceil(n/2)-1.
    def _build_irrep_table(self) -> list[Irrep]:
        table = [Irrep(0, 1), Irrep(1, 1)]
        if self.n % 2 == 0:
            table += [Irrep(2, 1), Irrep(3, 1)]
        start = len(table)
        n_two_dim = (self.n - 1) // 2 if self.n % 2 else self.n // 2 - 1
        table += [Irrep(start + h, 2) for h in range(n_two_dim)]
        return table

    def _dual_irreps(self, band: int) -> list[Irrep]:
        return list(self._irreps)

    def irrep(self, label: int) -> Irrep:
        k = _as_label_int(label, self)
        if not 0 <= k < len(self._irreps):
            raise UnknownIrrepError(
                f"dihedral D_{self.n} has irreps 0..{len(self._irreps) - 1}, got {k}"
            )
        return self._irreps[k]

    def _two_dim_freq(self, label: int) -> int:
        first = 4 if self.n % 2 == 0 else 2
        return label - first + 1

    def irrep_matrices(self, label: int, nodes) -> np.ndarray:
        ir = self.irrep(label)
        idx = np.array([self.validate_element(x) for x in nodes], dtype=int)
        eps, a = idx // self.n, idx % self.n
        if ir.dim == 1:
            even = self.n % 2 == 0
            if label == 0:
                chi = np.ones(len(idx))
            elif label == 1:
                chi = np.where(eps, -1.0, 1.0)
            elif even and label == 2:
                chi = np.where(a % 2, -1.0, 1.0)
            elif even and label == 3:
                chi = np.where((a + eps) % 2, -1.0, 1.0)
            else:  # pragma: no cover - table construction guarantees coverage
                raise UnknownIrrepError(f"bad 1-dim dihedral label {label}")
            return chi.astype(complex)[:, None, None]
        h = self._two_dim_freq(label)
        w = np.exp(2j * math.pi * h * a / self.n)
        out = np.zeros((len(idx), 2, 2), dtype=complex)
        rot = eps == 0
        out[rot, 0, 0] = w[rot]
        out[rot, 1, 1] = np.conj(w[rot])
        out[~rot, 0, 1] = np.conj(w[~rot])
        out[~rot, 1, 0] = w[~rot]
        return out

    def _quadrature(self, band: int) -> QuadratureRule:
        w = np.full(self.order, 1.0 / self.order)
        return QuadratureRule(self, band, self.elements(), w)

    def dense_elements(self, rule, factor: int = 10) -> list[int]:
        return self.elements()

    def convolution_index(self, rule: QuadratureRule) -> np.ndarray:
        idx = np.empty((self.order, self.order), dtype=int)
        for m in range(self.order):
            minv = self.inverse(m)
            for k in range(self.order):
                idx[m, k] = self.multiply(minv, k)
        return idx


class TorusGroup(CompactGroup):
    """The circle group, elements in [0, 1) under addition mod 1."""

    kind = "torus"
    is_abelian = True

    def _key(self):
        return ("torus",)

    def descriptor(self) -> dict:
        return {"kind": "torus"}

    def validate_element(self, x) -> float:
        try:
            xf = float(x)
        except (TypeError, ValueError):
            raise InvalidElementError(f"torus element must be a real number, got {x!r}") from None
        if not math.isfinite(xf):
            raise InvalidElementError(f"torus element must be finite, got {xf}")
        return xf % 1.0

    def multiply(self, x, y) -> float:
        return (self.validate_element(x) + self.validate_element(y)) % 1.0

    def inverse(self, x) -> float:
        return (-self.validate_element(x)) % 1.0

    def identity(self) -> float:
        return 0.0

    def random_element(self, rng) -> float:
        return float(rng.random())

    def _dual_irreps(self, band: int) -> list[Irrep]:
        labels = [0]
        for n in range(1, band + 1):
            labels += [-n, n]
        return [Irrep(n, 1) for n in labels]

    def irrep(self, label: int) -> Irrep:
        return Irrep(_as_label_int(label, self), 1)

    def irrep_matrices(self, label: int, nodes) -> np.ndarray:
        n = self.irrep(label).label
        x = np.array([self.validate_element(v) for v in nodes], dtype=float)
        return np.exp(2j * math.pi * n * x)[:, None, None]

    def _quadrature(self, band: int) -> QuadratureRule:
        # M >= 4*band + 1 uniform nodes integrate e^{2 pi i k x} exactly for
        # |k| <= 4*band, i.e. products of two coefficients of band <= 2*band.
        m = 4 * band + 1
        nodes = [k / m for k in range(m)]
        return QuadratureRule(self, band, nodes, np.full(m, 1.0 / m))

    def dense_elements(self, rule, factor: int = 10) -> list[float]:
        m = factor * len(rule)
        return [k / m for k in range(m)]

    def convolution_index(self, rule: QuadratureRule) -> np.ndarray:
        m = len(rule)
        k = np.arange(m)
        return (k[None, :] - k[:, None]) % m


class SU2Group(CompactGroup):
    """SU(2): elements are pairs (alpha, beta) with |alpha|^2 + |beta|^2 = 1.

    The irrep of label twoL acts on homogeneous polynomials of degree twoL
    in two variables; matrices are taken in the orthonormalized monomial
    basis so they are unitary (the raw monomials have squared norms
    k!(twoL-k)!, which the entries absorb as sqrt-factorial ratios).
    """

    kind = "su2"

    def _key(self):
        return ("su2",)

    def descriptor(self) -> dict:
        return {"kind": "su2"}

    def validate_element(self, x) -> tuple[complex, complex]:
        try:
            alpha, beta = complex(x[0]), complex(x[1])
        except (TypeError, ValueError, IndexError):
            raise InvalidElementError(
                f"su2 element must be a pair (alpha, beta), got {x!r}"
            ) from None
        r = abs(alpha) ** 2 + abs(beta) ** 2
        if not math.isfinite(r) or abs(r - 1.0) > UNIT_TOL:
            raise InvalidElementError(
                f"su2 element needs |alpha|^2+|beta|^2 = 1 within {UNIT_TOL}, got {r!r}"
            )
        return (alpha, beta)

    def multiply(self, x, y) -> tuple[complex, complex]:
        a1, b1 = self.validate_element(x)
        a2, b2 = self.validate_element(y)
        # Product of [[a, b], [-conj(b), conj(a)]] matrices.
        return (a1 * a2 - b1 * b2.conjugate(), a1 * b2 + b1 * a2.conjugate())

    def inverse(self, x) -> tuple[complex, complex]:
        a, b = self.validate_element(x)
        return (a.conjugate(), -b)

    def identity(self) -> tuple[complex, complex]:
        return (1.0 + 0.0j, 0.0 + 0.0j)

    def random_element(self, rng) -> tuple[complex, complex]:
        v = rng.normal(size=4)
        v /= np.linalg.norm(v)
        return (complex(v[0], v[1]), complex(v[2], v[3]))

    def _dual_irreps(self, band: int) -> list[Irrep]:
        return [Irrep(twoL, twoL + 1) for twoL in range(2 * band + 1)]

    def irrep(self, label: int) -> Irrep:
        twoL = _as_label_int(label, self)
        if twoL < 0:
            raise UnknownIrrepError(f"su2 irrep label twoL must be >= 0, got {twoL}")
        return Irrep(twoL, twoL + 1)

    def irrep_matrices(self, label: int, nodes) -> np.ndarray:
        twoL = self.irrep(label).label
        pairs = [self.validate_element(x) for x in nodes]
        alpha = np.array([p[0] for p in pairs], dtype=complex)
        beta = np.array([p[1] for p in pairs], dtype=complex)
        return _su2_matrices(twoL, alpha, beta)

    def _quadrature(self, band: int) -> QuadratureRule:
        # Coordinates: alpha = cos(theta/2) e^{ia}, beta = sin(theta/2) e^{ib};
        # normalized Haar = (1/8 pi^2) sin(theta) dtheta da db.  A coefficient
        # of the twoL irrep is a degree-twoL polynomial in alpha, conj(alpha),
        # beta, conj(beta), so a product of two coefficients of band <= 2B has
        # phase frequencies up to 8B and, after phase averaging, cos(theta)
        # degree up to 4B.  Uniform phases with 8B+1 points and Gauss-Legendre
        # with 2B+1 points in cos(theta) therefore integrate all of them
        # exactly, giving the contracted factor-two margin.
        m_phase = 8 * band + 1
        n_t = 2 * band + 1
        t_nodes, t_weights = np.polynomial.legendre.leggauss(n_t)
        nodes: list[tuple[complex, complex]] = []
        weights: list[float] = []
        phases = [2.0 * math.pi * k / m_phase for k in range(m_phase)]
        for t, tw in zip(t_nodes, t_weights):
            c = math.sqrt((1.0 + t) / 2.0)
            s = math.sqrt((1.0 - t) / 2.0)
            w = (tw / 2.0) / (m_phase * m_phase)
            for pa in phases:
                ea = cmath.exp(1j * pa)
                for pb in phases:
                    nodes.append((c * ea, s * cmath.exp(1j * pb)))
                    weights.append(w)
        return QuadratureRule(self, band, nodes, np.array(weights))

    def dense_elements(self, rule, factor: int = 10) -> list[tuple[complex, complex]]:
        # Product grid in (phase_a, phase_b, theta), roughly tripled per axis
        # relative to the rule, plus the exact identity so that diagonal
        # matrix coefficients attain their sup |u_jj| = 1 on the grid.
        band = rule.band
        m_phase = 3 * (8 * band + 1)
        n_theta = 3 * (2 * band + 1) + 1
        out = [self.identity()]
        for it in range(n_theta):
            theta = math.pi * it / max(n_theta - 1, 1)
            c, s = math.cos(theta / 2.0), math.sin(theta / 2.0)
            for ka in range(m_phase):
                ea = cmath.exp(2j * math.pi * ka / m_phase)
                for kb in range(m_phase):
                    out.append((c * ea, s * cmath.exp(2j * math.pi * kb / m_phase)))
        return out


@lru_cache(maxsize=None)
def _su2_entry_terms(twoL: int) -> tuple:
    """Expansion data for the entries of the twoL irrep matrix.

    Entry (i, j) of the matrix is sum_m coeff * alpha^m * conj(beta)^(j-m)
    * beta^(i-m) * conj(alpha)^(twoL-j-i+m); the returned structure holds,
    per entry, the list of (coeff, pow_alpha, pow_conj_beta, pow_beta,
    pow_conj_alpha) terms with the orthonormalization ratio folded into
    coeff.
    """
    d = twoL + 1
    entries = []
    for i in range(d):
        row = []
        for j in range(d):
            norm_ratio = math.exp(
                0.5
                * (
                    math.lgamma(i + 1)
                    + math.lgamma(twoL - i + 1)
                    - math.lgamma(j + 1)
                    - math.lgamma(twoL - j + 1)
                )
            )
            terms = []
            for m in range(max(0, i + j - twoL), min(i, j) + 1):
                coeff = (
                    math.comb(j, m)
                    * math.comb(twoL - j, i - m)
                    * (-1.0) ** (j - m)
                    * norm_ratio
                )
                terms.append((coeff, m, j - m, i - m, twoL - j - i + m))
            row.append(tuple(terms))
        entries.append(tuple(row))
    return tuple(entries)


def _su2_matrices(twoL: int, alpha: np.ndarray, beta: np.ndarray) -> np.ndarray:
    """Batch-evaluate the twoL irrep matrix at unit pairs, shape (K, d, d)."""
    d = twoL + 1
    k = alpha.shape[0]
    # Power tables P[:, p] = z**p built by cumulative products.
    pow_a = np.ones((k, d + 1), dtype=complex)
    pow_ac = np.ones((k, d + 1), dtype=complex)
    pow_b = np.ones((k, d + 1), dtype=complex)
    pow_bc = np.ones((k, d + 1), dtype=complex)
    ac, bc = np.conj(alpha), np.conj(beta)
    for p in range(1, d + 1):
        pow_a[:, p] = pow_a[:, p - 1] * alpha
        pow_ac[:, p] = pow_ac[:, p - 1] * ac
        pow_b[:, p] = pow_b[:, p - 1] * beta
        pow_bc[:, p] = pow_bc[:, p - 1] * bc
    out = np.zeros((k, d, d), dtype=complex)
    entries = _su2_entry_terms(twoL)
    for i in range(d):
        for j in range(d):
            acc = out[:, i, j]
            for coeff, pa, pbc, pb, pac in entries[i][j]:
                acc += coeff * (pow_a[:, pa] * pow_bc[:, pbc] * pow_b[:, pb] * pow_ac[:, pac])
    return out


def _as_index(x, limit: int, group: CompactGroup) -> int:
    try:
        xi = int(x)
    except (TypeError, ValueError):
        raise InvalidElementError(f"{group.kind} element must be an integer, got {x!r}") from None
    if xi != x or not 0 <= xi < limit:
        raise InvalidElementError(
            f"{group.kind} element must be an integer in 0..{limit - 1}, got {x!r}"
        )
    return xi


def _as_label_int(label, group: CompactGroup) -> int:
    try:
        k = int(label)
    except (TypeError, ValueError):
        raise UnknownIrrepError(f"{group.kind} irrep label must be an integer, got {label!r}") from None
    if k != label:
        raise UnknownIrrepError(f"{group.kind} irrep label must be an integer, got {label!r}")
    return k


def make_group(descriptor: dict) -> CompactGroup:
    """Build a group from its JSON descriptor, e.g. {"kind": "cyclic", "N": 8}."""
    if not isinstance(descriptor, dict) or "kind" not in descriptor:
        raise ConfigurationError(f"group descriptor must be an object with 'kind', got {descriptor!r}")
    kind = descriptor["kind"]
    if kind == "cyclic":
        if "N" not in descriptor:
            raise ConfigurationError("cyclic descriptor needs 'N'")
        return CyclicGroup(descriptor["N"])
    if kind == "dihedral":
        if "n" not in descriptor:
            raise ConfigurationError("dihedral descriptor needs 'n'")
        return DihedralGroup(descriptor["n"])
    if kind == "torus":
        return TorusGroup()
    if kind == "su2":
        return SU2Group()
    raise ConfigurationError(f"unknown group kind {kind!r}")


def element_to_json(group: CompactGroup, x):
    """JSON form of an element: int, float, or [[re,im],[re,im]] for su2."""
    x = group.validate_element(x)
    if group.kind == "su2":
        a, b = x
        return [[a.real, a.imag], [b.real, b.imag]]
    return x


def element_from_json(group: CompactGroup, obj):
    if group.kind == "su2":
        try:
            a, b = obj
            x = (complex(a[0], a[1]), complex(b[0], b[1]))
        except (TypeError, ValueError, IndexError):
            raise InvalidElementError(f"su2 element JSON must be [[re,im],[re,im]], got {obj!r}") from None
        return group.validate_element(x)
    return group.validate_element(obj)
