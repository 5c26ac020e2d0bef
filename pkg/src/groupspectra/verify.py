"""Numerical verification of the norm inequalities on band-limited functions.

Every check compares two concretely computed numbers.  A check record
carries the two sides, the constant in the bound, the achieved slack, and
enough parameters to reproduce it.  The uniform convention is

    slack >= 0  <=>  the check passes,

where equality checks use slack = tol - |lhs - rhs| and one-sided bounds
use slack = rhs + tol - lhs, with tol scaled by the magnitudes involved.

The Sobolev embedding is checked in two variants on purpose.  The stated
constant kappa = sum of d (1 + gamma^2)^(t - s) is what one would copy
down from the statement of the bound; following the Cauchy-Schwarz step
in its proof instead yields kappa* = sum of d^3 (1 + gamma^2)^(t - s),
which differs once some irrep has dimension greater than one.  The suite
records both: the kappa* variant is expected to hold everywhere, while
the kappa variant fails on nonabelian groups for coefficient packs
concentrated on a higher-dimensional irrep, and those failures are
reported as findings rather than as suite errors.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field

import numpy as np

from . import __version__
from .errors import ConfigurationError
from .fourier import BandlimitedFunction, GridFunction, forward, synthesize
from .groups import CompactGroup, QuadratureRule, TruncatedDual, make_group
from .operators import SpectralSymbol, bessel_potential, convolve_direct, convolve_spectral, pseudo_diff
from .spectra import Weight, barron_norm, make_weight, sobolev_norm
from .values import ValueSpace, make_value_space

PROFILES = {
    "strict": {"finite": 1e-13, "quadrature": 1e-10},
    "default": {"finite": 1e-12, "quadrature": 1e-9},
    "loose": {"finite": 1e-10, "quadrature": 1e-7},
}

INTERPOLATION_GRID = tuple(
    (r, t, a)
    for r in (0.0, 1.0, 2.0)
    for t in (1.0, 2.0, 4.0)
    if r <= t
    for a in (0.25, 0.5, 0.75)
)

SOBOLEV_PAIRS = ((0.0, 1.0), (1.0, 2.0), (2.0, 0.0), (0.5, 0.5))

FAMILIES = ("dense", "single_mode", "single_irrep_flat", "flat")


@dataclass(frozen=True)
class CheckResult:
    name: str
    variant: str
    lhs: float
    rhs: float
    constant: float | None
    slack: float
    passed: bool
    params: dict

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "variant": self.variant,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "constant": self.constant,
            "slack": self.slack,
            "pass": self.passed,
            "params": self.params,
        }


def _equality(name, variant, lhs, rhs, tol, params, constant=None) -> CheckResult:
    scale = max(1.0, abs(lhs), abs(rhs))
    slack = tol * scale - abs(lhs - rhs)
    return CheckResult(name, variant, float(lhs), float(rhs), constant, float(slack), slack >= 0.0, params)


def _bound(name, variant, lhs, rhs, tol, params, constant=None) -> CheckResult:
    scale = max(1.0, abs(lhs), abs(rhs))
    slack = rhs + tol * scale - lhs
    return CheckResult(name, variant, float(lhs), float(rhs), constant, float(slack), slack >= 0.0, params)


# -- constants from the theory -----------------------------------------------------


def compute_rho(dual: TruncatedDual) -> int:
    """Largest irrep dimension in the truncated dual."""
    return dual.max_dim()


def compute_kappa(dual: TruncatedDual, weight: Weight, s: float, t: float) -> float:
    """The stated Sobolev embedding constant: sum of d (1 + gamma^2)^(t - s)."""
    return sum(dual.dim(lab) * weight.factor(lab, t - s) for lab in dual.labels)


def compute_kappa_star(dual: TruncatedDual, weight: Weight, s: float, t: float) -> float:
    """The proof-implied constant: sum of d^3 (1 + gamma^2)^(t - s)."""
    return sum(dual.dim(lab) ** 3 * weight.factor(lab, t - s) for lab in dual.labels)


# -- individual checks ----------------------------------------------------------------


def check_bessel_isometry(blf, weight, s, tol, params) -> CheckResult:
    lifted = bessel_potential(blf, weight, s)
    lhs = barron_norm(lifted, weight, 0.0).value
    rhs = barron_norm(blf, weight, 2.0 * s).value
    return _equality("bessel_isometry", "equality", lhs, rhs, tol, dict(params, s=s))


def check_interpolation(blf, weight, r, t, alpha, tol, params, equality=False) -> CheckResult:
    s = alpha * r + (1.0 - alpha) * t
    lhs = barron_norm(blf, weight, s).value
    rhs = barron_norm(blf, weight, r).value ** alpha * barron_norm(blf, weight, t).value ** (
        1.0 - alpha
    )
    p = dict(params, r=r, t=t, alpha=alpha, s=s)
    if equality:
        return _equality("interpolation", "single_mode_equality", lhs, rhs, tol, p)
    return _bound("interpolation", "inequality", lhs, rhs, tol, p)


def check_order_embedding(blf, weight, r, t, tol, params) -> CheckResult:
    if r > t:
        raise ConfigurationError(f"order embedding needs r <= t, got r={r}, t={t}")
    lhs = barron_norm(blf, weight, r).value
    rhs = barron_norm(blf, weight, t).value
    return _bound("order_embedding", "inequality", lhs, rhs, tol, dict(params, r=r, t=t))


def check_pseudodiff_bound(blf, symbol, weight, s, t, tol, params) -> CheckResult:
    moved = pseudo_diff(blf, symbol, weight)
    lhs = barron_norm(moved, weight, t).value
    constant = max(
        weight.factor(lab, (t - s) / 2.0) * abs(symbol.value(lab, weight))
        for lab in blf.dual.labels
    )
    rhs = constant * barron_norm(blf, weight, s).value
    return _bound(
        "pseudodiff_bound", "inequality", lhs, rhs, tol, dict(params, s=s, t=t), constant
    )


def check_convolution_identity(f, g, rule, tol, params) -> CheckResult:
    """Spectral product against quadrature convolution, coefficient by coefficient."""
    direct = convolve_direct(synthesize(f, rule), synthesize(g, rule))
    spectral = convolve_spectral(f, g)
    gap = forward(direct, f.dual).max_abs_diff(spectral)
    scale = max(1.0, spectral.max_abs())
    slack = tol * scale - gap
    return CheckResult(
        "convolution", "spectral_identity", float(gap), 0.0, None, float(slack), slack >= 0.0, params
    )


def check_convolution_l1_bound(f, g, weight, s, l1_rule, tol, params) -> CheckResult:
    rho = float(compute_rho(f.dual))
    lhs = barron_norm(convolve_spectral(f, g), weight, s).value
    f_l1 = synthesize(f, l1_rule).lp_norm(1)
    rhs = rho * f_l1 * barron_norm(g, weight, s).value
    return _bound(
        "convolution", "l1_bound", lhs, rhs, tol, dict(params, s=s, rho=rho), rho
    )


def check_sobolev_embedding(blf, weight, s, t, tol, params) -> tuple[CheckResult, CheckResult]:
    """Both variants: the stated constant and the proof-implied one."""
    lhs = barron_norm(blf, weight, t).value
    h = sobolev_norm(blf, weight, s).value
    kappa = compute_kappa(blf.dual, weight, s, t)
    kappa_star = compute_kappa_star(blf.dual, weight, s, t)
    p = dict(params, s=s, t=t, kappa=kappa, kappa_star=kappa_star)
    stated = _bound(
        "sobolev_embedding", "kappa_stated", lhs, math.sqrt(kappa) * h, tol, p, math.sqrt(kappa)
    )
    star = _bound(
        "sobolev_embedding", "kappa_star", lhs, math.sqrt(kappa_star) * h, tol, p, math.sqrt(kappa_star)
    )
    return stated, star


def check_linf_embedding(blf, weight, s, tol, params, dense_rule=None, tight=False) -> CheckResult:
    if dense_rule is None:
        points = blf.group.dense_elements(blf.group.quadrature(blf.band))
        values = blf.evaluate(points)
    else:
        values = synthesize(blf, dense_rule).samples
    lhs = float(np.max(blf.space.norms(values)))
    rhs = barron_norm(blf, weight, s).value
    p = dict(params, s=s)
    if tight:
        return _equality("linf_embedding", "tight_single_mode", lhs, rhs, tol, p)
    return _bound("linf_embedding", "inequality", lhs, rhs, tol, p)


# -- random test functions ---------------------------------------------------------------


def unit_value(space: ValueSpace, rng: np.random.Generator) -> np.ndarray:
    """A value of A-norm one (exactly, up to rounding), with random direction."""
    if space.norm == "operator":
        z = (rng.normal(size=(space.dim, space.dim)) + 1j * rng.normal(size=(space.dim, space.dim)))
        q, r = np.linalg.qr(z)
        d = np.diag(r)
        return q * (d / np.abs(d))  # fix the phase ambiguity deterministically
    phases = np.exp(2j * np.pi * rng.random(space.dim))
    if space.norm == "l1":
        return phases / space.dim
    if space.norm == "l2":
        return phases / math.sqrt(space.dim)
    return phases


def make_test_function(
    group: CompactGroup,
    space: ValueSpace,
    dual: TruncatedDual,
    rng: np.random.Generator,
    index: int,
) -> tuple[BandlimitedFunction, dict]:
    """One member of the cycling test family; returns the function and its pedigree."""
    family = FAMILIES[index % len(FAMILIES)]
    blf = BandlimitedFunction(group, space, dual)
    labels = dual.labels
    meta = {"family": family, "fn": index}
    if family == "dense":
        for lab in labels:
            shape = blf.data[lab].shape
            blf.data[lab][:] = (rng.normal(size=shape) + 1j * rng.normal(size=shape)) / math.sqrt(2.0)
    elif family == "single_mode":
        lab = labels[int(rng.integers(len(labels)))]
        d = dual.dim(lab)
        i, j = int(rng.integers(d)), int(rng.integers(d))
        blf.set_entry(lab, i, j, unit_value(space, rng))
        meta.update(sigma=int(lab), i=i, j=j)
    elif family == "single_irrep_flat":
        # Concentrated on the largest irrep with unit-norm entries: the
        # family that separates the two Sobolev constants.
        lab = max(labels, key=lambda l: (dual.dim(l), l))
        d = dual.dim(lab)
        for i in range(d):
            for j in range(d):
                blf.set_entry(lab, i, j, unit_value(space, rng))
        meta.update(sigma=int(lab))
    else:
        for lab in labels:
            d = dual.dim(lab)
            for i in range(d):
                for j in range(d):
                    blf.set_entry(lab, i, j, unit_value(space, rng))
    return blf, meta


# -- suite configuration --------------------------------------------------------------------


@dataclass
class SuiteConfig:
    groups: list = field(default_factory=list)
    bands: list = field(default_factory=list)
    spaces: list = field(default_factory=list)
    weights: list = field(default_factory=lambda: ["canonical"])
    orders: list = field(default_factory=lambda: [0.0, 0.5, 1.0, 2.0])
    functions_per_case: int = 50
    seed: int = 20240801
    profile: str = "default"

    @classmethod
    def default(cls) -> "SuiteConfig":
        return cls(
            groups=[
                {"kind": "cyclic", "N": 8},
                {"kind": "dihedral", "n": 4},
                {"kind": "torus"},
                {"kind": "su2"},
            ],
            bands=[4, 4, 2, 1],
        )

    def validate(self) -> None:
        if not self.groups:
            raise ConfigurationError("suite config needs at least one group")
        if len(self.bands) != len(self.groups):
            raise ConfigurationError(
                f"got {len(self.bands)} bands for {len(self.groups)} groups; they pair up one to one"
            )
        for band in self.bands:
            if not isinstance(band, int) or band < 0:
                raise ConfigurationError(f"bands must be integers >= 0, got {band!r}")
        if not self.spaces:
            raise ConfigurationError("suite config needs at least one value space")
        if not self.weights:
            raise ConfigurationError("suite config needs at least one weight")
        if not self.orders or not all(isinstance(s, (int, float)) for s in self.orders):
            raise ConfigurationError("orders must be a non-empty list of numbers")
        if not isinstance(self.functions_per_case, int) or self.functions_per_case < 1:
            raise ConfigurationError(
                f"functions_per_case must be a positive integer, got {self.functions_per_case!r}"
            )
        if not isinstance(self.seed, int):
            raise ConfigurationError(f"seed must be an integer, got {self.seed!r}")
        if self.profile not in PROFILES:
            raise ConfigurationError(
                f"profile must be one of {sorted(PROFILES)}, got {self.profile!r}"
            )
        for gdesc in self.groups:
            make_group(gdesc)
        for sdesc in self.spaces:
            make_value_space(sdesc)
        for wdesc in self.weights:
            if wdesc != "canonical":
                make_weight(wdesc)

    def to_json(self) -> dict:
        return {
            "groups": self.groups,
            "bands": self.bands,
            "spaces": self.spaces,
            "weights": self.weights,
            "orders": [float(s) for s in self.orders],
            "functions_per_case": self.functions_per_case,
            "seed": self.seed,
            "profile": self.profile,
        }

    @classmethod
    def from_json(cls, obj: dict) -> "SuiteConfig":
        if not isinstance(obj, dict):
            raise ConfigurationError(f"suite config must be an object, got {type(obj).__name__}")
        known = {
            "groups",
            "bands",
            "spaces",
            "weights",
            "orders",
            "functions_per_case",
            "seed",
            "profile",
        }
        extra = set(obj) - known
        if extra:
            raise ConfigurationError(f"unknown suite config fields {sorted(extra)}")
        base = cls.default()
        base.spaces = default_spaces()
        merged = {**base.__dict__, **obj}
        config = cls(**merged)
        config.validate()
        return config


def default_spaces() -> list[dict]:
    return [
        {"dim": 1, "norm": "l2", "algebra": True},
        {"dim": 3, "norm": "l1", "algebra": False},
        {"dim": 2, "norm": "operator", "algebra": True},
    ]


def default_config() -> SuiteConfig:
    config = SuiteConfig.default()
    config.spaces = default_spaces()
    return config


def resolve_weight(wdesc, group: CompactGroup) -> Weight:
    if wdesc == "canonical":
        return Weight.canonical(group)
    if isinstance(wdesc, Weight):
        return wdesc
    return make_weight(wdesc)


# -- the suite ---------------------------------------------------------------------------------


@dataclass
class VerificationReport:
    environment: dict
    checks: list
    kappa_census: list

    @property
    def failed(self) -> list:
        return [c for c in self.checks if not c.passed]

    @property
    def ok(self) -> bool:
        """True when every check passes, not counting the kappa_stated variant."""
        return all(c.passed for c in self.checks if c.variant != "kappa_stated")

    def summary(self) -> dict:
        total = len(self.checks)
        failed = len(self.failed)
        kappa_stated_failed = sum(
            1 for c in self.checks if c.variant == "kappa_stated" and not c.passed
        )
        return {
            "total": total,
            "passed": total - failed,
            "failed": failed,
            "kappa_stated_failed": kappa_stated_failed,
            "ok": self.ok,
        }

    def to_json(self) -> dict:
        return {
            "environment": self.environment,
            "summary": self.summary(),
            "kappa_census": self.kappa_census,
            "checks": [c.to_json() for c in self.checks],
        }


def run_suite(config: SuiteConfig | None = None) -> VerificationReport:
    """Run every check family over the configured cases, deterministically.

    The RNG stream is keyed by (seed, case index) so reordering cases or
    resizing one case cannot silently shift every later draw.
    """
    if config is None:
        config = default_config()
    config.validate()
    tols = PROFILES[config.profile]
    checks: list[CheckResult] = []
    census: dict[tuple, dict] = {}
    orders = [float(s) for s in config.orders]
    emb_pairs = [(r, t) for r in orders for t in orders if r < t]
    case_index = 0
    for gdesc, band in zip(config.groups, config.bands):
        group = make_group(gdesc)
        tol = tols["finite"] if group.is_finite else tols["quadrature"]
        dual = group.truncated_dual(band)
        rule = group.quadrature(band)
        l1_rule = rule if group.is_finite else group.quadrature(band + 1)
        dense_rule = _dense_rule(group, band)
        for sdesc in config.spaces:
            space = make_value_space(sdesc)
            for wdesc in config.weights:
                weight = resolve_weight(wdesc, group)
                rng = np.random.default_rng(np.random.SeedSequence((config.seed, case_index)))
                case = {
                    "group": group.descriptor(),
                    "band": band,
                    "space": space.descriptor(),
                    "weight": weight.to_json(),
                }
                fns = [
                    make_test_function(group, space, dual, rng, k)
                    for k in range(config.functions_per_case)
                ]
                checks.extend(
                    _case_checks(
                        group, space, weight, dual, rule, l1_rule, dense_rule,
                        fns, orders, emb_pairs, tol, case, rng, census,
                    )
                )
                case_index += 1
    environment = {
        "package": "groupspectra",
        "version": __version__,
        "profile": config.profile,
        "tolerances": tols,
        "config": config.to_json(),
    }
    return VerificationReport(environment, checks, list(census.values()))


def _dense_rule(group: CompactGroup, band: int) -> QuadratureRule:
    """The dense sup-sampling grid packaged as a rule so matrices are cached."""
    base = group.quadrature(band)
    points = group.dense_elements(base, factor=10)
    weights = np.full(len(points), 1.0 / len(points))
    return QuadratureRule(group, band, points, weights)


def _case_checks(
    group, space, weight, dual, rule, l1_rule, dense_rule,
    fns, orders, emb_pairs, tol, case, rng, census,
):
    n_orders = len(orders)
    out: list[CheckResult] = []
    for k, (blf, meta) in enumerate(fns):
        params = dict(case, **meta)
        out.append(check_bessel_isometry(blf, weight, orders[k % n_orders], tol, params))

        r, t, alpha = INTERPOLATION_GRID[k % len(INTERPOLATION_GRID)]
        out.append(check_interpolation(blf, weight, r, t, alpha, tol, params))
        if meta["family"] == "single_mode":
            out.append(check_interpolation(blf, weight, r, t, alpha, tol, params, equality=True))

        if emb_pairs:
            for pick in (2 * k, 2 * k + 1):
                er, et = emb_pairs[pick % len(emb_pairs)]
                out.append(check_order_embedding(blf, weight, er, et, tol, params))

        s_pd = orders[k % n_orders]
        t_pd = orders[(k + 1) % n_orders]
        table = tuple(
            (int(lab), complex(rng.normal(), rng.normal()))
            for lab in dual.labels
        )
        symbol = SpectralSymbol("table", table=table)
        out.append(check_pseudodiff_bound(blf, symbol, weight, s_pd, t_pd, tol, params))

        s_sob, t_sob = SOBOLEV_PAIRS[k % len(SOBOLEV_PAIRS)]
        stated, star = check_sobolev_embedding(blf, weight, s_sob, t_sob, tol, params)
        out.extend([stated, star])
        _census_update(census, case, weight, s_sob, t_sob, stated, star)

        tight = meta["family"] == "single_mode" and meta.get("i") == meta.get("j")
        s_inf = 0.0 if tight else orders[(k + 2) % n_orders]
        out.append(
            check_linf_embedding(
                blf, weight, s_inf, tol, params, dense_rule=dense_rule, tight=tight
            )
        )

        if space.algebra:
            other, other_meta = fns[(k + 1) % len(fns)]
            pair_params = dict(params, partner=other_meta["fn"])
            out.append(
                check_convolution_l1_bound(
                    blf, other, weight, orders[k % n_orders], l1_rule, tol, pair_params
                )
            )
            if group.kind != "su2":
                out.append(check_convolution_identity(blf, other, rule, tol, pair_params))
    return out


def _census_update(census, case, weight, s, t, stated, star):
    key = (json.dumps(case["group"], sort_keys=True), json.dumps(case["weight"], sort_keys=True), s, t)
    row = census.get(key)
    if row is None:
        row = {
            "group": case["group"],
            "band": case["band"],
            "weight": case["weight"],
            "s": s,
            "t": t,
            "kappa": stated.params["kappa"],
            "kappa_star": stated.params["kappa_star"],
            "checks": 0,
            "kappa_stated_failures": 0,
            "kappa_star_failures": 0,
        }
        census[key] = row
    row["checks"] += 1
    row["kappa_stated_failures"] += 0 if stated.passed else 1
    row["kappa_star_failures"] += 0 if star.passed else 1
