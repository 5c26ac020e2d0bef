"""Sequence norms, weights, Barron and Sobolev norms."""

import math

import numpy as np
import pytest

from groupspectra.errors import ConfigurationError
from groupspectra.fourier import BandlimitedFunction, synthesize
from groupspectra.groups import CyclicGroup, DihedralGroup, SU2Group, TorusGroup
from groupspectra.spectra import (
    NormReport,
    Weight,
    barron_norm,
    make_weight,
    sobolev_norm,
    sp_norm,
)
from groupspectra.values import ValueSpace

from test_fourier import random_blf


def naive_barron(blf, weight, s):
    # Plain Python re-implementation used as an oracle.
    total = 0.0
    for lab in blf.dual.labels:
        d = blf.dual.dim(lab)
        g = weight.gamma(lab)
        for i in range(d):
            for j in range(d):
                entry = blf.entry(lab, i, j)
                total += d * (1.0 + g * g) ** (s / 2.0) * blf.space.norm_of(entry)
    return total


def naive_sobolev(blf, weight, s):
    total = 0.0
    for lab in blf.dual.labels:
        d = blf.dual.dim(lab)
        g = weight.gamma(lab)
        for i in range(d):
            for j in range(d):
                entry = blf.entry(lab, i, j)
                total += d * (1.0 + g * g) ** s * blf.space.norm_of(entry) ** 2
    return math.sqrt(total)


# -- weights ----------------------------------------------------------------------


def test_builtin_weights():
    assert Weight("abs_n").gamma(-3) == 3.0
    assert Weight("abs_n").gamma(0) == 0.0
    w = Weight("sqrt_l_lplus1")
    assert w.gamma(0) == 0.0
    assert w.gamma(2) == pytest.approx(math.sqrt(2.0))
    assert w.gamma(3) == pytest.approx(math.sqrt(1.5 * 2.5))
    assert Weight("constant", value=2.0).gamma(99) == 2.0
    assert Weight("constant").factor(5, 1.0) == 2.0
    assert Weight("abs_n").factor(2, 0.0) == 1.0


def test_table_weight():
    w = Weight("table", table=((0, 0.0), (1, 2.0), (4, 1.5)))
    assert w.gamma(4) == 1.5
    with pytest.raises(ConfigurationError, match="no entry"):
        w.gamma(2)
    with pytest.raises(ConfigurationError):
        Weight("table", table=((0, -1.0),))
    with pytest.raises(ConfigurationError):
        Weight("table", table=())
    with pytest.raises(ConfigurationError):
        Weight("lorentz")
    with pytest.raises(ConfigurationError):
        Weight("constant", value=-2.0)


def test_canonical_weights():
    assert Weight.canonical(TorusGroup()).name == "abs_n"
    assert Weight.canonical(CyclicGroup(8)).name == "abs_n"
    assert Weight.canonical(SU2Group()).name == "sqrt_l_lplus1"
    w = Weight.canonical(DihedralGroup(4))
    assert w.name == "constant" and w.gamma(4) == 1.0


def test_weight_json():
    assert make_weight({"builtin": "abs_n"}).name == "abs_n"
    w = make_weight({"builtin": "constant", "value": 3.0, "s": 2.0})
    assert w.gamma(0) == 3.0 and w.default_s == 2.0
    assert w.to_json() == {"builtin": "constant", "value": 3.0, "s": 2.0}
    t = make_weight({"table": {"0": 0.5, "-2": 1.5}})
    assert t.gamma(-2) == 1.5
    assert make_weight(t.to_json()).gamma(0) == 0.5
    assert make_weight(Weight("abs_n").to_json()).name == "abs_n"
    for bad in (
        {"builtin": "abs_n", "table": {}},
        {},
        {"table": {"x": 1.0}},
        {"table": [1.0]},
        {"builtin": "abs_n", "value": 2.0},
        {"builtin": "abs_n", "s": "two"},
        {"builtin": "abs_n", "flavor": "mild"},
        "abs_n",
    ):
        with pytest.raises(ConfigurationError):
            make_weight(bad)


# -- frozen norm values --------------------------------------------------------------


def test_barron_single_circle_mode():
    group = TorusGroup()
    blf = BandlimitedFunction(group, ValueSpace(1, "l2"), group.truncated_dual(2))
    blf.set_entry(2, 0, 0, [1.0])
    report = barron_norm(blf, Weight("abs_n"), 1.0)
    assert report.value == pytest.approx(math.sqrt(5.0), abs=1e-12)
    assert report.per_irrep[2] == report.value
    assert report.per_irrep[0] == 0.0


def test_barron_two_point_group_hand_formula():
    # On Z_2 with gamma = 1 and s = 2 the norm of samples (a, b) collapses
    # to |a + b| + |a - b|.
    group = CyclicGroup(2)
    space = ValueSpace(1, "l2")
    rng = np.random.default_rng(59)
    from groupspectra.fourier import GridFunction, forward

    for _ in range(10):
        a, b = (complex(rng.normal(), rng.normal()) for _ in range(2))
        grid = GridFunction(group.quadrature(0), space, np.array([[a], [b]]))
        hat = forward(grid, group.truncated_dual(0))
        got = barron_norm(hat, Weight("constant", value=1.0), 2.0).value
        assert got == pytest.approx(abs(a + b) + abs(a - b), rel=1e-12)


def test_sobolev_single_mode_hand_value():
    group = DihedralGroup(4)
    blf = BandlimitedFunction(group, ValueSpace(1, "l2"), group.truncated_dual(0))
    blf.set_entry(4, 0, 1, [1.0])
    got = sobolev_norm(blf, Weight("constant", value=1.0), 1.0)
    assert got.value == pytest.approx(2.0, rel=1e-13)


# -- agreement with naive loops ---------------------------------------------------------


@pytest.mark.parametrize(
    "group,band",
    [(CyclicGroup(8), 0), (DihedralGroup(4), 0), (TorusGroup(), 3), (SU2Group(), 1)],
    ids=["cyclic", "dihedral", "torus", "su2"],
)
@pytest.mark.parametrize("space", [ValueSpace(2, "l1"), ValueSpace(2, "operator")], ids=["l1", "op"])
def test_norms_match_naive_loops(group, band, space):
    rng = np.random.default_rng(61)
    weight = Weight.canonical(group)
    for s in (0.0, 1.0, 2.5):
        blf = random_blf(group, space, band, rng)
        assert barron_norm(blf, weight, s).value == pytest.approx(
            naive_barron(blf, weight, s), rel=1e-13
        )
        assert sobolev_norm(blf, weight, s).value == pytest.approx(
            naive_sobolev(blf, weight, s), rel=1e-13
        )


def test_sp_norms():
    group = DihedralGroup(4)
    space = ValueSpace(1, "l2")
    blf = BandlimitedFunction(group, space, group.truncated_dual(0))
    blf.set_entry(0, 0, 0, [3.0])
    blf.set_entry(4, 0, 1, [4.0j])
    # S_1 = 1*3 + 2*4, S_2 = sqrt(1*9 + 2*16), S_inf = 4.
    assert sp_norm(blf, 1) == pytest.approx(11.0)
    assert sp_norm(blf, 2) == pytest.approx(math.sqrt(41.0))
    assert sp_norm(blf, math.inf) == pytest.approx(4.0)
    with pytest.raises(ConfigurationError):
        sp_norm(blf, 0.5)
    empty = BandlimitedFunction(group, space, group.truncated_dual(0))
    assert sp_norm(empty, math.inf) == 0.0


def test_barron_at_zero_order_is_weighted_s1_exactly():
    rng = np.random.default_rng(67)
    group = SU2Group()
    blf = random_blf(group, ValueSpace(3, "linf"), 1, rng)
    for weight in (Weight("sqrt_l_lplus1"), Weight("constant", value=3.0)):
        assert barron_norm(blf, weight, 0.0).value == sp_norm(blf, 1)


def test_sobolev_zero_order_matches_l2_parseval():
    group = TorusGroup()
    space = ValueSpace(2, "l2")
    rng = np.random.default_rng(71)
    blf = random_blf(group, space, 3, rng)
    grid = synthesize(blf, group.quadrature(3))
    assert sobolev_norm(blf, Weight("abs_n"), 0.0).value == pytest.approx(
        grid.lp_norm(2), rel=1e-11
    )


def test_norm_monotone_in_order():
    rng = np.random.default_rng(73)
    group = TorusGroup()
    blf = random_blf(group, ValueSpace(2, "l2"), 3, rng)
    w = Weight("abs_n")
    barrons = [barron_norm(blf, w, s).value for s in (0.0, 0.5, 1.0, 2.0)]
    assert barrons == sorted(barrons)
    sobolevs = [sobolev_norm(blf, w, s).value for s in (0.0, 0.5, 1.0, 2.0)]
    assert sobolevs == sorted(sobolevs)


def test_entry_position_does_not_matter():
    group = DihedralGroup(4)
    space = ValueSpace(1, "l2")
    w = Weight("constant")
    one = BandlimitedFunction(group, space, group.truncated_dual(0))
    one.set_entry(4, 0, 1, [2.0 - 1.0j])
    other = BandlimitedFunction(group, space, group.truncated_dual(0))
    other.set_entry(4, 1, 0, [2.0 - 1.0j])
    for s in (0.0, 1.5):
        assert barron_norm(one, w, s).value == barron_norm(other, w, s).value
        assert sobolev_norm(one, w, s).value == sobolev_norm(other, w, s).value


def test_report_contributions_sum():
    rng = np.random.default_rng(79)
    group = SU2Group()
    blf = random_blf(group, ValueSpace(2, "l2"), 1, rng)
    w = Weight.canonical(group)
    rep = barron_norm(blf, w, 1.0)
    assert isinstance(rep, NormReport)
    assert list(rep.per_irrep) == list(blf.dual.labels)
    assert rep.value == sum(rep.per_irrep.values())
    srep = sobolev_norm(blf, w, 1.0)
    assert srep.value == pytest.approx(math.sqrt(sum(srep.per_irrep.values())), rel=1e-15)


def test_table_weight_missing_label_in_norm():
    group = TorusGroup()
    blf = BandlimitedFunction(group, ValueSpace(1, "l2"), group.truncated_dual(1))
    with pytest.raises(ConfigurationError, match="no entry"):
        barron_norm(blf, Weight("table", table=((0, 1.0),)), 1.0)
