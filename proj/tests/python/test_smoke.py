# Copyright 2026 The Motzkin Authors
# SPDX-License-Identifier: Apache-2.0
"""Smoke tests for the Python module."""

import math

import pytest

motzkin = pytest.importorskip("motzkin")


def test_counts():
    assert motzkin.motzkin_count(6) == 51
    assert motzkin.motzkin_count(3, 0, 2) == 7
    assert motzkin.motzkin_count_closed_form(3, 1, 1) == 5
    big = motzkin.motzkin_count(600, 17, 2)
    assert math.log(big) == pytest.approx(motzkin.motzkin_count(600, 17, 2, precision_bits=128), rel=1e-14)
    assert len(motzkin.enumerate_walks(2, 2)) == 3


def test_errors():
    with pytest.raises(ValueError):
        motzkin.motzkin_count(-1)
    with pytest.raises(motzkin.ParameterError):
        motzkin.motzkin_asymptotic(100, 0, 2)


def test_entropy():
    s1 = motzkin.cut_entropies(4, 1, 2, [1.0], precision_bits=0)[1.0]
    assert s1 == pytest.approx(1.3921472236645347, abs=1e-12)
    spec = motzkin.cut_spectrum(4, 1, 2)
    rdm = motzkin.rdm_oracle(4, 1, [0, 1])
    assert max(abs(a - b) for a, b in zip(spec, rdm)) < 1e-12


def test_correlators():
    assert motzkin.sz(2, 1, 1)["exact"] == pytest.approx(0.5)
    r = motzkin.sxsx_colorless(12, 4, 4, include_event_e=True)
    bf = motzkin.bruteforce_correlator(12, 1, [(4, "Sx"), (8, "Sx")])
    assert r["exact"] == pytest.approx(bf.real, abs=1e-12)
    table = motzkin.step_pair_table(8, 2, 3)
    assert sum(table.values()) == pytest.approx(1.0)


def test_hamiltonian():
    assert motzkin.frustration_free(5, 2)
    e = motzkin.ground_energies(6, 1, 2)
    assert abs(e[0]) < 1e-10 and e[1] > 1e-4
    curve = motzkin.ssb_sweep(4, [-0.01, 0.0, 0.01])
    assert curve[0][1] == pytest.approx(-curve[2][1])
