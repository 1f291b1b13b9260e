#
# Author: Joed Lopes da Silva
#
# This work is licensed under the terms of the MIT license.
# For a copy, see <https://opensource.org/licenses/MIT>.

from math import comb

import pytest

from hkrcheck.complexes.hilbert import HilbertTable
from hkrcheck.complexes.modules import hilbert_function
from hkrcheck.geometry.fixed_locus import forms_table
from hkrcheck.geometry.group import trivial_group
from hkrcheck.geometry.orbifold import (
    delta_pushpull,
    hh_cohomology,
    hh_homology,
    molien,
    molien_table,
    sector_data,
    verify_fast_path,
    verify_hh0_molien,
    verify_sector_symmetry,
)


def test_sector_data_of_a_reflection(groups):
    group = groups["z2-line"]
    identity, sigma = sector_data(group, 0), sector_data(group, 1)
    assert identity.numerical_fields() == (1, 0, 1, (1, 1))
    assert sigma.numerical_fields() == (0, 1, 0, (1,))
    assert sigma.omega_degree == -1
    assert sigma.omega(0) == 1
    assert sigma.omega(1) == -1


def test_sector_data_of_permutations(groups):
    s3 = groups["s3-permutations"]
    transposition, cycle = sector_data(s3, 1), sector_data(s3, 2)
    assert (transposition.fixed_dimension, transposition.codimension) == (2, 1)
    assert (cycle.fixed_dimension, cycle.codimension) == (1, 2)
    assert cycle.tg_dimension == 1
    with pytest.raises(ValueError):
        sector_data(s3, 6)


def test_trivial_group_reduces_to_polyvectors_and_forms():
    window = (-4, 3)
    group = trivial_group(2)
    polyvectors = HilbertTable.tabulate(window, range(3), lambda m, t: comb(2, m) * hilbert_function(2, t + m))
    assert hh_cohomology(group, window).table == polyvectors
    assert hh_homology(group, window).table == forms_table(2, window)


def test_reflection_on_the_line(groups):
    group = groups["z2-line"]
    cohomology = hh_cohomology(group, (0, 2))
    homology = hh_homology(group, (0, 2))
    assert cohomology.table == HilbertTable((0, 2), {(0, 0): 1, (0, 2): 1, (1, 0): 1, (1, 2): 1})
    assert cohomology.sector_tables == {0: cohomology.table, 1: HilbertTable((0, 2))}
    assert homology.table == HilbertTable((0, 2), {(-1, 2): 1, (0, 0): 2, (0, 2): 1})
    assert homology.sector_tables == {
        0: HilbertTable((0, 2), {(-1, 2): 1, (0, 0): 1, (0, 2): 1}),
        1: HilbertTable((0, 2), {(0, 0): 1}),
    }


def test_reflection_twisted_sector_lives_below_the_window(groups):
    # omega_sigma sits in internal degree -1 and sigma acts on it by -1
    sector = hh_cohomology(groups["z2-line"], (-1, 0)).sector_tables[1]
    assert sector.is_zero()


def test_degree_zero_homology_sees_the_twisted_sectors(groups):
    group = groups["z2-line"]
    assert hh_homology(group, (0, 0)).table.get(0, 0) == 2
    assert molien(group, (0, 0)) == [1]


def test_molien_series(corpus_group):
    group, expected = corpus_group
    assert molien(group, (0, 6)) == expected
    assert molien(group, (-2, 1)) == [0, 0] + expected[:2]
    assert molien_table(group, (0, 2)).row(0) == expected[:3]


def test_hh0_is_the_invariant_ring(corpus_group):
    group, _ = corpus_group
    check = verify_hh0_molien(group, (-1, 4))
    assert check.passed, check.diff


def test_fast_path_and_symmetry(corpus_group):
    group, _ = corpus_group
    assert verify_fast_path(group, (-3, 3)).passed
    assert verify_sector_symmetry(group).passed


def test_delta_pushpull(groups):
    tables = delta_pushpull(groups["z2-line"], (0, 2))
    assert tables[0] == HilbertTable((0, 2), {(-1, 1): 1, (-1, 2): 1, (0, 0): 1, (0, 1): 1, (0, 2): 1})
    assert tables[1] == HilbertTable((0, 2), {(0, 0): 1})


def test_swap_invariant_polyvectors(groups):
    table = hh_cohomology(groups["s2-swap"], (-1, 1)).table
    assert [table.get(0, t) for t in (-1, 0, 1)] == [0, 1, 1]
    # d/dx + d/dy in degree -1, the swap sector cancels against its omega
    assert [table.get(1, t) for t in (-1, 0)] == [1, 2]
