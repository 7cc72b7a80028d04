import numpy as np
import pytest

from stardisc.errors import BadBase, CenteredNeedsDim1, DegreeTooLarge, MissingSeed, NotPrime
from stardisc.generators import (
    GeneratorSpec,
    generate_pset,
    generate_reference,
    halton,
    vdc_array,
    vdc_value,
)
from stardisc.ntheory import first_primes, is_prime, prime_power_base


def test_korobov_p_example():
    P = generate_pset("P", 5, 2)
    expected = [(0, 0), (0.2, 0.2), (0.4, 0.8), (0.6, 0.8), (0.8, 0.2)]
    np.testing.assert_array_equal(P.coords, np.array(expected))


def test_korobov_q_first_rows():
    Q = generate_pset("Q", 3, 2)
    assert Q.N == 9
    np.testing.assert_array_equal(Q.coords[:3], [[0, 0], [1 / 9, 1 / 9], [2 / 9, 4 / 9]])


def test_huawang_r_zero_multiplicity():
    R = generate_pset("R", 3, 2)
    assert R.N == 9
    zeros = np.all(R.coords == 0.0, axis=1)
    assert zeros.sum() == 3
    # rows a = 0, 1, 2 at k = 0
    assert list(np.nonzero(zeros)[0]) == [0, 3, 6]


@pytest.mark.parametrize("p", [3, 5, 7, 11, 13])
@pytest.mark.parametrize("s", [1, 2])
def test_r_zero_point_appears_p_times(p, s):
    R = generate_pset("R", p, s)
    assert np.all(R.coords == 0.0, axis=1).sum() == p


@pytest.mark.parametrize("fam", ["P", "Q", "R"])
@pytest.mark.parametrize("p,s", [(3, 2), (7, 3), (11, 5), (13, 12)])
def test_psets_in_unit_cube_and_pure(fam, p, s):
    a = generate_pset(fam, p, s)
    b = generate_pset(fam, p, s)
    assert a.coords.min() >= 0.0 and a.coords.max() < 1.0
    assert a.coords.tobytes() == b.coords.tobytes()


@pytest.mark.parametrize("p,s", [(5, 3), (11, 4), (97, 6)])
def test_pset_coordinates_are_exact_multiples(p, s):
    P = generate_pset("P", p, s)
    k = P.coords * p
    np.testing.assert_array_equal(np.round(k) / p, P.coords)
    Q = generate_pset("Q", p, s)
    k = Q.coords * p * p
    np.testing.assert_array_equal(np.round(k) / (p * p), Q.coords)


def test_pset_matches_python_pow():
    p, s = 31, 5
    P = generate_pset("P", p, s)
    for n in range(p):
        assert list(P.coords[n]) == [pow(n, j, p) / p for j in range(1, s + 1)]


def test_pset_first_coordinate_enumerates_residues():
    P = generate_pset("P", 17, 3)
    assert sorted(P.coords[:, 0] * 17) == list(range(17))


def test_pset_errors():
    with pytest.raises(NotPrime):
        generate_pset("P", 9, 2)
    with pytest.raises(DegreeTooLarge):
        generate_pset("P", 5, 5)
    with pytest.raises(DegreeTooLarge):
        generate_pset("Q", 3, 3)


@pytest.mark.parametrize("n,base,expected", [(1, 2, 0.5), (4, 2, 0.125), (2, 3, 2 / 3), (0, 2, 0.0), (6, 2, 0.375)])
def test_vdc_value(n, base, expected):
    assert vdc_value(n, base) == expected


def test_vdc_array_matches_scalar():
    idx = np.arange(0, 300)
    for b in (2, 3, 5, 7):
        assert list(vdc_array(idx, b)) == [vdc_value(i, b) for i in idx]


def test_vdc_bad_base():
    with pytest.raises(BadBase):
        vdc_value(3, 1)


def test_halton_first_point():
    H = halton(1, 2)
    assert H.coords.tolist() == [[0.5, 1 / 3]]


def test_centered():
    C = generate_reference("centered", 4, 1)
    assert C.coords[:, 0].tolist() == [0.125, 0.375, 0.625, 0.875]
    with pytest.raises(CenteredNeedsDim1):
        generate_reference("centered", 4, 2)


def test_random_is_reproducible():
    a = generate_reference("random", 8, 3, seed=42)
    b = generate_reference("random", 8, 3, seed=42)
    c = generate_reference("random", 8, 3, seed=43)
    assert a == b
    assert a != c
    with pytest.raises(MissingSeed):
        generate_reference("random", 8, 3)


def test_generator_spec_dispatch():
    assert GeneratorSpec("korobov-P", s=2, p=5).build() == generate_pset("P", 5, 2)
    assert GeneratorSpec("vdc", s=1, N=4).build().coords[:, 0].tolist() == [0.5, 0.25, 0.75, 0.125]
    with pytest.raises(NotPrime):
        GeneratorSpec("huawang-R", s=2, p=15)


def test_number_theory_helpers():
    assert [n for n in range(60) if is_prime(n)] == first_primes(17)
    assert is_prime(2 ** 61 - 1) and not is_prime(2 ** 61 + 1)
    assert prime_power_base(8) == 2 and prime_power_base(9) == 3 and prime_power_base(13) == 13
    assert prime_power_base(12) is None and prime_power_base(1) is None
