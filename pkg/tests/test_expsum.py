import cmath
import math
from itertools import product

import pytest

from stardisc.errors import BadFamily, BudgetExceeded, NotPrime
from stardisc.expsum import admissible_vectors, exp_sum, verify_weil


def direct_sum(family, p, h):
    """Term-by-term complex sum with cmath, no argument reduction."""
    s = len(h)
    if family == "P":
        terms = (sum(h[j] * n ** (j + 1) for j in range(s)) / p for n in range(p))
    elif family == "Q":
        terms = (sum(h[j] * n ** (j + 1) for j in range(s)) / p ** 2 for n in range(p * p))
    else:
        terms = (k * sum(h[j] * a ** j for j in range(s)) / p for a in range(p) for k in range(p))
    return abs(sum(cmath.exp(2j * math.pi * x) for x in terms))


def test_geometric_sum_vanishes(backend):
    r = exp_sum("P", 7, (1,), backend=backend)
    assert r.magnitude < 1e-12
    assert r.bound == 0.0 and r.tight and r.admissible


def test_quadratic_gauss_sum(backend):
    r = exp_sum("P", 5, (0, 1), backend=backend)
    assert r.magnitude == pytest.approx(math.sqrt(5), abs=1e-9)
    assert r.magnitude == pytest.approx(direct_sum("P", 5, (0, 1)), abs=1e-12)
    assert r.tight


def test_r_family_inner_sum_vanishes(backend):
    assert exp_sum("R", 3, (1, 0), backend=backend).magnitude < 1e-12


@pytest.mark.parametrize("family,p,s", [("P", 7, 3), ("Q", 3, 2), ("R", 5, 3), ("P", 11, 2), ("Q", 5, 1)])
def test_against_direct_sum(family, p, s, backend):
    mod = p * p if family == "Q" else p
    for h in list(product(range(mod), repeat=s))[:: max(1, mod ** s // 60)]:
        assert exp_sum(family, p, h, backend=backend).magnitude == pytest.approx(direct_sum(family, p, h), abs=1e-9)


def test_all_divisible_is_flagged_not_raised():
    r = exp_sum("P", 5, (0, 5))
    assert not r.admissible
    assert r.magnitude == pytest.approx(5.0, abs=1e-12)
    assert exp_sum("Q", 3, (0, 9)).magnitude == pytest.approx(9.0, abs=1e-12)
    assert exp_sum("Q", 3, (3, 0)).admissible is False


@pytest.mark.parametrize("p", [3, 5, 7])
def test_conjugation_symmetry(p):
    for s in (1, 2, 3):
        for h in product(range(p), repeat=s):
            neg = tuple((-x) % p for x in h)
            for fam in ("P", "R"):
                assert exp_sum(fam, p, h).magnitude == pytest.approx(exp_sum(fam, p, neg).magnitude, abs=1e-9)


def test_verify_weil_p5_s2():
    rep = verify_weil(5, 2)
    assert rep.ok
    assert rep.families["P"].checked == 24
    assert rep.families["P"].max_ratio == pytest.approx(1.0, abs=1e-9)


def test_verify_weil_degenerate_s1():
    rep = verify_weil(3, 1)
    assert rep.ok
    for fc in rep.families.values():
        assert fc.bound == 0.0 and fc.max_magnitude < 1e-9


def test_verify_weil_p13_s3():
    rep = verify_weil(13, 3)
    assert rep.ok
    assert all(fc.max_ratio < 1 + 1e-9 for fc in rep.families.values())
    assert "Q" not in rep.families


def test_admissible_vectors_count():
    assert len(admissible_vectors(5, 2, 5)) == 24
    # modulus p^2: exclude vectors whose entries are all multiples of p
    assert len(admissible_vectors(3, 2, 9)) == 81 - 9


def test_errors():
    with pytest.raises(NotPrime):
        exp_sum("P", 9, (1,))
    with pytest.raises(BadFamily):
        exp_sum("X", 5, (1,))
    with pytest.raises(BudgetExceeded):
        verify_weil(13, 4, budget=1000)
