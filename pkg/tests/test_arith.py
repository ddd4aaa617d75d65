import io
import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from davenport import arith
from davenport.arith import (LIOUVILLE, LOG, MOBIUS, ONE, UNIT, VON_MANGOLDT, build_sieve,
                             compute_Fk, dirichlet_convolve, dirichlet_series_partial,
                             evaluate, power, segal_limit, sigma, tabulate)
from davenport.special import zeta_real

from oracles import naive_Fk, naive_value

CATALOG = [MOBIUS, LIOUVILLE, VON_MANGOLDT, LOG, UNIT, ONE, power(-2.0), power(0.5)]


@pytest.fixture(scope="module")
def sieve100():
    return build_sieve(100)


def test_sieve_small_values(sieve100):
    assert sieve100.spf[97] == 97
    assert sieve100.is_prime(97)
    assert sieve100.spf[12] == 2
    assert sieve100.factorize(60) == [(2, 2), (3, 1), (5, 1)]
    assert sieve100.factorize(1) == []


def test_sieve_spf_is_prime_divisor():
    s = build_sieve(5000)
    for n in range(2, 5001):
        p = int(s.spf[n])
        assert n % p == 0
        assert all(p % q for q in range(2, math.isqrt(p) + 1))


def test_sieve_rejects_zero():
    with pytest.raises(ValueError):
        build_sieve(0)


def test_evaluate_examples(sieve100):
    assert evaluate(MOBIUS, 10, sieve100) == 1
    assert evaluate(LIOUVILLE, 12, sieve100) == -1
    assert evaluate(VON_MANGOLDT, 9, sieve100) == math.log(3)
    assert evaluate(VON_MANGOLDT, 6, sieve100) == 0
    for a in (MOBIUS, LIOUVILLE):
        assert evaluate(a, 1, sieve100) == 1
    assert evaluate(VON_MANGOLDT, 1, sieve100) == 0
    assert evaluate(LOG, 1, sieve100) == 0


def test_evaluate_out_of_range(sieve100):
    with pytest.raises(ValueError):
        evaluate(MOBIUS, 101, sieve100)
    with pytest.raises(ValueError):
        evaluate(MOBIUS, 0, sieve100)


@pytest.mark.parametrize("a", CATALOG, ids=str)
def test_tabulate_matches_definition(a):
    tab = tabulate(a, 2000)
    s = build_sieve(2000)
    for n in range(1, 2001):
        assert tab[n] == pytest.approx(naive_value(a.kind, n, a.r), abs=1e-13)
        assert tab[n] == pytest.approx(evaluate(a, n, s), abs=1e-13)


def test_parse_ids():
    assert arith.ArithmeticFunctionId.parse("power:-2") == power(-2)
    assert arith.ArithmeticFunctionId.parse("power(-2)") == power(-2)
    assert arith.ArithmeticFunctionId.parse("mu") == MOBIUS
    with pytest.raises(ValueError):
        arith.ArithmeticFunctionId.parse("zeta")


def test_one_star_one_is_divisor_count():
    d = dirichlet_convolve(tabulate(ONE, 10), tabulate(ONE, 10))
    assert d[6] == 4
    assert list(d.values[1:]) == [1, 2, 2, 3, 2, 4, 2, 4, 3, 4]


def test_mobius_inverts_one():
    out = dirichlet_convolve(tabulate(MOBIUS, 10**4), tabulate(ONE, 10**4))
    expected = np.zeros(10**4 + 1)
    expected[1] = 1
    assert np.array_equal(out.values, expected)


def test_mangoldt_star_one_is_log():
    out = dirichlet_convolve(tabulate(VON_MANGOLDT, 10**4), tabulate(ONE, 10**4))
    n = np.arange(1, 10**4 + 1)
    assert np.max(np.abs(out.values[1:] - np.log(n))) <= 1e-12


def test_convolve_mismatched_limits():
    with pytest.raises(ValueError):
        dirichlet_convolve(tabulate(ONE, 10), tabulate(ONE, 11))


@pytest.mark.parametrize("a", CATALOG, ids=str)
def test_convolution_commutes_exactly(a):
    f = tabulate(a, 3000)
    g = tabulate(power(-1.5), 3000)
    assert np.array_equal(dirichlet_convolve(f, g).values, dirichlet_convolve(g, f).values)


@pytest.mark.parametrize("a", CATALOG, ids=str)
def test_mobius_inversion_round_trip(a):
    M = 1000
    A = dirichlet_convolve(tabulate(a, M), tabulate(ONE, M))
    back = dirichlet_convolve(A, tabulate(MOBIUS, M))
    assert np.max(np.abs(back.values - tabulate(a, M).values)) <= 1e-10


@pytest.mark.parametrize("a", CATALOG, ids=str)
def test_Fk_matches_naive_double_loop(a):
    M = 300
    tab = compute_Fk(a, 3, M)
    for k in range(3):
        for n in range(1, M + 1):
            assert abs(tab.entries[k, n] - naive_Fk(a.kind, k, n, a.r)) <= 1e-12


def test_Fk_examples():
    mob = compute_Fk(MOBIUS, 1, 100)
    assert mob.entries[0, 6] == 0 and mob.entries[0, 1] == 1
    liou = compute_Fk(LIOUVILLE, 1, 10**4)
    squares = {m * m for m in range(1, 101)}
    assert all(liou.entries[0, n] == (1.0 if n in squares else 0.0) for n in range(1, 10**4 + 1))
    p2 = compute_Fk(power(-2), 2, 10)
    assert p2.entries[1, 4] == pytest.approx(7 / 16, abs=1e-15)


@pytest.mark.parametrize("a", CATALOG, ids=str)
def test_Fk_at_one_is_a1(a):
    tab = compute_Fk(a, 4, 50)
    assert np.all(tab.entries[:, 1] == tabulate(a, 50)[1])


@pytest.mark.parametrize("r", [1.0, 2.0, 2.5])
def test_Fk_power_scaling(r):
    M = 1000
    tab = compute_Fk(power(-r), 4, M)
    for k in range(4):
        for n in range(1, M + 1):
            assert abs(tab.entries[k, n] * n ** r - sigma(r - k, n)) <= 1e-12 * max(1, sigma(r - k, n))


def test_Fk_rejects_zero_N():
    with pytest.raises(ValueError):
        compute_Fk(MOBIUS, 0, 10)


def test_Fk_worker_count_does_not_change_bits():
    one = compute_Fk(LIOUVILLE, 4, 20000, workers=1)
    many = compute_Fk(LIOUVILLE, 4, 20000, workers=4)
    assert one.entries.tobytes() == many.entries.tobytes()


def test_sigma_examples():
    assert sigma(1, 6) == 12
    assert sigma(0, 4) == 3
    assert sigma(-1, 4) == 7 / 4


@settings(max_examples=50, deadline=None)
@given(st.integers(1, 5000), st.sampled_from([-2.0, -1.0, 0.0, 0.5, 1.0, 3.0]))
def test_sigma_multiplicative(n, r):
    from oracles import factor
    prod = 1.0
    for p, e in factor(n).items():
        prod *= sum(float(p) ** (r * j) for j in range(e + 1))
    assert sigma(r, n) == pytest.approx(prod, rel=1e-12)


def test_dirichlet_series_partial():
    assert dirichlet_series_partial(ONE, 2, 10**5) == pytest.approx(zeta_real(2), abs=1e-4)
    assert dirichlet_series_partial(UNIT, 0.3, 10) == 1.0
    assert dirichlet_series_partial(MOBIUS, 2, 10**5) == pytest.approx(1 / zeta_real(2), abs=1e-3)
    with pytest.raises(ValueError):
        dirichlet_series_partial(MOBIUS, 1.0, 100)


def test_segal_mobius():
    for M in (1, 10, 1000):
        out = segal_limit(MOBIUS, 0, M)
        assert out["partial_sum"] == 1.0
        assert out["S"] * out["L"] == 1.0
    small = segal_limit(MOBIUS, 1, 10**3)["partial_sum"]
    big = segal_limit(MOBIUS, 1, 10**6)["partial_sum"]
    assert abs(big) < abs(small)


def test_segal_unit_is_harmonic():
    out = segal_limit(UNIT, 0, 1000)
    assert out["partial_sum"] == pytest.approx(math.fsum(1 / n for n in range(1, 1001)), abs=1e-13)
    assert segal_limit(UNIT, 2, 10)["L"] == 0.0


def test_csv_export():
    buf = io.StringIO()
    compute_Fk(MOBIUS, 2, 3).to_csv(buf)
    lines = buf.getvalue().splitlines()
    assert lines[0] == "n,k,value"
    assert lines[1] == "1,0,1.0"
    assert len(lines) == 1 + 2 * 3
    buf = io.StringIO()
    tabulate(LIOUVILLE, 4).to_csv(buf)
    assert buf.getvalue().splitlines() == ["n,value", "1,1.0", "2,-1.0", "3,-1.0", "4,1.0"]
