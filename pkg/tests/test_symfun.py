from collections import Counter
from fractions import Fraction
from itertools import combinations

import pytest
from hypothesis import given, settings, strategies as st

from lieres.freelie import witt_dim
from lieres.partitions import Partition, partitions_of, partitions_up_to
from lieres.symfun import (
    BASES,
    SymFn,
    divisors,
    e,
    h,
    inner,
    lyndon_sym,
    m,
    mobius,
    multiply,
    p,
    plethysm,
    s,
    series,
    to_basis,
    to_p,
)

from oracles import brute_lyndon, complete_poly, h2_of_h2_poly, poly_mul, schur_poly

NVARS = 4


def power_poly(k, nvars):
    out = Counter()
    for i in range(nvars):
        ex = [0] * nvars
        ex[i] = k
        out[tuple(ex)] += 1
    return out


def as_poly(f, nvars=NVARS):
    """Evaluate f in nvars variables by expanding its power-sum form."""
    total = Counter()
    for rho, c in to_p(f).terms.items():
        term = Counter({(0,) * nvars: 1})
        for k in rho:
            term = poly_mul(term, power_poly(k, nvars))
        for ex, v in term.items():
            total[ex] += c * v
    return {k: v for k, v in total.items() if v}


def elementary_poly(k, nvars):
    out = Counter()
    for idx in combinations(range(nvars), k):
        ex = [0] * nvars
        for i in idx:
            ex[i] = 1
        out[tuple(ex)] += 1
    return out


def monomial_poly(lam, nvars):
    padded = tuple(lam) + (0,) * (nvars - len(lam))
    return Counter({ex: 1 for ex in set(_perms(padded))})


def _perms(t):
    if not t:
        yield ()
        return
    for i in range(len(t)):
        for rest in _perms(t[:i] + t[i + 1:]):
            yield (t[i],) + rest


def product_poly(polys, nvars):
    out = Counter({(0,) * nvars: 1})
    for q in polys:
        out = poly_mul(out, q)
    return out


partition_upto4 = st.integers(0, 4).flatmap(lambda k: st.sampled_from(partitions_of(k)))


@pytest.mark.parametrize("lam", partitions_up_to(4))
def test_basis_elements_match_polynomial_oracles(lam):
    assert as_poly(s(*lam)) == dict(schur_poly(lam, NVARS))
    assert as_poly(h(*lam)) == dict(product_poly([complete_poly(k, NVARS) for k in lam], NVARS))
    assert as_poly(e(*lam)) == dict(product_poly([elementary_poly(k, NVARS) for k in lam], NVARS))
    assert as_poly(m(*lam)) == dict(monomial_poly(lam, NVARS))


def test_small_expansions():
    assert to_p(h(2)) == SymFn("p", {(1, 1): Fraction(1, 2), (2,): Fraction(1, 2)})
    assert to_p(e(2)) == SymFn("p", {(1, 1): Fraction(1, 2), (2,): Fraction(-1, 2)})
    assert to_basis(h(2, 1), "s") == SymFn("s", {(3,): 1, (2, 1): 1})
    assert to_basis(s(2, 1), "m") == SymFn("m", {(2, 1): 1, (1, 1, 1): 2})
    assert to_basis(p(3), "s") == SymFn("s", {(3,): 1, (2, 1): -1, (1, 1, 1): 1})


@pytest.mark.parametrize("d", range(0, 7))
def test_schur_is_orthonormal(d):
    parts = partitions_of(d)
    for a in parts:
        for b in parts:
            assert inner(to_p(s(*a)), to_p(s(*b))) == (a == b)


@pytest.mark.parametrize("d", range(1, 6))
def test_h_and_m_are_dual(d):
    parts = partitions_of(d)
    for a in parts:
        for b in parts:
            assert inner(h(*a), m(*b)) == (a == b)


@settings(max_examples=40, deadline=None)
@given(partition_upto4, st.sampled_from(BASES), st.sampled_from(BASES))
def test_round_trip_between_bases(lam, src, dst):
    f = SymFn.basis_element(src, lam)
    assert to_basis(to_basis(f, dst), src).terms == f.terms


@settings(max_examples=30, deadline=None)
@given(partition_upto4, partition_upto4)
def test_products_match_polynomials(a, b):
    prod = multiply(s(*a), h(*b))
    assert as_poly(prod, 3) == {
        k: v for k, v in poly_mul(schur_poly(a, 3), product_poly([complete_poly(j, 3) for j in b], 3)).items() if v
    }


def test_pieri_product():
    assert to_basis(s(2, 1) * h(1), "s") == SymFn("s", {(3, 1): 1, (2, 2): 1, (2, 1, 1): 1})


def test_plethysm_h2_of_h2():
    result = plethysm(h(2), h(2), 4)
    assert to_basis(result, "s") == SymFn("s", {(4,): 1, (2, 2): 1})
    assert as_poly(result) == dict(h2_of_h2_poly(NVARS))


def test_plethysm_truncation():
    assert plethysm(h(2), h(2), 3).is_zero()
    g = SymFn.one() + h(1)
    full = plethysm(h(2), g, 2)
    # h_2[1 + h_1] = 1 + h_1 + h_2 in degrees <= 2
    assert to_basis(full, "h") == SymFn("h", {(): 1, (1,): 1, (2,): 1})
    assert plethysm(p(3), g, 2) == SymFn.one()


def test_plethysm_by_power_sum():
    assert plethysm(p(2), s(1, 1), 4) == to_p(p(2, 2) - p(4)) / 2


def test_mobius_and_divisors():
    assert [mobius(k) for k in range(1, 13)] == [1, -1, -1, 0, -1, 1, -1, 0, 0, 1, -1, 0]
    assert divisors(12) == [1, 2, 3, 4, 6, 12]
    with pytest.raises(ValueError):
        mobius(0)


def test_lyndon_small_degrees():
    assert lyndon_sym(1) == p(1)
    assert to_basis(lyndon_sym(2), "s") == s(1, 1)
    assert to_basis(lyndon_sym(3), "s") == s(2, 1)
    assert to_basis(lyndon_sym(4), "s") == SymFn("s", {(3, 1): 1, (2, 1, 1): 1})


@pytest.mark.parametrize("k", range(1, 9))
@pytest.mark.parametrize("nv", [1, 2, 3])
def test_lyndon_dimension_counts_lyndon_words(k, nv):
    assert lyndon_sym(k).evaluate_ones(nv) == len(brute_lyndon(nv, k)) == witt_dim(nv, k)


def test_series():
    assert series("h_series", 2) == SymFn.one() + h(1) + h(2)
    assert series("total_lyndon", 3) == lyndon_sym(1) + lyndon_sym(2) + lyndon_sym(3)
    with pytest.raises(ValueError):
        series("x", 2)
    with pytest.raises(ValueError):
        series("h_series", -1)


def test_unknown_basis():
    with pytest.raises(ValueError):
        SymFn("q")


def test_json_round_trip():
    f = to_basis(lyndon_sym(4), "s") + SymFn("s", {(1,): Fraction(2, 3)})
    assert SymFn.from_json(f.to_json()) == f
    assert f.to_json()["basis"] == "s"


def test_evaluate_ones_is_tableau_count():
    assert s(2, 1).evaluate_ones(3) == 8
    assert SymFn("s", {Partition((1, 1, 1)): 1}).evaluate_ones(2) == 0
