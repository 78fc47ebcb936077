"""The eight acceptance criteria, each at its stated tolerance and time budget.

Every test records one PASS/FAIL line; the lines are echoed in the pytest
terminal summary under "acceptance criteria".
"""
import time
from math import comb

from lieres.ce_complex import Slice, verify_exactness, verify_resolution
from lieres.characters import cf_inner, character_table, irreducible
from lieres.coefficients import a_coeff, verify_inversion, verify_littlewood
from lieres.freelie import lyndon_words, witt_dim
from lieres.partitions import Partition, partitions_of, partitions_up_to, z_of

RESOLUTION_CASES = [
    (mu, mu.size, n) for mu in partitions_up_to(2) for n in range(max(1, mu.size + mu.part(0)), 6)
]
STRETCH = (Partition((2, 1)), 3, 6)
EXACTNESS_GRID = [(m, n, i) for m in (1, 2) for n in (1, 2, 3) for i in range(min(n, 3) + 2)]
BASE_CASE_GRID = [(1, m, i) for m in (1, 2, 3) for i in (1, 2, 3)]

_resolutions: dict = {}


def _resolution(case):
    if case not in _resolutions:
        mu, m, n = case
        _resolutions[case] = verify_resolution(mu, m, n)
    return _resolutions[case]


def _record(log, number, title, ok, detail, elapsed, budget=None):
    timing = f"{elapsed:.2f}s" + (f" (budget {budget}s)" if budget else "")
    log.append(f"{'PASS' if ok else 'FAIL'} [{number}] {title}: {detail}; {timing}")
    print(log[-1])


def test_1_grothendieck_inversion(acceptance_log):
    start = time.perf_counter()
    cells = [(mu, n) for mu in partitions_up_to(4) for n in range(max(1, mu.size + mu.part(0)), 9)]
    failures = [(mu, n, r.witness) for mu, n in cells if not (r := verify_inversion(mu, n)).passed]
    elapsed = time.perf_counter() - start
    ok = not failures and elapsed < 30
    _record(acceptance_log, 1, "inversion |mu|<=4, n<=8", ok, f"{len(cells)} cells, {len(failures)} failures", elapsed, 30)
    assert not failures, failures[:3]
    assert elapsed < 30


def test_2_littlewood(acceptance_log):
    start = time.perf_counter()
    report = verify_littlewood(5)
    elapsed = time.perf_counter() - start
    ok = report.passed and elapsed < 10
    _record(acceptance_log, 2, "Littlewood delta, size <= 5", ok, f"{report.pairs} pairs, {report.checks} checks", elapsed, 10)
    assert report.passed, report.failures[:3]
    assert elapsed < 10


def test_3_two_route_agreement(acceptance_log):
    start = time.perf_counter()
    index = partitions_up_to(5)
    bad = [
        (lam, mu)
        for lam in index
        for mu in index
        if a_coeff(lam, mu, "plethysm") != a_coeff(lam, mu, "character")
    ]
    elapsed = time.perf_counter() - start
    ok = not bad and elapsed < 60
    _record(acceptance_log, 3, "a-coefficients, plethysm vs character", ok, f"{len(index) ** 2} pairs, {len(bad)} disagreements", elapsed, 60)
    assert not bad, bad[:3]
    assert elapsed < 60


def test_4_ce_exactness(acceptance_log):
    start = time.perf_counter()
    failures = []
    for m, n, i in EXACTNESS_GRID:
        r = verify_exactness(m, n, i)
        expected = comb(n, i) * m**i
        if not r.passed or r.cohomology[-1] != expected or any(r.cohomology[:-1]):
            failures.append((m, n, i, r.cohomology))
    elapsed = time.perf_counter() - start
    ok = not failures and elapsed < 60
    _record(acceptance_log, 4, "CE exactness m<=2, n<=3", ok, f"{len(EXACTNESS_GRID)} slices, {len(failures)} failures", elapsed, 60)
    assert not failures, failures
    assert elapsed < 60


def test_5_free_lie_base_case(acceptance_log):
    start = time.perf_counter()
    failures = []
    for n, m, i in BASE_CASE_GRID:
        r = verify_exactness(m, n, i)
        expected = m if i == 1 else 0
        if not r.passed or r.cohomology[-1] != expected or any(r.cohomology[:-1]):
            failures.append((m, i, r.cohomology))
    elapsed = time.perf_counter() - start
    _record(acceptance_log, 5, "free Lie cohomology, n=1", not failures, f"{len(BASE_CASE_GRID)} slices, {len(failures)} failures", elapsed)
    assert not failures, failures


def test_6_main_theorem(acceptance_log):
    start = time.perf_counter()
    failures = [case for case in RESOLUTION_CASES if not _resolution(case).passed]
    desk = time.perf_counter() - start
    s0 = time.perf_counter()
    stretch = _resolution(STRETCH)
    stretch_time = time.perf_counter() - s0
    elapsed = time.perf_counter() - start
    ok = not failures and stretch.passed and stretch_time < 300
    detail = f"{len(RESOLUTION_CASES)} cases in {desk:.2f}s, stretch mu=(2,1) m=3 n=6 {'PASS' if stretch.passed else 'FAIL'} in {stretch_time:.2f}s"
    _record(acceptance_log, 6, "resolution of M_n^mu", ok, detail, elapsed, 300)
    assert not failures, [(c, _resolution(c).witness) for c in failures]
    assert stretch.passed, stretch.witness
    assert stretch.far_left_ok
    assert stretch_time < 300


def test_7_character_infrastructure(acceptance_log):
    start = time.perf_counter()
    problems = []
    for n in range(1, 9):
        chars = [irreducible(lam) for lam in partitions_of(n)]
        for a, x in enumerate(chars):
            for b, y in enumerate(chars):
                if cf_inner(x, y) != (a == b):
                    problems.append(("rows", n, a, b))
        table = character_table(n)
        classes = partitions_of(n)
        for a, rho in enumerate(classes):
            for b in range(len(classes)):
                if sum(row[a] * row[b] for row in table) != (z_of(rho) if a == b else 0):
                    problems.append(("columns", n, a, b))
    for m in (1, 2, 3):
        for d in range(1, 9):
            if witt_dim(m, d) != len(lyndon_words(m, d)):
                problems.append(("witt", m, d))
    slices = 0
    for m, n, i in sorted(set(EXACTNESS_GRID + BASE_CASE_GRID)) + [(c[1] or 1, c[2], c[0].size) for c in RESOLUTION_CASES]:
        sl = Slice(m, n, i)
        slices += 1
        for k in range(2, i + 1):
            if not (sl.boundary(k - 1) @ sl.boundary(k)).is_zero():
                problems.append(("d2", m, n, i, k))
    elapsed = time.perf_counter() - start
    ok = not problems and elapsed < 30
    _record(acceptance_log, 7, "orthogonality n<=8, Witt m<=3 d<=8, d^2=0", ok, f"{slices} slices, {len(problems)} problems", elapsed, 30)
    assert not problems, problems[:5]
    assert elapsed < 30


def test_8_term_structure(acceptance_log):
    start = time.perf_counter()
    offenders = []
    terms = 0
    for case in RESOLUTION_CASES + [STRETCH]:
        mu = case[0]
        for t in _resolution(case).terms:
            terms += 1
            sizes = {sum(int(x) for x in key.split(",")) if key else 0 for key in t.restriction_terms}
            if not t.only_size_k or not t.direct_matches or not sizes <= {mu.size - t.step}:
                offenders.append((case, t.step, t.restriction_terms))
    elapsed = time.perf_counter() - start
    _record(acceptance_log, 8, "term at step r uses only |lambda| = |mu| - r", not offenders, f"{terms} terms, {len(offenders)} offenders", elapsed)
    assert not offenders, offenders[:3]
