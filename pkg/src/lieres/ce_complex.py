"""Degree slices of the Chevalley-Eilenberg complex of g = L tensor C^n.

Everything is computed on the chain side: C_k is spanned by wedges of k
basis vectors of g whose degrees add up to i, and

    d(x_1 ^ ... ^ x_k) = sum_{a<b} (-1)^{a+b} [x_a, x_b] ^ x_1 ^ ... (x_a, x_b omitted) ... ^ x_k.

Over a field the homology dimensions of this complex equal the cohomology
dimensions of the dual cochain complex, and the character of each dual term
is recovered by pairing with s_{mu'} on the un-dualized side.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import Iterator

from .characters import (
    DEFAULT_ENGINE,
    CharacterEngine,
    ClassFunction,
    decompose,
    m_module_character,
    restriction_class_function,
)
from .coefficients import lie_plethysm_schur
from .freelie import GAlgebra
from .partitions import Partition, conjugate, pad, partitions_of
from .sparse import SparseMatrix, nullspace, rref, sparse_rank
from .symfun import SymFn, to_basis

Wedge = tuple[int, ...]


def chain_basis(g: GAlgebra, k: int, i: int) -> list[Wedge]:
    """Strictly increasing k-tuples of basis indices of total degree i, lexicographic."""
    if k < 0 or i < 0:
        return []
    deg = g.degrees
    size = len(deg)
    out: list[Wedge] = []

    def go(start: int, left: int, budget: int, acc: list[int]) -> None:
        if left == 0:
            if budget == 0:
                out.append(tuple(acc))
            return
        for j in range(start, size):
            d = deg[j]
            # every later pick costs at least 1
            if d + (left - 1) > budget:
                break
            acc.append(j)
            go(j + 1, left - 1, budget - d, acc)
            acc.pop()

    go(0, k, i, [])
    return out


def _insert_sorted(t: int, rest: Wedge) -> tuple[int, Wedge] | None:
    """Sign and sorted tuple for t ^ rest, or None when t already occurs."""
    pos = 0
    for x in rest:
        if x == t:
            return None
        if x < t:
            pos += 1
        else:
            break
    return (-1) ** pos, rest[:pos] + (t,) + rest[pos:]


def sort_sign(items: Wedge) -> tuple[int, Wedge] | None:
    """Sign of the sorting permutation and the sorted tuple; None if an index repeats."""
    items = list(items)
    if len(set(items)) != len(items):
        return None
    sign = 1
    for a in range(len(items)):
        for b in range(a + 1, len(items)):
            if items[a] > items[b]:
                sign = -sign
    return sign, tuple(sorted(items))


def boundary_matrix(
    g: GAlgebra,
    k: int,
    i: int,
    source: list[Wedge] | None = None,
    target: list[Wedge] | None = None,
) -> SparseMatrix:
    """Matrix of d: C_k -> C_{k-1} in degree i; rows index the target basis."""
    source = chain_basis(g, k, i) if source is None else source
    target = chain_basis(g, k - 1, i) if target is None else target
    row_of = {w: r for r, w in enumerate(target)}
    M = SparseMatrix(len(target), len(source))
    for col, x in enumerate(source):
        for a in range(k):
            for b in range(a + 1, k):
                br = g.bracket(x[a], x[b])
                if not br:
                    continue
                rest = x[:a] + x[a + 1 : b] + x[b + 1 :]
                sign_ab = -1 if (a + b) % 2 else 1
                for t, c in br.items():
                    placed = _insert_sorted(t, rest)
                    if placed is None:
                        continue
                    s, w = placed
                    M.add(row_of[w], col, sign_ab * s * c)
    return M


@dataclass
class SliceReport:
    m: int
    n: int
    i: int
    dims: list[int]
    ranks: list[int]
    cohomology: list[int]
    expected_far_left: int
    d_squared_zero: bool
    euler_ok: bool
    passed: bool

    def to_json(self) -> dict:
        return {
            "check": "exactness",
            "m": self.m,
            "n": self.n,
            "i": self.i,
            "dims": self.dims,
            "ranks": self.ranks,
            "cohomology": self.cohomology,
            "far_left": self.cohomology[self.i],
            "expected_far_left": self.expected_far_left,
            "d_squared_zero": self.d_squared_zero,
            "euler_ok": self.euler_ok,
            "passed": self.passed,
        }


class Slice:
    """Chain groups and boundary maps of the degree-i slice for fixed (m, n)."""

    def __init__(self, m: int, n: int, i: int, copy_order: tuple[int, ...] | None = None):
        self.m, self.n, self.i = m, n, i
        self.g = GAlgebra(m, n, i, copy_order=copy_order)
        self.bases = [chain_basis(self.g, k, i) for k in range(i + 1)]
        self._boundaries: dict[int, SparseMatrix] = {}

    def dim(self, k: int) -> int:
        return len(self.bases[k]) if 0 <= k <= self.i else 0

    def boundary(self, k: int) -> SparseMatrix:
        """d_k : C_k -> C_{k-1} for 1 <= k <= i."""
        if k not in self._boundaries:
            self._boundaries[k] = boundary_matrix(self.g, k, self.i, self.bases[k], self.bases[k - 1])
        return self._boundaries[k]

    def report(self) -> SliceReport:
        i = self.i
        dims = [self.dim(k) for k in range(i + 1)]
        # ranks[k] = rank of d_k; d_0 and d_{i+1} vanish
        ranks = [0] + [sparse_rank(self.boundary(k)) for k in range(1, i + 1)] + [0]
        homology = [dims[k] - ranks[k] - ranks[k + 1] for k in range(i + 1)]
        d2 = all((self.boundary(k - 1) @ self.boundary(k)).is_zero() for k in range(2, i + 1))
        euler_ok = sum((-1) ** k * d for k, d in enumerate(dims)) == sum(
            (-1) ** k * h for k, h in enumerate(homology)
        )
        expected = comb(self.n, i) * self.m**i
        passed = d2 and euler_ok and homology[i] == expected and not any(homology[:i])
        return SliceReport(self.m, self.n, i, dims, ranks[1 : i + 1], homology, expected, d2, euler_ok, passed)

    # -- S_n x torus traces -------------------------------------------------
    def content(self, x: Wedge) -> tuple[int, ...]:
        """Letter multiplicities of a wedge, a weight for the diagonal torus of GL(V)."""
        counts = [0] * self.m
        for j in x:
            for letter in self.g.basis[j][0]:
                counts[letter - 1] += 1
        return tuple(counts)

    def act(self, perm: tuple[int, ...], x: Wedge) -> tuple[int, Wedge] | None:
        return sort_sign(tuple(self.g.act(perm, j) for j in x))

    def weight_columns(self, k: int, weight: tuple[int, ...]) -> list[int]:
        return [c for c, x in enumerate(self.bases[k]) if self.content(x) == weight]

    def trace_by_weight(self, k: int, perm: tuple[int, ...]) -> dict[tuple[int, ...], int]:
        """Trace of the copy permutation on each torus weight space of C_k."""
        out: dict[tuple[int, ...], int] = {}
        for x in self.bases[k]:
            moved = self.act(perm, x)
            if moved is not None and moved[1] == x:
                w = self.content(x)
                out[w] = out.get(w, 0) + moved[0]
        return out

    def far_left_trace_by_weight(self, perm: tuple[int, ...], weight: tuple[int, ...]) -> Fraction:
        """Trace of the copy permutation on the weight space of ker d_i (the far-left homology)."""
        i = self.i
        cols = self.weight_columns(i, weight)
        if not cols:
            return Fraction(0)
        if i == 0:
            return Fraction(1)
        D = self.boundary(i)
        local = {c: j for j, c in enumerate(cols)}
        sub = SparseMatrix.from_entries(D.rows, len(cols), ((r, local[c], v) for r, c, v in D.entries() if c in local))
        free, kernel = nullspace(sub)
        basis = self.bases[i]
        where = {basis[c]: j for j, c in enumerate(cols)}
        trace = Fraction(0)
        for f, vec in zip(free, kernel):
            # coefficient of the image on free column f
            for j, v in vec.items():
                moved = self.act(perm, basis[cols[j]])
                if moved is not None and where.get(moved[1]) == f:
                    trace += moved[0] * v
        return trace


def cycle_permutation(rho: Partition) -> tuple[int, ...]:
    """A permutation of 1..n with cycle type rho, as the tuple of images."""
    images = []
    start = 1
    for length in rho:
        images.extend(start + (j + 1) % length for j in range(length))
        start += length
    return tuple(images)


def _schur_coefficient_from_weights(weights: dict[tuple[int, ...], object], target: Partition, degree: int, m: int):
    """Coefficient of s_target in a degree-d symmetric polynomial given by its weight multiplicities."""
    terms = {}
    for lam in partitions_of(degree):
        if len(lam) > m:
            continue
        w = tuple(lam) + (0,) * (m - len(lam))
        c = weights.get(w, 0)
        if c:
            terms[lam] = c
    return to_basis(SymFn("m", terms), "s").coefficient(target)


def joint_character(m: int, n: int, k: int, i: int, rho: Partition, engine: CharacterEngine | None = None) -> SymFn:
    """GL(V) x S_n character of the degree-i part of the k-th exterior power of g, at a permutation of type rho.

    Sum over lam of k of s_{lam'}[L] (degree i) times the trace of rho on S^lam(C^n);
    Schur functions with more than m rows are dropped.
    """
    eng = engine or DEFAULT_ENGINE
    rho = Partition(rho)
    if rho.size != n:
        raise ValueError(f"cycle type {rho!r} is not a partition of n={n}")
    out: dict[Partition, Fraction] = {}
    for lam in partitions_of(k):
        r = eng.restriction_character(lam, n, rho)
        if not r:
            continue
        for nu, c in lie_plethysm_schur(lam, i).items():
            if nu.size == i and len(nu) <= m:
                out[nu] = out.get(nu, Fraction(0)) + c * r
    return SymFn("s", out)


def _check_mu(mu: Partition, m: int) -> None:
    if m < mu.size:
        raise ValueError(f"need m >= |μ| = {mu.size}, got m={m}")


def multiplicity_character(mu: Partition, m: int, n: int, k: int, engine: CharacterEngine | None = None) -> ClassFunction:
    """S_n-character of the s_{mu'} multiplicity space in the k-th term of the degree -|mu| slice."""
    mu = Partition(mu)
    _check_mu(mu, m)
    target = conjugate(mu)
    return ClassFunction.from_function(
        n, lambda rho: joint_character(m, n, k, mu.size, rho, engine).coefficient(target)
    )


def direct_term_character(sl: Slice, mu: Partition, k: int) -> ClassFunction:
    """Same multiplicity character as above, read off traces on the actual wedge basis."""
    target = conjugate(mu)

    def value(rho):
        weights = sl.trace_by_weight(k, cycle_permutation(rho))
        return _schur_coefficient_from_weights(weights, target, sl.i, sl.m)

    return ClassFunction.from_function(sl.n, value)


def direct_far_left_character(sl: Slice, mu: Partition) -> ClassFunction:
    """S_n-character of the s_{mu'} multiplicity space of ker d_i, from exact kernels."""
    target = conjugate(mu)
    weights = [tuple(lam) + (0,) * (sl.m - len(lam)) for lam in partitions_of(sl.i) if len(lam) <= sl.m]

    def value(rho):
        perm = cycle_permutation(rho)
        traces = {w: sl.far_left_trace_by_weight(perm, w) for w in weights}
        return _schur_coefficient_from_weights(traces, target, sl.i, sl.m)

    return ClassFunction.from_function(sl.n, value)


def restriction_span(char: ClassFunction, lams: list[Partition], engine: CharacterEngine | None = None):
    """Solve char = sum c_lam Res S^lam(C^n) exactly; returns (coefficients or None, unique)."""
    n = char.n
    cols = [restriction_class_function(lam, n, engine).as_list() for lam in lams]
    rhs = char.as_list()
    rows = len(rhs)
    aug = SparseMatrix.from_entries(
        rows,
        len(lams) + 1,
        [(r, c, cols[c][r]) for c in range(len(lams)) for r in range(rows)] + [(r, len(lams), rhs[r]) for r in range(rows)],
    )
    reduced, pivots = rref(aug)
    if len(lams) in pivots:
        return None, False
    unique = len(pivots) == len(lams)
    coeffs = {lam: Fraction(0) for lam in lams}
    for row, pc in zip(reduced, pivots):
        coeffs[lams[pc]] = row.get(len(lams), Fraction(0))
    return coeffs, unique


def _restriction_terms(direct: ClassFunction, mu: Partition, k: int, n: int, engine=None):
    """Decompose a term character into restricted Schur functors and test that only |lam| = k occurs.

    When the restricted characters with |lam| <= |mu| are linearly independent on
    S_n the decomposition is unique and is read off directly.  Otherwise (small n)
    the decomposition predicted by the wedge-power splitting is checked to
    reproduce the character with nonnegative integer coefficients.
    """
    i = mu.size
    family = [lam for j in range(i + 1) for lam in partitions_of(j) if len(lam) <= n]
    coeffs, unique = restriction_span(direct, family, engine)
    if coeffs is None:
        return None, False, False
    if unique:
        only = all(
            (c == 0) if lam.size != k else (c.denominator == 1 and c >= 0) for lam, c in coeffs.items()
        )
        return {lam: c for lam, c in coeffs.items() if c}, True, only
    target = conjugate(mu)
    predicted = {
        lam: lie_plethysm_schur(lam, i).get(target, Fraction(0)) for lam in partitions_of(k) if len(lam) <= n
    }
    recon = ClassFunction(n)
    for lam, c in predicted.items():
        recon = recon + c * restriction_class_function(lam, n, engine)
    only = recon == direct and all(c.denominator == 1 and c >= 0 for c in predicted.values())
    return {lam: c for lam, c in predicted.items() if c}, False, only


@dataclass
class TermReport:
    k: int
    step: int
    character: list[str]
    irreducibles: dict
    restriction_terms: dict
    direct_matches: bool
    only_size_k: bool
    unique: bool

    def to_json(self) -> dict:
        return {
            "wedge": self.k,
            "step": self.step,
            "character": self.character,
            "irreducibles": self.irreducibles,
            "restriction_terms": self.restriction_terms,
            "direct_matches": self.direct_matches,
            "only_size_k": self.only_size_k,
            "unique": self.unique,
        }


@dataclass
class ResolutionReport:
    mu: Partition
    m: int
    n: int
    exactness: SliceReport | None
    euler_ok: bool
    far_left_ok: bool | None
    terms: list[TermReport] = field(default_factory=list)
    witness: dict | None = None

    @property
    def passed(self) -> bool:
        return (
            (self.exactness is None or self.exactness.passed)
            and self.euler_ok
            and self.far_left_ok is not False
            and all(t.direct_matches and t.only_size_k for t in self.terms)
        )

    def to_json(self) -> dict:
        return {
            "check": "resolution",
            "mu": list(self.mu),
            "m": self.m,
            "n": self.n,
            "passed": self.passed,
            "exactness": self.exactness.to_json() if self.exactness else None,
            "euler_ok": self.euler_ok,
            "far_left_ok": self.far_left_ok,
            "terms": [t.to_json() for t in self.terms],
            "witness": self.witness,
        }


def verify_exactness(m: int, n: int, i: int, copy_order: tuple[int, ...] | None = None) -> SliceReport:
    """Homology of the degree-i slice: C(n,i) m^i at wedge length i, zero elsewhere."""
    if m < 1 or n < 1 or i < 0:
        raise ValueError("need m >= 1, n >= 1, i >= 0")
    return Slice(m, n, i, copy_order).report()


def verify_resolution(
    mu: Partition,
    m: int,
    n: int,
    direct_far_left: bool = True,
    engine: CharacterEngine | None = None,
) -> ResolutionReport:
    """Certify that the s_{mu'} multiplicity complex resolves M_n^mu by restricted Schur functors."""
    mu = Partition(mu)
    _check_mu(mu, m)
    if n < 1:
        raise ValueError("n must be positive")
    pad(mu, n)
    i = mu.size
    # mu empty: the complex is the single term C in degree 0, any alphabet works
    sl = Slice(max(m, 1), n, i)
    exact = sl.report()
    target = m_module_character(mu, n, engine)
    euler = ClassFunction(n)
    terms = []
    witness = None
    for k in range(i + 1):
        char = multiplicity_character(mu, sl.m, n, k, engine)
        euler = euler + (-1) ** (i - k) * char
        direct = direct_term_character(sl, mu, k)
        matches = direct == char
        if not matches and witness is None:
            rho, a, b = char.first_difference(direct)
            witness = {"term": k, "cycle_type": list(rho), "formula": str(a), "direct": str(b)}
        irr = decompose(direct, engine)
        coeffs, unique, only = _restriction_terms(direct, mu, k, n, engine)
        terms.append(
            TermReport(
                k=k,
                step=i - k,
                character=[str(v) for v in direct.as_list()],
                irreducibles={",".join(map(str, lam)): c for lam, c in irr.items()},
                restriction_terms={",".join(map(str, lam)): str(c) for lam, c in (coeffs or {}).items() if c},
                direct_matches=matches,
                only_size_k=only,
                unique=unique,
            )
        )
    euler_ok = euler == target
    if not euler_ok and witness is None:
        rho, a, b = euler.first_difference(target)
        witness = {"euler_at": list(rho), "euler": str(a), "m_module": str(b)}
    far_ok = None
    if direct_far_left:
        far = direct_far_left_character(sl, mu)
        far_ok = far == target
        if not far_ok and witness is None:
            rho, a, b = far.first_difference(target)
            witness = {"far_left_at": list(rho), "kernel": str(a), "m_module": str(b)}
    return ResolutionReport(mu, m, n, exact, euler_ok, far_ok, terms, witness)


def iter_exactness_grid(ms, ns, max_i=None) -> Iterator[tuple[int, int, int]]:
    for m in ms:
        for n in ns:
            top = min(n, 3) + 1 if max_i is None else max_i
            for i in range(top + 1):
                yield m, n, i
