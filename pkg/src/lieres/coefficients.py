"""Restriction coefficients a, their inverse b, and the M-module expansion.

``a_coeff(lam, mu)`` is the multiplicity of the S_n-irreducible indexed by
``mu`` in the restriction of the GL_n-module S^lam(C^n) to permutation
matrices.  With ``n=None`` the index ``mu`` is itself a partition of n; with
an explicit ``n`` it is the padded partition ``mu[n]``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .characters import (
    DEFAULT_ENGINE,
    CharacterEngine,
    ClassFunction,
    cf_inner,
    irreducible,
    m_module_character,
    restriction_class_function,
)
from .partitions import (
    EMPTY,
    Partition,
    conjugate,
    pad,
    partitions_up_to,
    vertical_strips_below,
)
from .symfun import SymFn, plethysm, series, to_schur

METHODS = ("plethysm", "character")


@lru_cache(maxsize=None)
def _h_plethysm_schur(target: Partition, D: int) -> dict[Partition, Fraction]:
    """Schur coefficients of s_target[1 + h_1 + h_2 + ...] in degree exactly D."""
    f = plethysm(SymFn.basis_element("s", target), series("h_series", D), D)
    return to_schur(f.homogeneous(D)).terms


@lru_cache(maxsize=None)
def lie_plethysm_schur(lam: Partition, D: int) -> dict[Partition, Fraction]:
    """Schur coefficients of s_{lam'}[L_1 + ... + L_D], all degrees up to D."""
    f = plethysm(SymFn.basis_element("s", conjugate(lam)), series("total_lyndon", D), D)
    return to_schur(f).terms


def stable_n(lam: Partition, mu: Partition) -> int:
    """Smallest n from which ``a_coeff(lam, mu, n=n)`` no longer depends on n."""
    mu, lam = Partition(mu), Partition(lam)
    return mu.size + max(mu.part(0), lam.size)


def a_coeff(
    lam: Partition,
    mu: Partition,
    method: str = "plethysm",
    n: int | None = None,
    engine: CharacterEngine | None = None,
) -> int:
    """Multiplicity of S^mu (or S^{mu[n]} when ``n`` is given) in Res S^lam(C^n)."""
    lam, mu = Partition(lam), Partition(mu)
    target = mu if n is None else pad(mu, n)
    if method == "plethysm":
        value = _h_plethysm_schur(target, lam.size).get(lam, Fraction(0))
    elif method == "character":
        eng = engine or DEFAULT_ENGINE
        N = target.size
        value = cf_inner(restriction_class_function(lam, N, eng), irreducible(target, eng))
    else:
        raise ValueError(f"unknown method {method!r}; expected one of {METHODS}")
    if value.denominator != 1 or value < 0:
        raise ArithmeticError(f"a-coefficient for λ={lam!r}, μ={target!r} came out as {value}")
    return int(value)


def b_coeff(lam: Partition, mu: Partition, D: int | None = None) -> int:
    """Signed coefficient of Res S^lam(C^n) in the irreducible S^{mu[n]}.

    Summed directly over vertical strips mu/nu, so it can be compared with
    the expansion obtained by inverting the a-coefficients.
    """
    lam, mu = Partition(lam), Partition(mu)
    if D is None:
        D = mu.size
    if D < mu.size:
        raise ValueError(f"degree bound {D} is below |μ| = {mu.size}")
    if lam.size > mu.size:
        return 0
    schur = lie_plethysm_schur(lam, D)
    total = sum((schur.get(conjugate(nu), Fraction(0)) for nu in vertical_strips_below(mu)), Fraction(0))
    sign = -1 if (mu.size - lam.size) % 2 else 1
    return sign * int(total)


@dataclass(frozen=True)
class Expansion:
    """A signed combination of restricted Schur functors indexed by ``lam``."""

    mu: Partition
    terms: tuple[tuple[Partition, int], ...]

    def as_dict(self) -> dict[Partition, int]:
        return dict(self.terms)

    def class_function(self, n: int, engine: CharacterEngine | None = None) -> ClassFunction:
        total = ClassFunction(n)
        for lam, c in self.terms:
            total = total + c * restriction_class_function(lam, n, engine)
        return total

    def to_json(self) -> dict:
        return {
            "mu": list(self.mu),
            "terms": [{"lambda": list(lam), "coeff": c} for lam, c in self.terms],
        }


def _ordered(lams):
    # decreasing size, reverse-lex within a size
    return sorted(lams, key=lambda lam: (-lam.size, [-a for a in lam] + [0]))


def m_expansion(mu: Partition) -> Expansion:
    """[M_n^mu] = sum over lam of (-1)^{|mu|-|lam|} <s_{lam'}[L], s_{mu'}> [Res S^lam(C^n)]."""
    mu = Partition(mu)
    D = mu.size
    mu_conj = conjugate(mu)
    terms = []
    for lam in _ordered(partitions_up_to(D)):
        c = lie_plethysm_schur(lam, D).get(mu_conj, Fraction(0))
        if c:
            sign = -1 if (mu.size - lam.size) % 2 else 1
            terms.append((lam, sign * int(c)))
    return Expansion(mu, tuple(terms))


def s_expansion(mu: Partition) -> Expansion:
    """[S^{mu[n]}] as a signed combination of restricted Schur functors, via b_coeff."""
    mu = Partition(mu)
    terms = []
    for lam in _ordered(partitions_up_to(mu.size)):
        c = b_coeff(lam, mu)
        if c:
            terms.append((lam, c))
    return Expansion(mu, tuple(terms))


@dataclass
class InversionReport:
    mu: Partition
    n: int
    passed: bool
    terms: int
    witness: dict | None = None

    def to_json(self) -> dict:
        return {
            "check": "inversion",
            "mu": list(self.mu),
            "n": self.n,
            "passed": self.passed,
            "terms": self.terms,
            "witness": self.witness,
        }


def verify_inversion(
    mu: Partition,
    n: int,
    expansion: Expansion | None = None,
    engine: CharacterEngine | None = None,
) -> InversionReport:
    """Check [M_n^mu] against the m-expansion as exact class functions on S_n.

    ``expansion`` overrides the computed expansion (used to inject faults).
    """
    mu = Partition(mu)
    pad(mu, n)
    exp = expansion if expansion is not None else m_expansion(mu)
    lhs = m_module_character(mu, n, engine)
    rhs = exp.class_function(n, engine)
    diff = lhs.first_difference(rhs)
    witness = None
    if diff is not None:
        rho, left, right = diff
        witness = {"cycle_type": list(rho), "m_module": str(left), "expansion": str(right)}
    return InversionReport(mu, n, diff is None, len(exp.terms), witness)


@dataclass
class LittlewoodReport:
    max_size: int
    passed: bool
    pairs: int
    checks: int
    failures: list = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "check": "littlewood",
            "max_size": self.max_size,
            "passed": self.passed,
            "pairs": self.pairs,
            "checks": self.checks,
            "failures": self.failures,
        }


def verify_littlewood(S: int) -> LittlewoodReport:
    """a-coefficient of S^{mu[n]} in Res S^lam(C^n) is delta(lam, mu) when |mu| >= |lam|.

    Each pair is checked at the smallest admissible n and at the stable n.
    """
    if S < 1:
        raise ValueError("size bound must be at least 1")
    pairs = checks = 0
    failures = []
    everything = partitions_up_to(S)
    for mu in everything:
        for lam in everything:
            if lam.size > mu.size:
                continue
            pairs += 1
            expected = int(lam == mu)
            for n in sorted({mu.size + mu.part(0), stable_n(lam, mu)}):
                checks += 1
                got = a_coeff(lam, mu, "plethysm", n=n)
                if got != expected:
                    failures.append({"lambda": list(lam), "mu": list(mu), "n": n, "got": got, "expected": expected})
    return LittlewoodReport(S, not failures, pairs, checks, failures)


__all__ = [
    "EMPTY",
    "Expansion",
    "InversionReport",
    "LittlewoodReport",
    "METHODS",
    "a_coeff",
    "b_coeff",
    "lie_plethysm_schur",
    "m_expansion",
    "s_expansion",
    "stable_n",
    "verify_inversion",
    "verify_littlewood",
]
