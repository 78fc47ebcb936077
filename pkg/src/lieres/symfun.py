"""Symmetric functions with exact rational coefficients.

Every element carries a basis tag (``p``, ``h``, ``e``, ``m`` or ``s``) and a
sparse map from partitions to :class:`~fractions.Fraction`.  The power-sum
basis is the hub: products, inner products and plethysm are computed there,
and the other bases convert through transition matrices built one degree at a
time.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping

from .characters import DEFAULT_ENGINE
from .partitions import EMPTY, Partition, partitions_of, sign_of, z_of

BASES = ("p", "h", "e", "m", "s")


class SymFn:
    """A finite linear combination of basis elements indexed by partitions."""

    __slots__ = ("basis", "terms")

    def __init__(self, basis: str, terms: Mapping[Iterable[int], object] | None = None):
        if basis not in BASES:
            raise ValueError(f"unknown basis {basis!r}; expected one of {BASES}")
        clean: dict[Partition, Fraction] = {}
        for idx, c in (terms or {}).items():
            c = Fraction(c)
            if c:
                lam = Partition(idx)
                clean[lam] = clean.get(lam, Fraction(0)) + c
                if not clean[lam]:
                    del clean[lam]
        self.basis = basis
        self.terms = clean

    # -- construction ---------------------------------------------------
    @classmethod
    def basis_element(cls, basis: str, lam: Iterable[int] = ()) -> "SymFn":
        return cls(basis, {Partition(lam): 1})

    @classmethod
    def zero(cls, basis: str = "p") -> "SymFn":
        return cls(basis)

    @classmethod
    def one(cls, basis: str = "p") -> "SymFn":
        return cls(basis, {EMPTY: 1})

    # -- structure ------------------------------------------------------
    def degree(self) -> int:
        """Largest total degree present; -1 for zero."""
        return max((lam.size for lam in self.terms), default=-1)

    def is_zero(self) -> bool:
        return not self.terms

    def homogeneous(self, d: int) -> "SymFn":
        return SymFn(self.basis, {lam: c for lam, c in self.terms.items() if lam.size == d})

    def truncate(self, D: int) -> "SymFn":
        return SymFn(self.basis, {lam: c for lam, c in self.terms.items() if lam.size <= D})

    def coefficient(self, lam: Iterable[int]) -> Fraction:
        return self.terms.get(Partition(lam), Fraction(0))

    def sorted_terms(self) -> list[tuple[Partition, Fraction]]:
        """Terms by increasing degree, reverse-lex within a degree."""
        return sorted(self.terms.items(), key=lambda kv: (kv[0].size, [-a for a in kv[0]] + [0]))

    # -- conversions ----------------------------------------------------
    def to_p(self) -> "SymFn":
        return to_p(self)

    def to_basis(self, basis: str) -> "SymFn":
        return to_basis(self, basis)

    def to_schur(self) -> "SymFn":
        return to_schur(self)

    # -- arithmetic -----------------------------------------------------
    def _coerce(self, other: "SymFn") -> tuple["SymFn", "SymFn"]:
        if self.basis == other.basis:
            return self, other
        return to_p(self), to_p(other)

    def __add__(self, other):
        if not isinstance(other, SymFn):
            other = SymFn.one(self.basis) * other
        a, b = self._coerce(other)
        terms = dict(a.terms)
        for lam, c in b.terms.items():
            terms[lam] = terms.get(lam, Fraction(0)) + c
        return SymFn(a.basis, terms)

    __radd__ = __add__

    def __neg__(self) -> "SymFn":
        return SymFn(self.basis, {lam: -c for lam, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, SymFn):
            return multiply(self, other)
        c = Fraction(other)
        return SymFn(self.basis, {lam: c * v for lam, v in self.terms.items()})

    __rmul__ = __mul__

    def __truediv__(self, other) -> "SymFn":
        c = Fraction(other)
        return SymFn(self.basis, {lam: v / c for lam, v in self.terms.items()})

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = SymFn.one(self.basis) * other
        if not isinstance(other, SymFn):
            return NotImplemented
        if self.basis == other.basis:
            return self.terms == other.terms
        return to_p(self).terms == to_p(other).terms

    def __hash__(self) -> int:
        return hash(tuple(to_p(self).sorted_terms()))

    def __repr__(self) -> str:
        if not self.terms:
            return f"SymFn({self.basis!r}, 0)"
        pieces = []
        for lam, c in self.sorted_terms():
            idx = ",".join(map(str, lam))
            pieces.append(f"{c}*{self.basis}[{idx}]")
        return " + ".join(pieces)

    # -- evaluation -----------------------------------------------------
    def evaluate_ones(self, m: int) -> Fraction:
        """Specialize to m variables all equal to 1."""
        return sum((c * Fraction(m) ** len(rho) for rho, c in to_p(self).terms.items()), Fraction(0))

    def to_json(self) -> dict:
        return {
            "basis": self.basis,
            "terms": [
                {"idx": list(lam), "num": c.numerator, "den": c.denominator}
                for lam, c in self.sorted_terms()
            ],
        }

    @classmethod
    def from_json(cls, data: dict) -> "SymFn":
        return cls(
            data["basis"],
            {tuple(t["idx"]): Fraction(t["num"], t.get("den", 1)) for t in data["terms"]},
        )


def s(*parts: int) -> SymFn:
    return SymFn.basis_element("s", parts)


def p(*parts: int) -> SymFn:
    return SymFn.basis_element("p", parts)


def h(*parts: int) -> SymFn:
    return SymFn.basis_element("h", sorted(parts, reverse=True))


def e(*parts: int) -> SymFn:
    return SymFn.basis_element("e", sorted(parts, reverse=True))


def m(*parts: int) -> SymFn:
    return SymFn.basis_element("m", parts)


# -- transition matrices ------------------------------------------------------

def _mul_p_dicts(a: Mapping[Partition, Fraction], b: Mapping[Partition, Fraction], D: int | None = None):
    out: dict[Partition, Fraction] = {}
    for la, ca in a.items():
        for lb, cb in b.items():
            if D is not None and la.size + lb.size > D:
                continue
            key = Partition(sorted(la + lb, reverse=True))
            out[key] = out.get(key, Fraction(0)) + ca * cb
    return {k: v for k, v in out.items() if v}


@lru_cache(maxsize=None)
def _h_or_e_in_p(kind: str, k: int) -> tuple[tuple[Partition, Fraction], ...]:
    terms = []
    for rho in partitions_of(k):
        c = Fraction(1, z_of(rho))
        if kind == "e":
            c *= sign_of(rho)
        terms.append((rho, c))
    return tuple(terms)


def _p_to_monomial_count(rho: Partition, lam: Partition) -> int:
    """Coefficient of m_lam in p_rho: ways to distribute the parts of rho into rows summing to lam."""
    target = list(lam)

    def go(i: int) -> int:
        if i == len(rho):
            return 1 if not any(target) else 0
        total = 0
        for j in range(len(target)):
            if target[j] >= rho[i]:
                target[j] -= rho[i]
                total += go(i + 1)
                target[j] += rho[i]
        return total

    return go(0)


def _invert(matrix: list[list[Fraction]]) -> list[list[Fraction]]:
    size = len(matrix)
    aug = [list(row) + [Fraction(int(i == j)) for j in range(size)] for i, row in enumerate(matrix)]
    for col in range(size):
        piv = next(r for r in range(col, size) if aug[r][col] != 0)
        aug[col], aug[piv] = aug[piv], aug[col]
        inv = 1 / aug[col][col]
        aug[col] = [x * inv for x in aug[col]]
        for r in range(size):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    return [row[size:] for row in aug]


@lru_cache(maxsize=None)
def _to_p_table(basis: str, d: int) -> dict[Partition, dict[Partition, Fraction]]:
    """Map each degree-d basis element of ``basis`` to its power-sum expansion."""
    parts = partitions_of(d)
    table: dict[Partition, dict[Partition, Fraction]] = {}
    if basis == "p":
        return {lam: {lam: Fraction(1)} for lam in parts}
    if basis in ("h", "e"):
        for lam in parts:
            acc = {EMPTY: Fraction(1)}
            for k in lam:
                acc = _mul_p_dicts(acc, dict(_h_or_e_in_p(basis, k)))
            table[lam] = acc
        return table
    if basis == "s":
        for lam in parts:
            table[lam] = {
                rho: Fraction(c, z_of(rho))
                for rho in parts
                if (c := DEFAULT_ENGINE.mn_character(lam, rho))
            }
        return table
    if basis == "m":
        # p_rho = sum_lam R[rho][lam] m_lam; invert R
        R = [[Fraction(_p_to_monomial_count(rho, lam)) for lam in parts] for rho in parts]
        Rinv = _invert(R)
        for j, lam in enumerate(parts):
            table[lam] = {rho: Rinv[j][i] for i, rho in enumerate(parts) if Rinv[j][i]}
        return table
    raise ValueError(f"unknown basis {basis!r}")


@lru_cache(maxsize=None)
def _from_p_table(basis: str, d: int) -> dict[Partition, dict[Partition, Fraction]]:
    """Map each degree-d power sum p_rho to its expansion in ``basis``."""
    parts = partitions_of(d)
    if basis == "p":
        return {rho: {rho: Fraction(1)} for rho in parts}
    if basis == "s":
        # <p_rho, s_lam> = chi^lam(rho)
        return {
            rho: {lam: Fraction(c) for lam in parts if (c := DEFAULT_ENGINE.mn_character(lam, rho))}
            for rho in parts
        }
    fwd = _to_p_table(basis, d)
    M = [[fwd[lam].get(rho, Fraction(0)) for rho in parts] for lam in parts]
    Minv = _invert(M)
    return {rho: {lam: Minv[i][j] for j, lam in enumerate(parts) if Minv[i][j]} for i, rho in enumerate(parts)}


def to_p(f: SymFn) -> SymFn:
    """Express ``f`` in the power-sum basis."""
    if f.basis == "p":
        return f
    out: dict[Partition, Fraction] = {}
    for lam, c in f.terms.items():
        for rho, v in _to_p_table(f.basis, lam.size)[lam].items():
            out[rho] = out.get(rho, Fraction(0)) + c * v
    return SymFn("p", out)


def to_basis(f: SymFn, basis: str) -> SymFn:
    if f.basis == basis:
        return f
    fp = to_p(f)
    if basis == "p":
        return fp
    out: dict[Partition, Fraction] = {}
    for rho, c in fp.terms.items():
        for lam, v in _from_p_table(basis, rho.size)[rho].items():
            out[lam] = out.get(lam, Fraction(0)) + c * v
    return SymFn(basis, out)


def to_schur(f: SymFn) -> SymFn:
    return to_basis(f, "s")


def multiply(f: SymFn, g: SymFn, D: int | None = None) -> SymFn:
    """Ring product, computed on power sums; optionally truncated above degree ``D``."""
    return SymFn("p", _mul_p_dicts(to_p(f).terms, to_p(g).terms, D))


def inner(f: SymFn, g: SymFn) -> Fraction:
    """Hall inner product: <p_rho, p_tau> = delta * z_rho."""
    if f.basis == "s" and g.basis == "s":
        small, big = (f, g) if len(f.terms) <= len(g.terms) else (g, f)
        return sum((c * big.terms.get(lam, 0) for lam, c in small.terms.items()), Fraction(0))
    fp, gp = to_p(f), to_p(g)
    return sum((c * gp.terms.get(rho, 0) * z_of(rho) for rho, c in fp.terms.items()), Fraction(0))


def truncate(f: SymFn, D: int) -> SymFn:
    return f.truncate(D)


def _power_plethysm(k: int, g: Mapping[Partition, Fraction], D: int) -> dict[Partition, Fraction]:
    """p_k[g] truncated at D: every p_j in g becomes p_{jk}; constants stay fixed."""
    out = {}
    for rho, c in g.items():
        if rho.size * k <= D:
            out[Partition(a * k for a in rho)] = c
    return out


def plethysm(f: SymFn, g: SymFn, D: int) -> SymFn:
    """The plethysm f[g], truncated above total degree ``D``; returned in the p-basis."""
    fp = to_p(f)
    gp = to_p(g).truncate(D).terms
    powers: dict[int, dict[Partition, Fraction]] = {}
    prefix: dict[tuple[int, ...], dict[Partition, Fraction]] = {(): {EMPTY: Fraction(1)}}
    out: dict[Partition, Fraction] = {}
    for tau, c in fp.terms.items():
        # build p_tau[g] part by part, sharing prefixes between terms
        acc = prefix[()]
        for j in range(len(tau)):
            key = tuple(tau[: j + 1])
            if key not in prefix:
                k = tau[j]
                if k not in powers:
                    powers[k] = _power_plethysm(k, gp, D)
                prefix[key] = _mul_p_dicts(acc, powers[k], D)
            acc = prefix[key]
        for rho, v in acc.items():
            out[rho] = out.get(rho, Fraction(0)) + c * v
    return SymFn("p", out)


def mobius(n: int) -> int:
    """Mobius function by trial-division factorization."""
    if n < 1:
        raise ValueError("mobius is defined on positive integers")
    result, q, rest = 1, 2, n
    while q * q <= rest:
        if rest % q == 0:
            rest //= q
            if rest % q == 0:
                return 0
            result = -result
        q += 1
    if rest > 1:
        result = -result
    return result


def divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


@lru_cache(maxsize=None)
def _lyndon_terms(k: int) -> tuple[tuple[Partition, Fraction], ...]:
    return tuple(
        (Partition((d,) * (k // d)), Fraction(mu, k))
        for d in divisors(k)
        if (mu := mobius(d))
    )


def lyndon_sym(k: int) -> SymFn:
    """The Lyndon symmetric function L_k = (1/k) sum_{d | k} mu(d) p_d^{k/d}."""
    if k < 1:
        raise ValueError("lyndon_sym needs k >= 1")
    return SymFn("p", dict(_lyndon_terms(k)))


def series(kind: str, D: int) -> SymFn:
    """``total_lyndon``: L_1 + ... + L_D.  ``h_series``: 1 + h_1 + ... + h_D."""
    if D < 0:
        raise ValueError("degree bound must be nonnegative")
    if kind == "total_lyndon":
        out = SymFn("p")
        for k in range(1, D + 1):
            out = out + lyndon_sym(k)
        return out
    if kind == "h_series":
        return SymFn("h", {(k,) if k else (): 1 for k in range(D + 1)})
    raise ValueError(f"unknown series {kind!r}; expected 'total_lyndon' or 'h_series'")
