"""Characters of symmetric groups and class-function arithmetic.

Irreducible characters come from the Murnaghan-Nakayama rule, implemented on
beta-sets: removing a border strip of length r is moving one bead from
position b to b - r, with sign given by the parity of the beads jumped over.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial
from typing import Callable, Iterable, Mapping

from .partitions import (
    EMPTY,
    Partition,
    class_size,
    horizontal_strips_below,
    pad,
    partitions_of,
    z_of,
)

Number = int | Fraction


class CharacterEngine:
    """Memoizing evaluator for irreducible and restriction characters.

    The memo tables belong to the instance; create a private engine when
    isolation matters, or share :data:`DEFAULT_ENGINE` for reuse.
    """

    def __init__(self) -> None:
        self._mn: dict[tuple[Partition, Partition], int] = {}
        self._res: dict[tuple[Partition, Partition], int] = {}

    def mn_character(self, lam: Partition, rho: Partition) -> int:
        lam, rho = Partition(lam), Partition(rho)
        if lam.size != rho.size:
            raise ValueError(f"size mismatch: |λ|={lam.size} but |ρ|={rho.size}")
        return self._chi(lam, rho)

    def _chi(self, lam: Partition, rho: Partition) -> int:
        if not rho:
            return 1
        key = (lam, rho)
        hit = self._mn.get(key)
        if hit is not None:
            return hit
        r, rest = rho[0], Partition(rho[1:])
        ell = len(lam)
        beta = [lam[i] + ell - 1 - i for i in range(ell)]
        occupied = set(beta)
        total = 0
        for idx, b in enumerate(beta):
            target = b - r
            if target < 0 or target in occupied:
                continue
            jumped = sum(1 for c in beta if target < c < b)
            new_beta = sorted(beta[:idx] + [target] + beta[idx + 1 :], reverse=True)
            mu = Partition(x for x in (new_beta[i] - (ell - 1 - i) for i in range(ell)) if x > 0)
            total += (-1) ** jumped * self._chi(mu, rest)
        self._mn[key] = total
        return total

    def restriction_character(self, lam: Partition, n: int, rho: Partition) -> int:
        """Trace of a permutation matrix of cycle type ``rho`` on the Schur functor ``S^lam(C^n)``."""
        lam, rho = Partition(lam), Partition(rho)
        if rho.size != n:
            raise ValueError(f"cycle type {rho!r} is not a partition of n={n}")
        if lam.length > n:
            return 0
        key = (lam, rho)
        hit = self._res.get(key)
        if hit is not None:
            return hit
        # power sums of the eigenvalues: p_k = sum of cycle lengths d dividing k
        power = {}

        def p(k: int) -> int:
            if k not in power:
                power[k] = sum(d for d in rho if k % d == 0)
            return power[k]

        total = Fraction(0)
        for tau in partitions_of(lam.size):
            chi = self._chi(lam, tau)
            if chi:
                value = 1
                for part in tau:
                    value *= p(part)
                total += Fraction(chi * value, z_of(tau))
        if total.denominator != 1:
            raise ArithmeticError(f"non-integral trace {total} for λ={lam!r}, ρ={rho!r}")
        self._res[key] = int(total)
        return int(total)


DEFAULT_ENGINE = CharacterEngine()


@dataclass(frozen=True)
class ClassFunction:
    """A class function on S_n, stored on every cycle type (missing keys are zero)."""

    n: int
    values: Mapping[Partition, Fraction] = field(default_factory=dict)

    def __post_init__(self) -> None:
        full = {rho: Fraction(0) for rho in partitions_of(self.n)}
        for rho, v in self.values.items():
            rho = Partition(rho)
            if rho.size != self.n:
                raise ValueError(f"cycle type {rho!r} is not a partition of {self.n}")
            full[rho] = Fraction(v)
        object.__setattr__(self, "values", full)

    @classmethod
    def from_function(cls, n: int, fn: Callable[[Partition], Number]) -> "ClassFunction":
        return cls(n, {rho: fn(rho) for rho in partitions_of(n)})

    def __getitem__(self, rho: Iterable[int]) -> Fraction:
        return self.values[Partition(rho)]

    def _check(self, other: "ClassFunction") -> None:
        if not isinstance(other, ClassFunction):
            raise TypeError(f"expected ClassFunction, got {type(other).__name__}")
        if other.n != self.n:
            raise ValueError(f"class functions on S_{self.n} and S_{other.n} do not combine")

    def __add__(self, other: "ClassFunction") -> "ClassFunction":
        self._check(other)
        return ClassFunction(self.n, {r: v + other.values[r] for r, v in self.values.items()})

    def __sub__(self, other: "ClassFunction") -> "ClassFunction":
        self._check(other)
        return ClassFunction(self.n, {r: v - other.values[r] for r, v in self.values.items()})

    def __neg__(self) -> "ClassFunction":
        return ClassFunction(self.n, {r: -v for r, v in self.values.items()})

    def __mul__(self, other):
        if isinstance(other, ClassFunction):
            self._check(other)
            return ClassFunction(self.n, {r: v * other.values[r] for r, v in self.values.items()})
        return ClassFunction(self.n, {r: v * other for r, v in self.values.items()})

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, ClassFunction):
            return NotImplemented
        return self.n == other.n and self.values == other.values

    def __hash__(self) -> int:
        return hash((self.n, tuple(sorted(self.values.items()))))

    def is_zero(self) -> bool:
        return not any(self.values.values())

    def as_list(self) -> list[Fraction]:
        """Values in reverse-lex order of cycle types."""
        return [self.values[rho] for rho in partitions_of(self.n)]

    def first_difference(self, other: "ClassFunction"):
        """First cycle type (reverse-lex) where the two differ, with both values, else ``None``."""
        self._check(other)
        for rho in partitions_of(self.n):
            if self.values[rho] != other.values[rho]:
                return rho, self.values[rho], other.values[rho]
        return None

    def __repr__(self) -> str:
        inner = ", ".join(f"{tuple(r)}: {v}" for r, v in self.values.items())
        return f"ClassFunction(n={self.n}, {{{inner}}})"


def mn_character(lam: Partition, rho: Partition, engine: CharacterEngine | None = None) -> int:
    """Irreducible character value chi^lam(rho)."""
    return (engine or DEFAULT_ENGINE).mn_character(lam, rho)


def class_table(n: int) -> list[tuple[Partition, int]]:
    """Cycle types of S_n with class sizes, reverse-lex."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return [(rho, class_size(rho)) for rho in partitions_of(n)]


def irreducible(lam: Partition, engine: CharacterEngine | None = None) -> ClassFunction:
    lam = Partition(lam)
    eng = engine or DEFAULT_ENGINE
    return ClassFunction.from_function(lam.size, lambda rho: eng.mn_character(lam, rho))


def character_table(n: int, engine: CharacterEngine | None = None) -> list[list[int]]:
    """Rows indexed by irreducibles, columns by cycle types, both reverse-lex."""
    eng = engine or DEFAULT_ENGINE
    classes = partitions_of(n)
    return [[eng.mn_character(lam, rho) for rho in classes] for lam in classes]


def restriction_character(lam: Partition, n: int, rho: Partition, engine: CharacterEngine | None = None) -> int:
    return (engine or DEFAULT_ENGINE).restriction_character(lam, n, rho)


def restriction_class_function(lam: Partition, n: int, engine: CharacterEngine | None = None) -> ClassFunction:
    """Character of S^lam(C^n) restricted to permutation matrices."""
    eng = engine or DEFAULT_ENGINE
    return ClassFunction.from_function(n, lambda rho: eng.restriction_character(lam, n, rho))


def m_module_character(mu: Partition, n: int, engine: CharacterEngine | None = None) -> ClassFunction:
    """Character of the induced module M_n^mu, as a sum over horizontal strips mu/nu of chi^{nu[n]}."""
    mu = Partition(mu)
    pad(mu, n)  # precondition
    eng = engine or DEFAULT_ENGINE
    total = ClassFunction(n)
    for nu in horizontal_strips_below(mu):
        total = total + irreducible(pad(nu, n), eng)
    return total


def cf_inner(f: ClassFunction, g: ClassFunction) -> Fraction:
    """Normalized inner product of two rational-valued class functions."""
    f._check(g)
    total = sum((class_size(rho) * f.values[rho] * g.values[rho] for rho in f.values), Fraction(0))
    return total / factorial(f.n)


def decompose(f: ClassFunction, engine: CharacterEngine | None = None) -> dict[Partition, int]:
    """Multiplicities of irreducibles in ``f``; raises if one is not an integer."""
    eng = engine or DEFAULT_ENGINE
    out = {}
    for lam in partitions_of(f.n):
        c = cf_inner(f, irreducible(lam, eng))
        if c.denominator != 1:
            raise ValueError(f"multiplicity of χ^{lam!r} is {c}: not a virtual character")
        if c:
            out[lam] = int(c)
    return out


def trivial(n: int) -> ClassFunction:
    return ClassFunction.from_function(n, lambda rho: 1)


def permutation_character(n: int) -> ClassFunction:
    """Fixed-point count, the character of C^n."""
    return ClassFunction.from_function(n, lambda rho: sum(1 for a in rho if a == 1))


__all__ = [
    "CharacterEngine",
    "ClassFunction",
    "DEFAULT_ENGINE",
    "EMPTY",
    "cf_inner",
    "character_table",
    "class_table",
    "decompose",
    "irreducible",
    "m_module_character",
    "mn_character",
    "permutation_character",
    "restriction_character",
    "restriction_class_function",
    "trivial",
]
