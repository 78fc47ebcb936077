"""Integer partitions, conjugation, strip predicates and padding.

Partitions are stored without trailing zeros and the empty partition is an
ordinary value.  Python tuple ordering on parts is lexicographic, so sorting
in descending order gives the reverse-lexicographic order used everywhere
for tables: ``(3) > (2, 1) > (1, 1, 1)``.
"""
from __future__ import annotations

from collections import Counter
from functools import lru_cache
from math import factorial, prod
from typing import Iterable, Iterator


class Partition(tuple):
    """A weakly decreasing tuple of positive integers."""

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()) -> "Partition":
        parts = tuple(parts)
        for a in parts:
            if not isinstance(a, int) or isinstance(a, bool) or a < 1:
                raise ValueError(f"partition parts must be positive integers, got {parts!r}")
        for a, b in zip(parts, parts[1:]):
            if a < b:
                raise ValueError(f"partition parts must be weakly decreasing, got {parts!r}")
        return super().__new__(cls, parts)

    @property
    def size(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    def part(self, i: int) -> int:
        """The i-th part (0-based), reading zero past the end."""
        return self[i] if i < len(self) else 0

    def conjugate(self) -> "Partition":
        return conjugate(self)

    def multiplicities(self) -> Counter:
        return Counter(self)

    def __repr__(self) -> str:
        return f"Partition({', '.join(map(str, self))})"

    def __str__(self) -> str:
        return to_text(self)


EMPTY = Partition()


def _partitions_bounded(k: int, largest: int) -> Iterator[tuple[int, ...]]:
    if k == 0:
        yield ()
        return
    for first in range(min(k, largest), 0, -1):
        for rest in _partitions_bounded(k - first, first):
            yield (first,) + rest


@lru_cache(maxsize=None)
def _partitions_cached(k: int) -> tuple[Partition, ...]:
    return tuple(Partition(p) for p in _partitions_bounded(k, k))


def partitions_of(k: int) -> list[Partition]:
    """All partitions of ``k`` in reverse-lexicographic order.

    >>> partitions_of(3)
    [Partition(3), Partition(2, 1), Partition(1, 1, 1)]
    """
    if k < 0:
        raise ValueError(f"cannot partition a negative integer: {k}")
    return list(_partitions_cached(k))


def partitions_up_to(k: int) -> list[Partition]:
    """Partitions of 0, 1, ..., k, grouped by size, each group reverse-lex."""
    return [p for j in range(k + 1) for p in partitions_of(j)]


def conjugate(lam: Iterable[int]) -> Partition:
    parts = tuple(lam)
    if not parts:
        return EMPTY
    return Partition(sum(1 for a in parts if a > j) for j in range(parts[0]))


def pad(mu: Partition, n: int) -> Partition:
    """Return ``mu[n] = (n - |mu|, mu_1, mu_2, ...)``.

    Raises ``ValueError`` unless ``n >= |mu| + mu_1``.
    """
    mu = Partition(mu)
    first = n - mu.size
    if first < mu.part(0):
        raise ValueError(f"pad({to_text(mu) or '∅'}, {n}) needs n >= |mu| + mu_1 = {mu.size + mu.part(0)}")
    if first == 0:
        # only reachable for mu = () and n = 0
        return EMPTY
    return Partition((first,) + tuple(mu))


def unpad(lam: Partition) -> Partition:
    """Inverse of :func:`pad`: drop the first row."""
    return Partition(tuple(lam)[1:])


def is_horizontal_strip(mu: Iterable[int], nu: Iterable[int]) -> bool:
    """True iff ``nu`` is contained in ``mu`` and ``mu/nu`` has at most one box per column."""
    mu, nu = tuple(mu), tuple(nu)
    if len(nu) > len(mu):
        return False
    for i, m in enumerate(mu):
        v = nu[i] if i < len(nu) else 0
        below = mu[i + 1] if i + 1 < len(mu) else 0
        if not (m >= v >= below):
            return False
    return True


def is_vertical_strip(mu: Iterable[int], nu: Iterable[int]) -> bool:
    """True iff ``mu/nu`` is a skew shape with at most one box per row."""
    return is_horizontal_strip(conjugate(mu), conjugate(nu))


def horizontal_strips_below(mu: Partition) -> list[Partition]:
    """All ``nu`` with ``mu/nu`` a horizontal strip, sorted reverse-lex."""
    mu = Partition(mu)
    if not mu:
        return [EMPTY]
    ranges = [range(mu.part(i + 1), mu[i] + 1) for i in range(len(mu))]
    out = []
    for choice in _product(ranges):
        out.append(Partition(a for a in choice if a > 0))
    return sorted(out, reverse=True)


def vertical_strips_below(mu: Partition) -> list[Partition]:
    """All ``nu`` with ``mu/nu`` a vertical strip, sorted reverse-lex."""
    return sorted((conjugate(nu) for nu in horizontal_strips_below(conjugate(mu))), reverse=True)


def _product(ranges):
    if not ranges:
        yield ()
        return
    for a in ranges[0]:
        for rest in _product(ranges[1:]):
            yield (a,) + rest


def z_of(rho: Iterable[int]) -> int:
    """Centralizer order ``prod_i i^{m_i} m_i!`` of a permutation of cycle type ``rho``."""
    return prod(i**m * factorial(m) for i, m in Counter(rho).items())


def class_size(rho: Partition) -> int:
    return factorial(sum(rho)) // z_of(rho)


def sign_of(rho: Iterable[int]) -> int:
    """Sign of a permutation of cycle type ``rho``."""
    rho = tuple(rho)
    return -1 if (sum(rho) - len(rho)) % 2 else 1


def contains(mu: Partition, nu: Partition) -> bool:
    return len(nu) <= len(mu) and all(a >= b for a, b in zip(mu, nu))


def to_text(lam: Iterable[int]) -> str:
    return ",".join(str(a) for a in lam)


def parse_partition(text: str) -> Partition:
    """Parse ``"3,2,1"``; the empty string (or ``"0"``/``"∅"``) is the empty partition."""
    text = text.strip()
    if text in ("", "∅", "0", "[]", "()"):
        return EMPTY
    try:
        parts = [int(t) for t in text.split(",")]
    except ValueError:
        raise ValueError(f"malformed partition {text!r}: expected comma-separated integers") from None
    return Partition(parts)
