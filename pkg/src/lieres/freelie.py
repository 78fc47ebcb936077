"""Degree-truncated free Lie algebras in the Lyndon basis, and L tensor C^n.

Each Lyndon word w stands for its standard bracketing P_w.  Elements are
handled through their images in the tensor algebra: the image of P_w is w
plus lexicographically larger words of the same length, so a commutator of
images is converted back to Lyndon coordinates by peeling off the smallest
word repeatedly.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Mapping

from .symfun import divisors, mobius

Word = tuple[int, ...]


def _duval(m: int, d: int) -> Iterator[Word]:
    """All Lyndon words of length at most d on letters 1..m, in lexicographic order."""
    w = [0]
    while w:
        w[-1] += 1
        yield tuple(w)
        k = len(w)
        while len(w) < d:
            w.append(w[len(w) - k])
        while w and w[-1] == m:
            w.pop()


def lyndon_words(m: int, d: int) -> list[Word]:
    if m < 1 or d < 1:
        raise ValueError("alphabet size and degree must be positive")
    return [w for w in _duval(m, d) if len(w) == d]


def is_lyndon(w: Word) -> bool:
    w = tuple(w)
    return bool(w) and all(w < w[i:] + w[:i] for i in range(1, len(w)))


def witt_dim(m: int, d: int) -> int:
    """Dimension of the degree-d part of the free Lie algebra on m letters."""
    if m < 1 or d < 1:
        raise ValueError("alphabet size and degree must be positive")
    total = sum(mobius(e) * m ** (d // e) for e in divisors(d))
    return total // d


def standard_factorization(w: Word) -> tuple[Word, Word]:
    """Split w = uv with v the longest proper Lyndon suffix."""
    for i in range(1, len(w)):
        if is_lyndon(w[i:]):
            return w[:i], w[i:]
    raise ValueError(f"{w!r} has no standard factorization")


def _add_into(acc: dict, other: Mapping, scale=1) -> None:
    for k, v in other.items():
        c = acc.get(k, 0) + scale * v
        if c:
            acc[k] = c
        else:
            acc.pop(k, None)


def _commutator(a: Mapping[Word, int], b: Mapping[Word, int], D: int | None = None) -> dict[Word, int]:
    out: dict[Word, int] = {}
    for u, cu in a.items():
        for v, cv in b.items():
            if D is not None and len(u) + len(v) > D:
                continue
            _add_into(out, {u + v: cu * cv})
            _add_into(out, {v + u: -cu * cv})
    return out


_IMAGES: dict[Word, dict[Word, int]] = {}


def tensor_image(w: Word) -> dict[Word, int]:
    """Image of the standard bracketing P_w in the tensor algebra."""
    w = tuple(w)
    hit = _IMAGES.get(w)
    if hit is None:
        if len(w) == 1:
            hit = {w: 1}
        else:
            u, v = standard_factorization(w)
            hit = _commutator(tensor_image(u), tensor_image(v))
        if min(hit) != w or hit[w] != 1:
            raise ArithmeticError(f"image of P_{w} does not lead with {w}")
        _IMAGES[w] = hit
    return hit


@dataclass(frozen=True)
class LieElement:
    """A rational combination of Lyndon basis vectors."""

    coeffs: Mapping[Word, object]

    def __post_init__(self) -> None:
        object.__setattr__(self, "coeffs", {tuple(w): c for w, c in self.coeffs.items() if c})

    @classmethod
    def basis(cls, w: Word) -> "LieElement":
        w = tuple(w)
        if not is_lyndon(w):
            raise ValueError(f"{w!r} is not a Lyndon word")
        return cls({w: 1})

    @classmethod
    def from_image(cls, image: Mapping[Word, object]) -> "LieElement":
        """Re-express a tensor-algebra Lie polynomial in the Lyndon basis."""
        rest = dict(image)
        out: dict[Word, object] = {}
        while rest:
            w = min(rest, key=lambda x: (len(x), x))
            c = rest[w]
            if not is_lyndon(w):
                raise ArithmeticError(f"leading word {w!r} is not Lyndon: input is not a Lie element")
            out[w] = c
            _add_into(rest, tensor_image(w), -c)
        return cls(out)

    def image(self) -> dict[Word, object]:
        out: dict[Word, object] = {}
        for w, c in self.coeffs.items():
            _add_into(out, tensor_image(w), c)
        return out

    def __add__(self, other: "LieElement") -> "LieElement":
        acc = dict(self.coeffs)
        _add_into(acc, other.coeffs)
        return LieElement(acc)

    def __neg__(self) -> "LieElement":
        return LieElement({w: -c for w, c in self.coeffs.items()})

    def __sub__(self, other: "LieElement") -> "LieElement":
        return self + (-other)

    def __mul__(self, scalar) -> "LieElement":
        return LieElement({w: c * scalar for w, c in self.coeffs.items()})

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return not self.coeffs


def standard_bracketing(w: Word) -> LieElement:
    return LieElement.basis(w)


def bracket(a: LieElement, b: LieElement, D: int | None = None) -> LieElement:
    """Lie bracket, discarding components of degree above ``D``."""
    return LieElement.from_image(_commutator(a.image(), b.image(), D))


def word_text(w: Word) -> str:
    sep = "" if all(x < 10 for x in w) else "."
    return sep.join(map(str, w))


class GAlgebra:
    """The Lie algebra L^{(+)n} = L tensor C^n on V = C^m, truncated at degree D.

    Basis vectors are pairs (Lyndon word, copy) with copies numbered 1..n,
    sorted by (degree, word, copy).  ``copy_order`` relabels the copies before
    sorting: copy c is stored where copy ``copy_order[c-1]`` would be.
    """

    def __init__(self, m: int, n: int, D: int, copy_order: tuple[int, ...] | None = None):
        if m < 1 or n < 1 or D < 0:
            raise ValueError("need m >= 1, n >= 1 and D >= 0")
        self.m, self.n, self.D = m, n, D
        self.words = {d: lyndon_words(m, d) for d in range(1, D + 1)}
        order = tuple(copy_order) if copy_order is not None else tuple(range(1, n + 1))
        if sorted(order) != list(range(1, n + 1)):
            raise ValueError(f"copy_order must be a permutation of 1..{n}")
        self.copy_order = order
        self.basis: list[tuple[Word, int]] = []
        for d in range(1, D + 1):
            for w in self.words[d]:
                slots = sorted(range(1, n + 1), key=lambda c: order[c - 1])
                self.basis.extend((w, c) for c in slots)
        self.index = {b: i for i, b in enumerate(self.basis)}
        self.degrees = [len(w) for w, _ in self.basis]
        self._word_brackets: dict[tuple[Word, Word], dict[Word, int]] = {}

    def __len__(self) -> int:
        return len(self.basis)

    def by_degree(self, d: int) -> list[int]:
        return [i for i, deg in enumerate(self.degrees) if deg == d]

    def word_bracket(self, u: Word, v: Word) -> dict[Word, int]:
        key = (u, v)
        hit = self._word_brackets.get(key)
        if hit is None:
            if len(u) + len(v) > self.D:
                hit = {}
            else:
                hit = dict(bracket(LieElement.basis(u), LieElement.basis(v), self.D).coeffs)
            self._word_brackets[key] = hit
        return hit

    def bracket(self, i: int, j: int) -> dict[int, int]:
        """Bracket of basis vectors i and j as {basis index: coefficient}."""
        (u, a), (v, b) = self.basis[i], self.basis[j]
        if a != b:
            return {}
        return {self.index[(w, a)]: c for w, c in self.word_bracket(u, v).items()}

    def bracket_table(self) -> list[tuple[int, int, dict[int, int]]]:
        """Nonzero brackets [i, j] with i < j."""
        out = []
        for i in range(len(self)):
            for j in range(i + 1, len(self)):
                r = self.bracket(i, j)
                if r:
                    out.append((i, j, r))
        return out

    def act(self, perm: tuple[int, ...], i: int) -> int:
        """Index of the image of basis vector i when copy c goes to copy perm[c-1]."""
        w, c = self.basis[i]
        return self.index[(w, perm[c - 1])]

    def to_json(self) -> dict:
        return {
            "m": self.m,
            "copies": self.n,
            "max_degree": self.D,
            "basis": [
                {"index": i, "word": word_text(w), "copy": c, "degree": len(w)}
                for i, (w, c) in enumerate(self.basis)
            ],
            "brackets": [
                {
                    "left": i,
                    "right": j,
                    "result": [{"index": k, "coeff": _num(c)} for k, c in sorted(r.items())],
                }
                for i, j, r in self.bracket_table()
            ],
        }


def _num(c):
    if isinstance(c, Fraction):
        return c.numerator if c.denominator == 1 else str(c)
    return c


def build_g(m: int, n: int, D: int) -> GAlgebra:
    return GAlgebra(m, n, D)


def g_dimension(m: int, n: int, D: int) -> int:
    return n * sum(witt_dim(m, d) for d in range(1, D + 1))

