"""Integer tensors over cyclic words and the cobracket ``delta``.

``delta`` sends a cyclic word to a signed sum of ordered pairs of cyclic
words, one term per linked pair ``(i, j)``:
``sign(i, j) * [V_{i,j}] (x) [V_{j,i}]``.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Mapping

from .errors import InvalidInput
from .linked_pairs import linked_pairs
from .words import Alphabet, CyclicWord

__all__ = [
    "TensorElement",
    "check_cojacobi",
    "check_coskew",
    "cobracket",
    "cobracket_power",
    "cojacobi_defect",
    "manhattan_norm",
]


@dataclass(frozen=True)
class TensorElement:
    """Finite integer combination of ordered pairs of cyclic words.

    ``terms`` maps ``(left, right)`` canonical word strings to nonzero
    coefficients.  Build through :meth:`from_terms` so that keys are
    canonical and empty-class factors are discarded.
    """

    alphabet: Alphabet
    terms: Mapping[tuple[str, str], int] = field(default_factory=dict)

    @classmethod
    def from_terms(cls, alphabet: Alphabet, items: Iterable[tuple[str, str, int]]) -> TensorElement:
        acc: Counter = Counter()
        canon = alphabet.canonical_string
        for left, right, c in items:
            left, right = canon(left), canon(right)
            if left and right:
                acc[left, right] += c
        return cls(alphabet, {k: c for k, c in acc.items() if c})

    @classmethod
    def zero(cls, alphabet: Alphabet) -> TensorElement:
        return cls(alphabet, {})

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, TensorElement):
            return NotImplemented
        return self.alphabet.order == other.alphabet.order and dict(self.terms) == dict(other.terms)

    def __hash__(self):
        return hash((self.alphabet.order, frozenset(self.terms.items())))

    def __neg__(self) -> TensorElement:
        return TensorElement(self.alphabet, {k: -c for k, c in self.terms.items()})

    def __add__(self, other: TensorElement) -> TensorElement:
        acc = Counter(self.terms)
        for k, c in other.terms.items():
            acc[k] += c
        return TensorElement(self.alphabet, {k: c for k, c in acc.items() if c})

    def __sub__(self, other: TensorElement) -> TensorElement:
        return self + (-other)

    def swap(self) -> TensorElement:
        return TensorElement(self.alphabet, {(b, a): c for (a, b), c in self.terms.items()})

    def norm(self) -> int:
        return sum(abs(c) for c in self.terms.values())

    def coefficient(self, left: str, right: str) -> int:
        canon = self.alphabet.canonical_string
        return self.terms.get((canon(left), canon(right)), 0)

    def to_records(self) -> list[dict]:
        key = self.alphabet.key
        return [
            {"left": a, "right": b, "coeff": c}
            for (a, b), c in sorted(self.terms.items(), key=lambda kv: (key(kv[0][0]), key(kv[0][1])))
        ]

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        return " ".join(f"{r['coeff']:+d}*{r['left']}@{r['right']}" for r in self.to_records())


def _resolve(v, alphabet: Alphabet | None) -> tuple[str, Alphabet]:
    if isinstance(v, CyclicWord):
        return v.word, v.alphabet
    if alphabet is None:
        raise InvalidInput("an alphabet is required for a raw word")
    alphabet.check(v)
    if not Alphabet.is_cyclically_reduced(v):
        raise InvalidInput(f"word {v!r} is not cyclically reduced")
    return v, alphabet


@lru_cache(maxsize=1 << 16)
def _delta_terms(word: str, order: str) -> tuple:
    alphabet = Alphabet(order)
    sub = Alphabet.subword
    items = ((sub(word, p.i, p.j), sub(word, p.j, p.i), p.sign) for p in linked_pairs(word, alphabet))
    return tuple(TensorElement.from_terms(alphabet, items).terms.items())


def cobracket(v: CyclicWord | str, alphabet: Alphabet | None = None) -> TensorElement:
    """``delta`` of a cyclic word (or of a cyclically reduced linear representative).

    >>> str(cobracket(CyclicWord.of("ab", "abBA")))
    '+1*a@b -1*b@a'
    """
    word, alphabet = _resolve(v, alphabet)
    if not word:
        return TensorElement.zero(alphabet)
    return TensorElement(alphabet, dict(_delta_terms(word, alphabet.order)))


def cobracket_power(v: CyclicWord | str, p: int, alphabet: Alphabet | None = None) -> TensorElement:
    """``delta(V**p)`` assembled from the linked pairs of ``V`` alone.

    Each pair ``(i, j)`` of ``V`` contributes, for ``s = 0 .. p-1``, the term
    ``p * sign(i, j) * [V_i^s V_{i,j}] (x) [V_j^(p-s-1) V_{j,i}]`` where
    ``V_i`` is the rotation of ``V`` starting at ``i``.
    """
    word, alphabet = _resolve(v, alphabet)
    if not isinstance(p, int) or p < 1:
        raise InvalidInput(f"power exponent must be a positive integer, got {p!r}")
    if not word:
        raise InvalidInput("cannot take a power of the empty word")
    sub = Alphabet.subword
    items = []
    for pr in linked_pairs(word, alphabet):
        rot_i, rot_j = sub(word, pr.i, pr.i), sub(word, pr.j, pr.j)
        v_ij, v_ji = sub(word, pr.i, pr.j), sub(word, pr.j, pr.i)
        c = p * pr.sign
        for s in range(p):
            items.append((rot_i * s + v_ij, rot_j * (p - s - 1) + v_ji, c))
    return TensorElement.from_terms(alphabet, items)


def manhattan_norm(x: TensorElement) -> int:
    """Sum of absolute values of the coefficients of ``x``."""
    return x.norm()


def check_coskew(x: TensorElement) -> bool:
    """True iff swapping the factors of every term negates ``x``."""
    return x.swap() == -x


def cojacobi_defect(v: CyclicWord | str, alphabet: Alphabet | None = None) -> dict:
    """``(Id + w + w^2)(Id (x) delta) delta (v)`` as a map of word triples.

    ``w`` is the cyclic shift ``u (x) v (x) t -> t (x) u (x) v``; the result
    is empty exactly when the co-Jacobi identity holds at ``v``.
    """
    word, alphabet = _resolve(v, alphabet)
    acc: Counter = Counter()
    if not word:
        return {}
    for (left, right), c in _delta_terms(word, alphabet.order):
        for (a, b), d in _delta_terms(right, alphabet.order):
            cd = c * d
            acc[left, a, b] += cd
            acc[b, left, a] += cd
            acc[a, b, left] += cd
    return {k: c for k, c in acc.items() if c}


def check_cojacobi(v: CyclicWord | str, alphabet: Alphabet | None = None) -> bool:
    return not cojacobi_defect(v, alphabet)
