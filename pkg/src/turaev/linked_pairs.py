"""Orientation signs and linked pairs of a cyclic word.

A linked pair ``(i, j)`` of a cyclically reduced word ``V = v_0 ... v_{n-1}``
is the combinatorial stand-in for a self-intersection point of the curve
read off from ``V``.  Pairs come in three kinds:

1. the letters around positions ``i`` and ``j`` cross directly;
2. the two strands share a common subword ``Y`` ending just before ``i``
   and ``j`` and separate on opposite sides at the two ends;
3. a subword ``Y`` ending just before ``i`` reappears inverted starting at
   ``j``.

Indices are always taken modulo ``n``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, NamedTuple, Sequence

from .errors import InvalidInput
from .words import Alphabet, CyclicWord

__all__ = [
    "LinkedPair",
    "LinkedPairSet",
    "enumerate_linked_pairs",
    "lift_to_power",
    "linked_pairs",
    "orientation_sign",
    "symmetry_partner",
]


def _sign3(x: int, y: int, z: int) -> int:
    if x == y or y == z or x == z:
        return 0
    return 1 if (x > y) + (y > z) + (z > x) == 1 else -1


def _sign4(x: int, y: int, z: int, w: int) -> int:
    if len({x, y, z, w}) < 4:
        return 0
    descents = (x > y) + (y > z) + (z > w) + (w > x)
    if descents == 1:
        return 1
    if descents == 3:
        return -1
    return 0


def orientation_sign(seq: Sequence[str], alphabet: Alphabet) -> int:
    """+1 if a cyclic rotation of ``seq`` increases strictly, -1 if one
    decreases strictly, 0 otherwise.

    >>> alpha = Alphabet("abBA")
    >>> orientation_sign("abA", alpha), orientation_sign("aab", alpha), orientation_sign("Aba", alpha)
    (1, 0, -1)
    """
    if len(seq) < 3:
        raise InvalidInput(f"orientation needs at least 3 letters, got {len(seq)}")
    r = [alphabet.rank[c] for c in alphabet.check("".join(seq))]
    if len(set(r)) < len(r):
        return 0
    m = len(r)
    descents = sum(r[k] > r[(k + 1) % m] for k in range(m))
    if descents == 1:
        return 1
    if descents == m - 1:
        return -1
    return 0


class LinkedPair(NamedTuple):
    i: int
    j: int
    kind: int  # 1, 2 or 3
    r: int  # length of the shared subword Y; 0 for kind 1
    sign: int

    def to_record(self) -> dict:
        return {"i": self.i, "j": self.j, "type": self.kind, "r": self.r, "sign": self.sign}


@dataclass(frozen=True)
class LinkedPairSet:
    """All linked pairs of one linear representative ``word``, sorted by (i, j)."""

    word: str
    alphabet: Alphabet
    pairs: tuple[LinkedPair, ...]

    def __len__(self) -> int:
        return len(self.pairs)

    def __iter__(self) -> Iterator[LinkedPair]:
        return iter(self.pairs)

    def __contains__(self, pair) -> bool:
        return pair in self.by_index().values()

    def by_index(self) -> dict[tuple[int, int], LinkedPair]:
        return {(p.i, p.j): p for p in self.pairs}

    def index_set(self) -> set[tuple[int, int]]:
        return {(p.i, p.j) for p in self.pairs}

    def to_records(self) -> list[dict]:
        return [p.to_record() for p in self.pairs]


def linked_pairs(word: str, alphabet: Alphabet) -> LinkedPairSet:
    """Linked pairs of a cyclically reduced linear word, indexed on ``word`` as given."""
    alphabet.check(word)
    if not Alphabet.is_cyclically_reduced(word):
        raise InvalidInput(f"word {word!r} is not cyclically reduced")
    n = len(word)
    rank = alphabet.rank
    x = [rank[c] for c in word]
    xb = [rank[c.swapcase()] for c in word]
    inv = word.swapcase()
    pairs = []
    for i in range(n):
        xi = x[i]
        xbi1 = xb[i - 1]
        for j in range(n):
            if i == j:
                continue
            if word[i - 1] == word[j - 1]:
                # kind 2: longest common Y = v_{i-r}..v_{i-1} = v_{j-r}..v_{j-1}
                r = 1
                while r < n and word[(i - 1 - r) % n] == word[(j - 1 - r) % n]:
                    r += 1
                if r > n - 2:
                    continue
                front = _sign3(xb[(i - r - 1) % n], xb[(j - r - 1) % n], x[(i - r) % n])
                if front and front == _sign3(xi, x[j], xbi1):
                    pairs.append(LinkedPair(i, j, 2, r, _sign3(xbi1, xi, x[j])))
            elif xbi1 == x[j]:
                # kind 3: Y = v_{i-r}..v_{i-1} read backwards-inverted from v_j
                r = 1
                while r < n and word[(i - 1 - r) % n] == inv[(j + r) % n]:
                    r += 1
                if r > n - 2:
                    continue
                front = _sign3(x[(j + r) % n], xb[(i - r - 1) % n], x[(i - r) % n])
                back = _sign3(xbi1, xi, xb[j - 1])
                if front and back and front == -back:
                    pairs.append(LinkedPair(i, j, 3, r, -back))
            else:
                s4 = _sign4(xbi1, xb[j - 1], xi, x[j])
                if s4:
                    s = _sign3(xbi1, xi, x[j])
                    assert s == s4, (word, i, j)
                    pairs.append(LinkedPair(i, j, 1, 0, s))
    return LinkedPairSet(word, alphabet, tuple(pairs))


def enumerate_linked_pairs(v: CyclicWord) -> LinkedPairSet:
    """Linked pairs of a cyclic word, indexed on its canonical representative.

    >>> lps = enumerate_linked_pairs(CyclicWord.of("abaabab", "abBA"))
    >>> lps.word, len(lps)
    ('aababab', 24)
    """
    return linked_pairs(v.word, v.alphabet)


def lift_to_power(lps: LinkedPairSet, p: int) -> LinkedPairSet:
    """Linked pairs of ``word**p`` obtained by translating each pair of ``word``."""
    if not isinstance(p, int) or p < 1:
        raise InvalidInput(f"power exponent must be a positive integer, got {p!r}")
    n = len(lps.word)
    lifted = [
        LinkedPair(pr.i + t * n, pr.j + s * n, pr.kind, pr.r, pr.sign)
        for pr in lps.pairs
        for t in range(p)
        for s in range(p)
    ]
    lifted.sort()
    return LinkedPairSet(lps.word * p, lps.alphabet, tuple(lifted))


def symmetry_partner(lps: LinkedPairSet, pair: LinkedPair) -> LinkedPair:
    """The linked pair obtained by exchanging the roles of the two strands."""
    index = lps.by_index()
    if index.get((pair.i, pair.j)) != pair:
        raise InvalidInput(f"{pair} is not a linked pair of {lps.word!r}")
    n = len(lps.word)
    if pair.kind == 3:
        key = ((pair.j + pair.r) % n, (pair.i - pair.r) % n)
    else:
        key = (pair.j, pair.i)
    try:
        return index[key]
    except KeyError:
        raise LookupError(f"partner {key} of {pair} missing from {lps.word!r}") from None
