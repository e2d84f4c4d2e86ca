"""Alphabets, linear and cyclic words over a free group.

Words are plain strings.  Generator ``k`` of a rank-``q`` alphabet is the
``k``-th lowercase ASCII letter and its inverse is the matching uppercase
letter, so with ``q = 2`` the letters are ``a, b, A, B`` and ``A`` stands
for the inverse of ``a``.  The linear order on letters is always explicit
and given as a string listing all ``2q`` letters, e.g. ``"abBA"`` for
``a < b < B < A``.

>>> alpha = Alphabet("abBA")
>>> alpha.reduce("aAb")
'b'
>>> alpha.canonicalize("abaabab").word
'aababab'
"""

from __future__ import annotations

import string
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterator, Sequence

from .errors import InvalidInput

__all__ = [
    "Alphabet",
    "CyclicWord",
    "least_rotation",
    "smallest_period",
]


def least_rotation(seq: Sequence) -> int:
    """Index of the lexicographically least rotation of ``seq`` (Booth).

    Ties (power words) resolve to the smallest index.

    >>> least_rotation([2, 0, 1, 0, 1])
    1
    >>> least_rotation("baba")
    1
    """
    n = len(seq)
    if n == 0:
        return 0
    s = list(seq) * 2
    fail = [-1] * (2 * n)
    k = 0
    for j in range(1, 2 * n):
        sj = s[j]
        i = fail[j - k - 1]
        while i != -1 and sj != s[k + i + 1]:
            if sj < s[k + i + 1]:
                k = j - i - 1
            i = fail[i]
        if sj != s[k + i + 1]:  # i == -1
            if sj < s[k]:
                k = j
            fail[j - k] = -1
        else:
            fail[j - k] = i + 1
    return k % n


def smallest_period(seq: Sequence) -> int:
    """Smallest ``d`` dividing ``len(seq)`` with ``seq == seq[:d] * (len/d)``.

    Uses the prefix (failure) function; returns ``len(seq)`` for
    nonperiodic input and 0 for the empty sequence.

    >>> smallest_period("abab")
    2
    >>> smallest_period("abaabab")
    7
    """
    n = len(seq)
    if n == 0:
        return 0
    pi = [0] * n
    for q in range(1, n):
        k = pi[q - 1]
        while k and seq[q] != seq[k]:
            k = pi[k - 1]
        if seq[q] == seq[k]:
            k += 1
        pi[q] = k
    d = n - pi[-1]
    return d if n % d == 0 else n


@dataclass(frozen=True)
class Alphabet:
    """A ``q``-alphabet with a fixed linear order.

    Parameters
    ----------
    order : str
        All ``2q`` letters, each exactly once, smallest first.
    """

    order: str
    rank: dict = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        order = self.order
        if not isinstance(order, str) or not order:
            raise InvalidInput(f"alphabet order must be a non-empty string, got {order!r}")
        if len(order) % 2:
            raise InvalidInput(f"alphabet order {order!r} has an odd number of letters")
        q = len(order) // 2
        if q > 26:
            raise InvalidInput(f"alphabet order {order!r} is too long (at most 26 generators)")
        expected = set(string.ascii_lowercase[:q] + string.ascii_uppercase[:q])
        seen = set()
        for c in order:
            if c not in expected:
                raise InvalidInput(f"alphabet order {order!r}: unexpected letter {c!r}")
            if c in seen:
                raise InvalidInput(f"alphabet order {order!r}: duplicate letter {c!r}")
            seen.add(c)
        object.__setattr__(self, "rank", {c: i for i, c in enumerate(order)})

    @property
    def q(self) -> int:
        return len(self.order) // 2

    @property
    def generators(self) -> str:
        return string.ascii_lowercase[: self.q]

    @staticmethod
    def bar(letter: str) -> str:
        return letter.swapcase()

    def __contains__(self, letter) -> bool:
        return letter in self.rank

    def __str__(self) -> str:
        return self.order

    def check(self, word: str) -> str:
        for c in word:
            if c not in self.rank:
                raise InvalidInput(f"letter {c!r} of word {word!r} is not in alphabet {self.order!r}")
        return word

    def ranks(self, word: str) -> list[int]:
        rank = self.rank
        return [rank[c] for c in word]

    def key(self, word: str) -> tuple:
        """Sort key comparing words lexicographically in this order."""
        return (len(word), tuple(self.ranks(word)))

    # -- linear words -------------------------------------------------

    def reduce(self, word: str) -> str:
        """Freely reduce ``word`` by cancelling adjacent ``x X`` pairs."""
        self.check(word)
        out: list[str] = []
        for c in word:
            if out and out[-1] == c.swapcase():
                out.pop()
            else:
                out.append(c)
        return "".join(out)

    @staticmethod
    def is_reduced(word: str) -> bool:
        return all(word[k] != word[k + 1].swapcase() for k in range(len(word) - 1))

    @classmethod
    def is_cyclically_reduced(cls, word: str) -> bool:
        if not cls.is_reduced(word):
            return False
        return len(word) < 2 or word[-1] != word[0].swapcase()

    def cyclic_reduce(self, word: str) -> str:
        """Strip matching inverse letters from both ends of a reduced word."""
        self.check(word)
        if not self.is_reduced(word):
            raise InvalidInput(f"word {word!r} is not freely reduced")
        lo, hi = 0, len(word)
        while hi - lo >= 2 and word[lo] == word[hi - 1].swapcase():
            lo += 1
            hi -= 1
        return word[lo:hi]

    def inverse(self, word: str) -> str:
        self.check(word)
        return word[::-1].swapcase()

    def power(self, word: str, p: int) -> str:
        """``p`` concatenated copies of a cyclically reduced word."""
        self.check(word)
        if not isinstance(p, int) or p < 1:
            raise InvalidInput(f"power exponent must be a positive integer, got {p!r}")
        if not word:
            raise InvalidInput("cannot take a power of the empty word")
        if not self.is_cyclically_reduced(word):
            raise InvalidInput(f"word {word!r} is not cyclically reduced")
        return word * p

    @staticmethod
    def subword(word: str, i: int, j: int) -> str:
        """Cyclic subword ``v_i ... v_{j-1}``; the full rotation when ``i == j``.

        Indices are read modulo the length.
        """
        n = len(word)
        if n == 0:
            raise InvalidInput("subword of the empty word")
        i %= n
        j %= n
        if i < j:
            return word[i:j]
        return word[i:] + word[:j]

    # -- cyclic words --------------------------------------------------

    def least_rotation(self, word: str) -> str:
        if not word:
            return word
        k = least_rotation(self.ranks(word))
        return word[k:] + word[:k]

    def canonical_string(self, word: str) -> str:
        """Canonical representative of the conjugacy class of ``word``."""
        return _canonical(self, word)

    def canonicalize(self, word: str) -> CyclicWord:
        return CyclicWord(self.canonical_string(word), self)

    def cyclic_words(self, length: int) -> Iterator[str]:
        """Canonical cyclically reduced words of one length, in increasing order."""
        if length <= 0:
            if length == 0:
                yield ""
            return
        order = self.order
        buf: list[str] = []

        def extend(depth: int):
            if depth == length:
                w = "".join(buf)
                if w[-1] != w[0].swapcase() and least_rotation(self.ranks(w)) == 0:
                    yield w
                return
            prev = buf[-1].swapcase() if buf else None
            for c in order:
                if c == prev:
                    continue
                # a canonical word cannot contain a letter smaller than its first
                if buf and self.rank[c] < self.rank[buf[0]]:
                    continue
                buf.append(c)
                yield from extend(depth + 1)
                buf.pop()

        yield from extend(0)

    def corpus(self, max_len: int, nonpower: bool = False) -> Iterator[str]:
        """All canonical words of length 1..max_len, by length then order."""
        for n in range(1, max_len + 1):
            for w in self.cyclic_words(n):
                if nonpower and smallest_period(w) != n:
                    continue
                yield w


@lru_cache(maxsize=1 << 18)
def _canonical(alphabet: Alphabet, word: str) -> str:
    return alphabet.least_rotation(alphabet.cyclic_reduce(alphabet.reduce(word)))


@dataclass(frozen=True)
class CyclicWord:
    """A conjugacy class, stored as its least rotation.

    Build instances with :meth:`Alphabet.canonicalize` (or
    :meth:`CyclicWord.of`); the constructor trusts its input.
    """

    word: str
    alphabet: Alphabet

    @classmethod
    def of(cls, word: str, alphabet: Alphabet | str) -> CyclicWord:
        if isinstance(alphabet, str):
            alphabet = Alphabet(alphabet)
        return alphabet.canonicalize(word)

    def __len__(self) -> int:
        return len(self.word)

    def __str__(self) -> str:
        return self.word

    def __bool__(self) -> bool:
        return bool(self.word)

    @property
    def is_zero(self) -> bool:
        return not self.word

    def inverse(self) -> CyclicWord:
        return self.alphabet.canonicalize(self.alphabet.inverse(self.word))

    def power(self, p: int) -> CyclicWord:
        # least rotation of W^p is (least rotation of W)^p
        return CyclicWord(self.alphabet.power(self.word, p), self.alphabet)

    def primitive_root(self) -> tuple[CyclicWord, int]:
        """Return ``(W, k)`` with ``self == W**k`` and ``W`` nonpower.

        >>> CyclicWord.of("abab", "abBA").primitive_root()
        (CyclicWord(word='ab', alphabet=Alphabet(order='abBA')), 2)
        """
        n = len(self.word)
        if n == 0:
            raise InvalidInput("the empty class has no primitive root")
        d = smallest_period(self.word)
        return CyclicWord(self.word[:d], self.alphabet), n // d

    @property
    def is_nonpower(self) -> bool:
        return bool(self.word) and smallest_period(self.word) == len(self.word)
