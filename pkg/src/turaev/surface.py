"""Bounded surfaces and their default alphabet orders.

A surface of genus ``g`` with ``b >= 1`` boundary components has free
fundamental group of rank ``2g + b - 1``.  An alphabet order describes a
one-vertex ribbon graph: letters sit around a disk in the given cyclic
order and each generator is a band joining ``x`` to ``X``.  The default
order for ``(g, b)`` puts one interleaved block ``x y X Y`` per handle,
followed by the remaining ``b - 1`` generators nested (``c d D C``).  Only
the pair-of-pants order ``abBA`` is fixed by the literature; all other
defaults are conventions, and any order may be passed explicitly instead.
"""

from __future__ import annotations

import string
from dataclasses import dataclass

from .errors import InvalidInput
from .words import Alphabet

__all__ = ["Surface", "boundary_components", "default_order", "genus_of", "rank"]


@dataclass(frozen=True)
class Surface:
    genus: int
    boundary: int

    def __post_init__(self):
        if not isinstance(self.genus, int) or self.genus < 0:
            raise InvalidInput(f"genus must be a nonnegative integer, got {self.genus!r}")
        if not isinstance(self.boundary, int) or self.boundary < 0:
            raise InvalidInput(f"boundary count must be a nonnegative integer, got {self.boundary!r}")
        if self.boundary == 0:
            raise InvalidInput(f"surface ({self.genus},{self.boundary}) is closed; at least one boundary component is required")
        if 2 * self.genus + self.boundary - 1 < 1:
            raise InvalidInput(f"surface ({self.genus},{self.boundary}) has trivial fundamental group")
        if 2 * self.genus + self.boundary - 1 > 26:
            raise InvalidInput(f"surface ({self.genus},{self.boundary}) needs more than 26 generators")

    @classmethod
    def parse(cls, text: str) -> Surface:
        """Parse ``"g,b"``."""
        try:
            g, b = (int(t) for t in text.split(","))
        except ValueError:
            raise InvalidInput(f"surface must be given as 'g,b', got {text!r}") from None
        return cls(g, b)

    @property
    def rank(self) -> int:
        return 2 * self.genus + self.boundary - 1

    @property
    def euler_characteristic(self) -> int:
        return 2 - 2 * self.genus - self.boundary

    def __str__(self) -> str:
        return f"S_{self.genus},{self.boundary}"


def rank(s: Surface) -> int:
    return s.rank


def default_order(s: Surface) -> Alphabet:
    """Default alphabet order for ``s``.

    >>> default_order(Surface(0, 3)).order
    'abBA'
    >>> default_order(Surface(1, 1)).order
    'abAB'
    """
    gens = string.ascii_lowercase[: s.rank]
    handles, rest = gens[: 2 * s.genus], gens[2 * s.genus :]
    order = "".join(
        handles[k] + handles[k + 1] + handles[k].upper() + handles[k + 1].upper()
        for k in range(0, len(handles), 2)
    )
    order += rest + rest[::-1].upper()
    return Alphabet(order)


def boundary_components(alphabet: Alphabet) -> int:
    """Number of boundary curves of the ribbon graph described by ``alphabet``.

    Follows the boundary: after arriving at letter ``X`` through band
    ``x``, continue to the letter after ``X`` in the cyclic order.
    """
    order = alphabet.order
    pos = alphabet.rank
    m = len(order)
    seen: set[str] = set()
    cycles = 0
    for start in order:
        if start in seen:
            continue
        cycles += 1
        c = start
        while c not in seen:
            seen.add(c)
            c = order[(pos[c.swapcase()] + 1) % m]
    return cycles


def genus_of(alphabet: Alphabet) -> int:
    """Genus of the surface an order describes, from its Euler characteristic."""
    return (1 + alphabet.q - boundary_components(alphabet)) // 2
