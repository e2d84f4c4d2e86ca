"""Self-intersection counts, the cube test for simple curves, corpus sweeps.

A class contains a power of a simple curve exactly when the cobracket of
its cube vanishes, which happens exactly when its primitive root has no
linked pairs.  For a nonpower class the number of linked pairs is twice
the self-intersection number, and for ``p >= 4`` the Manhattan norm of
``delta(V**p)`` is ``p**2`` times that number.
"""

from __future__ import annotations

import logging
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from itertools import combinations

from .cobracket import check_cojacobi, check_coskew, cobracket, cobracket_power
from .errors import InvalidInput, NotApplicable
from .linked_pairs import LinkedPairSet, lift_to_power, linked_pairs, symmetry_partner
from .words import Alphabet, CyclicWord, smallest_period

logger = logging.getLogger(__name__)

__all__ = [
    "ClassReport",
    "NormIdentity",
    "VerificationSummary",
    "class_report",
    "coincidences",
    "exhaustive_verify",
    "is_power_of_simple",
    "search_turaev1_counterexamples",
    "self_intersection",
    "verify_norm_identity",
]


@dataclass(frozen=True)
class ClassReport:
    word: CyclicWord
    primitive: CyclicWord
    exponent: int
    linked_pair_count: int
    primitive_linked_pair_count: int
    self_intersection: int | None  # None for proper powers
    primitive_self_intersection: int
    is_power_of_simple: bool

    def to_record(self) -> dict:
        return {
            "order": self.word.alphabet.order,
            "word": self.word.word,
            "primitive": self.primitive.word,
            "exponent": self.exponent,
            "linked_pair_count": self.linked_pair_count,
            "primitive_linked_pair_count": self.primitive_linked_pair_count,
            "self_intersection": self.self_intersection,
            "primitive_self_intersection": self.primitive_self_intersection,
            "is_power_of_simple": self.is_power_of_simple,
        }


def _nonempty(v: CyclicWord) -> None:
    if not v.word:
        raise InvalidInput("the empty class is the zero element; a nonempty word is required")


def class_report(v: CyclicWord) -> ClassReport:
    _nonempty(v)
    root, k = v.primitive_root()
    n_root = len(linked_pairs(root.word, root.alphabet))
    n_word = len(linked_pairs(v.word, v.alphabet)) if k > 1 else n_root
    return ClassReport(
        word=v,
        primitive=root,
        exponent=k,
        linked_pair_count=n_word,
        primitive_linked_pair_count=n_root,
        self_intersection=n_root // 2 if k == 1 else None,
        primitive_self_intersection=n_root // 2,
        is_power_of_simple=n_root == 0,
    )


def self_intersection(v: CyclicWord) -> int:
    """Self-intersection number of a nonpower class: half its linked pairs.

    >>> self_intersection(CyclicWord.of("ab", "abBA"))
    1
    """
    _nonempty(v)
    root, k = v.primitive_root()
    if k > 1:
        raise NotApplicable(
            f"{v.word!r} is the power {root.word}^{k}; self-intersection is only "
            f"computed for nonpower classes (try {root.word!r})"
        )
    count = len(linked_pairs(v.word, v.alphabet))
    if count % 2:
        raise RuntimeError(f"odd number of linked pairs ({count}) for nonpower {v.word!r}")
    return count // 2


def is_power_of_simple(v: CyclicWord, verify: bool = False) -> bool:
    """True iff ``v`` is a power of a simple class.

    Decided by emptiness of the linked pairs of the primitive root.  With
    ``verify`` the answer is cross-checked against ``delta(root**3) == 0``
    evaluated from the closed form for powers.
    """
    _nonempty(v)
    root, _ = v.primitive_root()
    empty = len(linked_pairs(root.word, root.alphabet)) == 0
    if verify:
        cube_vanishes = not cobracket_power(root, 3)
        if cube_vanishes != empty:
            raise RuntimeError(
                f"cube test disagrees with linked pairs for {v.word!r}: "
                f"delta(V^3)==0 is {cube_vanishes}, LP empty is {empty}"
            )
    return empty


@dataclass(frozen=True)
class NormIdentity:
    p: int
    norm: int
    lp_count: int
    s: int
    holds: bool


def verify_norm_identity(v: CyclicWord, p: int) -> NormIdentity:
    """Compare ``M(delta(V**p))`` with ``p**2 |LP(V)| = 2 p**2 s(V)``."""
    if not isinstance(p, int) or p < 4:
        raise InvalidInput(f"the norm identity needs an integer p >= 4, got {p!r}")
    s = self_intersection(v)
    lp_count = 2 * s
    norm = cobracket_power(v, p).norm()
    return NormIdentity(p, norm, lp_count, s, norm == p * p * lp_count == 2 * p * p * s)


def coincidences(lps: LinkedPairSet, m: int, l: int) -> list[tuple[tuple[int, int], tuple[int, int]]]:
    """Distinct pairs ``(i,j) != (k,h)`` with ``[V_i^m V_{i,j}] == [V_k^l V_{k,h}]``.

    For a nonpower word this is empty whenever ``m >= 2``; at ``m = l = 1``
    it need not be.
    """
    word, alphabet = lps.word, lps.alphabet
    sub = Alphabet.subword
    canon = alphabet.canonical_string

    def cls(i, j, e):
        return canon(sub(word, i, i) * e + sub(word, i, j))

    left = {(pr.i, pr.j): cls(pr.i, pr.j, m) for pr in lps}
    right = left if l == m else {(pr.i, pr.j): cls(pr.i, pr.j, l) for pr in lps}
    found = []
    by_class: dict[str, list] = {}
    for key, c in right.items():
        by_class.setdefault(c, []).append(key)
    for key, c in left.items():
        for other in by_class.get(c, ()):
            if other != key:
                found.append((key, other))
    return sorted(found)


def search_turaev1_counterexamples(alphabet: Alphabet, max_len: int, workers: int = 1) -> list[ClassReport]:
    """Nonpower classes up to ``max_len`` with ``delta = 0`` that are not simple."""
    if not isinstance(max_len, int) or max_len < 1:
        raise InvalidInput(f"max_len must be a positive integer, got {max_len!r}")
    words = list(alphabet.corpus(max_len, nonpower=True))
    flags = _map(_is_turaev1_counterexample, [(w, alphabet.order) for w in words], workers)
    return [class_report(CyclicWord(w, alphabet)) for w, hit in zip(words, flags) if hit]


def _is_turaev1_counterexample(args) -> bool:
    word, order = args
    alphabet = Alphabet(order)
    return len(linked_pairs(word, alphabet)) > 0 and not cobracket(word, alphabet)


def _map(fn, items, workers: int):
    if workers <= 1 or len(items) < 64:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items, chunksize=max(1, len(items) // (8 * workers))))


# -- exhaustive sweep -------------------------------------------------------


@dataclass
class VerificationSummary:
    order: str
    max_len: int
    p_set: tuple[int, ...]
    words: int = 0
    nonpower_words: int = 0
    checks: dict = field(default_factory=dict)
    coincidences_m1: int = 0
    violations: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_record(self) -> dict:
        rec = asdict(self)
        rec["p_set"] = list(self.p_set)
        rec["checks"] = dict(sorted(self.checks.items()))
        rec["ok"] = self.ok
        return rec


MAIN_M = (2, 3)
MAIN_L = (1, 2, 3)


def _check_word(args) -> tuple[Counter, list[str], int]:
    word, order, p_set, cojacobi_max_len = args
    alphabet = Alphabet(order)
    checks: Counter = Counter()
    bad: list[str] = []

    def check(name: str, ok: bool, detail: str = ""):
        checks[name] += 1
        if not ok:
            bad.append(f"{name}: {word} {detail}".rstrip())

    n = len(word)
    v = CyclicWord(word, alphabet)
    nonpower = smallest_period(word) == n

    check("canonical_rotation", all(alphabet.canonical_string(word[k:] + word[:k]) == word for k in range(n)))
    check("double_inverse", alphabet.inverse(alphabet.inverse(word)) == word)
    root, k = v.primitive_root()
    check("primitive_root", n % k == 0 and root.word * k == word and root.is_nonpower)

    lps = linked_pairs(word, alphabet)
    index = lps.index_set()
    check("lp_injective", len(index) == len(lps))
    for pr in lps:
        vi, vj, vj1 = word[pr.i], word[pr.j], word[pr.j - 1]
        check("lp_extremo", pr.i != pr.j and vi != vj and vi.swapcase() != vj1, str(pr))
        check("lp_sign_nonzero", pr.sign in (1, -1), str(pr))
        try:
            partner = symmetry_partner(lps, pr)
            check("symmetry_involution", symmetry_partner(lps, partner) == pr, str(pr))
        except LookupError as exc:
            check("symmetry_partner", False, str(exc))
            continue
        check("symmetry_partner", True)
        simple_kind = pr.kind in (1, 2)
        check("symmetry_reverse_iff_kind12", ((pr.j, pr.i) in index) == simple_kind, str(pr))
        v_ji = Alphabet.subword(word, pr.j, pr.i)
        check("symmetry_reduced_iff_kind12", Alphabet.is_cyclically_reduced(v_ji) == simple_kind, str(pr))
    if nonpower:
        check("lp_parity", len(lps) % 2 == 0, f"|LP|={len(lps)}")
    root_lps = linked_pairs(root.word, alphabet)
    check("power_consistency", (len(lps) == 0) == (len(root_lps) == 0))
    check("linkedvp_root", lift_to_power(root_lps, k).pairs == lps.pairs)

    delta = cobracket(v)
    check("coskew", check_coskew(delta))
    lp_empty = len(root_lps) == 0
    cube = cobracket_power(root, 3)
    check("cube_test", (not cube) == lp_empty, f"delta(V^3)={cube}")
    for p in p_set:
        lifted = lift_to_power(lps, p)
        direct = linked_pairs(word * p, alphabet)
        check("linkedvp", lifted.pairs == direct.pairs and len(lifted) == p * p * len(lps), f"p={p}")
        closed = cobracket_power(v, p)
        check("power_formula", closed == cobracket(word * p, alphabet), f"p={p}")
        check("coskew", check_coskew(closed))
        if not lps:
            check("simple_powers_vanish", not closed, f"p={p}")
        if nonpower and p >= 4:
            check("norm_identity", closed.norm() == p * p * len(lps), f"p={p}")
    if nonpower and lps:
        for m in MAIN_M:
            for l in MAIN_L:
                hits = coincidences(lps, m, l)
                check("prop_main", not hits, f"m={m} l={l} {hits[:3]}")
    m1 = len(coincidences(lps, 1, 1)) if nonpower else 0
    if n <= cojacobi_max_len:
        check("cojacobi", check_cojacobi(v))
    return checks, bad, m1


def exhaustive_verify(
    alphabet: Alphabet,
    max_len: int,
    p_set=(3, 4),
    cojacobi_max_len: int = 7,
    workers: int = 1,
) -> VerificationSummary:
    """Run every structural check on all canonical words up to ``max_len``."""
    if not isinstance(max_len, int) or max_len < 1:
        raise InvalidInput(f"max_len must be a positive integer, got {max_len!r}")
    p_set = tuple(sorted(set(p_set)))
    if any(not isinstance(p, int) or p < 1 for p in p_set):
        raise InvalidInput(f"powers must be positive integers, got {p_set!r}")
    words = list(alphabet.corpus(max_len))
    summary = VerificationSummary(alphabet.order, max_len, p_set)
    results = _map(_check_word, [(w, alphabet.order, p_set, cojacobi_max_len) for w in words], workers)
    totals: Counter = Counter()
    for w, (checks, bad, m1) in zip(words, results):
        summary.words += 1
        summary.nonpower_words += smallest_period(w) == len(w)
        totals.update(checks)
        summary.coincidences_m1 += m1
        summary.violations.extend(bad)
    summary.checks = dict(totals)
    if summary.violations:
        logger.error("%d violations in sweep over %s", len(summary.violations), alphabet.order)
    return summary
