"""Acceptance criteria, one test per criterion.

Each test records a PASS/FAIL line (printed again in the terminal summary)
and then asserts.  The corpus is every canonical cyclically reduced word
of length at most 8 over both rank-2 orders ``abBA`` and ``abAB``.
"""

import os
import time

import pytest

from oracles import brute_cobracket, brute_linked_pairs
from turaev import (
    Alphabet,
    CyclicWord,
    check_cojacobi,
    check_coskew,
    cobracket,
    cobracket_power,
    coincidences,
    lift_to_power,
    linked_pairs,
    search_turaev1_counterexamples,
    self_intersection,
    smallest_period,
    symmetry_partner,
)

ORDERS = ("abBA", "abAB")
MAX_LEN = 8
WORKERS = min(4, os.cpu_count() or 1)


@pytest.fixture(scope="module")
def corpus():
    return {order: list(Alphabet(order).corpus(MAX_LEN)) for order in ORDERS}


@pytest.fixture(scope="module")
def power_terms(corpus):
    """(order, word, p) -> (closed form, direct cobracket of the expanded word)."""
    out = {}
    for order, words in corpus.items():
        a = Alphabet(order)
        for w in words:
            for p in (1, 2, 3, 4):
                out[order, w, p] = (cobracket_power(w, p, a), cobracket(w * p, a))
    return out


def nonpower(w):
    return smallest_period(w) == len(w)


def test_1_worked_example(criterion):
    t0 = time.perf_counter()
    a = Alphabet("abBA")
    v = "abaabab"
    lps = linked_pairs(v, a)
    idx = lps.index_set()
    sub = Alphabet.subword
    left1, right1 = sub(v, 0, 0) + sub(v, 0, 1), sub(v, 1, 0)
    left2, right2 = sub(v, 5, 5) + sub(v, 5, 6), sub(v, 6, 5)
    d2 = cobracket(v * 2, a)
    term1 = (a.canonical_string(left1), a.canonical_string(right1))
    term2 = (a.canonical_string(left2), a.canonical_string(right2))
    checks = {
        "pairs (0,1),(5,6)": {(0, 1), (5, 6)} <= idx,
        "V_{1,0}": sub(v, 1, 0) == "baabab",
        "V_{6,5}": sub(v, 6, 5) == "babaab",
        "lefts": (left1, left2) == ("abaababa", "ababaaba") and term1[0] == term2[0],
        "terms distinct": term1 != term2,
        "terms in delta(V^2)": d2.terms.get(term1, 0) != 0 and d2.terms.get(term2, 0) != 0,
    }
    elapsed = time.perf_counter() - t0
    ok = all(checks.values()) and elapsed < 1.0
    failed = [k for k, good in checks.items() if not good]
    criterion("1 worked example abaabab", ok, f"{term1} vs {term2}; {elapsed * 1000:.0f} ms {failed or ''}")
    assert ok, failed


def test_2_power_formula(criterion, corpus, power_terms):
    bad = [key for key, (closed, direct) in power_terms.items() if closed != direct]
    n = sum(len(ws) for ws in corpus.values())
    ok = not bad
    criterion("2 closed form for delta(V^p)", ok, f"{n} words x p=1..4, {len(power_terms)} comparisons, {len(bad)} mismatches")
    assert ok, bad[:5]


def test_3_norm_identity(criterion, corpus):
    bad, checked = [], 0
    for order, words in corpus.items():
        a = Alphabet(order)
        for w in filter(nonpower, words):
            n_lp = len(linked_pairs(w, a))
            s = self_intersection(CyclicWord(w, a))
            for p in (4, 5):
                m = cobracket_power(w, p, a).norm()
                checked += 1
                if not (m == p * p * n_lp == 2 * p * p * s):
                    bad.append((order, w, p, m, n_lp))
    ok = not bad
    criterion("3 norm identity M = p^2|LP| = 2p^2 s", ok, f"{checked} (word, p) checks, {len(bad)} failures")
    assert ok, bad[:5]


def test_4_decision_procedure(criterion, corpus, power_terms):
    # delta(V^3) via direct enumeration on the expanded word; LP emptiness via the brute-force oracle
    bad, simple = [], 0
    for order, words in corpus.items():
        for w in words:
            cube_zero = not power_terms[order, w, 3][1]
            lp_empty = not brute_linked_pairs(w, order)
            simple += lp_empty
            if cube_zero != lp_empty:
                bad.append((order, w, cube_zero, lp_empty))
    ok = not bad
    criterion("4 delta(V^3)=0 <=> LP empty", ok, f"{simple} simple-power classes, {len(bad)} disagreements")
    assert ok, bad[:5]


def test_5_lemma_suite(criterion, corpus):
    counts = dict.fromkeys(["oracle", "extremo", "injective", "partner", "involution", "reduced_iff_12", "linkedvp"], 0)
    bad = []
    for order, words in corpus.items():
        a = Alphabet(order)
        for w in words:
            lps = linked_pairs(w, a)
            idx = lps.index_set()
            if [(p.i, p.j, p.kind, p.r, p.sign) for p in lps] != brute_linked_pairs(w, order):
                bad.append(("oracle", order, w))
            counts["oracle"] += 1
            if len(idx) != len(lps):
                bad.append(("injective", order, w))
            counts["injective"] += 1
            for pr in lps:
                counts["extremo"] += 1
                if not (pr.i != pr.j and w[pr.i] != w[pr.j] and w[pr.i].swapcase() != w[pr.j - 1]):
                    bad.append(("extremo", order, w, pr))
                try:
                    q = symmetry_partner(lps, pr)
                except LookupError:
                    bad.append(("partner", order, w, pr))
                    continue
                counts["partner"] += 1
                counts["involution"] += 1
                if symmetry_partner(lps, q) != pr:
                    bad.append(("involution", order, w, pr))
                counts["reduced_iff_12"] += 1
                if Alphabet.is_cyclically_reduced(Alphabet.subword(w, pr.j, pr.i)) != (pr.kind in (1, 2)):
                    bad.append(("reduced_iff_12", order, w, pr))
            for p in (2, 3, 4):
                counts["linkedvp"] += 1
                lifted = lift_to_power(lps, p)
                if lifted.pairs != linked_pairs(w * p, a).pairs or len(lifted) != p * p * len(lps):
                    bad.append(("linkedvp", order, w, p))
    ok = not bad
    criterion("5 lemma suite", ok, " ".join(f"{k}={v}" for k, v in counts.items()) + f" violations={len(bad)}")
    assert ok, bad[:5]


def test_6_prop_main(criterion, corpus):
    bad, checked = [], 0
    for order, words in corpus.items():
        a = Alphabet(order)
        for w in filter(nonpower, words):
            lps = linked_pairs(w, a)
            if not lps:
                continue
            for m in (2, 3, 4):
                for l in (1, 2, 3, 4):
                    checked += 1
                    hits = coincidences(lps, m, l)
                    if hits:
                        bad.append((order, w, m, l, hits[:2]))
    witness = ((0, 1), (5, 6)) in coincidences(linked_pairs("abaabab", Alphabet("abBA")), 1, 1)
    ok = not bad and witness
    criterion("6 no class coincidences for m >= 2", ok,
              f"{checked} (word, m, l) checks with m in 2..4, l in 1..4: {len(bad)} coincidences; "
              f"m=l=1 witness (0,1)~(5,6): {witness}")
    assert ok, bad[:5]


def test_7_coalgebra_axioms(criterion, corpus, power_terms):
    skew_bad = [key for key, pair in power_terms.items() for x in pair if not check_coskew(x)]
    jac_bad, jac_n = [], 0
    for order, words in corpus.items():
        a = Alphabet(order)
        for w in words:
            if len(w) <= 7:
                jac_n += 1
                if not check_cojacobi(w, a):
                    jac_bad.append((order, w))
    ok = not skew_bad and not jac_bad
    criterion("7 co-skew and co-Jacobi", ok,
              f"co-skew on {2 * len(power_terms)} cobrackets ({len(skew_bad)} bad); "
              f"co-Jacobi on {jac_n} words <= 7 ({len(jac_bad)} bad)")
    assert ok, (skew_bad[:3], jac_bad[:3])


SEARCH_BUDGET = {"abBA": 10, "abAB": 6}


def test_8_turaev1_search(criterion):
    report, bad, total, counts = [], [], 0, {}
    for order, max_len in SEARCH_BUDGET.items():
        a = Alphabet(order)
        found = search_turaev1_counterexamples(a, max_len, workers=WORKERS)
        counts[order] = len(found)
        total += len(found)
        by_len: dict[int, int] = {}
        for rep in found:
            w = rep.word.word
            by_len[len(w)] = by_len.get(len(w), 0) + 1
            n_lp = len(brute_linked_pairs(w, order))
            verified = (
                not cobracket_power(w, 1, a)
                and brute_cobracket(w, order) == {}
                and n_lp > 0
                and n_lp == 2 * rep.self_intersection
            )
            if not verified:
                bad.append((order, w))
        report.append(f"{order} <= {max_len}: {len(found)} {dict(sorted(by_len.items()))}")
    pants_empty = counts["abBA"] == 0
    ok = not bad
    criterion("8 Turaev(1) search", ok,
              "; ".join(report) + f"; pants empty within budget: {pants_empty}; "
              f"re-verified {total - len(bad)}/{total}")
    assert ok, bad[:5]
