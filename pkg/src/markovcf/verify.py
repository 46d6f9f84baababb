"""Executable checks of the continued-fraction identities and Markov orderings.

Every check is exact: big-integer equalities or strict inequalities.  Each
returns a :class:`CheckReport`; a report passes iff it has no failures, and
every failure record carries enough input to reproduce it.
"""

from __future__ import annotations

import os
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Sequence

from .cf_core import (
    PLACEHOLDER,
    ContinuedFraction,
    Marker,
    SegmentedCF,
    continuant,
    drop_first,
    drop_last,
    evaluate,
    graft_numerator,
    numerator,
    replacement_difference,
    replacement_split,
    reverse,
    strip_zero_pairs,
    tail_identity_terms,
)
from .snake import (
    build_snake,
    cf_from_snake,
    christoffel_word,
    count_matchings_bruteforce,
    lattice_points_between,
    markov_number,
    replaceable_entries,
)
from .trees import markov_number_via_tree

DEFAULT_SEED = 20180531


@dataclass
class CheckReport:
    name: str
    cases_run: int = 0
    failures: list[dict] = field(default_factory=list)
    metadata: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return not self.failures

    def record(self, ok: bool, **payload):
        self.cases_run += 1
        if not ok:
            self.failures.append({k: _show(v) for k, v in payload.items()})

    def merge(self, other: "CheckReport") -> "CheckReport":
        meta = dict(self.metadata)
        meta.update(other.metadata)
        return CheckReport(
            self.name, self.cases_run + other.cases_run, self.failures + other.failures, meta
        )

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "cases_run": self.cases_run,
            "passed": self.passed,
            "failures": self.failures,
            "metadata": self.metadata,
        }


def _show(v):
    """Counterexample payloads: integers as decimal strings, sequences as lists."""
    if isinstance(v, bool):
        return v
    if isinstance(v, int):
        return str(v)
    if isinstance(v, Fraction):
        return f"{v.numerator}/{v.denominator}"
    if isinstance(v, Marker):
        return v.value
    if isinstance(v, ContinuedFraction):
        return list(v.entries)
    if isinstance(v, (list, tuple)):
        return [_show(x) for x in v]
    return v


# -- random instances ----------------------------------------------------


@dataclass(frozen=True)
class GeneratorBounds:
    max_len: int = 5
    max_entry: int = 9
    placeholder_prob: float = 0.15
    max_k: int = 6


def random_segment(rng: random.Random, bounds: GeneratorBounds = GeneratorBounds()) -> tuple[int, ...]:
    if rng.random() < bounds.placeholder_prob:
        return PLACEHOLDER
    n = rng.randint(1, bounds.max_len)
    return tuple(rng.randint(1, bounds.max_entry) for _ in range(n))


def random_segments(rng: random.Random, bounds: GeneratorBounds = GeneratorBounds()) -> list[tuple[int, ...]]:
    k = rng.randint(2, bounds.max_k)
    return [random_segment(rng, bounds) for _ in range(k)]


def random_segmented(rng: random.Random, bounds: GeneratorBounds = GeneratorBounds()) -> SegmentedCF:
    mus = random_segments(rng, bounds)
    alphas = [rng.choice((Marker.TWO, Marker.ONEONE)) for _ in mus[1:]]
    return SegmentedCF(tuple(mus), tuple(alphas))


def _N(entries) -> int:
    # validates zero placement before evaluating
    return numerator(ContinuedFraction(tuple(entries)))


def _interleave(mus, alphas, tail=()) -> tuple[int, ...]:
    return SegmentedCF(tuple(mus), tuple(alphas)).flatten(tail=tail)


# -- independent evaluators for the basic identities -----------------------


def naive_value(entries: Sequence[int]) -> Fraction:
    """Evaluate ``a_1 + 1/(a_2 + ...)`` bottom-up with exact fractions.

    Handles interior and leading zero pairs; the last entry must be nonzero.
    """
    if not entries or entries[-1] == 0:
        raise ZeroDivisionError("last entry must be nonzero")
    v = Fraction(entries[-1])
    for a in reversed(entries[:-1]):
        v = a + 1 / v
    return v


def head_numerator(entries: Sequence[int]) -> int:
    """Numerator built from the front: ``N = a_1 N[a_2..] + N[a_3..]``."""
    nxt, cur = 0, 1  # N of the tail past the end, and of the empty tail
    for a in reversed(entries):
        nxt, cur = cur, a * cur + nxt
    return cur


def check_basic_identities(trials: int = 1000, seed: int = DEFAULT_SEED, max_len: int = 8,
                           max_entry: int = 9) -> CheckReport:
    """Randomised checks of the elementary numerator identities.

    Covers head/tail recursion, ``1,1 <-> 2`` at either end, reversal, the
    three zero-pair rules, the ``N[..,2]``/``N[..,1]`` tail identities and
    grafting at every split point.
    """
    rng = random.Random(seed)
    rep = CheckReport("basic_identities")
    per = {}

    def rec(identity, ok, **kw):
        per[identity] = per.get(identity, 0) + 1
        rep.record(ok, identity=identity, **kw)

    for _ in range(trials):
        n = rng.randint(1, max_len)
        a = tuple(rng.randint(1, max_entry) for _ in range(n))
        N = _N(a)
        if n >= 2:
            rec("head_recursion", N == a[0] * _N(a[1:]) + _N(a[2:]) == head_numerator(a), cf=a)
            rec("tail_recursion", N == a[-1] * _N(a[:-1]) + _N(a[:-2]), cf=a)
        rec("numerator_is_reduced_value", N == naive_value(a).numerator == evaluate(a).numerator, cf=a)
        rec("end_11_is_2", naive_value(a + (1, 1)) == naive_value(a + (2,)), cf=a)
        rec("front_11_is_2", _N((1, 1) + a) == _N((2,) + a), cf=a)
        rec("reversal", N == numerator(reverse(a)) == head_numerator(a[::-1]), cf=a)
        if n >= 2:
            i = rng.randint(1, n - 1)
            z = a[:i] + (0, 0) + a[i:]
            rec("interior_zero_pair", naive_value(z) == naive_value(a) and _N(z) == N, cf=z)
        z = (0, 0) + a
        rec("leading_zero_pair", naive_value(z) == naive_value(a) and _N(z) == N, cf=z)
        z = a + (0, 0)
        rec("trailing_zero_pair",
            _N(z) == N == _N((0, 0) + a[::-1]) and numerator(strip_zero_pairs(z)) == N, cf=z)
        n2, n1, n0, nm = tail_identity_terms(a)
        rec("tail_two_is_one_plus",
            n2 == n1 + n0 and n2 == naive_value(a + (2,)).numerator, cf=a,
            lhs=n2, rhs=n1 + n0)
        rec("twice_tail_one", 2 * n1 == n2 + nm and n1 == naive_value(a + (1,)).numerator, cf=a,
            lhs=2 * n1, rhs=n2 + nm)
        for i in range(1, n):
            rec("grafting", graft_numerator(a, i) == N, cf=a, split=i)
    rep.metadata["per_identity"] = per
    return rep


# -- replacement calculus ------------------------------------------------


def check_replacement_difference(trials: int = 1000, seed: int = DEFAULT_SEED,
                                 bounds: GeneratorBounds = GeneratorBounds(),
                                 pairs: Sequence[tuple] | None = None) -> CheckReport:
    """``N[mu1,1,1,mu2] - N[mu1,2,mu2] == N[mu1^-] N[^-mu2]`` on random segments."""
    rep = CheckReport("replacement_difference")
    if pairs is None:
        rng = random.Random(seed)
        pairs = [(random_segment(rng, bounds), random_segment(rng, bounds)) for _ in range(trials)]
    for mu1, mu2 in pairs:
        mu1, mu2 = tuple(mu1), tuple(mu2)
        lhs = _N(mu1 + (1, 1) + mu2) - _N(mu1 + (2,) + mu2)
        rhs = replacement_difference(mu1, mu2)
        rep.record(lhs == rhs, mu1=mu1, mu2=mu2, lhs=lhs, rhs=rhs)
    return rep


def replacement_sum_sides(mus: Sequence[Sequence[int]]) -> tuple[int, int]:
    """Both sides of the telescoped all-2 versus all-(1,1) difference."""
    mus = [tuple(m) for m in mus]
    k = len(mus)
    twos = [Marker.TWO] * (k - 1)
    ones = [Marker.ONEONE] * (k - 1)
    lhs = _N(_interleave(mus, twos, (2,))) - _N(_interleave(mus, ones))
    rhs = _N(_interleave(mus, twos, (1,))) - sum(replacement_split(mus, j).term() for j in range(1, k))
    return lhs, rhs


def check_replacement_sum(mu_lists: Sequence[Sequence[Sequence[int]]]) -> CheckReport:
    """``N[mu_1,2,..,mu_k,2] - N[mu_1,1,1,..,mu_k]`` equals
    ``N[mu_1,2,..,mu_k,1] - sum_j N[delta_j^-] N[^-epsilon_j]``."""
    rep = CheckReport("replacement_sum")
    for mus in mu_lists:
        lhs, rhs = replacement_sum_sides(mus)
        rep.record(lhs == rhs, mus=list(mus), lhs=lhs, rhs=rhs)
    return rep


def check_replacement_positivity(mu_lists: Sequence[Sequence[Sequence[int]]]) -> CheckReport:
    """``N[mu_1,2,..,mu_k,2] > N[mu_1,1,1,..,mu_k]``, strictly."""
    rep = CheckReport("replacement_positivity")
    for mus in mu_lists:
        lhs, _ = replacement_sum_sides(mus)
        rep.record(lhs > 0, mus=list(mus), difference=lhs)
    return rep


@dataclass(frozen=True)
class MixedReplacementTerms:
    """Pieces of the mixed-replacement difference for one segmented fraction."""

    difference: int  # N[mu, alpha, .., mu_k, 2] - N[mu, alpha', .., mu_k]
    end_one: int  # N[mu, alpha, .., mu_k, 1]
    d: int  # N[mu, alpha, ..] - N[mu, alpha', ..]
    d1: int  # gain from turning every 1,1 into 2
    d2: int  # loss from then turning every original 2 into 1,1


def mixed_replacement_terms(seg: SegmentedCF) -> MixedReplacementTerms:
    mus, alphas = seg.mus, seg.alphas
    primed = tuple(a.flip() for a in alphas)
    fixed = tuple(Marker.TWO for _ in alphas)  # every 1,1 sent to 2, 2s kept
    k = len(mus)

    def prefix(markers, i):
        return _interleave(mus[: i + 1], markers[:i])

    def suffix(markers, i):
        return _interleave(mus[i + 1:], markers[i + 1:])

    d1 = 0
    d2 = 0
    for i in range(k - 1):
        if alphas[i] is Marker.ONEONE:
            d1 += continuant(drop_last(prefix(alphas, i))) * continuant(drop_first(suffix(fixed, i)))
        else:
            d2 -= continuant(drop_last(prefix(fixed, i))) * continuant(drop_first(suffix(primed, i)))
    with_two = _N(seg.flatten(tail=(2,)))
    plain = _N(seg.flatten())
    flipped = _N(seg.flatten(primed))
    return MixedReplacementTerms(
        difference=with_two - flipped,
        end_one=_N(seg.flatten(tail=(1,))),
        d=plain - flipped,
        d1=d1,
        d2=d2,
    )


def check_mixed_replacement(segs: Sequence[SegmentedCF]) -> CheckReport:
    """Appending a 2 beats flipping every marker, whatever the markers are.

    Also re-derives the split of the difference into a non-negative part
    (1,1 -> 2 flips) and a non-positive part (2 -> 1,1 flips) and checks the
    resulting closed form exactly.
    """
    rep = CheckReport("mixed_replacement")
    for seg in segs:
        t = mixed_replacement_terms(seg)
        ok = (
            t.difference > 0
            and t.d == t.d1 + t.d2
            and t.d1 >= 0
            and t.d2 <= 0
            and t.difference == t.end_one + t.d1 + t.d2
        )
        rep.record(
            ok,
            mus=list(seg.mus),
            alphas=list(seg.alphas),
            difference=t.difference,
            d=t.d,
            d1=t.d1,
            d2=t.d2,
        )
    return rep


def replacement_suites(trials: int = 1000, seed: int = DEFAULT_SEED,
                       bounds: GeneratorBounds = GeneratorBounds()) -> list[CheckReport]:
    """Random instances for every identity suite, each seeded from ``seed``."""
    reports = [check_basic_identities(trials, seed)]
    reports.append(check_replacement_difference(trials, seed + 1, bounds))
    rng = random.Random(seed + 2)
    mu_lists = [random_segments(rng, bounds) for _ in range(trials)]
    reports.append(check_replacement_sum(mu_lists))
    reports.append(check_replacement_positivity(mu_lists))
    rng = random.Random(seed + 3)
    reports.append(check_mixed_replacement([random_segmented(rng, bounds) for _ in range(trials)]))
    return reports


# -- snake graph decompositions -------------------------------------------


def segment_pair(longer: Sequence[Marker], shorter: Sequence[Marker]) -> SegmentedCF:
    """Group two equal-length marker lists into agreeing runs and flips.

    Runs where the lists agree become segments; each disagreement becomes a
    marker taken from ``longer``.  Adjacent disagreements (and ones at either
    end) get a ``0, 0`` segment between them.
    """
    if len(longer) != len(shorter):
        raise ValueError("marker lists must have equal length")
    mus, alphas = [], []
    run: list[int] = []
    for a, b in zip(longer, shorter):
        if a is b:
            run.extend(a.entries)
        else:
            mus.append(tuple(run) if run else PLACEHOLDER)
            alphas.append(a)
            run = []
    mus.append(tuple(run) if run else PLACEHOLDER)
    return SegmentedCF(tuple(mus), tuple(alphas))


def ordering_decomposition(big: tuple[int, int], small: tuple[int, int]) -> SegmentedCF:
    """Express ``m_big`` and ``m_small`` as a marker-flip pair plus a final 2."""
    nu = replaceable_entries(cf_from_snake(build_snake(*big)))
    nu_small = replaceable_entries(cf_from_snake(build_snake(*small)))
    if nu[-1] is not Marker.TWO or len(nu) != len(nu_small) + 1:
        raise ValueError(f"{big} and {small} are not one replaceable entry apart")
    return segment_pair(nu[:-1], nu_small)


# -- sweeps --------------------------------------------------------------


def _ordering_rows(args) -> CheckReport:
    qs, include_noncoprime = args
    rep = CheckReport("ordering")
    for q in qs:
        for p in range(1, q):
            neighbours = [(p, q + 1)]
            if p + 1 < q:
                neighbours.append((p + 1, q))
            for pp, qq in neighbours:
                if not include_noncoprime and (gcd(p, q) > 1 or gcd(pp, qq) > 1):
                    continue
                lo, hi = markov_number(p, q), markov_number(pp, qq)
                rep.record(lo < hi, small=f"{p}/{q}", big=f"{pp}/{qq}", lhs=lo, rhs=hi)
    return rep


def _run(worker, chunks, jobs: int | None) -> list[CheckReport]:
    jobs = jobs or 1
    if jobs <= 1 or len(chunks) <= 1:
        return [worker(c) for c in chunks]
    with ProcessPoolExecutor(max_workers=jobs) as ex:
        return list(ex.map(worker, chunks))


def _chunks(qs: list[int], jobs: int | None) -> list[list[int]]:
    n = max(1, min(jobs or 1, len(qs)))
    return [qs[i::n] for i in range(n)]


def _merge(name: str, parts: list[CheckReport], **metadata) -> CheckReport:
    rep = CheckReport(name, metadata=metadata)
    for part in parts:
        rep = rep.merge(part)
    return rep


def sweep_ordering(q_max: int, include_noncoprime: bool = True, jobs: int | None = 1) -> CheckReport:
    """``m_{p/q} < m_{p/(q+1)}`` and, for ``p+1 < q``, ``m_{p/q} < m_{(p+1)/q}``
    over all ``1 <= p < q <= q_max``."""
    if q_max < 2:
        raise ValueError("q_max must be >= 2")
    qs = list(range(2, q_max + 1))
    parts = _run(_ordering_rows, [(c, include_noncoprime) for c in _chunks(qs, jobs)], jobs)
    return _merge(
        "ordering",
        parts,
        q_max=q_max,
        include_noncoprime=include_noncoprime,
        noncoprime_value="lattice-path snake graph" if include_noncoprime else None,
    )


def _conjecture_rows(args) -> CheckReport:
    qs, q_max, i_max = args
    rep = CheckReport("conjectures")
    for q in qs:
        for p in range(1, q):
            if gcd(p, q) != 1:
                continue
            m = markov_number(p, q)
            for i in range(1, i_max + 1):
                if q + i <= q_max and gcd(q + i, p) == 1:
                    other = markov_number(p, q + i)
                    rep.record(m < other, kind="fixed_numerator", small=f"{p}/{q}",
                               big=f"{p}/{q + i}", lhs=m, rhs=other)
                if p + i < q and gcd(q, p + i) == 1:
                    other = markov_number(p + i, q)
                    rep.record(m < other, kind="fixed_denominator", small=f"{p}/{q}",
                               big=f"{p + i}/{q}", lhs=m, rhs=other)
    return rep


def sweep_conjectures(q_max: int, i_max: int | None = None, jobs: int | None = 1) -> CheckReport:
    """Fixed-numerator and fixed-denominator orderings over reduced indices.

    Checks ``m_{p/q} < m_{p/(q+i)}`` with ``q + i <= q_max`` and
    ``m_{p/q} < m_{(p+i)/q}`` with ``p + i < q <= q_max``, for
    ``1 <= i <= i_max`` and all coprime pairs involved.
    """
    if q_max < 1:
        raise ValueError("q_max must be >= 1")
    i_max = q_max if i_max is None else i_max
    if i_max < 1:
        raise ValueError("i_max must be >= 1")
    qs = list(range(2, q_max + 1))
    parts = _run(_conjecture_rows, [(c, q_max, i_max) for c in _chunks(qs, jobs)], jobs)
    return _merge("conjectures", parts, q_max=q_max, i_max=i_max)


def cross_check_matchings(sum_max: int) -> CheckReport:
    """Brute-force matching count vs continued-fraction numerator vs tree.

    The tree value is only compared for reduced ``p/q``.
    """
    if 2 * sum_max - 3 > 25:
        raise ValueError("sum_max too large for the brute-force oracle (max 14)")
    rep = CheckReport("matchings", metadata={"sum_max": sum_max})
    for s in range(3, sum_max + 1):
        for p in range(1, (s + 1) // 2):
            q = s - p
            g = build_snake(p, q)
            brute = count_matchings_bruteforce(g)
            cfn = numerator(cf_from_snake(g))
            payload = dict(index=f"{p}/{q}", bruteforce=brute, numerator=cfn)
            ok = brute == cfn
            if gcd(p, q) == 1:
                tree = markov_number_via_tree(p, q)
                payload["tree"] = tree
                ok = ok and cfn == tree
            rep.record(ok, **payload)
    return rep


def check_snake_structure(q_max: int) -> CheckReport:
    """Shape of every lattice-path snake graph with ``q <= q_max``."""
    rep = CheckReport("structure", metadata={"q_max": q_max})
    for q in range(2, q_max + 1):
        for p in range(1, q):
            g = build_snake(p, q)
            cf = cf_from_snake(g).entries
            problems = []
            if not set(cf) <= {1, 2}:
                problems.append("entries")
            if sum(cf) != 2 * q + 2 * p - 2:
                problems.append("entry_sum")
            try:
                if len(replaceable_entries(cf)) != q + p - 1:
                    problems.append("replaceable_count")
            except ValueError:
                problems.append("unpaired_one")
            if cf[0] != 2 or cf[-1] != 2:
                problems.append("ends")
            if len(g.tiles) != 2 * (p + q) - 3:
                problems.append("tile_count")
            if any(gap % 2 == 0 for gap in g.gaps()):
                problems.append("even_gap")
            if g.tiles[0] != (1, 0) or (g.tiles[-1][0] + 1, g.tiles[-1][1] + 1) != (2 * q, 2 * p - 1):
                problems.append("endpoints")
            word = christoffel_word(p, q)
            if lattice_points_between(word, p, q):
                problems.append("christoffel")
            rep.record(not problems, index=f"{p}/{q}", problems=problems)
    return rep
