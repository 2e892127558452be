"""Decide the partition relations on a coloring and search thresholds.

decide_classical asks for a size-m vertex set whose pairs use colors from
a palette of size at most kappa; decide_hc asks for a size-m set X whose
palette-colored pairs form a j-connected graph on X (taking every
palette-colored pair inside X is sound because adding edges never breaks
kappa-connectedness); decide_wc asks for a size-m chain of the
well-connectedness order under some palette.

Searches are deterministic: palettes are enumerated in lexicographic
order of their ascending member tuples, vertex sets in lexicographic
order, and the first witness wins.  Threshold search quotients colorings
by color permutations only; vertex order carries meaning for wc, so
vertex symmetry is never used.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from itertools import combinations

from .connectivity import kappa_connected_mask
from .core import (
    AT_MOST_K,
    Coloring,
    HcCertificate,
    Palette,
    RelationQuery,
    WcCertificate,
    palette_adjacency,
)
from .wellconn import chain_of_length, wc_order, wc_pair


class ResourceCapExceeded(RuntimeError):
    """A configured search budget ran out before an answer was reached."""


@dataclass(frozen=True)
class DecisionOutcome:
    """Verdict plus either a re-verifiable witness or the palette log.

    verdict == "holds" exactly when a certificate is present.
    """

    verdict: str
    certificate: WcCertificate | HcCertificate | None
    exhausted_palettes: tuple[tuple[int, ...], ...] | None

    @property
    def holds(self) -> bool:
        return self.verdict == "holds"


def _holds(cert) -> DecisionOutcome:
    return DecisionOutcome("holds", cert, None)


def _fails(palettes) -> DecisionOutcome:
    return DecisionOutcome("fails", None, tuple(palettes))


def palette_tuples(lam: int, kappa: int):
    """Ascending-member color tuples of size 1..kappa, lexicographic."""

    def grow(prefix: tuple[int, ...], lo: int):
        for x in range(lo, lam):
            cur = prefix + (x,)
            yield cur
            if len(cur) < kappa:
                yield from grow(cur, x + 1)

    yield from grow((), 0)


def _check_params(c: Coloring, m: int, kappa: int) -> None:
    if not 2 <= m <= c.n:
        raise ValueError(f"need 2 <= m <= n, got m={m}, n={c.n}")
    if kappa < 1:
        raise ValueError("need kappa >= 1")


def _find_clique(c: Coloring, colors, m: int) -> tuple[int, ...] | None:
    """Lexicographically least m-set whose pairs are all colored in
    `colors`, or None."""
    adj = palette_adjacency(c, colors)
    out: list[int] = []

    def grow(cands: int, need: int) -> bool:
        if need == 0:
            return True
        while cands:
            if cands.bit_count() < need:
                return False
            low = cands & -cands
            cands ^= low
            v = low.bit_length() - 1
            out.append(v)
            if grow(cands & adj[v], need - 1):
                return True
            out.pop()
        return False

    return tuple(out) if grow((1 << c.n) - 1, m) else None


def decide_classical(c: Coloring, m: int, kappa: int) -> DecisionOutcome:
    """Some X of size m with all pair colors inside a size <= kappa
    palette?  The witness is an hc certificate with E = all pairs of X
    and certified connectivity m."""
    _check_params(c, m, kappa)
    tried = []
    for pal in palette_tuples(c.lam, kappa):
        X = _find_clique(c, set(pal), m)
        if X is not None:
            palette = Palette(frozenset(pal), AT_MOST_K, kappa)
            return _holds(HcCertificate(c.n, c.lam, X, palette, frozenset(combinations(X, 2)), m))
        tried.append(pal)
    return _fails(tried)


def decide_hc(c: Coloring, m: int, kappa: int, j: int | None = None) -> DecisionOutcome:
    """Some X of size m whose palette-colored pairs form a j-connected
    graph on X?  j defaults to m, the highly connected reading, under
    which this collapses to decide_classical at finite scale."""
    j = m if j is None else j
    _check_params(c, m, kappa)
    if not 1 <= j <= m:
        raise ValueError(f"need 1 <= j <= m, got j={j}")
    tried = []
    for pal in palette_tuples(c.lam, kappa):
        colors = set(pal)
        adj = palette_adjacency(c, colors)
        for X in combinations(range(c.n), m):
            xmask = 0
            for v in X:
                xmask |= 1 << v
            if kappa_connected_mask(xmask, adj, j):
                palette = Palette(frozenset(pal), AT_MOST_K, kappa)
                edges = frozenset(
                    (a, b) for a, b in combinations(X, 2) if c.color(a, b) in colors
                )
                return _holds(HcCertificate(c.n, c.lam, X, palette, edges, j))
        tried.append(pal)
    return _fails(tried)


def decide_wc(c: Coloring, m: int, kappa: int) -> DecisionOutcome:
    """Some palette of size <= kappa whose well-connectedness order has a
    chain of length m?"""
    _check_params(c, m, kappa)
    tried = []
    for pal in palette_tuples(c.lam, kappa):
        palette = Palette(frozenset(pal), AT_MOST_K, kappa)
        X = chain_of_length(wc_order(c, palette), m)
        if X is not None:
            paths = {}
            for a, b in combinations(X, 2):
                p = wc_pair(c, a, b, palette)
                assert p is not None  # chain pairs are related by construction
                paths[(a, b)] = p
            return _holds(WcCertificate(c.n, c.lam, X, palette, paths))
        tried.append(pal)
    return _fails(tried)


def decide(c: Coloring, query: RelationQuery) -> DecisionOutcome:
    if query.mode == "classical":
        return decide_classical(c, query.m, query.kappa)
    if query.mode == "hc":
        return decide_hc(c, query.m, query.kappa, query.j)
    return decide_wc(c, query.m, query.kappa)


def enumerate_colorings_canonical(n: int, lam: int):
    """Exactly one coloring per color-permutation orbit, in deterministic
    order: the restricted-growth strings over the lexicographic pair
    slots with values below lam."""
    if n < 2:
        raise ValueError("need n >= 2")
    if lam < 1:
        raise ValueError("need lam >= 1")
    npairs = n * (n - 1) // 2
    buf = [0] * npairs

    def rec(i: int, used: int):
        if i == npairs:
            yield Coloring(n, lam, tuple(buf))
            return
        for v in range(min(lam - 1, used) + 1):
            buf[i] = v
            yield from rec(i + 1, max(used, v + 1))

    yield from rec(0, 0)


@dataclass(frozen=True)
class ThresholdResult:
    """Least n at which every coloring satisfies the relation, when that
    is at most n_max.

    extremal is a failing coloring at threshold - 1 on success (below the
    target size m every coloring fails for size reasons, so at n = m - 1
    the constant coloring is the witness) and a failing coloring at n_max
    when the search is exhausted (threshold None).
    """

    threshold: int | None
    extremal: Coloring


def ramsey_number(
    mode: str,
    m: int,
    lam: int,
    kappa: int,
    n_max: int,
    j: int | None = None,
    time_limit: float | None = None,
) -> ThresholdResult:
    """Least n <= n_max such that every coloring of the pairs of n
    vertices with lam colors satisfies the relation.

    Scans n upward from m over canonical colorings in enumeration order,
    so the reported failing coloring is the canonically least one.  A
    time_limit (seconds) raises ResourceCapExceeded when exhausted;
    running past n_max is not an error but a threshold of None.
    """
    query = RelationQuery(mode, m, kappa, j if mode == "hc" else None)
    if lam < 1:
        raise ValueError("need lam >= 1")
    if n_max < m:
        raise ValueError(f"need n_max >= m, got n_max={n_max}, m={m}")
    deadline = None if time_limit is None else time.monotonic() + time_limit
    prev_failing = Coloring(m - 1, lam, (0,) * ((m - 1) * (m - 2) // 2))
    for n in range(m, n_max + 1):
        failing = None
        for cand in enumerate_colorings_canonical(n, lam):
            if deadline is not None and time.monotonic() > deadline:
                raise ResourceCapExceeded(f"time budget used up at n={n}")
            if not decide(cand, query).holds:
                failing = cand
                break
        if failing is None:
            return ThresholdResult(n, prev_failing)
        prev_failing = failing
    return ThresholdResult(None, prev_failing)
