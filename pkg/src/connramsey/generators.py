"""Constructors for benchmark colorings and set-family utilities.

The first-difference coloring on bit strings keeps monochromatic and
small-palette structure provably small, the hub coloring manufactures
instances where a one-color palette already carries a well-spread
connected subgraph, and the alignment / sunflower helpers are the
reusable combinatorial pieces of hub-style constructions.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations

from .core import Coloring, all_pairs


@dataclass(frozen=True)
class StringVertexMap:
    """Bijection between vertices 0..2^ell-1 and their ell-bit strings.

    Bit 0 is the most significant position, so integer order on vertices
    agrees with lexicographic order on strings.
    """

    ell: int

    def __post_init__(self):
        if self.ell < 1:
            raise ValueError("need ell >= 1")

    @property
    def n(self) -> int:
        return 1 << self.ell

    def string_of(self, v: int) -> str:
        if not 0 <= v < self.n:
            raise ValueError(f"vertex {v} out of range for ell={self.ell}")
        return format(v, f"0{self.ell}b")

    def vertex_of(self, s: str) -> int:
        if len(s) != self.ell or any(ch not in "01" for ch in s):
            raise ValueError(f"not an {self.ell}-bit string: {s!r}")
        return int(s, 2)


def first_difference(u: int, v: int, ell: int) -> int:
    """First bit position (most significant = 0) where the ell-bit
    strings of u and v differ."""
    if u == v:
        raise ValueError("strings are equal")
    if not 0 <= u < 1 << ell or not 0 <= v < 1 << ell:
        raise ValueError(f"values must fit in {ell} bits")
    return ell - (u ^ v).bit_length()


def delta_coloring(ell: int) -> Coloring:
    """Color each pair of ell-bit strings by the first position where
    they differ: n = 2^ell vertices, ell colors.

    Any vertex set realizing only colors S on its pairs is determined by
    its bits at S, so its size is at most 2^|S|.
    """
    if ell < 1:
        raise ValueError("need ell >= 1")
    n = 1 << ell
    return Coloring(n, ell, tuple(first_difference(a, b, ell) for a, b in all_pairs(n)))


def constant_coloring(n: int, color: int, lam: int) -> Coloring:
    if not 0 <= color < lam:
        raise ValueError(f"color {color} out of range 0..{lam - 1}")
    return Coloring(n, lam, (color,) * (n * (n - 1) // 2))


def random_coloring(n: int, lam: int, seed: int = 0) -> Coloring:
    """Uniform colors from a seeded generator; identical across runs."""
    rng = random.Random(seed)
    return Coloring(n, lam, tuple(rng.randrange(lam) for _ in range(n * (n - 1) // 2)))


def hub_coloring(n0: int, n1: int) -> Coloring:
    """Two interleaved vertex classes with every crossing pair in color 0.

    Classes alternate positions (even slots class 0, odd slots class 1,
    leftovers at the end), so both are cofinal in the vertex order.
    Within-class pairs follow the first-difference pattern on class-local
    indices, shifted up by one: color 0 is exactly the crossing color.
    A one-color palette then spans a j-connected crossing subgraph while
    monochromatic cliques stay small.
    """
    if n0 < 1 or n1 < 1:
        raise ValueError("both classes need at least one vertex")
    slots: list[tuple[int, int]] = []
    a = b = 0
    while a < n0 and b < n1:
        slots.append((0, a))
        a += 1
        slots.append((1, b))
        b += 1
    while a < n0:
        slots.append((0, a))
        a += 1
    while b < n1:
        slots.append((1, b))
        b += 1
    bits = [(count - 1).bit_length() if count >= 2 else 0 for count in (n0, n1)]
    lam = 1 + max(bits)
    cols = []
    for p, q in all_pairs(n0 + n1):
        cp, ip = slots[p]
        cq, iq = slots[q]
        if cp != cq:
            cols.append(0)
        else:
            cols.append(1 + first_difference(ip, iq, bits[cp]))
    return Coloring(n0 + n1, lam, tuple(cols))


def aligned(u, v) -> bool:
    """Same order type, and every common element at the same index.

    Inputs are ascending sequences of mutually comparable, hashable
    values (integers or ordinals).
    """
    us = list(u)
    vs = list(v)
    if len(us) != len(vs):
        return False
    pos_v = {x: k for k, x in enumerate(vs)}
    return all(pos_v.get(x, k) == k for k, x in enumerate(us))


def find_delta_subsystem(family, t: int):
    """Largest subfamily of >= t equal-size sets whose pairwise
    intersections all equal one root.

    The search is exhaustive over subfamilies (largest size first,
    lexicographic index order within a size), so None means no such
    subfamily exists.  Returns (subfamily, root) on success.
    """
    fam = [frozenset(s) for s in family]
    if len({len(s) for s in fam}) > 1:
        raise ValueError("family members must all have the same size")
    if t < 2:
        raise ValueError("need target size t >= 2")
    for size in range(len(fam), t - 1, -1):
        hit = _delta_search(fam, size)
        if hit is not None:
            chosen, root = hit
            return tuple(fam[i] for i in chosen), root
    return None


def _delta_search(fam, size):
    n = len(fam)

    def extend(chosen: list[int], root):
        if len(chosen) == size:
            return tuple(chosen), root
        start = chosen[-1] + 1 if chosen else 0
        for i in range(start, n):
            if n - i < size - len(chosen):
                break
            cand = fam[i]
            if not chosen:
                result = extend([i], None)
            elif root is None:
                result = extend(chosen + [i], fam[chosen[0]] & cand)
            elif all(fam[m] & cand == root for m in chosen):
                result = extend(chosen + [i], root)
            else:
                result = None
            if result is not None:
                return result
        return None

    return extend([], None)
