"""Symmetric pair colorings, color palettes, queries, and certificates.

Vertices are the integers 0..n-1 and stand for ordinals, so the vertex
order is meaningful: well-connectedness constrains witness paths to
vertices at or above the smaller endpoint of the pair they join.  Colors
are dense integers 0..lambda-1 and palettes are explicit color sets, which
keeps exhaustive palette enumeration straightforward.

Everything in this module is immutable after construction and safe to
share between concurrent tasks.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import combinations


class FormatError(ValueError):
    """A coloring file or certificate document does not match its format."""


# Palette budget kinds.
AT_MOST_K = "at-most-k"
STRICTLY_BELOW_K = "strictly-below-k"
INITIAL_SEGMENT = "subset-of-initial-segment-i"

_BUDGET_KINDS = (AT_MOST_K, STRICTLY_BELOW_K, INITIAL_SEGMENT)


def pair_index(n: int, a: int, b: int) -> int:
    """Position of the pair (a, b), a < b < n, in lexicographic pair order."""
    return a * (2 * n - a - 1) // 2 + (b - a - 1)


def all_pairs(n: int):
    """Pairs (a, b) with a < b < n in lexicographic order."""
    return combinations(range(n), 2)


@dataclass(frozen=True)
class Coloring:
    """A total symmetric edge-coloring of the complete graph on {0..n-1}.

    colors[k] is the color of the k-th pair in lexicographic order
    ((0,1), (0,2), ..., (n-2,n-1)); symmetry is structural because only
    the ordered representative a < b is stored.
    """

    n: int
    lam: int
    colors: tuple[int, ...]

    def __post_init__(self):
        if self.n < 0:
            raise ValueError(f"vertex count must be >= 0, got {self.n}")
        if self.lam < 1:
            raise ValueError(f"color count must be >= 1, got {self.lam}")
        want = self.n * (self.n - 1) // 2
        if len(self.colors) != want:
            raise ValueError(
                f"expected {want} pair colors for n={self.n}, got {len(self.colors)}"
            )
        for x in self.colors:
            if not 0 <= x < self.lam:
                raise ValueError(f"color {x} out of range 0..{self.lam - 1}")

    def color(self, a: int, b: int) -> int:
        """Color of the unordered pair {a, b}."""
        if a == b:
            raise ValueError(f"no color for the degenerate pair ({a}, {a})")
        if a > b:
            a, b = b, a
        if a < 0 or b >= self.n:
            raise ValueError(f"pair ({a}, {b}) out of range for n={self.n}")
        return self.colors[pair_index(self.n, a, b)]


def make_coloring(n: int, lam: int, entries) -> Coloring:
    """Build a coloring from explicit (a, b, color) entries.

    Every pair a < b < n must be covered exactly once; (b, a) names the
    same pair as (a, b).  Duplicates, gaps, out-of-range colors, and
    degenerate pairs are rejected.
    """
    if n < 0:
        raise ValueError(f"vertex count must be >= 0, got {n}")
    if lam < 1:
        raise ValueError(f"color count must be >= 1, got {lam}")
    npairs = n * (n - 1) // 2
    slots: list[int | None] = [None] * npairs
    for a, b, col in entries:
        if a == b:
            raise ValueError(f"degenerate pair ({a}, {a})")
        if a > b:
            a, b = b, a
        if a < 0 or b >= n:
            raise ValueError(f"pair ({a}, {b}) out of range for n={n}")
        if not 0 <= col < lam:
            raise ValueError(f"color {col} out of range 0..{lam - 1} for pair ({a}, {b})")
        k = pair_index(n, a, b)
        if slots[k] is not None:
            raise ValueError(f"duplicate pair ({a}, {b})")
        slots[k] = col
    for (a, b), col in zip(all_pairs(n), slots):
        if col is None:
            raise ValueError(f"missing pair ({a}, {b})")
    return Coloring(n, lam, tuple(slots))  # type: ignore[arg-type]


def restrict_coloring(c: Coloring, universe) -> tuple[Coloring, tuple[int, ...]]:
    """Coloring induced on an ascending vertex list, plus the index map.

    New pair (i, j) receives the color of (universe[i], universe[j]), so
    relative vertex order is preserved; the returned tuple maps new index
    i back to universe[i].
    """
    uni = tuple(universe)
    for k, v in enumerate(uni):
        if not 0 <= v < c.n:
            raise ValueError(f"vertex {v} out of range for n={c.n}")
        if k and uni[k - 1] >= v:
            raise ValueError("vertex list must be strictly ascending")
    cols = tuple(c.color(uni[i], uni[j]) for i, j in combinations(range(len(uni)), 2))
    return Coloring(len(uni), c.lam, cols), uni


def permute_colors(c: Coloring, perm) -> Coloring:
    """Relabel colors through a bijection on 0..lambda-1."""
    perm = tuple(perm)
    if sorted(perm) != list(range(c.lam)):
        raise ValueError("color map is not a bijection on 0..lambda-1")
    return Coloring(c.n, c.lam, tuple(perm[x] for x in c.colors))


def canonical_color_form(c: Coloring) -> Coloring:
    """Relabel colors by first appearance in lexicographic pair order.

    The result is a restricted-growth string over the pair slots: it is
    idempotent and constant on color-permutation orbits.
    """
    relabel: dict[int, int] = {}
    out = []
    for x in c.colors:
        if x not in relabel:
            relabel[x] = len(relabel)
        out.append(relabel[x])
    return Coloring(c.n, c.lam, tuple(out))


def palette_adjacency(c: Coloring, colors) -> list[int]:
    """Neighbor bitmasks of the graph formed by pairs colored in `colors`."""
    adj = [0] * c.n
    k = 0
    for a in range(c.n):
        for b in range(a + 1, c.n):
            if c.colors[k] in colors:
                adj[a] |= 1 << b
                adj[b] |= 1 << a
            k += 1
    return adj


def write_coloring(c: Coloring) -> str:
    """Serialize: header `<n> <lambda>`, then one `<a> <b> <color>` line
    per pair in ascending lexicographic order."""
    lines = [f"{c.n} {c.lam}"]
    for (a, b), col in zip(all_pairs(c.n), c.colors):
        lines.append(f"{a} {b} {col}")
    return "\n".join(lines) + "\n"


def read_coloring(text: str) -> Coloring:
    """Parse the coloring file format; inverse of write_coloring."""
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    if not lines:
        raise FormatError("empty coloring file")
    head = lines[0].split()
    if len(head) != 2:
        raise FormatError(f"malformed header {lines[0]!r}: expected '<n> <lambda>'")
    try:
        n, lam = int(head[0]), int(head[1])
    except ValueError as exc:
        raise FormatError(f"malformed header {lines[0]!r}") from exc
    if n < 0 or lam < 1:
        raise FormatError(f"bad header values n={n} lambda={lam}")
    want = n * (n - 1) // 2
    body = lines[1:]
    if len(body) != want:
        raise FormatError(f"expected {want} pair lines, got {len(body)}")
    entries = []
    for ln in body:
        parts = ln.split()
        if len(parts) != 3:
            raise FormatError(f"malformed pair line {ln!r}")
        try:
            a, b, col = (int(p) for p in parts)
        except ValueError as exc:
            raise FormatError(f"malformed pair line {ln!r}") from exc
        if a >= b:
            raise FormatError(f"pair line {ln!r}: need a < b")
        entries.append((a, b, col))
    try:
        return make_coloring(n, lam, entries)
    except ValueError as exc:
        raise FormatError(str(exc)) from exc


@dataclass(frozen=True)
class Palette:
    """A set of colors under a cardinality budget.

    Budget kinds: AT_MOST_K (|members| <= budget), STRICTLY_BELOW_K
    (|members| < budget), INITIAL_SEGMENT (members within 0..budget-1).
    A budget of None leaves the palette unconstrained.
    """

    members: frozenset[int]
    budget_kind: str = AT_MOST_K
    budget: int | None = None

    def __post_init__(self):
        object.__setattr__(self, "members", frozenset(self.members))
        for x in self.members:
            if x < 0:
                raise ValueError(f"negative color {x}")
        if self.budget_kind not in _BUDGET_KINDS:
            raise ValueError(f"unknown budget kind {self.budget_kind!r}")
        if self.budget is None:
            return
        size = len(self.members)
        if self.budget_kind == AT_MOST_K and size > self.budget:
            raise ValueError(f"palette has {size} colors, budget allows at most {self.budget}")
        if self.budget_kind == STRICTLY_BELOW_K and size >= self.budget:
            raise ValueError(f"palette has {size} colors, budget allows fewer than {self.budget}")
        if self.budget_kind == INITIAL_SEGMENT and any(x >= self.budget for x in self.members):
            raise ValueError(f"palette not contained in 0..{self.budget - 1}")

    @property
    def sorted_members(self) -> tuple[int, ...]:
        return tuple(sorted(self.members))


@dataclass(frozen=True)
class RelationQuery:
    """One partition-relation instance: mode, target size m, palette
    budget kappa, and for hc mode the connectivity demand j (j = m is the
    highly connected reading)."""

    mode: str
    m: int
    kappa: int
    j: int | None = None

    def __post_init__(self):
        if self.mode not in ("classical", "hc", "wc"):
            raise ValueError(f"unknown mode {self.mode!r}")
        if self.m < 2:
            raise ValueError("need m >= 2")
        if self.kappa < 1:
            raise ValueError("need kappa >= 1")
        if self.mode == "hc":
            j = self.m if self.j is None else self.j
            if not 1 <= j <= self.m:
                raise ValueError("need 1 <= j <= m")
            object.__setattr__(self, "j", j)
        elif self.j is not None:
            raise ValueError("j applies to hc mode only")


@dataclass(frozen=True)
class WcCertificate:
    """Witness that X is well-connected in the palette: one path per pair.

    Each path starts at the smaller endpoint, ends at the larger, visits
    pairwise distinct vertices all at or above the smaller endpoint, and
    uses only palette-colored edges.
    """

    n: int
    lam: int
    X: tuple[int, ...]
    palette: Palette
    paths: dict[tuple[int, int], tuple[int, ...]]


@dataclass(frozen=True)
class HcCertificate:
    """Witness of a j-connected subgraph (X, E) whose edge colors lie in
    the palette."""

    n: int
    lam: int
    X: tuple[int, ...]
    palette: Palette
    E: frozenset[tuple[int, int]]
    j: int


def certificate_to_json(cert) -> str:
    """Serialize a certificate to its JSON document (deterministic bytes)."""
    if isinstance(cert, WcCertificate):
        doc = {
            "kind": "wc",
            "n": cert.n,
            "lambda": cert.lam,
            "X": list(cert.X),
            "Lambda": list(cert.palette.sorted_members),
            "paths": {f"{a},{b}": list(p) for (a, b), p in cert.paths.items()},
        }
    elif isinstance(cert, HcCertificate):
        doc = {
            "kind": "hc",
            "n": cert.n,
            "lambda": cert.lam,
            "X": list(cert.X),
            "Lambda": list(cert.palette.sorted_members),
            "E": sorted([a, b] for a, b in cert.E),
            "j": cert.j,
        }
    else:
        raise TypeError(f"not a certificate: {cert!r}")
    return json.dumps(doc, sort_keys=True, separators=(",", ":")) + "\n"


def _as_int(doc, key):
    v = doc.get(key)
    if not isinstance(v, int) or isinstance(v, bool):
        raise FormatError(f"certificate field {key!r} must be an integer")
    return v


def _as_int_list(v, what):
    if not isinstance(v, list) or any(not isinstance(x, int) or isinstance(x, bool) for x in v):
        raise FormatError(f"certificate field {what!r} must be a list of integers")
    return [int(x) for x in v]


def certificate_from_json(text: str):
    """Parse a certificate document.

    Structural parsing only: semantic validity against a coloring is the
    verifier's job.
    """
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"certificate is not valid JSON: {exc}") from exc
    if not isinstance(doc, dict):
        raise FormatError("certificate document must be a JSON object")
    kind = doc.get("kind")
    if kind not in ("wc", "hc"):
        raise FormatError(f"certificate kind must be 'wc' or 'hc', got {kind!r}")
    n = _as_int(doc, "n")
    lam = _as_int(doc, "lambda")
    X = tuple(_as_int_list(doc.get("X"), "X"))
    palette = Palette(frozenset(_as_int_list(doc.get("Lambda"), "Lambda")))
    if kind == "wc":
        raw = doc.get("paths")
        if not isinstance(raw, dict):
            raise FormatError("wc certificate needs a 'paths' object")
        paths = {}
        for key, val in raw.items():
            parts = key.split(",")
            if len(parts) != 2:
                raise FormatError(f"bad path key {key!r}: expected 'a,b'")
            try:
                a, b = int(parts[0]), int(parts[1])
            except ValueError as exc:
                raise FormatError(f"bad path key {key!r}") from exc
            paths[(a, b)] = tuple(_as_int_list(val, f"paths[{key}]"))
        return WcCertificate(n, lam, X, palette, paths)
    raw = doc.get("E")
    if not isinstance(raw, list):
        raise FormatError("hc certificate needs an 'E' list")
    edges = set()
    for item in raw:
        pair = _as_int_list(item, "E entry")
        if len(pair) != 2:
            raise FormatError(f"bad edge {item!r}: expected [a, b]")
        edges.add((pair[0], pair[1]))
    return HcCertificate(n, lam, X, palette, frozenset(edges), _as_int(doc, "j"))
