"""Labeled digraphs with exact walk counting.

Vertices are 1..n.  Arcs are ordered pairs; multiplicity greater than
one is permitted only on self loops, so the adjacency matrix is 0/1 off
the diagonal with nonnegative diagonal entries.  All arithmetic is on
Python ints, so walk counts are exact at any length.

Serialization: a text form (first line ``n``, then one ``i j`` or
``i j mult`` per arc, sorted) and a JSON form
``{"n": n, "arcs": [[i, j, mult], ...]}``; both round-trip exactly.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cached_property
from math import gcd


class IndexOutOfRange(ValueError):
    """An arc endpoint lies outside 1..n."""


class ParallelNonLoopArc(ValueError):
    """A non-loop arc was given more than once or with multiplicity > 1."""


class NotSimple(ValueError):
    """The operation needs a loopless digraph without multiplicities."""


class NotStronglyConnected(ValueError):
    """The operation needs a strongly connected digraph."""


@dataclass(frozen=True)
class Digraph:
    """Immutable digraph; build via :func:`build_digraph`."""

    n: int
    arcs: tuple[tuple[int, int, int], ...]  # sorted (tail, head, multiplicity)

    @cached_property
    def _successors(self) -> dict[int, tuple[tuple[int, int], ...]]:
        out: dict[int, list[tuple[int, int]]] = {v: [] for v in range(1, self.n + 1)}
        for i, j, m in self.arcs:
            out[i].append((j, m))
        return {v: tuple(lst) for v, lst in out.items()}

    def successors(self, v: int) -> tuple[tuple[int, int], ...]:
        """(head, multiplicity) pairs of arcs leaving v."""
        return self._successors[v]

    def adjacency_matrix(self) -> list[list[int]]:
        """Fresh n x n multiplicity matrix, 0-based rows/columns."""
        mat = [[0] * self.n for _ in range(self.n)]
        for i, j, m in self.arcs:
            mat[i - 1][j - 1] = m
        return mat

    def multiplicity(self, i: int, j: int) -> int:
        for head, m in self._successors.get(i, ()):
            if head == j:
                return m
        return 0

    def has_arc(self, i: int, j: int) -> bool:
        return self.multiplicity(i, j) > 0

    @property
    def arc_count(self) -> int:
        return sum(m for _, _, m in self.arcs)

    @property
    def is_simple(self) -> bool:
        return all(i != j and m == 1 for i, j, m in self.arcs)


def build_digraph(n: int, arcs) -> Digraph:
    """Validate and build a digraph on vertices 1..n.

    ``arcs`` holds (i, j) or (i, j, mult) entries.  Repeated loops merge
    by summing multiplicities; a repeated non-loop arc, or a non-loop
    arc with multiplicity > 1, is rejected.
    """
    if n < 1:
        raise ValueError(f"vertex count must be positive, got {n}")
    merged: dict[tuple[int, int], int] = {}
    seen_nonloop: set[tuple[int, int]] = set()
    for entry in arcs:
        if len(entry) == 2:
            i, j = entry
            m = 1
        elif len(entry) == 3:
            i, j, m = entry
        else:
            raise ValueError(f"arc entries must be (i, j) or (i, j, mult), got {entry!r}")
        if not (1 <= i <= n and 1 <= j <= n):
            raise IndexOutOfRange(f"arc ({i}, {j}) outside vertex range 1..{n}")
        if m < 1:
            raise ValueError(f"arc ({i}, {j}) has multiplicity {m} < 1")
        if i == j:
            merged[(i, j)] = merged.get((i, j), 0) + m
        else:
            if m > 1 or (i, j) in seen_nonloop:
                raise ParallelNonLoopArc(f"parallel non-loop arc ({i}, {j})")
            seen_nonloop.add((i, j))
            merged[(i, j)] = 1
    triples = tuple(sorted((i, j, m) for (i, j), m in merged.items()))
    return Digraph(n=n, arcs=triples)


def complement(d: Digraph) -> Digraph:
    """Loopless complement: arc (i, j), i != j, present iff absent in d."""
    if not d.is_simple:
        raise NotSimple("complement is defined for simple digraphs only")
    present = {(i, j) for i, j, _ in d.arcs}
    arcs = [
        (i, j)
        for i in range(1, d.n + 1)
        for j in range(1, d.n + 1)
        if i != j and (i, j) not in present
    ]
    return build_digraph(d.n, arcs)


def _reachable(d: Digraph, start: int, reverse: bool = False) -> set[int]:
    adj: dict[int, list[int]] = {v: [] for v in range(1, d.n + 1)}
    for i, j, _ in d.arcs:
        if reverse:
            adj[j].append(i)
        else:
            adj[i].append(j)
    seen = {start}
    stack = [start]
    while stack:
        u = stack.pop()
        for w in adj[u]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return seen


def is_strongly_connected(d: Digraph) -> bool:
    if d.n == 1:
        return True
    full = set(range(1, d.n + 1))
    return _reachable(d, 1) == full and _reachable(d, 1, reverse=True) == full


def cycle_gcd(d: Digraph) -> int:
    """gcd of all directed cycle lengths.

    Computed from a BFS level assignment: every arc (u, v) closes the
    residue level[u] + 1 - level[v], and the gcd of those residues over
    all arcs equals the cycle gcd.  Returns 0 for a single vertex with
    no loop (no cycles at all).
    """
    if not is_strongly_connected(d):
        raise NotStronglyConnected("cycle gcd needs a strongly connected digraph")
    level = {1: 0}
    queue = [1]
    head = 0
    while head < len(queue):
        u = queue[head]
        head += 1
        for v, _ in d.successors(u):
            if v not in level:
                level[v] = level[u] + 1
                queue.append(v)
    g = 0
    for i, j, _ in d.arcs:
        g = gcd(g, abs(level[i] + 1 - level[j]))
    return g


@dataclass(frozen=True)
class WalkCountMatrix:
    """Entry (i, j) counts directed walks of the given length from i to j."""

    power: int
    entries: tuple[tuple[int, ...], ...]

    def entry(self, i: int, j: int) -> int:
        n = len(self.entries)
        if not (1 <= i <= n and 1 <= j <= n):
            raise IndexOutOfRange(f"entry ({i}, {j}) outside 1..{n}")
        return self.entries[i - 1][j - 1]


def mat_mul(a: list[list[int]], b: list[list[int]]) -> list[list[int]]:
    n = len(a)
    bt = list(zip(*b))
    return [[sum(x * y for x, y in zip(row, col)) for col in bt] for row in a]


def identity_matrix(n: int) -> list[list[int]]:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def walk_count(d: Digraph, k: int) -> WalkCountMatrix:
    """Exact k-th power of the adjacency matrix."""
    if k < 0:
        raise ValueError("walk length must be nonnegative")
    result = identity_matrix(d.n)
    base = d.adjacency_matrix()
    e = k
    while e:
        if e & 1:
            result = mat_mul(result, base)
        base = mat_mul(base, base) if e > 1 else base
        e >>= 1
    return WalkCountMatrix(power=k, entries=tuple(tuple(row) for row in result))


# -- serialization ----------------------------------------------------


def to_text(d: Digraph) -> str:
    lines = [str(d.n)]
    for i, j, m in d.arcs:
        lines.append(f"{i} {j}" if m == 1 else f"{i} {j} {m}")
    return "\n".join(lines) + "\n"


def from_text(text: str) -> Digraph:
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise ValueError("empty digraph text")
    try:
        n = int(lines[0])
    except ValueError:
        raise ValueError(f"first line must be the vertex count, got {lines[0]!r}")
    arcs = []
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) not in (2, 3):
            raise ValueError(f"arc line must be 'i j' or 'i j mult', got {ln!r}")
        arcs.append(tuple(int(p) for p in parts))
    return build_digraph(n, arcs)


def to_json_dict(d: Digraph) -> dict:
    return {"n": d.n, "arcs": [[i, j, m] for i, j, m in d.arcs]}


def from_json_dict(obj: dict) -> Digraph:
    if not isinstance(obj, dict) or "n" not in obj or "arcs" not in obj:
        raise ValueError("digraph JSON needs keys 'n' and 'arcs'")
    return build_digraph(obj["n"], [tuple(a) for a in obj["arcs"]])


def to_json(d: Digraph) -> str:
    return json.dumps(to_json_dict(d), sort_keys=True, separators=(",", ":"))


def from_json(text: str) -> Digraph:
    return from_json_dict(json.loads(text))
