"""Plain permutation helpers on tuples of 0-based images.

A permutation of {0, ..., n-1} is a tuple p with p[i] the image of i.
Composition follows the left-action convention used everywhere in this
package: compose(p, q) applies q first, then p.
"""

from __future__ import annotations

import math
from itertools import permutations as _all_perms
from typing import Iterable, Iterator, Sequence

from .errors import GuardExceeded


def identity(n: int) -> tuple[int, ...]:
    return tuple(range(n))


def is_permutation(p: Sequence[int]) -> bool:
    return sorted(p) == list(range(len(p)))


def compose(p: Sequence[int], q: Sequence[int]) -> tuple[int, ...]:
    """p after q."""
    return tuple(p[q[i]] for i in range(len(q)))


def invert(p: Sequence[int]) -> tuple[int, ...]:
    out = [0] * len(p)
    for i, j in enumerate(p):
        out[j] = i
    return tuple(out)


def cycles(p: Sequence[int]) -> list[tuple[int, ...]]:
    """Disjoint cycles including fixed points.

    Each cycle starts at its least element and cycles are listed by
    increasing starting element, so the output is canonical.
    """
    seen = [False] * len(p)
    out = []
    for start in range(len(p)):
        if seen[start]:
            continue
        cyc = []
        cur = start
        while not seen[cur]:
            seen[cur] = True
            cyc.append(cur)
            cur = p[cur]
        out.append(tuple(cyc))
    return out


def cycle_type(p: Sequence[int]) -> tuple[int, ...]:
    """Cycle lengths in decreasing order, fixed points included."""
    return tuple(sorted((len(c) for c in cycles(p)), reverse=True))


def order(p: Sequence[int]) -> int:
    return math.lcm(*(len(c) for c in cycles(p))) if len(p) else 1


def from_cycle(n: int, cycle: Sequence[int]) -> tuple[int, ...]:
    """The permutation of {0..n-1} given by one cycle, rest fixed."""
    out = list(range(n))
    for k, i in enumerate(cycle):
        out[i] = cycle[(k + 1) % len(cycle)]
    return tuple(out)


def all_permutations(n: int) -> Iterator[tuple[int, ...]]:
    return iter(_all_perms(range(n)))


def mulclose(gens: Iterable[tuple[int, ...]], max_size: int | None = None) -> frozenset[tuple[int, ...]]:
    """Close a set of permutations under products (hence under the group ops)."""
    gens = list(gens)
    els: set[tuple[int, ...]] = set(gens)
    if gens:
        els.add(identity(len(gens[0])))
    frontier = list(els)
    while frontier:
        new = []
        for a in gens:
            for b in frontier:
                c = compose(a, b)
                if c not in els:
                    els.add(c)
                    new.append(c)
                    if max_size is not None and len(els) > max_size:
                        raise GuardExceeded(f"closure exceeds {max_size} permutations")
        frontier = new
    return frozenset(els)
