"""The reflection arrangement of G(de, e, r) and the group action on it.

The arrangement has two kinds of hyperplanes:

* ``Swap(i, j, t)``: the plane z_i = zeta^t z_j (i < j, t mod de), present
  for every t; there are de * r(r-1)/2 of them.
* ``Coord(i)``: the plane z_i = 0, present exactly when d >= 2 (only then
  does the group contain a reflection fixing it).

The canonical ordering lists all Swap planes lexicographically by (i, j, t)
and then the Coord planes by i.  Lattice vectors, JSON reports and witnesses
all use this ordering, so results are reproducible bit for bit.

For w stabilizing H the scalar by which w acts on the normal line H^perp
lives in the group of 2de-th roots of unity: the line for ``Swap(i, j, t)``
is spanned by e_i - zeta^{-t} e_j, and when w exchanges i and j the scalar
picks up a sign, which is the exponent-de element of U_{2de}.

Hyperplane text format (1-based): "H[i,j;t]" for Swap, "H[i]" for Coord.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Union

from .errors import MismatchError, ParseError
from .monomial import GroupDescriptor, MonomialElement, Subgroup

_SWAP_RE = re.compile(r"^\s*H\[\s*(\d+)\s*,\s*(\d+)\s*;\s*(-?\d+)\s*\]\s*$")
_COORD_RE = re.compile(r"^\s*H\[\s*(\d+)\s*\]\s*$")


@dataclass(frozen=True, order=True)
class Swap:
    """The hyperplane z_i = zeta_de^t z_j, normalized so i < j."""

    i: int
    j: int
    t: int


@dataclass(frozen=True, order=True)
class Coord:
    """The coordinate hyperplane z_i = 0."""

    i: int


Hyperplane = Union[Swap, Coord]


def _swap(i: int, j: int, t: int, de: int) -> Swap:
    if i == j:
        raise ValueError("a swap hyperplane needs two distinct indices")
    if i < j:
        return Swap(i, j, t % de)
    return Swap(j, i, (-t) % de)


@lru_cache(maxsize=None)
def hyperplanes(descriptor: GroupDescriptor) -> tuple[Hyperplane, ...]:
    """All reflection hyperplanes of G(de, e, r), in canonical order."""
    r, de = descriptor.r, descriptor.de
    planes: list[Hyperplane] = [
        Swap(i, j, t) for i in range(r) for j in range(i + 1, r) for t in range(de)
    ]
    if descriptor.d >= 2:
        planes.extend(Coord(i) for i in range(r))
    return tuple(planes)


@lru_cache(maxsize=None)
def hyperplane_index(descriptor: GroupDescriptor) -> dict[Hyperplane, int]:
    return {H: k for k, H in enumerate(hyperplanes(descriptor))}


def act(w: MonomialElement, H: Hyperplane) -> Hyperplane:
    """The image hyperplane w(H), normalized.

    This is a left action: act(u * v, H) == act(u, act(v, H)).
    """
    desc = w.descriptor
    if isinstance(H, Coord):
        if desc.d < 2:
            raise MismatchError(f"{desc} has no coordinate hyperplanes (d = 1)")
        return Coord(w.sigma[H.i])
    return _swap(
        w.sigma[H.i],
        w.sigma[H.j],
        H.t + w.exponents[H.i] - w.exponents[H.j],
        desc.de,
    )


def stabilizes(w: MonomialElement, H: Hyperplane) -> bool:
    """Whether w lies in the stabilizer N_H = {w : w(H) = H}."""
    return act(w, H) == H


@dataclass(frozen=True)
class ScalarRoot:
    """A root of unity zeta_{2de}^exponent.

    Elements of U_de embed with even exponents; the sign -1 sits at
    exponent de.
    """

    exponent: int
    modulus: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "exponent", self.exponent % self.modulus)

    @property
    def is_one(self) -> bool:
        return self.exponent == 0

    def __pow__(self, n: int) -> "ScalarRoot":
        return ScalarRoot(self.exponent * n, self.modulus)

    def order(self) -> int:
        return self.modulus // math.gcd(self.exponent, self.modulus)


def scalar_on_normal(w: MonomialElement, H: Hyperplane) -> ScalarRoot:
    """The eigenvalue of w on the line H^perp, for w stabilizing H.

    Coord(i): the diagonal entry zeta^{a_i}.  Swap(i, j, t) with i, j fixed:
    stabilization forces a_i = a_j and the scalar is zeta^{a_i}.  Swap with
    i, j exchanged: on e_i - zeta^{-t} e_j the matrix acts by -zeta^{t + a_i}.
    """
    if not stabilizes(w, H):
        raise ValueError(f"{w} does not stabilize {format_hyperplane(H)}")
    de = w.descriptor.de
    mod = 2 * de
    if isinstance(H, Coord):
        return ScalarRoot(2 * w.exponents[H.i], mod)
    if w.sigma[H.i] == H.i:
        return ScalarRoot(2 * w.exponents[H.i], mod)
    return ScalarRoot(de + 2 * (H.t + w.exponents[H.i]), mod)


def in_parabolic(w: MonomialElement, H: Hyperplane) -> bool:
    """Whether w lies in C_H, the pointwise fixer of the line H^perp."""
    return stabilizes(w, H) and scalar_on_normal(w, H).is_one


def orbits(G: Subgroup) -> tuple[tuple[int, ...], ...]:
    """Orbits of G on the hyperplanes, as sorted tuples of canonical indices."""
    desc = G.descriptor
    index = hyperplane_index(desc)
    seen: set[int] = set()
    out: list[tuple[int, ...]] = []
    for k, H in enumerate(hyperplanes(desc)):
        if k in seen:
            continue
        orbit = {index[act(g, H)] for g in G}
        seen |= orbit
        out.append(tuple(sorted(orbit)))
    return tuple(out)


def acts_faithfully_on_arrangement(G: Subgroup) -> bool:
    """Whether only the identity of G fixes every hyperplane.

    Equivalent to G meeting the centre of the ambient group trivially, since
    the kernel of the action of the full group on its arrangement is its
    centre.
    """
    planes = hyperplanes(G.descriptor)
    if not planes:
        raise ValueError(f"{G.descriptor} has an empty arrangement")
    for g in G:
        if g.is_identity:
            continue
        if all(act(g, H) == H for H in planes):
            return False
    return True


def format_hyperplane(H: Hyperplane) -> str:
    if isinstance(H, Coord):
        return f"H[{H.i + 1}]"
    return f"H[{H.i + 1},{H.j + 1};{H.t}]"


def parse_hyperplane(descriptor: GroupDescriptor, text: str) -> Hyperplane:
    index = hyperplane_index(descriptor)
    if m := _SWAP_RE.match(text):
        i, j, t = int(m.group(1)) - 1, int(m.group(2)) - 1, int(m.group(3))
        if i < 0 or j < 0 or max(i, j) >= descriptor.r:
            raise ParseError(f"{text!r}: index out of range for {descriptor}")
        H = _swap(i, j, t, descriptor.de)
    elif m := _COORD_RE.match(text):
        i = int(m.group(1)) - 1
        H = Coord(i)
    else:
        raise ParseError(f"cannot parse hyperplane {text!r}")
    if H not in index:
        raise ParseError(f"{text!r} is not a hyperplane of {descriptor}")
    return H
