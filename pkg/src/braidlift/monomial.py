"""Exact arithmetic in the monomial reflection groups G(de, e, r).

An element is a monomial matrix: a permutation sigma of the coordinates of
C^r together with exponents (a_0, ..., a_{r-1}) modulo de, acting by

    w(e_i) = zeta^{a_i} * e_{sigma(i)},      zeta = exp(2*pi*I/de).

Membership in G(de, e, r) is the constraint sum(a_i) = 0 mod e.  Roots of
unity are stored as integer exponents and every operation is exact; nothing
here ever touches floating point.

Composition follows the left-action convention: (u * v) applies v first,
then u, so (u * v)(x) = u(v(x)) for x in C^r.  All derived formulas in this
package are written against this convention.

Text formats: descriptors read "G(de,e,r)" (de first, as is traditional)
with "S(n)" as an alias for G(1,1,n) = the symmetric group; elements read
"perm=[2,1,3];exp=[1,2,0]" with 1-based permutation images.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from functools import cached_property
from itertools import product as _cartesian
from typing import Iterable, Iterator, Sequence

from . import permutations as perms
from .errors import GuardExceeded, MismatchError, ParseError

#: Default ceiling for whole-group enumeration and subgroup closure.
ENUMERATION_GUARD = 10**6

_DESCRIPTOR_RE = re.compile(r"^\s*G\(\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*\)\s*$")
_SYMMETRIC_RE = re.compile(r"^\s*S\(\s*(\d+)\s*\)\s*$")
_ELEMENT_RE = re.compile(r"^\s*perm=\[([0-9,\s]*)\]\s*;\s*exp=\[([0-9,\s+-]*)\]\s*$")


@dataclass(frozen=True, order=True)
class GroupDescriptor:
    """The triple (d, e, r) naming G(de, e, r).

    Note the constructor takes d, not de.  Use ``from_deer`` or ``parse`` to
    build a descriptor from the traditional G(de, e, r) spelling.
    """

    d: int
    e: int
    r: int

    def __post_init__(self) -> None:
        if min(self.d, self.e, self.r) < 1:
            raise ValueError(f"d, e, r must be positive, got ({self.d},{self.e},{self.r})")

    @property
    def de(self) -> int:
        return self.d * self.e

    def order(self) -> int:
        """|G(de,e,r)| = (de)^r * r! / e."""
        return self.de**self.r * math.factorial(self.r) // self.e

    @classmethod
    def from_deer(cls, de: int, e: int, r: int) -> "GroupDescriptor":
        if e < 1 or de % e:
            raise ValueError(f"e = {e} must divide de = {de}")
        return cls(de // e, e, r)

    @classmethod
    def parse(cls, text: str) -> "GroupDescriptor":
        if m := _SYMMETRIC_RE.match(text):
            return cls(1, 1, int(m.group(1)))
        if m := _DESCRIPTOR_RE.match(text):
            de, e, r = map(int, m.groups())
            if e < 1 or de % e:
                raise ParseError(f"{text!r}: e must divide de")
            try:
                return cls.from_deer(de, e, r)
            except ValueError as exc:
                raise ParseError(str(exc)) from exc
        raise ParseError(f"cannot parse group descriptor {text!r}")

    def __str__(self) -> str:
        return f"G({self.de},{self.e},{self.r})"


@dataclass(frozen=True)
class CycleData:
    """One cycle of the underlying permutation, with its exponent sum."""

    support: tuple[int, ...]
    product_exponent: int

    @property
    def length(self) -> int:
        return len(self.support)


@dataclass(frozen=True, order=True)
class MonomialElement:
    """A monomial matrix w(e_i) = zeta_de^{exponents[i]} e_{sigma[i]}."""

    descriptor: GroupDescriptor
    sigma: tuple[int, ...]
    exponents: tuple[int, ...]

    def __post_init__(self) -> None:
        desc = self.descriptor
        sigma = tuple(self.sigma)
        exps = tuple(a % desc.de for a in self.exponents)
        if len(sigma) != desc.r or not perms.is_permutation(sigma):
            raise ValueError(f"sigma {sigma} is not a permutation of 0..{desc.r - 1}")
        if len(exps) != desc.r:
            raise ValueError(f"expected {desc.r} exponents, got {len(exps)}")
        if sum(exps) % desc.e:
            raise ValueError(f"exponent sum {sum(exps)} is not 0 mod e = {desc.e}: not in {desc}")
        object.__setattr__(self, "sigma", sigma)
        object.__setattr__(self, "exponents", exps)

    @property
    def is_identity(self) -> bool:
        return self.sigma == perms.identity(self.descriptor.r) and not any(self.exponents)

    @property
    def is_diagonal(self) -> bool:
        return self.sigma == perms.identity(self.descriptor.r)

    def __mul__(self, other: "MonomialElement") -> "MonomialElement":
        if self.descriptor != other.descriptor:
            raise MismatchError(f"cannot compose elements of {self.descriptor} and {other.descriptor}")
        de = self.descriptor.de
        sigma = perms.compose(self.sigma, other.sigma)
        exps = tuple(
            (other.exponents[i] + self.exponents[other.sigma[i]]) % de
            for i in range(self.descriptor.r)
        )
        return MonomialElement(self.descriptor, sigma, exps)

    def inverse(self) -> "MonomialElement":
        de = self.descriptor.de
        sigma = perms.invert(self.sigma)
        exps = [0] * self.descriptor.r
        for i in range(self.descriptor.r):
            exps[self.sigma[i]] = (-self.exponents[i]) % de
        return MonomialElement(self.descriptor, sigma, tuple(exps))

    def __pow__(self, n: int) -> "MonomialElement":
        base = self
        if n < 0:
            base, n = self.inverse(), -n
        result = identity(self.descriptor)
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def cycles(self) -> tuple[CycleData, ...]:
        """Cycles of sigma (fixed points included) with exponent sums mod de."""
        de = self.descriptor.de
        return tuple(
            CycleData(support, sum(self.exponents[i] for i in support) % de)
            for support in perms.cycles(self.sigma)
        )

    def order(self) -> int:
        """Least n >= 1 with w^n = id.

        On the span of a cycle of length L with exponent sum p, w^L acts as
        the scalar zeta^p, so that block has order L * ord(zeta^p).
        """
        de = self.descriptor.de
        return math.lcm(
            *(c.length * (de // math.gcd(c.product_exponent, de)) for c in self.cycles())
        )

    def __str__(self) -> str:
        return format_element(self)

    @classmethod
    def parse(cls, descriptor: GroupDescriptor, text: str) -> "MonomialElement":
        return parse_element(descriptor, text)


def identity(descriptor: GroupDescriptor) -> MonomialElement:
    return MonomialElement(descriptor, perms.identity(descriptor.r), (0,) * descriptor.r)


def diagonal(descriptor: GroupDescriptor, exponents: Sequence[int]) -> MonomialElement:
    """The diagonal matrix diag(zeta^a_0, ..., zeta^a_{r-1})."""
    return MonomialElement(descriptor, perms.identity(descriptor.r), tuple(exponents))


def from_permutation(descriptor: GroupDescriptor, sigma: Sequence[int]) -> MonomialElement:
    """The permutation matrix of sigma (all exponents zero)."""
    return MonomialElement(descriptor, tuple(sigma), (0,) * descriptor.r)


def pad(w: MonomialElement, r: int) -> MonomialElement:
    """Embed w into G(de, e, r) for larger rank r, fixing the new coordinates."""
    old = w.descriptor
    if r < old.r:
        raise ValueError(f"cannot pad from rank {old.r} down to {r}")
    desc = GroupDescriptor(old.d, old.e, r)
    sigma = w.sigma + tuple(range(old.r, r))
    exps = w.exponents + (0,) * (r - old.r)
    return MonomialElement(desc, sigma, exps)


def standard_generators(descriptor: GroupDescriptor) -> tuple[MonomialElement, ...]:
    """A generating set: adjacent transpositions, a zeta-twisted transposition
    when e >= 2, and diag(zeta^e, 1, ..., 1) when d >= 2.

    The twisted transposition sends e_1 -> zeta^{-1} e_2 and e_2 -> zeta e_1;
    its product with the plain transposition is diag(zeta, zeta^{-1}), which
    together with the permutations and the d >= 2 generator spans the full
    diagonal part.  Correctness is not assumed: tests check |closure| against
    the order formula for every group on the verification grid.
    """
    d, e, r, de = descriptor.d, descriptor.e, descriptor.r, descriptor.de
    gens: list[MonomialElement] = []
    zero = (0,) * r
    for i in range(r - 1):
        gens.append(MonomialElement(descriptor, perms.from_cycle(r, (i, i + 1)), zero))
    if r >= 2 and e >= 2:
        exps = [0] * r
        exps[0], exps[1] = de - 1, 1
        gens.append(MonomialElement(descriptor, perms.from_cycle(r, (0, 1)), tuple(exps)))
    if d >= 2:
        exps = [0] * r
        exps[0] = e
        gens.append(diagonal(descriptor, exps))
    if not gens:
        gens.append(identity(descriptor))
    return tuple(gens)


def enumerate_elements(
    descriptor: GroupDescriptor, guard: int = ENUMERATION_GUARD
) -> Iterator[MonomialElement]:
    """Yield every element of G(de, e, r) exactly once, in a fixed order.

    Iterates permutations lexicographically and, for each, all exponent
    vectors with sum = 0 mod e (the first r-1 entries are free, the last is
    determined up to the d multiples of e).
    """
    if descriptor.order() > guard:
        raise GuardExceeded(
            f"{descriptor} has {descriptor.order()} elements, above the guard {guard}"
        )
    d, e, r, de = descriptor.d, descriptor.e, descriptor.r, descriptor.de
    for sigma in perms.all_permutations(r):
        for head in _cartesian(range(de), repeat=r - 1):
            base = (-sum(head)) % e
            for k in range(d):
                yield MonomialElement(descriptor, sigma, head + (base + k * e,))


@dataclass(frozen=True)
class Subgroup:
    """A finite subgroup of G(de, e, r), verified closed on construction."""

    descriptor: GroupDescriptor
    elements: frozenset[MonomialElement]

    def __post_init__(self) -> None:
        els = frozenset(self.elements)
        object.__setattr__(self, "elements", els)
        if not els:
            raise ValueError("a subgroup must contain at least the identity")
        for w in els:
            if w.descriptor != self.descriptor:
                raise MismatchError(f"element {w} does not live in {self.descriptor}")
        if identity(self.descriptor) not in els:
            raise ValueError("identity missing: not a subgroup")
        for w in els:
            if w.inverse() not in els:
                raise ValueError(f"inverse of {w} missing: not a subgroup")
        for u in els:
            for v in els:
                if u * v not in els:
                    raise ValueError(f"product {u} * {v} escapes the set: not a subgroup")

    @cached_property
    def sorted_elements(self) -> tuple[MonomialElement, ...]:
        return tuple(sorted(self.elements))

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator[MonomialElement]:
        return iter(self.sorted_elements)

    def __contains__(self, w: MonomialElement) -> bool:
        return w in self.elements


def _mulclose(
    descriptor: GroupDescriptor,
    generators: Iterable[MonomialElement],
    max_size: int,
) -> frozenset[MonomialElement]:
    gens = list(generators)
    for g in gens:
        if g.descriptor != descriptor:
            raise MismatchError(f"generator {g} does not live in {descriptor}")
    els: set[MonomialElement] = {identity(descriptor), *gens}
    frontier = list(els)
    while frontier:
        new = []
        for a in gens:
            for b in frontier:
                c = a * b
                if c not in els:
                    els.add(c)
                    new.append(c)
                    if len(els) > max_size:
                        raise GuardExceeded(f"closure exceeds the size limit {max_size}")
        frontier = new
    return frozenset(els)


def closure(
    descriptor: GroupDescriptor,
    generators: Iterable[MonomialElement],
    max_size: int = ENUMERATION_GUARD,
) -> Subgroup:
    """Smallest subgroup containing the generators, by breadth-first products."""
    gens = list(generators)
    if not gens:
        raise ValueError("closure needs at least one generator")
    return Subgroup(descriptor, _mulclose(descriptor, gens, max_size))


def center(descriptor: GroupDescriptor, guard: int = ENUMERATION_GUARD) -> Subgroup:
    """The centre, as the elements commuting with the standard generators."""
    gens = standard_generators(descriptor)
    central = frozenset(
        w for w in enumerate_elements(descriptor, guard) if all(w * g == g * w for g in gens)
    )
    return Subgroup(descriptor, central)


def is_central(w: MonomialElement) -> bool:
    """Centrality without enumeration: w commutes with the standard generators."""
    return all(w * g == g * w for g in standard_generators(w.descriptor))


def format_element(w: MonomialElement) -> str:
    perm = ",".join(str(i + 1) for i in w.sigma)
    exp = ",".join(str(a) for a in w.exponents)
    return f"perm=[{perm}];exp=[{exp}]"


def parse_element(descriptor: GroupDescriptor, text: str) -> MonomialElement:
    m = _ELEMENT_RE.match(text)
    if not m:
        raise ParseError(f"cannot parse element {text!r}")
    try:
        images = [int(x) for x in m.group(1).split(",")] if m.group(1).strip() else []
        exps = [int(x) for x in m.group(2).split(",")] if m.group(2).strip() else []
    except ValueError as exc:
        raise ParseError(f"bad integer in element {text!r}") from exc
    sigma = tuple(i - 1 for i in images)
    try:
        return MonomialElement(descriptor, sigma, tuple(exps))
    except ValueError as exc:
        raise ParseError(f"{text!r} is not an element of {descriptor}: {exc}") from exc
