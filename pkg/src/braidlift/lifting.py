"""Torsion-lifting criteria for elements and subgroups of G(de, e, r).

An element w (or a subgroup G) of the reflection group lifts to a
finite-order element (subgroup) of the quasi-abelianized braid group B/[P,P]
exactly when every power of w (every element of G) that stabilizes a
reflection hyperplane H already fixes the normal line H^perp pointwise.
This module implements that structural test as a brute-force oracle, plus
the fast combinatorial criterion special to the monomial groups, plus two
cheap obstruction shortcuts.

The oracle and the fast test are kept strictly independent: the oracle only
ever looks at stabilizers and normal scalars, the fast test only at cycle
data.  Their agreement on whole groups is part of the verification suite.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

from .arrangement import (
    Hyperplane,
    act,
    format_hyperplane,
    hyperplanes,
    scalar_on_normal,
)
from .monomial import MonomialElement, Subgroup, format_element, is_central


@dataclass(frozen=True)
class LiftWitness:
    """A violation certificate: some power (or element) sits in N_H minus C_H."""

    hyperplane: Hyperplane
    power: Optional[int] = None
    element: Optional[MonomialElement] = None

    def to_json(self) -> dict:
        data: dict = {"hyperplane": format_hyperplane(self.hyperplane)}
        if self.power is not None:
            data["power"] = self.power
        if self.element is not None:
            data["element"] = format_element(self.element)
        return data


@dataclass(frozen=True)
class LiftReport:
    """Verdict of a lifting test, with a verifiable witness when it fails."""

    subject: str
    lifts: bool
    witness: Optional[LiftWitness]
    method: str
    kind: str = "element"

    def to_json(self) -> dict:
        return {
            self.kind: self.subject,
            "lifts": self.lifts,
            "witness": self.witness.to_json() if self.witness else None,
            "method": self.method,
        }


def element_lifts_oracle(w: MonomialElement) -> LiftReport:
    """Structural test: every power of w in any N_H must lie in C_H.

    Scans hyperplanes in canonical order and powers 1..order(w); the first
    violation found is returned as the witness.
    """
    n = w.order()
    powers = [w]
    for _ in range(n - 1):
        powers.append(powers[-1] * w)
    for H in hyperplanes(w.descriptor):
        for ell, u in enumerate(powers, start=1):
            if act(u, H) == H and not scalar_on_normal(u, H).is_one:
                witness = LiftWitness(H, power=ell)
                return LiftReport(format_element(w), False, witness, "oracle")
    return LiftReport(format_element(w), True, None, "oracle")


def _root_order(exponent: int, de: int) -> int:
    return de // math.gcd(exponent, de)


def element_lifts_fast(w: MonomialElement) -> bool:
    """Combinatorial test, no hyperplane scan.

    Case analysis: rank 1 groups embed in Z, so only the identity lifts.
    Even order never lifts.  For d >= 2, and for d = 1 with sigma != id,
    w lifts iff it has odd order and every cycle of sigma (fixed points
    included) has exponent sum 0 mod de.  For d = 1 diagonal w, the order of
    zeta^{a_i - a_j} must be a multiple of the orders of zeta^{a_i} and
    zeta^{a_j} for every pair i != j.
    """
    desc = w.descriptor
    if desc.r == 1:
        return w.is_identity
    if w.order() % 2 == 0:
        return False
    if desc.d >= 2 or not w.is_diagonal:
        return all(c.product_exponent == 0 for c in w.cycles())
    de = desc.de
    a = w.exponents
    for i in range(desc.r):
        for j in range(i + 1, desc.r):
            m = _root_order(a[i] - a[j], de)
            if m % _root_order(a[i], de) or m % _root_order(a[j], de):
                return False
    return True


def subgroup_lifts(G: Subgroup) -> LiftReport:
    """Whole-subgroup test: N_H meet G inside C_H for every hyperplane H.

    The witness, when lifting fails, is the first violating (element,
    hyperplane) pair in (sorted element, canonical hyperplane) order.
    """
    subject = f"subgroup of {G.descriptor} with {len(G)} elements"
    for g in G:
        for H in hyperplanes(G.descriptor):
            if act(g, H) == H and not scalar_on_normal(g, H).is_one:
                witness = LiftWitness(H, element=g)
                return LiftReport(subject, False, witness, "oracle", kind="subgroup")
    return LiftReport(subject, True, None, "oracle", kind="subgroup")


def subgroup_lifts_local(G: Subgroup) -> bool:
    """Element-by-element test; agrees with subgroup_lifts on closed subgroups."""
    return all(element_lifts_oracle(g).lifts for g in G)


def obstruction_shortcuts(w: MonomialElement) -> Optional[str]:
    """A cheap reason why w cannot lift, or None.

    "even-order": a power of w is an order-2 element, which never lifts.
    "central-power": some power w^k (1 <= k < order) is a nontrivial central
    element, which fixes every hyperplane but acts as a nontrivial scalar on
    every normal line.  Either reason is sound: it forces every lifting of w
    to have infinite order.
    """
    n = w.order()
    if n % 2 == 0:
        return "even-order"
    u = w
    for _ in range(n - 1):
        if is_central(u):
            return "central-power"
        u = u * w
    return None
