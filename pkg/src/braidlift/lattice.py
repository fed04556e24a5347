"""The permutation lattice on the arrangement and its split extensions.

Z[A] is the free abelian group on the hyperplanes of G(de, e, r), with the
group permuting coordinates; vectors are integer tuples in the canonical
hyperplane order.  For a subgroup G this module models the split extension
Z[A] x| G, detects torsion there, and solves 1-cocycle equations
c(g) = x - g.x over the integers.  Solvability of the latter for every
cocycle (the vanishing of the first cohomology of a permutation module) is
what makes complements unique up to lattice conjugation, and the solver
treats a failure as a falsified theorem, not as a data error.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, Optional

from . import intlinalg
from .arrangement import act, hyperplane_index, hyperplanes
from .errors import InvariantViolation, MismatchError, NoIntegralSolution
from .monomial import MonomialElement, Subgroup, _mulclose, identity

LatticeVector = tuple[int, ...]
Cocycle = Dict[MonomialElement, LatticeVector]
SplittingMap = Dict[MonomialElement, "SemidirectElement"]


def zero_vector(descriptor) -> LatticeVector:
    return (0,) * len(hyperplanes(descriptor))


def vector_to_json(v: LatticeVector) -> list[int]:
    """JSON form: a plain array in the canonical hyperplane order."""
    return list(v)


def basis_vector(descriptor, H) -> LatticeVector:
    k = hyperplane_index(descriptor)[H]
    v = [0] * len(hyperplanes(descriptor))
    v[k] = 1
    return tuple(v)


@lru_cache(maxsize=None)
def hyperplane_permutation(g: MonomialElement) -> tuple[int, ...]:
    """The permutation k -> index(g(H_k)) induced on canonical indices."""
    index = hyperplane_index(g.descriptor)
    return tuple(index[act(g, H)] for H in hyperplanes(g.descriptor))


def permute_vector(g: MonomialElement, v: LatticeVector) -> LatticeVector:
    """g.v: the coefficient of v at H moves to g(H)."""
    pi = hyperplane_permutation(g)
    out = [0] * len(v)
    for k, c in enumerate(v):
        out[pi[k]] = c
    return tuple(out)


def _add(u: LatticeVector, v: LatticeVector) -> LatticeVector:
    return tuple(a + b for a, b in zip(u, v, strict=True))


def _sub(u: LatticeVector, v: LatticeVector) -> LatticeVector:
    return tuple(a - b for a, b in zip(u, v, strict=True))


@dataclass(frozen=True)
class SemidirectElement:
    """An element (v, g) of Z[A] x| G, composing as (v, g)(w, h) = (v + g.w, gh)."""

    vector: LatticeVector
    element: MonomialElement


def semidirect_identity(descriptor) -> SemidirectElement:
    return SemidirectElement(zero_vector(descriptor), identity(descriptor))


def semidirect_compose(x: SemidirectElement, y: SemidirectElement) -> SemidirectElement:
    if x.element.descriptor != y.element.descriptor:
        raise MismatchError("semidirect elements over different groups")
    return SemidirectElement(
        _add(x.vector, permute_vector(x.element, y.vector)), x.element * y.element
    )


def semidirect_inverse(x: SemidirectElement) -> SemidirectElement:
    ginv = x.element.inverse()
    return SemidirectElement(
        tuple(-c for c in permute_vector(ginv, x.vector)), ginv
    )


def semidirect_order(x: SemidirectElement) -> Optional[int]:
    """Order of (v, g), or None when infinite.

    (v, g)^n = (v + g.v + ... + g^{n-1}.v, g^n) with n = order(g); the
    element has finite order (then exactly n) iff that orbit sum vanishes,
    because the lattice itself is torsion free.
    """
    n = x.element.order()
    total = x.vector
    current = x.vector
    for _ in range(n - 1):
        current = permute_vector(x.element, current)
        total = _add(total, current)
    return n if not any(total) else None


def coboundary(x: LatticeVector, G: Subgroup) -> Cocycle:
    """The principal cocycle g -> x - g.x on all of G."""
    return {g: _sub(x, permute_vector(g, x)) for g in G}


def is_cocycle(c: Cocycle, G: Subgroup) -> bool:
    """Exhaustive check of c(gh) = c(g) + g.c(h) over G x G."""
    if set(c) != set(G.elements):
        return False
    for g in G:
        cg = c[g]
        for h in G:
            if c[g * h] != _add(cg, permute_vector(g, c[h])):
                return False
    return True


def small_generating_set(G: Subgroup) -> tuple[MonomialElement, ...]:
    """A short generating list, greedily extended in element order."""
    gens: list[MonomialElement] = []
    have: frozenset[MonomialElement] = frozenset({identity(G.descriptor)})
    for g in G:
        if g in have:
            continue
        gens.append(g)
        have = _mulclose(G.descriptor, gens, len(G))
        if len(have) == len(G):
            break
    return tuple(gens)


def _orbits_of_action(G: Subgroup) -> tuple[tuple[int, ...], ...]:
    from .arrangement import orbits

    return orbits(G)


def trivialize_cocycle(c: Cocycle, G: Subgroup) -> LatticeVector:
    """An integer vector x with c(g) = x - g.x for every g in G.

    The cocycle equations for a generating set determine the rest (the
    cocycle identity propagates along products), and the system splits over
    the orbits of G on the hyperplanes; each orbit block is solved exactly
    by Hermite-style column elimination.  The result is verified against all
    of G, so a wrong or non-cocycle input cannot slip through.

    Raises NoIntegralSolution if no integral x exists; on a genuine cocycle
    that would falsify the vanishing of H^1 and must fail the build.
    """
    desc = G.descriptor
    n_planes = len(hyperplanes(desc))
    missing = [g for g in G if g not in c]
    if missing:
        raise ValueError(f"cocycle is not defined on all of the subgroup: missing {missing[0]}")
    gens = small_generating_set(G)
    inverse_maps = [hyperplane_permutation(s.inverse()) for s in gens]
    x = [0] * n_planes
    for orbit in _orbits_of_action(G):
        local = {h: k for k, h in enumerate(orbit)}
        rows: list[list[int]] = []
        rhs: list[int] = []
        for s, pi_inv in zip(gens, inverse_maps):
            cs = c[s]
            for h in orbit:
                row = [0] * len(orbit)
                row[local[h]] += 1
                row[local[pi_inv[h]]] -= 1
                rows.append(row)
                rhs.append(cs[h])
        sol = intlinalg.solve(rows, rhs, ncols=len(orbit))
        if sol is None:
            raise NoIntegralSolution(
                f"no integral solution on an orbit of size {len(orbit)} for {desc}"
            )
        for h, k in local.items():
            x[h] = sol[k]
    result = tuple(x)
    for g in G:
        if _sub(result, permute_vector(g, result)) != c[g]:
            raise NoIntegralSolution(f"solver output fails the coboundary equation at {g}")
    return result


def fixed_lattice_rank(G: Subgroup) -> int:
    """Rank of the sublattice {x : g.x = x for all g in G}.

    Computed two ways and cross-checked: as the number of orbits of G on
    the hyperplanes (the fixed lattice is free on the orbit sums), and as
    the corank of the stacked difference equations x_H - x_{gH} = 0 over a
    generating set.
    """
    n_planes = len(hyperplanes(G.descriptor))
    orbit_count = len(_orbits_of_action(G))
    rows = []
    for s in small_generating_set(G):
        pi = hyperplane_permutation(s)
        for k in range(n_planes):
            if pi[k] != k:
                rows.append({k: 1, pi[k]: -1})
    by_elimination = n_planes - intlinalg.rank(rows)
    if by_elimination != orbit_count:
        raise InvariantViolation(
            f"fixed-lattice rank {by_elimination} != orbit count {orbit_count} for {G.descriptor}"
        )
    return orbit_count


def canonical_splitting(G: Subgroup) -> SplittingMap:
    """The tautological section g -> (0, g)."""
    zero = zero_vector(G.descriptor)
    return {g: SemidirectElement(zero, g) for g in G}


def conjugate_splitting(s: SplittingMap, x: LatticeVector) -> SplittingMap:
    """Conjugate a section by the lattice element x: g -> (x + s(g) - g.x, g)."""
    return {
        g: SemidirectElement(_sub(_add(x, sg.vector), permute_vector(g, x)), g)
        for g, sg in s.items()
    }


def is_splitting(s: SplittingMap, G: Subgroup) -> bool:
    """Whether s is a homomorphic section of the projection to G."""
    if set(s) != set(G.elements):
        return False
    if any(s[g].element != g for g in G):
        return False
    for g in G:
        for h in G:
            if semidirect_compose(s[g], s[h]) != s[g * h]:
                return False
    return True


def conjugate_complement(s1: SplittingMap, s2: SplittingMap, G: Subgroup) -> LatticeVector:
    """A lattice vector conjugating the section s1 onto s2.

    The difference g -> s2(g) - s1(g) of two sections is a cocycle; any
    trivializing vector conjugates one complement onto the other, and one
    always exists.  Inputs are checked to be homomorphic sections first.
    """
    if not is_splitting(s1, G) or not is_splitting(s2, G):
        raise ValueError("inputs are not homomorphic sections")
    difference = {g: _sub(s2[g].vector, s1[g].vector) for g in G}
    x = trivialize_cocycle(difference, G)
    if conjugate_splitting(s1, x) != s2:
        raise InvariantViolation("trivializing vector fails to conjugate the sections")
    return x
