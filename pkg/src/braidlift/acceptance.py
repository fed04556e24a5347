"""The verification suite: every headline classification, cross-checked.

Each criterion pits an independent brute-force route against the structural
or closed-form route over a fixed grid of small groups, exactly (no
tolerances: everything here is integer arithmetic).  The CLI ``verify``
subcommand and tests/test_acceptance.py both run these.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from functools import lru_cache
from random import Random

from . import permutations as perms
from .arrangement import hyperplanes, orbits
from .classify import (
    FrobeniusSpec,
    PermutationGroup,
    as_symmetric_subgroup,
    cayley_embedding,
    frobenius_coset_action,
    has_free_cycle_type,
    has_free_monomial_type,
    free_action_general,
    free_action_symmetric,
    is_bieberbach_series,
    permutation_group,
)
from .lattice import coboundary, fixed_lattice_rank, trivialize_cocycle
from .lifting import element_lifts_fast, element_lifts_oracle, subgroup_lifts
from .monomial import (
    GroupDescriptor,
    MonomialElement,
    Subgroup,
    closure,
    diagonal,
    enumerate_elements,
    from_permutation,
    pad,
)

_D = GroupDescriptor.from_deer

#: The verification grid: small enough to enumerate, rich enough to hit
#: every branch of the case analyses.
GRID: tuple[GroupDescriptor, ...] = (
    _D(1, 1, 2), _D(1, 1, 3), _D(1, 1, 4), _D(1, 1, 5), _D(1, 1, 6),
    _D(2, 1, 2), _D(2, 1, 3), _D(2, 2, 3), _D(2, 2, 4),
    _D(3, 3, 2), _D(3, 3, 3), _D(4, 2, 2), _D(4, 4, 2),
    _D(6, 3, 2), _D(6, 6, 2), _D(3, 1, 2), _D(5, 5, 2),
)


@dataclass(frozen=True)
class CriterionResult:
    number: int
    title: str
    passed: bool
    detail: str

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"[{status}] criterion {self.number:2d}: {self.title} ({self.detail})"


@lru_cache(maxsize=None)
def _elements(desc: GroupDescriptor) -> tuple[MonomialElement, ...]:
    return tuple(enumerate_elements(desc))


@lru_cache(maxsize=None)
def _oracle_lifts(desc: GroupDescriptor) -> dict[MonomialElement, bool]:
    return {w: element_lifts_oracle(w).lifts for w in _elements(desc)}


def criterion_1() -> CriterionResult:
    """Oracle and fast criterion agree on every element of every grid group."""
    start = time.perf_counter()
    checked = 0
    for desc in GRID:
        for w, lifts in _oracle_lifts(desc).items():
            if lifts != element_lifts_fast(w):
                return CriterionResult(1, "oracle/fast equivalence", False,
                                       f"mismatch at {w} in {desc}")
            checked += 1
    elapsed = time.perf_counter() - start
    ok = elapsed < 120.0
    return CriterionResult(1, "oracle/fast equivalence", ok,
                           f"{checked} elements across {len(GRID)} groups in {elapsed:.1f}s")


def criterion_2() -> CriterionResult:
    """diag(j, j^2) in G(3,3,2) lifts with order 3; diag(i, -i) in G(4,4,2) does not."""
    failures = []
    w = diagonal(_D(3, 3, 2), (1, 2))
    if w.order() != 3:
        failures.append(f"order(diag(j,j^2)) = {w.order()} != 3")
    if not (element_lifts_oracle(w).lifts and element_lifts_fast(w)):
        failures.append("diag(j,j^2) in G(3,3,2) should lift")
    v = diagonal(_D(4, 4, 2), (1, 3))
    if element_lifts_oracle(v).lifts or element_lifts_fast(v):
        failures.append("diag(i,-i) in G(4,4,2) should not lift")
    return CriterionResult(2, "headline diagonal examples", not failures,
                           "; ".join(failures) or "both examples as classified")


def criterion_3() -> CriterionResult:
    """No even-order element of any grid group passes the oracle."""
    checked = 0
    for desc in GRID:
        for w, lifts in _oracle_lifts(desc).items():
            if w.order() % 2 == 0:
                checked += 1
                if lifts:
                    return CriterionResult(3, "even order never lifts", False,
                                           f"even-order {w} in {desc} lifted")
    return CriterionResult(3, "even order never lifts", True,
                           f"{checked} even-order elements all refused")


def criterion_4() -> CriterionResult:
    """Closed-form Bieberbach predicate equals the brute-force scan on the grid."""
    expected = {
        _D(4, 2, 2): True, _D(4, 4, 2): True,
        _D(3, 3, 2): False, _D(1, 1, 4): False, _D(2, 1, 3): False,
    }
    for desc in GRID:
        formula = is_bieberbach_series(desc)
        brute = not any(
            lifts for w, lifts in _oracle_lifts(desc).items() if not w.is_identity
        )
        if formula != brute:
            return CriterionResult(4, "Bieberbach classification", False,
                                   f"{desc}: formula {formula} vs brute force {brute}")
        if desc in expected and formula != expected[desc]:
            return CriterionResult(4, "Bieberbach classification", False,
                                   f"{desc}: got {formula}, expected {expected[desc]}")
    return CriterionResult(4, "Bieberbach classification", True,
                           f"formula = brute force on all {len(GRID)} groups")


def criterion_5() -> CriterionResult:
    """In the symmetric groups, lifting is exactly odd order (n <= 6)."""
    checked = 0
    for n in range(2, 7):
        desc = _D(1, 1, n)
        for w, lifts in _oracle_lifts(desc).items():
            if lifts != (w.order() % 2 == 1):
                return CriterionResult(5, "symmetric groups: lift iff odd order", False,
                                       f"{w} in S_{n}: lifts={lifts}, order={w.order()}")
            checked += 1
    return CriterionResult(5, "symmetric groups: lift iff odd order", True,
                           f"{checked} permutations checked")


@lru_cache(maxsize=None)
def _s5_sample_subgroups() -> tuple[PermutationGroup, ...]:
    """Cyclic subgroups of S_5 plus 50 subgroups spanned by two random 3-cycles."""
    groups: dict[frozenset, PermutationGroup] = {}
    for g in perms.all_permutations(5):
        P = permutation_group(5, [g])
        groups.setdefault(P.elements, P)
    rng = Random(0x5EED)
    three_cycles = [g for g in perms.all_permutations(5) if perms.order(g) == 3]
    for _ in range(50):
        a, b = rng.choice(three_cycles), rng.choice(three_cycles)
        P = permutation_group(5, [a, b])
        groups.setdefault(P.elements, P)
    return tuple(groups.values())


def criterion_6() -> CriterionResult:
    """Free action on 2-subsets of {1..5} is equivalent to free cycle type."""
    for P in _s5_sample_subgroups():
        free = free_action_symmetric(P)
        typed = all(has_free_cycle_type(g) for g in P)
        if free != typed:
            return CriterionResult(6, "free action equivalence in S_5", False,
                                   f"order-{len(P)} subgroup: free={free}, type={typed}")
    return CriterionResult(6, "free action equivalence in S_5", True,
                           f"{len(_s5_sample_subgroups())} distinct subgroups")


@lru_cache(maxsize=None)
def _cyclic_subgroups(desc: GroupDescriptor) -> tuple[Subgroup, ...]:
    groups: dict[frozenset, Subgroup] = {}
    for w in _elements(desc):
        G = closure(desc, [w])
        groups.setdefault(G.elements, G)
    return tuple(groups.values())


def criterion_7() -> CriterionResult:
    """Free action on the arrangement is equivalent to free monomial type (d >= 2)."""
    count = 0
    for desc in (_D(2, 1, 3), _D(4, 2, 2)):
        for G in _cyclic_subgroups(desc):
            free = free_action_general(G)
            typed = all(has_free_monomial_type(g) for g in G)
            if free != typed:
                return CriterionResult(7, "free action equivalence, monomial", False,
                                       f"cyclic subgroup of {desc}: free={free}, type={typed}")
            count += 1
    return CriterionResult(7, "free action equivalence, monomial", True,
                           f"{count} cyclic subgroups over two groups")


@lru_cache(maxsize=None)
def _frobenius_group(p: int, q: int) -> PermutationGroup:
    return frobenius_coset_action(FrobeniusSpec.find(p, q))


def criterion_8() -> CriterionResult:
    """Frobenius coset actions: cycle structure, free type, and lifting."""
    for p, q in ((7, 3), (13, 3)):
        P = _frobenius_group(p, q)
        ident = perms.identity(p)
        for g in P:
            if g == ident:
                continue
            k = perms.order(g)
            fixed = sum(1 for x in range(p) if g[x] == x)
            lengths = sorted((len(c) for c in perms.cycles(g) if len(c) > 1), reverse=True)
            if (g[1] - g[0]) % p == 1:  # translation: kernel element
                good = fixed == 0 and lengths == [k] * (p // k)
            else:
                good = fixed == 1 and lengths == [k] * ((p - 1) // k)
            if not good:
                return CriterionResult(8, "Frobenius coset actions", False,
                                       f"bad cycle structure for {g} in F_{p*q}")
            if not has_free_cycle_type(g):
                return CriterionResult(8, "Frobenius coset actions", False,
                                       f"{g} in F_{p*q} escapes the free cycle types")
        if not subgroup_lifts(as_symmetric_subgroup(P)).lifts:
            return CriterionResult(8, "Frobenius coset actions", False,
                                   f"degree-{p} image of F_{p*q} fails to lift")
    return CriterionResult(8, "Frobenius coset actions", True,
                           "p=7 and p=13 images verified and lifted")


@lru_cache(maxsize=None)
def _cayley_images() -> tuple[tuple[str, PermutationGroup], ...]:
    z5 = permutation_group(5, [perms.from_cycle(5, tuple(range(5)))])
    z7 = permutation_group(7, [perms.from_cycle(7, tuple(range(7)))])
    z3z3 = permutation_group(6, [perms.from_cycle(6, (0, 1, 2)), perms.from_cycle(6, (3, 4, 5))])
    f21 = _frobenius_group(7, 3)
    return (
        ("Z/5", cayley_embedding(z5)),
        ("Z/7", cayley_embedding(z7)),
        ("Z/3 x Z/3", cayley_embedding(z3z3)),
        ("Z/7 : Z/3", cayley_embedding(f21)),
    )


def criterion_9() -> CriterionResult:
    """Left-translation images land in the free cycle types and lift."""
    start = time.perf_counter()
    for name, image in _cayley_images():
        if not all(has_free_cycle_type(g) for g in image):
            return CriterionResult(9, "Cayley embeddings lift", False,
                                   f"{name}: image leaves the free cycle types")
        if not subgroup_lifts(as_symmetric_subgroup(image)).lifts:
            return CriterionResult(9, "Cayley embeddings lift", False,
                                   f"{name}: image of degree {image.degree} fails to lift")
    elapsed = time.perf_counter() - start
    ok = elapsed < 60.0
    return CriterionResult(9, "Cayley embeddings lift", ok,
                           f"degrees 5, 7, 9, 21 in {elapsed:.1f}s")


def _cocycle_roundtrips(G: Subgroup, trips: int, rng: Random) -> int:
    successes = 0
    width = len(hyperplanes(G.descriptor))
    for _ in range(trips):
        x0 = tuple(rng.randint(-9, 9) for _ in range(width))
        c = coboundary(x0, G)
        x = trivialize_cocycle(c, G)
        if coboundary(x, G) == c:
            successes += 1
    return successes


def criterion_10() -> CriterionResult:
    """100 generate-and-solve cocycle round trips per test group, all solvable."""
    rng = Random(0xC0C1)
    d3 = _D(1, 1, 3)
    d5 = _D(1, 1, 5)
    settings = [
        ("<(1,2,3)> in S_3", closure(d3, [from_permutation(d3, perms.from_cycle(3, (0, 1, 2)))])),
        ("<(1,2,3,4,5)> in S_5", closure(d5, [from_permutation(d5, perms.from_cycle(5, tuple(range(5))))])),
        ("Cayley Z/7:Z/3 in S_21", as_symmetric_subgroup(_cayley_images()[3][1])),
    ]
    report = []
    for name, G in settings:
        good = _cocycle_roundtrips(G, 100, rng)
        report.append(f"{name}: {good}/100")
        if good != 100:
            return CriterionResult(10, "constructive H^1 vanishing", False, "; ".join(report))
    return CriterionResult(10, "constructive H^1 vanishing", True, "; ".join(report))


@lru_cache(maxsize=None)
def _rank_test_subgroups() -> tuple[Subgroup, ...]:
    """Every subgroup exercised by criteria 6 through 9, in monomial form."""
    seen: dict[tuple[GroupDescriptor, frozenset], Subgroup] = {}

    def put(G: Subgroup) -> None:
        seen.setdefault((G.descriptor, G.elements), G)

    for P in _s5_sample_subgroups():
        put(as_symmetric_subgroup(P))
    for desc in (_D(2, 1, 3), _D(4, 2, 2)):
        for G in _cyclic_subgroups(desc):
            put(G)
    for p, q in ((7, 3), (13, 3)):
        put(as_symmetric_subgroup(_frobenius_group(p, q)))
    for _, image in _cayley_images():
        put(as_symmetric_subgroup(image))
    return tuple(seen.values())


def criterion_11() -> CriterionResult:
    """Fixed-lattice rank equals the orbit count for every tested subgroup."""
    for G in _rank_test_subgroups():
        if fixed_lattice_rank(G) != len(orbits(G)):
            return CriterionResult(11, "normalizer lattice rank", False,
                                   f"rank/orbit mismatch for a subgroup of {G.descriptor}")
    return CriterionResult(11, "normalizer lattice rank", True,
                           f"{len(_rank_test_subgroups())} subgroups checked")


def criterion_12() -> CriterionResult:
    """Liftable permutations stay liftable after adding a fixed strand."""
    checked = 0
    for n in range(2, 6):
        desc = _D(1, 1, n)
        for w, lifts in _oracle_lifts(desc).items():
            if not lifts:
                continue
            padded = pad(w, n + 1)
            if not element_lifts_oracle(padded).lifts:
                return CriterionResult(12, "stability under padding", False,
                                       f"{w} liftable in S_{n} but not in S_{n + 1}")
            checked += 1
    return CriterionResult(12, "stability under padding", True,
                           f"{checked} liftable permutations padded")


_CRITERIA = (
    criterion_1, criterion_2, criterion_3, criterion_4, criterion_5, criterion_6,
    criterion_7, criterion_8, criterion_9, criterion_10, criterion_11, criterion_12,
)


def run_criterion(number: int) -> CriterionResult:
    if not 1 <= number <= len(_CRITERIA):
        raise ValueError(f"no criterion {number}")
    return _CRITERIA[number - 1]()


def run_all() -> list[CriterionResult]:
    return [fn() for fn in _CRITERIA]
