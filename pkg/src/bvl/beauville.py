"""Sigma sets, Beauville structures and all-pairs generating class pairs.

Sigma(x, y) is the union of the conjugacy classes of all powers of x, y and
xy; a group has an unmixed Beauville structure when two generating pairs
have sigma sets meeting only in the identity.  Since the covered classes
depend only on the class-type triple of a pair, both search and nonexistence
certification work at class-type granularity, with pair enumeration inside a
type fixing the first component to the class representative (simultaneous
conjugation makes this lossless).
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd

from .chartab import CharacterTable, character_table
from .permgroup import (
    CapacityError,
    ClassData,
    MembershipError,
    PermGroup,
    Permutation,
    is_transitive_on_group_domain,
    subgroup_order,
)
from .structconst import structure_constant_formula

DEFAULT_TYPE_BUDGET = 10_000_000

STATUS_CERTIFICATE = "certificate"
STATUS_NONE_EXHAUSTED = "none-exhausted"
STATUS_NONE_BUDGET = "none-budget"


class NonIntegralGenusError(ValueError):
    """The branching data is impossible for the given group order."""


@dataclass(frozen=True)
class SigmaSet:
    """Classes covered by the powers of x, y and xy, with their total size."""

    x: Permutation
    y: Permutation
    covered: frozenset[int]
    covered_labels: tuple[str, ...]
    element_count: int


@dataclass
class BeauvilleCertificate:
    """Two generating pairs whose sigma sets meet only in the identity."""

    group: str
    pairs: list[list[int]]  # four 1-based image arrays: x1, y1, x2, y2
    orders: list[int]  # o(x1), o(y1), o(x1 y1), o(x2), o(y2), o(x2 y2)
    sigma_classes: list[list[str]]
    hyperbolic: list[bool]
    seed: int
    generation_orders: list[int] = field(default_factory=list)
    budget_used: int = 0

    def to_json_dict(self) -> dict:
        return {
            "group": self.group,
            "pairs": self.pairs,
            "orders": self.orders,
            "sigma_classes": self.sigma_classes,
            "hyperbolic": self.hyperbolic,
            "seed": self.seed,
        }

    @classmethod
    def from_json_dict(cls, payload: dict) -> "BeauvilleCertificate":
        for key in ("group", "pairs", "orders", "sigma_classes", "hyperbolic", "seed"):
            if key not in payload:
                raise ValueError(f"certificate is missing field {key!r}")
        return cls(
            group=payload["group"],
            pairs=[list(map(int, arr)) for arr in payload["pairs"]],
            orders=list(map(int, payload["orders"])),
            sigma_classes=[list(arr) for arr in payload["sigma_classes"]],
            hyperbolic=[bool(b) for b in payload["hyperbolic"]],
            seed=int(payload["seed"]),
        )


@dataclass
class GenClassCertificate:
    """Exhaustive all-pairs generation verdict for classes C (or a set) and D."""

    group: str
    c_labels: tuple[str, ...]
    d_label: str
    exhaustive: bool
    pairs_tested: int
    counterexample: tuple[list[int], list[int]] | None = None

    @property
    def all_generate(self) -> bool:
        return self.exhaustive and self.counterexample is None


@dataclass
class SearchResult:
    status: str
    certificate: BeauvilleCertificate | None = None
    types_examined: int = 0
    pair_tests: int = 0


def power_closure(classdata: ClassData, class_index: int) -> frozenset[int]:
    """Indices of the classes of all powers of an element of the class."""
    return frozenset(classdata.classes[class_index].power_row)


def sigma_set(G: PermGroup, classdata: ClassData, x: Permutation, y: Permutation) -> SigmaSet:
    """Sigma(x, y) as a set of covered classes, through power-map links."""
    for g in (x, y):
        if not G.contains(g):
            raise MembershipError("sigma_set: element is not in the group")
    cmap = classdata.class_map
    covered: set[int] = set()
    for g in (x, y, x * y):
        covered |= power_closure(classdata, cmap.class_of(g))
    labels = tuple(classdata.classes[i].label for i in sorted(covered))
    count = sum(classdata.classes[i].size for i in covered)
    return SigmaSet(x=x, y=y, covered=frozenset(covered), covered_labels=labels, element_count=count)


def is_generating_pair(G: PermGroup, x: Permutation, y: Permutation) -> bool:
    for g in (x, y):
        if not G.contains(g):
            raise MembershipError("is_generating_pair: element is not in the group")
    if not is_transitive_on_group_domain(G, (x, y)) and _group_is_transitive(G):
        return False
    return subgroup_order(G, [x, y]) == G.order


def _group_is_transitive(G: PermGroup) -> bool:
    return is_transitive_on_group_domain(G, G.generators)


def genus_of_triple(group_order: int, a: int, b: int, c: int) -> tuple[int, bool]:
    """Genus from the Riemann-Hurwitz count 2g - 2 = |G| (1 - 1/a - 1/b - 1/c).

    Returns (genus, hyperbolic).  A non-integral genus means the branching
    type (a, b, c) is impossible for that group order.
    """
    if min(a, b, c) < 1 or group_order < 1:
        raise ValueError("genus_of_triple needs positive arguments")
    chi = group_order * (1 - Fraction(1, a) - Fraction(1, b) - Fraction(1, c))
    if chi.denominator != 1 or chi.numerator % 2 != 0:
        raise NonIntegralGenusError(
            f"branching type ({a},{b},{c}) gives non-integral genus for order {group_order}"
        )
    genus = max(0, 1 + chi.numerator // 2)
    hyperbolic = Fraction(1, a) + Fraction(1, b) + Fraction(1, c) < 1
    return genus, hyperbolic


def _triple_orders(x: Permutation, y: Permutation) -> tuple[int, int, int]:
    return x.order(), y.order(), (x * y).order()


def _is_hyperbolic(x: Permutation, y: Permutation) -> bool:
    a, b, c = _triple_orders(x, y)
    return Fraction(1, a) + Fraction(1, b) + Fraction(1, c) < 1


def verify_beauville(
    G: PermGroup,
    pair1: tuple[Permutation, Permutation],
    pair2: tuple[Permutation, Permutation],
    require_hyperbolic: bool = False,
    seed: int = 0,
) -> tuple[BeauvilleCertificate | None, str | None]:
    """Check both pairs generate and their sigma sets meet only in 1.

    Returns (certificate, None) on success, (None, reason) naming the first
    failed condition otherwise.
    """
    classdata = G.conjugacy_data()
    for idx, (x, y) in enumerate((pair1, pair2), start=1):
        if not (G.contains(x) and G.contains(y)):
            raise MembershipError(f"pair {idx}: element outside the group")
        if not is_generating_pair(G, x, y):
            return None, f"generation-pair{idx}"
    s1 = sigma_set(G, classdata, *pair1)
    s2 = sigma_set(G, classdata, *pair2)
    identity_index = classdata.class_map.class_of(G.identity())
    if s1.covered & s2.covered != {identity_index}:
        return None, "sigma-intersection"
    hyper = [_is_hyperbolic(*pair1), _is_hyperbolic(*pair2)]
    if require_hyperbolic and not all(hyper):
        bad = 1 if not hyper[0] else 2
        return None, f"hyperbolicity-pair{bad}"
    (x1, y1), (x2, y2) = pair1, pair2
    cert = BeauvilleCertificate(
        group=G.spec_string or G.name,
        pairs=[g.to_list() for g in (x1, y1, x2, y2)],
        orders=list(_triple_orders(x1, y1)) + list(_triple_orders(x2, y2)),
        sigma_classes=[list(s1.covered_labels), list(s2.covered_labels)],
        hyperbolic=hyper,
        seed=seed,
        generation_orders=[G.order, G.order],
    )
    return cert, None


def verify_certificate(
    G: PermGroup, cert: BeauvilleCertificate, require_hyperbolic: bool = False
) -> tuple[bool, str]:
    """Re-verify a parsed certificate from scratch against the group."""
    try:
        perms = [Permutation(arr) for arr in cert.pairs]
    except ValueError as exc:
        return False, f"malformed-permutation: {exc}"
    if len(perms) != 4:
        return False, "malformed-pairs"
    if any(p.degree != G.degree for p in perms):
        return False, "degree-mismatch"
    fresh, reason = verify_beauville(
        G, (perms[0], perms[1]), (perms[2], perms[3]),
        require_hyperbolic=require_hyperbolic, seed=cert.seed,
    )
    if fresh is None:
        return False, reason
    if fresh.orders != cert.orders:
        return False, "orders-mismatch"
    if [sorted(s) for s in fresh.sigma_classes] != [sorted(s) for s in cert.sigma_classes]:
        return False, "sigma-classes-mismatch"
    if fresh.hyperbolic != cert.hyperbolic:
        return False, "hyperbolic-mismatch"
    return True, "ok"


# ---------------------------------------------------------------------------
# search


def _class_types(
    G: PermGroup, classdata: ClassData, T: CharacterTable
) -> list[tuple[tuple[int, int, int], frozenset[int], int]]:
    """All class-type triples with a nonzero pair count, and their sigma sets.

    A pair (x, y) has type (c1, c2, c3) when x is in C1, y in C2 and xy in C3;
    the number of such pairs with x fixed equals n(C1, C2, C3*) with C3* the
    inverse class of C3.  Types touching the identity class are dropped: such
    a pair generates a cyclic subgroup, and a cyclic group is never the whole
    group here unless G itself is cyclic, in which case the powers of a
    generator meet every class and sigma-disjointness is impossible anyway.
    """
    classes = classdata.classes
    k = len(classes)
    inverse_index = {c.index: classdata.by_label(c.inverse_class).index for c in classes}
    out = []
    for i1 in range(1, k):
        for i2 in range(1, k):
            for i3 in range(1, k):
                n = structure_constant_formula(
                    T,
                    classes[i1].label,
                    classes[i2].label,
                    classes[inverse_index[i3]].label,
                ).n_value
                if n == 0:
                    continue
                sigma = (
                    power_closure(classdata, i1)
                    | power_closure(classdata, i2)
                    | power_closure(classdata, i3)
                )
                out.append(((i1, i2, i3), frozenset(sigma), n))
    return out


def _order_product(classdata: ClassData, t: tuple[int, int, int]) -> int:
    prod = 1
    for i in t:
        prod *= classdata.classes[i].element_order
    return prod


class _TypeSearcher:
    """Finds (and memoizes) a generating pair of a given class type."""

    def __init__(self, G: PermGroup, classdata: ClassData, seed: int, budget: int):
        self.G = G
        self.classdata = classdata
        self.seed = seed
        self.budget = budget
        self.cache: dict[tuple[int, int, int], tuple[Permutation, Permutation] | None] = {}
        self.budget_hit = False
        self.pair_tests = 0

    def witness(self, t: tuple[int, int, int]):
        if t in self.cache:
            return self.cache[t]
        i1, i2, i3 = t
        cmap = self.classdata.class_map
        x = self.classdata.classes[i1].representative
        candidates = cmap.elements_of(i2)
        order = list(range(len(candidates)))
        rng = random.Random(self.seed * 1_000_003 + i1 * 3721 + i2 * 61 + i3)
        rng.shuffle(order)
        found = None
        tests = 0
        for pos in order:
            tests += 1
            if tests > self.budget:
                self.budget_hit = True
                break
            y = candidates[pos]
            if cmap.class_of(x * y) != i3:
                continue
            if is_generating_pair(self.G, x, y):
                found = (x, y)
                break
        self.pair_tests += tests
        self.cache[t] = found
        return found


def search_beauville(
    G: PermGroup,
    strategy: str = "COPRIME_FIRST",
    seed: int = 0,
    budget: int = DEFAULT_TYPE_BUDGET,
    require_hyperbolic: bool = False,
) -> SearchResult:
    """Search for an unmixed Beauville structure at class-type granularity.

    COPRIME_FIRST visits type pairs with coprime order products first;
    EXHAUSTIVE_CLASSES sweeps all type pairs in canonical order.  Both cover
    the whole type space, so a search that ends without a certificate and
    without hitting the budget certifies nonexistence.
    """
    if strategy not in ("COPRIME_FIRST", "EXHAUSTIVE_CLASSES"):
        raise ValueError(f"unknown strategy {strategy!r}")
    classdata = G.conjugacy_data()
    if G.order == 1:
        return SearchResult(status=STATUS_NONE_EXHAUSTED)
    T = character_table(G)
    types = _class_types(G, classdata, T)
    identity_index = 0

    candidates: list[tuple[int, int]] = []
    for a in range(len(types)):
        ta, sig_a, _ = types[a]
        for b in range(a, len(types)):
            tb, sig_b, _ = types[b]
            if sig_a & sig_b == {identity_index}:
                candidates.append((a, b))

    if strategy == "COPRIME_FIRST":
        def sort_key(pair):
            a, b = pair
            coprime = gcd(
                _order_product(classdata, types[a][0]),
                _order_product(classdata, types[b][0]),
            ) == 1
            return (0 if coprime else 1, types[a][0], types[b][0])
    else:
        def sort_key(pair):
            a, b = pair
            return (types[a][0], types[b][0])

    candidates.sort(key=sort_key)
    searcher = _TypeSearcher(G, classdata, seed, budget)

    for a, b in candidates:
        w1 = searcher.witness(types[a][0])
        if w1 is None:
            continue
        w2 = searcher.witness(types[b][0])
        if w2 is None:
            continue
        if require_hyperbolic and not (_is_hyperbolic(*w1) and _is_hyperbolic(*w2)):
            continue
        cert, reason = verify_beauville(
            G, w1, w2, require_hyperbolic=require_hyperbolic, seed=seed
        )
        if cert is None:
            raise RuntimeError(f"search produced a non-verifying pair: {reason}")
        cert.budget_used = searcher.pair_tests
        return SearchResult(
            status=STATUS_CERTIFICATE,
            certificate=cert,
            types_examined=len(types),
            pair_tests=searcher.pair_tests,
        )

    status = STATUS_NONE_BUDGET if searcher.budget_hit else STATUS_NONE_EXHAUSTED
    return SearchResult(
        status=status, types_examined=len(types), pair_tests=searcher.pair_tests
    )


# ---------------------------------------------------------------------------
# generating class pairs


def all_pairs_generate(
    G: PermGroup, c_labels, d_label: str, budget: int = DEFAULT_TYPE_BUDGET
) -> GenClassCertificate:
    """Test G = <c, d> for the representative c of each class in C and every
    d in D; conjugation invariance of pair generation makes this exhaustive
    over C x D."""
    if isinstance(c_labels, str):
        c_labels = (c_labels,)
    c_labels = tuple(c_labels)
    classdata = G.conjugacy_data()
    d_class = classdata.by_label(d_label)
    if d_class.size > budget:
        raise CapacityError(f"|D| = {d_class.size} exceeds the iteration budget {budget}")
    d_elements = classdata.class_map.elements_of(d_class.index)
    tested = 0
    for c_label in c_labels:
        c_rep = classdata.by_label(c_label).representative
        for d in d_elements:
            tested += 1
            if not is_generating_pair(G, c_rep, d):
                return GenClassCertificate(
                    group=G.name,
                    c_labels=c_labels,
                    d_label=d_label,
                    exhaustive=True,
                    pairs_tested=tested,
                    counterexample=(c_rep.to_list(), d.to_list()),
                )
    return GenClassCertificate(
        group=G.name,
        c_labels=c_labels,
        d_label=d_label,
        exhaustive=True,
        pairs_tested=tested,
        counterexample=None,
    )


def search_gen_classes(G: PermGroup, budget: int = DEFAULT_TYPE_BUDGET) -> list[tuple[str, str]]:
    """All ordered class pairs (C, D) for which every pair in C x D generates."""
    if G.order > 1_000_000:
        raise CapacityError(f"exhaustive class-pair search needs order <= 1e6, got {G.order}")
    classdata = G.conjugacy_data()
    labels = [c.label for c in classdata.classes if c.element_order > 1]
    good: list[tuple[str, str]] = []
    for i, c in enumerate(labels):
        for d in labels[i:]:
            # generation of <c, d> is symmetric, so one scan decides both orders
            if all_pairs_generate(G, c, d, budget=budget).all_generate:
                good.append((c, d))
                if c != d:
                    good.append((d, c))
    good.sort(key=lambda pair: (
        classdata.by_label(pair[0]).index, classdata.by_label(pair[1]).index
    ))
    return good
