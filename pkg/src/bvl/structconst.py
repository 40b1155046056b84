"""Structure constants n(C1,C2,C3) and the empirical theorem checks.

n(C1,C2,C3) counts, for a fixed x in C1, the pairs (y, z) in C2 x C3 with
xyz = 1.  Two independent routes are provided: the character formula

    n = (|C2||C3| / |G|) * sum over irreducible chi of
        chi(C1) chi(C2) chi(C3) / chi(1)

evaluated in exact cyclotomic arithmetic, and a brute-force count over C2.
The module also houses the nonvanishing scan for products of regular
semisimple classes, the character-value bound check, and the point-count
probe for triple varieties.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .catalog import LieMeta
from .chartab import CharacterTable, TableError
from .cyclotomic import Cyclo
from .permgroup import CapacityError, ClassData, PermGroup

BOUND_TOLERANCE = 1e-6
BRUTE_BUDGET = 100_000_000


@dataclass(frozen=True)
class TripleCount:
    """A structure-constant value, tagged with the route that produced it."""

    group: str
    labels: tuple[str, str, str]
    n_value: int
    method: str  # FORMULA or BRUTE


@dataclass
class BoundReport:
    """Max |chi(s)| per regular semisimple class against the Weyl bound."""

    group: str
    per_class_max: dict[str, float]
    bound: int
    passed: bool


@dataclass
class PointCountReport:
    """Exact F_q-point count of a triple variety next to its leading term."""

    group: str
    labels: tuple[str, str, str]
    n_value: int
    class_size: int
    exact_count: int
    predicted: int
    ratio: Fraction


@dataclass
class GowScanReport:
    group: str
    regular_classes: list[str]
    semisimple_classes: list[str]
    triples_checked: int
    violations: list[tuple[str, str, str]]

    @property
    def all_positive(self) -> bool:
        return not self.violations


def structure_constant_formula(
    T: CharacterTable, c1: str, c2: str, c3: str
) -> TripleCount:
    """n(C1,C2,C3) through the character formula, in exact arithmetic."""
    i1, i2, i3 = T.index_of(c1), T.index_of(c2), T.index_of(c3)
    total = Cyclo.zero(T.conductor)
    for row, degree in zip(T.rows, T.degrees):
        v = row[i1] * row[i2] * row[i3]
        if not v.is_zero():
            total = total + v / degree
    if not total.is_rational():
        raise TableError(f"non-rational structure-constant sum for {(c1, c2, c3)}")
    n = total.rational_value() * T.class_sizes[i2] * T.class_sizes[i3] / T.group_order
    if n.denominator != 1 or n < 0:
        raise TableError(f"structure constant {(c1, c2, c3)} is not a nonnegative integer: {n}")
    return TripleCount(group=T.group_name, labels=(c1, c2, c3), n_value=int(n), method="FORMULA")


def structure_constant_brute(
    G: PermGroup, classdata: ClassData, c1: str, c2: str, c3: str
) -> TripleCount:
    """n(C1,C2,C3) by fixing the representative x of C1 and scanning C2."""
    k1, k2, k3 = (classdata.by_label(c) for c in (c1, c2, c3))
    if k2.size > BRUTE_BUDGET:
        raise CapacityError(f"brute-force budget exceeded: |C2| = {k2.size}")
    cmap = classdata.class_map
    x = k1.representative
    count = 0
    for y in cmap.elements_of(k2.index):
        z = (x * y).inverse()
        if cmap.class_of(z) == k3.index:
            count += 1
    return TripleCount(group=G.name, labels=(c1, c2, c3), n_value=count, method="BRUTE")


# ---------------------------------------------------------------------------
# semisimple-class bookkeeping


def semisimple_classes(classdata: ClassData, meta: LieMeta) -> list[str]:
    """Nontrivial classes of order coprime to the defining prime."""
    return [
        c.label
        for c in classdata.classes
        if c.element_order > 1 and gcd(c.element_order, meta.defining_prime) == 1
    ]


def regular_semisimple_classes(
    G: PermGroup, classdata: ClassData, meta: LieMeta
) -> list[str]:
    """Semisimple classes whose centralizer order is prime to p.

    In PSL2 this keeps every nontrivial p'-class; in PSL3 it drops exactly
    the classes centralized by a GL2-type subgroup, leaving the torus
    classes the point-count and nonvanishing statements quantify over.
    """
    p = meta.defining_prime
    out = []
    for c in classdata.classes:
        if c.element_order == 1 or gcd(c.element_order, p) != 1:
            continue
        if gcd(G.order // c.size, p) == 1:
            out.append(c.label)
    return out


def _require_meta(meta: LieMeta | None) -> LieMeta:
    if meta is None:
        raise ValueError("operation needs a Lie-type catalog group (no metadata)")
    return meta


def gow_scan(
    G: PermGroup, classdata: ClassData, meta: LieMeta | None, T: CharacterTable
) -> GowScanReport:
    """Nonvanishing of n(C1,C2,C3) over regular semisimple C1, C2 and
    nontrivial semisimple C3."""
    meta = _require_meta(meta)
    regular = regular_semisimple_classes(G, classdata, meta)
    semisimple = semisimple_classes(classdata, meta)
    violations = []
    checked = 0
    for c1 in regular:
        for c2 in regular:
            for c3 in semisimple:
                checked += 1
                if structure_constant_formula(T, c1, c2, c3).n_value == 0:
                    violations.append((c1, c2, c3))
    return GowScanReport(
        group=G.name,
        regular_classes=regular,
        semisimple_classes=semisimple,
        triples_checked=checked,
        violations=violations,
    )


def char_bound_check(
    G: PermGroup, classdata: ClassData, meta: LieMeta | None, T: CharacterTable
) -> BoundReport:
    """Max |chi(s)| over irreducibles per regular semisimple class,
    compared against the Weyl-group order."""
    meta = _require_meta(meta)
    per_class: dict[str, float] = {}
    for label in regular_semisimple_classes(G, classdata, meta):
        idx = T.index_of(label)
        per_class[label] = max(row[idx].abs_value() for row in T.rows)
    passed = all(v <= meta.weyl_order + BOUND_TOLERANCE for v in per_class.values())
    return BoundReport(group=G.name, per_class_max=per_class, bound=meta.weyl_order, passed=passed)


def point_count_probe(
    G: PermGroup,
    classdata: ClassData,
    meta: LieMeta | None,
    T: CharacterTable,
    c1: str,
    c2: str,
    c3: str,
) -> PointCountReport:
    """Exact count n(C1,C2,C3) * |C1| next to the leading term q^(2 dim - 3r).

    The count equals the number of F_q-points of the triple variety
    {(x,y,z) in C1 x C2 x C3 : xyz = 1}; no pass/fail judgment is made since
    the comparison is asymptotic.
    """
    meta = _require_meta(meta)
    if meta.rank < 2:
        raise ValueError(f"point-count probe needs rank >= 2, got rank {meta.rank}")
    regular = set(regular_semisimple_classes(G, classdata, meta))
    for c in (c1, c2, c3):
        if c not in regular:
            raise ValueError(f"class {c} is not regular semisimple in {G.name}")
    n = structure_constant_formula(T, c1, c2, c3).n_value
    size1 = classdata.by_label(c1).size
    predicted = meta.q ** (2 * meta.dim_G - 3 * meta.rank)
    exact = n * size1
    return PointCountReport(
        group=G.name,
        labels=(c1, c2, c3),
        n_value=n,
        class_size=size1,
        exact_count=exact,
        predicted=predicted,
        ratio=Fraction(exact, predicted),
    )
