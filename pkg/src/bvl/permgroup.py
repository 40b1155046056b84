"""Permutation-group kernel: stabilizer chains, membership, conjugacy classes.

Points are 1-based throughout the public surface; the image tuple of a
permutation carries a fixed sentinel 0 in slot 0 so that composition needs
no index shifting.  Products act left-to-right: (p * q) means apply p, then q.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from math import gcd

# Above this order, conjugacy classes switch from full element enumeration
# (FULL class map) to random-conjugation discovery with a class-equation
# completeness certificate (TEST class map).
FULL_ENUMERATION_BOUND = 2_000_000

# Default hard cap for conjugacy-class computation.
CLASS_ORDER_BOUND = 10_000_000


class CapacityError(RuntimeError):
    """Raised when a computation exceeds its configured size bound."""


class MembershipError(ValueError):
    """Raised when an element lies outside the group it is used with."""


class Permutation:
    """A permutation of {1..degree}, stored as an image tuple with images[0] = 0."""

    __slots__ = ("images",)

    def __init__(self, images):
        data = tuple(images)
        if not data or data[0] != 0:
            data = (0,) + data
        n = len(data) - 1
        if sorted(data[1:]) != list(range(1, n + 1)):
            raise ValueError(f"not a bijection of 1..{n}: {data[1:]}")
        object.__setattr__(self, "images", data)

    @classmethod
    def _raw(cls, data: tuple[int, ...]) -> "Permutation":
        p = object.__new__(cls)
        object.__setattr__(p, "images", data)
        return p

    @classmethod
    def identity(cls, degree: int) -> "Permutation":
        return cls._raw(tuple(range(degree + 1)))

    @classmethod
    def from_cycles(cls, degree: int, cycles) -> "Permutation":
        data = list(range(degree + 1))
        for cyc in cycles:
            for a, b in zip(cyc, cyc[1:]):
                data[a] = b
            if cyc:
                data[cyc[-1]] = cyc[0]
        return cls(data)

    @property
    def degree(self) -> int:
        return len(self.images) - 1

    def apply(self, point: int) -> int:
        return self.images[point]

    def __mul__(self, other: "Permutation") -> "Permutation":
        e = other.images
        return Permutation._raw(tuple(e[x] for x in self.images))

    def inverse(self) -> "Permutation":
        data = [0] * len(self.images)
        for i, j in enumerate(self.images):
            data[j] = i
        return Permutation._raw(tuple(data))

    def __pow__(self, k: int) -> "Permutation":
        if k < 0:
            return self.inverse() ** (-k)
        result = Permutation.identity(self.degree)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def conjugate_by(self, g: "Permutation") -> "Permutation":
        """g^-1 * self * g."""
        return g.inverse() * self * g

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self.images))

    def cycles(self) -> list[tuple[int, ...]]:
        """Nontrivial cycles, each starting at its least point."""
        seen = [False] * (self.degree + 1)
        out = []
        for start in range(1, self.degree + 1):
            if seen[start] or self.images[start] == start:
                continue
            cyc = [start]
            seen[start] = True
            j = self.images[start]
            while j != start:
                cyc.append(j)
                seen[j] = True
                j = self.images[j]
            out.append(tuple(cyc))
        return out

    def cycle_type(self) -> tuple[int, ...]:
        lengths = sorted((len(c) for c in self.cycles()), reverse=True)
        return tuple(lengths)

    def order(self) -> int:
        n = 1
        for c in self.cycles():
            n = n * len(c) // gcd(n, len(c))
        return n

    def to_list(self) -> list[int]:
        """1-based image array, as stored in group files and certificates."""
        return list(self.images[1:])

    def __eq__(self, other) -> bool:
        return isinstance(other, Permutation) and self.images == other.images

    def __hash__(self) -> int:
        return hash(self.images)

    def __repr__(self) -> str:
        cycs = self.cycles()
        if not cycs:
            return "()"
        return "".join("(" + " ".join(map(str, c)) + ")" for c in cycs)


class _Level:
    """One stabilizer-chain level: base point, own generators, Schreier data."""

    __slots__ = ("point", "own_gens", "transversal", "orbit", "pair_done")

    def __init__(self, point: int, degree: int):
        self.point = point
        self.own_gens: list[tuple[tuple[int, int], Permutation]] = []
        self.transversal: dict[int, Permutation] = {point: Permutation.identity(degree)}
        self.orbit: list[int] = [point]
        self.pair_done: set[tuple[int, tuple[int, int]]] = set()


class _Chain:
    """Deterministic Schreier-Sims stabilizer chain."""

    def __init__(self, generators: list[Permutation], degree: int):
        self.degree = degree
        self.levels: list[_Level] = []
        for g in generators:
            self._insert(g)
        i = len(self.levels) - 1
        while i >= 0:
            self._complete(i)
            i -= 1

    # -- construction ------------------------------------------------------

    def _insert(self, g: Permutation) -> bool:
        """Sift g and add a nontrivial residue to the chain. True if added."""
        res, j = self._sift(g, 0)
        if res.is_identity():
            return False
        if j == len(self.levels):
            point = next(i for i in range(1, self.degree + 1) if res.images[i] != i)
            self.levels.append(_Level(point, self.degree))
        lv = self.levels[j]
        token = (j, len(lv.own_gens))
        lv.own_gens.append((token, res))
        return True

    def _gen_set(self, i: int) -> list[tuple[tuple[int, int], Permutation]]:
        out = []
        for lv in self.levels[i:]:
            out.extend(lv.own_gens)
        return out

    def _extend_orbit(self, i: int) -> None:
        lv = self.levels[i]
        gens = self._gen_set(i)
        grew = True
        while grew:
            grew = False
            for beta in lv.orbit:
                u = lv.transversal[beta]
                for _, s in gens:
                    img = s.images[beta]
                    if img not in lv.transversal:
                        lv.transversal[img] = u * s
                        lv.orbit.append(img)
                        grew = True

    def _complete(self, i: int) -> None:
        """Schreier closure of level i, assuming deeper levels complete."""
        lv = self.levels[i]
        while True:
            self._extend_orbit(i)
            gens = self._gen_set(i)
            progressed = False
            for beta in list(lv.orbit):
                u = lv.transversal[beta]
                for token, s in gens:
                    key = (beta, token)
                    if key in lv.pair_done:
                        continue
                    lv.pair_done.add(key)
                    target = lv.transversal[s.images[beta]]
                    schreier = u * s * target.inverse()
                    res, j = self._sift(schreier, i + 1)
                    if res.is_identity():
                        continue
                    if j == len(self.levels):
                        point = next(
                            k for k in range(1, self.degree + 1) if res.images[k] != k
                        )
                        self.levels.append(_Level(point, self.degree))
                    deep = self.levels[j]
                    token2 = (j, len(deep.own_gens))
                    deep.own_gens.append((token2, res))
                    for l in range(len(self.levels) - 1, i, -1):
                        self._complete(l)
                    progressed = True
            if not progressed:
                return

    # -- queries -----------------------------------------------------------

    def _sift(self, g: Permutation, start: int) -> tuple[Permutation, int]:
        for i in range(start, len(self.levels)):
            lv = self.levels[i]
            img = g.images[lv.point]
            u = lv.transversal.get(img)
            if u is None:
                return g, i
            g = g * u.inverse()
        return g, len(self.levels)

    def contains(self, g: Permutation) -> bool:
        res, _ = self._sift(g, 0)
        return res.is_identity()

    def order(self) -> int:
        n = 1
        for lv in self.levels:
            n *= len(lv.orbit)
        return n

    def random_element(self, rng: random.Random) -> Permutation:
        g = Permutation.identity(self.degree)
        for lv in self.levels:
            g = g * lv.transversal[rng.choice(lv.orbit)]
        return g


class PermGroup:
    """A finite permutation group with base and strong generating set."""

    def __init__(self, generators, degree: int | None = None, name: str = ""):
        gens = [g if isinstance(g, Permutation) else Permutation(g) for g in generators]
        if gens:
            degrees = {g.degree for g in gens}
            if len(degrees) != 1:
                raise ValueError(f"generator degrees differ: {sorted(degrees)}")
            d = degrees.pop()
            if degree is not None and degree != d:
                raise ValueError(f"stated degree {degree} != generator degree {d}")
            degree = d
        elif degree is None:
            raise ValueError("empty generator list needs an explicit degree")
        self.degree = degree
        self.generators = tuple(gens)
        self.name = name
        self.spec_string = name  # builders overwrite with a parseable spec
        self._chain = _Chain(gens, degree)
        self.order = self._chain.order()
        self.base = [lv.point for lv in self._chain.levels]
        self.strong_generators = [g for lv in self._chain.levels for _, g in lv.own_gens]
        self.basic_orbit_sizes = [len(lv.orbit) for lv in self._chain.levels]
        self._classdata: ClassData | None = None

    def identity(self) -> Permutation:
        return Permutation.identity(self.degree)

    def contains(self, g: Permutation) -> bool:
        if g.degree != self.degree:
            raise ValueError(f"degree mismatch: {g.degree} vs {self.degree}")
        return self._chain.contains(g)

    def random_element(self, rng: random.Random) -> Permutation:
        return self._chain.random_element(rng)

    def conjugacy_data(self, bound: int = CLASS_ORDER_BOUND) -> "ClassData":
        if self._classdata is None:
            self._classdata = conjugacy_classes(self, bound=bound)
        return self._classdata

    def __repr__(self) -> str:
        label = self.name or f"degree-{self.degree} group"
        return f"<PermGroup {label}, order {self.order}>"


def bsgs_construct(generators, degree: int | None = None, name: str = "") -> PermGroup:
    """Build a PermGroup with stabilizer-chain data from a generator list."""
    return PermGroup(generators, degree=degree, name=name)


def order(G: PermGroup) -> int:
    return G.order


def contains(G: PermGroup, g: Permutation) -> bool:
    return G.contains(g)


def subgroup_order(G: PermGroup, gens) -> int:
    """Exact order of the subgroup generated by gens inside G."""
    gens = list(gens)
    for g in gens:
        if not G.contains(g):
            raise MembershipError(f"element {g!r} is not in the group")
    return _Chain(gens, G.degree).order()


def is_transitive_on_group_domain(G: PermGroup, gens) -> bool:
    """Orbit of point 1 under gens covers the whole domain.

    Cheap necessary condition for generating a transitive group; used to
    short-circuit generation tests.
    """
    seen = bytearray(G.degree + 1)
    seen[1] = 1
    stack = [1]
    count = 1
    while stack:
        a = stack.pop()
        for g in gens:
            b = g.images[a]
            if not seen[b]:
                seen[b] = 1
                count += 1
                stack.append(b)
    return count == G.degree


@dataclass
class ConjugacyClass:
    """One conjugacy class with canonical label and power-map links."""

    label: str
    index: int
    representative: Permutation
    size: int
    element_order: int
    inverse_class: str = ""
    power_classes: dict[int, str] = field(default_factory=dict)
    # class index of representative**i for every 0 <= i < element_order
    power_row: tuple[int, ...] = ()


class ClassMap:
    """Element-to-class lookup; FULL holds a table over the whole group."""

    def __init__(self, mode: str, classes: list[ConjugacyClass], group: PermGroup):
        self.mode = mode
        self.classes = classes
        self.group = group
        self._table: dict[tuple[int, ...], int] = {}
        self._by_invariant: dict[tuple, list[int]] = {}
        self._elements_cache: dict[int, list[Permutation]] = {}

    def class_of(self, g: Permutation) -> int:
        """Index of the class containing g."""
        if self.mode == "FULL":
            try:
                return self._table[g.images]
            except KeyError:
                raise MembershipError("element is not in the group") from None
        key = (g.order(), g.cycle_type())
        candidates = self._by_invariant.get(key)
        if not candidates:
            raise MembershipError("element matches no class invariant")
        if len(candidates) == 1:
            return candidates[0]
        reps = {self.classes[i].representative.images: i for i in candidates}
        for images in _conjugation_orbit(self.group, g):
            if images in reps:
                return reps[images]
        raise MembershipError("element is in no computed class")

    def label_of(self, g: Permutation) -> str:
        return self.classes[self.class_of(g)].label

    def elements_of(self, index: int) -> list[Permutation]:
        """All elements of the class (FULL: from the table; TEST: by orbit)."""
        if index in self._elements_cache:
            return self._elements_cache[index]
        if self.mode == "FULL":
            grouped: dict[int, list[Permutation]] = {i: [] for i in range(len(self.classes))}
            for images in sorted(self._table):
                grouped[self._table[images]].append(Permutation._raw(images))
            self._elements_cache = grouped
            return grouped[index]
        rep = self.classes[index].representative
        elems = [Permutation._raw(images) for images in sorted(_conjugation_orbit(self.group, rep))]
        self._elements_cache[index] = elems
        return elems


@dataclass
class ClassData:
    classes: list[ConjugacyClass]
    class_map: ClassMap

    def by_label(self, label: str) -> ConjugacyClass:
        for c in self.classes:
            if c.label == label:
                return c
        raise KeyError(f"unknown class label {label!r}")

    def labels(self) -> list[str]:
        return [c.label for c in self.classes]


def _conjugation_orbit(G: PermGroup, g: Permutation) -> set[tuple[int, ...]]:
    """Image tuples of the full conjugacy class of g, by generator closure."""
    gens = [(s, s.inverse()) for s in G.generators]
    seen = {g.images}
    stack = [g]
    while stack:
        x = stack.pop()
        for s, s_inv in gens:
            y = s_inv * x * s
            if y.images not in seen:
                seen.add(y.images)
                stack.append(y)
    return seen


def _enumerate_elements(G: PermGroup) -> list[tuple[int, ...]]:
    """Image tuples of every group element, by closure under the generators."""
    ident = Permutation.identity(G.degree).images
    seen = {ident}
    frontier = [ident]
    gens = [g.images for g in G.generators]
    while frontier:
        nxt = []
        for v in frontier:
            for e in gens:
                w = tuple(e[x] for x in v)
                if w not in seen:
                    seen.add(w)
                    nxt.append(w)
        frontier = nxt
    return sorted(seen)


def _assign_labels(raw: list[tuple[int, tuple[int, ...], int]]) -> list[str]:
    """Labels like 5a, 5b from (element order, rep images, size) sort keys."""
    labels = []
    counters: dict[int, int] = {}
    for order_, _rep, _size in raw:
        k = counters.get(order_, 0)
        counters[order_] = k + 1
        suffix = ""
        k2 = k
        while True:
            suffix = chr(ord("a") + k2 % 26) + suffix
            k2 = k2 // 26 - 1
            if k2 < 0:
                break
        labels.append(f"{order_}{suffix}")
    return labels


def conjugacy_classes(
    G: PermGroup, bound: int = CLASS_ORDER_BOUND, seed: int = 0
) -> ClassData:
    """Complete conjugacy-class list with canonical labels and power maps.

    FULL mode (order <= FULL_ENUMERATION_BOUND) enumerates the whole group and
    partitions it; TEST mode discovers classes through seeded random sampling
    and certifies completeness with the class equation.
    """
    if G.order > bound:
        raise CapacityError(
            f"conjugacy classes need order <= {bound}, group has order {G.order}"
        )
    if G.order <= FULL_ENUMERATION_BOUND:
        return _classes_full(G)
    return _classes_test(G, seed)


def _classes_full(G: PermGroup) -> ClassData:
    elements = _enumerate_elements(G)
    assert len(elements) == G.order
    table: dict[tuple[int, ...], int] = {}
    raw: list[tuple[int, tuple[int, ...], int]] = []  # (order, rep images, size)
    gens = [(s.images, s.inverse().images) for s in G.generators]
    for images in elements:
        if images in table:
            continue
        idx = len(raw)
        orbit = [images]
        table[images] = idx
        for v in orbit:
            for s, s_inv in gens:
                w = tuple(s[v[x]] for x in s_inv)  # s^-1 * v * s
                if w not in table:
                    table[w] = idx
                    orbit.append(w)
        raw.append((Permutation._raw(images).order(), images, len(orbit)))
    assert sum(size for _, _, size in raw) == G.order

    # canonical order: element order, then size, then lex-least representative
    # (the scan over sorted elements already makes each rep lex-least in its class)
    perm_order = sorted(range(len(raw)), key=lambda i: (raw[i][0], raw[i][2], raw[i][1]))
    sorted_raw = [raw[i] for i in perm_order]
    relabel = {old: new for new, old in enumerate(perm_order)}
    for images in table:
        table[images] = relabel[table[images]]

    labels = _assign_labels(sorted_raw)
    classes = [
        ConjugacyClass(
            label=labels[i],
            index=i,
            representative=Permutation._raw(rep),
            size=size,
            element_order=order_,
        )
        for i, (order_, rep, size) in enumerate(sorted_raw)
    ]
    cmap = ClassMap("FULL", classes, G)
    cmap._table = table
    _fill_power_maps(classes, cmap)
    return ClassData(classes=classes, class_map=cmap)


def _classes_test(G: PermGroup, seed: int) -> ClassData:
    rng = random.Random(seed)
    found: list[tuple[int, tuple[int, ...], int]] = []  # (order, lex-least rep, size)
    covered = 0
    attempts = 0
    ident = G.identity()
    candidates = [ident] + [g for g in G.generators]
    while covered < G.order:
        g = candidates.pop() if candidates else G.random_element(rng)
        attempts += 1
        if attempts > 100_000:
            raise CapacityError("class discovery did not converge")
        if any(_is_conjugate_to_rep(G, g, rep) for _, rep, _ in found):
            continue
        orbit = _conjugation_orbit(G, g)
        found.append((g.order(), min(orbit), len(orbit)))
        covered += len(orbit)
    assert covered == G.order

    found.sort(key=lambda t: (t[0], t[2], t[1]))
    labels = _assign_labels(found)
    classes = [
        ConjugacyClass(
            label=labels[i],
            index=i,
            representative=Permutation._raw(rep),
            size=size,
            element_order=order_,
        )
        for i, (order_, rep, size) in enumerate(found)
    ]
    cmap = ClassMap("TEST", classes, G)
    for c in classes:
        key = (c.element_order, c.representative.cycle_type())
        cmap._by_invariant.setdefault(key, []).append(c.index)
    _fill_power_maps(classes, cmap)
    return ClassData(classes=classes, class_map=cmap)


def _is_conjugate_to_rep(G: PermGroup, g: Permutation, rep: tuple[int, ...]) -> bool:
    if g.images == rep:
        return True
    r = Permutation._raw(rep)
    if g.order() != r.order() or g.cycle_type() != r.cycle_type():
        return False
    return rep in _conjugation_orbit(G, g)


def _fill_power_maps(classes: list[ConjugacyClass], cmap: ClassMap) -> None:
    for c in classes:
        row = []
        p = Permutation.identity(c.representative.degree)
        for _ in range(c.element_order):
            row.append(cmap.class_of(p))
            p = p * c.representative
        c.power_row = tuple(row)
        c.inverse_class = classes[cmap.class_of(c.representative.inverse())].label
        c.power_classes = {
            k: classes[c.power_row[k % c.element_order]].label
            for k in divisors_of(c.element_order)
        }


def divisors_of(n: int) -> list[int]:
    out = [d for d in range(1, n + 1) if n % d == 0]
    return out


def centralizer_order(G: PermGroup, g: Permutation) -> int:
    """|C_G(g)| = |G| / |class of g|."""
    if not G.contains(g):
        raise MembershipError("element is not in the group")
    if G._classdata is not None:
        cd = G._classdata
        return G.order // cd.classes[cd.class_map.class_of(g)].size
    return G.order // len(_conjugation_orbit(G, g))
