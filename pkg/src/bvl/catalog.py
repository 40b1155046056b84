"""Constructors for the group families at desk scale.

Alternating and symmetric groups in natural action, PSL2(q) on the projective
line, PSL3(q) on the projective plane, and JSON group files.  Matrix groups
never escape this module: every builder returns a permutation group.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass
from math import gcd
from pathlib import Path

from .numtheory import DomainError, is_prime_power
from .permgroup import PermGroup, Permutation, bsgs_construct

ALT_RANGE = (3, 12)
SYM_RANGE = (3, 12)
PSL2_RANGE = (4, 49)
PSL3_VALUES = (2, 3, 5)


@dataclass(frozen=True)
class GroupSpec:
    """Parsed group specification: family plus one parameter."""

    family: str  # ALT | SYM | PSL2 | PSL3 | FILE
    n: int = 0
    q: int = 0
    path: str = ""

    def __str__(self) -> str:
        if self.family == "ALT":
            return f"A{self.n}"
        if self.family == "SYM":
            return f"S{self.n}"
        if self.family == "PSL2":
            return f"L2:{self.q}"
        if self.family == "PSL3":
            return f"L3:{self.q}"
        return f"file:{self.path}"


@dataclass(frozen=True)
class LieMeta:
    """Lie-theoretic metadata of the ambient simple algebraic group."""

    dim_G: int
    rank: int
    weyl_order: int
    defining_prime: int
    q: int


def parse_spec(text: str) -> GroupSpec:
    """Parse the CLI grammar: A5, S6, L2:7, L3:3, file:PATH."""
    s = text.strip()
    if s.lower().startswith("file:"):
        return GroupSpec(family="FILE", path=s[5:])
    try:
        if s[0] in "Aa" and s[1:].isdigit():
            return GroupSpec(family="ALT", n=int(s[1:]))
        if s[0] in "Ss" and s[1:].isdigit():
            return GroupSpec(family="SYM", n=int(s[1:]))
        if s[0] in "Ll" and ":" in s:
            dim, q = s[1:].split(":")
            if dim == "2":
                return GroupSpec(family="PSL2", q=int(q))
            if dim == "3":
                return GroupSpec(family="PSL3", q=int(q))
    except (IndexError, ValueError):
        pass
    raise DomainError(f"cannot parse group spec {text!r}")


class GF:
    """Arithmetic tables for GF(p^f); elements are codes 0..q-1.

    The code of sum c_i * x**i is sum c_i * p**i.  The modulus is the
    lexicographically least monic irreducible of degree f over F_p.
    """

    def __init__(self, q: int):
        pk = is_prime_power(q)
        if pk is None:
            raise DomainError(f"field size must be a prime power, got {q}")
        self.q = q
        self.p, self.f = pk
        self.modulus = _find_irreducible(self.p, self.f)
        self.add = [[self._add(a, b) for b in range(q)] for a in range(q)]
        self.mul = [[self._mul(a, b) for b in range(q)] for a in range(q)]
        self.neg = [self._neg(a) for a in range(q)]
        self.inv = [0] * q
        for a in range(1, q):
            for b in range(1, q):
                if self.mul[a][b] == 1:
                    self.inv[a] = b
                    break

    def _digits(self, a: int) -> list[int]:
        out = []
        for _ in range(self.f):
            out.append(a % self.p)
            a //= self.p
        return out

    def _code(self, digits: list[int]) -> int:
        a = 0
        for c in reversed(digits):
            a = a * self.p + c % self.p
        return a

    def _add(self, a: int, b: int) -> int:
        da, db = self._digits(a), self._digits(b)
        return self._code([(x + y) % self.p for x, y in zip(da, db)])

    def _neg(self, a: int) -> int:
        return self._code([(-x) % self.p for x in self._digits(a)])

    def _mul(self, a: int, b: int) -> int:
        da, db = self._digits(a), self._digits(b)
        prod = [0] * (2 * self.f - 1)
        for i, x in enumerate(da):
            if x:
                for j, y in enumerate(db):
                    prod[i + j] = (prod[i + j] + x * y) % self.p
        # reduce by the monic modulus
        for i in range(len(prod) - 1, self.f - 1, -1):
            c = prod[i]
            if c:
                prod[i] = 0
                for j, m in enumerate(self.modulus[:-1]):
                    prod[i - self.f + j] = (prod[i - self.f + j] - c * m) % self.p
        return self._code(prod[: self.f])

    def basis(self) -> list[int]:
        """Codes of the F_p-basis 1, x, x**2, ..."""
        return [self.p**i for i in range(self.f)]


def _poly_divmod(num: list[int], den: list[int], p: int) -> tuple[list[int], list[int]]:
    num = list(num)
    dl = len(den) - 1
    inv_lead = pow(den[-1], -1, p)
    quot = [0] * max(1, len(num) - dl)
    for i in range(len(num) - 1, dl - 1, -1):
        c = num[i] * inv_lead % p
        if c:
            quot[i - dl] = c
            for j, m in enumerate(den):
                num[i - dl + j] = (num[i - dl + j] - c * m) % p
    while len(num) > 1 and num[-1] == 0:
        num.pop()
    return quot, num


def _find_irreducible(p: int, f: int) -> list[int]:
    """Least monic irreducible of degree f over F_p, as coefficient list."""
    if f == 1:
        return [0, 1]
    lower = []
    for d in range(1, f // 2 + 1):
        for code in range(p**d):
            coeffs = []
            c = code
            for _ in range(d):
                coeffs.append(c % p)
                c //= p
            lower.append(coeffs + [1])
    for code in range(p**f):
        coeffs = []
        c = code
        for _ in range(f):
            coeffs.append(c % p)
            c //= p
        cand = coeffs + [1]
        if cand[0] == 0:
            continue
        if all(_poly_divmod(cand, g, p)[1] != [0] for g in lower):
            return cand
    raise ArithmeticError(f"no irreducible of degree {f} over F_{p}")


def _psl2_group(q: int) -> PermGroup:
    """PSL2(q) acting on the q+1 points of the projective line.

    Point i <= q is [elem(i-1) : 1]; point q+1 is [1 : 0].  The permutation
    action of SL2(q) factors through the center, so the group built here is
    PSL2(q) itself.
    """
    F = GF(q)

    def point_index(x: int, y: int) -> int:
        if y != 0:
            return F.mul[x][F.inv[y]] + 1
        return q + 1

    def matrix_to_perm(m: tuple[int, int, int, int]) -> Permutation:
        a, b, c, d = m
        images = [0] * (q + 2)
        for i in range(1, q + 2):
            if i <= q:
                x, y = i - 1, 1
            else:
                x, y = 1, 0
            nx = F.add[F.mul[a][x]][F.mul[b][y]]
            ny = F.add[F.mul[c][x]][F.mul[d][y]]
            images[i] = point_index(nx, ny)
        return Permutation(images)

    gens = []
    for t in F.basis():
        gens.append(matrix_to_perm((1, t, 0, 1)))
        gens.append(matrix_to_perm((1, 0, t, 1)))
    return bsgs_construct(gens, degree=q + 1, name=f"L2:{q}")


def _psl3_group(q: int) -> PermGroup:
    """PSL3(q) = SL3(q) (for gcd(3, q-1) = 1) on the q^2+q+1 plane points."""
    F = GF(q)

    def point_index(v: tuple[int, int, int]) -> int:
        x, y, z = v
        if z != 0:
            zi = F.inv[z]
            return F.mul[x][zi] * q + F.mul[y][zi] + 1
        if y != 0:
            yi = F.inv[y]
            return q * q + F.mul[x][yi] + 1
        return q * q + q + 1

    points = [(a, b, 1) for a in range(q) for b in range(q)]
    points += [(a, 1, 0) for a in range(q)]
    points += [(1, 0, 0)]

    def matrix_to_perm(m) -> Permutation:
        images = [0] * (q * q + q + 2)
        for i, (x, y, z) in enumerate(points, start=1):
            w = tuple(
                F.add[F.add[F.mul[m[r][0]][x]][F.mul[m[r][1]][y]]][F.mul[m[r][2]][z]]
                for r in range(3)
            )
            images[i] = point_index(w)
        return Permutation(images)

    gens = []
    for r in range(3):
        for s in range(3):
            if r == s:
                continue
            for t in F.basis():
                m = [[1 if i == j else 0 for j in range(3)] for i in range(3)]
                m[r][s] = t
                gens.append(matrix_to_perm(m))
    return bsgs_construct(gens, degree=q * q + q + 1, name=f"L3:{q}")


def _alternating_group(n: int) -> PermGroup:
    if n == 3:
        gens = [Permutation.from_cycles(3, [(1, 2, 3)])]
    else:
        long_cycle = tuple(range(1, n + 1)) if n % 2 == 1 else tuple(range(2, n + 1))
        gens = [
            Permutation.from_cycles(n, [(1, 2, 3)]),
            Permutation.from_cycles(n, [long_cycle]),
        ]
    return bsgs_construct(gens, degree=n, name=f"A{n}")


def _symmetric_group(n: int) -> PermGroup:
    gens = [
        Permutation.from_cycles(n, [(1, 2)]),
        Permutation.from_cycles(n, [tuple(range(1, n + 1))]),
    ]
    return bsgs_construct(gens, degree=n, name=f"S{n}")


def data_dir() -> Path:
    """Bundled data directory, overridable through BVL_DATA_DIR."""
    env = os.environ.get("BVL_DATA_DIR")
    if env:
        return Path(env)
    return Path(__file__).parent / "data"


def load_group_file(path: str | Path) -> PermGroup:
    """Build a group from a JSON file {"name", "degree", "generators"}.

    Generators are 1-based image arrays.  Relative paths that do not exist
    as given are looked up in the bundled data directory.
    """
    p = Path(path)
    if not p.exists():
        candidate = data_dir() / p
        if candidate.exists():
            p = candidate
    try:
        payload = json.loads(p.read_text())
    except FileNotFoundError:
        raise DomainError(f"group file not found: {path}") from None
    except json.JSONDecodeError as exc:
        raise DomainError(f"group file {path}: invalid JSON ({exc})") from None
    for key in ("name", "degree", "generators"):
        if key not in payload:
            raise DomainError(f"group file {path}: missing field {key!r}")
    degree = payload["degree"]
    if not isinstance(degree, int) or degree < 1:
        raise DomainError(f"group file {path}: bad degree {degree!r}")
    gens = []
    for idx, arr in enumerate(payload["generators"]):
        if sorted(arr) != list(range(1, degree + 1)):
            raise DomainError(
                f"group file {path}: generator {idx} is not a bijection of 1..{degree}"
            )
        gens.append(Permutation(arr))
    G = bsgs_construct(gens, degree=degree, name=str(payload["name"]))
    G.spec_string = f"file:{path}"
    return G


def build_group(spec: GroupSpec | str) -> PermGroup:
    """Construct the permutation group described by a GroupSpec (or its text form)."""
    if isinstance(spec, str):
        spec = parse_spec(spec)
    if spec.family == "ALT":
        if not ALT_RANGE[0] <= spec.n <= ALT_RANGE[1]:
            raise DomainError(f"alternating degree must be in {ALT_RANGE}, got {spec.n}")
        return _alternating_group(spec.n)
    if spec.family == "SYM":
        if not SYM_RANGE[0] <= spec.n <= SYM_RANGE[1]:
            raise DomainError(f"symmetric degree must be in {SYM_RANGE}, got {spec.n}")
        return _symmetric_group(spec.n)
    if spec.family == "PSL2":
        if not PSL2_RANGE[0] <= spec.q <= PSL2_RANGE[1] or is_prime_power(spec.q) is None:
            raise DomainError(
                f"L2 parameter must be a prime power in {PSL2_RANGE}, got {spec.q}"
            )
        return _psl2_group(spec.q)
    if spec.family == "PSL3":
        if spec.q not in PSL3_VALUES:
            raise DomainError(f"L3 parameter must be one of {PSL3_VALUES}, got {spec.q}")
        if gcd(3, spec.q - 1) != 1:
            raise DomainError(f"L3 needs gcd(3, q-1) = 1, got q = {spec.q}")
        return _psl3_group(spec.q)
    if spec.family == "FILE":
        return load_group_file(spec.path)
    raise DomainError(f"unknown family {spec.family!r}")


def lie_meta(spec: GroupSpec | str) -> LieMeta | None:
    """Dimension, rank and Weyl-group order for the Lie-type families."""
    if isinstance(spec, str):
        spec = parse_spec(spec)
    if spec.family == "PSL2":
        p, _ = is_prime_power(spec.q)
        return LieMeta(dim_G=3, rank=1, weyl_order=2, defining_prime=p, q=spec.q)
    if spec.family == "PSL3":
        p, _ = is_prime_power(spec.q)
        return LieMeta(dim_G=8, rank=2, weyl_order=6, defining_prime=p, q=spec.q)
    return None


def classical_order(spec: GroupSpec) -> int:
    """Textbook order formula for the family; used as a build cross-check."""
    if spec.family == "ALT":
        out = 1
        for i in range(2, spec.n + 1):
            out *= i
        return out // 2
    if spec.family == "SYM":
        out = 1
        for i in range(2, spec.n + 1):
            out *= i
        return out
    if spec.family == "PSL2":
        q = spec.q
        return q * (q * q - 1) // gcd(2, q - 1)
    if spec.family == "PSL3":
        q = spec.q
        return q**3 * (q**3 - 1) * (q**2 - 1) // gcd(3, q - 1)
    raise DomainError("no order formula for FILE specs")
