"""Exact character tables through the Dixon-Schneider method.

Class-multiplication matrices are split into common eigenspaces over a prime
field F_p with p = 1 (mod exponent), p > 2*sqrt(|G|); eigenvalue data then
lifts to exact cyclotomic character values through the discrete Fourier sum
over power classes.  No floating point enters the construction.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from math import gcd

from .cyclotomic import Conductor, Cyclo
from .numtheory import factorize, is_prime
from .permgroup import CapacityError, ClassData, PermGroup

MAX_CLASSES = 60
MAX_ORDER = 10_000_000


class TableError(RuntimeError):
    """Internal inconsistency detected while building or using a table."""


# ---------------------------------------------------------------------------
# arithmetic mod p


def _dixon_prime(order: int, exponent: int) -> int:
    root = math.isqrt(order)
    if root * root < order:
        root += 1
    p = max(2 * root + 1, 3)
    p += (exponent - (p - 1) % exponent) % exponent
    for _ in range(100_000):
        if is_prime(p):
            return p
        p += exponent
    raise TableError(f"no Dixon prime found for order {order}, exponent {exponent}")


def _primitive_root(p: int) -> int:
    phi_factors = list(factorize(p - 1))
    for w in range(2, p):
        if all(pow(w, (p - 1) // r, p) != 1 for r in phi_factors):
            return w
    raise TableError(f"no primitive root mod {p}")


def _sqrt_mod(a: int, p: int) -> int:
    """A square root of a mod p (Tonelli-Shanks); a must be a QR."""
    a %= p
    if a == 0:
        return 0
    if pow(a, (p - 1) // 2, p) != 1:
        raise TableError(f"{a} is not a square mod {p}")
    if p % 4 == 3:
        return pow(a, (p + 1) // 4, p)
    q, s = p - 1, 0
    while q % 2 == 0:
        q //= 2
        s += 1
    z = 2
    while pow(z, (p - 1) // 2, p) == 1:
        z += 1
    m, c, t, r = s, pow(z, q, p), pow(a, q, p), pow(a, (q + 1) // 2, p)
    while t != 1:
        i, t2 = 0, t
        while t2 != 1:
            t2 = t2 * t2 % p
            i += 1
        b = pow(c, 1 << (m - i - 1), p)
        m, c = i, b * b % p
        t, r = t * c % p, r * b % p
    return r


# polynomials over F_p: ascending coefficient lists


def _poly_trim(f: list[int]) -> list[int]:
    while len(f) > 1 and f[-1] == 0:
        f.pop()
    return f


def _poly_divmod(f: list[int], g: list[int], p: int) -> tuple[list[int], list[int]]:
    f = list(f)
    dg = len(g) - 1
    inv = pow(g[-1], -1, p)
    q = [0] * max(1, len(f) - dg)
    for i in range(len(f) - 1, dg - 1, -1):
        c = f[i] * inv % p
        if c:
            q[i - dg] = c
            for j, gj in enumerate(g):
                f[i - dg + j] = (f[i - dg + j] - c * gj) % p
    return _poly_trim(q), _poly_trim(f)


def _poly_mulmod(a: list[int], b: list[int], mod: list[int], p: int) -> list[int]:
    prod = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                prod[i + j] = (prod[i + j] + x * y) % p
    return _poly_divmod(prod, mod, p)[1]


def _poly_powmod(base: list[int], e: int, mod: list[int], p: int) -> list[int]:
    result = [1]
    base = _poly_divmod(base, mod, p)[1]
    while e:
        if e & 1:
            result = _poly_mulmod(result, base, mod, p)
        base = _poly_mulmod(base, base, mod, p)
        e >>= 1
    return result


def _poly_gcd(a: list[int], b: list[int], p: int) -> list[int]:
    a, b = _poly_trim(list(a)), _poly_trim(list(b))
    while b != [0]:
        a, b = b, _poly_divmod(a, b, p)[1]
    if a[-1] != 1:
        inv = pow(a[-1], -1, p)
        a = [c * inv % p for c in a]
    return a


def _poly_roots(f: list[int], p: int) -> list[int]:
    """Distinct roots in F_p of a polynomial that splits into linear factors."""
    f = _poly_trim(list(f))
    xp_minus_x = _poly_powmod([0, 1], p, f, p)
    xp_minus_x = _poly_trim([(c - (1 if i == 1 else 0)) % p for i, c in enumerate(xp_minus_x + [0, 0])])
    g = _poly_gcd(f, xp_minus_x, p)
    roots: list[int] = []
    stack = [g]
    shift = 0
    while stack:
        h = stack.pop()
        if len(h) == 1:
            continue
        if len(h) == 2:
            roots.append(-h[0] * pow(h[1], -1, p) % p)
            continue
        split = None
        while split is None:
            # gcd with (x + shift)^((p-1)/2) - 1 peels off half the roots
            w = _poly_powmod([shift % p, 1], (p - 1) // 2, h, p)
            w = _poly_trim([(c - (1 if i == 0 else 0)) % p for i, c in enumerate(w + [0])])
            shift += 1
            d = _poly_gcd(h, w, p)
            if 0 < len(d) - 1 < len(h) - 1:
                split = d
        stack.append(split)
        stack.append(_poly_divmod(h, split, p)[0])
    return sorted(roots)


def _charpoly(M: list[list[int]], p: int) -> list[int]:
    """Characteristic polynomial mod p via Hessenberg reduction."""
    n = len(M)
    H = [row[:] for row in M]
    for j in range(n - 2):
        piv = next((i for i in range(j + 1, n) if H[i][j]), None)
        if piv is None:
            continue
        if piv != j + 1:
            H[piv], H[j + 1] = H[j + 1], H[piv]
            for row in H:
                row[piv], row[j + 1] = row[j + 1], row[piv]
        inv = pow(H[j + 1][j], -1, p)
        for i in range(j + 2, n):
            if H[i][j]:
                t = H[i][j] * inv % p
                Hj1 = H[j + 1]
                Hi = H[i]
                for k in range(j, n):
                    Hi[k] = (Hi[k] - t * Hj1[k]) % p
                for row in H:
                    row[j + 1] = (row[j + 1] + t * row[i]) % p
    # c_k(x) over leading blocks
    polys = [[1]]
    for k in range(1, n + 1):
        term = [(-H[k - 1][k - 1]) % p, 1]
        ck = _poly_mul(term, polys[k - 1], p)
        prod_sub = 1
        for i in range(k - 1, 0, -1):
            prod_sub = prod_sub * H[i][i - 1] % p
            coef = H[i - 1][k - 1] * prod_sub % p
            if coef:
                ck = _poly_sub(ck, _poly_scale(polys[i - 1], coef, p), p)
        polys.append(ck)
    return polys[n]


def _poly_mul(a: list[int], b: list[int], p: int) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return out


def _poly_sub(a: list[int], b: list[int], p: int) -> list[int]:
    n = max(len(a), len(b))
    a = a + [0] * (n - len(a))
    b = b + [0] * (n - len(b))
    return [(x - y) % p for x, y in zip(a, b)]


def _poly_scale(a: list[int], c: int, p: int) -> list[int]:
    return [x * c % p for x in a]


def _rref(rows: list[list[int]], p: int) -> tuple[list[list[int]], list[int]]:
    rows = [row[:] for row in rows]
    pivots: list[int] = []
    r = 0
    ncols = len(rows[0]) if rows else 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(rows)) if rows[i][c]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = pow(rows[r][c], -1, p)
        rows[r] = [x * inv % p for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                t = rows[i][c]
                rows[i] = [(x - t * y) % p for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows[:r], pivots


def _nullspace(M: list[list[int]], p: int) -> list[list[int]]:
    """Row basis of the right nullspace {v : M v = 0}."""
    n = len(M)
    R, pivots = _rref(M, p)
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for fc in free:
        v = [0] * n
        v[fc] = 1
        for r, pc in enumerate(pivots):
            v[pc] = (-R[r][fc]) % p
        basis.append(v)
    return basis


# ---------------------------------------------------------------------------
# table construction


@dataclass
class CharacterTable:
    """Exact irreducible character table with class and character indexing."""

    group_name: str
    group_order: int
    class_labels: list[str]
    class_sizes: list[int]
    class_orders: list[int]
    inverse_map: list[int]
    power_rows: list[tuple[int, ...]]
    conductor: int
    prime: int
    primitive_root: int
    zeta_mod_p: int
    degrees: list[int]
    rows: list[list[Cyclo]]

    def index_of(self, label: str) -> int:
        try:
            return self.class_labels.index(label)
        except ValueError:
            raise KeyError(f"unknown class label {label!r}") from None

    def value(self, char_index: int, label: str) -> Cyclo:
        return self.rows[char_index][self.index_of(label)]

    def centralizer_orders(self) -> list[int]:
        return [self.group_order // s for s in self.class_sizes]

    def to_json_dict(self) -> dict:
        return {
            "group": self.group_name,
            "order": self.group_order,
            "classes": self.class_labels,
            "class_sizes": self.class_sizes,
            "element_orders": self.class_orders,
            "conductor": self.conductor,
            "dixon_prime": self.prime,
            "primitive_root": self.primitive_root,
            "zeta_image_mod_p": self.zeta_mod_p,
            "degrees": self.degrees,
            "characters": [[v.to_json_dict() for v in row] for row in self.rows],
        }


def class_matrix(classdata: ClassData, i: int) -> list[list[int]]:
    """Matrix A with A[j][l] = #{(x, y) in C_i x C_j : x*y = z_l} for fixed z_l."""
    classes = classdata.classes
    cmap = classdata.class_map
    k = len(classes)
    reps = [c.representative for c in classes]
    A = [[0] * k for _ in range(k)]
    for x in cmap.elements_of(i):
        x_inv = x.inverse()
        for l in range(k):
            j = cmap.class_of(x_inv * reps[l])
            A[j][l] += 1
    return A


def class_mult_coefficient(G: PermGroup, ci: str, cj: str, ck: str) -> int:
    """a_ijk = #{(x, y) in C_i x C_j with xy = z} for a fixed z in C_k."""
    cd = G.conjugacy_data()
    cmap = cd.class_map
    i, j, k = (cd.by_label(lbl).index for lbl in (ci, cj, ck))
    z = cd.classes[k].representative
    if cd.classes[i].size <= cd.classes[j].size:
        return sum(1 for x in cmap.elements_of(i) if cmap.class_of(x.inverse() * z) == j)
    return sum(1 for y in cmap.elements_of(j) if cmap.class_of(z * y.inverse()) == i)


def character_table(G: PermGroup) -> CharacterTable:
    """Exact irreducible character table of G (Dixon-Schneider)."""
    if G.order > MAX_ORDER:
        raise CapacityError(f"character table needs order <= {MAX_ORDER}, got {G.order}")
    cd = G.conjugacy_data()
    classes = cd.classes
    k = len(classes)
    if k > MAX_CLASSES:
        raise CapacityError(f"character table needs <= {MAX_CLASSES} classes, got {k}")
    if cd.class_map.mode != "FULL":
        raise CapacityError(
            "character table needs a FULL class map "
            f"(group order {G.order} exceeds the full-enumeration bound)"
        )

    exponent = 1
    for c in classes:
        exponent = exponent * c.element_order // gcd(exponent, c.element_order)
    p = _dixon_prime(G.order, exponent)
    w = _primitive_root(p)
    z = pow(w, (p - 1) // exponent, p)

    # split the common eigenspaces of the class-multiplication matrices
    spaces: list[tuple[list[list[int]], list[int]]] = [
        ([[1 if i == j else 0 for j in range(k)] for i in range(k)], list(range(k)))
    ]
    for i in range(k):
        if all(len(B) == 1 for B, _ in spaces):
            break
        A = class_matrix(cd, i)
        new_spaces: list[tuple[list[list[int]], list[int]]] = []
        for B, piv in spaces:
            d = len(B)
            if d == 1:
                new_spaces.append((B, piv))
                continue
            images = [
                [sum(A[j][l] * b[l] for l in range(k)) % p for j in range(k)] for b in B
            ]
            R = [[images[r][piv[s]] for s in range(d)] for r in range(d)]
            # transpose: eigen-coordinates act through R^T on coefficient vectors
            Rt = [[R[s][r] for s in range(d)] for r in range(d)]
            roots = _poly_roots(_charpoly(Rt, p), p)
            if len(roots) == 1:
                new_spaces.append((B, piv))
                continue
            for lam in roots:
                shifted = [
                    [(Rt[r][s] - (lam if r == s else 0)) % p for s in range(d)]
                    for r in range(d)
                ]
                lifted_rows = [
                    [sum(w_vec[r] * B[r][c] for r in range(d)) % p for c in range(k)]
                    for w_vec in _nullspace(shifted, p)
                ]
                new_spaces.append(_rref(lifted_rows, p))
        spaces = new_spaces
    if not all(len(B) == 1 for B, _ in spaces) or len(spaces) != k:
        raise TableError("class matrices failed to split the class algebra")

    # eigenvector coordinates are the central character values omega mod p
    size_inv = [pow(c.size, -1, p) for c in classes]
    inverse_map = [_index_of_label(classes, c.inverse_class) for c in classes]
    columns = []
    for B, _ in spaces:
        v = B[0]
        v0_inv = pow(v[0], -1, p)
        columns.append([x * v0_inv % p for x in v])

    table_mod_p = []
    degrees = []
    for u in columns:
        s = sum(u[l] * u[inverse_map[l]] * size_inv[l] for l in range(k)) % p
        d2 = G.order * pow(s, -1, p) % p
        d = _sqrt_mod(d2, p)
        d = min(d, p - d)
        degrees.append(d)
        table_mod_p.append([d * u[l] * size_inv[l] % p for l in range(k)])
    if sum(d * d for d in degrees) != G.order:
        raise TableError("degree reconstruction failed (sum of squares mismatch)")

    # lift to exact cyclotomic values through the power-class Fourier sum
    power_rows = [c.power_row for c in classes]
    rows_exact: list[list[Cyclo]] = []
    for chi_idx in range(k):
        tvals = table_mod_p[chi_idx]
        row: list[Cyclo] = []
        for l in range(k):
            m = classes[l].element_order
            lam = pow(z, exponent // m, p)
            lam_pows = [1] * m
            for t in range(1, m):
                lam_pows[t] = lam_pows[t - 1] * lam % p
            lam_inv_pows = [lam_pows[(m - t) % m] for t in range(m)]
            m_inv = pow(m, -1, p)
            coeffs = {}
            for r in range(m):
                mu = sum(tvals[power_rows[l][s]] * lam_inv_pows[r * s % m] for s in range(m))
                mu = mu * m_inv % p
                if mu > degrees[chi_idx]:
                    raise TableError(
                        f"character lift out of range (class {classes[l].label})"
                    )
                if mu:
                    coeffs[r * (exponent // m) % exponent] = mu
            row.append(Cyclo(exponent, coeffs))
        rows_exact.append(row)

    order_key = sorted(
        range(k), key=lambda i: (degrees[i], [v.sort_key() for v in rows_exact[i]])
    )
    degrees = [degrees[i] for i in order_key]
    rows_exact = [rows_exact[i] for i in order_key]

    return CharacterTable(
        group_name=G.name or f"degree-{G.degree} group",
        group_order=G.order,
        class_labels=[c.label for c in classes],
        class_sizes=[c.size for c in classes],
        class_orders=[c.element_order for c in classes],
        inverse_map=inverse_map,
        power_rows=power_rows,
        conductor=exponent,
        prime=p,
        primitive_root=w,
        zeta_mod_p=z,
        degrees=degrees,
        rows=rows_exact,
    )


def _index_of_label(classes, label: str) -> int:
    for c in classes:
        if c.label == label:
            return c.index
    raise KeyError(label)


# ---------------------------------------------------------------------------
# verification


def _conj_coeffs(value: Cyclo, cond: Conductor) -> dict:
    raw = {}
    n = cond.n
    for j, c in value.coeffs.items():
        raw[(n - j) % n] = raw.get((n - j) % n, 0) + c
    return cond.reduce_raw(raw)


def verify_orthogonality(T: CharacterTable) -> bool:
    """Both orthogonality relations, checked exactly in cyclotomic arithmetic."""
    k = len(T.class_labels)
    cond = Conductor(T.conductor)
    n = T.conductor
    vals = [[v.coeffs for v in row] for row in T.rows]
    conj = [[_conj_coeffs(v, cond) for v in row] for row in T.rows]

    for i in range(k):
        for j in range(i, k):
            raw: dict[int, object] = {}
            for l in range(k):
                size = T.class_sizes[l]
                for e1, c1 in vals[i][l].items():
                    for e2, c2 in conj[j][l].items():
                        key = (e1 + e2) % n
                        raw[key] = raw.get(key, 0) + size * c1 * c2
            reduced = cond.reduce_raw(raw)
            expected = {0: T.group_order} if i == j else {}
            if reduced != expected:
                return False

    cent = T.centralizer_orders()
    for a in range(k):
        for b in range(a, k):
            raw = {}
            for i in range(k):
                for e1, c1 in vals[i][a].items():
                    for e2, c2 in conj[i][b].items():
                        key = (e1 + e2) % n
                        raw[key] = raw.get(key, 0) + c1 * c2
            reduced = cond.reduce_raw(raw)
            expected = {0: cent[a]} if a == b else {}
            if reduced != expected:
                return False
    return True
