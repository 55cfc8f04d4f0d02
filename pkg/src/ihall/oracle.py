"""Brute-force enumeration over prime fields.

Nothing here uses the closed formulas of the other modules: modules are
explicit matrices, subspaces are enumerated as reduced row-echelon forms,
morphisms as matrices (or ring elements for cyclic modules), and every count
is a literal count.  The closed forms are then compared against these.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import combinations, product

from .caps import SizeCapExceeded, cap
from .curve import INFINITY, UnsupportedField, enumerate_closed_points, enumerate_cyclic_profiles, is_prime

# ---------------------------------------------------------------------------
# linear algebra over F_p; vectors are tuples, matrices are tuples of rows


def rref(rows, p: int) -> list[list[int]]:
    """Reduced row-echelon basis of the row span."""
    m = [list(r) for r in rows]
    out: list[list[int]] = []
    if not m:
        return out
    ncols = len(m[0])
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][c] % p), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = pow(m[r][c], p - 2, p)
        m[r] = [(x * inv) % p for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] % p:
                f = m[i][c]
                m[i] = [(a - f * b) % p for a, b in zip(m[i], m[r])]
        r += 1
        if r == len(m):
            break
    return [row for row in m[:r]]


def rank(rows, p: int) -> int:
    return len(rref(rows, p))


def mat_vec(mat, x, p: int) -> tuple:
    return tuple(sum(a * b for a, b in zip(row, x)) % p for row in mat)


def mat_mul(a, b, p: int):
    cols = list(zip(*b))
    return tuple(tuple(sum(x * y for x, y in zip(row, col)) % p for col in cols) for row in a)


def transpose(a):
    return tuple(zip(*a))


def nullspace(mat, ncols: int, p: int) -> list[tuple]:
    """Basis of {x : mat x = 0}."""
    red = rref(mat, p) if mat else []
    pivots = []
    for row in red:
        pivots.append(next(i for i, x in enumerate(row) if x))
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        x = [0] * ncols
        x[f] = 1
        for row, pc in zip(red, pivots):
            x[pc] = (-row[f]) % p
        basis.append(tuple(x))
    return basis


def all_subspaces(n: int, p: int):
    """Every subspace of F_p^n exactly once, as an RREF basis."""
    for k in range(n + 1):
        for pivots in combinations(range(n), k):
            slots = [(i, c) for i, pc in enumerate(pivots) for c in range(pc + 1, n) if c not in pivots]
            for vals in product(range(p), repeat=len(slots)):
                rows = [[0] * n for _ in range(k)]
                for i, pc in enumerate(pivots):
                    rows[i][pc] = 1
                for (i, c), x in zip(slots, vals):
                    rows[i][c] = x
                yield [tuple(r) for r in rows]


# ---------------------------------------------------------------------------
# nilpotent modules


def jordan_matrix(lam) -> tuple:
    """t-action on the module of type lam: one shift block per part."""
    n = sum(lam)
    mat = [[0] * n for _ in range(n)]
    start = 0
    for part in lam:
        for j in range(part - 1):
            mat[start + j + 1][start + j] = 1
        start += part
    return tuple(tuple(r) for r in mat)


def _partition_from_conjugate(cols: list[int]) -> tuple:
    cols = [c for c in cols if c]
    if not cols:
        return ()
    return tuple(sum(1 for c in cols if c > i) for i in range(cols[0]))


def subquotient_type(t, w_basis, u_basis, p: int) -> tuple:
    """Jordan type of t acting on W/U (U inside W, both t-stable)."""
    du = rank(u_basis, p) if u_basis else 0
    dims = []
    cur = [tuple(x) for x in w_basis]
    while True:
        d = (rank(cur + list(u_basis), p) if cur or u_basis else 0) - du
        dims.append(d)
        if d == 0:
            break
        cur = [mat_vec(t, x, p) for x in cur]
    return _partition_from_conjugate([dims[k] - dims[k + 1] for k in range(len(dims) - 1)])


def operator_type(t, p: int) -> tuple:
    n = len(t)
    ident = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    return subquotient_type(t, ident, [], p)


def _check_brute_dim(n: int, p: int) -> None:
    limit = {2: cap("brute_dim"), 3: cap("brute_dim") - 1}.get(p, cap("brute_dim") - 2)
    if n > limit:
        raise SizeCapExceeded(f"brute enumeration of dimension {n} over F_{p} exceeds cap {limit}")


@lru_cache(maxsize=None)
def brute_hall_table(lam: tuple, p: int) -> dict:
    """{(mu, nu): number of t-stable U of type nu with quotient of type mu}."""
    n = sum(lam)
    _check_brute_dim(n, p)
    t = jordan_matrix(lam)
    ident = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    out: dict = {}
    for basis in all_subspaces(n, p):
        k = len(basis)
        images = [mat_vec(t, b, p) for b in basis]
        if k and rank(basis + images, p) != k:
            continue
        nu = subquotient_type(t, basis, [], p)
        mu = subquotient_type(t, ident, basis, p)
        out[(mu, nu)] = out.get((mu, nu), 0) + 1
    return out


def brute_hall_number(lam, mu, nu, p: int) -> int:
    return brute_hall_table(tuple(lam), p).get((tuple(mu), tuple(nu)), 0)


def _commuting_maps(lam, mu, p: int) -> list[tuple]:
    """Basis of {X : T_mu X = X T_lam} (X is |mu| x |lam|, flattened row-major)."""
    a, b = sum(lam), sum(mu)
    tl, tm = jordan_matrix(lam), jordan_matrix(mu)
    eqs = []
    for i in range(b):
        for j in range(a):
            row = [0] * (a * b)
            for k in range(b):
                row[k * a + j] += tm[i][k]
            for k in range(a):
                row[i * a + k] -= tl[k][j]
            eqs.append([x % p for x in row])
    return nullspace(eqs, a * b, p)


def _enumerate_span(basis, length: int, p: int, limit: int = 1 << 14):
    if p ** len(basis) > limit:
        raise SizeCapExceeded(f"{p}^{len(basis)} maps exceed enumeration limit")
    for coeffs in product(range(p), repeat=len(basis)):
        yield tuple(sum(c * v[i] for c, v in zip(coeffs, basis)) % p for i in range(length))


def _as_matrix(flat, rows: int, cols: int):
    return tuple(tuple(flat[i * cols:(i + 1) * cols]) for i in range(rows))


def brute_hom(lam, mu, p: int) -> int:
    """Count every |mu| x |lam| matrix commuting with the t-actions."""
    a, b = sum(lam), sum(mu)
    if p ** (a * b) > (1 << 13):
        raise SizeCapExceeded("hom enumeration too large")
    tl, tm = jordan_matrix(lam), jordan_matrix(mu)
    count = 0
    for flat in product(range(p), repeat=a * b):
        x = _as_matrix(flat, b, a)
        if a == 0 or b == 0 or mat_mul(tm, x, p) == mat_mul(x, tl, p):
            count += 1
    return count


def brute_aut(lam, p: int) -> int:
    n = sum(lam)
    if n == 0:
        return 1
    count = 0
    for flat in _enumerate_span(_commuting_maps(lam, lam, p), n * n, p):
        if rank(_as_matrix(flat, n, n), p) == n:
            count += 1
    return count


def brute_mono_count(iota, lam, p: int) -> int:
    a, b = sum(iota), sum(lam)
    if a == 0:
        return 1
    count = 0
    for flat in _enumerate_span(_commuting_maps(iota, lam, p), a * b, p):
        if rank(transpose(_as_matrix(flat, b, a)), p) == a:
            count += 1
    return count


def brute_epi_from_line(c: int, p: int) -> int:
    """Generators of the cyclic module F_p[t]/t^c (images of a local section)."""
    t = jordan_matrix((c,))
    count = 0
    for x in product(range(p), repeat=c):
        span, cur = [], tuple(x)
        for _ in range(c):
            span.append(cur)
            cur = mat_vec(t, cur, p)
        if rank(span, p) == c:
            count += 1
    return count


# ---------------------------------------------------------------------------
# the 1-periodic (ε^2 = 0) extension oracle for the Jordan quiver


def brute_c1_product(lam, mu, p: int) -> dict:
    """[C_lam] * [C_mu] as {(nu, a): coefficient}.

    Every extension of the stalk complex of lam by that of mu is
    V = M_mu + M_lam with t = [[T_mu, c], [0, T_lam]] and
    eps = [[0, g], [0, 0]], where c is any linear map and g any module map
    (that is exactly the condition t*eps = eps*t).  Cocycles (c, g) counted
    over all c and g, divided by the number of c, give
    |Ext^1_L| / |Hom| per middle term L; L reduces to (ker eps / im eps, rank eps).
    """
    lam, mu = tuple(lam), tuple(mu)
    a, b = sum(lam), sum(mu)
    limit = {2: cap("brute_c1"), 3: cap("brute_c1") - 1}.get(p, 2)
    if a + b > limit:
        raise SizeCapExceeded(f"|lam|+|mu| = {a + b} exceeds 1-periodic oracle cap {limit} at p={p}")
    n = a + b
    tl, tm = jordan_matrix(lam), jordan_matrix(mu)
    homs = [_as_matrix(f, b, a) for f in _enumerate_span(_commuting_maps(lam, mu, p), a * b, p)] if a and b else [()]
    tally: dict = {}
    n_c = 0
    for cflat in product(range(p), repeat=a * b):
        n_c += 1
        c = _as_matrix(cflat, b, a)
        t = [[0] * n for _ in range(n)]
        for i in range(b):
            for j in range(b):
                t[i][j] = tm[i][j]
            for j in range(a):
                t[i][b + j] = c[i][j]
        for i in range(a):
            for j in range(a):
                t[b + i][b + j] = tl[i][j]
        t = tuple(tuple(r) for r in t)
        for g in homs:
            eps = [[0] * n for _ in range(n)]
            for i in range(b):
                for j in range(a):
                    eps[i][b + j] = g[i][j]
            eps = tuple(tuple(r) for r in eps)
            cols = transpose(eps)
            image = rref(cols, p)
            kernel = nullspace(eps, n, p)
            nu = subquotient_type(t, kernel, image, p)
            key = (nu, len(image))
            tally[key] = tally.get(key, 0) + 1
    return {k: Fraction(cnt, n_c) for k, cnt in sorted(tally.items())}


# ---------------------------------------------------------------------------
# explicit torsion sheaves at closed points


def _pmul(f, g, p):
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        for j, b in enumerate(g):
            out[i + j] = (out[i + j] + a * b) % p
    return out


def _pmod(a, f, p):
    """a mod monic f, padded to length deg f."""
    a = list(a)
    d = len(f) - 1
    for i in range(len(a) - 1, d - 1, -1):
        c = a[i]
        if c:
            for j in range(d + 1):
                a[i - d + j] = (a[i - d + j] - c * f[j]) % p
    a = (a + [0] * d)[:d]
    return tuple(x % p for x in a)


class LocalModule:
    """F_p[X]/(f^n) for a monic irreducible f: the torsion sheaf S_x^{(n)}."""

    def __init__(self, f, n: int, p: int):
        self.p = p
        self.n = n
        fn = [1]
        for _ in range(n):
            fn = _pmul(fn, list(f), p)
        self.modulus = tuple(fn)
        self.f = tuple(f)
        self.dim = len(fn) - 1

    def elements(self):
        return product(range(self.p), repeat=self.dim)

    def mul(self, a, b):
        return _pmod(_pmul(list(a), list(b), self.p), self.modulus, self.p) if self.dim else ()

    def x_power_span(self, e):
        """F_p-span of the submodule generated by e."""
        out, cur = [], tuple(e)
        xpoly = (0, 1)
        for _ in range(self.dim):
            out.append(cur)
            cur = self.mul(cur, xpoly)
        return out

    def embed_images(self, source: "LocalModule", g):
        """Images of the F_p-basis of source under 1 -> g (a module map if f^{n'} g = 0)."""
        out = []
        for i in range(source.dim):
            mono = tuple(int(j == i) for j in range(i + 1))
            out.append(self.mul(mono, g))
        return out


def _local_data(data, p):
    return (0, 1) if data == INFINITY else data


@lru_cache(maxsize=None)
def _pair_count(f, n: int, m: int, p: int) -> int:
    """#{(e, g)}: e in M_m, g: M_n -> M_m injective module map, e and im g span M_m."""
    target = LocalModule(f, m, p)
    if m == 0:
        return 1 if n == 0 else 0
    source = LocalModule(f, n, p)
    maps = []
    if n == 0:
        maps = [[]]
    else:
        for g in target.elements():
            if not any(target.mul(source.modulus, g)):
                imgs = target.embed_images(source, g)
                if rank(imgs, p) == source.dim:
                    maps.append(imgs)
    count = 0
    for e in target.elements():
        span = target.x_power_span(e)
        for imgs in maps:
            if rank(span + imgs, p) == target.dim:
                count += 1
    return count


@lru_cache(maxsize=None)
def _unit_count(f, n: int, p: int) -> int:
    """|Aut S_x^{(n)}|: elements acting invertibly on F_p[X]/(f^n)."""
    if n == 0:
        return 1
    mod = LocalModule(f, n, p)
    basis = [tuple(int(j == i) for j in range(i + 1)) for i in range(mod.dim)]
    return sum(1 for g in mod.elements() if rank([mod.mul(b, g) for b in basis], p) == mod.dim)


def brute_ext_middle_bundle(p: int, m: int) -> dict:
    """{(a, n-profile): sum over ||mprof||=m of |Ext^1(S_mprof, O(r))_{O(r+a)+S_n}|}.

    The count for one mprof is #{surjections O(r+a)+S_n -> S_mprof with line
    bundle kernel} / (|Aut S_n| * p^{||n||}), the surjections being counted
    point by point from explicit modules over F_p[X]/(f^k).
    """
    if not is_prime(p):
        raise UnsupportedField(f"oracle needs a prime field, got {p}")
    points = dict(enumerate_closed_points(p, m))
    out: dict = {}
    for a in range(1, m + 1):
        for nprof in enumerate_cyclic_profiles(p, m - a):
            nmap = dict(nprof)
            denom = p ** (m - a)
            for x, k in nprof:
                denom *= _unit_count(_local_data(points[x], p), k, p)
            total = Fraction(0)
            for lprof in enumerate_cyclic_profiles(p, a):
                mmap = dict(nmap)
                for x, k in lprof:
                    mmap[x] = mmap.get(x, 0) + k
                count = 1
                for x, mk in mmap.items():
                    count *= _pair_count(_local_data(points[x], p), nmap.get(x, 0), mk, p)
                total += Fraction(count, denom)
            out[(a, nprof)] = total
    return out


# ---------------------------------------------------------------------------
# binary forms


def _divide_out(poly, f, p):
    """Return (quotient, True) if monic f divides poly over F_p, else (poly, False)."""
    a = list(poly)
    d = len(f) - 1
    if len(a) - 1 < d:
        return poly, False
    quot = [0] * (len(a) - d)
    for i in range(len(a) - 1, d - 1, -1):
        c = a[i] % p
        quot[i - d] = c
        if c:
            for j in range(d + 1):
                a[i - d + j] = (a[i - d + j] - c * f[j]) % p
    if any(x % p for x in a[:d]):
        return poly, False
    return tuple(quot), True


def factor_binary_form(coeffs, p: int, points) -> tuple:
    """Cokernel profile of a nonzero binary form sum c_i X1^i X0^{m-i}.

    The multiplicity of infinity is m - deg_X1; the rest is the factorization of
    the dehomogenized polynomial into monic irreducibles.
    """
    m = len(coeffs) - 1
    poly = list(coeffs)
    while poly and poly[-1] % p == 0:
        poly.pop()
    prof: dict = {}
    deg = len(poly) - 1
    if m - deg:
        prof[next(x for x, dat in points if dat == INFINITY)] = m - deg
    inv = pow(poly[-1], p - 2, p)
    cur = tuple((c * inv) % p for c in poly)
    for x, dat in points:
        if dat == INFINITY:
            continue
        while len(cur) > 1:
            nxt, ok = _divide_out(cur, dat, p)
            if not ok:
                break
            cur = nxt
            prof[x] = prof.get(x, 0) + 1
    if len(cur) != 1:
        raise ArithmeticError("incomplete factorization")
    return tuple(sorted(prof.items()))


def binary_form_census(p: int, m: int) -> dict:
    """Histogram {cokernel profile: number of nonzero degree-m forms}."""
    if not is_prime(p):
        raise UnsupportedField(f"oracle needs a prime field, got {p}")
    if m > 6:
        raise SizeCapExceeded("binary form census limited to m <= 6")
    points = enumerate_closed_points(p, max(m, 1))
    hist: dict = {}
    for coeffs in product(range(p), repeat=m + 1):
        if not any(coeffs):
            continue
        prof = factor_binary_form(coeffs, p, points)
        hist[prof] = hist.get(prof, 0) + 1
    return hist
