"""Integer lattices with symmetric bilinear forms.

Construction of named lattices, Smith and Hermite normal forms with
transformation matrices (re-verified on every call), discriminant groups
with their Q/2Z-valued quadratic forms, even overlattices from glue
vectors, orthogonal complements, and reflection isometries.

Vector convention: lattice vectors are row coordinate lists; an isometry is
a matrix whose i-th row is the image of the i-th basis vector, so it acts by
v -> v·M and preserves the form iff M·G·M^T = G.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache, reduce
from math import gcd
from typing import Iterable, Optional, Sequence

IntMatrix = list[list[int]]


def _as_int_matrix(m: Iterable[Iterable]) -> IntMatrix:
    return [[int(x) for x in row] for row in m]


def mat_mul(a: Sequence[Sequence], b: Sequence[Sequence]) -> list[list]:
    bt = list(zip(*b))
    return [[sum(x * y for x, y in zip(row, col)) for col in bt] for row in a]


def mat_identity(n: int) -> IntMatrix:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def mat_transpose(a: Sequence[Sequence]) -> list[list]:
    return [list(col) for col in zip(*a)]


def det_bareiss(m: Iterable[Iterable[int]]) -> int:
    """Exact determinant of an integer matrix by fraction-free elimination."""
    a = _as_int_matrix(m)
    n = len(a)
    if n == 0:
        return 1
    if any(len(r) != n for r in a):
        raise ValueError("determinant needs a square matrix")
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            pivot = next((r for r in range(k + 1, n) if a[r][k]), None)
            if pivot is None:
                return 0
            a[k], a[pivot] = a[pivot], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[k][k] * a[i][j] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


# -- Hermite and Smith normal forms -----------------------------------------


def hermite_normal_form(m: Iterable[Iterable[int]]) -> tuple[IntMatrix, IntMatrix]:
    """Row-style HNF: returns (H, U) with U·m = H, U unimodular.

    H is in row echelon form with positive pivots and entries above each
    pivot reduced into [0, pivot).  Zero rows sink to the bottom.
    """
    h = _as_int_matrix(m)
    rows = len(h)
    cols = len(h[0]) if rows else 0
    u = mat_identity(rows)
    row = 0
    for col in range(cols):
        if row == rows:
            break
        # clear below using gcd steps
        while True:
            nz = [r for r in range(row, rows) if h[r][col]]
            if not nz:
                break
            pivot = min(nz, key=lambda r: abs(h[r][col]))
            if pivot != row:
                h[row], h[pivot] = h[pivot], h[row]
                u[row], u[pivot] = u[pivot], u[row]
            done = True
            for r in range(row + 1, rows):
                if h[r][col]:
                    q = h[r][col] // h[row][col]
                    h[r] = [x - q * y for x, y in zip(h[r], h[row])]
                    u[r] = [x - q * y for x, y in zip(u[r], u[row])]
                    if h[r][col]:
                        done = False
            if done:
                break
        if h[row][col]:
            if h[row][col] < 0:
                h[row] = [-x for x in h[row]]
                u[row] = [-x for x in u[row]]
            for r in range(row):
                q = h[r][col] // h[row][col]
                if q:
                    h[r] = [x - q * y for x, y in zip(h[r], h[row])]
                    u[r] = [x - q * y for x, y in zip(u[r], u[row])]
            row += 1
    assert mat_mul(u, _as_int_matrix(m)) == h
    return h, u


def smith_normal_form(
    m: Iterable[Iterable[int]],
) -> tuple[IntMatrix, IntMatrix, IntMatrix]:
    """Smith normal form: (D, U, V) with U·m·V = D, d1 | d2 | ... >= 0.

    U and V are unimodular; the identity U·m·V = D, the divisibility chain,
    and unimodularity are re-verified before returning.  Diagonalization
    sweeps alternate with divisibility fix-ups until the chain stabilizes.
    """
    original = _as_int_matrix(m)
    a = [row[:] for row in original]
    rows, cols = len(a), len(a[0]) if a else 0
    u = mat_identity(rows)
    v = mat_identity(cols)
    while True:
        d1, u1, v1 = _snf_once(a)
        u = mat_mul(u1, u)
        v = mat_mul(v, v1)
        a = d1
        progress = False
        for k in range(min(rows, cols) - 1):
            if a[k][k] and a[k + 1][k + 1] % a[k][k]:
                a[k] = [x + y for x, y in zip(a[k], a[k + 1])]
                u[k] = [x + y for x, y in zip(u[k], u[k + 1])]
                progress = True
        if not progress:
            break
    check = mat_mul(mat_mul(u, original), v)
    assert check == a, "SNF verification failed"
    diag = [a[i][i] for i in range(min(rows, cols))]
    for i in range(len(diag) - 1):
        assert diag[i] >= 0
        assert diag[i + 1] % diag[i] == 0 if diag[i] else diag[i + 1] == 0
    assert abs(det_bareiss(u)) == 1 and abs(det_bareiss(v)) == 1
    return a, u, v


def _snf_once(m):
    """One diagonalization sweep without the divisibility fix-up."""
    a = _as_int_matrix(m)
    rows, cols = len(a), len(a[0]) if a else 0
    u = mat_identity(rows)
    v = mat_identity(cols)
    n = min(rows, cols)
    for k in range(n):
        pivot = None
        for i in range(k, rows):
            for j in range(k, cols):
                if a[i][j] and (pivot is None or abs(a[i][j]) < abs(a[pivot[0]][pivot[1]])):
                    pivot = (i, j)
        if pivot is None:
            break
        a[k], a[pivot[0]] = a[pivot[0]], a[k]
        u[k], u[pivot[0]] = u[pivot[0]], u[k]
        for r in range(rows):
            a[r][k], a[r][pivot[1]] = a[r][pivot[1]], a[r][k]
        for r in range(cols):
            v[r][k], v[r][pivot[1]] = v[r][pivot[1]], v[r][k]
        while True:
            for i in range(k + 1, rows):
                if a[i][k]:
                    q = a[i][k] // a[k][k]
                    a[i] = [x - q * y for x, y in zip(a[i], a[k])]
                    u[i] = [x - q * y for x, y in zip(u[i], u[k])]
            nz = [i for i in range(k + 1, rows) if a[i][k]]
            if nz:
                i = min(nz, key=lambda r: abs(a[r][k]))
                a[k], a[i] = a[i], a[k]
                u[k], u[i] = u[i], u[k]
                continue
            for j in range(k + 1, cols):
                if a[k][j]:
                    q = a[k][j] // a[k][k]
                    for r in range(rows):
                        a[r][j] -= q * a[r][k]
                    for r in range(cols):
                        v[r][j] -= q * v[r][k]
            nz = [j for j in range(k + 1, cols) if a[k][j]]
            if nz:
                j = min(nz, key=lambda c: abs(a[k][c]))
                for r in range(rows):
                    a[r][k], a[r][j] = a[r][j], a[r][k]
                for r in range(cols):
                    v[r][k], v[r][j] = v[r][j], v[r][k]
                continue
            break
        if a[k][k] < 0:
            a[k] = [-x for x in a[k]]
            u[k] = [-x for x in u[k]]
    return a, u, v


# -- lattices ----------------------------------------------------------------


@dataclass(frozen=True)
class IntegerLattice:
    """Basis-free lattice data: a symmetric integer Gram matrix.

    `scale` records a uniform rescaling applied to clear denominators, so the
    underlying rational form is gram/scale.
    """

    gram: tuple[tuple[int, ...], ...]
    basis_labels: tuple[str, ...] | None = None
    scale: int = 1

    def __post_init__(self):
        g = self.gram
        if any(len(r) != len(g) for r in g):
            raise ValueError("Gram matrix must be square")
        if any(g[i][j] != g[j][i] for i in range(len(g)) for j in range(len(g))):
            raise ValueError("Gram matrix must be symmetric")

    @property
    def rank(self) -> int:
        return len(self.gram)

    def det(self) -> int:
        return _det_cached(self.gram)

    def pair(self, v: Sequence, w: Sequence):
        g = self.gram
        n = self.rank
        return sum(Fraction(v[i]) * g[i][j] * Fraction(w[j]) for i in range(n) for j in range(n))

    def norm(self, v: Sequence):
        return self.pair(v, v)

    def is_even(self) -> bool:
        return all(self.gram[i][i] % 2 == 0 for i in range(self.rank))

    def signature(self) -> tuple[int, int]:
        """Exact inertia (n_plus, n_minus) by symmetric Gaussian reduction; cached."""
        return _signature_cached(self.gram)

    def to_jsonable(self) -> dict:
        return {
            "rank": self.rank,
            "gram": [list(r) for r in self.gram],
            "labels": list(self.basis_labels) if self.basis_labels else None,
            "scale": self.scale,
        }


@lru_cache(maxsize=256)
def _det_cached(gram: tuple[tuple[int, ...], ...]) -> int:
    return det_bareiss([list(r) for r in gram])


@lru_cache(maxsize=256)
def _signature_cached(gram: tuple[tuple[int, ...], ...]) -> tuple[int, int]:
    n = len(gram)
    a = [[Fraction(x) for x in row] for row in gram]
    plus = minus = 0
    idx = list(range(n))
    while idx:
        i = next((k for k in idx if a[k][k]), None)
        if i is None:
            # all diagonal zero: find an off-diagonal pair, make a diagonal
            pair = next(((k, l) for k in idx for l in idx if k != l and a[k][l]), None)
            if pair is None:
                break  # zero block: degenerate part
            k, l = pair
            for j in range(n):
                a[k][j] += a[l][j]
            for j in range(n):
                a[j][k] += a[j][l]
            continue
        d = a[i][i]
        if d > 0:
            plus += 1
        else:
            minus += 1
        idx.remove(i)
        for k in idx:
            if a[k][i]:
                f = a[k][i] / d
                for j in range(n):
                    a[k][j] -= f * a[i][j]
                for j in range(n):
                    a[j][k] -= f * a[j][i]
    return plus, minus


def _freeze(m: Iterable[Iterable[int]]) -> tuple[tuple[int, ...], ...]:
    return tuple(tuple(int(x) for x in row) for row in m)


_E8_GRAM = [
    [-2, 1, 0, 0, 0, 0, 0, 0],
    [1, -2, 1, 0, 0, 0, 0, 0],
    [0, 1, -2, 1, 0, 0, 0, 0],
    [0, 0, 1, -2, 1, 0, 0, 0],
    [0, 0, 0, 1, -2, 1, 0, 1],
    [0, 0, 0, 0, 1, -2, 1, 0],
    [0, 0, 0, 0, 0, 1, -2, 0],
    [0, 0, 0, 0, 1, 0, 0, -2],
]

_NAME_RE = re.compile(r"^(U|A1|E8)(?:\((-?\d+)\))?$")


def named_lattice(name: str) -> IntegerLattice:
    """Standard Gram matrices: U, A1, E8 with optional integer scaling, diag(...).

    E8 is taken negative definite.  `diag(d1,...,dk)` builds a diagonal form.
    """
    name = name.strip()
    if name.startswith("diag(") and name.endswith(")"):
        entries = [int(x) for x in name[5:-1].split(",")]
        g = [[entries[i] if i == j else 0 for j in range(len(entries))] for i in range(len(entries))]
        return IntegerLattice(_freeze(g), basis_labels=tuple(f"d{i}" for i in range(len(entries))))
    m = _NAME_RE.match(name)
    if not m:
        raise ValueError(f"unknown lattice name: {name!r}")
    base, scale = m.group(1), int(m.group(2) or 1)
    if base == "U":
        g = [[0, 1], [1, 0]]
    elif base == "A1":
        g = [[-2]]
    else:
        g = _E8_GRAM
    g = [[scale * x for x in row] for row in g]
    return IntegerLattice(_freeze(g), basis_labels=tuple(f"{name}:{i}" for i in range(len(g))))


def direct_sum(*lattices: IntegerLattice) -> IntegerLattice:
    n = sum(l.rank for l in lattices)
    g = [[0] * n for _ in range(n)]
    labels: list[str] = []
    off = 0
    for l in lattices:
        for i in range(l.rank):
            for j in range(l.rank):
                g[off + i][off + j] = l.gram[i][j]
        labels.extend(l.basis_labels or (f"b{off+i}" for i in range(l.rank)))
        off += l.rank
    return IntegerLattice(_freeze(g), basis_labels=tuple(labels))


# -- discriminant groups -----------------------------------------------------


@dataclass(frozen=True)
class FiniteAbelianInvariants:
    """Discriminant group data: invariant factors, generators, and q-values.

    Generators are rational coordinate rows in the lattice basis (elements of
    the dual lattice); q_values are the Q/2Z values of the quadratic form on
    the generators, represented exactly in [0, 2).
    """

    invariant_factors: tuple[int, ...]
    generators: tuple[tuple[Fraction, ...], ...]
    q_values: tuple[Fraction, ...]

    @property
    def order(self) -> int:
        return reduce(lambda a, b: a * b, self.invariant_factors, 1)


def _mod_2z(x: Fraction) -> Fraction:
    num = x.numerator % (2 * x.denominator)
    return Fraction(num, x.denominator)


def discriminant_group(lat: IntegerLattice) -> FiniteAbelianInvariants:
    """Dual quotient L^vee / L from the Smith normal form of the Gram matrix."""
    if lat.det() == 0:
        raise ValueError("degenerate lattice")
    d, u, v = smith_normal_form([list(r) for r in lat.gram])
    n = lat.rank
    gens = []
    qs = []
    factors = []
    for i in range(n):
        di = d[i][i]
        if di <= 1:
            continue
        gen = tuple(Fraction(u[i][j], di) for j in range(n))
        # membership in the dual: pairing with every basis vector is integral
        for j in range(n):
            p = sum(gen[k] * lat.gram[k][j] for k in range(n))
            assert p.denominator == 1, "dual generator check failed"
        factors.append(di)
        gens.append(gen)
        qs.append(_mod_2z(lat.norm(gen)))
    order = reduce(lambda a, b: a * b, factors, 1)
    assert order == abs(lat.det()), "group order must equal |det|"
    return FiniteAbelianInvariants(tuple(factors), tuple(gens), tuple(qs))


def discriminant_q_multiset(lat: IntegerLattice) -> dict[Fraction, int]:
    """Multiset of q-values over all elements of the discriminant group."""
    inv = discriminant_group(lat)
    counts: dict[Fraction, int] = {}
    ranges = [range(f) for f in inv.invariant_factors]
    n = lat.rank
    for combo in itertools.product(*ranges):
        vec = [Fraction(0)] * n
        for c, gen in zip(combo, inv.generators):
            if c:
                vec = [a + c * b for a, b in zip(vec, gen)]
        q = _mod_2z(lat.norm(vec))
        counts[q] = counts.get(q, 0) + 1
    return counts


# -- overlattices ------------------------------------------------------------


@dataclass(frozen=True)
class Overlattice:
    lattice: IntegerLattice
    basis: tuple[tuple[Fraction, ...], ...]  # rows: new basis in old coordinates
    index: int


def overlattice(lat: IntegerLattice, glues: Sequence[Sequence]) -> Overlattice:
    """Even overlattice generated by L and the glue vectors.

    Preconditions checked exactly: every glue vector pairs integrally with L
    and with the other glue vectors, and has even integral norm.  Offending
    vectors/pairs are named in the error.  The new basis is the Hermite
    normal form of the stacked generators, so the output Gram is canonical.
    """
    n = lat.rank
    fr_glues = [[Fraction(x) for x in g] for g in glues]
    for gi, g in enumerate(fr_glues):
        if len(g) != n:
            raise ValueError(f"glue vector {gi} has wrong length")
        for j in range(n):
            basis_vec = [1 if k == j else 0 for k in range(n)]
            p = lat.pair(g, basis_vec)
            if p.denominator != 1:
                raise ValueError(f"glue vector {gi} pairs non-integrally with basis vector {j}")
        nrm = lat.norm(g)
        if nrm.denominator != 1 or nrm.numerator % 2:
            raise ValueError(f"glue vector {gi} has non-even norm {nrm}")
    for i in range(len(fr_glues)):
        for j in range(i + 1, len(fr_glues)):
            p = lat.pair(fr_glues[i], fr_glues[j])
            if p.denominator != 1:
                raise ValueError(f"glue vectors {i} and {j} pair non-integrally")
    den = 1
    for g in fr_glues:
        for x in g:
            den = den * x.denominator // gcd(den, x.denominator)
    stacked = [[den if i == j else 0 for j in range(n)] for i in range(n)]
    stacked += [[int(x * den) for x in g] for g in fr_glues]
    h, _ = hermite_normal_form(stacked)
    basis_rows = [row for row in h[:n]]
    assert all(any(x for x in row) for row in basis_rows), "overlattice basis must have full rank"
    basis = tuple(tuple(Fraction(x, den) for x in row) for row in basis_rows)
    gram = [[lat.pair(basis[i], basis[j]) for j in range(n)] for i in range(n)]
    for i in range(n):
        for j in range(n):
            assert gram[i][j].denominator == 1, "overlattice Gram must be integral"
    gram_int = _freeze([[int(x) for x in row] for row in gram])
    new = IntegerLattice(gram_int, basis_labels=lat.basis_labels)
    index_sq = Fraction(abs(lat.det()), abs(new.det())) if new.det() else None
    assert index_sq is not None and index_sq.denominator == 1
    index = _isqrt_exact(int(index_sq))
    return Overlattice(new, basis, index)


def _isqrt_exact(x: int) -> int:
    r = int(x**0.5)
    while r * r > x:
        r -= 1
    while (r + 1) * (r + 1) <= x:
        r += 1
    assert r * r == x, "index squared must be a perfect square"
    return r


def vector_in_lattice(basis: Sequence[Sequence[Fraction]], v: Sequence) -> Optional[list[int]]:
    """Integer coordinates of v in the given row basis, or None."""
    from .exact import solve_linear

    cols = mat_transpose([list(map(Fraction, row)) for row in basis])
    sol = solve_linear(cols, [Fraction(x) for x in v])
    if sol is None or any(c.denominator != 1 for c in sol):
        return None
    return [int(c) for c in sol]


# -- orthogonal complements --------------------------------------------------


def orthogonal_complement(
    lat: IntegerLattice, vectors: Sequence[Sequence[int]]
) -> tuple[IntegerLattice, list[list[int]]]:
    """Primitive sublattice {v in L : v·s = 0 for all s} with induced Gram.

    Returns (lattice, basis rows in L's coordinates).  The kernel of an
    integer matrix is saturated, so the result is primitive automatically.
    """
    n = lat.rank
    if not vectors:
        return lat, mat_identity(n)
    # rows of constraints: v·G·s = 0  ->  A v^T = 0 with A[s] = (G s^T)^T
    a = []
    for s in vectors:
        col = [sum(lat.gram[i][j] * s[j] for j in range(n)) for i in range(n)]
        a.append(col)
    d, u, v = smith_normal_form(a)
    r = sum(1 for i in range(min(len(a), n)) if d[i][i] != 0)
    # kernel basis: columns of V beyond the rank, as rows in L coordinates
    basis = [[v[i][j] for i in range(n)] for j in range(r, n)]
    gram = [[int(lat.pair(b1, b2)) for b2 in basis] for b1 in basis]
    return IntegerLattice(_freeze(gram)), basis


# -- reflections --------------------------------------------------------------


def reflection_isometry(lat: IntegerLattice, r: Sequence[int]) -> IntMatrix:
    """Matrix of v -> v − 2(v·r)/(r·r)·r on the basis, for r of norm −2 or −4.

    For norm −4 the map is integral only if every basis vector pairs evenly
    with r; the first offending basis vector is named otherwise.
    """
    rr = lat.norm(r)
    if rr not in (-2, -4):
        raise ValueError(f"reflection vector must have norm -2 or -4, got {rr}")
    n = lat.rank
    rows = []
    for i in range(n):
        e = [1 if j == i else 0 for j in range(n)]
        p = lat.pair(e, r)
        coeff = Fraction(-2) * p / rr
        if coeff.denominator != 1:
            raise ValueError(
                f"non-integral reflection: basis vector {i} pairs oddly with r (v·r = {p})"
            )
        rows.append([e[j] + int(coeff) * int(r[j]) for j in range(n)])
    return rows


@dataclass(frozen=True)
class IsometryCertificate:
    gram_preserved: bool
    order: Optional[int]  # smallest k <= 4 with M^k = 1, else None


def verify_isometry(lat: IntegerLattice, m: Sequence[Sequence[int]]) -> IsometryCertificate:
    """Check M·G·M^T = G exactly and report the order if it is at most 4."""
    g = [list(r) for r in lat.gram]
    mm = _as_int_matrix(m)
    preserved = mat_mul(mat_mul(mm, g), mat_transpose(mm)) == g
    order = None
    power = mm
    ident = mat_identity(lat.rank)
    for k in range(1, 5):
        if power == ident:
            order = k
            break
        power = mat_mul(power, mm)
    return IsometryCertificate(preserved, order)
