"""Exact rational and modular arithmetic, sparse multivariate polynomials.

Every coefficient in the workbench is a `fractions.Fraction`; nothing here
ever touches floating point.  Polynomials are stored sparsely as a map from
exponent tuples to nonzero rational coefficients, with graded-lexicographic
term order fixed once so that serialized output is bit-stable.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Iterable, Mapping, Optional, Sequence

Rational = Fraction

Exponent = tuple[int, ...]


def grlex_key(exp: Exponent) -> tuple[int, Exponent]:
    """Sort key for graded-lexicographic order (degree first, then lex)."""
    return (sum(exp), exp)


class MultiPoly:
    """Sparse multivariate polynomial with exact rational coefficients.

    Immutable after construction; zero coefficients are never stored.
    """

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: Mapping[Exponent, Fraction] | None = None):
        cleaned: dict[Exponent, Fraction] = {}
        for exp, coeff in (terms or {}).items():
            if len(exp) != nvars:
                raise ValueError(f"exponent {exp} does not have {nvars} entries")
            if any(e < 0 for e in exp):
                raise ValueError(f"negative exponent in {exp}")
            c = Fraction(coeff)
            if c != 0:
                cleaned[tuple(exp)] = c
        object.__setattr__(self, "nvars", nvars)
        object.__setattr__(self, "terms", cleaned)

    def __setattr__(self, name, value):  # pragma: no cover - immutability guard
        raise AttributeError("MultiPoly is immutable")

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls, nvars: int) -> "MultiPoly":
        return cls(nvars, {})

    @classmethod
    def constant(cls, nvars: int, c) -> "MultiPoly":
        return cls(nvars, {(0,) * nvars: Fraction(c)})

    @classmethod
    def variable(cls, nvars: int, i: int) -> "MultiPoly":
        if not 0 <= i < nvars:
            raise ValueError(f"variable index {i} out of range for {nvars} variables")
        exp = [0] * nvars
        exp[i] = 1
        return cls(nvars, {tuple(exp): Fraction(1)})

    @classmethod
    def linear_form(cls, coeffs: Sequence) -> "MultiPoly":
        n = len(coeffs)
        terms = {}
        for i, c in enumerate(coeffs):
            if c:
                exp = [0] * n
                exp[i] = 1
                terms[tuple(exp)] = Fraction(c)
        return cls(n, terms)

    # -- ring structure ------------------------------------------------

    def _check_compatible(self, other: "MultiPoly"):
        if self.nvars != other.nvars:
            raise ValueError("polynomials have different variable counts")

    def __add__(self, other: "MultiPoly") -> "MultiPoly":
        self._check_compatible(other)
        res = dict(self.terms)
        for exp, c in other.terms.items():
            s = res.get(exp, Fraction(0)) + c
            if s:
                res[exp] = s
            else:
                res.pop(exp, None)
        return MultiPoly(self.nvars, res)

    def __sub__(self, other: "MultiPoly") -> "MultiPoly":
        return self + (-other)

    def __neg__(self) -> "MultiPoly":
        return MultiPoly(self.nvars, {e: -c for e, c in self.terms.items()})

    def __mul__(self, other) -> "MultiPoly":
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        self._check_compatible(other)
        res: dict[Exponent, Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                s = res.get(e, Fraction(0)) + c1 * c2
                if s:
                    res[e] = s
                else:
                    res.pop(e, None)
        return MultiPoly(self.nvars, res)

    __rmul__ = __mul__

    def scale(self, c) -> "MultiPoly":
        c = Fraction(c)
        if c == 0:
            return MultiPoly.zero(self.nvars)
        return MultiPoly(self.nvars, {e: c * v for e, v in self.terms.items()})

    def __pow__(self, k: int) -> "MultiPoly":
        if k < 0:
            raise ValueError("negative power")
        result = MultiPoly.constant(self.nvars, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base if k > 1 else base
            k >>= 1
        return result

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, MultiPoly)
            and self.nvars == other.nvars
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for exp in sorted(self.terms, key=grlex_key, reverse=True):
            c = self.terms[exp]
            mono = "*".join(
                f"z{i}^{e}" if e > 1 else f"z{i}" for i, e in enumerate(exp) if e
            )
            parts.append(f"{c}" if not mono else f"{c}*{mono}")
        return " + ".join(parts)

    # -- degree bookkeeping ---------------------------------------------

    def total_degree(self) -> int:
        return max((sum(e) for e in self.terms), default=0)

    def is_homogeneous(self) -> bool:
        degrees = {sum(e) for e in self.terms}
        return len(degrees) <= 1

    def leading_monomial(self) -> Optional[Exponent]:
        if not self.terms:
            return None
        return max(self.terms, key=grlex_key)

    # -- calculus --------------------------------------------------------

    def evaluate(self, point: Sequence) -> Fraction:
        if len(point) != self.nvars:
            raise ValueError(f"point has {len(point)} entries, expected {self.nvars}")
        pt = [Fraction(x) for x in point]
        total = Fraction(0)
        for exp, c in self.terms.items():
            v = c
            for x, e in zip(pt, exp):
                if e:
                    v *= x**e
            total += v
        return total

    def partial(self, i: int) -> "MultiPoly":
        res: dict[Exponent, Fraction] = {}
        for exp, c in self.terms.items():
            if exp[i]:
                e = list(exp)
                e[i] -= 1
                res[tuple(e)] = c * exp[i]
        return MultiPoly(self.nvars, res)

    def gradient(self) -> list["MultiPoly"]:
        return [self.partial(i) for i in range(self.nvars)]

    def hessian_at(self, point: Sequence) -> list[list[Fraction]]:
        """Matrix of second partials at `point`; symmetric by construction."""
        if len(point) != self.nvars:
            raise ValueError(f"point has {len(point)} entries, expected {self.nvars}")
        n = self.nvars
        rows = [[Fraction(0)] * n for _ in range(n)]
        for i in range(n):
            fi = self.partial(i)
            for j in range(i, n):
                v = fi.partial(j).evaluate(point)
                rows[i][j] = v
                rows[j][i] = v
        return rows

    # -- substitution -----------------------------------------------------

    def substitute_linear(self, matrix: "LinearMap | Sequence[Sequence]") -> "MultiPoly":
        """Compose with a linear substitution: variables become linear forms.

        `matrix` has one row per current variable; the result lives in
        `cols` variables.  Homogeneity degree is preserved.
        """
        rows = matrix.entries if isinstance(matrix, LinearMap) else tuple(
            tuple(Fraction(x) for x in row) for row in matrix
        )
        if len(rows) != self.nvars:
            raise ValueError(
                f"substitution matrix has {len(rows)} rows, expected {self.nvars}"
            )
        ncols = len(rows[0]) if rows else 0
        forms = [MultiPoly.linear_form(row) for row in rows]
        # cache powers of each substituted form
        powers: list[list[MultiPoly]] = [[MultiPoly.constant(ncols, 1)] for _ in forms]
        result = MultiPoly.zero(ncols)
        for exp, c in self.terms.items():
            term = MultiPoly.constant(ncols, c)
            for i, e in enumerate(exp):
                while len(powers[i]) <= e:
                    powers[i].append(powers[i][-1] * forms[i])
                if e:
                    term = term * powers[i][e]
            result = result + term
        return result

    def permute_variables(self, perm: Sequence[int]) -> "MultiPoly":
        """Relabel variables: new variable perm[i] receives old variable i."""
        if sorted(perm) != list(range(self.nvars)):
            raise ValueError("not a permutation of the variable indices")
        res = {}
        for exp, c in self.terms.items():
            e = [0] * self.nvars
            for i, v in enumerate(exp):
                e[perm[i]] = v
            res[tuple(e)] = c
        return MultiPoly(self.nvars, res)

    # -- reduction mod p ----------------------------------------------------

    def mod_p(self, p: int) -> "ModPoly":
        """Coefficient-wise reduction mod a prime not dividing any denominator."""
        if p < 2:
            raise ValueError("modulus must be at least 2")
        terms = {}
        for exp, c in self.terms.items():
            if c.denominator % p == 0:
                raise ValueError(f"denominator of {c} divisible by {p}")
            v = (c.numerator * pow(c.denominator, -1, p)) % p
            if v:
                terms[exp] = v
        return ModPoly(self.nvars, p, terms)

    # -- serialization ---------------------------------------------------

    def to_jsonable(self, varnames: Sequence[str] | None = None) -> dict:
        names = list(varnames) if varnames else [f"z{i}" for i in range(self.nvars)]
        if len(names) != self.nvars:
            raise ValueError("wrong number of variable names")
        terms = []
        for exp in sorted(self.terms, key=grlex_key, reverse=True):
            c = self.terms[exp]
            terms.append(
                {"num": str(c.numerator), "den": str(c.denominator), "exp": list(exp)}
            )
        return {"vars": names, "terms": terms}

    @classmethod
    def from_jsonable(cls, data: Mapping) -> "MultiPoly":
        nvars = len(data["vars"])
        terms = {
            tuple(t["exp"]): Fraction(int(t["num"]), int(t["den"]))
            for t in data["terms"]
        }
        return cls(nvars, terms)

    def to_json(self, varnames: Sequence[str] | None = None) -> str:
        return json.dumps(self.to_jsonable(varnames), sort_keys=True)


class LinearMap:
    """Rational matrix read as a substitution of variables by linear forms."""

    __slots__ = ("entries",)

    def __init__(self, rows: Iterable[Iterable]):
        entries = tuple(tuple(Fraction(x) for x in row) for row in rows)
        if entries and any(len(r) != len(entries[0]) for r in entries):
            raise ValueError("ragged matrix")
        object.__setattr__(self, "entries", entries)

    def __setattr__(self, name, value):  # pragma: no cover
        raise AttributeError("LinearMap is immutable")

    @property
    def rows(self) -> int:
        return len(self.entries)

    @property
    def cols(self) -> int:
        return len(self.entries[0]) if self.entries else 0

    @classmethod
    def identity(cls, n: int) -> "LinearMap":
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    def compose(self, other: "LinearMap") -> "LinearMap":
        """Matrix product self·other, i.e. substitute `other` into `self`."""
        if self.cols != other.rows:
            raise ValueError("dimension mismatch in composition")
        return LinearMap(
            [
                [
                    sum(self.entries[i][k] * other.entries[k][j] for k in range(self.cols))
                    for j in range(other.cols)
                ]
                for i in range(self.rows)
            ]
        )

    def apply(self, vec: Sequence) -> list[Fraction]:
        if len(vec) != self.cols:
            raise ValueError("vector length mismatch")
        v = [Fraction(x) for x in vec]
        return [sum(row[j] * v[j] for j in range(self.cols)) for row in self.entries]

    def __eq__(self, other):
        return isinstance(other, LinearMap) and self.entries == other.entries

    def __repr__(self):
        return f"LinearMap({[list(map(str, r)) for r in self.entries]})"


class ModPoly:
    """Polynomial with coefficients reduced mod p; used by brute-force scans."""

    __slots__ = ("nvars", "p", "terms")

    def __init__(self, nvars: int, p: int, terms: Mapping[Exponent, int]):
        object.__setattr__(self, "nvars", nvars)
        object.__setattr__(self, "p", p)
        object.__setattr__(
            self, "terms", {e: c % p for e, c in terms.items() if c % p}
        )

    def __setattr__(self, name, value):  # pragma: no cover
        raise AttributeError("ModPoly is immutable")

    def evaluate(self, point: Sequence[int]) -> int:
        p = self.p
        total = 0
        for exp, c in self.terms.items():
            v = c
            for x, e in zip(point, exp):
                if e:
                    v = (v * pow(x, e, p)) % p
                    if v == 0:
                        break
            total += v
        return total % p

    def partial(self, i: int) -> "ModPoly":
        res = {}
        for exp, c in self.terms.items():
            if exp[i]:
                e = list(exp)
                e[i] -= 1
                res[tuple(e)] = (c * exp[i]) % self.p
        return ModPoly(self.nvars, self.p, res)

    def __eq__(self, other):
        return (
            isinstance(other, ModPoly)
            and (self.nvars, self.p, self.terms) == (other.nvars, other.p, other.terms)
        )


def perfect_square_factor(f: MultiPoly) -> Optional[tuple[Fraction, MultiPoly]]:
    """Write a homogeneous even-degree form as c·q² if possible.

    q is normalized to leading (graded-lex) coefficient 1 and c absorbs the
    scale; returns None when f is not a rational square times a constant.
    The loop is the triangular linear solve for q's coefficients: each step
    peels the leading term of the residual f − c·q².
    """
    if not f.is_homogeneous():
        raise ValueError("perfect_square_factor needs a homogeneous form")
    if not f:
        return (Fraction(1), MultiPoly.zero(f.nvars))
    deg = f.total_degree()
    if deg % 2:
        raise ValueError("perfect_square_factor needs even degree")
    lead = f.leading_monomial()
    if any(e % 2 for e in lead):
        return None
    c = f.terms[lead]
    half = tuple(e // 2 for e in lead)
    q = MultiPoly(f.nvars, {half: Fraction(1)})
    two_c_lead = MultiPoly(f.nvars, {half: 2 * c})
    last_key = grlex_key(half)
    while True:
        r = f - q * q * c
        if not r:
            return (c, q)
        t = r.leading_monomial()
        # next term of q is lead(r) / (2c·x^half)
        e = tuple(a - b for a, b in zip(t, half))
        if any(x < 0 for x in e):
            return None
        key = grlex_key(e)
        if key >= last_key:
            return None
        last_key = key
        q = q + MultiPoly(f.nvars, {e: r.terms[t] / (2 * c)})


# -- exact linear algebra over the rationals -------------------------------


def mat_fractions(rows: Iterable[Iterable]) -> list[list[Fraction]]:
    return [[Fraction(x) for x in row] for row in rows]


def rref(rows: Iterable[Iterable]) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form; returns (matrix, pivot column indices)."""
    m = mat_fractions(rows)
    if not m:
        return [], []
    ncols = len(m[0])
    pivots: list[int] = []
    row = 0
    for col in range(ncols):
        pivot = next((r for r in range(row, len(m)) if m[r][col]), None)
        if pivot is None:
            continue
        m[row], m[pivot] = m[pivot], m[row]
        inv = m[row][col]
        m[row] = [x / inv for x in m[row]]
        for r in range(len(m)):
            if r != row and m[r][col]:
                factor = m[r][col]
                m[r] = [a - factor * b for a, b in zip(m[r], m[row])]
        pivots.append(col)
        row += 1
        if row == len(m):
            break
    return m, pivots


def rank_rational(rows: Iterable[Iterable]) -> int:
    return len(rref(rows)[1])


def rank_fraction_free(rows: Iterable[Iterable]) -> int:
    """Rank by fraction-free (Bareiss) elimination on a denominator-cleared copy.

    Independent of `rank_rational`: all arithmetic stays in integers.
    """
    m = mat_fractions(rows)
    if not m:
        return 0
    im: list[list[int]] = []
    for r in m:
        den = 1
        for x in r:
            den = den * x.denominator // _gcd(den, x.denominator)
        im.append([int(x * den) for x in r])
    nrows, ncols = len(im), len(im[0])
    rank = 0
    prev = 1
    row = 0
    for col in range(ncols):
        pivot = next((r for r in range(row, nrows) if im[r][col]), None)
        if pivot is None:
            continue
        im[row], im[pivot] = im[pivot], im[row]
        for r in range(row + 1, nrows):
            for c in range(col + 1, ncols):
                im[r][c] = (im[row][col] * im[r][c] - im[r][col] * im[row][c]) // prev
            im[r][col] = 0
        prev = im[row][col]
        rank += 1
        row += 1
        if row == nrows:
            break
    return rank


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return abs(a)


def nullspace(rows: Iterable[Iterable], ncols: int | None = None) -> list[list[Fraction]]:
    """Basis of the right kernel {x : M x = 0}, deterministic.

    Free variables are taken in increasing column order, each set to 1 in turn.
    """
    m = mat_fractions(rows)
    if ncols is None:
        if not m:
            raise ValueError("ncols required for empty matrix")
        ncols = len(m[0])
    if m and len(m[0]) != ncols:
        raise ValueError("ncols disagrees with the row length")
    red, pivots = rref(m)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        vec = [Fraction(0)] * ncols
        vec[fc] = Fraction(1)
        for r, pc in enumerate(pivots):
            vec[pc] = -red[r][fc]
        basis.append(vec)
    return basis


def solve_linear(rows: Iterable[Iterable], rhs: Sequence) -> Optional[list[Fraction]]:
    """One solution of M x = b, or None if inconsistent."""
    m = mat_fractions(rows)
    b = [Fraction(x) for x in rhs]
    if len(m) != len(b):
        raise ValueError("dimension mismatch")
    ncols = len(m[0]) if m else 0
    aug = [row + [bv] for row, bv in zip(m, b)]
    red, pivots = rref(aug)
    if ncols in pivots:
        return None
    x = [Fraction(0)] * ncols
    for r, pc in enumerate(pivots):
        x[pc] = red[r][ncols]
    return x


def primitive_integer_vector(vec: Sequence) -> list[int]:
    """Scale a rational vector to a primitive integer vector, first nonzero > 0."""
    fr = [Fraction(x) for x in vec]
    den = 1
    for x in fr:
        den = den * x.denominator // _gcd(den, x.denominator)
    iv = [int(x * den) for x in fr]
    g = 0
    for x in iv:
        g = _gcd(g, x)
    if g:
        iv = [x // g for x in iv]
    lead = next((x for x in iv if x), 0)
    if lead < 0:
        iv = [-x for x in iv]
    return iv
