"""Differential difference algebras A = R[S, D; sigma, 0] of type (m, n).

An element is a dict mapping an exponent vector (alpha_1..alpha_m,
beta_1..beta_n) to a nonzero coefficient, read as the left-coefficient
combination sum c * S^alpha D^beta.  Relations used for normal forms:

    D_j r = r D_j                 (the derivations vanish on a number field)
    S_i r = sigma_i^{-1}(r) S_i
    D_j S_i = S_i sigma_i(D_j),   sigma_i(D_j) = sum_l a_ijl D_l

with a_ijl stored as ``sigma_D[i][j][l]``.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from .errors import (
    MixedMonomial,
    NonCommutingSigmas,
    PresentationMismatch,
    ShapeMismatch,
    SingularSigmaMatrix,
)
from .scalar import FieldAutomorphism, FieldElement, NumberField

Exps = tuple  # exponent vector in N^(m+n): S-block then D-block
NEG_INF = float("-inf")

Matrix = tuple  # tuple of rows of FieldElement


def _identity_matrix(field: NumberField, n: int) -> Matrix:
    return tuple(tuple(field.one if i == j else field.zero for j in range(n)) for i in range(n))


def _mat_mul(a: Matrix, b: Matrix, field: NumberField) -> Matrix:
    n = len(a)
    out = []
    for i in range(n):
        row = []
        for j in range(n):
            acc = field.zero
            for k in range(n):
                if a[i][k] and b[k][j]:
                    acc = acc + a[i][k] * b[k][j]
            row.append(acc)
        out.append(tuple(row))
    return tuple(out)


def _mat_apply(sigma: FieldAutomorphism, a: Matrix) -> Matrix:
    return tuple(tuple(sigma(x) for x in row) for row in a)


def _mat_inv(a: Matrix, field: NumberField) -> Matrix:
    n = len(a)
    work = [list(row) + list(e) for row, e in zip(a, _identity_matrix(field, n))]
    for col in range(n):
        pivot = next((r for r in range(col, n) if work[r][col]), None)
        if pivot is None:
            raise SingularSigmaMatrix("sigma matrix is not invertible")
        work[col], work[pivot] = work[pivot], work[col]
        inv = work[col][col].inv()
        work[col] = [x * inv for x in work[col]]
        for r in range(n):
            if r != col and work[r][col]:
                f = work[r][col]
                work[r] = [x - f * y for x, y in zip(work[r], work[col])]
    return tuple(tuple(row[n:]) for row in work)


def _dpoly_mul(a: dict, b: dict, field: NumberField) -> dict:
    out: dict = {}
    for ea, ca in a.items():
        for eb, cb in b.items():
            key = tuple(x + y for x, y in zip(ea, eb))
            out[key] = out.get(key, field.zero) + ca * cb
    return {k: v for k, v in out.items() if v}


class AlgebraPresentation:
    """Generators S_1..S_m, D_1..D_n over ``field`` with commuting sigmas.

    ``sigma_R`` lists the field automorphisms sigma_i restricted to R (default:
    identity) and ``sigma_D`` the m invertible n x n matrices (default: the
    identity, i.e. the commutative polynomial ring).  Construction validates
    invertibility and pairwise commutation and raises on failure.
    """

    def __init__(
        self,
        field: NumberField | None = None,
        m: int = 0,
        n: int = 0,
        sigma_R: Sequence | None = None,
        sigma_D: Sequence | None = None,
    ):
        self.field = field = field if field is not None else NumberField.rationals()
        if m < 0 or n < 0:
            raise ShapeMismatch("m and n must be natural numbers")
        self.m, self.n = m, n
        self.l = m + n

        if sigma_R is None:
            sigma_R = [field.identity() for _ in range(m)]
        sigma_R = [
            s if isinstance(s, FieldAutomorphism) else FieldAutomorphism(field, s) for s in sigma_R
        ]
        if len(sigma_R) != m:
            raise ShapeMismatch(f"expected {m} field automorphisms, got {len(sigma_R)}")
        self.sigma_R = tuple(sigma_R)

        if sigma_D is None:
            sigma_D = [_identity_matrix(field, n) for _ in range(m)]
        if len(sigma_D) != m:
            raise ShapeMismatch(f"expected {m} sigma matrices, got {len(sigma_D)}")
        mats = []
        for a in sigma_D:
            if len(a) != n or any(len(row) != n for row in a):
                raise ShapeMismatch(f"sigma matrices must be {n} x {n}")
            mats.append(tuple(tuple(field(x) for x in row) for row in a))
        self.sigma_D = tuple(mats)

        self.sigma_R_inv = tuple(s.inverse() for s in self.sigma_R)
        # sigma_i^{-1}(D) has matrix sigma_i^{-1}(A_i^{-1})
        self.sigma_D_inv = tuple(
            _mat_apply(si, _mat_inv(a, field)) for si, a in zip(self.sigma_R_inv, self.sigma_D)
        )
        self._check_commuting()

        self._aut_cache: dict = {}
        self._gen_mat_cache: dict = {}
        self._mat_cache: dict = {}
        self._dmono_cache: dict = {}

    def _check_commuting(self):
        field = self.field
        for i in range(self.m):
            for j in range(i + 1, self.m):
                si, sj = self.sigma_R[i], self.sigma_R[j]
                if si.compose(sj) != sj.compose(si):
                    raise NonCommutingSigmas(f"sigma_{i + 1} and sigma_{j + 1} differ on R")
                ai, aj = self.sigma_D[i], self.sigma_D[j]
                lhs = _mat_mul(_mat_apply(si, aj), ai, field)
                rhs = _mat_mul(_mat_apply(sj, ai), aj, field)
                if lhs != rhs:
                    raise NonCommutingSigmas(f"sigma_{i + 1} and sigma_{j + 1} differ on D")

    def __repr__(self):
        return f"AlgebraPresentation(m={self.m}, n={self.n}, field={self.field!r})"

    # -- naming and construction ----------------------------------------

    @property
    def names(self) -> list[str]:
        return [f"S{i + 1}" for i in range(self.m)] + [f"D{j + 1}" for j in range(self.n)]

    def split(self, exps: Exps) -> tuple[Exps, Exps]:
        return exps[: self.m], exps[self.m :]

    def check_exps(self, exps) -> Exps:
        exps = tuple(int(e) for e in exps)
        if len(exps) != self.l or any(e < 0 for e in exps):
            raise ShapeMismatch(f"exponent vector {list(exps)} does not fit type ({self.m},{self.n})")
        return exps

    def zero(self) -> "Element":
        return Element(self, {})

    def one(self) -> "Element":
        return self.monomial((0,) * self.l)

    def constant(self, c) -> "Element":
        return self.monomial((0,) * self.l, c)

    def monomial(self, exps, coeff=1) -> "Element":
        return Element(self, {self.check_exps(exps): self.field(coeff)})

    def element(self, terms: Iterable) -> "Element":
        """Build from (coeff, exps) pairs; repeated monomials are summed."""
        acc: dict = {}
        for coeff, exps in terms:
            key = self.check_exps(exps)
            acc[key] = acc.get(key, self.field.zero) + self.field(coeff)
        return Element(self, acc)

    def S(self, i: int) -> "Element":
        exps = [0] * self.l
        exps[i - 1] = 1
        return self.monomial(exps)

    def D(self, j: int) -> "Element":
        exps = [0] * self.l
        exps[self.m + j - 1] = 1
        return self.monomial(exps)

    # -- sigma powers ----------------------------------------------------

    def sigma_field(self, e: Exps) -> FieldAutomorphism:
        """sigma_1^{e_1} ... sigma_m^{e_m} restricted to R (e may be negative)."""
        aut = self._aut_cache.get(e)
        if aut is None:
            aut = self.field.identity()
            for s, k in zip(self.sigma_R, e):
                if k:
                    aut = aut.compose(s.power(k))
            self._aut_cache[e] = aut
        return aut

    def _generator_matrix(self, i: int, k: int) -> Matrix:
        key = (i, k)
        mat = self._gen_mat_cache.get(key)
        if mat is not None:
            return mat
        if k == 0:
            mat = _identity_matrix(self.field, self.n)
        elif k > 0:
            prev = self._generator_matrix(i, k - 1)
            mat = _mat_mul(_mat_apply(self.sigma_R[i], prev), self.sigma_D[i], self.field)
        else:
            prev = self._generator_matrix(i, k + 1)
            mat = _mat_mul(_mat_apply(self.sigma_R_inv[i], prev), self.sigma_D_inv[i], self.field)
        self._gen_mat_cache[key] = mat
        return mat

    def sigma_matrix(self, e: Exps) -> Matrix:
        """Matrix M with sigma^e(D_j) = sum_l M[j][l] D_l."""
        mat = self._mat_cache.get(e)
        if mat is None:
            # matrix of a o b is a(M_b) . M_a
            aut = self.field.identity()
            mat = _identity_matrix(self.field, self.n)
            for i, k in enumerate(e):
                if k:
                    mat = _mat_mul(_mat_apply(aut, self._generator_matrix(i, k)), mat, self.field)
                    aut = aut.compose(self.sigma_R[i].power(k))
            self._mat_cache[e] = mat
        return mat

    def sigma_dmono(self, e: Exps, beta: Exps) -> dict:
        """sigma^e(D^beta) as a dict beta' -> coefficient."""
        key = (e, beta)
        out = self._dmono_cache.get(key)
        if out is not None:
            return out
        field = self.field
        if not any(e):
            out = {beta: field.one}
        else:
            mat = self.sigma_matrix(e)
            out = {(0,) * self.n: field.one}
            for j, b in enumerate(beta):
                if not b:
                    continue
                form = {}
                for t, c in enumerate(mat[j]):
                    if c:
                        unit = [0] * self.n
                        unit[t] = 1
                        form[tuple(unit)] = c
                for _ in range(b):
                    out = _dpoly_mul(out, form, field)
        self._dmono_cache[key] = out
        return out

    def sigma_power_on_dpoly(self, e, f: "Element") -> "Element":
        """Apply sigma^e to an element of R<D> (no S-part)."""
        self._own(f)
        e = tuple(int(x) for x in e)
        if len(e) != self.m:
            raise ShapeMismatch(f"expected {self.m} sigma exponents")
        aut = self.sigma_field(e)
        acc: dict = {}
        zero_alpha = (0,) * self.m
        for exps, c in f.terms.items():
            alpha, beta = self.split(exps)
            if any(alpha):
                raise MixedMonomial(f"term with S-exponents {list(alpha)} in a D-polynomial")
            ce = aut(c)
            for gamma, r in self.sigma_dmono(e, beta).items():
                key = zero_alpha + gamma
                acc[key] = acc.get(key, self.field.zero) + ce * r
        return Element(self, acc)

    # -- multiplication --------------------------------------------------

    def _own(self, f: "Element"):
        if f.alg is not self:
            raise PresentationMismatch("element belongs to another presentation")

    def mul(self, f: "Element", g: "Element") -> "Element":
        """Product in normal form.

        (c S^a D^b)(c' S^a' D^b') = sum_g c sigma^{-a}(c') sigma^{-(a+a')}(r_g) S^{a+a'} D^{g+b'}
        where sigma^{a'}(D^b) = sum_g r_g D^g.
        """
        self._own(f)
        self._own(g)
        m = self.m
        zero = self.field.zero
        acc: dict = {}
        for ea, c in f.terms.items():
            alpha, beta = ea[:m], ea[m:]
            twist_a = self.sigma_field(tuple(-x for x in alpha))
            for eb, c2 in g.terms.items():
                alpha2, beta2 = eb[:m], eb[m:]
                coef = c * twist_a(c2)
                s = tuple(x + y for x, y in zip(alpha, alpha2))
                twist_s = self.sigma_field(tuple(-x for x in s))
                for gamma, r in self.sigma_dmono(alpha2, beta).items():
                    key = s + tuple(x + y for x, y in zip(gamma, beta2))
                    acc[key] = acc.get(key, zero) + coef * twist_s(r)
        return Element(self, acc)


def coerce_scalar(field: NumberField, c) -> FieldElement | None:
    """``c`` as a field element, or None if it is not a scalar."""
    if isinstance(c, FieldElement) or (isinstance(c, (int, Fraction)) and not isinstance(c, bool)):
        return field(c)
    return None


class Element:
    """An element of the algebra; ``terms`` maps exponent vectors to coefficients."""

    __slots__ = ("alg", "terms")

    def __init__(self, alg: AlgebraPresentation, terms: dict):
        self.alg = alg
        self.terms = {k: v for k, v in terms.items() if v}

    def _scalar(self, c) -> FieldElement | None:
        return coerce_scalar(self.alg.field, c)

    def _same(self, other: "Element"):
        if other.alg is not self.alg:
            raise PresentationMismatch("elements of different presentations")

    def __add__(self, other):
        if not isinstance(other, Element):
            c = self._scalar(other)
            if c is None:
                return NotImplemented
            other = self.alg.constant(c)
        self._same(other)
        out = dict(self.terms)
        zero = self.alg.field.zero
        for k, v in other.terms.items():
            out[k] = out.get(k, zero) + v
        return Element(self.alg, out)

    __radd__ = __add__

    def __neg__(self):
        return Element(self.alg, {k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, Element):
            c = self._scalar(other)
            if c is None:
                return NotImplemented
            other = self.alg.constant(c)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, Element):
            return self.alg.mul(self, other)
        c = self._scalar(other)
        if c is None:
            return NotImplemented
        return self.alg.mul(self, self.alg.constant(c))

    def __rmul__(self, other):
        # scalar on the left: plain rescaling of the left coefficients
        c = self._scalar(other)
        if c is None:
            return NotImplemented
        return Element(self.alg, {k: c * v for k, v in self.terms.items()})

    def __pow__(self, k: int):
        out = self.alg.one()
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, Element):
            return self.alg is other.alg and self.terms == other.terms
        c = self._scalar(other)
        if c is not None:
            return self == self.alg.constant(c)
        return NotImplemented

    __hash__ = None

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def tdeg(self):
        """Total degree; -inf for the zero element."""
        if not self.terms:
            return NEG_INF
        return max(sum(e) for e in self.terms)

    def support(self) -> list:
        return list(self.terms)

    def is_dpoly(self) -> bool:
        m = self.alg.m
        return all(not any(e[:m]) for e in self.terms)

    def sorted_terms(self, key=None) -> list:
        """Terms in decreasing order under ``key`` (default: tdeg, then exponents)."""
        key = key or (lambda e: (sum(e), e))
        return sorted(self.terms.items(), key=lambda kv: key(kv[0]), reverse=True)

    def format(self, key=None) -> str:
        return format_terms(self.sorted_terms(key), self.alg.names)

    def __str__(self):
        return self.format()

    def __repr__(self):
        return f"Element({self})"


def format_monomial(exps, names) -> str:
    parts = []
    for name, e in zip(names, exps):
        if e == 1:
            parts.append(name)
        elif e:
            parts.append(f"{name}^{e}")
    return "*".join(parts)


def format_terms(items, names, suffix=None) -> str:
    """Render (exps, coeff) pairs; ``suffix`` maps a key to a trailing tag."""
    if not items:
        return "0"
    out = []
    for key, c in items:
        exps = key if suffix is None else key[1]
        mono = format_monomial(exps, names)
        tag = "" if suffix is None else suffix(key)
        body = "*".join(p for p in (mono, tag) if p)
        neg = False
        if c.is_rational() and c.coeffs[0] < 0:
            neg, c = True, -c
        if not body:
            text = str(c)
        elif c.is_one():
            text = body
        else:
            cs = f"({c})" if c.needs_parens() else str(c)
            text = f"{cs}*{body}"
        out.append(("- " if neg else "+ ") + text)
    s = " ".join(out)
    return s[2:] if s.startswith("+ ") else "-" + s[2:]


def validate(p: AlgebraPresentation) -> bool:
    """Re-run the presentation checks; construction already performs them."""
    for a in p.sigma_D:
        _mat_inv(a, p.field)
    p._check_commuting()
    return True


def tdeg(f: Element):
    return f.tdeg()


def mul(p: AlgebraPresentation, f: Element, g: Element) -> Element:
    return p.mul(f, g)


def sigma_power_on_dpoly(p: AlgebraPresentation, e, f: Element) -> Element:
    return p.sigma_power_on_dpoly(e, f)


def monomials_of_degree(l: int, deg: int):
    """Exponent vectors in N^l of total degree exactly ``deg``, lex-descending."""
    if l == 0:
        if deg == 0:
            yield ()
        return
    if l == 1:
        yield (deg,)
        return
    for e in range(deg, -1, -1):
        for rest in monomials_of_degree(l - 1, deg - e):
            yield (e,) + rest


def standard_monomials(l: int, t: int):
    """All exponent vectors in N^l of total degree at most t, by degree."""
    for deg in range(t + 1):
        yield from monomials_of_degree(l, deg)
