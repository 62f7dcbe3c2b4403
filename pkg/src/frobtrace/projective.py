"""Twisted canonical section spaces on P^n and trace-map matrices.

Global sections of omega(sum a_j V(f_j) + k H) are modeled on one affine
chart: with den the product of the dehomogenized f_j^{a_j}, the sections
are the rational top forms (h / den) dx with deg h <= sum a_j d_j + k - (n+1).
A negative bound yields the zero space.  The default chart is the last
homogeneous variable.

A trace matrix stores, per source basis monomial, the coordinates of its
trace in the target basis.  The map itself is p^{-e}-semilinear, i.e.
T(u^{p^e} v) = u T(v); on a coordinate vector c it acts as
matrix . inverse_frobenius^e(c).  Because the inverse Frobenius is a
bijection of the coefficient field, the image is exactly the column span,
so the ordinary matrix rank decides surjectivity and the zero verdict.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from . import linalg
from .cartier import trace_rational_top
from .forms import TopForm
from .poly import Poly, RationalFn, monomials_upto


class ChartError(ValueError):
    """A hypersurface is supported entirely in the chart complement."""


class ContainmentError(RuntimeError):
    """A traced section left its guaranteed target space (an internal bug)."""


class DivisorSpec:
    """Formal combination sum(a_j V(f_j)) + k*H on P^n.

    Hypersurface multiplicities are non-negative; the hyperplane
    multiplicity k may be any integer.
    """

    __slots__ = ("field", "n", "hypersurfaces", "k")

    def __init__(self, field, n, hypersurfaces=(), k=0):
        self.field = field
        self.n = n
        self.k = int(k)
        clean = []
        for f, mult in hypersurfaces:
            if not isinstance(mult, int) or mult < 0:
                raise ValueError(f"hypersurface multiplicity {mult!r} must be a "
                                 "non-negative integer")
            if f.field != field:
                raise ValueError("hypersurface over a different field")
            if f.nvars != n + 1:
                raise ValueError(f"hypersurface in {f.nvars} variables; P^{n} "
                                 f"needs {n + 1}")
            if f.is_zero():
                raise ValueError("hypersurface polynomial is zero")
            if not f.is_homogeneous():
                raise ValueError("hypersurface polynomial is not homogeneous")
            if mult > 0:
                clean.append((f, mult))
        self.hypersurfaces = tuple(clean)

    def degree_sum(self) -> int:
        return sum(int(f.total_degree()) * a for f, a in self.hypersurfaces)

    def is_effective(self) -> bool:
        return self.k >= 0

    def combined(self, other: "DivisorSpec", m: int) -> "DivisorSpec":
        """self + m*other, merging equal hypersurface polynomials."""
        if other.field != self.field or other.n != self.n:
            raise ValueError("divisors on different projective spaces")
        merged = [[f, a] for f, a in self.hypersurfaces]
        for g, b in other.hypersurfaces:
            for entry in merged:
                if entry[0] == g:
                    entry[1] += m * b
                    break
            else:
                merged.append([g, m * b])
        return DivisorSpec(self.field, self.n,
                           [(f, a) for f, a in merged],
                           self.k + m * other.k)

    def to_json(self, varnames=None) -> dict:
        return {
            "n": self.n,
            "hypersurfaces": [
                {"poly": f.to_string(varnames), "mult": a}
                for f, a in self.hypersurfaces
            ],
            "k": self.k,
        }

    def to_string(self, varnames=None) -> str:
        parts = [f"{a}*V({f.to_string(varnames)})" for f, a in self.hypersurfaces]
        if self.k or not parts:
            parts.append(f"{self.k}*H")
        return " + ".join(parts)

    def __repr__(self):
        return f"DivisorSpec({self.to_string()!r})"


def pe_twist(divisor: DivisorSpec, e_part: DivisorSpec, e: int) -> DivisorSpec:
    """E + p^e * D for an effective E."""
    if e < 1:
        raise ValueError("twist exponent must be positive")
    if not e_part.is_effective():
        raise ValueError("the fixed part E must be effective")
    return e_part.combined(divisor, e_part.field.p ** e)


class SectionSpace:
    """Monomial-basis chart model of a twisted canonical section space."""

    __slots__ = ("divisor", "chart", "field", "n", "den", "bound", "basis")

    def __init__(self, divisor, chart, den, bound, basis):
        self.divisor = divisor
        self.chart = chart
        self.field = divisor.field
        self.n = divisor.n
        self.den = den
        self.bound = bound
        self.basis = basis

    @property
    def dim(self) -> int:
        return len(self.basis)

    def basis_form(self, index: int) -> TopForm:
        mono = Poly.monomial(self.field, self.basis[index])
        return TopForm(self.field, self.n, RationalFn(mono, self.den))

    def coords_of(self, h: Poly):
        """Coordinates of (h/den) dx in the basis; h must fit the bound."""
        if not h.is_zero() and h.total_degree() > self.bound:
            raise ValueError("numerator degree exceeds the space's bound")
        return [h.terms.get(m, self.field.zero) for m in self.basis]

    def same_model(self, other: "SectionSpace") -> bool:
        return (self.field == other.field and self.n == other.n
                and self.chart == other.chart and self.bound == other.bound
                and self.basis == other.basis and self.den == other.den)

    def to_json(self, varnames=None) -> dict:
        chart_names = _chart_varnames(varnames, self.n, self.chart)
        return {
            "divisor": self.divisor.to_json(varnames),
            "chart": self.chart,
            "bound": self.bound,
            "dim": self.dim,
            "den": self.den.to_string(chart_names),
            "basis": [Poly.monomial(self.field, m).to_string(chart_names)
                      for m in self.basis],
        }


def _chart_varnames(varnames, n, chart):
    if varnames is None:
        return None
    return [v for i, v in enumerate(varnames) if i != chart]


def section_space(divisor: DivisorSpec, chart: int = None) -> SectionSpace:
    """Build the chart model; dimension C(bound + n, n) for bound >= 0, else 0."""
    n = divisor.n
    if chart is None:
        chart = n
    if not 0 <= chart <= n:
        raise ChartError(f"chart index {chart} out of range for P^{n}")
    den = Poly.one(divisor.field, n)
    for f, a in divisor.hypersurfaces:
        fd = f.dehomogenize(chart)
        if fd.is_zero():
            raise ChartError(f"hypersurface {f} vanishes identically on the chart")
        if f.total_degree() >= 1 and fd.is_constant():
            raise ChartError(f"hypersurface {f} is contained in the chart complement")
        den = den * fd ** a
    bound = divisor.degree_sum() + divisor.k - (n + 1)
    basis = monomials_upto(n, bound)
    space = SectionSpace(divisor, chart, den, bound, basis)
    assert space.dim == (comb(bound + n, n) if bound >= 0 else 0)
    return space


class SemilinearMap:
    """Matrix of a p^{-e}-semilinear map between two section spaces.

    Column b holds the target coordinates of the trace of source basis
    element b; on a coordinate vector the map is matrix . phi^{-e}(vector).
    """

    __slots__ = ("src", "tgt", "e", "matrix")

    def __init__(self, src, tgt, e, matrix):
        self.src = src
        self.tgt = tgt
        self.e = e
        self.matrix = matrix

    @property
    def field(self):
        return self.src.field

    def apply(self, coords):
        """Image of a source coordinate vector."""
        if len(coords) != self.src.dim:
            raise ValueError("coordinate vector length mismatch")
        twisted = [c.inverse_frobenius(self.e) for c in coords]
        return [
            sum((m * c for m, c in zip(row, twisted)), self.field.zero)
            for row in self.matrix
        ]

    def compose(self, inner: "SemilinearMap") -> "SemilinearMap":
        """self after inner; exponents add, and the inner matrix is twisted
        by phi^{-e_outer} before the ordinary product."""
        if not inner.tgt.same_model(self.src):
            raise ValueError("inner map's target does not match outer map's source")
        cols = [self.apply([row[b] for row in inner.matrix])
                for b in range(inner.src.dim)]
        matrix = [[cols[b][r] for b in range(inner.src.dim)]
                  for r in range(self.tgt.dim)]
        return SemilinearMap(inner.src, self.tgt, self.e + inner.e, matrix)

    def __eq__(self, other):
        if not isinstance(other, SemilinearMap):
            return NotImplemented
        return (self.e == other.e and self.src.same_model(other.src)
                and self.tgt.same_model(other.tgt) and self.matrix == other.matrix)

    def to_json(self, varnames=None) -> dict:
        verdict = map_verdict(self)
        return {
            "p": self.field.p,
            "s": self.field.s,
            "e": self.e,
            "chart": self.src.chart,
            "src": self.src.to_json(varnames),
            "tgt": self.tgt.to_json(varnames),
            "matrix": [[list(c.coeffs) for c in row] for row in self.matrix],
            "verdict": {
                "rank": verdict.rank,
                "surjective": verdict.surjective,
                "zero": verdict.zero,
            },
        }


@dataclass(frozen=True)
class MapVerdict:
    rank: int
    surjective: bool
    zero: bool


def map_verdict(t: SemilinearMap) -> MapVerdict:
    """Rank over F_q of the matrix (= dimension of the image, by the
    semilinear column-span identity), surjectivity, and the zero test."""
    r = linalg.rank(t.matrix, t.field)
    zero = all(not entry for row in t.matrix for entry in row)
    return MapVerdict(rank=r, surjective=(r == t.tgt.dim), zero=zero)


def trace_matrix(e_part: DivisorSpec, divisor: DivisorSpec, e: int,
                 chart: int = None, threads: int = None) -> SemilinearMap:
    """Matrix of Tr^e between the models of omega(E + p^e D) and omega(E + D).

    Each source basis form is traced, cleared to the target denominator by
    exact division, and degree-checked against the target bound; failure of
    either step cannot happen for a correct trace and raises
    :class:`ContainmentError` naming the basis element.
    """
    if e < 1:
        raise ValueError("trace exponent must be positive")
    src_div = pe_twist(divisor, e_part, e)
    tgt_div = e_part.combined(divisor, 1)
    src = section_space(src_div, chart)
    tgt = section_space(tgt_div, chart)
    field = src.field

    def column(mono):
        numerator = Poly.monomial(field, mono)
        traced = trace_rational_top(
            TopForm(field, src.n, RationalFn(numerator, src.den)), e)
        cleared = (traced.coeff.num * tgt.den).exact_divide(traced.coeff.den)
        label = Poly.monomial(field, mono).to_string()
        if cleared is None:
            raise ContainmentError(
                f"trace of basis element {label} is not a section of the target "
                "(denominator did not clear)")
        if not cleared.is_zero() and cleared.total_degree() > tgt.bound:
            raise ContainmentError(
                f"trace of basis element {label} exceeds the target degree bound "
                f"({cleared.total_degree()} > {tgt.bound})")
        return [cleared.terms.get(m, field.zero) for m in tgt.basis]

    if threads and threads > 1:
        from concurrent.futures import ThreadPoolExecutor

        with ThreadPoolExecutor(max_workers=threads) as pool:
            cols = list(pool.map(column, src.basis))
    else:
        cols = [column(mono) for mono in src.basis]

    matrix = [[cols[b][r] for b in range(src.dim)] for r in range(tgt.dim)]
    return SemilinearMap(src, tgt, e, matrix)
