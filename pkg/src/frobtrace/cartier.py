"""Trace map of Frobenius on top forms, and the inverse Cartier operator.

On a polynomial chart with coordinates x_1..x_n the trace of exponent e
acts on f dx_1^...^dx_n by decomposing f over p^e-th powers and keeping
only the component on x_1^{p^e-1}...x_n^{p^e-1}, whose p^e-th root is the
result.  Rational coefficients h/g reduce to that rule after the
denominator is cleared to a p^e-th power:

    Tr^e(h/g dx) = Tr^e(h * g^{p^e - 1} dx) / g

and this specific clearing (by the original denominator) is what
:func:`trace_rational_top` always performs; callers relying on a smaller
denominator use the semilinearity of the map instead.

The inverse Cartier operator returns one designated closed representative
of its class: f dx_J goes to f^p * x_J^{p-1} dx_J, extended additively.
On top forms, following it by the exponent-1 trace is the identity.
"""

from __future__ import annotations

from itertools import combinations

from . import linalg
from .forms import DiffForm, TopForm
from .poly import Poly, RationalFn, monomials_upto


def trace_poly_top(f: Poly, e: int = 1) -> Poly:
    """Coefficient action of Tr^e on polynomial top forms: f dx -> (result) dx."""
    if e < 1:
        raise ValueError("trace exponent must be positive")
    q = f.field.p ** e
    residue = (q - 1,) * f.nvars
    return f.frobenius_decompose(e).get(residue, Poly.zero(f.field, f.nvars))


def trace_rational_top(form: TopForm, e: int = 1) -> TopForm:
    """Tr^e on a rational top form, clearing the denominator to its p^e-th power."""
    if e < 1:
        raise ValueError("trace exponent must be positive")
    h, g = form.coeff.num, form.coeff.den
    q = form.field.p ** e
    num = trace_poly_top(h * g ** (q - 1), e)
    return TopForm(form.field, form.nvars, RationalFn(num, g))


def trace_iterated(form: TopForm, e: int) -> TopForm:
    """Tr^e as e successive exponent-1 traces (the composition law)."""
    if e < 1:
        raise ValueError("trace exponent must be positive")
    for _ in range(e):
        form = trace_rational_top(form, 1)
    return form


def inverse_cartier_top(f: Poly) -> Poly:
    """Coefficient of the designated representative on top forms:
    f dx -> f^p * (x_1...x_n)^{p-1} dx."""
    p = f.field.p
    return f ** p * Poly.monomial(f.field, (p - 1,) * f.nvars)


def inverse_cartier(form: DiffForm) -> DiffForm:
    """The designated closed representative f^p * x_J^{p-1} dx_J, additively.

    Input coefficients must be polynomial.  The output is closed: every
    partial of f^p vanishes, and the x_J^{p-1} factor only differentiates
    into indices already present in the wedge.
    """
    p = form.field.p
    coeffs = {}
    for idx, rat in form.coeffs.items():
        f = rat.as_poly()
        exps = [0] * form.nvars
        for j in idx:
            exps[j] = p - 1
        coeffs[idx] = RationalFn(f ** p * Poly.monomial(form.field, tuple(exps)))
    return DiffForm(form.field, form.nvars, form.degree, coeffs)


def trace_by_decomposition(f: Poly) -> Poly:
    """Brute-force exponent-1 trace through the splitting f dx = d(eta) + C^{-1}(tau).

    Solves for eta (a polynomial (n-1)-form of degree <= deg f + 1) and tau
    (a polynomial of degree <= (deg f - n(p-1))/p) by linear algebra over
    the prime field and returns tau.  Independent of the residue-bucket
    algorithm; prime fields only, where t -> t^p is linear on coefficients.
    """
    field = f.field
    if field.s != 1:
        raise ValueError("the decomposition oracle works over prime fields")
    n, p = f.nvars, field.p
    if f.is_zero():
        return Poly.zero(field, n)
    d = int(f.total_degree())

    row_of = {m: i for i, m in enumerate(monomials_upto(n, d))}
    columns = []
    tau_monos = []

    for K in combinations(range(n), n - 1):
        (j,) = tuple(set(range(n)) - set(K))
        sign = -1 if sum(1 for i in K if i < j) % 2 else 1
        for m in monomials_upto(n, d + 1):
            g = Poly.monomial(field, m).partial(j)
            if sign < 0:
                g = -g
            columns.append({row_of[mono]: c for mono, c in g.terms.items()})

    dtau = (d - n * (p - 1)) // p
    for t in monomials_upto(n, dtau):
        image = inverse_cartier_top(Poly.monomial(field, t))
        tau_monos.append(t)
        columns.append({row_of[mono]: c for mono, c in image.terms.items()})

    nrows = len(row_of)
    matrix = [[field.zero] * len(columns) for _ in range(nrows)]
    for c, col in enumerate(columns):
        for r, value in col.items():
            matrix[r][c] = value
    rhs = [field.zero] * nrows
    for mono, c in f.terms.items():
        rhs[row_of[mono]] = c

    solution = linalg.solve(matrix, rhs, field)
    if solution is None:
        raise RuntimeError("top form admitted no bounded-degree splitting; "
                           "this contradicts the exact sequence it satisfies")
    offset = len(columns) - len(tau_monos)
    return Poly(field, n, {t: solution[offset + i] for i, t in enumerate(tau_monos)})
