"""Independent brute-force oracles used to check the engine.

These deliberately avoid the code paths they validate: commutative
multiplication is a plain convolution on exponent dicts, membership is
linear algebra over spans of shifted products, radical membership is a
power search.
"""

from __future__ import annotations

from skewpbw import linalg
from skewpbw.groebner import is_member_left, left_groebner
from skewpbw.poly import DEGLEX, Polynomial, exponents_up_to, multiply
from skewpbw.presentation import Presentation


def naive_commutative_multiply(f: Polynomial, g: Polynomial) -> Polynomial:
    """Convolution product; valid only on trivial-relations presentations."""
    pres = f.pres
    out: dict = {}
    for ea, ca in f.terms:
        for eb, cb in g.terms:
            e = tuple(x + y for x, y in zip(ea, eb))
            c = out.get(e, pres.field.zero) + ca * cb
            if c.is_zero():
                out.pop(e, None)
            else:
                out[e] = c
    return Polynomial.from_dict(pres, out)


def _vector(f: Polynomial, monos: list, index: dict):
    field = f.pres.field
    v = [field.zero] * len(monos)
    for e, c in f.terms:
        v[index[e]] = c
    return v


def span_rows(polys, pres: Presentation, degree: int):
    monos = exponents_up_to(pres.n, degree)
    index = {e: k for k, e in enumerate(monos)}
    rows = []
    for p in polys:
        if not p.is_zero() and p.degree() <= degree:
            rows.append(_vector(p, monos, index))
    return rows, monos, index


def two_sided_span_membership(
    f: Polynomial, gens, degree: int
) -> bool:
    """Is f in the span of m1 * g * m2 with all written degrees <= degree?

    One-sided: a True answer certifies two-sided ideal membership; a False
    answer only says the truncated span misses f.
    """
    pres = f.pres
    products = []
    for g in gens:
        gd = g.degree()
        if gd < 0:
            continue
        for da in range(degree - gd + 1):
            for ea in exponents_up_to(pres.n, degree - gd):
                if sum(ea) != da:
                    continue
                left = multiply(Polynomial.monomial(pres, ea), g)
                for eb in exponents_up_to(pres.n, degree - gd - da):
                    products.append(
                        multiply(left, Polynomial.monomial(pres, eb))
                    )
    rows, monos, index = span_rows(products, pres, degree)
    if f.degree() > degree:
        return False
    return linalg.in_row_span(rows, _vector(f, monos, index), pres.field)


def left_span_membership(f: Polynomial, gens, degree: int) -> bool:
    """Left-ideal analogue of the truncated span oracle."""
    pres = f.pres
    products = []
    for g in gens:
        gd = g.degree()
        if gd < 0:
            continue
        for ea in exponents_up_to(pres.n, degree - gd):
            products.append(multiply(Polynomial.monomial(pres, ea), g))
    rows, monos, index = span_rows(products, pres, degree)
    if f.degree() > degree:
        return False
    return linalg.in_row_span(rows, _vector(f, monos, index), pres.field)


def brute_force_radical(f: Polynomial, J_gens, max_power: int = 6) -> bool:
    """f in radical(J) by searching f^m in J for m <= max_power (GB membership)."""
    handle = left_groebner(list(J_gens), DEGLEX)
    power = f
    for _ in range(max_power):
        if is_member_left(power, handle) == "yes":
            return True
        power = multiply(power, f)
    return False
