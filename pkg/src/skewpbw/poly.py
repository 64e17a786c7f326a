"""Monomial orders and normal-ordered polynomial arithmetic.

Elements are finite sums c * x1^a1 ... xn^an over a presentation's field.
Products are normalized by a confluent rewriting of adjacent inversions
x_j x_i (j > i) through the presentation's relation constants, with
coefficients passing variables via the sigma automorphisms. The engine
memoizes single-variable insertions per presentation, which keeps repeated
division/completion work cheap.
"""

from __future__ import annotations

from typing import Iterable, Optional, Tuple

from skewpbw import kernels, parsing
from skewpbw.parsing import ParseError
from skewpbw.presentation import Presentation
from skewpbw.scalars import Scalar


class MonomialOrder:
    """Total degree-first order on exponents, as a flat sort key."""

    __slots__ = ("kind", "mask", "name")

    def __init__(self, kind: str, mask: Optional[tuple] = None, name: str = ""):
        self.kind = kind
        self.mask = mask
        self.name = name or kind

    def key(self, exp: tuple) -> tuple:
        if self.kind == "deglex":
            return kernels.deglex_key(exp)
        if self.kind == "degrevlex":
            return kernels.degrevlex_key(exp)
        return kernels.block_key(exp, self.mask)

    def compare(self, a: tuple, b: tuple) -> int:
        if len(a) != len(b):
            raise ValueError("exponent length mismatch")
        ka, kb = self.key(a), self.key(b)
        return (ka > kb) - (ka < kb)

    @staticmethod
    def block(front_indices: Iterable[int], n: int) -> "MonomialOrder":
        front = set(front_indices)
        mask = tuple(1 if k in front else 0 for k in range(n))
        return MonomialOrder("block", mask, name="block")

    def __repr__(self):
        return f"MonomialOrder({self.name})"


DEGLEX = MonomialOrder("deglex")
DEGREVLEX = MonomialOrder("degrevlex")


def compare_monomials(order: MonomialOrder, a: tuple, b: tuple) -> int:
    """Negative, zero or positive as a <, =, > b under the order."""
    return order.compare(a, b)


def monomial_divides(a: tuple, b: tuple) -> Optional[tuple]:
    """The quotient exponent b - a when a divides b componentwise, else None."""
    if len(a) != len(b):
        raise ValueError("exponent length mismatch")
    if kernels.divides(a, b):
        return kernels.exp_sub(b, a)
    return None


# ---------------------------------------------------------------------------
# rewriting engine (dict-of-exponent form)


def _acc(out: dict, exp: tuple, c: Scalar) -> None:
    cur = out.get(exp)
    if cur is None:
        out[exp] = c
    else:
        s = cur + c
        if s.is_zero():
            del out[exp]
        else:
            out[exp] = s


def _insert_var(pres: Presentation, i: int, exp: tuple) -> dict:
    """Normal form of x_i * x^exp as {exponent: coefficient}; memoized.

    Callers must treat the returned dict as read-only.
    """
    key = (i, exp)
    cached = pres._insert_cache.get(key)
    if cached is not None:
        return cached
    j = -1
    for k in range(i):
        if exp[k] > 0:
            j = k
            break
    if j < 0:
        e2 = list(exp)
        e2[i] += 1
        result = {tuple(e2): pres.field.one}
    else:
        rest = list(exp)
        rest[j] -= 1
        rest = tuple(rest)
        rel = pres.relations[(j, i)]
        out: dict = {}
        # x_i x_j = c x_j x_i + (linear + const), so
        # x_i x^exp = c * x_j * (x_i x^rest) + (linear + const) * x^rest
        inner = _insert_var(pres, i, rest)
        sigma_trivial = pres.sigma[j].is_identity()
        for e, cf in inner.items():
            cf2 = cf if sigma_trivial else pres.sigma_apply(j, cf)
            cf2 = rel.c * cf2
            for e3, k3 in _insert_var(pres, j, e).items():
                _acc(out, e3, cf2 * k3)
        for k, a in enumerate(rel.linear):
            if a.is_zero():
                continue
            for e3, k3 in _insert_var(pres, k, rest).items():
                _acc(out, e3, a * k3)
        if not rel.const.is_zero():
            _acc(out, rest, rel.const)
        result = out
    pres._insert_cache[key] = result
    return result


def _var_times_dict(pres: Presentation, i: int, d: dict) -> dict:
    out: dict = {}
    sigma_trivial = pres.sigma[i].is_identity()
    for e, c in d.items():
        c2 = c if sigma_trivial else pres.sigma_apply(i, c)
        for e2, k in _insert_var(pres, i, e).items():
            _acc(out, e2, c2 * k)
    return out


def _mono_times_dict(pres: Presentation, alpha: tuple, d: dict) -> dict:
    for i in range(pres.n - 1, -1, -1):
        for _ in range(alpha[i]):
            if not d:
                return d
            d = _var_times_dict(pres, i, d)
    return d


# ---------------------------------------------------------------------------
# polynomials


class Polynomial:
    """Immutable normal-ordered polynomial; terms sorted by descending deglex."""

    __slots__ = ("pres", "terms")

    def __init__(self, pres: Presentation, terms: tuple):
        self.pres = pres
        self.terms = terms

    @staticmethod
    def from_dict(pres: Presentation, d: dict) -> "Polynomial":
        items = [(e, c) for e, c in d.items() if not c.is_zero()]
        items.sort(key=lambda t: kernels.deglex_key(t[0]), reverse=True)
        return Polynomial(pres, tuple(items))

    @staticmethod
    def zero(pres: Presentation) -> "Polynomial":
        return Polynomial(pres, ())

    @staticmethod
    def one(pres: Presentation) -> "Polynomial":
        return Polynomial.constant(pres, pres.field.one)

    @staticmethod
    def constant(pres: Presentation, c: Scalar) -> "Polynomial":
        c = pres.field.coerce(c)
        if c.is_zero():
            return Polynomial.zero(pres)
        return Polynomial(pres, (((0,) * pres.n, c),))

    @staticmethod
    def variable(pres: Presentation, i: int) -> "Polynomial":
        e = tuple(1 if k == i else 0 for k in range(pres.n))
        return Polynomial(pres, ((e, pres.field.one),))

    @staticmethod
    def monomial(pres: Presentation, exp: tuple, c=None) -> "Polynomial":
        c = pres.field.one if c is None else pres.field.coerce(c)
        if c.is_zero():
            return Polynomial.zero(pres)
        return Polynomial(pres, ((tuple(exp), c),))

    def to_dict(self) -> dict:
        return dict(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and not any(self.terms[0][0]))

    def constant_value(self) -> Scalar:
        if self.is_zero():
            return self.pres.field.zero
        if not self.is_constant():
            raise ValueError("not a constant polynomial")
        return self.terms[0][1]

    def degree(self) -> int:
        """Max total degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(kernels.total_degree(e) for e, _ in self.terms)

    def leading(self, order: MonomialOrder = DEGLEX) -> Optional[Tuple[tuple, Scalar]]:
        if not self.terms:
            return None
        if order.kind == "deglex":
            return self.terms[0]
        return max(self.terms, key=lambda t: order.key(t[0]))

    def scale(self, c: Scalar) -> "Polynomial":
        """Left multiplication by a scalar."""
        c = self.pres.field.coerce(c)
        if c.is_zero():
            return Polynomial.zero(self.pres)
        return Polynomial(self.pres, tuple((e, c * k) for e, k in self.terms))

    def monic(self, order: MonomialOrder = DEGLEX) -> "Polynomial":
        lead = self.leading(order)
        if lead is None:
            return self
        return self.scale(lead[1].inv())

    def _check(self, other: "Polynomial") -> None:
        if self.pres is not other.pres:
            raise ValueError("polynomials from different presentations")

    def __add__(self, other):
        other = self._coerce(other)
        self._check(other)
        out = dict(self.terms)
        for e, c in other.terms:
            _acc(out, e, c)
        return Polynomial.from_dict(self.pres, out)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        self._check(other)
        out = dict(self.terms)
        for e, c in other.terms:
            _acc(out, e, -c)
        return Polynomial.from_dict(self.pres, out)

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __neg__(self):
        return Polynomial(self.pres, tuple((e, -c) for e, c in self.terms))

    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            return other
        return Polynomial.constant(self.pres, self.pres.field.coerce(other))

    def __mul__(self, other):
        other = self._coerce(other)
        self._check(other)
        return multiply(self, other)

    def __rmul__(self, other):
        # scalar * poly: left scaling
        return self.scale(self.pres.field.coerce(other))

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power of a polynomial")
        out = Polynomial.one(self.pres)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            if isinstance(other, int):
                return self == self._coerce(other)
            return NotImplemented
        return self.pres is other.pres and self.terms == other.terms

    def __hash__(self):
        return hash((id(self.pres), self.terms))

    def __repr__(self):
        return to_string(self)

    def __str__(self):
        return to_string(self)


def multiply(f: Polynomial, g: Polynomial) -> Polynomial:
    """Normal-ordered product in the algebra."""
    if f.pres is not g.pres:
        raise ValueError("polynomials from different presentations")
    pres = f.pres
    if f.is_zero() or g.is_zero():
        return Polynomial.zero(pres)
    gdict = g.to_dict()
    out: dict = {}
    for alpha, a in f.terms:
        part = _mono_times_dict(pres, alpha, gdict)
        for e, c in part.items():
            _acc(out, e, a * c)
    return Polynomial.from_dict(pres, out)


def monomial_product(pres: Presentation, alpha: tuple, beta: tuple):
    """x^alpha * x^beta as (c, p) with the product equal to c*x^(a+b) + p."""
    d = dict(_mono_times_dict(pres, tuple(alpha), {tuple(beta): pres.field.one}))
    top = kernels.exp_add(tuple(alpha), tuple(beta))
    c = d.pop(top, pres.field.zero)
    assert not c.is_zero(), "leading constant of a monomial product is invertible"
    return c, Polynomial.from_dict(pres, d)


def commute_scalar(pres: Presentation, alpha: tuple, r: Scalar):
    """x^alpha * r = sigma^alpha(r) * x^alpha (+ 0 over field coefficients)."""
    return pres.sigma_power_apply(tuple(alpha), pres.field.coerce(r)), Polynomial.zero(pres)


def leading_data(order: MonomialOrder, f: Polynomial):
    """(lm exponent, lc, leading term) or None for the zero polynomial."""
    lead = f.leading(order)
    if lead is None:
        return None
    exp, c = lead
    return exp, c, Polynomial.monomial(f.pres, exp, c)


def exponents_of_degree(n: int, d: int):
    if n == 1:
        yield (d,)
        return
    for first in range(d, -1, -1):
        for rest in exponents_of_degree(n - 1, d - first):
            yield (first,) + rest


def exponents_up_to(n: int, d: int) -> list:
    """All exponents of total degree <= d, ascending degree then lex-descending."""
    return [e for k in range(d + 1) for e in exponents_of_degree(n, k)]


# ---------------------------------------------------------------------------
# text form


def to_string(f: Polynomial) -> str:
    if f.is_zero():
        return "0"
    parts = []
    for exp, c in f.terms:
        mono = "*".join(
            nm if k == 1 else f"{nm}^{k}"
            for nm, k in zip(f.pres.names, exp)
            if k
        )
        cs = str(c)
        if not mono:
            text = cs
        elif cs == "1":
            text = mono
        elif cs == "-1":
            text = f"-{mono}"
        else:
            text = f"({cs})*{mono}" if _needs_parens(cs) else f"{cs}*{mono}"
        parts.append(text)
    out = parts[0]
    for p in parts[1:]:
        out += f" - {p[1:]}" if p.startswith("-") else f" + {p}"
    return out


def _needs_parens(cs: str) -> bool:
    # compound scalars print pre-parenthesized; bare sums still need wrapping
    if cs.startswith("("):
        return False
    core = cs[1:] if cs.startswith("-") else cs
    return any(ch in core for ch in "+-")


def parse_polynomial(text: str, pres: Presentation) -> Polynomial:
    """Parse the polynomial grammar and normal-order through the engine.

    Variables may appear in any written order (e.g. "y*x" in the quantum
    plane); the result is the normal form of the written expression.
    """
    ast = parsing.parse_ast(text)
    return _eval_ast(ast, pres)


def _eval_ast(node, pres: Presentation) -> Polynomial:
    kind = node[0]
    if kind == "int":
        return Polynomial.constant(pres, pres.field.from_int(node[1]))
    if kind == "sym":
        name = node[1]
        if name in pres.names:
            return Polynomial.variable(pres, pres.names.index(name))
        return Polynomial.constant(
            pres, parsing._scalar_symbol(pres.field, name, node[2])
        )
    if kind == "neg":
        return -_eval_ast(node[1], pres)
    if kind == "add":
        return _eval_ast(node[1], pres) + _eval_ast(node[2], pres)
    if kind == "sub":
        return _eval_ast(node[1], pres) - _eval_ast(node[2], pres)
    if kind == "mul":
        return _eval_ast(node[1], pres) * _eval_ast(node[2], pres)
    if kind == "div":
        den = _eval_ast(node[2], pres)
        if not den.is_constant() or den.is_zero():
            raise ParseError("division only by nonzero scalars")
        return _eval_ast(node[1], pres) * Polynomial.constant(
            pres, den.constant_value().inv()
        )
    if kind == "pow":
        k = node[2]
        base = _eval_ast(node[1], pres)
        if k < 0:
            if not base.is_constant() or base.is_zero():
                raise ParseError("negative power of a non-scalar")
            return Polynomial.constant(pres, base.constant_value() ** k)
        return base ** k
    raise ParseError(f"bad node {kind!r}")
