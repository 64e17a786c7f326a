"""Skew PBW presentations: n variables over a field with commutation data.

A presentation stores, for every pair i < j, the constants of the rule

    x_j * x_i = c * x_i * x_j + a_1 * x_1 + ... + a_n * x_n + d

with c nonzero, plus one field automorphism per variable (the coefficient
commutation x_i * r = sigma_i(r) * x_i; the coefficient-level derivations
are zero for field coefficients). Variable order fixes deglex precedence:
the first declared variable is the largest.
"""

from __future__ import annotations

import hashlib
import itertools
from dataclasses import dataclass
from typing import Optional

from skewpbw import parsing
from skewpbw.parsing import ParseError
from skewpbw.scalars import (
    AutomorphismSpec,
    Field,
    FieldSpec,
    Scalar,
    apply_automorphism,
    automorphism_power,
    get_field,
    validate_automorphism,
)

class PresentationError(ValueError):
    """Invalid presentation document or relation data."""


def _reserved_symbols(field: Field) -> set:
    """Scalar-grammar symbols that would shadow variables over this field."""
    from skewpbw.scalars import CyclotomicField, GaussianRationalField

    if isinstance(field, GaussianRationalField):
        return {"i"}
    if isinstance(field, CyclotomicField):
        return {"z", "i"} if field.m == 4 else {"z"}
    return set()


@dataclass(frozen=True)
class Relation:
    c: Scalar
    linear: tuple  # n Scalars
    const: Scalar

    def is_trivial_lower(self) -> bool:
        return all(a.is_zero() for a in self.linear) and self.const.is_zero()


@dataclass(frozen=True)
class ClassificationFlags:
    quasi_commutative: bool
    bijective: bool


class Presentation:
    """Immutable algebra presentation; carries the normal-form caches."""

    def __init__(self, field: Field, names, sigma=None, relations=None):
        names = tuple(names)
        if len(set(names)) != len(names):
            raise PresentationError("duplicate variable names")
        reserved = _reserved_symbols(field)
        for nm in names:
            if nm in reserved:
                raise PresentationError(
                    f"variable name {nm!r} collides with a scalar symbol of {field.spec}"
                )
        self.field = field
        self.names = names
        self.n = len(names)
        if sigma is None:
            sigma = (AutomorphismSpec.identity(),) * self.n
        self.sigma = tuple(sigma)
        for s in self.sigma:
            validate_automorphism(s, field)
        rels = {}
        for i in range(self.n):
            for j in range(i + 1, self.n):
                rel = relations.get((i, j)) if relations else None
                if rel is None:
                    rel = Relation(field.one, (field.zero,) * self.n, field.zero)
                if rel.c.is_zero():
                    raise PresentationError(
                        f"relation {names[j]}*{names[i]}: leading constant must be nonzero"
                    )
                rels[(i, j)] = rel
        self.relations = rels
        self.sigma_all_identity = all(s.is_identity() for s in self.sigma)
        self.quasi_commutative = all(
            rel.is_trivial_lower() for rel in rels.values()
        )
        self._insert_cache: dict = {}
        self._point_ideals: dict = {}
        self._sigma_pow: dict = {}

    # -- coefficient commutation -------------------------------------------

    def sigma_apply(self, i: int, s: Scalar) -> Scalar:
        if self.sigma[i].is_identity():
            return s
        return apply_automorphism(self.sigma[i], s)

    def sigma_power_apply(self, alpha, s: Scalar) -> Scalar:
        """sigma^alpha = sigma_1^a1 o ... o sigma_n^an applied to s."""
        if self.sigma_all_identity or s.is_zero():
            return s
        for i in range(self.n - 1, -1, -1):
            t = alpha[i]
            if t == 0 or self.sigma[i].is_identity():
                continue
            key = (i, t)
            spec = self._sigma_pow.get(key)
            if spec is None:
                spec = automorphism_power(self.sigma[i], t, self.field)
                self._sigma_pow[key] = spec
            s = apply_automorphism(spec, s)
        return s

    def sigma_power_unapply(self, alpha, s: Scalar) -> Scalar:
        """Inverse of sigma_power_apply (sigma_i are bijective on the field)."""
        if self.sigma_all_identity or s.is_zero():
            return s
        from skewpbw.scalars import automorphism_inverse

        for i in range(self.n):
            t = alpha[i]
            if t == 0 or self.sigma[i].is_identity():
                continue
            spec = automorphism_power(self.sigma[i], t, self.field)
            s = apply_automorphism(automorphism_inverse(spec, self.field), s)
        return s

    def index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise PresentationError(f"unknown variable {name!r}") from None

    def __eq__(self, other):
        return self is other

    def __hash__(self):
        return id(self)

    def __repr__(self):
        return f"Presentation({self.field.spec}; {', '.join(self.names)})"


def classify(pres: Presentation) -> ClassificationFlags:
    # field coefficients force bijectivity: sigma invertible, c_ij units
    return ClassificationFlags(pres.quasi_commutative, True)


def commutative_presentation(field: Field, names) -> Presentation:
    return Presentation(field, names)


def quantum_plane(field: Field, q: Scalar, names=("x", "y")) -> Presentation:
    """y*x = q*x*y in two variables."""
    if len(names) != 2:
        raise PresentationError("quantum plane has two variables")
    rel = Relation(q, (field.zero, field.zero), field.zero)
    return Presentation(field, names, relations={(0, 1): rel})


def quantum_space(field: Field, q_pairs: dict, names) -> Presentation:
    """x_j*x_i = q_ij*x_i*x_j for each pair i < j (missing pairs commute)."""
    names = tuple(names)
    n = len(names)
    rels = {}
    for (i, j), q in q_pairs.items():
        rels[(i, j)] = Relation(q, (field.zero,) * n, field.zero)
    return Presentation(field, names, relations=rels)


def extend_with_central(pres: Presentation, name: str = "t") -> Presentation:
    """New presentation with one fresh central variable in front (index 0)."""
    if name in pres.names or name in _reserved_symbols(pres.field):
        raise PresentationError(f"cannot extend with variable {name!r}")
    field = pres.field
    names = (name,) + pres.names
    n = pres.n + 1
    zero = field.zero
    rels = {}
    for (i, j), rel in pres.relations.items():
        rels[(i + 1, j + 1)] = Relation(rel.c, (zero,) + rel.linear, rel.const)
    sigma = (AutomorphismSpec.identity(),) + pres.sigma
    return Presentation(field, names, sigma=sigma, relations=rels)


# ---------------------------------------------------------------------------
# documents


def load_presentation(text: str) -> Presentation:
    """Parse a presentation document (field/vars/sigma/relation lines)."""
    field: Optional[Field] = None
    names: Optional[tuple] = None
    sigma_tags: dict = {}
    relation_lines: list = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if ":" not in line:
            raise PresentationError(f"line {lineno}: expected 'key: value'")
        key, value = line.split(":", 1)
        key = key.strip().lower()
        value = value.strip()
        if key == "field":
            field = get_field(FieldSpec.from_string(value))
        elif key == "vars":
            names = tuple(v.strip() for v in value.split(",") if v.strip())
        elif key == "sigma":
            for item in parsing.split_top_level(value, ","):
                if "=" not in item:
                    raise PresentationError(
                        f"line {lineno}: sigma entries look like 'x = conj'"
                    )
                var, tag = item.split("=", 1)
                sigma_tags[var.strip()] = AutomorphismSpec.from_string(tag)
        elif key == "relation":
            relation_lines.append((lineno, value))
        else:
            raise PresentationError(f"line {lineno}: unknown key {key!r}")
    if field is None:
        raise PresentationError("missing 'field:' line")
    if not names:
        raise PresentationError("missing 'vars:' line")
    index = {nm: k for k, nm in enumerate(names)}
    for var in sigma_tags:
        if var not in index:
            raise PresentationError(f"sigma for unknown variable {var!r}")
    sigma = tuple(
        sigma_tags.get(nm, AutomorphismSpec.identity()) for nm in names
    )

    relations = {}
    for lineno, line in relation_lines:
        if "=" not in line:
            raise PresentationError(f"line {lineno}: relation needs '='")
        lhs, rhs = line.split("=", 1)
        i, j = _parse_relation_lhs(lhs, index, lineno)
        if (i, j) in relations:
            raise PresentationError(
                f"line {lineno}: duplicate relation for {names[j]}*{names[i]}"
            )
        relations[(i, j)] = _parse_relation_rhs(
            rhs, field, index, i, j, lineno, names
        )
    return Presentation(field, names, sigma=sigma, relations=relations)


def load_presentation_file(path: str) -> Presentation:
    with open(path, "r", encoding="utf-8") as fh:
        return load_presentation(fh.read())


def _parse_relation_lhs(lhs: str, index: dict, lineno: int):
    parts = [p.strip() for p in lhs.strip().split("*")]
    if len(parts) != 2:
        raise PresentationError(
            f"line {lineno}: relation left side must be 'x_j*x_i'"
        )
    for p in parts:
        if p not in index:
            raise PresentationError(f"line {lineno}: unknown variable {p!r}")
    j, i = index[parts[0]], index[parts[1]]
    if j <= i:
        raise PresentationError(
            f"line {lineno}: left side must be (later var)*(earlier var), "
            f"got {parts[0]}*{parts[1]}"
        )
    return i, j


def _parse_relation_rhs(
    rhs: str, field: Field, index: dict, i: int, j: int, lineno: int, names
) -> Relation:
    try:
        ast = parsing.parse_ast(rhs)
        terms = parsing.collect_commutative(ast, field, index)
    except ParseError as exc:
        raise PresentationError(f"line {lineno}: {exc}") from exc
    n = len(index)
    c = field.zero
    linear = [field.zero] * n
    const = field.zero
    pair_exp = tuple(
        1 if k in (i, j) else 0 for k in range(n)
    )
    for exp, coeff in terms.items():
        if exp == pair_exp:
            c = coeff
        elif sum(exp) == 0:
            const = coeff
        elif sum(exp) == 1:
            linear[exp.index(1)] = coeff
        else:
            raise PresentationError(
                f"line {lineno}: right side must be c*{names[i]}*{names[j]}"
                f" + linear terms + constant"
            )
    if c.is_zero():
        raise PresentationError(
            f"line {lineno}: coefficient of {names[i]}*{names[j]} must be nonzero"
        )
    return Relation(c, tuple(linear), const)


def serialize_presentation(pres: Presentation) -> str:
    """Canonical document text; load(serialize(P)) reproduces P."""
    lines = [f"field: {pres.field.spec}", "vars: " + ", ".join(pres.names)]
    tags = [
        f"{nm} = {s}"
        for nm, s in zip(pres.names, pres.sigma)
        if not s.is_identity()
    ]
    if tags:
        lines.append("sigma: " + ", ".join(tags))
    for (i, j), rel in sorted(pres.relations.items()):
        parts = [_coeff_times(rel.c, f"{pres.names[i]}*{pres.names[j]}")]
        for k, a in enumerate(rel.linear):
            if not a.is_zero():
                parts.append(_coeff_times(a, pres.names[k]))
        if not rel.const.is_zero():
            parts.append(str(rel.const))
        rhs = parts[0]
        for p in parts[1:]:
            rhs += f" - {p[1:]}" if p.startswith("-") else f" + {p}"
        lines.append(f"relation: {pres.names[j]}*{pres.names[i]} = {rhs}")
    return "\n".join(lines) + "\n"


def _coeff_times(c: Scalar, mono: str) -> str:
    text = str(c)
    if text == "1":
        return mono
    if text == "-1":
        return f"-{mono}"
    core = text[1:] if text.startswith("-") else text
    compound = any(ch in core for ch in "+-") and not text.startswith("(")
    return f"({text})*{mono}" if compound else f"{text}*{mono}"


def presentation_hash(pres: Presentation) -> str:
    return hashlib.sha256(serialize_presentation(pres).encode()).hexdigest()[:16]


# ---------------------------------------------------------------------------
# consistency probe


@dataclass
class ConsistencyReport:
    consistent: bool
    checked: int
    failure: Optional[tuple] = None  # (exp_a, exp_b, exp_c, difference repr)

    def __bool__(self):
        return self.consistent


def check_pbw_consistency(pres: Presentation, degree_bound: int = 4) -> ConsistencyReport:
    """Associativity scan of the rewriting engine up to a total degree.

    Checks (x^a * x^b) * x^c == x^a * (x^b * x^c) for all variable triples
    and then for every monomial triple with |a|+|b|+|c| <= degree_bound.
    A failing triple witnesses an inconsistent presentation (the PBW basis
    assumption cannot hold for the given constants).
    """
    from skewpbw import poly  # deferred: poly imports this module

    if degree_bound < 3:
        raise PresentationError("degree bound must be >= 3")
    n = pres.n
    checked = 0

    def mono(exp):
        return poly.Polynomial.monomial(pres, exp, pres.field.one)

    def probe(ea, eb, ec) -> Optional[tuple]:
        nonlocal checked
        checked += 1
        a, b, c = mono(ea), mono(eb), mono(ec)
        left = (a * b) * c
        right = a * (b * c)
        if left != right:
            return (ea, eb, ec, str(left - right))
        return None

    unit = lambda k: tuple(1 if t == k else 0 for t in range(n))
    for k in range(n - 1, -1, -1):
        for jj in range(n - 1, -1, -1):
            for ii in range(n - 1, -1, -1):
                bad = probe(unit(k), unit(jj), unit(ii))
                if bad:
                    return ConsistencyReport(False, checked, bad)

    exps = [
        e
        for d in range(0, degree_bound + 1)
        for e in _exponents_of_degree(n, d)
    ]
    for ea, eb, ec in itertools.product(exps, repeat=3):
        if sum(ea) + sum(eb) + sum(ec) > degree_bound:
            continue
        bad = probe(ea, eb, ec)
        if bad:
            return ConsistencyReport(False, checked, bad)
    return ConsistencyReport(True, checked)


def _exponents_of_degree(n: int, d: int):
    if n == 1:
        yield (d,)
        return
    for first in range(d + 1):
        for rest in _exponents_of_degree(n - 1, d - first):
            yield (first,) + rest
