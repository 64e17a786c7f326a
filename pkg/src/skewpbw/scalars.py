"""Exact arithmetic for the coefficient fields and their automorphisms.

Supported fields: the rationals Q, the Gaussian rationals Q(i), cyclotomic
fields Q(z_m) in the power basis reduced mod the m-th cyclotomic polynomial,
and prime fields GF(p). Every value has a unique canonical form, so equality
is plain structural equality.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union


class FieldError(ValueError):
    """Invalid field construction or operation."""


class FieldMismatchError(FieldError):
    """Operands belong to different fields."""


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


# ---------------------------------------------------------------------------
# field specs


@dataclass(frozen=True)
class FieldSpec:
    """Which coefficient field: Q, Q(i), cyclotomic:m or gf:p."""

    kind: str
    param: Optional[int] = None

    @staticmethod
    def rationals() -> "FieldSpec":
        return FieldSpec("Q")

    @staticmethod
    def gaussian() -> "FieldSpec":
        return FieldSpec("Q(i)")

    @staticmethod
    def cyclotomic(m: int) -> "FieldSpec":
        return FieldSpec("cyclotomic", m)

    @staticmethod
    def prime(p: int) -> "FieldSpec":
        return FieldSpec("gf", p)

    @staticmethod
    def from_string(text: str) -> "FieldSpec":
        text = text.strip()
        if text == "Q":
            return FieldSpec.rationals()
        if text == "Q(i)":
            return FieldSpec.gaussian()
        if text.startswith("cyclotomic:"):
            return FieldSpec.cyclotomic(int(text.split(":", 1)[1]))
        if text.startswith("gf:"):
            return FieldSpec.prime(int(text.split(":", 1)[1]))
        raise FieldError(f"unknown field spec {text!r}")

    def __str__(self) -> str:
        if self.kind in ("Q", "Q(i)"):
            return self.kind
        return f"{self.kind}:{self.param}"


class Scalar:
    """A field element; immutable, canonical, hashable. Arithmetic via dunders."""

    __slots__ = ("field", "value")

    def __init__(self, field: "Field", value):
        self.field = field
        self.value = value

    def _operand(self, other):
        # non-scalar operands (e.g. polynomials) defer to the reflected op
        if isinstance(other, (Scalar, int, Fraction)):
            return self.field.coerce(other)
        return None

    def __add__(self, other):
        o = self._operand(other)
        if o is None:
            return NotImplemented
        return self.field.add(self, o)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._operand(other)
        if o is None:
            return NotImplemented
        return self.field.add(self, self.field.neg(o))

    def __rsub__(self, other):
        o = self._operand(other)
        if o is None:
            return NotImplemented
        return self.field.add(o, self.field.neg(self))

    def __mul__(self, other):
        o = self._operand(other)
        if o is None:
            return NotImplemented
        return self.field.mul(self, o)

    __rmul__ = __mul__

    def __neg__(self):
        return self.field.neg(self)

    def __truediv__(self, other):
        o = self._operand(other)
        if o is None:
            return NotImplemented
        return self.field.mul(self, self.field.inv(o))

    def inv(self) -> "Scalar":
        return self.field.inv(self)

    def __pow__(self, k: int) -> "Scalar":
        if k < 0:
            return self.field.inv(self) ** (-k)
        out = self.field.one
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def is_zero(self) -> bool:
        return self.value == self.field.zero.value

    def __eq__(self, other):
        if isinstance(other, Scalar):
            return self.field is other.field and self.value == other.value
        if isinstance(other, (int, Fraction)):
            try:
                return self.value == self.field.coerce(other).value
            except FieldError:
                return NotImplemented
        return NotImplemented

    def __hash__(self):
        return hash((id(self.field), self.value))

    def __repr__(self):
        return self.field.format(self)

    def __str__(self):
        return self.field.format(self)


class Field:
    """Base field context: constants, arithmetic closure, canonical formatting."""

    spec: FieldSpec

    def coerce(self, v: Union[Scalar, int, Fraction]) -> Scalar:
        if isinstance(v, Scalar):
            if v.field is not self:
                raise FieldMismatchError(
                    f"scalar of {v.field.spec} used in {self.spec}"
                )
            return v
        if isinstance(v, int):
            return self.from_int(v)
        if isinstance(v, Fraction):
            return self.from_fraction(v)
        raise FieldError(f"cannot coerce {v!r} into {self.spec}")

    def from_int(self, k: int) -> Scalar:
        raise NotImplementedError

    def from_fraction(self, q: Fraction) -> Scalar:
        raise NotImplementedError

    def add(self, a: Scalar, b: Scalar) -> Scalar:
        raise NotImplementedError

    def mul(self, a: Scalar, b: Scalar) -> Scalar:
        raise NotImplementedError

    def neg(self, a: Scalar) -> Scalar:
        raise NotImplementedError

    def inv(self, a: Scalar) -> Scalar:
        raise NotImplementedError

    def eq(self, a: Scalar, b: Scalar) -> bool:
        self.coerce(a)
        self.coerce(b)
        return a.value == b.value

    def format(self, a: Scalar) -> str:
        raise NotImplementedError

    def primitive(self) -> Optional[Scalar]:
        """A generator of the field over its prime field, or None for Q/GF(p)."""
        return None

    # prime-field vector space interface (used by the semilinear solver)

    @property
    def prime_dim(self) -> int:
        return 1

    def prime_field(self) -> "Field":
        return self

    def to_vector(self, a: Scalar) -> tuple:
        return (a,)

    def from_vector(self, vec) -> Scalar:
        return vec[0]

    def __repr__(self):
        return f"Field({self.spec})"


class RationalField(Field):
    def __init__(self):
        self.spec = FieldSpec.rationals()
        self.zero = Scalar(self, Fraction(0))
        self.one = Scalar(self, Fraction(1))

    def from_int(self, k):
        return Scalar(self, Fraction(k))

    def from_fraction(self, q):
        return Scalar(self, q)

    def add(self, a, b):
        return Scalar(self, a.value + b.value)

    def mul(self, a, b):
        return Scalar(self, a.value * b.value)

    def neg(self, a):
        return Scalar(self, -a.value)

    def inv(self, a):
        if a.value == 0:
            raise ZeroDivisionError("inverse of 0")
        return Scalar(self, 1 / a.value)

    def format(self, a):
        return str(a.value)


class GaussianRationalField(Field):
    """Q(i); values are pairs (re, im) of Fractions."""

    def __init__(self):
        self.spec = FieldSpec.gaussian()
        self.zero = Scalar(self, (Fraction(0), Fraction(0)))
        self.one = Scalar(self, (Fraction(1), Fraction(0)))
        self.i = Scalar(self, (Fraction(0), Fraction(1)))

    def from_int(self, k):
        return Scalar(self, (Fraction(k), Fraction(0)))

    def from_fraction(self, q):
        return Scalar(self, (q, Fraction(0)))

    def add(self, a, b):
        return Scalar(self, (a.value[0] + b.value[0], a.value[1] + b.value[1]))

    def mul(self, a, b):
        ar, ai = a.value
        br, bi = b.value
        return Scalar(self, (ar * br - ai * bi, ar * bi + ai * br))

    def neg(self, a):
        return Scalar(self, (-a.value[0], -a.value[1]))

    def inv(self, a):
        re, im = a.value
        n = re * re + im * im
        if n == 0:
            raise ZeroDivisionError("inverse of 0")
        return Scalar(self, (re / n, -im / n))

    def conjugate(self, a):
        return Scalar(self, (a.value[0], -a.value[1]))

    def primitive(self):
        return self.i

    @property
    def prime_dim(self):
        return 2

    def prime_field(self):
        return get_field(FieldSpec.rationals())

    def to_vector(self, a):
        q = self.prime_field()
        return (q.from_fraction(a.value[0]), q.from_fraction(a.value[1]))

    def from_vector(self, vec):
        return Scalar(self, (vec[0].value, vec[1].value))

    def format(self, a):
        re, im = a.value
        if im == 0:
            return str(re)
        imt = "i" if abs(im) == 1 else f"{abs(im)}*i"
        if re == 0:
            return imt if im > 0 else f"-{imt}"
        sign = "+" if im > 0 else "-"
        return f"({re}{sign}{imt})"


def _poly_trim(c: list) -> list:
    while c and c[-1] == 0:
        c.pop()
    return c


def _poly_divmod(num: list, den: list):
    """Exact division of integer/Fraction coefficient lists (den monic-led)."""
    num = list(num)
    q = [Fraction(0)] * max(0, len(num) - len(den) + 1)
    lead = Fraction(den[-1])
    while len(num) >= len(den) and _poly_trim(num):
        shift = len(num) - len(den)
        coef = Fraction(num[-1]) / lead
        q[shift] = coef
        for k, d in enumerate(den):
            num[shift + k] -= coef * d
        _poly_trim(num)
    return q, num


def cyclotomic_polynomial(m: int) -> list:
    """Integer coefficients of the m-th cyclotomic polynomial, low degree first."""
    if m < 1:
        raise FieldError("cyclotomic index must be >= 1")
    # x^m - 1 = prod over d | m of Phi_d
    num = [Fraction(-1)] + [Fraction(0)] * (m - 1) + [Fraction(1)]
    for d in range(1, m):
        if m % d == 0:
            phi_d = cyclotomic_polynomial(d)
            num, rem = _poly_divmod(num, phi_d)
            assert not rem, "cyclotomic division must be exact"
    return [int(c) for c in num]


class CyclotomicField(Field):
    """Q(z_m); values are tuples of phi(m) Fractions in the power basis."""

    def __init__(self, m: int):
        if m < 1:
            raise FieldError("cyclotomic index must be >= 1")
        self.m = m
        self.spec = FieldSpec.cyclotomic(m)
        self.modulus = cyclotomic_polynomial(m)
        self.dim = len(self.modulus) - 1  # phi(m)
        self.zero = Scalar(self, (Fraction(0),) * self.dim)
        one = [Fraction(0)] * self.dim
        one[0] = Fraction(1)
        self.one = Scalar(self, tuple(one))
        # x^k mod Phi_m for k = 0..2*dim-2 (covers products) and k < m (Galois maps)
        self._xpow = self._power_table(max(2 * self.dim - 1, m))
        if self.dim >= 2:
            z = [Fraction(0)] * self.dim
            z[1] = Fraction(1)
            self.zeta = Scalar(self, tuple(z))
        else:
            # m in {1, 2}: z_1 = 1, z_2 = -1
            self.zeta = self.one if m == 1 else Scalar(self, (Fraction(-1),))

    def _power_table(self, top: int) -> list:
        table = []
        cur = [Fraction(0)] * self.dim
        cur[0] = Fraction(1)
        for _ in range(top + 1):
            table.append(tuple(cur))
            # multiply by x, reduce by the monic modulus
            nxt = [Fraction(0)] * (self.dim + 1)
            for k, c in enumerate(cur):
                nxt[k + 1] = c
            lead = nxt[self.dim]
            if lead:
                for k in range(self.dim):
                    nxt[k] -= lead * self.modulus[k]
            cur = nxt[: self.dim]
        return table

    def from_int(self, k):
        v = [Fraction(0)] * self.dim
        v[0] = Fraction(k)
        return Scalar(self, tuple(v))

    def from_fraction(self, q):
        v = [Fraction(0)] * self.dim
        v[0] = q
        return Scalar(self, tuple(v))

    def add(self, a, b):
        return Scalar(self, tuple(x + y for x, y in zip(a.value, b.value)))

    def neg(self, a):
        return Scalar(self, tuple(-x for x in a.value))

    def mul(self, a, b):
        out = [Fraction(0)] * self.dim
        for ka, ca in enumerate(a.value):
            if not ca:
                continue
            for kb, cb in enumerate(b.value):
                if not cb:
                    continue
                coef = ca * cb
                for k, c in enumerate(self._xpow[ka + kb]):
                    if c:
                        out[k] += coef * c
        return Scalar(self, tuple(out))

    def inv(self, a):
        if a.is_zero():
            raise ZeroDivisionError("inverse of 0")
        # extended Euclid in Q[x]: track r_k = s_k * a (mod Phi_m)
        r0 = [Fraction(c) for c in self.modulus]
        s0: list = [Fraction(0)]
        r1 = _poly_trim(list(a.value))
        s1 = [Fraction(1)]
        while len(r1) > 1:
            q, r = _poly_divmod(r0, r1)
            s = list(s0) + [Fraction(0)] * max(0, len(q) + len(s1) - len(s0))
            for kq, cq in enumerate(q):
                if not cq:
                    continue
                for ks, cs in enumerate(s1):
                    s[kq + ks] -= cq * cs
            r0, s0 = r1, s1
            r1, s1 = _poly_trim(list(r)), _poly_trim(s) or [Fraction(0)]
        assert r1 and r1[0], "modulus is irreducible, gcd must be a unit"
        c = r1[0]
        out = [Fraction(0)] * self.dim
        for k, cs in enumerate(s1):
            out[k] = cs / c
        return Scalar(self, tuple(out[: self.dim]))

    def galois(self, a: Scalar, k: int) -> Scalar:
        """z |-> z^k on the power basis; requires gcd(k, m) = 1."""
        out = [Fraction(0)] * self.dim
        for j, c in enumerate(a.value):
            if not c:
                continue
            for t, x in enumerate(self._xpow[(j * k) % self.m]):
                if x:
                    out[t] += c * x
        return Scalar(self, tuple(out))

    def primitive(self):
        return self.zeta

    @property
    def prime_dim(self):
        return self.dim

    def prime_field(self):
        return get_field(FieldSpec.rationals())

    def to_vector(self, a):
        q = self.prime_field()
        return tuple(q.from_fraction(c) for c in a.value)

    def from_vector(self, vec):
        return Scalar(self, tuple(v.value for v in vec))

    def format(self, a):
        parts = []
        for k, c in enumerate(a.value):
            if not c:
                continue
            if k == 0:
                parts.append(str(c))
            else:
                zt = "z" if k == 1 else f"z^{k}"
                if c == 1:
                    parts.append(zt)
                elif c == -1:
                    parts.append(f"-{zt}")
                else:
                    parts.append(f"{c}*{zt}")
        if not parts:
            return "0"
        text = parts[0]
        for p in parts[1:]:
            text += ("+" + p) if not p.startswith("-") else p
        return f"({text})" if len(parts) > 1 else text


class PrimeField(Field):
    def __init__(self, p: int):
        if not _is_prime(p):
            raise FieldError(f"{p} is not prime")
        self.p = p
        self.spec = FieldSpec.prime(p)
        self.zero = Scalar(self, 0)
        self.one = Scalar(self, 1 % p)

    def from_int(self, k):
        return Scalar(self, k % self.p)

    def from_fraction(self, q):
        den = q.denominator % self.p
        if den == 0:
            raise FieldError(f"denominator {q.denominator} vanishes mod {self.p}")
        return Scalar(self, q.numerator * pow(den, -1, self.p) % self.p)

    def add(self, a, b):
        return Scalar(self, (a.value + b.value) % self.p)

    def mul(self, a, b):
        return Scalar(self, (a.value * b.value) % self.p)

    def neg(self, a):
        return Scalar(self, (-a.value) % self.p)

    def inv(self, a):
        if a.value == 0:
            raise ZeroDivisionError("inverse of 0")
        return Scalar(self, pow(a.value, -1, self.p))

    def elements(self):
        return [Scalar(self, v) for v in range(self.p)]

    def format(self, a):
        return str(a.value)


_FIELD_CACHE: dict = {}


def get_field(spec: FieldSpec) -> Field:
    """Field context for a spec; cached so `is` identity works per spec."""
    if spec not in _FIELD_CACHE:
        if spec.kind == "Q":
            _FIELD_CACHE[spec] = RationalField()
        elif spec.kind == "Q(i)":
            _FIELD_CACHE[spec] = GaussianRationalField()
        elif spec.kind == "cyclotomic":
            _FIELD_CACHE[spec] = CyclotomicField(spec.param)
        elif spec.kind == "gf":
            _FIELD_CACHE[spec] = PrimeField(spec.param)
        else:
            raise FieldError(f"unknown field kind {spec.kind!r}")
    return _FIELD_CACHE[spec]


def make_field(spec: FieldSpec) -> Field:
    return get_field(spec)


# ---------------------------------------------------------------------------
# automorphisms


@dataclass(frozen=True)
class AutomorphismSpec:
    """A field automorphism tag: identity, conj, galois:k or frobenius:e."""

    kind: str
    param: int = 0

    @staticmethod
    def identity() -> "AutomorphismSpec":
        return AutomorphismSpec("identity")

    @staticmethod
    def conjugation() -> "AutomorphismSpec":
        return AutomorphismSpec("conj")

    @staticmethod
    def galois(k: int) -> "AutomorphismSpec":
        return AutomorphismSpec("galois", k)

    @staticmethod
    def frobenius(e: int) -> "AutomorphismSpec":
        return AutomorphismSpec("frobenius", e)

    @staticmethod
    def from_string(text: str) -> "AutomorphismSpec":
        text = text.strip()
        if text in ("identity", "id"):
            return AutomorphismSpec.identity()
        if text == "conj":
            return AutomorphismSpec.conjugation()
        if text.startswith("galois:"):
            return AutomorphismSpec.galois(int(text.split(":", 1)[1]))
        if text.startswith("frobenius:"):
            return AutomorphismSpec.frobenius(int(text.split(":", 1)[1]))
        raise FieldError(f"unknown automorphism {text!r}")

    def is_identity(self) -> bool:
        return self.kind == "identity"

    def __str__(self) -> str:
        if self.kind in ("identity", "conj"):
            return self.kind
        return f"{self.kind}:{self.param}"


def validate_automorphism(spec: AutomorphismSpec, field: Field) -> None:
    """Reject specs that are not automorphisms of the given field."""
    if spec.kind == "identity":
        return
    if spec.kind == "conj":
        if isinstance(field, (GaussianRationalField, CyclotomicField, RationalField)):
            return
        raise FieldError(f"conjugation undefined on {field.spec}")
    if spec.kind == "galois":
        if isinstance(field, CyclotomicField):
            m = field.m
        elif isinstance(field, GaussianRationalField):
            m = 4
        else:
            raise FieldError(f"galois power undefined on {field.spec}")
        if math.gcd(spec.param, m) != 1:
            raise FieldError(f"galois exponent {spec.param} not coprime to {m}")
        return
    if spec.kind == "frobenius":
        if isinstance(field, PrimeField):
            if spec.param < 0:
                raise FieldError("frobenius power must be >= 0")
            return
        raise FieldError(f"frobenius undefined on {field.spec}")
    raise FieldError(f"unknown automorphism kind {spec.kind!r}")


def apply_automorphism(spec: AutomorphismSpec, a: Scalar) -> Scalar:
    field = a.field
    validate_automorphism(spec, field)
    if spec.kind == "identity":
        return a
    if spec.kind == "conj":
        if isinstance(field, RationalField):
            return a
        if isinstance(field, GaussianRationalField):
            return field.conjugate(a)
        return field.galois(a, field.m - 1 if field.m > 2 else 1)
    if spec.kind == "galois":
        if isinstance(field, GaussianRationalField):
            return a if spec.param % 4 == 1 else field.conjugate(a)
        return field.galois(a, spec.param % field.m)
    # frobenius on GF(p): x^(p^e) = x by Fermat
    return a


def automorphism_inverse(spec: AutomorphismSpec, field: Field) -> AutomorphismSpec:
    validate_automorphism(spec, field)
    if spec.kind in ("identity", "conj", "frobenius"):
        return spec
    m = field.m if isinstance(field, CyclotomicField) else 4
    return AutomorphismSpec.galois(pow(spec.param, -1, m))


def automorphism_power(spec: AutomorphismSpec, t: int, field: Field) -> AutomorphismSpec:
    """spec composed with itself t times, collapsed to a single tag."""
    if t == 0 or spec.kind == "identity":
        return AutomorphismSpec.identity()
    if spec.kind == "conj":
        return spec if t % 2 == 1 else AutomorphismSpec.identity()
    if spec.kind == "galois":
        m = field.m if isinstance(field, CyclotomicField) else 4
        k = pow(spec.param, t, m)
        return AutomorphismSpec.identity() if k == 1 else AutomorphismSpec.galois(k)
    return AutomorphismSpec.frobenius(spec.param * t)


def field_op(kind: str, a: Scalar, b: Optional[Scalar] = None):
    """Uniform entry point for add/mul/neg/inv/eq; used by the CLI."""
    f = a.field
    if kind == "add":
        return f.add(a, f.coerce(b))
    if kind == "mul":
        return f.mul(a, f.coerce(b))
    if kind == "neg":
        return f.neg(a)
    if kind == "inv":
        return f.inv(a)
    if kind == "eq":
        return f.eq(a, f.coerce(b))
    raise FieldError(f"unknown field op {kind!r}")
