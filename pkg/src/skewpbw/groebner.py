"""Division, left Groebner bases, two-sided saturation and intersection.

The division algorithm peels leading terms: a term whose monomial is
divisible by some divisor's leading monomial is cancelled exactly (over a
field the coefficient condition is always solvable), otherwise it moves to
the remainder. Completion is Buchberger-style on left S-elements with the
normal selection strategy; two-sided ideals are handled by alternating left
completion with reduced right multiples. Budgets make `unknown` a first
class outcome: right closure need not terminate in general.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

from skewpbw import kernels
from skewpbw.poly import (
    DEGLEX,
    MonomialOrder,
    Polynomial,
    _acc,
    _mono_times_dict,
    multiply,
)
from skewpbw.presentation import Presentation, extend_with_central


class GroebnerError(ValueError):
    pass


@dataclass
class Budget:
    """Caps for completion/saturation work; exceeding one yields `unknown`."""

    max_degree: int = 12
    max_pairs: int = 100_000
    max_rounds: int = 50


DEFAULT_BUDGET = Budget()


# ---------------------------------------------------------------------------
# division


@dataclass
class DivisionResult:
    quotients: List[Polynomial]
    remainder: Polynomial

    def reconstruct(self, divisors: Sequence[Polynomial]) -> Polynomial:
        out = self.remainder
        for q, g in zip(self.quotients, divisors):
            out = out + q * g
        return out


def divide(
    f: Polynomial,
    divisors: Sequence[Polynomial],
    order: MonomialOrder = DEGLEX,
) -> DivisionResult:
    """f = sum q_i * f_i + h with h reduced w.r.t. the divisors.

    Reduced means no term of h has a monomial divisible by any lm(f_i);
    terms are processed largest first, so lm(f) = max of the partial
    product leads and lm(h). Raises on an empty divisor list or a zero
    divisor.
    """
    if not divisors:
        raise GroebnerError("division requires at least one divisor")
    pres = f.pres
    lead_exps = []
    for g in divisors:
        if g.pres is not pres:
            raise GroebnerError("divisors from a different presentation")
        lead = g.leading(order)
        if lead is None:
            raise GroebnerError("division by the zero polynomial")
        lead_exps.append(lead[0])

    div_dicts = [g.to_dict() for g in divisors]
    work = f.to_dict()
    heap = [(tuple(-v for v in order.key(e)), e) for e in work]
    heapq.heapify(heap)
    quotients: List[dict] = [dict() for _ in divisors]
    remainder: dict = {}

    while heap:
        _, exp = heapq.heappop(heap)
        coeff = work.pop(exp, None)
        if coeff is None:
            continue  # stale entry
        i = kernels.find_divisor(lead_exps, exp)
        if i < 0:
            remainder[exp] = coeff
            continue
        theta = kernels.exp_sub(exp, lead_exps[i])
        prod = _mono_times_dict(pres, theta, div_dicts[i])
        lead_c = prod.get(exp)
        if lead_c is None or lead_c.is_zero():
            raise GroebnerError(
                "monomial order is not multiplicative for this presentation"
            )
        r = coeff * lead_c.inv()
        _acc(quotients[i], theta, r)
        for e, c in prod.items():
            if e == exp:
                continue
            fresh = e not in work
            _acc(work, e, -(r * c))
            if fresh and e in work:
                heapq.heappush(heap, (tuple(-v for v in order.key(e)), e))

    return DivisionResult(
        [Polynomial.from_dict(pres, q) for q in quotients],
        Polynomial.from_dict(pres, remainder),
    )


def remainder_of(f: Polynomial, basis: Sequence[Polynomial], order: MonomialOrder) -> Polynomial:
    if not basis:
        return f
    if f.is_zero():
        return f
    return divide(f, basis, order).remainder


# ---------------------------------------------------------------------------
# ideal handles

LEFT = "left"
TWO_SIDED = "two-sided"

PROPER = "proper"
UNIT = "unit"
UNKNOWN = "unknown"


@dataclass(frozen=True)
class GroebnerBasis:
    presentation: Presentation
    order: MonomialOrder
    elements: Tuple[Polynomial, ...]
    reduced: bool


@dataclass(frozen=True)
class IdealHandle:
    """Generators plus resolution status and (when proper) a left GB.

    For two-sided handles the basis is additionally closed under reduced
    right multiples, so left membership against it decides two-sided
    membership.
    """

    presentation: Presentation
    generators: Tuple[Polynomial, ...]
    sidedness: str
    status: str
    order: MonomialOrder
    basis: Tuple[Polynomial, ...] = ()
    certificates: Optional[tuple] = None  # per basis element: ((p, gen_idx, q), ...)
    note: str = ""

    @property
    def gb(self) -> Optional[GroebnerBasis]:
        if self.status != PROPER:
            return None
        return GroebnerBasis(self.presentation, self.order, self.basis, True)

    def is_proper(self) -> bool:
        return self.status == PROPER

    def __repr__(self):
        body = ", ".join(str(g) for g in self.basis)
        return f"IdealHandle({self.sidedness}, {self.status}, basis=[{body}])"


# internal: basis items carry an optional certificate, a tuple of triples
# (p, gen_index, q) with element == sum p * gens[gen_index] * q


def _scale_cert(cert, c):
    if cert is None:
        return None
    return tuple((p.scale(c), i, q) for p, i, q in cert)


def _left_mul_cert(cert, w: Polynomial):
    if cert is None:
        return None
    return tuple((multiply(w, p), i, q) for p, i, q in cert)


def _right_mul_cert(cert, w: Polynomial):
    if cert is None:
        return None
    return tuple((p, i, multiply(q, w)) for p, i, q in cert)


def _add_certs(a, b):
    if a is None or b is None:
        return None
    merged: dict = {}
    for p, i, q in a + b:
        key = (i, q)
        merged[key] = merged.get(key, Polynomial.zero(p.pres)) + p
    return tuple(
        (p, i, q) for (i, q), p in merged.items() if not p.is_zero()
    )


def expand_certificate(cert, gens: Sequence[Polynomial]) -> Polynomial:
    out = Polynomial.zero(gens[0].pres)
    for p, i, q in cert:
        out = out + multiply(multiply(p, gens[i]), q)
    return out


def _reduce_with_cert(
    f: Polynomial,
    cert,
    basis: List[Polynomial],
    certs: List,
    order: MonomialOrder,
    track: bool,
):
    if not basis or f.is_zero():
        return f, cert
    res = divide(f, basis, order)
    if track:
        for q, bc in zip(res.quotients, certs):
            if not q.is_zero():
                cert = _add_certs(cert, _scale_cert(_left_mul_cert(bc, q), f.pres.field.from_int(-1)))
    return res.remainder, cert


def _completion(
    items: List[Tuple[Polynomial, Optional[tuple]]],
    order: MonomialOrder,
    budget: Budget,
    track: bool,
):
    """Left Buchberger completion; returns (status, items, note).

    status UNIT means a nonzero constant was derived; the single returned
    item is that constant made monic (i.e. 1).
    """
    pres = None
    basis: List[Polynomial] = []
    certs: List = []

    def unit_result(c: Polynomial, cert):
        one = c.monic(order)
        cert = _scale_cert(cert, c.leading(order)[1].inv()) if track else None
        return UNIT, [(one, cert)], "derived a nonzero constant"

    for g, cert in items:
        if g.is_zero():
            continue
        pres = g.pres
        lc = g.leading(order)[1]
        g = g.scale(lc.inv())
        cert = _scale_cert(cert, lc.inv()) if track else None
        if g.is_constant():
            return unit_result(g, cert)
        basis.append(g)
        certs.append(cert)
    if not basis:
        return PROPER, [], ""

    pair_heap = []
    for i in range(len(basis)):
        for j in range(i + 1, len(basis)):
            gamma = kernels.exp_max(
                basis[i].leading(order)[0], basis[j].leading(order)[0]
            )
            heapq.heappush(pair_heap, (order.key(gamma), i, j))

    processed = 0
    skipped = False
    while pair_heap:
        _, i, j = heapq.heappop(pair_heap)
        gamma = kernels.exp_max(
            basis[i].leading(order)[0], basis[j].leading(order)[0]
        )
        if kernels.total_degree(gamma) > budget.max_degree:
            skipped = True
            continue
        processed += 1
        if processed > budget.max_pairs:
            return UNKNOWN, list(zip(basis, certs)), "pair budget exhausted"

        s, cert_s = _s_element(pres, basis, certs, i, j, gamma, order, track)
        if s.is_zero():
            continue
        rem, cert_s = _reduce_with_cert(s, cert_s, basis, certs, order, track)
        if rem.is_zero():
            continue
        lc = rem.leading(order)[1]
        rem = rem.scale(lc.inv())
        cert_s = _scale_cert(cert_s, lc.inv()) if track else None
        if rem.is_constant():
            return unit_result(rem, cert_s)
        basis.append(rem)
        certs.append(cert_s)
        k = len(basis) - 1
        for t in range(k):
            gamma = kernels.exp_max(
                basis[t].leading(order)[0], rem.leading(order)[0]
            )
            heapq.heappush(pair_heap, (order.key(gamma), t, k))

    if skipped:
        return UNKNOWN, list(zip(basis, certs)), "degree budget exhausted"
    return PROPER, list(zip(basis, certs)), ""


def _s_element(pres, basis, certs, i, j, gamma, order, track):
    """Left S-element of basis[i], basis[j] w.r.t. the common multiple gamma."""
    gi, gj = basis[i], basis[j]
    ti = kernels.exp_sub(gamma, gi.leading(order)[0])
    tj = kernels.exp_sub(gamma, gj.leading(order)[0])
    pi = _mono_times_dict(pres, ti, gi.to_dict())
    pj = _mono_times_dict(pres, tj, gj.to_dict())
    ci = pi.get(gamma)
    cj = pj.get(gamma)
    if ci is None or cj is None or ci.is_zero() or cj.is_zero():
        raise GroebnerError(
            "monomial order is not multiplicative for this presentation"
        )
    ui, uj = ci.inv(), cj.inv()
    out: dict = {}
    for e, c in pi.items():
        _acc(out, e, ui * c)
    for e, c in pj.items():
        _acc(out, e, -(uj * c))
    s = Polynomial.from_dict(pres, out)
    cert = None
    if track:
        mi = Polynomial.monomial(pres, ti, ui)
        mj = Polynomial.monomial(pres, tj, -uj)
        cert = _add_certs(
            _left_mul_cert(certs[i], mi), _left_mul_cert(certs[j], mj)
        )
    return s, cert


def _inter_reduce(basis, certs, order, track):
    """Tail-reduce each element against the others; drops redundant ones."""
    changed = True
    while changed:
        changed = False
        for k in range(len(basis)):
            others = basis[:k] + basis[k + 1 :]
            other_certs = certs[:k] + certs[k + 1 :]
            if not others:
                continue
            rem, cert = _reduce_with_cert(
                basis[k], certs[k], others, other_certs, order, track
            )
            if rem != basis[k]:
                changed = True
                if rem.is_zero():
                    del basis[k]
                    del certs[k]
                else:
                    lc = rem.leading(order)[1]
                    basis[k] = rem.scale(lc.inv())
                    certs[k] = _scale_cert(cert, lc.inv()) if track else None
                break
    srt = sorted(
        range(len(basis)), key=lambda k: order.key(basis[k].leading(order)[0])
    )
    return [basis[k] for k in srt], [certs[k] for k in srt]


def _initial_items(gens: Sequence[Polynomial], track: bool):
    items = []
    for idx, g in enumerate(gens):
        cert = None
        if track:
            one = Polynomial.one(g.pres)
            cert = ((one, idx, one),)
        items.append((g, cert))
    return items


def left_groebner(
    gens: Sequence[Polynomial],
    order: MonomialOrder = DEGLEX,
    budget: Optional[Budget] = None,
    track: bool = False,
) -> IdealHandle:
    """Left Groebner basis of the left ideal generated by gens."""
    gens = tuple(gens)
    budget = budget or DEFAULT_BUDGET
    live = [g for g in gens if not g.is_zero()]
    if not live:
        return IdealHandle(
            gens[0].pres if gens else None, gens, LEFT, PROPER, order
        )
    pres = live[0].pres
    status, items, note = _completion(
        _initial_items(live, track), order, budget, track
    )
    basis = [g for g, _ in items]
    certs = [c for _, c in items]
    if status == PROPER and basis:
        basis, certs = _inter_reduce(basis, certs, order, track)
    return IdealHandle(
        pres,
        gens,
        LEFT,
        status,
        order,
        tuple(basis),
        tuple(certs) if track else None,
        note,
    )


def is_member_left(f: Polynomial, handle: IdealHandle) -> str:
    """'yes', 'no' or 'unknown' membership of f in the handle's ideal."""
    if handle.status == UNIT:
        return "yes"
    if handle.status == UNKNOWN:
        # the partial basis can still certify membership, never refute it
        if handle.basis and remainder_of(f, handle.basis, handle.order).is_zero():
            return "yes"
        return "unknown"
    if f.is_zero():
        return "yes"
    if not handle.basis:
        return "no"
    rem = remainder_of(f, handle.basis, handle.order)
    return "yes" if rem.is_zero() else "no"


def two_sided_saturate(
    gens: Sequence[Polynomial],
    order: MonomialOrder = DEGLEX,
    budget: Optional[Budget] = None,
    track: bool = False,
) -> IdealHandle:
    """Left basis of the two-sided ideal of gens, by right-closure rounds.

    Alternates left completion with adjoining reduced right multiples by
    every variable (and by the field primitive when some sigma is not the
    identity, so closure under right scalar multiplication holds too).
    """
    gens = tuple(gens)
    budget = budget or DEFAULT_BUDGET
    live = [g for g in gens if not g.is_zero()]
    if not live:
        return IdealHandle(
            gens[0].pres if gens else None, gens, TWO_SIDED, PROPER, order
        )
    pres = live[0].pres
    right_factors = [Polynomial.variable(pres, j) for j in range(pres.n)]
    if not pres.sigma_all_identity:
        prim = pres.field.primitive()
        if prim is not None:
            right_factors.append(Polynomial.constant(pres, prim))

    items = _initial_items(live, track)
    for _ in range(budget.max_rounds):
        status, items, note = _completion(items, order, budget, track)
        if status != PROPER:
            basis = tuple(g for g, _ in items)
            certs = tuple(c for _, c in items) if track else None
            return IdealHandle(
                pres, gens, TWO_SIDED, status, order, basis, certs, note
            )
        basis = [g for g, _ in items]
        certs = [c for _, c in items]
        new_items = []
        for g, cert in items:
            for w in right_factors:
                gw = multiply(g, w)
                cw = _right_mul_cert(cert, w) if track else None
                rem, cw = _reduce_with_cert(gw, cw, basis, certs, order, track)
                if not rem.is_zero():
                    new_items.append((rem, cw))
        if not new_items:
            basis, certs = _inter_reduce(basis, certs, order, track)
            return IdealHandle(
                pres,
                gens,
                TWO_SIDED,
                PROPER,
                order,
                tuple(basis),
                tuple(certs) if track else None,
            )
        items = items + new_items
    basis = tuple(g for g, _ in items)
    certs = tuple(c for _, c in items) if track else None
    return IdealHandle(
        pres, gens, TWO_SIDED, UNKNOWN, order, basis, certs,
        "saturation round budget exhausted",
    )


# ---------------------------------------------------------------------------
# intersection of left ideals (central-variable elimination)


@dataclass
class IntersectionResult:
    elements: List[Polynomial]
    complete: bool
    note: str = ""


def intersect_left(
    I: IdealHandle,
    J: IdealHandle,
    budget: Optional[Budget] = None,
    var_name: str = "t",
) -> IntersectionResult:
    """Generators of the intersection of two proper left ideals.

    Joins t*gens(I) with (1-t)*gens(J) over an added central variable t and
    eliminates t with a block order; the t-free basis elements generate
    I ∩ J (substituting t at 0 and 1 is a ring map because t is central).
    """
    if I.presentation is not J.presentation:
        raise GroebnerError("ideals over different presentations")
    if I.status != PROPER or J.status != PROPER:
        raise GroebnerError("intersection needs both ideals proper")
    pres = I.presentation
    budget = budget or DEFAULT_BUDGET
    ext = extend_with_central(pres, var_name)
    block = MonomialOrder.block([0], ext.n)

    def lift(f: Polynomial, tdeg: int) -> Polynomial:
        return Polynomial(
            ext, tuple(((tdeg,) + e, c) for e, c in f.terms)
        )

    gens = [lift(f, 1) for f in I.generators if not f.is_zero()]
    one_minus_t = Polynomial.one(ext) - Polynomial.variable(ext, 0)
    for g in J.generators:
        if not g.is_zero():
            gens.append(multiply(one_minus_t, lift(g, 0)))
    handle = left_groebner(gens, block, budget)
    if handle.status == UNIT:
        # 1 is t-free and lies in both ideals only if both are improper;
        # cannot happen for proper inputs, but the elimination ideal may
        # still contain units of the extension: keep the contract honest.
        raise GroebnerError("elimination produced a unit from proper ideals")
    out = []
    for g in handle.basis:
        if all(e[0] == 0 for e, _ in g.terms):
            out.append(
                Polynomial(pres, tuple((e[1:], c) for e, c in g.terms))
            )
    complete = handle.status == PROPER
    return IntersectionResult(
        out, complete, "" if complete else handle.note
    )
