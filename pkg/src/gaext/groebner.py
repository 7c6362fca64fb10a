"""Ideal arithmetic: Buchberger completion, normal forms, presented rings.

Everything runs over exact rationals.  The Buchberger loop prunes pairs with
the coprimality and chain criteria, which is plenty for the desk-scale ideals
handled here (defining relations, monomial staircases, blowup charts).
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence

from .poly import (MonomialOrder, Polynomial, StructuralError, default_order)


class InputError(ValueError):
    """Invalid mathematical input (not a structural mismatch)."""


class Indeterminate:
    """Result of a bounded search that exhausted its bound."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "INDETERMINATE"

    def __bool__(self):
        raise ValueError("indeterminate result used as a boolean")


INDETERMINATE = Indeterminate()


def _divides(a, b) -> bool:
    return all(x <= y for x, y in zip(a, b))


def _exp_sub(a, b):
    return tuple(x - y for x, y in zip(a, b))


def _exp_lcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


def reduce_poly(f: Polynomial, basis: Sequence[Polynomial], order: MonomialOrder) -> Polynomial:
    """Full multivariate division remainder of f by basis."""
    if not basis:
        return f
    variables = f.variables
    key = order.key_function(variables)
    lts = [(g.leading_term(order), g) for g in basis]
    remainder: dict = {}
    work = dict(f.terms)
    while work:
        exps = max(work, key=key)
        coeff = work.pop(exps)
        for (lt_exps, lt_c), g in lts:
            if _divides(lt_exps, exps):
                factor = coeff / lt_c
                shift = _exp_sub(exps, lt_exps)
                for ge, gc in g.terms.items():
                    e = tuple(a + b for a, b in zip(ge, shift))
                    s = work.get(e, Fraction(0)) - factor * gc
                    if e == exps:
                        s += coeff  # the popped leading term itself
                    if s:
                        work[e] = s
                    else:
                        work.pop(e, None)
                work.pop(exps, None)
                break
        else:
            remainder[exps] = coeff
    out = Polynomial.__new__(Polynomial)
    out.variables = variables
    out.terms = remainder
    return out


def _s_polynomial(f: Polynomial, g: Polynomial, order: MonomialOrder) -> Polynomial:
    (ef, cf) = f.leading_term(order)
    (eg, cg) = g.leading_term(order)
    l = _exp_lcm(ef, eg)
    mf = Polynomial(f.variables, {_exp_sub(l, ef): Fraction(1) / cf})
    mg = Polynomial(g.variables, {_exp_sub(l, eg): Fraction(1) / cg})
    return mf * f - mg * g


def buchberger(gens: Sequence[Polynomial], order: MonomialOrder) -> list:
    """Reduced Groebner basis of the ideal generated by gens."""
    basis = [g.monic() for g in gens if not g.is_zero()]
    if not basis:
        return []
    variables = basis[0].variables
    lts = [g.leading_term(order)[0] for g in basis]
    pairs = {(i, j) for i in range(len(basis)) for j in range(i)}

    def criteria(i, j):
        li, lj = lts[i], lts[j]
        l = _exp_lcm(li, lj)
        # coprime leading terms: S-polynomial reduces to zero
        if l == tuple(a + b for a, b in zip(li, lj)):
            return True
        # chain criterion
        for k in range(len(basis)):
            if k in (i, j):
                continue
            if _divides(lts[k], l):
                a = (max(i, k), min(i, k))
                b = (max(j, k), min(j, k))
                if a not in pairs and b not in pairs:
                    return True
        return False

    while pairs:
        i, j = min(pairs, key=lambda p: sum(_exp_lcm(lts[p[0]], lts[p[1]])))
        pairs.discard((i, j))
        if criteria(i, j):
            continue
        s = reduce_poly(_s_polynomial(basis[i], basis[j], order), basis, order)
        if s.is_zero():
            continue
        s = s.monic()
        basis.append(s)
        lts.append(s.leading_term(order)[0])
        k = len(basis) - 1
        pairs.update((k, m) for m in range(k))

    return _reduce_basis(basis, order)


def _reduce_basis(basis, order) -> list:
    # drop members whose leading term another member's leading term divides
    minimal = []
    lts = [g.leading_term(order)[0] for g in basis]
    for i, g in enumerate(basis):
        if any(j != i and _divides(lts[j], lts[i])
               and (not _divides(lts[i], lts[j]) or j < i) for j in range(len(basis))):
            continue
        minimal.append(g)
    # tail-reduce each member against the others
    reduced = []
    for i, g in enumerate(minimal):
        others = minimal[:i] + minimal[i + 1:]
        r = reduce_poly(g, others, order) if others else g
        if not r.is_zero():
            reduced.append(r.monic())
    key = order.key_function(reduced[0].variables) if reduced else None
    reduced.sort(key=lambda g: key(g.leading_term(order)[0]))
    return reduced


class Ideal:
    """An ideal of a polynomial ring, with a cached reduced Groebner basis."""

    def __init__(self, generators: Iterable[Polynomial], variables=None,
                 order: MonomialOrder | None = None):
        gens = [g for g in generators if not g.is_zero()]
        if variables is None:
            if not gens:
                raise StructuralError("zero ideal needs an explicit variable tuple")
            variables = gens[0].variables
        self.variables = tuple(variables)
        for g in gens:
            if g.variables != self.variables:
                raise StructuralError("ideal generators live in different rings")
        self.generators = gens
        self.order = order or default_order(self.variables)
        self._basis = None

    def __repr__(self):
        shown = ", ".join(g.to_str(self.order) for g in self.generators[:6])
        if len(self.generators) > 6:
            shown += ", ..."
        return f"<Ideal ({shown})>"

    @classmethod
    def zero(cls, variables) -> "Ideal":
        return cls([], variables=variables)

    def groebner_basis(self) -> list:
        if self._basis is None:
            self._basis = buchberger(self.generators, self.order)
        return self._basis

    def is_zero(self) -> bool:
        return not self.groebner_basis()

    def is_unit(self) -> bool:
        basis = self.groebner_basis()
        return len(basis) == 1 and basis[0].is_constant()

    def normal_form(self, f: Polynomial) -> Polynomial:
        return reduce_poly(f, self.groebner_basis(), self.order)

    def __contains__(self, f: Polynomial) -> bool:
        if f.is_zero():
            return True
        if self.is_monomial_ideal():
            # termwise divisibility test, no basis reduction needed
            lead_exps = [g.leading_term(self.order)[0] for g in self.generators]
            return all(any(_divides(le, e) for le in lead_exps) for e in f.terms)
        return self.normal_form(f).is_zero()

    def is_monomial_ideal(self) -> bool:
        return all(g.is_monomial() for g in self.generators)

    def minimal_monomial_generators(self) -> list:
        if not self.is_monomial_ideal():
            raise StructuralError("not a monomial ideal")
        exps = sorted({g.leading_term(self.order)[0] for g in self.generators})
        minimal = []
        for e in exps:
            if not any(_divides(m, e) for m in minimal if m != e):
                minimal = [m for m in minimal if not _divides(e, m)] + [e]
        return sorted(minimal)

    def equals(self, other: "Ideal") -> bool:
        if self.variables != other.variables:
            raise StructuralError("ideals live in different rings")
        if self.is_monomial_ideal() and other.is_monomial_ideal():
            return self.minimal_monomial_generators() == other.minimal_monomial_generators()
        return (all(g in other for g in self.generators)
                and all(g in self for g in other.generators))

    def __add__(self, other: "Ideal") -> "Ideal":
        if self.variables != other.variables:
            raise StructuralError("ideals live in different rings")
        return Ideal(self.generators + other.generators,
                     variables=self.variables, order=self.order)

    def __mul__(self, other: "Ideal") -> "Ideal":
        if self.variables != other.variables:
            raise StructuralError("ideals live in different rings")
        gens = [f * g for f in self.generators for g in other.generators]
        return Ideal(gens, variables=self.variables, order=self.order)

    def __pow__(self, k: int) -> "Ideal":
        if not isinstance(k, int) or k < 0:
            raise InputError("ideal powers must be nonnegative integers")
        if k == 0:
            return Ideal([Polynomial.one(self.variables)], variables=self.variables,
                         order=self.order)
        result = self
        for _ in range(k - 1):
            result = result * self
        return result

    def contains_ideal(self, other: "Ideal") -> bool:
        # cheap pre-pass: scalar multiples of our generators are members
        own = {frozenset(g.monic().terms.items()) for g in self.generators}
        return all(frozenset(g.monic().terms.items()) in own or g in self
                   for g in other.generators)


class PresentedRing:
    """Polynomial ring modulo relations, with unique normal forms.

    Normal forms are remainders modulo the reduced Groebner basis of the
    relation ideal under the ring's monomial order, so nf(f) == 0 exactly
    when f lies in the relation ideal.
    """

    def __init__(self, variables, relations: Iterable[Polynomial] = (),
                 order: MonomialOrder | None = None):
        self.variables = tuple(variables)
        self.order = order or default_order(self.variables)
        rels = [r for r in relations if not r.is_zero()]
        for r in rels:
            if r.variables != self.variables:
                raise StructuralError("relation outside the ring's variables")
        self.relations = tuple(rels)
        self._relation_ideal = None

    def __repr__(self):
        rels = ", ".join(str(r) for r in self.relations) or "0"
        return f"<PresentedRing Q[{', '.join(self.variables)}]/({rels})>"

    @property
    def relation_ideal(self) -> Ideal:
        if self._relation_ideal is None:
            self._relation_ideal = Ideal(list(self.relations), variables=self.variables,
                                         order=self.order)
            self._relation_ideal.groebner_basis()
        return self._relation_ideal

    def zero(self) -> Polynomial:
        return Polynomial.zero(self.variables)

    def one(self) -> Polynomial:
        return Polynomial.one(self.variables)

    def var(self, name: str) -> Polynomial:
        return Polynomial.variable(name, self.variables)

    def gens(self) -> tuple:
        return tuple(self.var(v) for v in self.variables)

    def normal_form(self, f: Polynomial) -> Polynomial:
        if f.variables != self.variables:
            raise StructuralError("element outside the ring's variables")
        if not self.relations:
            return f
        return self.relation_ideal.normal_form(f)

    def is_zero_element(self, f: Polynomial) -> bool:
        return self.normal_form(f).is_zero()

    def parse(self, text: str) -> Polynomial:
        from .poly import parse
        return self.normal_form(parse(text, self.variables))


def free_ring(names: str, order_kind: str = "deglex") -> PresentedRing:
    variables = tuple(names.split())
    return PresentedRing(variables, (), MonomialOrder(order_kind, variables))


def weighted_monomial_ideal(p: int, q: int, nu: int,
                            variables=("x", "y")) -> Ideal:
    """Ideal spanned by the monomials x^a y^b with p*a + q*b >= (p+q)*nu.

    Generated by the finitely many staircase-minimal solutions; nu = 0
    yields the unit ideal.
    """
    if p <= 0 or q <= 0 or nu < 0:
        raise InputError("weights and index must be positive (nu >= 0)")
    if gcd(p, q) != 1:
        raise InputError(f"weights must be coprime, got ({p}, {q})")
    variables = tuple(variables)
    if nu == 0:
        return Ideal([Polynomial.one(variables)], variables=variables)
    threshold = (p + q) * nu
    candidates = []
    alpha = 0
    while True:
        rest = threshold - p * alpha
        beta = 0 if rest <= 0 else -(-rest // q)  # ceil division
        candidates.append((alpha, beta))
        if beta == 0:
            break
        alpha += 1
    minimal = []
    for a, b in candidates:
        if not any(a2 <= a and b2 <= b for a2, b2 in candidates if (a2, b2) != (a, b)):
            minimal.append((a, b))
    gens = [Polynomial(variables, {e: Fraction(1)}) for e in sorted(minimal)]
    return Ideal(gens, variables=variables)


def is_primary_at_origin(ideal: Ideal, bound: int | None = None):
    """Whether a proper nonzero ideal of Q[x,y] has radical <x, y>.

    True exactly when the ideal sits inside the maximal ideal at the origin
    and contains a power of each variable.  The power search runs up to
    4 * (max generator degree) by default; exhausting it yields
    INDETERMINATE rather than a silent verdict.
    """
    if len(ideal.variables) != 2:
        raise InputError("primary-at-origin test lives in a two-variable ring")
    if ideal.is_zero() or ideal.is_unit():
        raise InputError("test requires a proper nonzero ideal")
    # containment in <x,y>: membership there is a vanishing constant term
    if any(g.constant_term() != 0 for g in ideal.generators):
        return False
    if ideal.is_monomial_ideal():
        # decidable outright: needs a pure power of each variable
        minimal = ideal.minimal_monomial_generators()
        return all(any(e[i] > 0 and sum(e) == e[i] for e in minimal)
                   for i in range(2))
    if bound is None:
        bound = 4 * max(g.total_degree() for g in ideal.generators)
    for name in ideal.variables:
        v = Polynomial.variable(name, ideal.variables)
        for n in range(1, bound + 1):
            if v ** n in ideal:
                break
        else:
            return INDETERMINATE
    return True
