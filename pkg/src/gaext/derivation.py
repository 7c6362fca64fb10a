"""Derivations of presented rings, nilpotency bounds, and gradings."""

from __future__ import annotations

from fractions import Fraction
from typing import Mapping

from .groebner import InputError, PresentedRing
from .poly import Polynomial, StructuralError


class Unbounded:
    """Sentinel for a bounded nilpotency search that found no vanishing power."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "UNBOUNDED"


UNBOUNDED = Unbounded()


class NotHomogeneous:
    """Sentinel for an element mixing several weights under a grading."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "NOT_HOMOGENEOUS"


NOT_HOMOGENEOUS = NotHomogeneous()


class Derivation:
    """A derivation of a presented ring, given by its images on the variables.

    Construction checks that the derivation kills the relation ideal, i.e.
    that applying the Leibniz rule to each relation lands back in the ideal;
    otherwise the map would not descend to the quotient.
    """

    def __init__(self, ring: PresentedRing, images: Mapping[str, Polynomial]):
        self.ring = ring
        imgs = {}
        for name in ring.variables:
            img = images.get(name)
            if img is None:
                img = ring.zero()
            elif img.variables != ring.variables:
                raise StructuralError(f"image of {name} lives in the wrong ring")
            imgs[name] = ring.normal_form(img)
        extra = set(images) - set(ring.variables)
        if extra:
            raise StructuralError(f"images given for unknown variables: {sorted(extra)}")
        self.images = imgs
        for rel in ring.relations:
            if not self._apply_raw(rel) in ring.relation_ideal:
                raise InputError(
                    f"derivation does not preserve the relation {rel}")

    def __repr__(self):
        parts = ", ".join(f"{n} -> {p}" for n, p in self.images.items()
                          if not p.is_zero())
        return f"<Derivation {parts or '0'}>"

    def _apply_raw(self, f: Polynomial) -> Polynomial:
        out = Polynomial.zero(self.ring.variables)
        for name, img in self.images.items():
            if img.is_zero():
                continue
            out = out + img * f.diff(name)
        return out

    def __call__(self, f: Polynomial) -> Polynomial:
        if f.variables != self.ring.variables:
            raise StructuralError("argument outside the derivation's ring")
        return self.ring.normal_form(self._apply_raw(f))

    def power(self, f: Polynomial, k: int) -> Polynomial:
        """k-fold application."""
        out = self.ring.normal_form(f)
        for _ in range(k):
            out = self(out)
        return out

    def nilpotency_degree(self, f: Polynomial, bound: int | None = None):
        """Least nu with D^(nu+1) f = 0, or UNBOUNDED past the search bound."""
        g = self.ring.normal_form(f)
        if bound is None:
            bound = 2 * max(g.total_degree(), 0) + 4
        nu = 0
        while not g.is_zero():
            g = self(g)
            nu += 1
            if nu > bound:
                return UNBOUNDED
        return nu - 1 if nu else -1

    def graded_leading_term(self, f: Polynomial, bound: int | None = None):
        """Pair (nu, D^nu f / nu!) for the least nu with D^(nu+1) f = 0.

        This is the image of f in the associated graded piece of its level.
        Returns UNBOUNDED when the nilpotency search exhausts its bound, and
        (-1, 0) for f = 0.
        """
        nu = self.nilpotency_degree(f, bound)
        if nu is UNBOUNDED:
            return UNBOUNDED
        if nu < 0:
            return (-1, self.ring.zero())
        top = self.power(f, nu)
        fact = 1
        for i in range(2, nu + 1):
            fact *= i
        return (nu, top / Fraction(fact))

    def is_locally_nilpotent_on(self, elements, bound: int | None = None) -> bool:
        return all(self.nilpotency_degree(e, bound) is not UNBOUNDED
                   for e in elements)


class Grading:
    """Integer weights on the variables of a presented ring.

    Validates that every relation is homogeneous, so the weight of a normal
    form is well defined on the quotient.
    """

    def __init__(self, ring: PresentedRing, weights: Mapping[str, int]):
        self.ring = ring
        missing = set(ring.variables) - set(weights)
        if missing:
            raise StructuralError(f"no weight for variables: {sorted(missing)}")
        self.weights = {n: int(weights[n]) for n in ring.variables}
        for rel in ring.relations:
            if self.weight_of(rel) is NOT_HOMOGENEOUS:
                raise InputError(f"relation {rel} is not weight-homogeneous")

    def monomial_weight(self, exps) -> int:
        return sum(e * self.weights[n]
                   for e, n in zip(exps, self.ring.variables))

    def weight_of(self, f: Polynomial):
        """Common weight of f's monomials, NOT_HOMOGENEOUS if mixed, None if 0."""
        if f.is_zero():
            return None
        ws = {self.monomial_weight(e) for e in f.terms}
        return ws.pop() if len(ws) == 1 else NOT_HOMOGENEOUS

    def homogeneous_components(self, f: Polynomial) -> dict:
        out: dict = {}
        for e, c in f.terms.items():
            w = self.monomial_weight(e)
            out.setdefault(w, {})[e] = c
        return {w: Polynomial(self.ring.variables, terms)
                for w, terms in sorted(out.items())}


def homogeneity_degree(derivation: Derivation, grading: Grading,
                       skip_zero_images: bool = True):
    """The common weight shift of the derivation, if one exists.

    Compares weight(D(v)) - weight(v) across variables; variables killed by
    the derivation put no constraint on the shift.  Returns the shift, or
    NOT_HOMOGENEOUS when images disagree or are themselves inhomogeneous.
    """
    shifts = set()
    for name, img in derivation.images.items():
        if img.is_zero() and skip_zero_images:
            continue
        if img.is_zero():
            continue
        w = grading.weight_of(img)
        if w is NOT_HOMOGENEOUS:
            return NOT_HOMOGENEOUS
        shifts.add(w - grading.weights[name])
    if not shifts:
        return 0
    return shifts.pop() if len(shifts) == 1 else NOT_HOMOGENEOUS
