"""Truncated computation of the graded ideal sequence of a derivation.

A filtered subalgebra is given by a presented ambient ring, a locally
nilpotent derivation on it, distinguished base variables killed by the
derivation, and a finite generator list.  All filtration-level computations
happen on a finite truncated spanning set: products of at most L generators
times base monomials, capped at total degree d.  Results are certificates at
the recorded truncation — sound always, complete only within the bounds.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .derivation import Derivation
from .groebner import Ideal, InputError, PresentedRing
from .linalg import Echelon
from .poly import Polynomial, StructuralError
from .report import Report


@dataclass(frozen=True)
class TruncationParams:
    """Bounds for span construction: generator word length and total degree."""

    word_length: int
    degree: int

    def __post_init__(self):
        if self.word_length < 0 or self.degree < 0:
            raise InputError("truncation bounds must be nonnegative")

    def scaled(self, factor: float) -> "TruncationParams":
        def scale(value: int) -> int:
            return max(int(value * factor), 1) if value else 0
        if factor == 1:
            return self
        return TruncationParams(scale(self.word_length), scale(self.degree))

    def as_params(self) -> tuple:
        return (("L", self.word_length), ("d", self.degree))


@dataclass(frozen=True)
class SpanElement:
    """A spanning candidate: printable label plus its normal-form polynomial."""

    label: str
    poly: Polynomial


class FilteredSubalgebra:
    """Finitely generated subalgebra of a presented ring, with derivation.

    ``base_vars`` must be killed by the derivation (their span is where the
    graded ideals live).  When ``module_spanning`` is set, the generator
    list is declared closed under multiplication by base monomials up to
    the degree bound, and span construction skips those redundant products.
    """

    def __init__(self, ambient: PresentedRing, derivation: Derivation,
                 base_vars: Sequence[str], generators: dict,
                 module_spanning: bool = False):
        if derivation.ring is not ambient:
            raise StructuralError("derivation acts on a different ring")
        self.ambient = ambient
        self.derivation = derivation
        self.base_vars = tuple(base_vars)
        for name in self.base_vars:
            if name not in ambient.variables:
                raise StructuralError(f"unknown base variable {name}")
            if not derivation.images[name].is_zero():
                raise InputError(f"base variable {name} is not a constant of the derivation")
        gens = {}
        for label, g in generators.items():
            nf = ambient.normal_form(g)
            if nf.is_zero():
                raise InputError(f"generator {label} is zero")
            gens[label] = nf
        self.generators = gens
        self.module_spanning = bool(module_spanning)

    def _base_monomials(self, degree: int):
        idx = [self.ambient.variables.index(v) for v in self.base_vars]
        n = len(self.ambient.variables)
        for total in range(degree + 1):
            for combo in itertools.combinations_with_replacement(idx, total):
                exps = [0] * n
                for i in combo:
                    exps[i] += 1
                label = "*".join(
                    f"{self.ambient.variables[i]}^{exps[i]}" if exps[i] > 1
                    else self.ambient.variables[i]
                    for i in sorted(set(combo)))
                yield (label or "1",
                       Polynomial(self.ambient.variables, {tuple(exps): Fraction(1)}))

    def _words(self, length: int, degree: int):
        labels = sorted(self.generators)
        yield ("1", self.ambient.one())
        for ell in range(1, length + 1):
            for combo in itertools.combinations_with_replacement(labels, ell):
                poly = self.ambient.one()
                ok = True
                for lab in combo:
                    poly = self.ambient.normal_form(poly * self.generators[lab])
                    if poly.is_zero() or poly.total_degree() > degree:
                        ok = False
                        break
                if not ok:
                    continue
                label = "*".join(f"{lab}^{combo.count(lab)}" if combo.count(lab) > 1
                                 else lab for lab in sorted(set(combo)))
                yield (label, poly)


def truncated_span(subalgebra: FilteredSubalgebra,
                   truncation: TruncationParams) -> list:
    """Deterministic spanning list of base-monomial times generator-word products.

    Scalar-duplicate candidates are dropped; the survivors are sorted by
    total degree and then by leading monomial under the ambient order.
    """
    ambient = subalgebra.ambient
    seen = {}
    words = list(subalgebra._words(truncation.word_length, truncation.degree))
    if subalgebra.module_spanning:
        pairs = [(("1", ambient.one()), w) for w in words]
    else:
        bases = list(subalgebra._base_monomials(truncation.degree))
        pairs = [(m, w) for m in bases for w in words]
    for (mlab, mono), (wlab, word) in pairs:
        poly = ambient.normal_form(mono * word)
        if poly.is_zero() or poly.total_degree() > truncation.degree:
            continue
        canon = frozenset(poly.monic().terms.items())
        if canon in seen:
            continue
        if mlab == "1":
            label = wlab
        elif wlab == "1":
            label = mlab
        else:
            label = f"{mlab}*{wlab}"
        seen[canon] = SpanElement(label, poly)
    key = ambient.order.key_function(ambient.variables)
    out = sorted(seen.values(),
                 key=lambda e: (e.poly.total_degree(),
                                key(max(e.poly.terms, key=key)), e.label))
    return out


@dataclass(frozen=True)
class Member:
    """Positive membership certificate: f equals the stated combination."""

    combination: tuple  # ((label, Fraction), ...)
    witness: str


class NotFoundWithinBounds:
    """Membership search exhausted its truncation; not a disproof."""

    def __init__(self, truncation: TruncationParams):
        self.truncation = truncation

    def __repr__(self):
        return (f"NotFoundWithinBounds(L={self.truncation.word_length}, "
                f"d={self.truncation.degree})")


def subalgebra_contains(subalgebra: FilteredSubalgebra, f: Polynomial,
                        truncation: TruncationParams):
    """Exact linear search for f inside the truncated span."""
    ambient = subalgebra.ambient
    target = ambient.normal_form(f)
    echelon = Echelon(ambient.variables, ambient.order)
    elements = truncated_span(subalgebra, truncation)
    for el in elements:
        echelon.insert(el.poly, el.label)
    residual, combo = echelon.reduce(target)
    if not residual.is_zero():
        return NotFoundWithinBounds(truncation)
    combination = tuple(sorted((t, c) for t, c in combo.items() if c))
    witness = " + ".join(f"({c})*{t}" for t, c in combination) or "0"
    return Member(combination, witness)


def compute_m_nu(subalgebra: FilteredSubalgebra, nu: int,
                 truncation: TruncationParams) -> Ideal:
    """Ideal generated by D^nu of the truncated kernel of D^(nu+1).

    Sound: every generator genuinely lies in the level-nu graded ideal.
    Complete only up to the truncation; enlarging it never shrinks the
    result.
    """
    if nu < 0:
        raise InputError("filtration level must be nonnegative")
    ambient = subalgebra.ambient
    derivation = subalgebra.derivation
    elements = truncated_span(subalgebra, truncation)
    # iterated images: powers[tag][k] lazily holds D^k of element tag
    echelon = Echelon(ambient.variables, ambient.order)
    level_images = {}
    kernel_combos = []
    for idx, el in enumerate(elements):
        g = el.poly
        for _ in range(nu):
            if g.is_zero():
                break
            g = derivation(g)
        level_images[idx] = g
        top = derivation(g) if not g.is_zero() else g
        if top.is_zero():
            kernel_combos.append({idx: Fraction(1)})
            continue
        combo = echelon.insert(top, idx)
        if combo is not None:
            kernel_combos.append(combo)
    gens = {}
    for combo in kernel_combos:
        image = Polynomial.zero(ambient.variables)
        for idx, c in combo.items():
            image = image + level_images[idx] * c
        image = ambient.normal_form(image)
        if image.is_zero():
            continue
        if not set(image.used_variables()) <= set(subalgebra.base_vars):
            raise StructuralError(
                "graded image escapes the base ring; derivation kernel is larger "
                "than the base variables")
        restricted = image.restrict(subalgebra.base_vars).monic()
        gens[frozenset(restricted.terms.items())] = restricted
    base = tuple(subalgebra.base_vars)
    ordered = sorted(gens.values(), key=lambda p: (p.total_degree(), sorted(p.terms)))
    if not ordered:
        return Ideal.zero(base)
    return Ideal(ordered, variables=base)


@dataclass
class IdealSequence:
    """Graded ideals m_0..m_max of one subalgebra at one truncation."""

    subalgebra: FilteredSubalgebra
    truncation: TruncationParams
    ideals: list = field(default_factory=list)

    @classmethod
    def compute(cls, subalgebra: FilteredSubalgebra, nu_max: int,
                truncation: TruncationParams) -> "IdealSequence":
        ideals = [compute_m_nu(subalgebra, nu, truncation)
                  for nu in range(nu_max + 1)]
        return cls(subalgebra, truncation, ideals)

    def __getitem__(self, nu: int) -> Ideal:
        return self.ideals[nu]

    def __len__(self):
        return len(self.ideals)


def verify_sequence_axioms(sequence: IdealSequence) -> Report:
    """Unit degree zero, descending chain, and multiplicativity checks."""
    report = Report("sequence-axioms", sequence.truncation.as_params())
    ideals = sequence.ideals
    report.add("axiom-unit-degree-zero", ideals[0].is_unit() if ideals else False,
               (("nu", 0),))
    for nu in range(len(ideals) - 1):
        ok = ideals[nu].contains_ideal(ideals[nu + 1])
        report.add("axiom-descending", ok, (("nu", nu + 1),))
    for mu in range(1, len(ideals)):
        for nu in range(mu, len(ideals)):
            if mu + nu >= len(ideals):
                continue
            product = ideals[mu] * ideals[nu]
            ok = ideals[mu + nu].contains_ideal(product)
            report.add("axiom-multiplicative", ok, (("mu", mu), ("nu", nu)))
    return report


def generated_in_degree_one(sequence: IdealSequence) -> list:
    """Per-level comparison of m_nu with the nu-th power of m_1.

    Returns a list of (nu, equal, witness) for nu >= 2.  A witness names a
    generator of m_nu outside m_1^nu when the comparison fails.
    """
    results = []
    if len(sequence.ideals) < 3:
        return results
    m1 = sequence.ideals[1]
    power = m1
    for nu in range(2, len(sequence.ideals)):
        power = power * m1
        target = sequence.ideals[nu]
        witness = ""
        equal = power.contains_ideal(target) and target.contains_ideal(power)
        if not equal:
            for g in target.generators:
                if g not in power:
                    witness = f"{g} in m_{nu} but not in m_1^{nu}"
                    break
        results.append((nu, equal, witness))
    return results
