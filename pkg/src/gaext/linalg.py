"""Sparse linear algebra over Q with dependency tracking.

Vectors are polynomials; the echelon structure keys each pivot row by its
leading monomial under a fixed monomial order.  Every inserted row carries a
combination dict mapping original tags to rational coefficients, so a linear
dependence comes back as an explicit kernel combination and a successful
reduction to zero comes back as a membership witness.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Optional

from .poly import MonomialOrder, Polynomial, StructuralError


class Echelon:
    """Row-echelon accumulator with combination tracking.

    Rows are stored monic and indexed by leading exponent.  Reduction only
    ever rewrites the current leading term, which strictly decreases under
    the monomial order, so every reduction terminates.
    """

    def __init__(self, variables, order: MonomialOrder):
        self.variables = tuple(variables)
        self.order = order
        self._key = order.key_function(self.variables)
        self.rows: dict = {}      # lead exponent -> monic Polynomial
        self.combos: dict = {}    # lead exponent -> {tag: Fraction}

    def __len__(self):
        return len(self.rows)

    def _reduce(self, vec: Polynomial, combo: dict):
        while not vec.is_zero():
            lead = max(vec.terms, key=self._key)
            row = self.rows.get(lead)
            if row is None:
                return vec, combo, lead
            factor = vec.terms[lead]
            vec = vec - row * factor
            for tag, c in self.combos[lead].items():
                s = combo.get(tag, Fraction(0)) - factor * c
                if s:
                    combo[tag] = s
                else:
                    combo.pop(tag, None)
        return vec, combo, None

    def insert(self, vec: Polynomial, tag) -> Optional[dict]:
        """Add a row; return a kernel combination if it was dependent.

        The returned dict {tag: coefficient} satisfies
        sum(coefficient * original_row[tag]) == 0 and includes the new tag.
        """
        if vec.variables != self.variables:
            raise StructuralError("row outside the echelon's variable tuple")
        residual, combo, lead = self._reduce(vec, {tag: Fraction(1)})
        if lead is None:
            return combo
        c = residual.terms[lead]
        self.rows[lead] = residual / c
        self.combos[lead] = {t: x / c for t, x in combo.items()}
        return None

    def reduce(self, vec: Polynomial):
        """Return (residual, combo) with vec - sum(combo[tag]*row[tag]) = residual."""
        if vec.variables != self.variables:
            raise StructuralError("vector outside the echelon's variable tuple")
        residual, combo, _ = self._reduce(vec, {})
        return residual, {t: -c for t, c in combo.items()}

    def contains(self, vec: Polynomial) -> bool:
        return self.reduce(vec)[0].is_zero()
