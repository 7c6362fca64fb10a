"""The special linear group surface algebra and its two extension families.

O(SL2) = Q[x,y,u,v]/(xv - yu - 1) carries the structural derivation
D(u) = x, D(v) = y.  Family one adjoins the chart algebra of the ideal
I(n); family two is the nonnegative part of a weighted multiplicative
grading.  Each verify_* operation returns a deterministic report.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from functools import lru_cache
from math import gcd

from .derivation import Derivation, Grading, homogeneity_degree
from .filtered import (FilteredSubalgebra, IdealSequence, Member,
                       TruncationParams, compute_m_nu, generated_in_degree_one,
                       subalgebra_contains, verify_sequence_axioms)
from .groebner import Ideal, InputError, PresentedRing, weighted_monomial_ideal
from .poly import Polynomial
from .report import Report

SL2_VARS = ("x", "y", "u", "v")


@lru_cache(maxsize=None)
def sl2_ring() -> PresentedRing:
    x, y, u, v = (Polynomial.variable(n, SL2_VARS) for n in SL2_VARS)
    return PresentedRing(SL2_VARS, [x * v - y * u - Polynomial.one(SL2_VARS)])


@lru_cache(maxsize=None)
def sl2_derivation() -> Derivation:
    ring = sl2_ring()
    return Derivation(ring, {"u": ring.var("x"), "v": ring.var("y")})


def sl2_subalgebra() -> FilteredSubalgebra:
    ring = sl2_ring()
    return FilteredSubalgebra(ring, sl2_derivation(), ("x", "y"),
                              {"u": ring.var("u"), "v": ring.var("v")})


def base_power_ideal(k: int) -> Ideal:
    """The k-th power of <x, y> in Q[x, y]."""
    variables = ("x", "y")
    gens = [Polynomial(variables, {(k - i, i): Fraction(1)}) for i in range(k + 1)]
    if k == 0:
        return Ideal([Polynomial.one(variables)], variables=variables)
    return Ideal(gens, variables=variables)


def sl2_sequence(nu_max: int, truncations=None) -> IdealSequence:
    """Graded ideals of O(SL2) itself, level nu at truncation L=nu, d=2nu+2."""
    sub = sl2_subalgebra()
    ideals = []
    top = None
    for nu in range(nu_max + 1):
        trunc = (truncations[nu] if truncations
                 else TruncationParams(nu, 2 * nu + 2))
        ideals.append(compute_m_nu(sub, nu, trunc))
        top = trunc
    return IdealSequence(sub, top, ideals)


# ---------------------------------------------------------------------------
# family one


def family1_variables(n: int) -> tuple:
    if n < 1:
        raise InputError("family one needs n >= 1 (n = 0 is covered by family two)")
    return ("X0", "X1") + tuple(f"Y{i}" for i in range(n + 2)) + ("Z",)


def family1_ideal(n: int) -> Ideal:
    """Defining ideal I(n) of the contracted chart variety, deduplicated."""
    variables = family1_variables(n)

    def var(name):
        return Polynomial.variable(name, variables)

    x0, x1, z = var("X0"), var("X1"), var("Z")
    ys = [var(f"Y{i}") for i in range(n + 2)]
    gens = []
    # quadric block Y_i Y_j - Y_k Y_l over equal index sums
    for total in range(2 * (n + 1) + 1):
        pairs = [(i, total - i) for i in range(total // 2 + 1)
                 if 0 <= total - i <= n + 1 and i <= n + 1]
        for (i, j), (k, l) in itertools.combinations(pairs, 2):
            gens.append(ys[i] * ys[j] - ys[k] * ys[l])
    for i in range(n + 1):
        gens.append(x0 * ys[i + 1] - x1 * ys[i])
    for i in range(n + 1):
        gens.append(z * ys[i] + x1 ** n * ys[i + 1] - ys[i + 1] * ys[n + 1])
    gens.append(z * x0 + x1 ** (n + 1) - x1 * ys[n + 1])
    return Ideal(gens, variables=variables)


def family1_psi(n: int) -> dict:
    """Pullback images in O(SL2) of the chart-variety coordinates."""
    variables = family1_variables(n)
    x, y, u, v = (Polynomial.variable(nm, SL2_VARS) for nm in SL2_VARS)
    images = {"X0": y, "X1": x, "Z": u * x ** (n + 1)}
    for i in range(n + 2):
        images[f"Y{i}"] = v * x ** i * y ** (n + 1 - i)
    return {name: images[name] for name in variables}


def family1_generator_ring(n: int) -> PresentedRing:
    return PresentedRing(family1_variables(n))


def family1_derivation(n: int) -> Derivation:
    """The stated derivation on the coordinate generators of the chart variety."""
    ring = family1_generator_ring(n)
    x0, x1 = ring.var("X0"), ring.var("X1")
    images = {"Z": x1 ** (n + 2)}
    for i in range(n + 2):
        images[f"Y{i}"] = x1 ** i * x0 ** (n + 2 - i)
    return Derivation(ring, images)


def family1_subalgebra(n: int) -> FilteredSubalgebra:
    ring = sl2_ring()
    psi = family1_psi(n)
    gens = {name: img for name, img in psi.items()
            if name not in ("X0", "X1")}
    return FilteredSubalgebra(ring, sl2_derivation(), ("x", "y"), gens)


def family1_truncation(n: int, nu: int) -> TruncationParams:
    return TruncationParams(nu, (n + 2) * nu + 4)


def verify_family1(n: int, nu_max: int, truncations=None) -> Report:
    """Checks (a)-(e) for one family-one member."""
    report = Report("family1", (("n", n), ("nu_max", nu_max)))
    ring = sl2_ring()
    derivation = sl2_derivation()
    psi = family1_psi(n)
    ideal = family1_ideal(n)

    for idx, g in enumerate(ideal.generators):
        image = ring.normal_form(g.substitute(psi))
        report.add("psi-vanishing", image.is_zero(), (("n", n), ("gen", idx)),
                   "" if image.is_zero() else f"psi({g}) = {image}")

    d_gen = family1_derivation(n)
    for name in family1_variables(n):
        lhs = derivation(psi[name])
        rhs = ring.normal_form(d_gen.images[name].substitute(psi))
        ok = (lhs - rhs).is_zero()
        report.add("derivation-commutes", ok, (("n", n), ("var", name)),
                   "" if ok else f"D(psi({name})) = {lhs} != {rhs}")

    sub = family1_subalgebra(n)
    ideals = []
    top = None
    for nu in range(nu_max + 1):
        trunc = (truncations[nu] if truncations else family1_truncation(n, nu))
        top = trunc
        computed = compute_m_nu(sub, nu, trunc)
        ideals.append(computed)
        if nu == 0:
            continue
        expected = base_power_ideal((n + 2) * nu)
        ok = computed.equals(expected)
        report.add("graded-ideal", ok,
                   (("n", n), ("nu", nu)) + trunc.as_params(),
                   f"m_{nu} vs <x,y>^{(n + 2) * nu}")

    sequence = IdealSequence(sub, top, ideals)
    if nu_max >= 2:
        for nu, equal, witness in generated_in_degree_one(sequence):
            report.add("degree-one-generation", equal, (("n", n), ("nu", nu)),
                       witness)

    fixed = fixed_locus_ideal(family1_derivation(n))
    gen_vars = family1_variables(n)
    k = n + 2
    expected_fixed = Ideal(
        [Polynomial(gen_vars, {(k - i, i) + (0,) * (len(gen_vars) - 2): Fraction(1)})
         for i in range(k + 1)],
        variables=gen_vars)
    report.add("fixed-locus", fixed.equals(expected_fixed), (("n", n),),
               f"<D images> vs <X0,X1>^{k}")
    return report


def fixed_locus_ideal(derivation: Derivation, generators=None) -> Ideal:
    """Ideal cutting out the points where the group action is trivial."""
    ring = derivation.ring
    if generators is None:
        generators = ring.gens()
    images = [ring.normal_form(derivation(g)) for g in generators]
    images = [g for g in images if not g.is_zero()]
    if not images:
        return Ideal.zero(ring.variables)
    return Ideal(images, variables=ring.variables, order=ring.order)


# ---------------------------------------------------------------------------
# family two


def family2_weights(p: int, q: int) -> dict:
    if p <= 0 or q <= 0:
        raise InputError("weights must be positive")
    if gcd(p, q) != 1:
        raise InputError(f"weights must be coprime, got ({p}, {q})")
    return {"x": p, "y": q, "u": -q, "v": -p}


def family2_grading(p: int, q: int) -> Grading:
    return Grading(sl2_ring(), family2_weights(p, q))


def family2_bezout(p: int, q: int) -> tuple:
    """Minimal nonnegative m with m*q - n*p = 1."""
    weights = family2_weights(p, q)  # validates coprimality
    del weights
    m = next(m for m in range(p + 1)
             if m * q >= 1 and (m * q - 1) % p == 0)
    return m, (m * q - 1) // p


def family2_nonnegative_generators(p: int, q: int, degree: int) -> dict:
    """Normal-form monomials of nonnegative weight up to the degree bound."""
    weights = family2_weights(p, q)
    w = tuple(weights[name] for name in SL2_VARS)
    out = {}
    for total in range(degree + 1):
        for combo in itertools.combinations_with_replacement(range(4), total):
            exps = [0, 0, 0, 0]
            for i in combo:
                exps[i] += 1
            if exps[0] and exps[3]:
                continue  # divisible by x*v: not a normal-form monomial
            if sum(e * wi for e, wi in zip(exps, w)) < 0:
                continue
            label = "*".join(f"{SL2_VARS[i]}^{exps[i]}" if exps[i] > 1
                             else SL2_VARS[i] for i in range(4) if exps[i])
            out[label or "1"] = Polynomial(SL2_VARS, {tuple(exps): Fraction(1)})
    return out


def family2_subalgebra(p: int, q: int, degree: int) -> FilteredSubalgebra:
    gens = family2_nonnegative_generators(p, q, degree)
    gens.pop("1", None)
    return FilteredSubalgebra(sl2_ring(), sl2_derivation(), ("x", "y"), gens,
                              module_spanning=True)


def family2_truncation(p: int, q: int, nu: int) -> TruncationParams:
    return TruncationParams(1, 2 * (p + q) * nu + 4)


def family2_sequence(p: int, q: int, nu_max: int, truncations=None) -> IdealSequence:
    ideals = []
    top = None
    sub = None
    for nu in range(nu_max + 1):
        trunc = (truncations[nu] if truncations else family2_truncation(p, q, nu))
        top = trunc
        sub = family2_subalgebra(p, q, trunc.degree)
        ideals.append(compute_m_nu(sub, nu, trunc))
    return IdealSequence(sub, top, ideals)


def verify_family2(p: int, q: int, nu_max: int, truncations=None) -> Report:
    """Checks (a)-(e) for one family-two member."""
    report = Report("family2", (("p", p), ("q", q), ("nu_max", nu_max)))
    ring = sl2_ring()
    derivation = sl2_derivation()
    grading = family2_grading(p, q)

    shift = homogeneity_degree(derivation, grading)
    report.add("derivation-homogeneous", shift == p + q,
               (("p", p), ("q", q)), f"weight shift {shift}")

    x, y, u, v = ring.gens()
    a = x ** q * u ** p
    b = x * v
    c = y ** p * v ** q
    identity = ring.normal_form(a * c - b ** q * (b - ring.one()) ** p)
    report.add("base-identity", identity.is_zero(), (("p", p), ("q", q)),
               "" if identity.is_zero() else str(identity))

    m, n = family2_bezout(p, q)
    report.add("bezout", m * q - n * p == 1 and m >= 0,
               (("p", p), ("q", q)), f"m={m},n={n}")

    for nu in range(1, nu_max + 1):
        trunc = (truncations[nu] if truncations else family2_truncation(p, q, nu))
        sub = family2_subalgebra(p, q, trunc.degree)
        computed = compute_m_nu(sub, nu, trunc)
        expected = weighted_monomial_ideal(p, q, nu)
        ok = computed.equals(expected)
        report.add("graded-ideal", ok,
                   (("p", p), ("q", q), ("nu", nu)) + trunc.as_params(),
                   f"m_{nu} vs weighted({p},{q},{nu})")

    if (p, q) == (2, 1) and nu_max >= 2:
        sequence = family2_sequence(p, q, 2, truncations)
        xy = ("x", "y")
        x3 = Polynomial(xy, {(3, 0): Fraction(1)})
        in_m2 = x3 in sequence[2]
        in_m1_sq = x3 in sequence[1] * sequence[1]
        report.add("cube-witness", in_m2 and not in_m1_sq,
                   (("p", p), ("q", q)),
                   f"x^3 in m_2: {in_m2}; x^3 in m_1^2: {in_m1_sq}")
        degree_one = generated_in_degree_one(sequence)
        not_deg_one = any(nu == 2 and not equal for nu, equal, _ in degree_one)
        report.add("degree-one-fails", not_deg_one, (("p", p), ("q", q)),
                   "m_2 != m_1^2")

    probe_degree = (truncations[1].degree if truncations
                    else family2_truncation(p, q, 1).degree)
    gens = family2_nonnegative_generators(p, q, min(probe_degree, p + q + 2))
    bad = ""
    for label, g in sorted(gens.items()):
        if grading.weight_of(g) <= 0:
            continue
        image = derivation(g)
        if image.is_zero():
            continue
        weights = [grading.monomial_weight(e) for e in image.terms]
        if min(weights) <= 0:
            bad = f"D({label}) has a nonpositive-weight term"
            break
    report.add("positive-weight-stable", not bad, (("p", p), ("q", q)), bad)
    return report


# ---------------------------------------------------------------------------
# gluing data of the chart surface


GLUE_VARS = ("z", "zi", "u", "v")


@lru_cache(maxsize=None)
def localized_ring() -> PresentedRing:
    z, zi = (Polynomial.variable(nm, GLUE_VARS) for nm in ("z", "zi"))
    return PresentedRing(GLUE_VARS, [z * zi - Polynomial.one(GLUE_VARS)])


def _glue_substitution(n: int, sign: int) -> dict:
    """Pullback along the chart transition (z,(u,v)) -> (1/z, (±z^{n+1}v^n + z^{n+2}u, zv))."""
    ring = localized_ring()
    z, zi, u, v = ring.gens()
    return {"z": zi, "zi": z,
            "u": z ** (n + 2) * u + Fraction(sign) * z ** (n + 1) * v ** n,
            "v": z * v}


def star_left(s, t, x, y, n: int):
    return (s * t ** n * y ** n + t ** (n + 2) * x, t * y)


def star_right(x, y, s, t, n: int):
    return (t ** n * (x + y ** (n + 2) * s), t * y)


def borel_product(a, b, c, d):
    return (a + b ** 2 * c, b * d)


def gluing_checks(n: int) -> Report:
    """Symbolic verification of the chart-gluing data for one n."""
    if n < 1:
        raise InputError("gluing checks need n >= 1")
    report = Report("gluing", (("n", n),))
    ring = localized_ring()
    forward = _glue_substitution(n, +1)
    backward = _glue_substitution(n, -1)

    for name in ("z", "u", "v"):
        f = ring.var(name)
        round_trip = ring.normal_form(f.substitute(backward).substitute(forward))
        ok = (round_trip - f).is_zero()
        report.add("transition-inverse", ok, (("n", n), ("coord", name)),
                   "" if ok else str(round_trip - f))
        g = ring.normal_form(f.substitute(forward).substitute(backward))
        ok = (g - f).is_zero()
        report.add("transition-inverse-rev", ok, (("n", n), ("coord", name)),
                   "" if ok else str(g - f))

    free_vars = ("s", "t", "x", "y", "a", "b")
    s, t, x, y, a, b = (Polynomial.variable(nm, free_vars) for nm in free_vars)
    inner = star_right(x, y, a, b, n)
    lhs = star_left(s, t, inner[0], inner[1], n)
    inner2 = star_left(s, t, x, y, n)
    rhs = star_right(inner2[0], inner2[1], a, b, n)
    ok = all((l - r).is_zero() for l, r in zip(lhs, rhs))
    report.add("actions-commute", ok, (("n", n),))

    prod1 = borel_product(*borel_product(s, t, x, y), a, b)
    prod2 = borel_product(s, t, *borel_product(x, y, a, b))
    assoc = all((l - r).is_zero() for l, r in zip(prod1, prod2))
    zero = Polynomial.zero(free_vars)
    one = Polynomial.one(free_vars)
    unit = borel_product(zero, one, x, y)
    unital = (unit[0] - x).is_zero() and (unit[1] - y).is_zero()
    report.add("borel-law", assoc and unital, (("n", n),))

    z, zi, u, v = ring.gens()
    functions = []
    for i in range(2):
        functions.append((f"f{i}", z ** (1 - i) * v, z ** i * v))
    for i in range(n + 2):
        functions.append((f"g{i}",
                          z ** (n + 2 - i) * u + z ** (n + 1 - i) * v ** n,
                          z ** i * u))
    functions.append(("h", u, z ** (n + 2) * u - z ** (n + 1) * v ** n))
    for name, on_q0, on_q1 in functions:
        pulled = ring.normal_form(on_q1.substitute(forward))
        diff = ring.normal_form(on_q0 - pulled)
        report.add("chart-agreement", diff.is_zero(), (("n", n), ("fn", name)),
                   "" if diff.is_zero() else str(diff))
    return report


# ---------------------------------------------------------------------------
# cross-family comparisons


def verify_cross_family(nu_max: int = 3, truncations=None) -> Report:
    """P(1,1) graded ideals against the n = 0 pattern, plus the dominance
    instance: the first family member sitting inside O(P(2,1))."""
    report = Report("cross-family", (("nu_max", nu_max),))
    sequence = family2_sequence(1, 1, nu_max, truncations)
    for nu in range(1, nu_max + 1):
        expected = base_power_ideal(2 * nu)
        ok = sequence[nu].equals(expected)
        report.add("p0-graded-ideal", ok,
                   (("nu", nu),) + sequence.truncation.as_params(),
                   f"m_{nu}(P(1,1)) vs <x,y>^{2 * nu}")

    trunc = family2_truncation(2, 1, 1)
    sub = family2_subalgebra(2, 1, trunc.degree)
    m1 = compute_m_nu(sub, 1, trunc)
    found = None
    for n in range(1, 7):
        if m1.contains_ideal(base_power_ideal(n + 2)):
            found = n
            break
    report.add("dominating-level", found == 1, trunc.as_params(),
               f"least n with <x,y>^(n+2) inside m_1: {found}")
    if found is not None:
        member_trunc = TruncationParams(1, trunc.degree)
        for name, image in sorted(family1_psi(found).items()):
            result = subalgebra_contains(sub, image, member_trunc)
            ok = isinstance(result, Member)
            report.add("generator-membership", ok,
                       (("gen", name),) + member_trunc.as_params(),
                       result.witness if ok else repr(result))
    return report
