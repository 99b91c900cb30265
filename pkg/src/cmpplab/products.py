"""Theta functions and the closed-form product sides.

theta_q(a, m, N) expands theta(q^a; q^m) = (q^a; q^m)_inf (q^{m-a}; q^m)_inf,
reducing any integer a into [0, m) through the quasi-periodicity
theta(x; p) = -x theta(xp; p), which contributes a signed q-power (possibly
with a negative exponent, carried by the series' q_floor).

ProductSpec is declarative data: a list of theta factors theta(q^a; q^m)^e
and Pochhammer factors (q^c; q^m)_inf^e, assembled by expand().  All the
named product sides (Gordon, the level-one theorems, the specialised
character products, the Andrews-Gordon-type conjectural products) are
built here as ProductSpecs.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .series import QSeries, poch


@dataclass(frozen=True)
class ThetaFactor:
    a: int
    m: int
    power: int = 1


@dataclass(frozen=True)
class PochFactor:
    c: int
    m: int
    power: int = 1


@dataclass(frozen=True)
class ProductSpec:
    thetas: tuple[ThetaFactor, ...] = ()
    pochs: tuple[PochFactor, ...] = ()


def theta_reduce(a: int, m: int) -> tuple[int, int, int]:
    """Normalise theta(q^a; q^m) to sign * q^shift * theta(q^r; q^m),
    r in [0, m)."""
    sign, shift = 1, 0
    while a >= m:
        shift += m - a
        sign = -sign
        a -= m
    while a < 0:
        shift += a
        sign = -sign
        a += m
    return sign, shift, a


@lru_cache(maxsize=None)
def theta_q(a: int, m: int, N: int) -> QSeries:
    """theta(q^a; q^m) truncated at order N; zero when a = 0 (mod m)."""
    if m < 1:
        raise ValueError("modulus exponent m must be >= 1")
    sign, shift, r = theta_reduce(a, m)
    if r == 0:
        return QSeries.zero()
    inner = N - shift  # shift <= 0
    s = poch(r, m, None, inner) * poch(m - r, m, None, inner)
    return s.scale(sign) * QSeries.monomial(1, dq=shift)


@lru_cache(maxsize=None)
def _inv_poch_inf(c: int, m: int, N: int) -> QSeries:
    return poch(c, m, None, N).invert()


def expand(spec: ProductSpec, N: int) -> QSeries:
    """Expand a ProductSpec to order N (exact).

    Theta factors with out-of-range arguments contribute signed negative
    q-shifts; every factor is expanded far enough past N that the
    assembled product stays exact through N."""
    out = QSeries.one(None)
    shift_total = 0
    for t in spec.thetas:
        _, shift, _ = theta_reduce(t.a, t.m)
        shift_total += shift * max(t.power, 0)
    inner = N - shift_total
    for t in spec.thetas:
        if t.power >= 0:
            factor = theta_q(t.a, t.m, inner)
            for _ in range(t.power):
                out = out * factor
        else:
            # theta in a denominator: invert the reduced unit part
            sign, shift, r = theta_reduce(t.a, t.m)
            if r == 0:
                raise ValueError("division by a vanishing theta")
            for _ in range(-t.power):
                base = poch(r, t.m, None, inner - shift) * \
                    poch(t.m - r, t.m, None, inner - shift)
                out = out * base.invert() * \
                    QSeries.monomial(sign, dq=-shift)
    for p in spec.pochs:
        if p.power >= 0:
            factor = poch(p.c, p.m, None, inner)
            for _ in range(p.power):
                out = out * factor
        else:
            factor = _inv_poch_inf(p.c, p.m, inner if out.q_floor >= 0
                                   else inner - out.q_floor)
            for _ in range(-p.power):
                out = out * factor
    return out.truncate(N)


quotient_product = expand


# -- specialised character products ----------------------------------------


def _lambdas(weight: tuple[int, ...]) -> list[int]:
    """lambda_i = k_i + ... + k_n for i = 1..n."""
    n = len(weight) - 1
    return [sum(weight[i:]) for i in range(1, n + 1)]


def char_product(family: str, spec_kind: str, n: int,
                 weight: tuple[int, ...], N: int) -> QSeries:
    """Closed-form product of the specialised character for the family's
    weight (k_0, ..., k_n); spec_kind is "nonstandard" or "principal".

    For family C the two kinds coincide (the specialisation is the
    ordinary principal one there).  n = 0 is rejected: the C n=0 case has
    no Lie product and is served by c_n0_product().
    """
    weight = tuple(weight)
    if len(weight) != n + 1 or any(k < 0 for k in weight):
        raise ValueError("weight must be n+1 non-negative integers")
    if n < 1:
        raise ValueError("char_product requires n >= 1; "
                         "use c_n0_product for the C n=0 quotient")
    if spec_kind not in ("nonstandard", "principal"):
        raise ValueError(spec_kind)
    k = sum(weight)
    lam = _lambdas(weight)
    thetas: list[ThetaFactor] = []
    pochs: list[PochFactor] = []
    if family == "A":
        kappa = 2 * k + 2 * n + 1
        pochs.append(PochFactor(kappa, kappa, n))
        pochs.append(PochFactor(1, 1, -n))
        for i in range(1, n + 1):
            thetas.append(ThetaFactor(lam[i - 1] + n - i + 1, kappa))
        if spec_kind == "principal":
            pochs.append(PochFactor(2 * n + 1, 4 * n + 2, 1))
            pochs.append(PochFactor(1, 2, -1))
            for i in range(1, n + 1):
                thetas.append(ThetaFactor(2 * k - 2 * lam[i - 1] + 2 * i - 1,
                                          2 * kappa))
        for i in range(1, n + 1):
            for j in range(i + 1, n + 1):
                li, lj = lam[i - 1], lam[j - 1]
                thetas.append(ThetaFactor(li - lj - i + j, kappa))
                thetas.append(ThetaFactor(li + lj + 2 * n - i - j + 2, kappa))
    elif family == "C":
        kappa = 2 * k + 2 * n + 2
        pochs.append(PochFactor(k + n + 1, kappa, 1))
        pochs.append(PochFactor(kappa, kappa, n))
        pochs.append(PochFactor(1, 2, -1))
        pochs.append(PochFactor(1, 1, -n))
        for i in range(1, n + 1):
            thetas.append(ThetaFactor(lam[i - 1] + n - i + 1, k + n + 1))
        for i in range(1, n + 1):
            for j in range(i + 1, n + 1):
                li, lj = lam[i - 1], lam[j - 1]
                thetas.append(ThetaFactor(li - lj - i + j, kappa))
                thetas.append(ThetaFactor(li + lj + 2 * n - i - j + 2, kappa))
    elif family == "D":
        kappa = 2 * k + 2 * n
        pochs.append(PochFactor(kappa, kappa, n))
        if spec_kind == "nonstandard":
            pochs.append(PochFactor(2, 2, -1))
            if n > 1:
                pochs.append(PochFactor(1, 1, -(n - 1)))
        else:
            pochs.append(PochFactor(1, 2, -1))
            pochs.append(PochFactor(1, 1, -n))
            for i in range(1, n + 1):
                thetas.append(ThetaFactor(2 * lam[i - 1] + 2 * n - 2 * i + 1,
                                          kappa))
        for i in range(1, n + 1):
            for j in range(i + 1, n + 1):
                li, lj = lam[i - 1], lam[j - 1]
                thetas.append(ThetaFactor(li - lj - i + j, kappa))
                thetas.append(ThetaFactor(li + lj + 2 * n - i - j + 1, kappa))
    else:
        raise ValueError("unknown family %r" % (family,))
    return expand(ProductSpec(tuple(thetas), tuple(pochs)), N)


def c_n0_product(k: int, N: int) -> QSeries:
    """(q^{k+1}; q^{2k+2})_inf / (q; q^2)_inf: odd parts, multiplicity <= k."""
    spec = ProductSpec((), (PochFactor(k + 1, 2 * k + 2, 1),
                            PochFactor(1, 2, -1)))
    return expand(spec, N)


def c_n0_two_variable(k: int, N: int) -> QSeries:
    """prod_{j odd} (1 - (zq^j)^{k+1}) / (1 - zq^j): the bounded-multiplicity
    generating function of odd parts, z tracking the number of parts."""
    out = QSeries.one(N)
    j = 1
    while j <= N:
        num = QSeries({(0, 0, 0): 1, ((k + 1), 0, (k + 1) * j): -1}, None, 0)
        den = QSeries({(0, 0, 0): 1, (1, 0, j): -1}, None, 0).invert(N)
        out = (out * num * den).truncate(N)
        j += 2
    return out


def d_n1_product(k: int, N: int) -> QSeries:
    """(q^{2k+2}; q^{2k+2})_inf / (q^2; q^2)_inf: even parts, multiplicity <= k."""
    spec = ProductSpec((), (PochFactor(2 * k + 2, 2 * k + 2, 1),
                            PochFactor(2, 2, -1)))
    return expand(spec, N)


# -- level-one and Gordon-type quotients ------------------------------------


def gordon_product(k: int, a: int) -> ProductSpec:
    """(q^{a+1}, q^{2k-a+2}, q^{2k+3}; q^{2k+3})_inf / (q; q)_inf."""
    mod = 2 * k + 3
    return ProductSpec((ThetaFactor(a + 1, mod),),
                       (PochFactor(mod, mod, 1), PochFactor(1, 1, -1)))


def jms_product(n: int, a: int) -> ProductSpec:
    """(q^{2a+1}, q^{2n-2a+2}, q^{2n+3}; q^{2n+3})_inf / (q; q)_inf."""
    mod = 2 * n + 3
    return ProductSpec((ThetaFactor(2 * a + 1, mod),),
                       (PochFactor(mod, mod, 1), PochFactor(1, 1, -1)))


def c_level1_product(n: int, a: int) -> ProductSpec:
    """(q^{2a+2}, q^{2n-2a+2}, q^{2n+4}; q^{2n+4})_inf / (q; q)_inf."""
    mod = 2 * n + 4
    return ProductSpec((ThetaFactor(2 * a + 2, mod),),
                       (PochFactor(mod, mod, 1), PochFactor(1, 1, -1)))


def d_level1_product(n: int, a: int) -> ProductSpec:
    """(q^{2a+1}, q^{2n-2a+1}, q^{2n+2}; q^{2n+2})_inf / (q; q)_inf."""
    mod = 2 * n + 2
    return ProductSpec((ThetaFactor(2 * a + 1, mod),),
                       (PochFactor(mod, mod, 1), PochFactor(1, 1, -1)))


def ag_type_product(which: str, k: int) -> ProductSpec:
    """The four conjectural Andrews-Gordon-type product sides for the
    double multisums: which in {"c-kL0", "d-kL0", "d-kL1", "d-omega"}."""
    if which == "c-kL0":
        mod = k + 2
        return ProductSpec((ThetaFactor(1, mod),),
                           (PochFactor(mod, mod, 1), PochFactor(1, 2, -1),
                            PochFactor(1, 1, -1)))
    mod = 2 * k + 4
    common = (PochFactor(mod, mod, 2), PochFactor(2, 2, -1),
              PochFactor(1, 1, -1))
    if which == "d-kL0":
        thetas = (ThetaFactor(1, mod), ThetaFactor(2, mod))
    elif which == "d-kL1":
        thetas = (ThetaFactor(k + 1, mod), ThetaFactor(k + 2, mod))
    elif which == "d-omega":
        thetas = (ThetaFactor(k, mod), ThetaFactor(k + 1, mod))
    else:
        raise ValueError(which)
    return ProductSpec(thetas, common)
