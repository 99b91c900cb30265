"""Macdonald identities in determinant form and the specialised character
determinant sums, including the vanishing (sign-twisted) cases.

The two lattice identities are

* type B:  sum over r in Z^n of det(x_i^{(2n-1)r_j + j - n} -
  x_i^{-(2n-1)r_j + n - j + 1}) prod_i (-sigma)^{r_i}
  p^{(2n-1) C(r_i,2) + (i-1) r_i} x_i^{n-i}  =  2 Pi_{B;sigma}(x, p),
* type D (n >= 2):  the analogous sum with entries x_i^{2(n-1)r_j + j - n}
  + tau x_i^{-2(n-1)r_j + n - j}  =  4 Pi_{D;sigma,tau}(x, p),

evaluated at x_i = q^{a_i} and p = q^base.  Pi_{B;-1} = 0 and
Pi_{D;sigma,-1} = 0, so those cases assert exact vanishing of the sums.

The r-lattice ranges are derived per call from the quadratic exponents:
each coordinate gets a candidate set from a separable lower bound on the
q-exponent of every determinant monomial, so no term at or below the
truncation order can be missed.

The character sums work the same way; the half-integral exponents of the
rank-2 twisted family are handled in doubled coordinates (the whole sum
is computed in u = q^{1/2} and re-indexed, asserting that all odd
u-exponents cancel).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations, product

from .products import char_product, theta_q
from .series import QSeries, poch


@dataclass(frozen=True)
class HalfWeight:
    """Level and highest-weight data in doubled coordinates: k = two_k/2
    and lambda_i = two_lambda_i / 2."""

    two_k: int
    two_lambda: tuple[int, ...]

    def __post_init__(self):
        if self.two_k < 0:
            raise ValueError("two_k >= 0")
        tl = self.two_lambda
        if any(v < 0 for v in tl):
            raise ValueError("two_lambda >= 0")
        if any(tl[i] < tl[i + 1] for i in range(len(tl) - 1)):
            raise ValueError("two_lambda weakly decreasing")
        if tl and len({v % 2 for v in tl}) > 1:
            raise ValueError("two_lambda must have a single parity "
                             "(partition or half-partition)")

    @property
    def k_integral(self) -> bool:
        return self.two_k % 2 == 0

    @property
    def lambda_integral(self) -> bool:
        return all(v % 2 == 0 for v in self.two_lambda)

    def weight(self) -> tuple[int, ...]:
        """The coefficients (k_0, ..., k_n) when everything is integral."""
        if not (self.k_integral and self.lambda_integral):
            raise ValueError("weight needs integral k and lambda")
        lam = [v // 2 for v in self.two_lambda]
        k = self.two_k // 2
        n = len(lam)
        out = [k - (lam[0] if lam else 0)]
        for i in range(n - 1):
            out.append(lam[i] - lam[i + 1])
        if n:
            out.append(lam[n - 1])
        return tuple(out)


def _perms_with_sign(n: int) -> list[tuple[tuple[int, ...], int]]:
    out = []
    for p in permutations(range(n)):
        inv = sum(1 for i in range(n) for j in range(i + 1, n)
                  if p[i] > p[j])
        out.append((p, 1 if inv % 2 == 0 else -1))
    return out


def _argmin_quadratic(f, hard_cap: int = 100000) -> tuple[int, int]:
    """Integer argmin of an upward quadratic, by window doubling."""
    lo, hi = -8, 8
    while True:
        vals = {r: f(r) for r in range(lo, hi + 1)}
        rbest = min(vals, key=lambda r: (vals[r], r))
        if lo < rbest < hi:
            return rbest, vals[rbest]
        lo, hi = lo * 2, hi * 2
        if hi > hard_cap:
            raise RuntimeError("no interior vertex found")


def _sublevel(f, bound: int, hard_cap: int = 100000) -> list[int]:
    """{r : f(r) <= bound} for an upward quadratic f: one integer
    interval, expanded outward from the argmin (unimodality makes the
    first exceedance on each side final)."""
    rbest, fmin = _argmin_quadratic(f, hard_cap)
    if fmin > bound:
        return []
    vals = [rbest]
    for direction in (1, -1):
        r = rbest + direction
        while f(r) <= bound:
            vals.append(r)
            r += direction
            if abs(r - rbest) > hard_cap:
                raise RuntimeError("lattice range cap exceeded")
    return vals


def _candidate_sets(n: int, variants, N: int) -> list[list[int]]:
    """Per-coordinate candidate values for a separable exponent bound.

    variants(j) yields upward-quadratic functions of r whose pointwise
    minimum h_j(r) lower-bounds the contribution of coordinate j to every
    lattice monomial; coordinate j may take r whenever h_j(r) <= N minus
    the other coordinates' minima.  The sublevel set of the minimum is
    the union of the variants' sublevel intervals, each exact, so no
    admissible lattice point is missed even when the union is
    disconnected."""
    mins = []
    for j in range(n):
        mins.append(min(_argmin_quadratic(f)[1] for f in variants(j)))
    total_min = sum(mins)
    sets: list[list[int]] = []
    for j in range(n):
        bound = N - (total_min - mins[j])
        vals: set[int] = set()
        for f in variants(j):
            vals.update(_sublevel(f, bound))
        sets.append(sorted(vals))
    return sets


def _lattice_det_sum(n: int, pref_exp, pref_sign, entry_monomials,
                     N: int) -> QSeries:
    """sum over r in Z^n of sign(r) q^{pref} det(entries), truncated at N.

    entry_monomials(i, j, r) yields the (coeff, exponent) monomials of the
    (i, j) entry, with r attached to index i (the determinant convention
    of the character sums; for the Macdonald identities the roles of the
    indices are symmetric under transposition)."""
    def h(i: int, r: int) -> int:
        return pref_exp(i, r) + min(
            min(e for _, e in entry_monomials(i, j, r)) for j in range(n))

    def variants(i: int):
        out = []
        for j in range(n):
            for t in range(len(entry_monomials(i, j, 0))):
                out.append(lambda r, i=i, j=j, t=t:
                           pref_exp(i, r) + entry_monomials(i, j, r)[t][1])
        return out

    sets = _candidate_sets(n, variants, N)
    perms = _perms_with_sign(n)
    acc: dict[int, int] = {}
    for rvec in product(*sets):
        base_e = sum(pref_exp(i, rvec[i]) for i in range(n))
        if sum(h(i, rvec[i]) for i in range(n)) > N:
            continue
        sgn0 = 1
        for i in range(n):
            sgn0 *= pref_sign(i, rvec[i])
        rows = [[list(entry_monomials(i, j, rvec[i])) for j in range(n)]
                for i in range(n)]
        for perm, psign in perms:
            chosen = [rows[i][perm[i]] for i in range(n)]
            for combo in product(*chosen):
                e = base_e + sum(m[1] for m in combo)
                if e > N:
                    continue
                c = sgn0 * psign
                for m in combo:
                    c *= m[0]
                s = acc.get(e, 0) + c
                if s:
                    acc[e] = s
                elif e in acc:
                    del acc[e]
    floor = min(acc, default=0)
    return QSeries({(0, 0, e): c for e, c in acc.items()}, N, min(floor, 0),
                   _clean=True)


def pi_product(kind: str, exps: tuple[int, ...], base: int, sigma: int,
               tau: int = 1, N: int = 0) -> QSeries:
    """Pi_{B;sigma}(x, p) (kind "B") or Pi_{D;sigma,tau}(x, p) (kind "D")
    at x_i = q^{exps[i]}, p = q^base; zero for sigma = -1 (B) and for
    sigma = -1 or tau = -1 (D)."""
    n = len(exps)
    if kind == "B":
        if sigma == -1:
            return QSeries.zero()
    elif kind == "D":
        if sigma == -1 or tau == -1:
            return QSeries.zero()
    else:
        raise ValueError(kind)
    args: list[int] = []
    if kind == "B":
        args.extend(exps)
    for i in range(n):
        for j in range(i + 1, n):
            args.append(exps[i] - exps[j])
            args.append(exps[i] + exps[j])
    from .products import theta_reduce
    pad = -sum(min(theta_reduce(a, base)[1], 0) for a in args)
    out = poch(base, base, None, N + pad) ** n
    for a in args:
        out = out * theta_q(a, base, N + pad)
        if out.is_exact_zero():
            return QSeries.zero()
    return out.truncate(N)


def macdonald_sum(kind: str, exps: tuple[int, ...], base: int, sigma: int,
                  tau: int = 1, N: int = 0) -> QSeries:
    """The determinant lattice sum equal to 2 Pi_{B;sigma} (kind "B",
    n >= 1) or 4 Pi_{D;sigma,tau} (kind "D", n >= 2)."""
    n = len(exps)
    if n == 0:
        raise ValueError("n >= 1")
    if sigma not in (1, -1) or tau not in (1, -1):
        raise ValueError("sigma, tau in {-1, 1}")
    a = list(exps)
    if kind == "B":
        c2 = 2 * n - 1

        def pref_exp(j, r):
            return base * (c2 * (r * (r - 1) // 2) + j * r) + a[j] * (n - 1 - j)

        def pref_sign(j, r):  # (-sigma)^r
            return 1 if r % 2 == 0 else -sigma

        def entries_T(i, j, r):
            # the display attaches r to the column; transposing the
            # determinant attaches it to the row index i instead
            e1 = a[j] * (c2 * r + (i + 1) - n)
            e2 = a[j] * (-c2 * r + n - (i + 1) + 1)
            return ((1, e1), (-1, e2))

        return _lattice_det_sum(n, pref_exp, pref_sign, entries_T, N)
    if kind == "D":
        if n < 2:
            raise ValueError("type D needs n >= 2")
        c2 = 2 * (n - 1)

        def pref_exp(j, r):
            return base * (c2 * (r * (r - 1) // 2) + j * r) + a[j] * (n - 1 - j)

        def pref_sign(j, r):
            return 1 if r % 2 == 0 else sigma

        def entries_T(i, j, r):
            e1 = a[j] * (c2 * r + (i + 1) - n)
            e2 = a[j] * (-c2 * r + n - (i + 1))
            return ((1, e1), (tau, e2))

        return _lattice_det_sum(n, pref_exp, pref_sign, entries_T, N)
    raise ValueError(kind)


def specialized_character_sum(family: str, n: int, hw: HalfWeight,
                              N: int) -> QSeries:
    """The determinant-sum value of the non-standard specialisation of the
    character with highest-weight data hw; equals the corresponding
    char_product for integral data and vanishes for half-integral level
    (both families) or half-partition weight (family D)."""
    if len(hw.two_lambda) != n:
        raise ValueError("two_lambda needs n entries")
    if family == "A":
        if not hw.lambda_integral:
            raise ValueError("family A needs an integral partition")
        if hw.two_lambda and hw.two_lambda[0] > 2 * ((hw.two_k) // 2):
            raise ValueError("lambda_1 <= floor(k)")
        kappa = hw.two_k + 2 * n + 1
        lam = [v // 2 for v in hw.two_lambda]
        y = [lam[i] + n - i for i in range(n)]  # exponent of y_{i+1}
        sigma = 1 if hw.k_integral else -1
        c2 = 2 * n - 1

        def pref_exp(i, r):
            return kappa * (c2 * (r * (r - 1) // 2) + (2 * n - 1 - i) * r) \
                + y[i] * (n - 1 - i)

        def pref_sign(i, r):
            return 1 if r % 2 == 0 else -sigma

        def entries(i, j, r):
            e1 = y[j] * (-c2 * r + (i + 1) - n)
            e2 = y[j] * (c2 * r + n - (i + 1) + 1)
            return ((1, e1), (-1, e2))

        raw = _lattice_det_sum(n, pref_exp, pref_sign, entries, N)
        den = poch(1, 1, None, N - min(raw.q_floor, 0)).invert() ** n
        out = (raw * den).truncate(N)
        return _halve(out, 2, N)
    if family == "D":
        if n < 2:
            raise ValueError("family D needs n >= 2")
        if hw.two_lambda and hw.two_lambda[0] > hw.two_k:
            raise ValueError("lambda_1 <= k")
        kappa = hw.two_k + 2 * n
        yu = [hw.two_lambda[i] + 2 * (n - i) - 1 for i in range(n)]
        sigma = 1 if hw.k_integral else -1
        tau = 1 if hw.lambda_integral else -1
        c2 = 2 * (n - 1)
        Nu = 2 * N + 1

        def pref_exp(i, r):
            return 2 * kappa * (c2 * (r * (r + 1) // 2) - i * r) \
                + yu[i] * (n - 1 - i)

        def pref_sign(i, r):
            return 1 if r % 2 == 0 else sigma

        def entries(i, j, r):
            e1 = yu[j] * (-c2 * r + (i + 1) - n)
            e2 = yu[j] * (c2 * r + n - (i + 1))
            return ((1, e1), (tau, e2))

        raw = _lattice_det_sum(n, pref_exp, pref_sign, entries, Nu)
        inner = Nu - min(raw.q_floor, 0)
        den = poch(2, 2, None, inner).invert() ** (n - 1)
        den = den * poch(4, 4, None, inner).invert()
        out = (raw * den).truncate(Nu)
        out = _halve(out, 4, Nu)
        terms: dict[tuple[int, int, int], int] = {}
        for (dz, dw, du), c in out.terms.items():
            if du % 2:
                raise AssertionError("odd half-exponent survived: u^%d" % du)
            terms[(dz, dw, du // 2)] = c
        return QSeries(terms, N, min(out.q_floor // 2, 0), _clean=True)
    raise ValueError(family)


def _halve(s: QSeries, d: int, N: int) -> QSeries:
    terms = {}
    for k, c in s.terms.items():
        if c % d:
            raise AssertionError("coefficient %d not divisible by %d" % (c, d))
        terms[k] = c // d
    return QSeries(terms, s.q_order, s.q_floor, _clean=True)
