"""Hall-Littlewood specialisations.

Four independent routes to specialised Hall-Littlewood polynomials are
implemented and cross-checked against each other:

* hl_principal_finite: the closed form for P_lambda(1, t, ..., t^{k-1}; t),
  valid for any t (here t = q^m);
* hl_symmetrization: the defining coset-symmetrization, evaluated at a
  geometric point x_i = q^{step*(i-1)} by exact series division;
* hl_ls_2r1s: the Lassalle-Schlosser single sum for shapes (2^r, 1^s) at
  x_i = q^{i-1};
* hl_inf_spec: P_lambda(1, q, q^2, ...; q^m) by the branching rule over
  horizontal-strip chains (the weight (1 - t^{m_i}) over indices where the
  smaller partition has one extra part of size i is validated in-repo
  against the symmetrization).

On top of these sit the chain multisum HL_{k,n}(z,q), its two weighted
variants, the Gordon-Ono-Warnaar style multisum for P_{(2^r)}, and the
Bailey-pair consistency check.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import permutations

from .partitions import (Partition, check_partition, conjugate, frequencies,
                         n_stat, sub_partitions)
from .series import QSeries, poch, qbin


@lru_cache(maxsize=None)
def _inv_geom(d: int, order: int) -> QSeries:
    """1 / (1 - q^d) to the given order."""
    return QSeries({(0, 0, 0): 1, (0, 0, d): -1}, None, 0,
                   _clean=True).invert(order)


@lru_cache(maxsize=None)
def inv_poch_fin(base: int, count: int, order: int) -> QSeries:
    """1 / (q^base; q^base)_count to the given order."""
    return poch(base, base, count, order).invert()


def hl_principal_finite(lam: Partition, kvars: int, m: int, N: int) -> QSeries:
    """P_lambda(1, t, ..., t^{kvars-1}; t) at t = q^m via the closed form
    t^{n(lambda)} (t;t)_kvars / prod_{i>=0} (t;t)_{f_i}, f_0 = kvars - l."""
    lam = check_partition(lam)
    if m < 1:
        raise ValueError("m >= 1")
    if len(lam) > kvars:
        return QSeries({}, N, 0, _clean=True)
    out = QSeries.monomial(1, dq=m * n_stat(lam), order=None)
    out = out * poch(m, m, kvars, N + m * n_stat(lam))
    out = out * inv_poch_fin(m, kvars - len(lam), N)
    for f in frequencies(lam).values():
        out = out * inv_poch_fin(m, f, N)
    return out.truncate(N)


def hl_ls_2r1s(r: int, s: int, kvars: int, m: int, N: int) -> QSeries:
    """P_{(2^r,1^s)}(1, q, ..., q^{kvars-1}; q^m) by the Lassalle-Schlosser
    sum over i = 0..r; the i = 0 ratio (1-t^s)/(1-t^s) counts as 1."""
    if r < 0 or s < 0:
        raise ValueError("r, s >= 0")
    total = QSeries({}, N, 0, _clean=True)
    for i in range(r + 1):
        e = m * (i * (i - 1) // 2) + \
            (r - i) * (r - i - 1) // 2 + (r + s + i) * (r + s + i - 1) // 2
        term = QSeries.monomial((-1) ** i, dq=e, order=None)
        term = term * qbin(i + s, s, m)
        term = term * qbin(kvars, r - i, 1)
        term = term * qbin(kvars, r + s + i, 1)
        if i > 0:
            num = QSeries({(0, 0, 0): 1, (0, 0, m * (2 * i + s)): -1},
                          None, 0, _clean=True)
            term = term * num * _inv_geom(m * (i + s), N + e)
        total = total + term.truncate(N)
    return total


def hl_symmetrization(lam: Partition, L: int, m: int, N: int,
                      xstep: int = 1) -> QSeries:
    """P_lambda(x_1,...,x_L; q^m) at x_i = q^{xstep*(i-1)} from the coset
    symmetrization sum_{w in S_L/S_L^lambda} w(x^lambda prod (x_i - t x_j)
    / (x_i - x_j)), expanded by exact series division.

    xstep = m evaluates the fully principal point 1, t, ..., t^{L-1}.
    """
    lam = check_partition(lam)
    if not 0 <= len(lam) <= L:
        raise ValueError("need l(lambda) <= L")
    if L > 9:
        raise ValueError("L > 9 is a factorial-cost wall (L! cosets)")
    padded = list(lam) + [0] * (L - len(lam))
    pairs = [(i, j) for i in range(L) for j in range(L)
             if padded[i] > padded[j]]
    total = QSeries({}, N, 0, _clean=True)
    for alpha in sorted(set(permutations(padded)), reverse=True):
        # order-preserving assignment of original indices to positions
        w = [0] * L
        taken = {}
        for i in range(L):
            v = padded[i]
            pos = taken.get(v, 0)
            while alpha[pos] != v:
                pos += 1
            w[i] = pos
            taken[v] = pos + 1
        sign = 1
        shift = sum(padded[i] * xstep * w[i] for i in range(L))
        num_factors: list[int] = []
        den_factors: list[int] = []
        dead = False
        for (i, j) in pairs:
            a = xstep * w[i]
            b = m + xstep * w[j]
            if a == b:
                dead = True
                break
            shift += min(a, b)
            if a > b:
                sign = -sign
            num_factors.append(abs(a - b))
            c, d = xstep * w[i], xstep * w[j]
            shift -= min(c, d)
            if c > d:
                sign = -sign
            den_factors.append(abs(c - d))
        if dead:
            continue
        inner = N - min(shift, 0)
        unit = QSeries.one(inner)
        for u in num_factors:
            unit = (unit * QSeries({(0, 0, 0): 1, (0, 0, u): -1}, None, 0,
                                   _clean=True)).truncate(inner)
        for v in den_factors:
            unit = unit * _inv_geom(v, inner)
        total = total + (QSeries.monomial(sign, dq=shift) * unit).truncate(N)
    return total


# -- infinite principal specialisation via branching -------------------------


def _mults(lam: Partition) -> dict[int, int]:
    return frequencies(lam)


@lru_cache(maxsize=None)
def _psi_poly(mu: Partition, nu: Partition, m: int) -> tuple[tuple[int, int], ...]:
    """Branching weight of the horizontal strip nu/mu as (exponent, coeff)
    pairs: prod over {i: m_i(mu) = m_i(nu) + 1} of (1 - t^{m_i(mu)}), t=q^m."""
    mm, mn = _mults(mu), _mults(nu)
    poly = {0: 1}
    for i, f in mm.items():
        if f == mn.get(i, 0) + 1:
            new = {}
            for d, c in poly.items():
                new[d] = new.get(d, 0) + c
                new[d + m * f] = new.get(d + m * f, 0) - c
            poly = {d: c for d, c in new.items() if c}
    return tuple(sorted(poly.items()))


@lru_cache(maxsize=None)
def _strips_within(mu: Partition, cap: Partition) -> tuple[Partition, ...]:
    """All nu with mu <= nu <= cap and nu/mu a horizontal strip."""
    out: list[Partition] = []
    k = len(cap)

    def rec(i: int, acc: list[int]):
        if i == k:
            lam = tuple(acc)
            while lam and lam[-1] == 0:
                lam = lam[:-1]
            out.append(lam)
            return
        lo = mu[i] if i < len(mu) else 0
        hi = cap[i] if i == 0 else min(acc[i - 1], cap[i])
        # strip condition: nu_{i+1} <= mu_i
        if i > 0:
            hi = min(hi, mu[i - 1] if i - 1 < len(mu) else 0)
        for v in range(hi, lo - 1, -1):
            acc.append(v)
            rec(i + 1, acc)
            acc.pop()

    rec(0, [])
    return tuple(out)


def hl_inf_spec(lam: Partition, m: int, N: int) -> QSeries:
    """P_lambda(1, q, q^2, ...; q^m) to order N.

    Sums over chains of horizontal strips empty = nu^(0) < ... < nu^(L)
    = lambda with L = N + 1 variables (monomials touching variable index
    > N have q-degree > N, so this is the stable value through q^N)."""
    lam = check_partition(lam)
    if m < 1:
        raise ValueError("m >= 1")
    if not lam:
        return QSeries.one(N)
    L = N + 1
    wt = sum(lam)
    state: dict[Partition, dict[int, int]] = {(): {0: 1}}
    for step in range(1, L + 1):
        new: dict[Partition, dict[int, int]] = {}
        xexp = step - 1
        for mu, coeffs in state.items():
            wmu = sum(mu)
            for nu in _strips_within(mu, lam):
                grow = (sum(nu) - wmu) * xexp
                psi = _psi_poly(mu, nu, m)
                acc = new.setdefault(nu, {})
                rem = wt - sum(nu)
                for d, c in coeffs.items():
                    for pd, pc in psi:
                        e = d + grow + pd
                        if e + step * rem > N:
                            continue
                        s = acc.get(e, 0) + c * pc
                        if s:
                            acc[e] = s
                        elif e in acc:
                            del acc[e]
        state = {nu: cs for nu, cs in new.items() if cs}
        if list(state) == [lam]:
            # every next step multiplies by psi = 1 with grow = 0
            break
    final = state.get(lam, {})
    return QSeries({(0, 0, d): c for d, c in final.items() if d <= N}, N, 0,
                   _clean=True)


def prop_gow_sum(r: int, n: int, delta: int, N: int) -> QSeries:
    """The (n-fold) multisum for P_{(2^r)}(1, q, q^2, ...; q^{2n+delta}):
    sum over r >= r_1 >= ... >= r_n >= 0 of
    q^{r^2 - r + sum r_i^2 + sum r_i} / ((q;q)_{r-r_1} ... (q^{2-delta};
    q^{2-delta})_{r_n})."""
    if delta not in (0, 1):
        raise ValueError("delta in {0,1}")
    total = QSeries({}, N, 0, _clean=True)
    base_last = 2 - delta

    def rec(chain: list[int]):
        nonlocal total
        if len(chain) == n + 1:
            e = chain[0] * (chain[0] - 1) + sum(v * v + v for v in chain[1:])
            if e > N:
                return
            term = QSeries.monomial(1, dq=e, order=None)
            for i in range(n):
                term = term * inv_poch_fin(1, chain[i] - chain[i + 1], N - e)
            term = term * inv_poch_fin(base_last, chain[-1], N - e)
            total = total + term.truncate(N)
            return
        for v in range(chain[-1], -1, -1):
            chain.append(v)
            rec(chain)
            chain.pop()

    rec([r])
    return total


# -- chain multisums ---------------------------------------------------------


def _even_conjugate_tops(k: int, max_half: int) -> list[tuple[int, ...]]:
    """Weakly decreasing (c_1, ..., c_k) >= 0 with sum <= max_half; the top
    partition of a chain is (c_1, c_1, c_2, c_2, ...)."""
    out: list[tuple[int, ...]] = []

    def rec(i: int, prev: int, left: int, acc: list[int]):
        if i == k:
            out.append(tuple(acc))
            return
        for v in range(min(prev, left), -1, -1):
            acc.append(v)
            rec(i + 1, v, left - v, acc)
            acc.pop()

    rec(0, max_half, max_half, [])
    return out


_H_CACHE: dict[tuple, QSeries] = {}


def _h_step(upper: Partition, lower: Partition, m: int) -> QSeries:
    """One chain-step weight: prod_i q^{lower_i} t^{C(upper_i - lower_i, 2)}
    qbin(upper_i - lower_{i+1}, upper_i - lower_i)_t with t = q^m; exact
    polynomial (entries beyond l(upper) contribute 1)."""
    key = (upper, lower, m)
    cached = _H_CACHE.get(key)
    if cached is not None:
        return cached
    lu = len(upper)
    e = sum(lower)
    out = None
    for i in range(lu):
        li = lower[i] if i < len(lower) else 0
        lnext = lower[i + 1] if i + 1 < len(lower) else 0
        g = upper[i] - li
        e += m * (g * (g - 1) // 2)
        b = qbin(upper[i] - lnext, g, m)
        out = b if out is None else out * b
    term = QSeries.monomial(1, dq=e, order=None)
    if out is not None:
        term = term * out
    _H_CACHE[key] = term
    return term


def _chain_dp(n: int, N: int, spent_bound):
    """Completion weights G_a(mu) = sum over mu = mu^(a) >= ... >= mu^(n)
    = 0 of the per-step weights, memoised per (a, mu).

    spent_bound(a, w) must lower-bound the q-degree every caller attaches
    in front of G_a(mu) with w = |mu| (each of the a steps above carries
    at least q^w); each entry is truncated at the largest usable order."""
    memo: dict[tuple[int, Partition], QSeries] = {}

    def G(a: int, mu: Partition) -> QSeries:
        if a == n:
            return QSeries.one(None) if not mu else QSeries({}, None, 0,
                                                            _clean=True)
        key = (a, mu)
        got = memo.get(key)
        if got is not None:
            return got
        my_ord = N - spent_bound(a, sum(mu))
        total = QSeries({}, my_ord, 0, _clean=True)
        for nu in sub_partitions(mu):
            if spent_bound(a + 1, sum(nu)) > N:
                continue
            total = total + (_h_step(mu, nu, n) *
                             G(a + 1, nu)).truncate(my_ord)
        memo[key] = total
        return total

    return G


def hl_chain_sum(k: int, n: int, N: int) -> QSeries:
    """HL_{k,n}(z,q): the chain multisum equal (by the branching rule) to
    sum_{lambda_1 <= k} (zq)^{|lambda|} P_{2 lambda}(1, q, q^2, ...; q^n).

    Evaluated by dynamic programming over the nested levels, sharing the
    completion weight of every intermediate partition."""
    if n < 1:
        raise ValueError("n >= 1")
    if k < 0:
        raise ValueError("k >= 0")
    # the top carries q^{|mu0|/2} and each step above level a carries q^{|mu|}
    G = _chain_dp(n, N, lambda a, w: ((2 * a + 1) * w + 1) // 2)
    acc: dict[tuple[int, int, int], int] = {}
    for top in _even_conjugate_tops(k, N):
        csum = sum(top)
        mu0 = tuple(v for v in (c for c in top for _ in range(2)) if v)
        term = QSeries.monomial(1, dq=csum, order=None)
        for j in range(k):
            gap = top[j] - (top[j + 1] if j + 1 < k else 0)
            if gap:
                term = term * inv_poch_fin(n, gap, N - csum)
        term = (term * G(0, mu0)).truncate(N)
        for (_, _, dq), c in term.terms.items():
            kk = (csum, 0, dq)
            s = acc.get(kk, 0) + c
            if s:
                acc[kk] = s
            elif kk in acc:
                del acc[kk]
    return QSeries(acc, N, 0, _clean=True)


def hl_weighted_chain(variant: str, param: int, N: int) -> QSeries:
    """The two weighted chain sums (z evaluated at z/q):

    * variant "v1", param n >= 1: sum over S_{1,n} with weight
      q^{n mu0_1 - n mu1_1};
    * variant "v2", param k >= 1: sum over S_{k,2} with weight
      q^{sum_i mu0_i - 2 mu1_1}.

    Both weights touch only the top two levels, so the completion DP of
    hl_chain_sum is reused below the first level.
    """
    if variant == "v1":
        n, k = param, 1
        if n < 1:
            raise ValueError("v1 needs n >= 1")

        def extra(csum: int, mu1_1: int) -> int:
            return n * (csum - mu1_1) - csum  # -csum: the z/q evaluation
    elif variant == "v2":
        k, n = param, 2
        if k < 1:
            raise ValueError("v2 needs k >= 1")

        def extra(csum: int, mu1_1: int) -> int:
            return 2 * csum - 2 * mu1_1 - csum
    else:
        raise ValueError(variant)
    # the z/q weight cancels the q^{|mu0|/2} of the top row
    G = _chain_dp(n, N, lambda a, w: a * w)
    acc: dict[tuple[int, int, int], int] = {}
    for top in _even_conjugate_tops(k, N):
        csum = sum(top)
        mu0 = tuple(v for v in (c for c in top for _ in range(2)) if v)
        gaps = QSeries.one(None)
        for j in range(k):
            gap = top[j] - (top[j + 1] if j + 1 < k else 0)
            if gap:
                gaps = gaps * inv_poch_fin(n, gap, N)
        for mu1 in sub_partitions(mu0):
            if sum(mu1) > N:
                continue
            e = csum + extra(csum, mu1[0] if mu1 else 0)
            if e > N:
                continue
            term = QSeries.monomial(1, dq=e, order=None) * gaps
            term = (term * _h_step(mu0, mu1, n) * G(1, mu1)).truncate(N)
            for (_, _, dq), c in term.terms.items():
                kk = (csum, 0, dq)
                s = acc.get(kk, 0) + c
                if s:
                    acc[kk] = s
                elif kk in acc:
                    del acc[kk]
    return QSeries(acc, N, 0, _clean=True)


def hl_sum_over_bounded(k: int, m: int, N: int,
                        z_shift: int = 1) -> QSeries:
    """sum_{lambda_1 <= k} (z q^{z_shift})^{|lambda|} P_{2 lambda}(1, q,
    ...; q^m), assembled from hl_inf_spec; the oracle for hl_chain_sum."""
    total: dict[tuple[int, int, int], int] = {}

    def visit(lam: tuple[int, ...]):
        wl = sum(lam)
        two = tuple(2 * p for p in lam)
        p = hl_inf_spec(two, m, N - z_shift * wl)
        for (_, _, dq), c in p.terms.items():
            kk = (wl, 0, dq + z_shift * wl)
            s = total.get(kk, 0) + c
            if s:
                total[kk] = s
            elif kk in total:
                del total[kk]

    def rec(prev: int, acc: list[int]):
        visit(tuple(acc))
        wl = sum(acc)
        for v in range(1, min(prev, k) + 1):
            if (wl + v) * z_shift > N:
                break
            acc.append(v)
            rec(v, acc)
            acc.pop()

    rec(k, [])
    return QSeries(total, N, 0, _clean=True)


# -- Bailey pair check -------------------------------------------------------


def bailey_beta_check(s: int, m: int, r_max: int, N: int):
    """For each r <= r_max, compare the beta built from the alpha sequence
    (Bailey pair relative to q^s, t = q^m) with the Hall-Littlewood form
    q^{-binom(r,2)-binom(r+s,2)} (q;q)_s P_{(2^r,1^s)}(1,q,...; q^m).

    Returns a list of (r, equal, mismatch-or-None)."""
    if r_max > 6:
        raise ValueError("r_max <= 6")
    results = []
    for r in range(r_max + 1):
        lhs = QSeries({}, N, 0, _clean=True)
        for i in range(r + 1):
            e = m * (i * (i - 1) // 2) + i * (i + s)
            alpha = QSeries.monomial((-1) ** i, dq=e, order=None)
            alpha = alpha * qbin(i + s, s, m)
            if i > 0:
                num = QSeries({(0, 0, 0): 1, (0, 0, m * (2 * i + s)): -1},
                              None, 0, _clean=True)
                alpha = alpha * num * _inv_geom(m * (i + s), N + e)
            term = alpha * inv_poch_fin(1, r - i, N)
            term = term * poch(s + 1, 1, r + i, N).invert(N)
            lhs = lhs + term.truncate(N)
        D = r * (r - 1) // 2 + (r + s) * (r + s - 1) // 2
        shape = tuple([2] * r + [1] * s)
        rhs = hl_inf_spec(shape, m, N + D) * poch(1, 1, s, N + D)
        rhs = (rhs * QSeries.monomial(1, dq=-D)).truncate(N)
        mm = lhs.compare(rhs, N)
        results.append((r, mm is None, mm))
    return results
