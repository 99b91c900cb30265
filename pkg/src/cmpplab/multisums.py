"""Explicit multisum sides: Andrews-Gordon and F-sums, the double sums in
(r_i, s_i) with base-q and base-q^2 Pochhammers, the w-deformed k=2 system
and its four-fold auxiliary S-series with the atomic shift relations.

All sums are evaluated with exact lower bounds derived from their
quadratic exponents; index tuples violating the chain inequalities are
skipped (the usual 1/(q;q)_{negative} = 0 convention).
"""

from __future__ import annotations

from functools import lru_cache
from math import isqrt

from .hall_littlewood import inv_poch_fin
from .series import QSeries


def f_sum(n: int, a: int, delta: int, N: int) -> QSeries:
    """F^{(n)}_{a,delta}(z,q): the n-fold sum over r_1 >= ... >= r_n >= 0 of
    z^{r_1} q^{r_1^2+...+r_n^2+r_{a+1}+...+r_n} with denominators
    (q;q)_{r_i - r_{i+1}} and a final (q^{2-delta}; q^{2-delta})_{r_n}."""
    if not 0 <= a <= n:
        raise ValueError("need 0 <= a <= n")
    if delta not in (0, 1):
        raise ValueError("delta in {0,1}")
    acc: dict[tuple[int, int, int], int] = {}

    def add_term(chain: list[int]):
        e = sum(v * v for v in chain) + sum(chain[a:])
        if e > N:
            return
        term = QSeries.monomial(1, dq=e, order=None)
        for i in range(n - 1):
            term = term * inv_poch_fin(1, chain[i] - chain[i + 1], N - e)
        term = term * inv_poch_fin(2 - delta, chain[-1], N - e)
        for (_, _, dq), c in term.truncate(N).terms.items():
            kk = (chain[0], 0, dq)
            s = acc.get(kk, 0) + c
            if s:
                acc[kk] = s
            elif kk in acc:
                del acc[kk]

    def rec(chain: list[int]):
        if len(chain) == n:
            add_term(chain)
            return
        cap = chain[-1] if chain else isqrt(N)
        base = sum(v * v for v in chain)
        for v in range(cap + 1):
            if base + v * v > N:
                break
            chain.append(v)
            rec(chain)
            chain.pop()

    if n == 0:
        raise ValueError("n >= 1")
    rec([])
    return QSeries(acc, N, 0)


def ag_sum(k: int, a: int, N: int) -> QSeries:
    """The Andrews-Gordon multisum: sum over r_1 >= ... >= r_k >= 0 of
    z^{r_1+...+r_k} q^{r_1^2+...+r_k^2+r_{a+1}+...+r_k} /
    ((q;q)_{r_1-r_2} ... (q;q)_{r_k})."""
    if not 0 <= a <= k:
        raise ValueError("need 0 <= a <= k")
    acc: dict[tuple[int, int, int], int] = {}

    def add_term(chain: list[int]):
        e = sum(v * v for v in chain) + sum(chain[a:])
        if e > N:
            return
        term = QSeries.monomial(1, dq=e, order=None)
        for i in range(k - 1):
            term = term * inv_poch_fin(1, chain[i] - chain[i + 1], N - e)
        term = term * inv_poch_fin(1, chain[-1] if k else 0, N - e)
        zp = sum(chain)
        for (_, _, dq), c in term.truncate(N).terms.items():
            kk = (zp, 0, dq)
            s = acc.get(kk, 0) + c
            if s:
                acc[kk] = s
            elif kk in acc:
                del acc[kk]

    def rec(chain: list[int]):
        if len(chain) == k:
            add_term(chain)
            return
        cap = chain[-1] if chain else isqrt(N)
        base = sum(v * v for v in chain)
        for v in range(cap + 1):
            if base + v * v > N:
                break
            chain.append(v)
            rec(chain)
            chain.pop()

    if k == 0:
        return QSeries.one(N)
    rec([])
    return QSeries(acc, N, 0)


# -- double (r, s) sums ------------------------------------------------------


def _rs_tuples(k: int, N: int, exp_fn):
    """All (r_1..r_k, s_1..s_k) with r descending, s ascending (s_0 = 0)
    whose exponent exp_fn(r, s) is <= N.

    Built pairwise from index k down to 1 (so r grows, s shrinks along
    the recursion), pruning on the accumulated quadratic minimum
    (r_i + s_i)^2 + s_i^2 of each factor.
    """
    out: list[tuple[list[int], list[int]]] = []
    cap = isqrt(N) + 1

    def rec(i: int, rlo: int, rs: list[int], ss: list[int], emin: int):
        if i == 0:
            r, s = rs[::-1], ss[::-1]
            if exp_fn(r, s) <= N:
                out.append((r, s))
            return
        for ri in range(rlo, cap + 1):
            grew = False
            for si in range(0, (ss[-1] if ss else cap) + 1):
                contrib = (ri + si) ** 2 + si * si
                if emin + contrib > N:
                    break
                grew = True
                rs.append(ri)
                ss.append(si)
                rec(i - 1, ri, rs, ss, emin + contrib)
                rs.pop()
                ss.pop()
            if not grew:
                break  # si = 0 already over budget; larger ri only worse

    rec(k, 0, [], [], 0)
    return out


def _double_sum(k: int, N: int, exp_fn, z_fn, omega: bool = False,
                w_powers=None) -> QSeries:
    """Shared evaluator for the (r, s) double sums.

    exp_fn(r, s) gives the q-exponent; z_fn(r, s) the z-power; w_powers
    (if set) maps (r, s) to the w-power (else everything is carried by z);
    omega multiplies by Omega = sum_{i<k} q^{r_i+2s_i}(1-q^{2s_{i+1}-2s_i})
    + q^{r_k+2s_k}.
    """
    if k == 0:
        return QSeries.one(N)
    acc: dict[tuple[int, int, int], int] = {}
    for r, s in _rs_tuples(k, N, exp_fn):
        e = exp_fn(r, s)
        term = QSeries.monomial(1, dq=e, order=None)
        for i in range(k):
            rnext = r[i + 1] if i + 1 < k else 0
            term = term * inv_poch_fin(1, r[i] - rnext, N - e)
            sprev = s[i - 1] if i else 0
            term = term * inv_poch_fin(2, s[i] - sprev, N - e)
        if omega:
            om: dict[int, int] = {}
            for i in range(k - 1):
                d1 = r[i] + 2 * s[i]
                om[d1] = om.get(d1, 0) + 1
                d2 = d1 + 2 * (s[i + 1] - s[i])
                om[d2] = om.get(d2, 0) - 1
            dk = r[k - 1] + 2 * s[k - 1]
            om[dk] = om.get(dk, 0) + 1
            term = term * QSeries({(0, 0, d): c for d, c in om.items() if c},
                                  None, 0, _clean=True)
        zp = z_fn(r, s)
        wp = w_powers(r, s) if w_powers else 0
        for (_, _, dq), c in term.truncate(N).terms.items():
            kk = (zp, wp, dq)
            v = acc.get(kk, 0) + c
            if v:
                acc[kk] = v
            elif kk in acc:
                del acc[kk]
    return QSeries(acc, N, 0)


def shun_sum(k: int, N: int) -> QSeries:
    """sum prod_i z^{r_i+s_i} q^{(r_i+s_i)^2 + s_i^2 + s_i} /
    ((q;q)_{r_i-r_{i+1}} (q^2;q^2)_{s_i-s_{i-1}}): the conjectured
    expansion of sum_{lambda_1<=k} (zq)^{|lambda|} P_{2 lambda}(...; q^2)."""
    return _double_sum(
        k, N,
        lambda r, s: sum((r[i] + s[i]) ** 2 + s[i] * s[i] + s[i]
                         for i in range(k)),
        lambda r, s: sum(r) + sum(s))


def shun2_sum(k: int, variant: str, N: int) -> QSeries:
    """The three conjectured multisums for the rank-2 even-parity family:
    variant "kL0" (exponent extra r_i + 2s_i), "kL1" (no extra), or
    "omega" (Omega-weighted, weight Lambda_0 + (k-1) Lambda_1)."""
    if variant == "kL0":
        return _double_sum(
            k, N,
            lambda r, s: sum((r[i] + s[i]) ** 2 + s[i] * s[i] + r[i]
                             + 2 * s[i] for i in range(k)),
            lambda r, s: sum(r) + sum(s))
    if variant == "kL1":
        return _double_sum(
            k, N,
            lambda r, s: sum((r[i] + s[i]) ** 2 + s[i] * s[i]
                             for i in range(k)),
            lambda r, s: sum(r) + sum(s))
    if variant == "omega":
        if k < 1:
            raise ValueError("omega variant needs k >= 1")
        return _double_sum(
            k, N,
            lambda r, s: sum((r[i] + s[i]) ** 2 + s[i] * s[i]
                             for i in range(k)),
            lambda r, s: sum(r) + sum(s), omega=True)
    if variant == "omega_r1":
        # the second single-Omega rewriting: extra exponent r_1
        if k < 1:
            raise ValueError("omega_r1 variant needs k >= 1")
        return _double_sum(
            k, N,
            lambda r, s: sum((r[i] + s[i]) ** 2 + s[i] * s[i]
                             for i in range(k)) + r[0],
            lambda r, s: sum(r) + sum(s), omega=True)
    raise ValueError(variant)


# -- the w-deformed k=2 series and guesses -----------------------------------


def wz_sum(variant: str, N: int, k: int = 2) -> QSeries:
    """The (z, w, q) series of the deformed rank-2 system.

    variant in {"A", "B", "C", "D"} gives the four k=2 series (z tracks
    sum r_i, w tracks sum s_i; C and D carry the trailing factor
    1 + w q^{2 + sum_i (r_i + 2 s_i)}); "guess_B" / "guess_omega" give the
    conjectured k-fold interwoven sums.
    """
    if variant in ("A", "B", "C", "D"):
        k = 2

        def zf(r, s):
            return sum(r)

        def wf(r, s):
            return sum(s)

        if variant == "A":
            return _double_sum(
                2, N,
                lambda r, s: sum((r[i] + s[i]) ** 2 + s[i] * s[i] + r[i]
                                 + 2 * s[i] for i in range(2)),
                zf, w_powers=wf)
        if variant == "B":
            return _double_sum(
                2, N,
                lambda r, s: sum((r[i] + s[i]) ** 2 + s[i] * s[i]
                                 for i in range(2)),
                zf, w_powers=wf)
        # C and D: base exponent plus the two-term trailing factor
        if variant == "C":
            def exp_fn(r, s):
                return sum((r[i] + s[i]) ** 2 + s[i] * s[i]
                           for i in range(2)) + r[1] + 2 * s[1]
        else:
            def exp_fn(r, s):
                return sum((r[i] + s[i]) ** 2 + s[i] * s[i] + r[i]
                           for i in range(2)) + 2 * s[1]
        base = _double_sum(2, N, exp_fn, zf, w_powers=wf)
        tail = _double_sum(
            2, N,
            lambda r, s: exp_fn(r, s) + 2 + sum(r) + 2 * sum(s),
            zf, w_powers=lambda r, s: sum(s) + 1)
        return base + tail
    if variant == "guess_B":
        return _double_sum(
            k, N,
            lambda r, s: sum((r[i] + s[i]) ** 2 + s[i] * s[i]
                             for i in range(k)),
            lambda r, s: sum(r), w_powers=lambda r, s: sum(s))
    if variant == "guess_omega":
        return _double_sum(
            k, N,
            lambda r, s: sum((r[i] + s[i]) ** 2 + s[i] * s[i]
                             for i in range(k)),
            lambda r, s: sum(r), w_powers=lambda r, s: sum(s), omega=True)
    raise ValueError(variant)


# -- the four-fold S-series and its atomic relations -------------------------


@lru_cache(maxsize=None)
def s_series(k1: int, k2: int, l1: int, l2: int, N: int) -> QSeries:
    """S_{k1,k2,l1,l2}(z,w): sum over m1, m2, n1, n2 >= 0 with M1 = m1+m2,
    M2 = m2, N1 = n1+n2, N2 = n2 of z^{M1+M2} w^{N1+N2}
    q^{(M1+N2)^2 + (M2+N1)^2 + N1^2 + N2^2 + k1 m1 + k2 m2 + 2 l1 n1 +
    2 l2 n2} / ((q;q)_{m1} (q;q)_{m2} (q^2;q^2)_{n1} (q^2;q^2)_{n2}).

    Satisfies S(z q^m, w q^{2n}) = S_{k1+m, k2+2m, l1+n, l2+2n}(z, w)."""
    def axis_cap(c: int) -> int:
        # v^2 + c v <= N  =>  v <= (-c + sqrt(c^2 + 4N)) / 2
        v = (-c + isqrt(c * c + 4 * N)) // 2 + 1
        return max(v, 0)

    caps = (axis_cap(k1), axis_cap(k2), axis_cap(2 * l1), axis_cap(2 * l2))
    acc: dict[tuple[int, int, int], int] = {}
    for m1 in range(caps[0] + 1):
        for m2 in range(caps[1] + 1):
            for n1 in range(caps[2] + 1):
                for n2 in range(caps[3] + 1):
                    M1, M2 = m1 + m2, m2
                    N1, N2 = n1 + n2, n2
                    e = ((M1 + N2) ** 2 + (M2 + N1) ** 2 + N1 * N1 + N2 * N2
                         + k1 * m1 + k2 * m2 + 2 * l1 * n1 + 2 * l2 * n2)
                    if e > N:
                        continue
                    term = QSeries.monomial(1, dq=e, order=None)
                    term = term * inv_poch_fin(1, m1, N - e)
                    term = term * inv_poch_fin(1, m2, N - e)
                    term = term * inv_poch_fin(2, n1, N - e)
                    term = term * inv_poch_fin(2, n2, N - e)
                    zp, wp = M1 + M2, N1 + N2
                    for (_, _, dq), c in term.truncate(N).terms.items():
                        kk = (zp, wp, dq)
                        s = acc.get(kk, 0) + c
                        if s:
                            acc[kk] = s
                        elif kk in acc:
                            del acc[kk]
    return QSeries(acc, N, 0)


def _monom(c: int, dz: int = 0, dw: int = 0, dq: int = 0) -> QSeries:
    return QSeries.monomial(c, dz, dw, dq)


def atomic_residual(which: str, params: tuple[int, int, int, int],
                    N: int) -> QSeries:
    """Residual of one atomic S-relation (R1..R4) or of the fixed
    toshow1..toshow4 combinations; zero through order N when the relation
    holds.  Prefactors with negative q-exponents raise the internal order."""
    k1, k2, l1, l2 = params

    def S(a, b, c, d, extra=0):
        return s_series(a, b, c, d, N + extra)

    if which == "R1":
        sh = k1 + 1
        pad = max(0, -sh)
        r = S(k1, k2, l1, l2) - S(k1 + 1, k2, l1, l2) - \
            _monom(1, dz=1, dq=sh) * S(k1 + 2, k2 + 2, l1, l2 + 1, pad)
        return r
    if which == "R2":
        sh = k2 + 2
        pad = max(0, -sh)
        return S(k1, k2, l1, l2) - S(k1, k2 + 1, l1, l2) - \
            _monom(1, dz=2, dq=sh) * S(k1 + 2, k2 + 4, l1 + 1, l2 + 2, pad)
    if which == "R3":
        sh = 2 * l1 + 2
        pad = max(0, -sh)
        return S(k1, k2, l1, l2) - S(k1, k2, l1 + 1, l2) - \
            _monom(1, dw=1, dq=sh) * S(k1, k2 + 2, l1 + 2, l2 + 2, pad)
    if which == "R4":
        sh = 2 * l2 + 4
        pad = max(0, -sh)
        return S(k1, k2, l1, l2) - S(k1, k2, l1, l2 + 1) - \
            _monom(1, dw=2, dq=sh) * S(k1 + 2, k2 + 4, l1 + 2, l2 + 4, pad)
    if which == "toshow1":
        return (S(0, 0, 0, 0) - S(1, 2, 0, 0)
                - _monom(1, dz=1, dq=1) * S(1, 3, 1, 1)
                - _monom(1, dz=1, dw=1, dq=3) * S(2, 5, 2, 3)
                - _monom(1, dz=2, dq=2) * S(2, 4, 1, 2))
    if which == "toshow2":
        return (S(0, 0, 1, 1) + _monom(1, dw=1, dq=2) * S(1, 2, 2, 3)
                - S(0, 0, 1, 2)
                - _monom(1, dw=1, dq=2) * S(1, 3, 2, 3)
                - _monom(1, dw=2, dq=6) * S(2, 5, 3, 5)
                - _monom(1, dz=2, dq=2) * S(2, 4, 2, 3)
                - _monom(1, dz=2, dw=1, dq=6) * S(3, 6, 3, 5)
                + _monom(1, dz=2, dq=2) * S(2, 4, 2, 4))
    if which == "toshow3":
        # cleared by z: z*(eq3)
        return (_monom(1, dz=1) * S(0, 0, 0, 0)
                - (_monom(1, dz=1) + _monom(1, dw=1)) *
                (S(0, 1, 1, 1) + _monom(1, dw=1, dq=2) * S(1, 3, 2, 3))
                + _monom(1, dw=1) *
                (S(1, 2, 1, 1) + _monom(1, dw=1, dq=2) * S(2, 4, 2, 3))
                + (_monom(1, dz=1, dw=1, dq=1) - _monom(1, dz=3, dq=2)) *
                S(2, 4, 1, 2))
    if which == "toshow4":
        return (S(0, 1, 1, 1) + _monom(1, dw=1, dq=2) * S(1, 3, 2, 3)
                - S(1, 2, 1, 1) - _monom(1, dw=1, dq=2) * S(2, 4, 2, 3)
                - _monom(1, dz=1, dq=1) * S(2, 4, 1, 2)
                - _monom(1, dz=2, dq=3) * S(2, 5, 2, 3)
                - _monom(1, dz=2, dw=1, dq=7) * S(3, 7, 3, 5)
                - _monom(1, dz=1, dw=1, dq=4) * S(3, 6, 2, 4))
    raise ValueError(which)
