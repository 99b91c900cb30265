"""Catalog of functional equations, bridges and identity checks.

Every check is declarative: an id, a parameter validator, a builder that
returns the two sides as exact series at a requested order, and a status
function marking the instance proved or conjectural.  Proved entries are
regressions (a mismatch is a bug); conjectural entries report mismatches
as findings.

Generating-function shifts such as A(zq^2) are realised through the
truncation-safe substitution z -> z q^c (c >= 0); the catalog stores all
equations in a form where only such raising shifts occur (e.g. the
C^(1)/D^(2) bridge is stated with zq on the C side rather than z/q on
the D side), and equations with w/z prefactors are cleared by z.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Optional

from . import cmpp, hall_littlewood as hl, macdonald, multisums, products
from .series import QSeries, poch


class ParamError(ValueError):
    """Parameters outside a check's documented range."""


# -- series resolver ----------------------------------------------------------


@lru_cache(maxsize=None)
def _series(ref: tuple, N: int) -> QSeries:
    kind = ref[0]
    if kind == "gen":
        _, fam, n, w = ref
        return cmpp.gen_fun(fam, n, w, N)
    if kind == "gordon_b":
        _, k, a = ref
        return cmpp.gordon_series(k, a, N)
    if kind == "prodspec":
        return products.expand(ref[1], N)
    if kind == "charprod":
        _, fam, kindp, n, w = ref
        return products.char_product(fam, kindp, n, w, N)
    if kind == "charprod-negpart":
        _, fam, kindp, n, w = ref
        s = products.char_product(fam, kindp, n, w, N)
        return QSeries({k: c for k, c in s.terms.items() if c < 0},
                       s.q_order, s.q_floor, _clean=True)
    if kind == "c_n0_2var":
        return products.c_n0_two_variable(ref[1], N)
    if kind == "fsum":
        _, n, a, delta = ref
        return multisums.f_sum(n, a, delta, N)
    if kind == "ag":
        _, k, a = ref
        return multisums.ag_sum(k, a, N)
    if kind == "hlchain":
        _, k, n = ref
        return hl.hl_chain_sum(k, n, N)
    if kind == "hlsum":
        _, k, m, zshift = ref
        return hl.hl_sum_over_bounded(k, m, N, z_shift=zshift)
    if kind == "hlweighted":
        _, variant, param = ref
        return hl.hl_weighted_chain(variant, param, N)
    if kind == "hlinf":
        _, shape, m = ref
        return hl.hl_inf_spec(shape, m, N)
    if kind == "gow":
        _, r, n, delta = ref
        return hl.prop_gow_sum(r, n, delta, N)
    if kind == "shun":
        return multisums.shun_sum(ref[1], N)
    if kind == "shun2":
        _, k, variant = ref
        return multisums.shun2_sum(k, variant, N)
    if kind == "wz":
        return multisums.wz_sum(ref[1], N, k=ref[2] if len(ref) > 2 else 2)
    if kind == "sser":
        _, k1, k2, l1, l2 = ref
        return multisums.s_series(k1, k2, l1, l2, N)
    if kind == "theta":
        _, a, m = ref
        return products.theta_q(a, m, N)
    if kind == "poch":
        _, c, m = ref
        return poch(c, m, None, N)
    if kind == "pi":
        _, kd, exps, base, sigma, tau = ref
        return macdonald.pi_product(kd, exps, base, sigma, tau, N)
    if kind == "macsum":
        _, kd, exps, base, sigma, tau = ref
        return macdonald.macdonald_sum(kd, exps, base, sigma, tau, N)
    if kind == "speccharsum":
        _, fam, n, two_k, two_lambda = ref
        return macdonald.specialized_character_sum(
            fam, n, macdonald.HalfWeight(two_k, two_lambda), N)
    if kind == "genw2":
        # gen_fun evaluated at (w, q^2)
        _, fam, n, w = ref
        inner = cmpp.gen_fun(fam, n, w, (N + 2) // 2)
        return inner.substitute(z=(0, 1, 0), qpow=2).truncate(N)
    if kind == "agw_as_w":
        # the AG multisum with (z, q) -> (w, q^2)
        _, k, a = ref
        inner = multisums.ag_sum(k, a, (N + 2) // 2)
        return inner.substitute(z=(0, 1, 0), qpow=2).truncate(N)
    if kind == "atomicres":
        _, which, params = ref
        return multisums.atomic_residual(which, params, N)
    if kind == "hlsym":
        _, shape, L, m, xstep = ref
        return hl.hl_symmetrization(shape, L, m, N, xstep=xstep)
    if kind == "hlls":
        _, r, s, L, m = ref
        return hl.hl_ls_2r1s(r, s, L, m, N)
    if kind == "hlpf":
        _, shape, L, m = ref
        return hl.hl_principal_finite(shape, L, m, N)
    if kind in ("baileyl", "baileyr"):
        _, s, m, r_max = ref
        idx = 0 if kind == "baileyl" else 1
        sides = _bailey_sides(s, m, r_max, N)
        return sides[idx]
    if kind == "jtp_prod":
        _, a, m = ref
        th = products.theta_q(a, m, N)
        pad = -min(th.q_floor, 0)
        th = products.theta_q(a, m, N + pad)
        return (th * poch(m, m, None, N + pad)).truncate(N)
    if kind == "jtp_sum":
        _, a, m = ref
        terms: dict[tuple[int, int, int], int] = {}
        floor = 0
        for direction in (1, -1):
            j = 0 if direction == 1 else -1
            misses = 0
            while misses < 3:
                e = m * (j * (j - 1) // 2) + a * j
                if e <= N:
                    terms[(0, 0, e)] = terms.get((0, 0, e), 0) + \
                        (1 if j % 2 == 0 else -1)
                    floor = min(floor, e)
                    misses = 0
                else:
                    misses += 1
                j += direction
        return QSeries(terms, N, floor)
    if kind == "mac_cross":
        _, kd, exps_sum, exps_pi, base, sigma, tau = ref
        s1 = macdonald.macdonald_sum(kd, exps_sum, base, sigma, tau, N)
        p1 = macdonald.pi_product(kd, exps_pi, base, sigma, tau, N)
        pad = -min(s1.q_floor, 0) - min(p1.q_floor, 0)
        s1 = macdonald.macdonald_sum(kd, exps_sum, base, sigma, tau, N + pad)
        p1 = macdonald.pi_product(kd, exps_pi, base, sigma, tau, N + pad)
        return (s1 * p1).truncate(N)
    if kind == "d2solved":
        return _d2_tagged(ref[1], N, solved=True)
    if kind == "d2enum":
        return _d2_tagged(ref[1], N, solved=False)
    if kind == "zero":
        return QSeries({}, None, 0, _clean=True)
    if kind == "one":
        return QSeries.one(None)
    raise ValueError("unknown series kind %r" % (kind,))


@lru_cache(maxsize=None)
def _bailey_sides(s: int, m: int, r_max: int, N: int):
    """Both Bailey beta routes, each tagged by z^r."""
    from .hall_littlewood import _inv_geom, inv_poch_fin
    from .series import qbin
    lt: dict[tuple[int, int, int], int] = {}
    rt: dict[tuple[int, int, int], int] = {}
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
        rhs = hl.hl_inf_spec(shape, m, N + D) * poch(1, 1, s, N + D)
        rhs = (rhs * QSeries.monomial(1, dq=-D)).truncate(N)
        for (_, _, dq), c in lhs.terms.items():
            lt[(r, 0, dq)] = c
        for (_, _, dq), c in rhs.terms.items():
            rt[(r, 0, dq)] = c
    return QSeries(lt, N, 0), QSeries(rt, N, 0)


def _d2_tagged(k: int, N: int, solved: bool) -> QSeries:
    """All level-k rank-2 series, the weight tagged by the w-exponent."""
    from .d2solver import solve_d2_system, _weights
    ws = _weights(k)
    if solved:
        family = solve_d2_system(k, N)
    else:
        family = {w: cmpp.gen_fun("D", 2, w, N) for w in ws}
    acc: dict[tuple[int, int, int], int] = {}
    for idx, w in enumerate(sorted(ws)):
        for (dz, dw, dq), c in family[w].terms.items():
            acc[(dz, idx, dq)] = c
    return QSeries(acc, N, 0)


@dataclass(frozen=True)
class Term:
    """sign * prefactor * post-processed series with substituted argument."""

    side: int
    series: tuple
    pref: tuple[tuple[int, int, int, int], ...] = ((1, 0, 0, 0),)
    subst: tuple[int, int, int] = (0, 0, 1)  # z -> z q^cz, w -> w q^cw, q^m
    post: str = ""  # "", "z1", "w0", "z0", "w_to_z"


@dataclass(frozen=True)
class EquationSpec:
    check_id: str
    params: tuple[tuple[str, int], ...]
    terms: tuple[Term, ...]
    status: str  # "proved" | "conjectural"


def _eval_term(term: Term, N: int) -> QSeries:
    cz, cw, m = term.subst
    if cz < 0 or cw < 0 or m < 1:
        raise ValueError("catalog terms must use raising substitutions")
    s = _series(term.series, N)
    if term.post == "z1":
        s = s.at_one("z")
    elif term.post == "w0":
        s = s.at_zero("w")
    elif term.post == "z0":
        s = s.at_zero("z")
    elif term.post == "w_to_z":
        s = s.substitute(w=(1, 0, 0))
    elif term.post:
        raise ValueError(term.post)
    if (cz, cw, m) != (0, 0, 1):
        s = s.substitute(z=(1, 0, cz), w=(0, 1, cw), qpow=m)
    pref = QSeries({(dz, dw, dq): c for (c, dz, dw, dq) in term.pref},
                   None, min((p[3] for p in term.pref), default=0))
    return (s * pref).truncate(N)


def evaluate_sides(spec: EquationSpec, N: int) -> tuple[QSeries, QSeries]:
    lhs = QSeries({}, N, 0, _clean=True)
    rhs = QSeries({}, N, 0, _clean=True)
    for t in spec.terms:
        v = _eval_term(t, N)
        if t.side > 0:
            lhs = lhs + v
        else:
            rhs = rhs + v
    return lhs, rhs


def residual(spec: EquationSpec, N: int):
    """Evaluate the spec; returns (residual series, verdict) where verdict
    is None for a zero residual and the first mismatch otherwise."""
    lhs, rhs = evaluate_sides(spec, N)
    mm = lhs.compare(rhs, N)
    return lhs - rhs, mm


# -- weight helpers -----------------------------------------------------------


def _unit(n: int, a: int) -> tuple[int, ...]:
    if not 0 <= a <= n:
        raise ParamError("weight index a=%d outside 0..%d" % (a, n))
    return tuple(1 if i == a else 0 for i in range(n + 1))


def _wsum(n: int, *pairs: tuple[int, int]) -> tuple[int, ...]:
    """Weight vector from (index, coefficient) pairs; coinciding indices
    accumulate (the n = 1 merging of the middle vertices)."""
    w = [0] * (n + 1)
    for idx, c in pairs:
        if not 0 <= idx <= n:
            raise ParamError("index %d outside 0..%d" % (idx, n))
        w[idx] += c
    if any(v < 0 for v in w):
        raise ParamError("negative weight entry in %r" % (w,))
    return tuple(w)


def _mono(c: int, dz: int = 0, dw: int = 0, dq: int = 0):
    return (c, dz, dw, dq)


def _mprod(*polys):
    """Product of prefactor polynomials given as monomial tuples."""
    acc = {(0, 0, 0): 1}
    for poly in polys:
        new: dict[tuple[int, int, int], int] = {}
        for (c1, z1, w1, d1) in poly:
            for (z2, w2, d2), c2 in acc.items():
                k = (z1 + z2, w1 + w2, d1 + d2)
                new[k] = new.get(k, 0) + c1 * c2
        acc = {k: c for k, c in new.items() if c}
    return tuple((c, z, w, d) for (z, w, d), c in sorted(acc.items()))


# -- check registry -----------------------------------------------------------


@dataclass(frozen=True)
class Check:
    check_id: str
    param_names: tuple[str, ...]
    build: Callable[[dict], EquationSpec]
    doc: str
    defaults: dict = field(default_factory=dict)


CHECKS: dict[str, Check] = {}


def _register(check_id: str, param_names: tuple[str, ...], doc: str,
              defaults: Optional[dict] = None):
    def wrap(fn):
        CHECKS[check_id] = Check(check_id, param_names, fn, doc,
                                 defaults or {})
        return fn
    return wrap


def catalog(check_id: str, params: dict) -> EquationSpec:
    """Build the fully-bound EquationSpec for a catalog entry."""
    if check_id not in CHECKS:
        raise KeyError("unknown check %r (see list-checks)" % (check_id,))
    chk = CHECKS[check_id]
    p = dict(chk.defaults)
    p.update(params)
    missing = [name for name in chk.param_names if name not in p]
    if missing:
        raise ParamError("missing params %s for %s" % (missing, check_id))
    return chk.build(p)


def list_checks() -> list[Check]:
    return [CHECKS[k] for k in sorted(CHECKS)]


def _spec(check_id, p, terms, status):
    return EquationSpec(check_id, tuple(sorted(p.items())), tuple(terms),
                        status)


# -- rank-one and rank-n functional equations (all proved) -------------------


@_register("rogers-selberg", ("k", "a"),
           "A^(1) system: A_{(k-a)L0+aL1}(z) - A_{(k-a+1)L0+(a-1)L1}(z) "
           "= (zq)^a A_{aL0+(k-a)L1}(zq)")
def _rs(p):
    k, a = p["k"], p["a"]
    if not 0 <= a <= k:
        raise ParamError("0 <= a <= k")
    terms = [Term(1, ("gen", "A", 1, (k - a, a)))]
    if a >= 1:
        terms.append(Term(-1, ("gen", "A", 1, (k - a + 1, a - 1))))
    terms.append(Term(-1, ("gen", "A", 1, (a, k - a)),
                      pref=(_mono(1, dz=a, dq=a),), subst=(1, 0, 1)))
    return _spec("rogers-selberg", p, terms, "proved")


@_register("mr-system", ("n", "a", "branch"),
           "level-one system equivalent to the rank-2 cylindric recurrences",
           {"branch": 1})
def _mr(p):
    n, a, br = p["n"], p["a"], p["branch"]
    if br == 1:
        if not 0 <= a <= n // 2:
            raise ParamError("branch 1 needs 0 <= a <= floor(n/2)")
        terms = [Term(1, ("gen", "A", n, _unit(n, a))),
                 Term(-1, ("gen", "A", n, _unit(n, n - a)), subst=(1, 0, 1))]
        for i in range(1, a + 1):
            terms.append(Term(-1, ("gen", "A", n, _unit(n, a - i + 1)),
                              pref=(_mono(1, dz=1, dq=2 * i - 1),),
                              subst=(2 * i, 0, 1)))
            terms.append(Term(-1, ("gen", "A", n, _unit(n, n - a + i)),
                              pref=(_mono(1, dz=1, dq=2 * i),),
                              subst=(2 * i + 1, 0, 1)))
    elif br == 2:
        if not 0 <= a <= (n - 1) // 2:
            raise ParamError("branch 2 needs 0 <= a <= floor((n-1)/2)")
        terms = [Term(1, ("gen", "A", n, _unit(n, n - a))),
                 Term(-1, ("gen", "A", n, _unit(n, a + 1)), subst=(1, 0, 1))]
        for i in range(1, a + 2):
            terms.append(Term(-1, ("gen", "A", n, _unit(n, n - a + i - 1)),
                              pref=(_mono(1, dz=1, dq=2 * i - 1),),
                              subst=(2 * i, 0, 1)))
        for i in range(1, a + 1):
            terms.append(Term(-1, ("gen", "A", n, _unit(n, a - i + 1)),
                              pref=(_mono(1, dz=1, dq=2 * i),),
                              subst=(2 * i + 1, 0, 1)))
    else:
        raise ParamError("branch in {1, 2}")
    return _spec("mr-system", p, terms, "proved")


@_register("a-fun", ("n", "k", "a"),
           "A_{(k-a)L0+aLn}(z) = sum_i (zq)^i A_{iL0+(a-i)L1+(k-a)Ln}(zq)")
def _afun(p):
    n, k, a = p["n"], p["k"], p["a"]
    if not 0 <= a <= k:
        raise ParamError("0 <= a <= k")
    if n < 1:
        raise ParamError("n >= 1")
    terms = [Term(1, ("gen", "A", n, _wsum(n, (0, k - a), (n, a))))]
    for i in range(a + 1):
        w = _wsum(n, (0, i), (1, a - i), (n, k - a))
        terms.append(Term(-1, ("gen", "A", n, w),
                          pref=(_mono(1, dz=i, dq=i),), subst=(1, 0, 1)))
    return _spec("a-fun", p, terms, "proved")


@_register("a-fun2", ("n", "k"),
           "A_{(k-1)L0+L1}(z) = A_{L(n-1)+(k-1)Ln}(zq) + (zq^2)^k "
           "A_{kL0}(zq^2) + zq sum_i (zq^2)^i A_{iL0+(k-i)L1}(zq^2)")
def _afun2(p):
    n, k = p["n"], p["k"]
    if n < 1 or k < 1:
        raise ParamError("n, k >= 1")
    terms = [Term(1, ("gen", "A", n, _wsum(n, (0, k - 1), (1, 1)))),
             Term(-1, ("gen", "A", n, _wsum(n, (n - 1, 1), (n, k - 1))),
                  subst=(1, 0, 1)),
             Term(-1, ("gen", "A", n, _wsum(n, (0, k))),
                  pref=(_mono(1, dz=k, dq=2 * k),), subst=(2, 0, 1))]
    for i in range(k):
        terms.append(Term(-1, ("gen", "A", n, _wsum(n, (0, i), (1, k - i))),
                          pref=(_mono(1, dz=i + 1, dq=2 * i + 1),),
                          subst=(2, 0, 1)))
    return _spec("a-fun2", p, terms, "proved")


@_register("a-fun2-simplified", ("n", "k"),
           "A_{(k-1)L0+L1}(z) = A_{L(n-1)+(k-1)Ln}(zq) + (1-zq)(zq^2)^k "
           "A_{kL0}(zq^2) + zq A_{kLn}(zq)")
def _afun2s(p):
    n, k = p["n"], p["k"]
    if n < 1 or k < 1:
        raise ParamError("n, k >= 1")
    pref = _mprod((_mono(1), _mono(-1, dz=1, dq=1)),
                  (_mono(1, dz=k, dq=2 * k),))
    terms = [Term(1, ("gen", "A", n, _wsum(n, (0, k - 1), (1, 1)))),
             Term(-1, ("gen", "A", n, _wsum(n, (n - 1, 1), (n, k - 1))),
                  subst=(1, 0, 1)),
             Term(-1, ("gen", "A", n, _wsum(n, (0, k))), pref=pref,
                  subst=(2, 0, 1)),
             Term(-1, ("gen", "A", n, _wsum(n, (n, k))),
                  pref=(_mono(1, dz=1, dq=1),), subst=(1, 0, 1))]
    return _spec("a-fun2-simplified", p, terms, "proved")


@_register("cd-fun1", ("n", "k", "a"),
           "C_{aL0+(k-a)Ln}(z) = sum_{i,j} (zq)^{i+j} "
           "D^{(n+1)}_{iL0+(a-i)L1+(k-a-j)Ln+jL(n+1)}(zq)")
def _cdfun1(p):
    n, k, a = p["n"], p["k"], p["a"]
    if n < 1:
        raise ParamError("n >= 1")
    if not 0 <= a <= k:
        raise ParamError("0 <= a <= k")
    terms = [Term(1, ("gen", "C", n, _wsum(n, (0, a), (n, k - a))))]
    for i in range(a + 1):
        for j in range(k - a + 1):
            w = _wsum(n + 1, (0, i), (1, a - i), (n, k - a - j), (n + 1, j))
            terms.append(Term(-1, ("gen", "D", n + 1, w),
                              pref=(_mono(1, dz=i + j, dq=i + j),),
                              subst=(1, 0, 1)))
    return _spec("cd-fun1", p, terms, "proved")


@_register("cd-fun2", ("n", "k", "a"),
           "D^{(n+1)}_{aL0+(k-a)L(n+1)}(z) = C^{(n)}_{aL0+(k-a)Ln}(zq)")
def _cdfun2(p):
    n, k, a = p["n"], p["k"], p["a"]
    if n < 0:
        raise ParamError("n >= 0")
    if not 0 <= a <= k:
        raise ParamError("0 <= a <= k")
    terms = [Term(1, ("gen", "D", n + 1, _wsum(n + 1, (0, a), (n + 1, k - a)))),
             Term(-1, ("gen", "C", n, _wsum(n, (0, a), (n, k - a))),
                  subst=(1, 0, 1))]
    return _spec("cd-fun2", p, terms, "proved")


@_register("cdn2", ("k", "a"),
           "D^{(2)}_{aL0+(k-a)L2}(z) = C^{(1)}_{aL0+(k-a)L1}(zq) "
           "(the z/q form cleared by shifting the C side)")
def _cdn2(p):
    k, a = p["k"], p["a"]
    if not 0 <= a <= k:
        raise ParamError("0 <= a <= k")
    terms = [Term(1, ("gen", "D", 2, _wsum(2, (0, a), (2, k - a)))),
             Term(-1, ("gen", "C", 1, _wsum(1, (0, a), (1, k - a))),
                  subst=(1, 0, 1))]
    return _spec("cdn2", p, terms, "proved")


@_register("d2-nis2", ("k", "a", "b"),
           "the rank-2 difference equation with (zq)^{k+i-a+min(0,j-b)}")
def _d2nis2(p):
    k, a, b = p["k"], p["a"], p["b"]
    if a < 0 or b < 0 or a + b > k - 1:
        raise ParamError("a, b >= 0 with a + b <= k - 1")
    c = k - a - b
    terms = [Term(1, ("gen", "D", 2, (a, c, b))),
             Term(-1, ("gen", "D", 2, (a + 1, c - 1, b)))]
    for i in range(a + 1):
        for j in range(k - a + 1):
            e = k + i - a + min(0, j - b)
            terms.append(Term(-1, ("gen", "D", 2, (i, k - i - j, j)),
                              pref=(_mono(1, dz=e, dq=e + i + j),),
                              subst=(2, 0, 1)))
    return _spec("d2-nis2", p, terms, "proved")


@_register("d2-fun", ("k", "a"),
           "D^{(2)}_{aL0+(k-a)L2}(z) = sum_{i,j} (zq^2)^{i+j} "
           "D^{(2)}_{iL0+(k-i-j)L1+jL2}(zq^2)")
def _d2fun(p):
    k, a = p["k"], p["a"]
    if not 0 <= a <= k:
        raise ParamError("0 <= a <= k")
    terms = [Term(1, ("gen", "D", 2, _wsum(2, (0, a), (2, k - a))))]
    for i in range(a + 1):
        for j in range(k - a + 1):
            terms.append(Term(-1, ("gen", "D", 2, (i, k - i - j, j)),
                              pref=(_mono(1, dz=i + j, dq=2 * (i + j)),),
                              subst=(2, 0, 1)))
    return _spec("d2-fun", p, terms, "proved")


@_register("d2-nis2-diff", ("k", "a", "b"),
           "the a<->b symmetric combination of two difference equations")
def _d2nis2diff(p):
    k, a, b = p["k"], p["a"], p["b"]
    if a < 0 or b < 0 or a + b > k - 2:
        raise ParamError("a, b >= 0 with a + b <= k - 2")
    terms = []
    for i in (0, 1):
        for j in (0, 1):
            sgn = 1 if (i + j) % 2 == 0 else -1
            side = 1 if sgn > 0 else -1
            terms.append(Term(side,
                              ("gen", "D", 2,
                               (i + a, k - i - j - a - b, j + b))))
    c = k - a - b
    for i in range(a + 1):
        for j in range(b + 1):
            pref = _mprod(
                (_mono(-1),),
                (_mono(1), _mono(-1, dz=1, dq=1)),
                (_mono(1, dz=c - 1, dq=c - 1),),
                (_mono(1, dz=i + j, dq=2 * (i + j)),))
            terms.append(Term(-1, ("gen", "D", 2, (i, k - i - j, j)),
                              pref=pref, subst=(2, 0, 1)))
    return _spec("d2-nis2-diff", p, terms, "proved")


@_register("d2-combo", ("k", "a"),
           "D^{(2)}_{aL0+L1+(k-a-1)L2}(z) expanded at argument zq^2")
def _d2combo(p):
    k, a = p["k"], p["a"]
    if not 0 <= a <= k - 1:
        raise ParamError("0 <= a <= k - 1")
    terms = [Term(1, ("gen", "D", 2, (a, 1, k - a - 1)))]
    for i in range(a + 1):
        for j in range(k - a):
            pref = _mprod((_mono(1), _mono(1, dz=1, dq=1)),
                          (_mono(1, dz=i + j, dq=2 * (i + j)),))
            terms.append(Term(-1, ("gen", "D", 2, (i, k - i - j, j)),
                              pref=pref, subst=(2, 0, 1)))
    for i in range(a + 1):
        e = k + i - a
        terms.append(Term(-1, ("gen", "D", 2, (i, a - i, k - a)),
                          pref=(_mono(1, dz=e, dq=2 * e),), subst=(2, 0, 1)))
    for i in range(k - a):
        e = i + a + 1
        terms.append(Term(-1, ("gen", "D", 2, (a + 1, k - a - i - 1, i)),
                          pref=(_mono(1, dz=e, dq=2 * e),), subst=(2, 0, 1)))
    return _spec("d2-combo", p, terms, "proved")


@_register("automorphism", ("family", "n"),
           "weight-reversal symmetry of the C and D families",
           {"weights": None})
def _auto(p):
    fam, n = p["family"], p["n"]
    if fam not in ("C", "D"):
        raise ParamError("family C or D")
    w = _weights_param(p, n)
    terms = [Term(1, ("gen", fam, n, w)),
             Term(-1, ("gen", fam, n, tuple(reversed(w))))]
    return _spec("automorphism", p, terms, "proved")


@_register("b-b", ("k0", "k1"),
           "two-variable identity of the rank-1 family with the bounded-"
           "frequency partitions f_i + f_{i+1} <= k0+k1, f_1 <= k1")
def _bb(p):
    k0, k1 = p["k0"], p["k1"]
    terms = [Term(1, ("gen", "A", 1, (k0, k1))),
             Term(-1, ("gordon_b", k0 + k1, k1))]
    return _spec("b-b", p, terms, "proved")


# -- level-one product theorems ----------------------------------------------


@_register("gordon", ("k", "a"),
           "Gordon: gen_fun(A,1,(k-a,a)) at z=1 equals the modulus-(2k+3) "
           "triple-product quotient")
def _gordon(p):
    k, a = p["k"], p["a"]
    if not 0 <= a <= k:
        raise ParamError("0 <= a <= k")
    terms = [Term(1, ("gen", "A", 1, (k - a, a)), post="z1"),
             Term(-1, ("prodspec", products.gordon_product(k, a)))]
    return _spec("gordon", p, terms, "proved")


@_register("andrews-gordon", ("k", "a"),
           "the Andrews-Gordon multisum at z=1 equals the Gordon product")
def _ag2(p):
    k, a = p["k"], p["a"]
    if not 0 <= a <= k:
        raise ParamError("0 <= a <= k")
    terms = [Term(1, ("ag", k, a), post="z1"),
             Term(-1, ("prodspec", products.gordon_product(k, a)))]
    return _spec("andrews-gordon", p, terms, "proved")


@_register("ag-two-var", ("k", "a"),
           "the two-variable Andrews-Gordon multisum equals the bounded-"
           "frequency generating function")
def _agtv(p):
    k, a = p["k"], p["a"]
    if not 0 <= a <= k:
        raise ParamError("0 <= a <= k")
    terms = [Term(1, ("ag", k, a)), Term(-1, ("gordon_b", k, a))]
    return _spec("ag-two-var", p, terms, "proved")


@_register("gordon-fsum", ("k", "a"),
           "gen_fun(A,1,(k-a,a)) at z=1 equals the F-multisum at z=1")
def _gfsum(p):
    k, a = p["k"], p["a"]
    if not 0 <= a <= k:
        raise ParamError("0 <= a <= k")
    terms = [Term(1, ("gen", "A", 1, (k - a, a)), post="z1"),
             Term(-1, ("fsum", k, a, 1), post="z1")]
    return _spec("gordon-fsum", p, terms, "proved")


@_register("jms", ("n", "a"),
           "level-one A-family counts equal the modulus-(2n+3) product")
def _jms(p):
    n, a = p["n"], p["a"]
    terms = [Term(1, ("gen", "A", n, _unit(n, a)), post="z1"),
             Term(-1, ("prodspec", products.jms_product(n, a)))]
    return _spec("jms", p, terms, "proved")


@_register("a-f", ("n", "a"),
           "two-variable bridge to F^{(n)}_{2a,1} / F^{(n)}_{2n-2a+1,1}")
def _af(p):
    n, a = p["n"], p["a"]
    aa = 2 * a if a <= n // 2 else 2 * n - 2 * a + 1
    terms = [Term(1, ("gen", "A", n, _unit(n, a))),
             Term(-1, ("fsum", n, aa, 1))]
    return _spec("a-f", p, terms, "proved")


@_register("c-f", ("n", "a"),
           "two-variable bridge to F^{(n+1)}_{2a+1,0} / F^{(n+1)}_{2n-2a+1,0}")
def _cf(p):
    n, a = p["n"], p["a"]
    aa = 2 * a + 1 if a <= n // 2 else 2 * n - 2 * a + 1
    terms = [Term(1, ("gen", "C", n, _unit(n, a))),
             Term(-1, ("fsum", n + 1, aa, 0))]
    return _spec("c-f", p, terms, "proved")


@_register("d-f", ("n", "a"),
           "two-variable bridge to F^{(n)}_{2a,0} / F^{(n)}_{2n-2a,0}")
def _df(p):
    n, a = p["n"], p["a"]
    aa = 2 * a if a <= n // 2 else 2 * n - 2 * a
    terms = [Term(1, ("gen", "D", n, _unit(n, a))),
             Term(-1, ("fsum", n, aa, 0))]
    return _spec("d-f", p, terms, "proved")


@_register("dk1", ("n", "a"),
           "level-one D-family counts equal the modulus-(2n+2) product")
def _dk1(p):
    n, a = p["n"], p["a"]
    terms = [Term(1, ("gen", "D", n, _unit(n, a)), post="z1"),
             Term(-1, ("prodspec", products.d_level1_product(n, a)))]
    return _spec("dk1", p, terms, "proved")


@_register("c-level1", ("n", "a"),
           "level-one C-family counts equal the modulus-(2n+4) product")
def _cl1(p):
    n, a = p["n"], p["a"]
    terms = [Term(1, ("gen", "C", n, _unit(n, a)), post="z1"),
             Term(-1, ("prodspec", products.c_level1_product(n, a)))]
    return _spec("c-level1", p, terms, "proved")


@_register("c-n0-closed", ("k",),
           "one-row odd-part family equals its bounded-multiplicity "
           "two-variable product")
def _cn0(p):
    k = p["k"]
    terms = [Term(1, ("gen", "C", 0, (k,))), Term(-1, ("c_n0_2var", k))]
    return _spec("c-n0-closed", p, terms, "proved")


# -- level-rank duality (products) --------------------------------------------


@_register("level-rank-n1", ("k", "i"),
           "rank-1 level-k products match rank-k level-1 products")
def _lr1(p):
    k, i = p["k"], p["i"]
    if not (k >= 1 and 0 <= i <= k):
        raise ParamError("k >= 1, 0 <= i <= k")
    pos = i // 2 if i % 2 == 0 else k - (i - 1) // 2
    terms = [Term(1, ("charprod", "A", "nonstandard", 1, (k - i, i))),
             Term(-1, ("charprod", "A", "nonstandard", k, _unit(k, pos)))]
    return _spec("level-rank-n1", p, terms, "proved")


@_register("level-rank-n2", ("k", "i", "j"),
           "rank-2 level-k products match rank-k level-2 products")
def _lr2(p):
    k, i, j = p["k"], p["i"], p["j"]
    if not (k >= 1 and 0 <= i <= j <= k):
        raise ParamError("k >= 1, 0 <= i <= j <= k")
    if (i + j) % 2 == 0:
        w = _wsum(k, ((j - i) // 2, 1), ((i + j) // 2, 1))
    else:
        w = _wsum(k, (k - (i + j - 1) // 2, 1), (k - (j - i - 1) // 2, 1))
    terms = [Term(1, ("charprod", "A", "nonstandard", 2, (k - j, j - i, i))),
             Term(-1, ("charprod", "A", "nonstandard", k, w))]
    return _spec("level-rank-n2", p, terms, "proved")


def _lr_weight2(r: int, m: int) -> tuple[int, ...]:
    # (m-2)L0 + 2L1 in rank r, reading -L0 + 2L1 as L1
    if m >= 2:
        return _wsum(r, (0, m - 2), (1, 2))
    if m == 1:
        return _unit(r, 1)
    raise ParamError("m >= 1")


def _lr_weight3(r: int, m: int) -> tuple[int, ...]:
    if m >= 3:
        return _wsum(r, (0, m - 3), (1, 2), (2, 1))
    if m == 2:
        return _wsum(r, (1, 1), (2, 1))
    raise ParamError("m >= 2")


@_register("level-rank-gen1", ("k", "n"),
           "phi_n of the level-2k vacuum weight matches phi_k of the "
           "level-2n vacuum weight")
def _lrg1(p):
    k, n = p["k"], p["n"]
    if k < 1 or n < 1:
        raise ParamError("k, n >= 1")
    terms = [Term(1, ("charprod", "A", "nonstandard", n, _wsum(n, (0, k)))),
             Term(-1, ("charprod", "A", "nonstandard", k, _wsum(k, (0, n))))]
    return _spec("level-rank-gen1", p, terms, "proved")


@_register("level-rank-gen2", ("k", "n"),
           "the (k-2)L0+2L1 duality pattern")
def _lrg2(p):
    k, n = p["k"], p["n"]
    if k < 1 or n < 1:
        raise ParamError("k, n >= 1")
    terms = [Term(1, ("charprod", "A", "nonstandard", n, _lr_weight2(n, k))),
             Term(-1, ("charprod", "A", "nonstandard", k, _lr_weight2(k, n)))]
    return _spec("level-rank-gen2", p, terms, "proved")


@_register("level-rank-gen3", ("k", "n"),
           "the (k-3)L0+2L1+L2 duality pattern")
def _lrg3(p):
    k, n = p["k"], p["n"]
    if k < 2 or n < 2:
        raise ParamError("k, n >= 2")
    terms = [Term(1, ("charprod", "A", "nonstandard", n, _lr_weight3(n, k))),
             Term(-1, ("charprod", "A", "nonstandard", k, _lr_weight3(k, n)))]
    return _spec("level-rank-gen3", p, terms, "proved")


# -- the three coloured-partition conjectures ---------------------------------


def _weights_param(p, n):
    w = p.get("weights")
    if w is None:
        raise ParamError("weights required")
    w = tuple(w)
    if len(w) != n + 1 or any(v < 0 for v in w):
        raise ParamError("weights must be n+1 non-negative entries")
    return w


@_register("a-product-positivity", ("n",),
           "the A-family character products should have non-negative "
           "coefficients (they count coloured partitions); a negative "
           "coefficient is a finding", {"weights": None})
def _apos(p):
    n = p["n"]
    w = _weights_param(p, n)
    terms = [Term(1, ("charprod-negpart", "A", "nonstandard", n, w)),
             Term(-1, ("zero",))]
    return _spec("a-product-positivity", p, terms, "conjectural")


@_register("con-a2n2", ("n",), "counts of the A-family equal the "
           "non-standard character product", {"weights": None})
def _cona(p):
    n = p["n"]
    w = _weights_param(p, n)
    status = "proved" if (n == 1 or sum(w) <= 1) else "conjectural"
    terms = [Term(1, ("gen", "A", n, w), post="z1"),
             Term(-1, ("charprod", "A", "nonstandard", n, w))]
    return _spec("con-a2n2", p, terms, status)


@_register("con-cn1", ("n",), "counts of the C-family equal the principally "
           "specialised character product", {"weights": None})
def _conc(p):
    n = p["n"]
    w = _weights_param(p, n)
    k = sum(w)
    vac = w[0] == k or w[-1] == k
    status = "proved" if (n <= 1 or k <= 1 or vac) else "conjectural"
    if n == 0:
        terms = [Term(1, ("gen", "C", 0, w), post="z1"),
                 Term(-1, ("prodspec", products.ProductSpec(
                     (), (products.PochFactor(k + 1, 2 * k + 2, 1),
                          products.PochFactor(1, 2, -1)))))]
    else:
        terms = [Term(1, ("gen", "C", n, w), post="z1"),
                 Term(-1, ("charprod", "C", "nonstandard", n, w))]
    return _spec("con-cn1", p, terms, status)


@_register("con-dn2", ("n",), "counts of the D-family equal the "
           "non-standard character product", {"weights": None})
def _cond(p):
    n = p["n"]
    w = _weights_param(p, n)
    status = "proved" if (n == 1 or sum(w) <= 1) else "conjectural"
    terms = [Term(1, ("gen", "D", n, w), post="z1"),
             Term(-1, ("charprod", "D", "nonstandard", n, w))]
    return _spec("con-dn2", p, terms, status)


# -- Hall-Littlewood bridges ---------------------------------------------------


@_register("con-a2n2-qseries", ("n", "k", "which"),
           "two-variable A-family extremal weights as chain multisums; "
           "which=0 is the kLn weight (argument z), which=1 the kL0 "
           "weight (argument zq)")
def _conaq(p):
    n, k, which = p["n"], p["k"], p["which"]
    if n < 1 or k < 0 or which not in (0, 1):
        raise ParamError("n >= 1, k >= 0, which in {0,1}")
    status = "proved" if (k <= 1 or n == 1) else "conjectural"
    if which == 0:
        terms = [Term(1, ("gen", "A", n, _wsum(n, (n, k)))),
                 Term(-1, ("hlchain", k, 2 * n - 1))]
    else:
        terms = [Term(1, ("gen", "A", n, _wsum(n, (0, k)))),
                 Term(-1, ("hlchain", k, 2 * n - 1), subst=(1, 0, 1))]
    return _spec("con-a2n2-qseries", p, terms, status)


@_register("con-c-qseries", ("n", "k"),
           "C_{kL0}(z,q) = HL_{k,2n}(z,q)")
def _concq(p):
    n, k = p["n"], p["k"]
    if n < 1 or k < 0:
        raise ParamError("n >= 1, k >= 0")
    status = "proved" if k <= 1 else "conjectural"
    terms = [Term(1, ("gen", "C", n, _wsum(n, (0, k)))),
             Term(-1, ("hlchain", k, 2 * n))]
    return _spec("con-c-qseries", p, terms, status)


@_register("con-d-qseries", ("n", "k"),
           "D_{kL0}(z,q) = HL_{k,2n-2}(zq,q), n >= 2")
def _condq(p):
    n, k = p["n"], p["k"]
    if n < 2 or k < 0:
        raise ParamError("n >= 2, k >= 0")
    status = "proved" if k <= 1 else "conjectural"
    terms = [Term(1, ("gen", "D", n, _wsum(n, (0, k)))),
             Term(-1, ("hlchain", k, 2 * n - 2), subst=(1, 0, 1))]
    return _spec("con-d-qseries", p, terms, status)


@_register("con-shun", ("k",),
           "the double multisum equals sum (zq)^{|lam|} P_{2 lam}(...;q^2)")
def _conshun(p):
    k = p["k"]
    status = "proved" if k <= 1 else "conjectural"
    terms = [Term(1, ("shun", k)), Term(-1, ("hlsum", k, 2, 1))]
    return _spec("con-shun", p, terms, status)


@_register("con-shun2", ("k", "variant"),
           "the three rank-2 double multisums against enumeration; "
           "variant in {kL0, kL1, omega}", {"variant": "kL0"})
def _conshun2(p):
    k, variant = p["k"], p["variant"]
    if variant not in ("kL0", "kL1", "omega"):
        raise ParamError("variant in {kL0, kL1, omega}")
    if variant == "omega" and k < 1:
        raise ParamError("omega needs k >= 1")
    w = {"kL0": (k, 0, 0), "kL1": (0, k, 0),
         "omega": (1, k - 1, 0)}[variant]
    status = "proved" if k <= 2 else "conjectural"
    terms = [Term(1, ("shun2", k, variant)), Term(-1, ("gen", "D", 2, w))]
    return _spec("con-shun2", p, terms, status)


@_register("ag-type-product", ("k", "which"),
           "the four conjectural Andrews-Gordon-type product identities; "
           "which in {c-kL0, d-kL0, d-kL1, d-omega}", {"which": "c-kL0"})
def _agtype(p):
    k, which = p["k"], p["which"]
    if which not in ("c-kL0", "d-kL0", "d-kL1", "d-omega"):
        raise ParamError("which in {c-kL0, d-kL0, d-kL1, d-omega}")
    if which in ("c-kL0",):
        lhs = Term(1, ("shun", k), post="z1")
    else:
        variant = {"d-kL0": "kL0", "d-kL1": "kL1", "d-omega": "omega"}[which]
        if variant == "omega" and k < 1:
            raise ParamError("omega needs k >= 1")
        lhs = Term(1, ("shun2", k, variant), post="z1")
    status = "proved" if k <= 1 else "conjectural"
    terms = [lhs, Term(-1, ("prodspec", products.ag_type_product(which, k)))]
    return _spec("ag-type-product", p, terms, status)


# -- Theorem 4.8 machinery -----------------------------------------------------


_WZ_WEIGHT = {"A": (2, 0, 0), "B": (0, 2, 0), "C": (1, 1, 0), "D": (1, 0, 1)}


@_register("thm48", ("which",),
           "the four deformed double sums at w=z equal the rank-2 "
           "enumerations at level 2", {"which": "A"})
def _thm48(p):
    which = p["which"]
    if which not in _WZ_WEIGHT:
        raise ParamError("which in {A,B,C,D}")
    terms = [Term(1, ("wz", which), post="w_to_z"),
             Term(-1, ("gen", "D", 2, _WZ_WEIGHT[which]))]
    return _spec("thm48", p, terms, "proved")


@_register("thm48-alt", ("which",),
           "the two single-Omega rewritings of the mixed level-2 series",
           {"which": "C"})
def _thm48alt(p):
    which = p["which"]
    if which == "C":
        terms = [Term(1, ("shun2", 2, "omega")),
                 Term(-1, ("wz", "C"), post="w_to_z")]
    elif which == "D":
        terms = [Term(1, ("shun2", 2, "omega_r1")),
                 Term(-1, ("wz", "D"), post="w_to_z")]
    else:
        raise ParamError("which in {C, D}")
    return _spec("thm48-alt", p, terms, "proved")


@_register("wz-funceq", ("idx",),
           "the four deformed functional equations (idx 3 cleared by z)",
           {"idx": 1})
def _wzf(p):
    idx = p["idx"]
    sub = (2, 2, 1)
    if idx == 1:
        terms = [Term(1, ("wz", "A")),
                 Term(-1, ("wz", "B"), subst=sub),
                 Term(-1, ("wz", "C"), pref=(_mono(1, dz=1, dq=2),),
                      subst=sub),
                 Term(-1, ("wz", "A"), pref=(_mono(1, dz=2, dq=4),),
                      subst=sub)]
    elif idx == 2:
        terms = [Term(1, ("wz", "D")), Term(-1, ("wz", "A")),
                 Term(-1, ("wz", "C"), pref=(_mono(1, dw=1, dq=2),),
                      subst=sub),
                 Term(-1, ("wz", "D"), pref=(_mono(1, dz=2, dq=4),),
                      subst=sub),
                 Term(1, ("wz", "A"), pref=(_mono(1, dz=2, dq=4),),
                      subst=sub)]
    elif idx == 3:
        terms = [Term(1, ("wz", "B"), pref=(_mono(1, dz=1),)),
                 Term(-1, ("wz", "C"), pref=(_mono(1, dz=1), _mono(1, dw=1))),
                 Term(1, ("wz", "D"), pref=(_mono(1, dw=1),)),
                 Term(1, ("wz", "B"),
                      pref=(_mono(1, dz=1, dw=1, dq=1),
                            _mono(-1, dz=3, dq=2)), subst=sub)]
    elif idx == 4:
        terms = [Term(1, ("wz", "C")), Term(-1, ("wz", "D")),
                 Term(-1, ("wz", "B"), pref=(_mono(1, dz=1, dq=1),),
                      subst=sub),
                 Term(-1, ("wz", "C"), pref=(_mono(1, dz=2, dq=3),),
                      subst=sub),
                 Term(-1, ("wz", "A"), pref=(_mono(1, dz=1, dw=1, dq=4),),
                      subst=sub)]
    else:
        raise ParamError("idx in 1..4")
    return _spec("wz-funceq", p, terms, "proved")


@_register("wz-edge", ("which", "edge"),
           "boundary reductions of the deformed series: w=0 gives the "
           "rank-1 series in (z,q), z=0 the same in (w,q^2)",
           {"which": "B", "edge": "w0"})
def _wzedge(p):
    which, edge = p["which"], p["edge"]
    targets_w0 = {"A": (2, 0), "B": (0, 2), "C": (1, 1), "D": (2, 0)}
    if which not in targets_w0:
        raise ParamError("which in {A,B,C,D}")
    k0, k1 = targets_w0[which]
    if edge == "w0":
        inner = ("gen", "A", 1, (k0, k1))
        terms = [Term(1, ("wz", which), post="w0"), Term(-1, inner)]
    elif edge == "z0":
        targets_z0 = {"A": (2, 0), "B": (0, 2), "C": (1, 1), "D": (1, 1)}
        k0, k1 = targets_z0[which]
        # gen_fun in (w, q^2)
        terms = [Term(1, ("wz", which), post="z0"),
                 Term(-1, ("genw2", "A", 1, (k0, k1)))]
    else:
        raise ParamError("edge in {w0, z0}")
    return _spec("wz-edge", p, terms, "proved")


@_register("atomic", ("i", "k1", "k2", "l1", "l2"),
           "the four atomic shift relations of the S-series")
def _atomic(p):
    i = p["i"]
    if i not in (1, 2, 3, 4):
        raise ParamError("i in 1..4")
    params = (p["k1"], p["k2"], p["l1"], p["l2"])
    terms = [Term(1, ("atomicres", "R%d" % i, params)),
             Term(-1, ("zero",))]
    return _spec("atomic", p, terms, "proved")


@_register("toshow", ("i",),
           "the four S-series combinations appearing in the level-2 proof")
def _toshow(p):
    i = p["i"]
    if i not in (1, 2, 3, 4):
        raise ParamError("i in 1..4")
    terms = [Term(1, ("atomicres", "toshow%d" % i, (0, 0, 0, 0))),
             Term(-1, ("zero",))]
    return _spec("toshow", p, terms, "proved")


@_register("s-shift", ("k1", "k2", "l1", "l2", "m", "n"),
           "S(z q^m, w q^{2n}) = S_{k1+m, k2+2m, l1+n, l2+2n}(z, w)",
           {"m": 1, "n": 1})
def _sshift(p):
    k1, k2, l1, l2, m, n = (p["k1"], p["k2"], p["l1"], p["l2"], p["m"],
                            p["n"])
    if m < 0 or n < 0:
        raise ParamError("m, n >= 0 (raising shifts only)")
    terms = [Term(1, ("sser", k1, k2, l1, l2), subst=(m, 2 * n, 1)),
             Term(-1, ("sser", k1 + m, k2 + 2 * m, l1 + n, l2 + 2 * n))]
    return _spec("s-shift", p, terms, "proved")


@_register("guess-reduction", ("k", "which", "edge"),
           "w=0 / z=0 reductions of the conjectured k-fold interwoven sums",
           {"which": "B", "edge": "w0"})
def _guessred(p):
    k, which, edge = p["k"], p["which"], p["edge"]
    if k < 1:
        raise ParamError("k >= 1")
    if which == "B":
        base = Term(1, ("wz", "guess_B", k),
                    post="w0" if edge == "w0" else "z0")
        a = k
    elif which == "kL0":
        # the kL0 guess is the kL1 guess at (zq, wq^2)
        base = Term(1, ("wz", "guess_B", k), subst=(1, 2, 1),
                    post="w0" if edge == "w0" else "z0")
        a = 0
    elif which == "omega":
        base = Term(1, ("wz", "guess_omega", k),
                    post="w0" if edge == "w0" else "z0")
        a = k - 1
    else:
        raise ParamError("which in {B, kL0, omega}")
    if edge == "w0":
        rhs = Term(-1, ("ag", k, a))
    elif edge == "z0":
        rhs = Term(-1, ("agw_as_w", k, a))
    else:
        raise ParamError("edge in {w0, z0}")
    return _spec("guess-reduction", p, [base, rhs], "proved")


# -- section-5 weighted variants ----------------------------------------------


@_register("hl-variant1", ("n",),
           "the first weighted chain sum against the level-one series")
def _hlv1(p):
    n = p["n"]
    if n < 1:
        raise ParamError("n >= 1")
    status = "proved" if n <= 2 else "conjectural"
    if n % 2 == 1:
        rhs = Term(-1, ("gen", "A", (n + 1) // 2, _unit((n + 1) // 2, 1)))
    else:
        rhs = Term(-1, ("gen", "D", n // 2 + 1, _unit(n // 2 + 1, 1)))
    terms = [Term(1, ("hlweighted", "v1", n)), rhs]
    return _spec("hl-variant1", p, terms, status)


@_register("hl-variant2", ("k",),
           "the second weighted chain sum against D^{(2)}_{(k-1)L0+L1}")
def _hlv2(p):
    k = p["k"]
    if k < 1:
        raise ParamError("k >= 1")
    status = "proved" if k == 1 else "conjectural"
    terms = [Term(1, ("hlweighted", "v2", k)),
             Term(-1, ("gen", "D", 2, (k - 1, 1, 0)))]
    return _spec("hl-variant2", p, terms, status)


@_register("hl-chain-def", ("k", "n"),
           "the chain multisum equals the bounded Hall-Littlewood sum")
def _hlcd(p):
    k, n = p["k"], p["n"]
    if n < 1 or k < 0:
        raise ParamError("k >= 0, n >= 1")
    terms = [Term(1, ("hlchain", k, n)), Term(-1, ("hlsum", k, n, 1))]
    return _spec("hl-chain-def", p, terms, "proved")


@_register("hl-chain-ag", ("k",),
           "HL_{k,1}(z,q) is the Andrews-Gordon multisum at a=k")
def _hlca(p):
    k = p["k"]
    terms = [Term(1, ("hlchain", k, 1)), Term(-1, ("ag", k, k))]
    return _spec("hl-chain-ag", p, terms, "proved")


@_register("gow", ("r", "n", "delta"),
           "the multisum for P_{(2^r)}(1,q,...;q^{2n+delta}) equals the "
           "branching evaluation")
def _gow(p):
    r, n, delta = p["r"], p["n"], p["delta"]
    if 2 * n + delta < 1:
        raise ParamError("2n + delta >= 1")
    terms = [Term(1, ("gow", r, n, delta)),
             Term(-1, ("hlinf", tuple([2] * r), 2 * n + delta))]
    return _spec("gow", p, terms, "proved")


@_register("hl-triangle", ("r", "s", "L", "m", "route"),
           "pairwise equality of the three finite-variable routes on "
           "shapes (2^r,1^s); route 0: symmetrization vs single sum, "
           "route 1: closed form vs symmetrization at the principal point",
           {"route": 0})
def _hltri(p):
    r, s, L, m, route = p["r"], p["s"], p["L"], p["m"], p["route"]
    shape = tuple([2] * r + [1] * s)
    if route == 0:
        terms = [Term(1, ("hlsym", shape, L, m, 1)),
                 Term(-1, ("hlls", r, s, L, m))]
    elif route == 1:
        terms = [Term(1, ("hlpf", shape, L, m)),
                 Term(-1, ("hlsym", shape, L, m, m))]
    else:
        raise ParamError("route in {0, 1}")
    return _spec("hl-triangle", p, terms, "proved")


@_register("bailey", ("s", "m", "r_max"),
           "the alpha-to-beta Bailey transform against the Hall-Littlewood "
           "beta, r tagged by the z-exponent", {"r_max": 4})
def _bailey(p):
    s, m, r_max = p["s"], p["m"], p["r_max"]
    if r_max > 6:
        raise ParamError("r_max <= 6")
    terms = [Term(1, ("baileyl", s, m, r_max)),
             Term(-1, ("baileyr", s, m, r_max))]
    return _spec("bailey", p, terms, "proved")


@_register("jtp", ("a", "m"),
           "Jacobi triple product: theta(q^a;q^m)(q^m;q^m)_inf equals the "
           "bilateral alternating sum")
def _jtp(p):
    a, m = p["a"], p["m"]
    terms = [Term(1, ("jtp_prod", a, m)), Term(-1, ("jtp_sum", a, m))]
    return _spec("jtp", p, terms, "proved")


# -- appendix checks -----------------------------------------------------------


def _exps_from(p) -> tuple[int, ...]:
    exps = []
    for name in ("e1", "e2", "e3", "e4"):
        if p.get(name) is not None:
            exps.append(p[name])
    if not exps:
        raise ParamError("at least e1 required")
    return tuple(exps)


@_register("macdonald-b", ("base", "sigma"),
           "the type-B determinant sum equals 2 Pi_{B;sigma}",
           {"sigma": 1, "e1": None, "e2": None, "e3": None, "e4": None})
def _macb(p):
    exps = _exps_from(p)
    base, sigma = p["base"], p["sigma"]
    terms = [Term(1, ("macsum", "B", exps, base, sigma, 1)),
             Term(-1, ("pi", "B", exps, base, sigma, 1),
                  pref=(_mono(2),))]
    return _spec("macdonald-b", p, terms, "proved")


@_register("macdonald-d", ("base", "sigma", "tau"),
           "the type-D determinant sum equals 4 Pi_{D;sigma,tau}",
           {"sigma": 1, "tau": 1, "e1": None, "e2": None, "e3": None,
            "e4": None})
def _macd(p):
    exps = _exps_from(p)
    if len(exps) < 2:
        raise ParamError("type D needs n >= 2")
    base, sigma, tau = p["base"], p["sigma"], p["tau"]
    terms = [Term(1, ("macsum", "D", exps, base, sigma, tau)),
             Term(-1, ("pi", "D", exps, base, sigma, tau),
                  pref=(_mono(4),))]
    return _spec("macdonald-d", p, terms, "proved")


@_register("mac-quasiperiod", ("kind", "base", "sigma", "tau"),
           "shifting e1 by the base changes both sides by the same signed "
           "monomial (checked by cross-multiplication)",
           {"sigma": 1, "tau": 1, "e1": None, "e2": None, "e3": None,
            "e4": None})
def _macqp(p):
    exps = _exps_from(p)
    kind, base, sigma, tau = p["kind"], p["base"], p["sigma"], p["tau"]
    shifted = (exps[0] + base,) + exps[1:]
    terms = [Term(1, ("mac_cross", kind, exps, shifted, base, sigma, tau)),
             Term(-1, ("mac_cross", kind, shifted, exps, base, sigma, tau))]
    return _spec("mac-quasiperiod", p, terms, "proved")


@_register("spec-char", ("family", "n", "two_k"),
           "the specialised character determinant sum equals the product "
           "(integral data) or vanishes (half-integral data)",
           {"two_lambda": ()})
def _specchar(p):
    fam, n, two_k = p["family"], p["n"], p["two_k"]
    tl = tuple(p["two_lambda"])
    hw = macdonald.HalfWeight(two_k, tl)
    terms = [Term(1, ("speccharsum", fam, n, two_k, tl))]
    if hw.k_integral and hw.lambda_integral:
        w = hw.weight()
        terms.append(Term(-1, ("charprod", fam, "nonstandard", n, w)))
    else:
        terms.append(Term(-1, ("zero",)))
    return _spec("spec-char", p, terms, "proved")


@_register("d2-unique", ("k",),
           "the rank-2 functional system plus D(0)=1 determines all "
           "level-k generating functions (fixed point vs enumeration)")
def _d2u(p):
    k = p["k"]
    if k < 1:
        raise ParamError("k >= 1")
    terms = [Term(1, ("d2solved", k)), Term(-1, ("d2enum", k))]
    return _spec("d2-unique", p, terms, "proved")
