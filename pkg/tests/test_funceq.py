import pytest

from cmpplab.cmpp import gen_fun
from cmpplab.d2solver import solve_d2_system
from cmpplab.funceq import ParamError, catalog, list_checks, residual


def check(cid, N=12, **params):
    spec = catalog(cid, params)
    _, mm = residual(spec, N)
    assert mm is None, (cid, params, mm)
    return spec


def test_unknown_check():
    with pytest.raises(KeyError):
        catalog("no-such-check", {})


def test_param_validation():
    with pytest.raises(ParamError):
        catalog("rogers-selberg", {"k": 1, "a": 2})
    with pytest.raises(ParamError):
        catalog("d2-nis2", {"k": 1, "a": 1, "b": 1})
    with pytest.raises(ParamError):
        catalog("mr-system", {"n": 2, "a": 2, "branch": 1})
    with pytest.raises(ParamError):
        catalog("gordon", {"k": 1})


def test_rogers_selberg_small():
    for k in (1, 2, 3):
        for a in range(k + 1):
            check("rogers-selberg", k=k, a=a)


def test_mr_system_small():
    for n in (1, 2, 3):
        for a in range(n // 2 + 1):
            check("mr-system", n=n, a=a, branch=1)
        for a in range((n - 1) // 2 + 1):
            check("mr-system", n=n, a=a, branch=2)


def test_rank_n_equations_small():
    for n in (1, 2):
        for k in (1, 2):
            for a in range(k + 1):
                check("a-fun", n=n, k=k, a=a)
            check("a-fun2", n=n, k=k)
            check("a-fun2-simplified", n=n, k=k)


def test_cd_equations_small():
    for k in (1, 2):
        for a in range(k + 1):
            check("cd-fun1", n=1, k=k, a=a)
            check("cd-fun2", n=0, k=k, a=a)
            check("cd-fun2", n=1, k=k, a=a)
            check("cdn2", k=k, a=a)
            check("d2-fun", k=k, a=a)
    check("cd-fun1", n=2, k=1, a=1)
    for (k, a, b) in [(1, 0, 0), (2, 0, 0), (2, 1, 0), (2, 0, 1), (3, 1, 1)]:
        check("d2-nis2", k=k, a=a, b=b)
    for (k, a, b) in [(2, 0, 0), (3, 0, 1), (3, 1, 0)]:
        check("d2-nis2-diff", k=k, a=a, b=b)
    for (k, a) in [(1, 0), (2, 0), (2, 1), (3, 1)]:
        check("d2-combo", k=k, a=a)


def test_status_tags():
    assert catalog("con-a2n2", {"n": 2, "weights": (1, 0, 1)}).status == \
        "conjectural"
    assert catalog("con-a2n2", {"n": 1, "weights": (2, 1)}).status == \
        "proved"
    assert catalog("con-a2n2", {"n": 3, "weights": (0, 0, 1, 0)}).status == \
        "proved"
    assert catalog("con-cn1", {"n": 2, "weights": (2, 0, 0)}).status == \
        "proved"
    assert catalog("con-shun2", {"k": 3, "variant": "kL1"}).status == \
        "conjectural"
    assert catalog("gordon", {"k": 2, "a": 1}).status == "proved"


def test_bridges_small():
    check("jms", n=2, a=1)
    check("dk1", n=2, a=2)
    check("c-level1", n=1, a=0)
    check("a-f", n=2, a=1)
    check("c-f", n=2, a=2)
    check("d-f", n=2, a=0)
    check("con-a2n2", n=2, weights=(0, 1, 1))
    check("con-cn1", n=1, weights=(1, 1))
    check("con-cn1", n=0, weights=(3,))
    check("con-dn2", n=2, weights=(2, 0, 0))
    check("con-a2n2-qseries", n=2, k=1, which=0)
    check("con-a2n2-qseries", n=2, k=1, which=1)
    check("con-c-qseries", n=1, k=2)
    check("con-d-qseries", n=2, k=2)
    check("con-shun", k=2)
    check("con-shun2", k=2, variant="omega")
    check("ag-type-product", N=16, k=2, which="d-kL1")
    check("b-b", k0=1, k1=2)
    check("ag-two-var", k=2, a=1)
    check("gordon-fsum", k=2, a=0)
    check("c-n0-closed", k=2)


def test_level_rank_small():
    for k in (1, 2, 3):
        for i in range(k + 1):
            check("level-rank-n1", N=20, k=k, i=i)
    for k in (1, 2):
        for i in range(k + 1):
            for j in range(i, k + 1):
                check("level-rank-n2", N=20, k=k, i=i, j=j)


def test_level_rank_general_patterns():
    for k in (1, 2, 3):
        for n in (1, 2, 3):
            check("level-rank-gen1", N=20, k=k, n=n)
            check("level-rank-gen2", N=20, k=k, n=n)
            if k >= 2 and n >= 2:
                check("level-rank-gen3", N=20, k=k, n=n)


def test_thm48_and_wz():
    for which in "ABCD":
        check("thm48", which=which)
    check("thm48-alt", which="C")
    check("thm48-alt", which="D")
    for idx in (1, 2, 3, 4):
        check("wz-funceq", idx=idx)
    for which in "ABCD":
        check("wz-edge", which=which, edge="w0")
        check("wz-edge", which=which, edge="z0")


def test_atomic_and_sshift():
    check("atomic", i=1, k1=0, k2=0, l1=0, l2=0)
    check("atomic", i=3, k1=2, k2=3, l1=0, l2=1)
    check("atomic", i=2, k1=-2, k2=-1, l1=4, l2=0)
    for i in (1, 2, 3, 4):
        check("toshow", i=i)
    check("s-shift", k1=0, k2=1, l1=1, l2=0, m=2, n=1)


def test_guess_reductions_catalog():
    for k in (1, 2, 3):
        for which in ("B", "kL0", "omega"):
            for edge in ("w0", "z0"):
                check("guess-reduction", k=k, which=which, edge=edge)


def test_hl_checks():
    check("hl-variant1", n=2)
    check("hl-variant2", k=2)
    check("hl-chain-def", k=2, n=2)
    check("hl-chain-ag", k=2)
    check("gow", r=2, n=1, delta=0)
    check("hl-triangle", r=1, s=1, L=3, m=2, route=0)
    check("hl-triangle", r=1, s=1, L=3, m=2, route=1)
    check("bailey", N=16, s=0, m=2, r_max=3)
    check("jtp", N=40, a=3, m=8)


def test_appendix_checks():
    check("macdonald-b", N=25, base=7, sigma=1, e1=3, e2=1)
    check("macdonald-b", N=25, base=7, sigma=-1, e1=3, e2=1)
    check("macdonald-d", N=25, base=8, sigma=1, tau=1, e1=4, e2=1)
    check("macdonald-d", N=25, base=8, sigma=1, tau=-1, e1=4, e2=1)
    check("mac-quasiperiod", N=20, kind="B", base=7, sigma=1, e1=3, e2=1)
    check("spec-char", N=16, family="A", n=1, two_k=2, two_lambda=(2,))
    check("spec-char", N=16, family="D", n=2, two_k=3, two_lambda=(2, 0))


def test_d2_uniqueness():
    for k in (1, 2, 3):
        fam = solve_d2_system(k, 12)
        for w, series in fam.items():
            g = gen_fun("D", 2, w, 12)
            assert series.compare(g, 12) is None, (k, w)
        check("d2-unique", N=10, k=k)


def test_automorphism_entry():
    check("automorphism", family="D", n=2, weights=(1, 0, 1))
    check("automorphism", family="C", n=3, weights=(2, 0, 1, 0))
    with pytest.raises(ParamError):
        catalog("automorphism", {"family": "A", "n": 1, "weights": (1, 0)})


def test_list_checks_complete():
    ids = {c.check_id for c in list_checks()}
    for required in ("rogers-selberg", "mr-system", "a-fun", "a-fun2",
                     "cd-fun1", "cd-fun2", "cdn2", "d2-nis2", "d2-fun",
                     "automorphism", "b-b", "gordon", "andrews-gordon",
                     "jms", "a-f", "c-f", "d-f", "dk1", "c-level1",
                     "level-rank-n1", "level-rank-n2", "con-a2n2",
                     "con-cn1", "con-dn2", "con-a2n2-qseries", "con-shun",
                     "con-shun2", "thm48", "wz-funceq", "atomic", "toshow",
                     "hl-variant1", "hl-variant2", "gow", "hl-triangle",
                     "bailey", "jtp", "macdonald-b", "macdonald-d",
                     "spec-char", "d2-unique", "ag-type-product"):
        assert required in ids, required
