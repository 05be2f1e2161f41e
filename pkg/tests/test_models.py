import random

import pytest

from helpers import binom
from lambdaops.errors import (
    IndexOutOfRange,
    ModelTruncationExceeded,
    RankUnderflow,
    RegistrationFailure,
)
from lambdaops.intpoly import IntPoly
from lambdaops.models import (
    COIModel,
    IntegerModel,
    ProjectiveModel,
    SplitModel,
    bun_beta,
    bun_restrict,
    get_model,
    lambdak_from_beta,
    lk_from_mu,
    model_psi,
    register_models,
    un_mu,
    un_one,
    un_restrict,
    validate_model,
)


def test_registration_suite_passes():
    models = register_models()
    assert set(models) == {"zz", "sphere", "cp:2", "cp:3", "split:2", "split:3", "coi"}


def test_integer_model():
    zz = IntegerModel()
    assert zz.lam(2, 3) == 3
    assert zz.lam(3, -1) == -1
    assert zz.eps(7) == 7


def test_sphere_suspension_fact():
    sphere = ProjectiveModel(1, name="sphere")
    u = IntPoly.var("u", 1)
    for i in range(1, 6):
        assert sphere.lam(i, u) == (-1) ** (i - 1) * u


def test_split_line_facts():
    split = SplitModel(2)
    x1, x2 = IntPoly.var("x", 1), IntPoly.var("x", 2)
    assert split.lam(2, x1 + x2) == x1 * x2
    assert split.lam(2, x1) .is_zero
    assert split.eps(x1 * x2 + 2) == 3


def test_projective_reduces_powers():
    cp2 = ProjectiveModel(2)
    u = IntPoly.var("u", 1)
    cube = cp2.mul(cp2.mul(u, u), u)
    assert cube.is_zero
    # rank-one line class xi = 1 + u has lambda_t = 1 + xi t
    xi = cp2.add(u, cp2.from_int(1))
    assert cp2.lam(1, xi) == xi
    assert cp2.lam(2, xi).is_zero


def test_coi_model_arithmetic():
    coi = COIModel()
    a, b = coi.from_int(3), coi.from_int(-2)
    assert coi.eps(coi.add(a, b)) == 1
    assert coi.eps(coi.mul(a, b)) == -6
    assert coi.eps(coi.lam(2, a)) == 3


def test_model_psi_newton_consistency():
    split = SplitModel(2)
    rng = random.Random(5)
    for a in split.samples(rng, 5):
        for k in (1, 2, 3):
            # Newton recursion over lambda values against the line-class route
            lams = [split.from_int(1)] + [split.lam(i, a) for i in range(1, k + 1)]
            acc = split.from_int(0)
            psis = [None]
            for n in range(1, k + 1):
                s = split.from_int(0)
                for i in range(1, n):
                    t = split.mul(lams[i], psis[n - i])
                    s = split.add(s, t if i % 2 == 1 else split.neg(t))
                last = split.mul(split.from_int(n), lams[n])
                psis.append(split.add(s, last if n % 2 == 1 else split.neg(last)))
            assert split.eq(model_psi(split, k, a), psis[k])


def test_max_lambda_guard():
    sphere = ProjectiveModel(1, name="sphere")
    sphere.max_lambda = 2
    with pytest.raises(ModelTruncationExceeded):
        sphere.lam(3, IntPoly.var("u", 1))


def test_validate_model_catches_broken_lambda():
    class Broken(IntegerModel):
        name = "broken"

        def lam(self, k, a):
            if k == 2:
                return a * a  # wrong on purpose
            return super().lam(k, a)

    with pytest.raises(RegistrationFailure):
        validate_model(Broken())


def test_get_model_selectors():
    assert get_model("split:4").m == 4
    assert get_model("cp:2").m == 2
    assert get_model("sphere").name == "sphere"
    with pytest.raises(ValueError):
        get_model("nope")


# -- unitary models ----------------------------------------------------------------


def test_un_restrict_examples():
    assert un_restrict(un_mu(3, 2)) == un_mu(2, 2) + un_mu(2, 1)
    assert un_restrict(un_mu(3, 3)) == un_mu(2, 2)
    assert un_restrict(un_one(3)) == un_one(2)
    with pytest.raises(RankUnderflow):
        un_restrict(un_mu(1, 1))
    with pytest.raises(IndexOutOfRange):
        un_mu(2, 3)


def test_lk_from_mu_examples():
    assert lk_from_mu(5, 1) == un_mu(5, 1)
    assert lk_from_mu(2, 2) == un_mu(2, 2) - 2 * un_mu(2, 1)
    assert un_restrict(lk_from_mu(3, 2)) == lk_from_mu(2, 2)


def test_un_restriction_chain():
    for n in range(3, 7):
        for k in range(1, n - 1):
            twice = un_restrict(un_restrict(lk_from_mu(n, k)))
            assert twice == lk_from_mu(n - 2, k)


def test_un_restrict_at_top_index_matches_cutoff_combination():
    # at k = n the Pascal collapse re-expresses the image in the lower-rank
    # binomials, with the out-of-rank generator dropped
    for n in range(2, 7):
        got = un_restrict(lk_from_mu(n, n))
        expected = un_one(n - 1) * 0
        for j in range(n):
            if 1 <= n - j <= n - 1:
                expected = expected + binom(-(n - 1), j) * un_mu(n - 1, n - j)
        assert got == expected


def test_bun_restrict_examples():
    assert bun_restrict(bun_beta(3, 2)) == bun_beta(2, 2) + bun_beta(2, 1)
    assert bun_restrict(bun_beta(2, 1)) == bun_beta(1, 1) + bun_beta(1, 0)
    assert lambdak_from_beta(2, 1) == bun_beta(2, 1) - 2 * bun_beta(2, 0)


def test_bun_restriction_identity():
    for n in range(1, 7):
        for k in range(1, n + 1):
            assert bun_restrict(lambdak_from_beta(n + 1, k)) == lambdak_from_beta(n, k)


def test_exterior_sign_discipline():
    a = un_mu(4, 1) * un_mu(4, 3)
    b = un_mu(4, 3) * un_mu(4, 1)
    assert a == (-1) * b
    assert (un_mu(4, 2) * un_mu(4, 2)).ext.is_zero
