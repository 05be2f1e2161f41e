import random

import pytest

from lambdaops.errors import (
    ModelTruncationExceeded,
    NotNormalised,
    WindowExhausted,
)
from lambdaops.evenops import (
    EvenOp,
    act,
    compose_even,
    compose_even_pair,
    divisor_pairs,
    identity_op,
    op_coadd,
    op_comult,
    op_counit,
    op_cozero,
    op_is_primitive,
)
from lambdaops.intpoly import IntPoly
from lambdaops.kbu import KBUElem, gen, psi_kbu
from lambdaops.models import ProjectiveModel, register_models
from lambdaops.setzz import IDENT, chi, const

N, W = 4, 16
MODELS = register_models(validate=False)


def ev(pairs):
    return EvenOp.from_pairs(pairs, N, W)


def test_divisor_pairs():
    assert set(divisor_pairs(1, W)) == {(1, 1), (-1, -1)}
    assert set(divisor_pairs(6, W)) == {
        (1, 6), (2, 3), (3, 2), (6, 1), (-1, -6), (-2, -3), (-3, -2), (-6, -1)
    }
    zero_pairs = divisor_pairs(0, 2)
    assert (0, 0) in zero_pairs and (0, 2) in zero_pairs and (-1, 0) in zero_pairs
    assert len(zero_pairs) == len(set(zero_pairs)) == 9
    with pytest.raises(WindowExhausted):
        divisor_pairs(17, 16)


def test_normal_form_groups_by_indicator():
    r = ev([(const(2), gen(1, N)), (chi(0), gen(1, N))])
    assert r.component(0) == 3 * gen(1, N)
    assert r.component(5) == 2 * gen(1, N)


def test_bilinearity_under_normalisation():
    from lambdaops.setzz import fn_sum

    f, g = chi(1), const(2)
    x, y = gen(1, N), gen(2, N) + 1
    assert ev([(fn_sum(f, g), x)]) == ev([(f, x), (g, x)])
    assert ev([(f, x + y)]) == ev([(f, x), (f, y)])


def test_identity_normal_form():
    ident = identity_op(N, W)
    for d in range(-W, W + 1):
        assert ident.component(d) == gen(1, N) + d


def test_counits():
    ident = identity_op(N, W)
    assert op_cozero(ident) == 0
    assert op_counit(ident) == 1
    assert op_cozero(ev([(const(1), KBUElem.from_int(1, N))])) == 1
    assert op_counit(ev([(const(1), gen(2, N))])) == 0


def test_act_identity_is_identity():
    rng = random.Random(9)
    for name, m in MODELS.items():
        for alpha in m.samples(rng, 4):
            assert m.eq(act(identity_op(N, W), m, alpha), alpha), name


def test_act_projection_formulas():
    sphere = MODELS["sphere"]
    u = IntPoly.var("u", 1)
    r = ev([(chi(2), gen(1, N))])
    assert sphere.eq(act(r, sphere, sphere.add(u, sphere.from_int(2))), u)
    assert act(r, sphere, sphere.add(u, sphere.from_int(1))).is_zero
    # iota (x) 1 reads off the augmentation
    r2 = ev([(IDENT, KBUElem.from_int(1, N))])
    got = act(r2, sphere, sphere.add(u, sphere.from_int(3)))
    assert sphere.eq(got, sphere.from_int(3))
    # 1 (x) L2 on the reduced sphere class
    r3 = ev([(const(1), gen(2, N))])
    assert sphere.eq(act(r3, sphere, u), sphere.neg(u))


def test_act_window_guard():
    zz = MODELS["zz"]
    with pytest.raises(WindowExhausted):
        act(identity_op(N, W), zz, 17)


def test_act_model_truncation_guard():
    sphere = ProjectiveModel(1, name="sphere")
    sphere.max_lambda = 1
    r = ev([(const(1), gen(2, N))])
    with pytest.raises(ModelTruncationExceeded):
        act(r, sphere, IntPoly.var("u", 1))


def test_raw_mode_requires_normalisation():
    raw = EvenOp.from_pairs([(const(1), gen(1, N))], N, W, normalise=False)
    with pytest.raises(NotNormalised):
        op_cozero(raw)
    assert raw.normalise().component(0) == gen(1, N)


def test_compose_unit_laws():
    ident = identity_op(N, W)
    s = ev([(chi(2), gen(1, N)), (const(3), KBUElem.from_int(1, N))])
    assert compose_even(ident, s) == s
    assert compose_even(s, ident) == s


def test_compose_right_zero_collapses_to_augmentation():
    r = ev([(chi(0), gen(1, N) + 2)])
    zero = EvenOp({}, N, W)
    comp = compose_even(r, zero)
    for d in range(-W, W + 1):
        assert comp.component(d) == KBUElem.from_int(2, N)


def test_compose_generator_on_generator():
    r = ev([(const(1), gen(2, N))])
    s = ev([(const(1), gen(2, N))])
    comp = compose_even(r, s)
    expected = gen(1, N) * gen(3, N) - gen(4, N)
    for d in (-2, 0, 3):
        assert comp.component(d) == expected


def test_compose_window_guard():
    r = ev([(chi(0), gen(1, N))])
    s = ev([(chi(0), gen(1, N) + 20)])
    with pytest.raises(WindowExhausted):
        compose_even(r, s)


def test_compose_pair_matches_componentwise():
    rng = random.Random(21)
    fns = [chi(0), chi(1), chi(-1), const(1), const(2)]
    xs = [gen(1, N), gen(2, N), gen(1, N) + 1, 2 * gen(1, N)]
    for _ in range(12):
        r = ev([(rng.choice(fns), rng.choice(xs)) for _ in range(rng.randint(1, 2))])
        e = rng.choice([-2, 0, 1, 3])
        y = rng.choice(xs)
        via_pair = compose_even_pair(r, chi(e), y)
        via_table = compose_even(r, ev([(chi(e), y)]))
        assert via_pair.component(e) == via_table.component(e)


def test_compose_pair_nonindicator_right_against_oracle():
    # composing against id (x) y exercises the full divisor sum with the
    # co-linear twists; the action oracle arbitrates
    zz = MODELS["zz"]
    r = ev([(chi(6), gen(2, N)), (chi(0), gen(1, N) + 1)])
    y = gen(1, N)
    comp = compose_even_pair(r, IDENT, y)
    s = ev([(IDENT, y)])
    for alpha in (-3, -1, 0, 1, 2, 3):
        lhs = act(comp, zz, alpha)
        rhs = act(r, zz, act(s, zz, alpha))
        assert lhs == rhs


def test_compose_action_oracle_randomized():
    rng = random.Random(33)
    fns = [chi(0), chi(1), chi(-1), chi(2), const(1), const(-1)]
    xs = [gen(1, N), gen(2, N), gen(1, N) + 1, gen(1, N) * gen(1, N), 2 * gen(2, N)]
    corpus = [
        ev([(rng.choice(fns), rng.choice(xs)) for _ in range(rng.randint(1, 2))])
        for _ in range(25)
    ]
    elems = {name: m.samples(random.Random(4), 3) for name, m in MODELS.items()}
    for _ in range(30):
        r, s = rng.choice(corpus), rng.choice(corpus)
        comp = compose_even(r, s)
        for name, m in MODELS.items():
            for alpha in elems[name]:
                assert m.eq(act(comp, m, alpha), act(r, m, act(s, m, alpha)))


def test_coadd_pairs_against_action():
    split = MODELS["split:2"]
    rng = random.Random(6)
    samples = split.samples(rng, 4)
    r = ev([(const(1), gen(2, N)), (chi(1), gen(1, N))])
    t = op_coadd(r)
    for a, b in zip(samples, samples[1:]):
        if abs(split.eps(a) + split.eps(b)) <= W:
            assert split.eq(t.act2(split, a, b), act(r, split, split.add(a, b)))


def test_comult_pairs_against_action():
    split = MODELS["split:2"]
    rng = random.Random(8)
    samples = split.samples(rng, 4)
    for r in (ev([(const(1), gen(2, N))]), ev([(chi(1), KBUElem.from_int(1, N))])):
        t = op_comult(r)
        for a, b in zip(samples, samples[1:]):
            if abs(split.eps(a) * split.eps(b)) <= W:
                assert split.eq(t.act2(split, a, b), act(r, split, split.mul(a, b)))


def test_comult_indicator_on_unit_classes():
    # chi_1 (x) 1 applied to a product of augmentation-one elements gives 1
    split = MODELS["split:2"]
    x1 = IntPoly.var("x", 1)
    alpha = x1  # eps = 1
    beta = split.add(split.mul(x1, x1), IntPoly.var("x", 2) - x1)  # eps = 1
    r = ev([(chi(1), KBUElem.from_int(1, N))])
    t = op_comult(r)
    assert split.eq(t.act2(split, alpha, beta), split.from_int(1))


def test_multiplicativity_on_split_model():
    # r(xy) = r[1](x) r[2](y) for r = 1 (x) L2
    split = MODELS["split:3"]
    rng = random.Random(10)
    r = ev([(const(1), gen(2, N))])
    t = op_comult(r)
    for a, b in zip(split.samples(rng, 3), split.samples(rng, 3)):
        if abs(split.eps(a) * split.eps(b)) <= W:
            assert split.eq(t.act2(split, a, b), act(r, split, split.mul(a, b)))


def test_even_primitivity():
    assert op_is_primitive(ev([(const(1), gen(1, N))]))
    assert op_is_primitive(ev([(const(1), psi_kbu(2, N))]))
    assert not op_is_primitive(ev([(const(1), gen(2, N))]))


def test_tensor_window_guard():
    r = ev([(const(1), gen(1, N))])
    t = op_coadd(r)
    zz = MODELS["zz"]
    with pytest.raises(WindowExhausted):
        t.act2(zz, 17, 0)


def test_serialisation_shape():
    r = ev([(chi(1), gen(1, N))])
    obj = r.to_obj()
    assert obj["summands"] == [["chi(1)", [{"mono": [["L", 1, 1]], "coeff": "1"}]]]
    assert obj["trunc"] == N and obj["window"] == W
