"""Property suites behind `check`: each returns a JSON-ready report with one
entry per property (instance count, pass flag, first counterexample)."""

from __future__ import annotations

import itertools
import random

from .evenops import (
    EvenOp,
    act,
    compose_even,
    identity_op,
    op_coadd,
    op_comult,
    op_counit,
)
from .intpoly import IntPoly
from .kbu import (
    KBUElem,
    antipode,
    coadd,
    coadd_image,
    coadd_multi,
    colinear,
    comult_image,
    compose_kbu,
    cozero,
    gen,
    sigma_gen,
)
from .loopgrade import check_looping_axioms, main_relations_check
from .models import (
    bun_restrict,
    lambdak_from_beta,
    lk_from_mu,
    register_models,
    un_restrict,
    validate_model,
)
from .errors import RegistrationFailure
from .setzz import chi, const, IDENT
from .symfun import lambda_of_integer


def _prop(props, name, instances, failures):
    props.append(
        {
            "id": name,
            "instances": instances,
            "pass": not failures,
            "counterexample": failures[0] if failures else None,
        }
    )


def _monomial_corpus(trunc: int) -> list[KBUElem]:
    """All generator monomials with index sum (weight) at most the truncation."""
    out = []

    def build(max_part, remaining, parts):
        if parts:
            mono = IntPoly.one()
            for p in parts:
                mono = mono * IntPoly.var("L", p)
            out.append(KBUElem(mono, trunc))
        for p in range(min(max_part, remaining), 0, -1):
            build(p, remaining - p, parts + [p])

    build(trunc, trunc, [])
    return out


def biring_suite(trunc: int, seed: int = 0) -> dict:
    rng = random.Random(seed)
    props = []
    corpus = _monomial_corpus(trunc)

    # coassociativity of both coproducts, three routes for co-addition
    failures = []
    count = 0
    for x in corpus:
        count += 1
        indices = sorted({i for (f, i) in x.poly.variables() if f == "L"})
        via_first = x.poly.substitute({("L", k): coadd_image(k, "M", "T3") for k in indices})
        m_idx = sorted({i for (f, i) in via_first.variables() if f == "M"})
        route1 = via_first.substitute({("M", k): coadd_image(k, "T1", "T2") for k in m_idx})
        via_second = x.poly.substitute({("L", k): coadd_image(k, "T1", "M") for k in indices})
        m_idx = sorted({i for (f, i) in via_second.variables() if f == "M"})
        route2 = via_second.substitute({("M", k): coadd_image(k, "T2", "T3") for k in m_idx})
        route3 = coadd_multi(x, 3)
        for leg in ("T1", "T2", "T3"):
            route1 = route1.truncate_family(leg, trunc)
            route2 = route2.truncate_family(leg, trunc)
        if not (route1 == route2 == route3):
            failures.append(f"coadd coassociativity at {x}")
    _prop(props, "coadd-coassociative", count, failures)

    failures = []
    count = 0
    for x in corpus:
        count += 1
        indices = sorted({i for (f, i) in x.poly.variables() if f == "L"})
        via_first = x.poly.substitute({("L", k): comult_image(k, "M", "T3") for k in indices})
        m_idx = sorted({i for (f, i) in via_first.variables() if f == "M"})
        route1 = via_first.substitute({("M", k): comult_image(k, "T1", "T2") for k in m_idx})
        via_second = x.poly.substitute({("L", k): comult_image(k, "T1", "M") for k in indices})
        m_idx = sorted({i for (f, i) in via_second.variables() if f == "M"})
        route2 = via_second.substitute({("M", k): comult_image(k, "T2", "T3") for k in m_idx})
        for leg in ("T1", "T2", "T3"):
            route1 = route1.truncate_family(leg, trunc)
            route2 = route2.truncate_family(leg, trunc)
        if route1 != route2:
            failures.append(f"comult coassociativity at {x}")
    _prop(props, "comult-coassociative", count, failures)

    # Hopf antipode law and involution
    failures = []
    count = 0
    sigma_images = {("T1", k): sigma_gen(k) for k in range(1, trunc + 1)}
    ident_images = {("T2", k): IntPoly.var("L", k) for k in range(1, trunc + 1)}
    for x in corpus + [corpus[0] + 3 * corpus[-1]]:
        count += 2
        merged = coadd(x).poly.substitute(sigma_images | ident_images)
        if KBUElem(merged, trunc) != KBUElem.from_int(cozero(x), trunc):
            failures.append(f"antipode law at {x}")
        if antipode(antipode(x)) != x:
            failures.append(f"antipode involution at {x}")
    _prop(props, "antipode-law", count, failures)

    # co-linear structure: multiplicativity and gamma(-1) = antipode
    failures = []
    count = 0
    for k1 in range(-3, 4):
        for k2 in range(-3, 4):
            for k in range(1, trunc + 1):
                count += 1
                lhs = colinear(k1, colinear(k2, gen(k, trunc)))
                rhs = colinear(k1 * k2, gen(k, trunc))
                if lhs != rhs:
                    failures.append(f"gamma({k1})gamma({k2}) != gamma({k1 * k2}) on L{k}")
    for k in range(1, trunc + 1):
        count += 1
        if colinear(-1, gen(k, trunc)) != antipode(gen(k, trunc)):
            failures.append(f"gamma(-1) != antipode on L{k}")
    _prop(props, "colinear-structure", count, failures)

    # composition: unit laws and associativity inside the exact regime
    failures = []
    count = 0
    for x in rng.sample(corpus, min(6, len(corpus))):
        count += 2
        reduced = x.reduced()
        if compose_kbu(gen(1, trunc), reduced) != reduced:
            failures.append(f"left unit at {x}")
        if compose_kbu(x, gen(1, trunc)) != x:
            failures.append(f"right unit at {x}")
    for i, j, k in itertools.product(range(1, trunc + 1), repeat=3):
        if i * j * k > trunc:
            continue
        count += 1
        lhs = compose_kbu(compose_kbu(gen(i, trunc), gen(j, trunc)), gen(k, trunc))
        rhs = compose_kbu(gen(i, trunc), compose_kbu(gen(j, trunc), gen(k, trunc)))
        if lhs != rhs:
            failures.append(f"associativity at ({i},{j},{k})")
    _prop(props, "compose-monoid", count, failures)

    return {"suite": "biring", "config": {"trunc": trunc, "seed": seed},
            "properties": props, "pass": all(p["pass"] for p in props)}


def _operation_corpus(trunc: int, window: int, rng: random.Random,
                      size: int, max_weight: int = 2) -> list[EvenOp]:
    """Random operations whose composites stay representable: ring weights are
    capped, and the unbounded function Id is only paired with constant-free
    ring elements so that component augmentations stay inside the window."""
    fns = [chi(0), chi(1), chi(-1), chi(2), chi(-2), chi(3), const(1), const(-1), const(2)]
    xs = [
        gen(1, trunc),
        gen(2, trunc),
        gen(1, trunc) + 1,
        gen(2, trunc) - gen(1, trunc),
        2 * gen(1, trunc),
        gen(1, trunc) * gen(1, trunc),
        gen(2, trunc) + 3,
        KBUElem.from_int(1, trunc),
    ]
    xs = [x for x in xs if x.weight() <= max_weight]
    xs_reduced = [x.reduced() for x in xs if not x.reduced().is_zero]
    out = []
    for _ in range(size):
        pairs = []
        for _ in range(rng.randint(1, 2)):
            if rng.random() < 0.15:
                pairs.append((IDENT, rng.choice(xs_reduced)))
            else:
                pairs.append((rng.choice(fns), rng.choice(xs)))
        out.append(EvenOp.from_pairs(pairs, trunc, window))
    return out


def compose_suite(trunc: int, window: int, seed: int = 0,
                  pairs: int = 40, triples: int = 25) -> dict:
    """Composition versus the action oracle, plus the monoid laws.

    Corpus ring weights are capped so every composite stays inside the
    truncation level (the quotient only respects composition there).
    """
    rng = random.Random(seed)
    props = []
    models = register_models(validate=False)
    sample_rng = random.Random(seed + 1)
    elements = {name: m.samples(sample_rng, 5) for name, m in models.items()}

    corpus = _operation_corpus(trunc, window, rng, 30)
    failures = []
    count = 0
    for _ in range(pairs):
        r, s = rng.choice(corpus), rng.choice(corpus)
        comp = compose_even(r, s)
        for name, m in models.items():
            for a in elements[name]:
                count += 1
                lhs = act(comp, m, a)
                rhs = act(r, m, act(s, m, a))
                if not m.eq(lhs, rhs):
                    failures.append(f"oracle mismatch on {name} at {m.show(a)}")
    _prop(props, "compose-vs-action", count, failures)

    failures = []
    count = 0
    ident = identity_op(trunc, window)
    for r in corpus:
        count += 2
        if compose_even(ident, r) != r:
            failures.append(f"left unit at {r}")
        if compose_even(r, ident) != r:
            failures.append(f"right unit at {r}")
    assoc_trunc = max(trunc, 8)
    assoc_corpus = _operation_corpus(assoc_trunc, window, rng, 30)
    for _ in range(triples):
        r, s, t = (rng.choice(assoc_corpus) for _ in range(3))
        count += 1
        lhs = compose_even(compose_even(r, s), t)
        rhs = compose_even(r, compose_even(s, t))
        if lhs != rhs:
            failures.append(f"associativity at ({r}) o ({s}) o ({t})")
    _prop(props, "compose-monoid-laws", count, failures)

    # counit multiplicativity through the integer model, where defined
    failures = []
    count = 0
    zz = models["zz"]
    for _ in range(20):
        r, s = rng.choice(corpus), rng.choice(corpus)
        if abs(op_counit(s)) > window:
            continue
        count += 1
        lhs = op_counit(compose_even(r, s))
        rhs = act(r, zz, act(s, zz, 1))
        if lhs != rhs:
            failures.append(f"counit of composition at ({r}) o ({s})")
    _prop(props, "counit-composition", count, failures)

    # coproducts against the action on sums and products; the comparison is
    # only meaningful while the combined augmentation stays inside the window
    failures = []
    count = 0
    for name in ("zz", "sphere", "split:2"):
        m = models[name]
        es = elements[name]
        for r in rng.sample(corpus, 6):
            ta = op_coadd(r)
            tm = op_comult(r)
            for a, b in zip(es, es[1:]):
                ea, eb = m.eps(a), m.eps(b)
                if abs(ea + eb) <= window:
                    count += 1
                    if not m.eq(ta.act2(m, a, b), act(r, m, m.add(a, b))):
                        failures.append(f"coadd action at {name}")
                if abs(ea * eb) <= window:
                    count += 1
                    if not m.eq(tm.act2(m, a, b), act(r, m, m.mul(a, b))):
                        failures.append(f"comult action at {name}")
    _prop(props, "coproducts-vs-action", count, failures)

    return {"suite": "compose",
            "config": {"trunc": trunc, "window": window, "seed": seed},
            "properties": props, "pass": all(p["pass"] for p in props)}


def models_suite(trunc: int, seed: int = 0, max_rank: int = 6) -> dict:
    rng = random.Random(seed)
    props = []

    failures = []
    count = 0
    models = register_models(validate=False)
    for name, model in models.items():
        count += 1
        try:
            validate_model(model, max_k=min(4, trunc), rng=rng)
        except RegistrationFailure as exc:
            failures.append(str(exc))
    _prop(props, "lambda-ring-axioms", count, failures)

    failures = []
    count = 0
    sphere = models["sphere"]
    u = IntPoly.var("u", 1)
    for i in range(1, 6):
        count += 1
        if sphere.lam(i, u) != (-1) ** (i - 1) * u:
            failures.append(f"sphere lambda^{i}(u)")
    _prop(props, "sphere-suspension-fact", count, failures)

    failures = []
    count = 0
    for n in range(2, max_rank + 1):
        for k in range(1, n):
            count += 1
            if un_restrict(lk_from_mu(n, k)) != lk_from_mu(n - 1, k):
                failures.append(f"unitary restriction at (n={n}, k={k})")
    for n in range(1, max_rank + 1):
        for k in range(1, n + 1):
            count += 1
            if bun_restrict(lambdak_from_beta(n + 1, k)) != lambdak_from_beta(n, k):
                failures.append(f"classifying restriction at (n={n}, k={k})")
    _prop(props, "restriction-identities", count, failures)

    failures = []
    count = 0
    for n in range(1, 8):
        for i in range(1, 8):
            count += 1
            if lambda_of_integer(-n, i) + lambda_of_integer(-n, i - 1) != lambda_of_integer(-n + 1, i):
                failures.append(f"Pascal at (-{n}, {i})")
    _prop(props, "negative-pascal", count, failures)

    return {"suite": "models", "config": {"trunc": trunc, "seed": seed},
            "properties": props, "pass": all(p["pass"] for p in props)}


def looping_suite(trunc: int, window: int, seed: int = 0) -> dict:
    rep = check_looping_axioms(trunc, window, random.Random(seed))
    props = [
        {
            "id": f"axiom-{aid}",
            "instances": entry["instances"],
            "pass": entry["pass"],
            "counterexample": entry["witnesses"][0] if entry["witnesses"] else None,
        }
        for aid, entry in sorted(rep["axioms"].items())
    ]
    return {"suite": "looping",
            "config": {"trunc": trunc, "window": window, "seed": seed},
            "properties": props, "pass": rep["pass"]}


def main_suite(trunc: int, window: int, seed: int = 0) -> dict:
    rep = main_relations_check(min(trunc, 5), trunc, window)
    props = [
        {
            "id": f"relations-p{entry['p']}",
            "instances": entry["instances"],
            "pass": entry["pass"],
            "counterexample": entry["witnesses"][0] if entry["witnesses"] else None,
        }
        for entry in rep["relations"]
    ]
    return {"suite": "main",
            "config": {"trunc": trunc, "window": window, "seed": seed},
            "properties": props, "pass": rep["pass"]}


SUITES = {
    "biring": lambda trunc, window, seed: biring_suite(trunc, seed),
    "compose": compose_suite,
    "looping": looping_suite,
    "models": lambda trunc, window, seed: models_suite(trunc, seed),
    "main": main_suite,
}


def run_suite(name: str, trunc: int, window: int, seed: int = 0) -> dict:
    if name == "all":
        reports = [run_suite(n, trunc, window, seed) for n in SUITES]
        return {
            "suite": "all",
            "config": {"trunc": trunc, "window": window, "seed": seed},
            "suites": reports,
            "pass": all(r["pass"] for r in reports),
        }
    return SUITES[name](trunc, window, seed)
