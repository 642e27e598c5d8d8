import pytest

from thompson_twist.errors import ProbeMismatch
from thompson_twist.groupf import (
    PROBES,
    REV,
    REV_MATRIX,
    AbPair,
    AutWord,
    ConjBy,
    ab,
    apply_aut,
    autword_from_json,
    autword_to_json,
    commutator,
    conj_by_tlike,
    conj_window,
    h1_matrix,
    is_derived_element,
    project_class,
    rev,
    twisted_conjugate,
    verify_shift_lemma,
)
from thompson_twist.plmap import (
    embed_f_as_tlike,
    identity_f,
    identity_tlike,
    invert_f,
    invert_tlike,
    translation,
    validate_tlike,
)
from thompson_twist.sampling import random_autword, random_dyadic, random_fmap, random_tlike
from thompson_twist.zlinalg import IntMatrix, class_rep

from . import oracles
from .conftest import d

I2 = IntMatrix.identity(2)


def test_ab_examples(gen_f, rng):
    assert ab(translation(1)) == AbPair(1, 1)
    assert ab(gen_f) == AbPair(0, 1)
    for _ in range(50):
        f, h = random_fmap(rng), random_fmap(rng)
        assert ab(commutator(f, h)) == AbPair(0, 0)
        assert is_derived_element(commutator(f, h))
        assert ab(f * h) == ab(f) + ab(h)
        assert ab(invert_f(f)) == -ab(f)


def test_is_derived_element():
    assert is_derived_element(identity_f())
    assert not is_derived_element(translation(1))


def test_rev(gen_f, rng):
    assert rev(translation(1)) == translation(-1)
    r = rev(gen_f)
    assert r.breaks == ((-1, -2), (0, 0)) and (r.l, r.r) == (-1, 0)
    for _ in range(50):
        f, h = random_fmap(rng), random_fmap(rng)
        assert ab(rev(f)) == AbPair(-f.r, -f.l)
        assert rev(rev(f)) == f
        assert rev(f * h) == rev(f) * rev(h)
        for _ in range(10):
            x = random_dyadic(rng, -20, 20, 5)
            assert rev(f)(x) == -f(-x)


def test_conj_by_identity(rng):
    for _ in range(20):
        f = random_fmap(rng)
        assert conj_by_tlike(f, identity_tlike()) == f


def test_conj_by_f_element_is_inner(rng):
    for _ in range(30):
        f, k = random_fmap(rng), random_fmap(rng)
        assert conj_by_tlike(f, embed_f_as_tlike(k)) == k * f * invert_f(k)


def test_conj_three_fold_oracle(rng):
    for _ in range(60):
        f, g = random_fmap(rng), random_tlike(rng)
        k = conj_by_tlike(f, g)
        assert ab(k) == ab(f)
        gi = invert_tlike(g)
        for _ in range(40):
            x = oracles.frac(random_dyadic(rng, -30, 30, 6))
            expected = oracles.eval_tlike(g, oracles.eval_f(f, oracles.eval_tlike(gi, x)))
            assert oracles.eval_f(k, x) == expected


def test_conj_window_bounds_tails(rng):
    for _ in range(30):
        f, g = random_fmap(rng), random_tlike(rng)
        a, b = conj_window(f, g)
        k = conj_by_tlike(f, g)
        if k.breaks:
            assert a <= k.first_x and k.last_x <= b


def test_conj_is_automorphism(rng):
    for _ in range(30):
        g = random_tlike(rng)
        f, h = random_fmap(rng), random_fmap(rng)
        assert conj_by_tlike(f * h, g) == conj_by_tlike(f, g) * conj_by_tlike(h, g)
        assert conj_by_tlike(invert_f(f), g) == invert_f(conj_by_tlike(f, g))


def test_conj_by_shift_with_nontrivial_period():
    # g(x + 1) = g(x) + 1 everywhere, slopes 1/2, 1, 2 on each unit interval,
    # so g commutes with x + 1
    h, q = d("1/2^1"), d("1/2^2")
    core = []
    for k in (-1, 0):
        core += [(k, k + h), (k + h, k + h + q), (k + h + q, k + 1)]
    core.append((1, 1 + h))
    g = validate_tlike(0, 0, core)
    f = translation(1)
    assert conj_by_tlike(f, g) == f
    assert conj_by_tlike(translation(-3), g) == translation(-3)


def test_apply_aut(gen_f, rng):
    f = random_fmap(rng)
    assert apply_aut(AutWord(), f) == f
    assert apply_aut(AutWord((REV, REV)), f) == f
    for _ in range(20):
        f, h = random_fmap(rng), random_fmap(rng)
        phi = AutWord((REV, ConjBy(random_tlike(rng))))
        out = apply_aut(phi, f)
        assert ab(out) == AbPair(-f.r, -f.l)
        assert apply_aut(phi, f * h) == out * apply_aut(phi, h)


def test_apply_aut_order():
    g = embed_f_as_tlike(PROBES[1])
    f = translation(1)
    first_rev = apply_aut(AutWord((REV, ConjBy(g))), f)
    assert first_rev == PROBES[1] * rev(f) * invert_f(PROBES[1])


def test_h1_matrix_examples(rng):
    assert h1_matrix(AutWord()) == I2
    assert h1_matrix(AutWord((REV,))) == REV_MATRIX
    assert h1_matrix(AutWord((ConjBy(random_tlike(rng)),))) == I2


def test_h1_matrix_multiplicative(rng):
    for _ in range(20):
        phi = random_autword(rng, max_len=3)
        psi = random_autword(rng, max_len=3)
        assert h1_matrix(phi.then(psi)) == h1_matrix(phi) @ h1_matrix(psi)
    assert REV_MATRIX @ REV_MATRIX == I2


def test_h1_probe_mismatch_is_detected(monkeypatch):
    import thompson_twist.groupf as gf

    monkeypatch.setattr(gf, "rev", lambda f: f)
    with pytest.raises(ProbeMismatch):
        gf.h1_matrix(AutWord((REV,)))


def test_verify_shift_lemma(rng):
    e = identity_f()
    for _ in range(10):
        g, x = random_fmap(rng), random_fmap(rng)
        assert verify_shift_lemma(g, e, x, AutWord())
    g0 = random_tlike(rng)
    for phi in (AutWord((REV,)), AutWord((ConjBy(g0),))):
        for _ in range(30):
            g, k, x = random_fmap(rng), random_fmap(rng), random_fmap(rng)
            assert verify_shift_lemma(g, k, x, phi)


def test_project_class(rng):
    assert project_class(identity_f(), AutWord((REV,))) == (0, 0)
    rev_word = AutWord((REV,))
    reps = set()
    for a in range(-6, 7):
        # an element with ab = (0, a): a-th power of the slope-2 generator
        f = identity_f()
        for _ in range(abs(a)):
            f = f * (PROBES[1] if a > 0 else invert_f(PROBES[1]))
        assert ab(f) == AbPair(0, a)
        reps.add(project_class(f, rev_word))
    assert len(reps) == 13


def test_project_class_invariance(rng):
    g0 = random_tlike(rng)
    for phi in (AutWord(), AutWord((REV,)), AutWord((ConjBy(g0),))):
        for _ in range(40):
            f, h = random_fmap(rng), random_fmap(rng)
            twisted = twisted_conjugate(h, f, phi)
            assert project_class(twisted, phi) == project_class(f, phi)
            assert project_class(f, phi) == class_rep(list(ab(f)), h1_matrix(phi))


def test_autword_json(rng):
    phi = AutWord((REV, ConjBy(random_tlike(rng)), REV))
    doc = autword_to_json(phi)
    assert doc["factors"][0] == {"kind": "rev"}
    assert autword_from_json(doc) == phi


def test_autword_rejects_bad_factor():
    with pytest.raises(TypeError):
        AutWord(("rev",))
