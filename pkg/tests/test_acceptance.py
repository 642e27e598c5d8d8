"""Exit criteria.  Each test prints one PASS/FAIL line.

Run alone with ``pytest tests/test_acceptance.py -v`` or
``python tests/test_acceptance.py``.
"""

import random
import sys
import time
from contextlib import contextmanager
from pathlib import Path

import pytest

from thompson_twist.cli import run
from thompson_twist.groupf import (
    REV,
    REV_MATRIX,
    AutWord,
    ConjBy,
    ab,
    conj_by_tlike,
    h1_matrix,
    project_class,
    twisted_conjugate,
    verify_shift_lemma,
)
from thompson_twist.plmap import identity_f, invert_f, invert_tlike, validate_f
from thompson_twist.sampling import random_autword, random_dyadic, random_fmap, random_tlike
from thompson_twist.zlinalg import (
    INFINITE,
    IntMatrix,
    class_rep,
    det,
    reidemeister_of_matrix,
    snf,
    twisted_equiv_abelian,
)

from . import oracles

GOLDEN = Path(__file__).parent / "golden" / "demo_theorem.txt"
I2 = IntMatrix.identity(2)
M = IntMatrix.from_rows([[0, -1], [-1, 0]])
WINDOW = 8
MAX_BREAKS = 12


@pytest.fixture
def criterion(capsys):
    @contextmanager
    def report(label, budget=None):
        start = time.perf_counter()
        status = "FAIL"
        try:
            yield
            status = "PASS"
        finally:
            elapsed = time.perf_counter() - start
            over = budget is not None and elapsed >= budget
            if over:
                status = "FAIL"
            note = f", budget {budget}s" if budget is not None else ""
            with capsys.disabled():
                print(f"\n[{status}] {label} ({elapsed:.2f}s{note})")
        if over:
            pytest.fail(f"{label}: {elapsed:.2f}s exceeds {budget}s")

    return report


@pytest.fixture(scope="module")
def conj_samples():
    rng = random.Random(1001)
    out = []
    for _ in range(1000):
        f = random_fmap(rng, window=WINDOW, max_breaks=MAX_BREAKS)
        g = random_tlike(rng, window=WINDOW, max_breaks=MAX_BREAKS)
        out.append((f, g))
    return out


def test_c01_rev_matrix(criterion):
    with criterion("C1 h1_matrix([Rev]) = [[0,-1],[-1,0]], probes agree", budget=1):
        # h1_matrix raises ProbeMismatch if the probe route disagrees
        assert h1_matrix(AutWord((REV,))).to_rows() == [[0, -1], [-1, 0]]


def test_c02_main_theorem_route(criterion):
    with criterion("C2 det(I-M) = 0 and R(M^k) = INFINITE, 0 <= k <= 10", budget=1):
        assert det(I2 - M) == 0
        assert reidemeister_of_matrix(M) is INFINITE
        for k in range(11):
            assert M ** k == (I2 if k % 2 == 0 else M)
            assert reidemeister_of_matrix(M ** k) is INFINITE


def test_c03_gamma_distinct(criterion):
    with criterion("C3 (0,a) ~ (0,b) under M iff a = b, |a|,|b| <= 100", budget=5):
        for a in range(-100, 101):
            for b in range(-100, 101):
                assert twisted_equiv_abelian((0, a), (0, b), M) == (a == b)


def test_c04_lemma22_invariance(criterion, conj_samples):
    rng = random.Random(44)
    with criterion("C4 1000 T-like conjugations keep (f_l, f_r); 100-point oracle agreement", budget=60):
        for f, g in conj_samples:
            assert len(f.breaks) <= MAX_BREAKS and len(g.core) <= MAX_BREAKS
            assert all(-WINDOW <= x <= WINDOW for x, _ in f.breaks + g.core)
            k = conj_by_tlike(f, g)
            assert (k.l, k.r) == (f.l, f.r)
            gi = invert_tlike(g)
            for _ in range(100):
                x = random_dyadic(rng, -3 * WINDOW, 3 * WINDOW, 6)
                assert k(x) == g(f(gi(x)))


def test_c05_corollary23(criterion, conj_samples):
    with criterion("C5 ab(g f g^-1) = ab(f) on the same 1000 samples"):
        for f, g in conj_samples:
            assert ab(conj_by_tlike(f, g)) == ab(f)


def test_c06_corollary24(criterion):
    rng = random.Random(66)
    with criterion("C6 h1 image over 200 words of length <= 6 is exactly {I, M}; M^2 = I"):
        image = set()
        for _ in range(200):
            phi = random_autword(rng, max_len=6, window=4, max_breaks=8)
            image.add(h1_matrix(phi))
        assert image == {I2, REV_MATRIX}
        assert REV_MATRIX @ REV_MATRIX == I2


def test_c07_lemma31(criterion):
    rng = random.Random(77)
    with criterion("C7 verify_shift_lemma on 400 random tuples", budget=60):
        for _ in range(400):
            g, k, x = (random_fmap(rng, window=WINDOW, max_breaks=MAX_BREAKS) for _ in range(3))
            phi = random_autword(rng, max_len=3, window=4, max_breaks=8)
            assert verify_shift_lemma(g, k, x, phi)


def test_c08_theorem33(criterion):
    rng = random.Random(88)
    g0 = random_tlike(rng, window=WINDOW, max_breaks=MAX_BREAKS)
    with criterion("C8 project_class invariant under 500 twisted conjugations per phi; 2 classes for [[0,-1],[1,0]]"):
        for phi in (AutWord(), AutWord((REV,)), AutWord((ConjBy(g0),))):
            for _ in range(500):
                f = random_fmap(rng, window=WINDOW, max_breaks=MAX_BREAKS)
                h = random_fmap(rng, window=WINDOW, max_breaks=MAX_BREAKS)
                assert project_class(twisted_conjugate(h, f, phi), phi) == project_class(f, phi)
        a = IntMatrix.from_rows([[0, -1], [1, 0]])
        reps = {class_rep((u, v), a) for u in range(-10, 11) for v in range(-10, 11)}
        assert len(reps) == reidemeister_of_matrix(a) == abs(det(I2 - a)) == 2


def test_c09_snf_oracle(criterion):
    rng = random.Random(99)
    with criterion("C9 SNF matches minor-gcd oracle on 1000 matrices up to 4x4", budget=30):
        for _ in range(1000):
            m, n = rng.randint(1, 4), rng.randint(1, 4)
            rows = [[rng.randint(-9, 9) for _ in range(n)] for _ in range(m)]
            a = IntMatrix.from_rows(rows)
            res = snf(a)
            assert res.diagonal == oracles.minor_gcd_invariants(rows)
            assert res.U @ a @ res.V == res.D
            assert abs(det(res.U)) == 1 and abs(det(res.V)) == 1


def test_c10_group_axioms(criterion):
    rng = random.Random(1010)
    e = identity_f()
    with criterion("C10 associativity, identity, inverse, closure on 500 triples"):
        for _ in range(500):
            f, g, h = (random_fmap(rng, window=WINDOW, max_breaks=MAX_BREAKS) for _ in range(3))
            assert (f * g) * h == f * (g * h)
            assert f * e == f == e * f
            assert f * invert_f(f) == e == invert_f(f) * f
            for out in (f * g, invert_f(h)):
                assert validate_f(out.breaks, out.l, out.r) == out


def test_c11_demo_golden(criterion, monkeypatch):
    import io

    monkeypatch.setenv("THOMPSON_TWIST_SEED", "0")
    with criterion("C11 demo-theorem byte-identical across runs and to the golden file"):
        outs = []
        for _ in range(2):
            buf = io.StringIO()
            assert run(["demo-theorem"], stdout=buf) == 0
            outs.append(buf.getvalue())
        assert outs[0] == outs[1] == GOLDEN.read_text()


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-v"]))
