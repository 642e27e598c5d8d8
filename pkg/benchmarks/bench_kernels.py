"""Compare the compiled and pure-Python kernels on the same workloads.

    python benchmarks/bench_kernels.py [--pairs 300] [--repeat 3]

Each workload calls the kernel functions directly, so the numbers exclude
the object layer in plmap/groupf.
"""

import argparse
import random
import time

from thompson_twist import kernels
from thompson_twist.groupf import conj_window
from thompson_twist.plmap import invert_tlike
from thompson_twist.sampling import random_dyadic, random_fmap, random_tlike


def workloads(n, seed):
    rng = random.Random(seed)
    fs = [random_fmap(rng) for _ in range(n)]
    hs = [random_fmap(rng) for _ in range(n)]
    gs = [random_tlike(rng) for _ in range(n)]
    xs = [random_dyadic(rng, -40, 40, 8).pair for _ in range(20 * n)]
    conj = []
    for f, g in zip(fs, gs):
        gi = invert_tlike(g)
        a, b = conj_window(f, g)
        conj.append((f._pts, f._slopes, f.l, f.r, g._pts, g._slopes, g._lo, g._hi,
                     gi._pts, gi._slopes, gi._lo, gi._hi, a.num, a.exp, b.num, b.exp))

    def dyadic_ops(k):
        for (an, ak), (bn, bk) in zip(xs, xs[1:]):
            k.cmp(an, ak, bn, bk)
            k.mul_pow2(*k.add(an, ak, bn, bk), 3)
            k.sub(an, ak, bn, bk)

    def evaluate(k):
        for i, (xn, xk) in enumerate(xs):
            f = fs[i % n]
            g = gs[i % n]
            k.eval_f(f._pts, f._slopes, f.l, f.r, xn, xk)
            lo, hi = g._lo, g._hi
            k.eval_periodic(g._pts, g._slopes, lo[0], lo[1], hi[0], hi[1], xn, xk)

    def compose(k):
        for f, h in zip(fs, hs):
            k.compose_f(f._pts, f._slopes, f.l, f.r, h._pts, h._slopes, h.l, h.r)

    def conjugate(k):
        for args in conj:
            pts = k.conj_vertices(*args)
            k.prune(pts, k.segment_slopes(pts), True)

    return {"dyadic ops": dyadic_ops, "evaluate": evaluate, "compose": compose, "conjugate": conjugate}


def best_of(fn, module, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn(module)
        best = min(best, time.perf_counter() - t0)
    return best


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--pairs", type=int, default=300)
    p.add_argument("--repeat", type=int, default=3)
    p.add_argument("--seed", type=int, default=0)
    args = p.parse_args()

    backends = kernels.available_backends()
    if "cython" not in backends:
        print("compiled kernels not built; only the pure-Python backend is available")
    names = list(backends)
    print(f"{'workload':<12}" + "".join(f"{name + ' (s)':>14}" for name in names) + f"{'speedup':>10}")
    for label, fn in workloads(args.pairs, args.seed).items():
        times = [best_of(fn, backends[name], args.repeat) for name in names]
        speed = f"{times[0] / times[-1]:.2f}x" if len(times) > 1 else "-"
        print(f"{label:<12}" + "".join(f"{t:>14.4f}" for t in times) + f"{speed:>10}")


if __name__ == "__main__":
    main()
