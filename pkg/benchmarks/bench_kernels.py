"""Numba kernels against their numpy twins.

    python3 benchmarks/bench_kernels.py            # kernels only
    python3 benchmarks/bench_kernels.py --train 300

Kernel timings call both namespaces in one process. ``--train`` also times
that many plain GAN training steps in two subprocesses, one per value of
MGGAN_DISABLE_NUMBA, since the flag is read once at import.
"""

import argparse
import os
import subprocess
import sys
import timeit

import numpy as np

from mggan import kernels
from mggan.metrics import MsSsimParams

TRAIN_SNIPPET = """
import time
from mggan.data import mixture_sampler, ring_mixture
from mggan.training import TrainConfig, train
cfg = TrainConfig(guidance=False, steps={steps}, eval_interval={steps}, seed=0)
t0 = time.perf_counter()
train(cfg, mixture_sampler(ring_mixture(8, 2.0, 0.01)))
print(time.perf_counter() - t0)
"""


def cases():
    rng = np.random.default_rng(0)
    out = []
    for n in (128 * 128, 1024 * 1024):
        a = rng.standard_normal(n).astype(np.float32)
        out.append((f"all_finite n={n}", "all_finite", (a,)))
    for n in (128 * 128, 1024 * 1024):
        p, g = rng.standard_normal((2, n)).astype(np.float32)
        m, v = np.zeros(n, np.float32), np.zeros(n, np.float32)
        f = np.float32
        out.append((f"adam_update n={n}", "adam_update",
                    (p, g, m, v, f(2e-4), f(0.5), f(0.999), f(1e-8), f(0.5), f(0.001))))
    centers = rng.standard_normal((8, 2))
    pts = rng.standard_normal((20_000, 2))
    out.append(("nearest_center 20000x8", "nearest_center", (pts, centers)))
    win = MsSsimParams().window()
    stack = rng.uniform(size=(5, 176, 176))
    out.append(("gaussian_filter 5x176x176", "gaussian_filter_valid", (stack, win)))
    canvas = np.zeros((512, 512, 3), np.uint8)
    out.append(("rasterize 20000 pts", "rasterize_points",
                (canvas, pts, -3.0, 3.0, np.array([255, 0, 0], np.uint8))))
    return out


def bench(fn, args, repeat):
    fn(*args)  # compile / warm
    number = max(1, int(0.2 / max(min(timeit.repeat(lambda: fn(*args), number=1, repeat=3)), 1e-7)))
    best = min(timeit.repeat(lambda: fn(*args), number=number, repeat=repeat))
    return best / number


def train_time(steps, disable):
    env = dict(os.environ, MGGAN_DISABLE_NUMBA="1" if disable else "0")
    out = subprocess.run([sys.executable, "-c", TRAIN_SNIPPET.format(steps=steps)],
                         env=env, capture_output=True, text=True, check=True)
    return float(out.stdout.strip().splitlines()[-1])


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--train", type=int, default=0, metavar="STEPS")
    args = ap.parse_args(argv)

    print(f"{'kernel':<28}{'numpy us':>12}{'numba us':>12}{'speedup':>10}")
    for label, name, a in cases():
        t_np = bench(getattr(kernels.NUMPY, name), a, args.repeat)
        t_nb = bench(getattr(kernels.NUMBA, name), a, args.repeat)
        print(f"{label:<28}{t_np * 1e6:>12.1f}{t_nb * 1e6:>12.1f}{t_np / t_nb:>9.2f}x")
    if args.train:
        t_np = train_time(args.train, disable=True)
        t_nb = train_time(args.train, disable=False)
        print(f"{args.train} GAN steps: numpy {t_np:.2f}s, numba {t_nb:.2f}s, speedup {t_np / t_nb:.2f}x")


if __name__ == "__main__":
    main()
