"""Compare the numba kernels with their numpy fallbacks.

Run: python benchmarks/bench_kernels.py --rows 100 --width 784 --repeats 50

Both paths are imported directly, so the ``RFNULL_NO_NUMBA`` flag does not
matter here. Outputs are checked for equality before timing.
"""

import argparse
import time

import numpy as np

from rfnull import _kernels as K


def best_ms(func, args, repeats):
    best = float("inf")
    for _ in range(repeats):
        t0 = time.perf_counter()
        func(*args)
        best = min(best, time.perf_counter() - t0)
    return best * 1000.0


def cases(rows, width, classes, rng):
    counts = np.ceil(width * np.clip(rng.normal(0.5, 0.05, rows), 0, 1)).astype(np.int64)
    u = rng.random((rows, int(counts.max())))
    logits = rng.normal(size=(rows, classes))
    labels = rng.integers(0, classes, rows)
    grad = rng.normal(size=(rows, width))
    pre = rng.normal(size=(rows, width))
    return {
        "zero_masks": ((u, counts, width), K.zero_masks_nb, K.zero_masks_np),
        "softmax_xent": ((logits, labels), K.softmax_xent_nb, K.softmax_xent_np),
        "relu_backward": ((grad, pre), K.relu_backward_nb, K.relu_backward_np),
    }


def main():
    p = argparse.ArgumentParser()
    p.add_argument("--rows", type=int, default=100)
    p.add_argument("--width", type=int, default=784)
    p.add_argument("--classes", type=int, default=10)
    p.add_argument("--repeats", type=int, default=50)
    p.add_argument("--seed", type=int, default=0)
    args = p.parse_args()

    if not K.NUMBA_AVAILABLE:
        print("numba is not installed; only the numpy path exists")
    rng = np.random.default_rng(args.seed)
    print(f"rows={args.rows} width={args.width} repeats={args.repeats} (best of)")
    print(f"{'kernel':<15}{'numba ms':>10}{'numpy ms':>10}{'speedup':>9}")
    for name, (a, nb, fallback) in cases(args.rows, args.width, args.classes, rng).items():
        # first call compiles
        out_nb, out_np = nb(*a), fallback(*a)
        if not isinstance(out_nb, tuple):
            out_nb, out_np = (out_nb,), (out_np,)
        for x, y in zip(out_nb, out_np):
            np.testing.assert_allclose(x, y, rtol=1e-12, atol=1e-12)
        t_nb = best_ms(nb, a, args.repeats)
        t_np = best_ms(fallback, a, args.repeats)
        print(f"{name:<15}{t_nb:>10.3f}{t_np:>10.3f}{t_np / max(t_nb, 1e-9):>8.2f}x")


if __name__ == "__main__":
    main()
