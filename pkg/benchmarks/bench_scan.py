"""Compare the compiled and pure-Python scan kernels.

    python benchmarks/bench_scan.py --bound 200 --repeat 3
"""
import argparse
import time

from bezoutree import _kernels
from bezoutree.compat import scan_exceptional
from bezoutree.mat2 import eval_word

WORDS = ["T", "TTU", "TTS", "TTtSUT"]


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        start = time.perf_counter()
        result = fn()
        times.append(time.perf_counter() - start)
    return min(times), result


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--bound", type=int, default=200)
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    backends = _kernels.available()
    print(f"bound={args.bound} pairs/matrix={(2 * args.bound + 1) ** 2} backends={backends}")
    print(f"{'word':<8}" + "".join(f"{b:>12}" for b in backends) + f"{'speedup':>10}")
    for word in WORDS:
        A = eval_word(word)
        row, results = [], []
        for backend in backends:
            t, res = best_of(lambda: scan_exceptional(A, args.bound, backend=backend), args.repeat)
            row.append(t)
            results.append(res.pairs)
        assert all(r == results[0] for r in results), "backends disagree"
        speedup = f"{row[-1] / row[0]:.1f}x" if len(row) == 2 else "-"
        print(f"{word:<8}" + "".join(f"{t:>11.4f}s" for t in row) + f"{speedup:>10}")


if __name__ == "__main__":
    main()
