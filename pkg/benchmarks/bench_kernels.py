"""Time the compiled kernels against the pure-Python fallback.

Usage: python3 benchmarks/bench_kernels.py [--type B --rank 5 --repeat 3]
"""

import argparse
import random
import timeit

from projrich import _pykernels
from projrich.coxeter import weyl_group
from projrich.root_data import build_root_system

try:
    from projrich import _ckernels
except ImportError:
    _ckernels = None


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--type", default="B")
    ap.add_argument("--rank", type=int, default=5)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()

    W = weyl_group(build_root_system(args.type, args.rank))
    A = W.affine
    right, parent = W._right, W._parent
    rng = random.Random(0)
    samples = [
        (tuple(rng.randint(-3, 3) for _ in range(W.rank)), A._inv_mask[rng.randrange(len(W))])
        for _ in range(20000)
    ]

    def lengths(mod):
        for chi, mask in samples:
            mod.im_length(chi, mask, A._pos_flat, W.rank)

    cases = {
        "mul_table": lambda mod: mod.mul_table(right, parent),
        "bruhat_cones": lambda mod: mod.bruhat_cones(right, parent),
        "im_length x20000": lengths,
    }
    print(f"group {W.rs.name}, |W| = {len(W)}")
    print(f"{'kernel':<20}{'python (s)':>12}{'cython (s)':>12}{'speedup':>10}")
    for name, fn in cases.items():
        py = min(timeit.repeat(lambda: fn(_pykernels), number=1, repeat=args.repeat))
        if _ckernels is None:
            print(f"{name:<20}{py:>12.4f}{'n/a':>12}{'n/a':>10}")
            continue
        cy = min(timeit.repeat(lambda: fn(_ckernels), number=1, repeat=args.repeat))
        assert fn(_ckernels) == fn(_pykernels)
        print(f"{name:<20}{py:>12.4f}{cy:>12.4f}{py / cy:>9.1f}x")


if __name__ == "__main__":
    main()
