"""Compare the compiled kernels with the pure-Python fallback.

    python3 benchmarks/bench_kernels.py [--repeat N]

Each workload runs on the same random contexts through both backends; the
results are checked for equality before timings are reported.
"""

import argparse
import timeit

from richfca import _pykernels
from richfca.verifier import random_context

try:
    from richfca import _ckernels
except ImportError:
    _ckernels = None


def workloads():
    small = [random_context(4, 4, 0.5, (1, i)) for i in range(500)]
    medium = [random_context(10, 10, 0.5, (2, i)) for i in range(50)]
    large = [random_context(16, 16, 0.5, (3, i)) for i in range(5)]

    def args(K):
        return K.rows, K.cols, K.n_objects, K.n_attributes

    def count(mod, ctxs):
        return [mod.count_concepts(*args(K)) for K in ctxs]

    def systems(mod, ctxs):
        out = []
        for K in ctxs:
            for m in range(K.n_attributes):
                r = K.all_objects & ~K.cols[m]
                out.append(mod.complete_system(*args(K), r))
        return out

    def mixgens(mod, ctxs):
        return [mod.is_mixgen(*args(K), r, s) for K in ctxs
                for r in (0, 0b0101, 0b1111) for s in range(16)]

    return [
        ("count_concepts 500x 4x4", count, small),
        ("count_concepts 50x 10x10", count, medium),
        ("count_concepts 5x 16x16", count, large),
        ("complete_system 500x 4x4", systems, small),
        ("complete_system 50x 10x10", systems, medium),
        ("is_mixgen 500x 4x4", mixgens, small),
    ]


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()
    if _ckernels is None:
        raise SystemExit("compiled extension not built; run pip install -e . first")
    print(f"{'workload':<28}{'python':>10}{'cython':>10}{'speedup':>9}")
    for name, fn, ctxs in workloads():
        assert fn(_pykernels, ctxs) == fn(_ckernels, ctxs), name
        t_py = min(timeit.repeat(lambda: fn(_pykernels, ctxs), number=1, repeat=args.repeat))
        t_c = min(timeit.repeat(lambda: fn(_ckernels, ctxs), number=1, repeat=args.repeat))
        print(f"{name:<28}{t_py:>9.3f}s{t_c:>9.3f}s{t_py / t_c:>8.1f}x")


if __name__ == "__main__":
    main()
