"""Benchmark the compiled kernel against the pure-Python fallback.

Run from the repository root after building the extension in place:

    python setup.py build_ext --inplace
    python benchmarks/bench_kernel.py
"""

import pathlib
import random
import sys
import time

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parent.parent / "src"))

from finframe import kernel
from finframe.builders import from_topology, random_topology, standard_frame


def _time(fn, repeat=3):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def bench_enumeration(backend, frames):
    def run():
        for f in frames:
            backend.sublocale_masks(f.size, f.top, f.meet_table, f.heyting_column_masks())
    return _time(run)


def bench_family_laws(backend, frames, subsets_per_frame):
    def run():
        for f, subsets in zip(frames, subsets_per_frame):
            backend.family_law_failures(f.size, f.bottom, f.top, f.meet_table,
                                        f.join_table, f.heyting_table, subsets)
    return _time(run)


def bench_pointwise(backend, frames):
    def run():
        for f in frames:
            backend.pointwise_law_failures(f.size, f.bottom, f.top, f.up,
                                           f.meet_table, f.join_table, f.heyting_table)
    return _time(run)


def main():
    rng = random.Random(0)
    enum_frames = [standard_frame("boolean", 4)]
    enum_frames += [from_topology(random_topology(4, s)) for s in range(40)]
    law_frames = [from_topology(random_topology(5, s)) for s in range(40)]
    subsets = [[rng.getrandbits(f.size) for _ in range(1000)] for f in law_frames]

    rows = [
        ("sublocale enumeration (41 frames, <=16 elts)",
         lambda b: bench_enumeration(b, enum_frames)),
        ("pointwise law scan (40 frames, <=32 elts)",
         lambda b: bench_pointwise(b, law_frames)),
        ("family law scan (40 frames x 1000 subsets)",
         lambda b: bench_family_laws(b, law_frames, subsets)),
    ]

    backends = {name: kernel.get_backend(name) for name in kernel.available_backends()}
    print(f"available backends: {', '.join(backends)}")
    header = f"{'kernel':<46} " + " ".join(f"{n:>10}" for n in backends)
    print(header)
    print("-" * len(header))
    for label, runner in rows:
        times = {n: runner(b) for n, b in backends.items()}
        cells = " ".join(f"{times[n] * 1000:9.1f}ms" for n in backends)
        line = f"{label:<46} {cells}"
        if "compiled" in times and "pure" in times and times["compiled"] > 0:
            line += f"   (x{times['pure'] / times['compiled']:.1f})"
        print(line)


if __name__ == "__main__":
    main()
