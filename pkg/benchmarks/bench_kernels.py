"""Compare the compiled and numpy kernel backends.

    python3 benchmarks/bench_kernels.py [--repeat 5]

Times the adaptive volume quadrature (which calls the triangle kernel many
thousands of times) and the slope-length sweep, once per available backend.
"""

import argparse
import statistics
import time

from gex import kernels, volume
from gex.geometry import angles


def _time(fn, repeat):
    samples = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        samples.append(time.perf_counter() - t0)
    return statistics.median(samples)


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3)
    parser.add_argument("--g", type=int, default=50, help="genus for the quadrature benchmark")
    parser.add_argument("--bound", type=int, default=400, help="coefficient bound for the slope sweep")
    args = parser.parse_args(argv)

    a = angles(args.g)
    rows = []
    for name, mod in sorted(kernels.backends().items()):
        saved = volume.kernels.triangle_and_children
        volume.kernels.triangle_and_children = mod.triangle_and_children
        try:
            tq = _time(lambda: volume.tet_volume(a, 1e-8), args.repeat)
            val = volume.tet_volume(a, 1e-8).value
        finally:
            volume.kernels.triangle_and_children = saved
        ts = _time(lambda: mod.slope_table(args.bound, 4.8, -1.6, 43.2), args.repeat)
        rows.append((name, tq, ts, val))

    print(f"{'backend':<8} {'quadrature g=' + str(args.g):>18} {'slopes b=' + str(args.bound):>14}  value")
    for name, tq, ts, val in rows:
        print(f"{name:<8} {tq * 1e3:>15.1f} ms {ts * 1e3:>11.1f} ms  {val:.15f}")
    if len(rows) == 2:
        (_, q0, s0, _), (_, q1, s1, _) = rows
        print(f"speedup (python / cython): quadrature x{q1 / q0:.1f}, slopes x{s1 / s0:.1f}")


if __name__ == "__main__":
    main()
