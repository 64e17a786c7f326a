"""Compare the compiled exponent kernel against the pure-Python twin.

Times the raw kernel operations on identical workloads, then an
end-to-end Groebner workload in a subprocess per backend (backend choice
is made at import, so the full-stack comparison needs fresh interpreters).

Usage: python benchmarks/bench_kernel.py [--quick]
"""

import os
import random
import subprocess
import sys
import time

sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "src"))

from skewpbw import _kernel_py as kp

try:
    from skewpbw import _kernel_c as kc
except ImportError:
    kc = None


def bench_micro(mod, ops):
    rng = random.Random(1)
    exps = [tuple(rng.randint(0, 8) for _ in range(4)) for _ in range(400)]
    leads = exps[:40]
    start = time.perf_counter()
    for _ in range(ops):
        for e in exps:
            mod.deglex_key(e)
            mod.degrevlex_key(e)
        for e in exps:
            mod.find_divisor(leads, e)
    return time.perf_counter() - start


GB_WORKLOAD = r"""
import random, time, sys
from skewpbw import kernels
from skewpbw.geometry import random_polynomial
from skewpbw.groebner import left_groebner, two_sided_saturate
from skewpbw.presentation import quantum_plane
from skewpbw.scalars import FieldSpec, get_field

F = get_field(FieldSpec.prime(5))
pres = quantum_plane(F, F.from_int(2))
rng = random.Random(3)
start = time.perf_counter()
for _ in range(ROUNDS):
    pres._insert_cache.clear()
    gens = [random_polynomial(pres, rng, 6, 5) for _ in range(4)]
    gens = [g for g in gens if not g.is_zero()]
    if gens:
        left_groebner(gens)
        two_sided_saturate(gens)
print(f"{kernels.BACKEND} {time.perf_counter() - start:.3f}")
"""


def bench_full(pure: bool, rounds: int) -> str:
    env = dict(os.environ)
    env["PYTHONPATH"] = os.path.join(os.path.dirname(__file__), "..", "src")
    if pure:
        env["SKEWPBW_PURE"] = "1"
    else:
        env.pop("SKEWPBW_PURE", None)
    code = GB_WORKLOAD.replace("ROUNDS", str(rounds))
    out = subprocess.run(
        [sys.executable, "-c", code], env=env, capture_output=True, text=True
    )
    return out.stdout.strip() or out.stderr.strip()


def main():
    quick = "--quick" in sys.argv
    ops = 20 if quick else 100
    rounds = 20 if quick else 80

    t_py = bench_micro(kp, ops)
    print(f"micro kernel  pure-python: {t_py:.3f}s")
    if kc is not None:
        t_c = bench_micro(kc, ops)
        print(f"micro kernel  compiled:    {t_c:.3f}s  (x{t_py / t_c:.2f})")
    else:
        print("micro kernel  compiled:    not built")

    print(f"groebner workload ({rounds} rounds), backend + seconds:")
    print("  " + bench_full(pure=True, rounds=rounds))
    if kc is not None:
        print("  " + bench_full(pure=False, rounds=rounds))


if __name__ == "__main__":
    main()
