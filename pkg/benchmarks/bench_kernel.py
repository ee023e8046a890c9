"""Time the compiled model-search kernel against the pure-Python one.

    python benchmarks/bench_kernel.py [--repeat 3]

The workload is the characteristic grid (every subset of the seven
characteristics on one property, four assertion patterns) plus a handful
of two-property problems over three elements, where the search space gets
large enough for the difference to show.
"""

import argparse
import itertools
import statistics
import time

from owlet import _modelcheck_py
from owlet.iri import Iri
from owlet.model import Characteristic, ClassAssertion, ComplementOf, Domain, HasCharacteristic, \
    InverseOf, ObjectAssertion, Ontology, Range
from owlet.reasoner.models import compile_problem

try:
    from owlet import _modelcheck as compiled
except ImportError:
    compiled = None

EX = "http://ex.org/bench#"
P, Q = Iri(EX + "P"), Iri(EX + "Q")
A, B, C = Iri(EX + "a"), Iri(EX + "b"), Iri(EX + "c")


def grid():
    patterns = [(), ((A, B),), ((A, A),), ((A, B), (B, A))]
    chars = list(Characteristic)
    for mask, pattern in itertools.product(range(1 << len(chars)), patterns):
        axioms = [HasCharacteristic(P, c) for i, c in enumerate(chars) if mask >> i & 1]
        axioms += [ObjectAssertion(P, s, o) for s, o in pattern]
        yield compile_problem(Ontology(Iri(EX), axioms)), 2


def wide():
    # no model exists, so each search runs to exhaustion
    x = Iri(EX + "X")
    for chars in ([], [Characteristic.TRANSITIVE], [Characteristic.SYMMETRIC]):
        axioms = [HasCharacteristic(P, c) for c in chars] + [
            InverseOf(P, Q), Domain(Q, x), Range(P, ComplementOf(x)),
            ObjectAssertion(P, A, B), ObjectAssertion(Q, B, C), ClassAssertion(x, C),
        ]
        yield compile_problem(Ontology(Iri(EX), axioms)), 3


def run(kernel, problems) -> float:
    t = time.perf_counter()
    for problem, n in problems:
        for size in range(1, n + 1):
            kernel.satisfiable(*problem.args(size))
    return time.perf_counter() - t


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    workloads = {"grid (512 problems)": list(grid()), "two properties, three elements": list(wide())}
    kernels = [_modelcheck_py] + ([compiled] if compiled else [])
    if compiled is None:
        print("compiled kernel not built; timing the Python kernel only")
    for name, problems in workloads.items():
        times = {}
        for k in kernels:
            times[k.IMPLEMENTATION] = statistics.median(run(k, problems) for _ in range(args.repeat))
        line = ", ".join(f"{impl} {t * 1000:9.1f} ms" for impl, t in times.items())
        if len(times) == 2:
            line += f", speedup {times['python'] / times['cython']:.0f}x"
        print(f"{name:32s} {line}")


if __name__ == "__main__":
    main()
