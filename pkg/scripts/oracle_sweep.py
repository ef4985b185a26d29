"""Compare the search engine with brute force on every small connected graph.

    python3 scripts/oracle_sweep.py --max-edges 9 --targets P3 C3 C4 --n 1 2 3
"""

import argparse
import sys
import time
from dataclasses import dataclass, field

from sizeramsey.arrowing import MAX_ORACLE_EDGES, has_good_colouring, naive_arrowing_oracle
from sizeramsey.graph6 import encode
from sizeramsey.patterns import TargetPattern
from sizeramsey.search import connected_classes


@dataclass
class SweepConfig:
    max_edges: int = 9
    targets: list[str] = field(default_factory=lambda: ["P3", "C3", "C4"])
    ns: list[int] = field(default_factory=lambda: [1, 2, 3])


def run(cfg: SweepConfig) -> int:
    if cfg.max_edges > MAX_ORACLE_EDGES:
        raise SystemExit(f"brute force is limited to {MAX_ORACLE_EDGES} edges")
    targets = [TargetPattern.parse(t) for t in cfg.targets]
    mismatches = 0
    for m in range(1, cfg.max_edges + 1):
        t0 = time.perf_counter()
        graphs = connected_classes(m)
        arrowing = 0
        for g in graphs:
            for h in targets:
                for n in cfg.ns:
                    fast = has_good_colouring(g, n, h).arrows
                    slow = naive_arrowing_oracle(g, n, h).arrows
                    arrowing += fast
                    if fast != slow:
                        mismatches += 1
                        print(f"MISMATCH {encode(g)} n={n} {h}: search={fast} brute={slow}")
        print(f"m={m:2d} classes={len(graphs):4d} arrowing_instances={arrowing:5d} "
              f"{time.perf_counter() - t0:.1f}s")
    print(f"mismatches: {mismatches}")
    return 1 if mismatches else 0


def main() -> int:
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--max-edges", type=int, default=9)
    p.add_argument("--targets", nargs="+", default=["P3", "C3", "C4"])
    p.add_argument("--n", dest="ns", type=int, nargs="+", default=[1, 2, 3])
    return run(SweepConfig(**vars(p.parse_args())))


if __name__ == "__main__":
    sys.exit(main())
