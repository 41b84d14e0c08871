"""Compare the compiled support kernel with the pure-Python fallback.

Each path runs in its own interpreter so that ``GAPMINE_DISABLE_JIT`` is read
at import time, exactly as a user would set it::

    python3 benchmarks/bench_kernels.py            # both paths, summary table
    python3 benchmarks/bench_kernels.py --worker   # one path, JSON on stdout
"""

from __future__ import annotations

import argparse
import json
import os
import subprocess
import sys
import time


def worker(repeat: int) -> dict:
    import numpy as np

    from gapmine import _kernels
    from gapmine.bench import synthetic_corpus
    from gapmine.dfs import mine_dfs
    from gapmine.model import MiningParams

    db = synthetic_corpus()
    enc = db.symbols.encode
    patterns = [np.asarray(enc(p), dtype=np.int64) for p in ("A", "AF", "AFH", "KDEL", "LLL", "CGW")]
    flat, offsets = db.flat, db.offsets

    # warm-up triggers compilation (or loads the on-disk cache)
    t0 = time.perf_counter()
    _kernels.support_flat(flat, offsets, patterns[0], 0, 3, 1, 10)
    warmup = time.perf_counter() - t0

    t0 = time.perf_counter()
    total = 0
    for _ in range(repeat):
        for p in patterns:
            total += int(_kernels.support_flat(flat, offsets, p, 0, 3, 1, 10))
    kernel = (time.perf_counter() - t0) / repeat

    params = MiningParams.build(80, (0, 3), (1, 10), enc("AFH"))
    t0 = time.perf_counter()
    found = len(mine_dfs(db, params))
    mining = time.perf_counter() - t0
    return {
        "jit": _kernels.HAS_NUMBA, "warmup_s": warmup, "kernel_s": kernel,
        "mine_dfs_s": mining, "checksum": total // repeat, "patterns": found,
    }


def run_path(disable_jit: bool, repeat: int) -> dict:
    env = dict(os.environ, GAPMINE_DISABLE_JIT="1" if disable_jit else "0")
    out = subprocess.run(
        [sys.executable, __file__, "--worker", "--repeat", str(repeat)],
        env=env, check=True, capture_output=True, text=True,
    )
    return json.loads(out.stdout)


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--worker", action="store_true")
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    if args.worker:
        print(json.dumps(worker(args.repeat)))
        return

    jit = run_path(False, args.repeat)
    py = run_path(True, args.repeat)
    if (jit["checksum"], jit["patterns"]) != (py["checksum"], py["patterns"]):
        sys.exit(f"paths disagree: {jit} vs {py}")
    print(f"{'path':<10}{'warmup s':>10}{'6 supports s':>14}{'mine_dfs s':>12}")
    for name, r in (("numba", jit), ("python", py)):
        print(f"{name:<10}{r['warmup_s']:>10.3f}{r['kernel_s']:>14.4f}{r['mine_dfs_s']:>12.3f}")
    print(f"speedup (supports): {py['kernel_s'] / jit['kernel_s']:.1f}x; "
          f"speedup (mining): {py['mine_dfs_s'] / jit['mine_dfs_s']:.1f}x")


if __name__ == "__main__":
    main()
