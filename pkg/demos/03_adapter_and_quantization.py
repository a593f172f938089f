#!/usr/bin/env python3
"""Two follow-up questions about a trained run.

1. Can a ridge adapter fitted on a few known (input, memory) pairs bridge M1's
   memory into M2's decoder?
2. How much does quantizing or noising the memory cost its rightful decoder?
"""

import sys
from pathlib import Path

from moble.evaluation import cross_decode, score
from moble.experiment import Run
from moble.registry import load_checkpoint
from moble.threatlab import adapter_cross_decode, perturbation_sweep, train_adapter

run = Run(Path(sys.argv[1] if len(sys.argv) > 1 else "runs/default"))
m1, m2 = (load_checkpoint(run.checkpoint(n)) for n in ("M1", "M2"))
batches = run.eval_batches()[:2]
known = run.corpus("train")

base = score([cross_decode(m1, m2, b) for b in batches], batches, run.vocab, "M1", "M2")
print(f"zero-shot M1 -> M2 token accuracy: {base.token_pct:.2f}%")
for n_pairs in (64, 256, 1024):
    adapter = train_adapter(m1, m2, known[:n_pairs], run.vocab, lam=1e-2, names=("M1", "M2"))
    row = adapter_cross_decode(m1, adapter, m2, batches, run.vocab, ("M1", "M2"))
    print(f"adapter on {n_pairs:>4} pairs: exact {row.exact_pct:6.2f}  token {row.token_pct:6.2f}  "
          f"levsim {row.levsim_pct:6.2f}")

print("\nM1 self-decoding under memory perturbation")
for r in perturbation_sweep(m1, batches, run.vocab, bits=(16, 8, 4, 2), sigmas=(0.1, 0.5), seed=7, name="M1"):
    level = f"{r['bits']} bits" if r["mode"] == "quantize" else f"sigma {r['sigma']}"
    print(f"  {r['mode']:<9} {level:<10} token {r['token_pct']:6.2f}  exact {r['exact_pct']:6.2f}")
