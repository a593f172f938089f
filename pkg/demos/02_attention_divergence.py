#!/usr/bin/env python3
"""Where do two seeds disagree?  Weight distance and layer-0 attention on a probe sentence.

Reads checkpoints from a finished run (``moble run-all --out runs/default``).
Pass another run directory as the first argument.
"""

import sys
from pathlib import Path

import numpy as np

from moble.data import build_vocab
from moble.diagnostics import attn_cosine, attn_kl, capture_attention, probe_batch, weight_l2
from moble.registry import load_checkpoint

run = Path(sys.argv[1] if len(sys.argv) > 1 else "runs/default")
names = ["M1", "M2", "M3", "M1_CLONE"]
models = {n: load_checkpoint(run / "checkpoints" / f"{n}.mobl") for n in names}
vocab = build_vocab()
probe = probe_batch(vocab)

caps = {n: capture_attention(m, probe, "encoder_self_l0") for n, m in models.items()}

print("pair              weight L2      KL    cosine")
for a, b in (("M1", "M2"), ("M1", "M3"), ("M2", "M3"), ("M1", "M1_CLONE")):
    print(f"{a:>8} vs {b:<9} {weight_l2(models[a], models[b]):9.2f}  {attn_kl(caps[a], caps[b]):.4f}"
          f"  {attn_cosine(caps[a], caps[b]):.4f}")

# A coarse text heatmap of where each query position looks in M1 and M2.
shades = " .:-=+*#%@"
chars = ["<s>"] + list(probe.texts[0]) + ["</s>"]
for n in ("M1", "M2"):
    m = caps[n].maps[0]
    print(f"\n{n}: encoder layer-0 attention, head mean (rows = queries)")
    print("      " + "".join(c[0] if len(c) == 1 else "^" for c in chars))
    for q, row in enumerate(m):
        scaled = np.minimum((row / row.max() * (len(shades) - 1)).round().astype(int), len(shades) - 1)
        print(f"{chars[q]:>5} " + "".join(shades[i] for i in scaled))
