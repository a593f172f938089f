#!/usr/bin/env python3
"""Train three small autoencoders that differ only in their seed, then swap decoders.

A reduced recipe (narrow model, short corpus) so the whole story runs in a few
minutes on a laptop. The full-size protocol lives behind ``moble run-all``.
"""

import logging
import time

from moble.data import build_vocab, generate_corpus, make_batches
from moble.evaluation import binding_advantage, cross_decode, pair_matrix
from moble.trainer import TrainConfig, train
from moble.transformer import ModelConfig, encode, init_model

logging.basicConfig(level=logging.INFO, format="%(message)s")

vocab = build_vocab()
train_texts = generate_corpus(1234, 3000, vocab, 4, 12)
test_texts = generate_corpus(1235, 128, vocab, 4, 12)
cfg = ModelConfig(d_model=64, n_layers=2, n_heads=4, d_ff=128, dropout=0.1)

models = {}
for name, seed in (("A", 111), ("B", 222), ("C", 333)):
    t0 = time.time()
    model = init_model(cfg, seed)
    trace = train(model, train_texts, TrainConfig(epochs=12, batch_size=64, lr=1e-3, seed=seed), vocab)
    print(f"model {name} (seed {seed}): loss {trace[0]:.3f} -> {trace[-1]:.3f} in {time.time() - t0:.0f}s")
    models[name] = model

# Same memory, three different decoders.
batch = make_batches(test_texts[:4], vocab, 4)[0]
memory = encode(models["A"], batch)
for dec in "ABC":
    hyps = cross_decode(models["A"], models[dec], batch, memory).texts(vocab)
    print(f"\nA's memory decoded by {dec}:")
    for ref, hyp in zip(batch.texts, hyps):
        print(f"  {ref!r:>16} -> {hyp!r}")

batches = make_batches(test_texts, vocab, 64)
rows = pair_matrix(models, batches, vocab)
print("\nencoder -> decoder   exact   token   levsim")
for r in rows:
    print(f"   {r.encoder}   ->   {r.decoder}    {r.exact_pct:6.2f}  {r.token_pct:6.2f}  {r.levsim_pct:6.2f}")
print(f"\nbinding advantage: {binding_advantage(rows):.1f} points")
