#!/usr/bin/env python3
"""A short tour of the tensor engine: build a graph, run backward, check it against finite differences."""

import numpy as np

from moble import tensor as T
from moble.tensor import Tensor

rng = np.random.default_rng(0)

# A two-layer network on a toy batch. Every op records its parents.
x = Tensor(rng.standard_normal((5, 4)).astype(np.float32))
w1 = Tensor(rng.standard_normal((4, 8)).astype(np.float32) * 0.5, requires_grad=True)
w2 = Tensor(rng.standard_normal((8, 3)).astype(np.float32) * 0.5, requires_grad=True)
targets = np.array([0, 2, 1, 1, 0])


def loss_fn():
    h = T.gelu(T.layer_norm(x @ w1, Tensor(np.ones(8, np.float32)), Tensor(np.zeros(8, np.float32))))
    return T.cross_entropy_logits(h @ w2, targets, ignore_id=-1)


loss = loss_fn()
record = T.backward(loss, [w1, w2])
print(f"loss = {float(loss.data):.5f}")
print("ops in topological order:", [n.op for n in record.nodes][:8], "...")
print("grad norms:", np.linalg.norm(w1.grad), np.linalg.norm(w2.grad))

# Central differences on 20 random coordinates, first in float32 ...
err32 = T.finite_diff_check(loss_fn, [w1, w2], h=1e-3, n_coords=20, seed=1)
print(f"float32 max relative error: {err32:.2e}")

# ... then with the forward pass shadowed in float64, which tightens the check.
for t in (x, w1, w2):
    t.data = t.data.astype(np.float64)
with T.float64_shadow():
    err64 = T.finite_diff_check(loss_fn, [w1, w2], h=1e-5, n_coords=20, seed=1)
print(f"float64 max relative error: {err64:.2e}")

# Masked softmax gives exactly zero probability to disallowed keys.
scores = Tensor(rng.standard_normal((2, 5)).astype(np.float32))
mask = np.array([[False, False, True, True, True], [False, False, False, False, True]])
print(T.masked_softmax_rows(scores, mask).data.round(3))
