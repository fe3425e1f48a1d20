"""Tour of the frozen dual-encoder interface.

Everything downstream (decoder, head, training) consumes exactly four visual
products and two text products. This script walks them using the stub
backbone, which needs no pretrained weights: a fixed-seed pooling pipeline
with the same channel widths as the pretrained tower (512/1024/2048, embed
512), so every shape you see here transfers unchanged.

Run:  python demos/01_features_and_embeddings.py
"""

import numpy as np

from affordkit.encoders import EncoderConfig, build_dual_encoder

encoder = build_dual_encoder(EncoderConfig(backbone="stub", seed=0))

print("=== image side ===")
rng = np.random.default_rng(0)
image = rng.uniform(size=(1, 416, 416, 3)).astype(np.float32)
batch = encoder.prepare_images(image)
feats = encoder.encode_image(batch)
print(f"input 416x416 ->")
print(f"  f1 (stride  8): {tuple(feats.f1.shape)}")
print(f"  f2 (stride 16): {tuple(feats.f2.shape)}")
print(f"  f3 (stride 32): {tuple(feats.f3.shape)}")
print(f"  f_s (global)  : {tuple(feats.f_s.shape)}")

again = encoder.encode_image(batch)
print(f"frozen + deterministic: re-encoding is bitwise identical -> "
      f"{bool((again.f1 == feats.f1).all())}")

print()
print("=== text side ===")
for prompt in ("swing", "type on", "the red circle"):
    seq = encoder.tokenize(prompt)
    text = encoder.encode_text(seq)
    ids = seq.ids[0, : int(seq.valid_len[0])].tolist()
    print(f"{prompt!r}: ids {ids} -> f_q {tuple(text.f_q.shape)}")

a = encoder.encode_text(encoder.tokenize("swing")).f_q[0]
b = encoder.encode_text(encoder.tokenize("sit on")).f_q[0]
cos = float(a @ b / (a.norm() * b.norm()))
print(f"cosine('swing', 'sit on') = {cos:.3f}  (distinct prompts separate)")

print()
print("the global widths agree, so pixel embeddings and text embeddings")
print(f"share one space: f_s width {feats.f_s.shape[1]} == "
      f"f_q width {a.shape[0]}")
