"""Anatomy of the trainable pyramid decoder.

The decoder is the only thing that ever trains. It projects the global
visual vector and up to three intermediate feature volumes into a common
width (3x3 conv + BN + ReLU each), fuses them coarse-to-fine with
parameter-free upsampling, and maps the fused stride-8 grid into the shared
embedding space (1x1 conv + BN + ReLU).

Run:  python demos/02_pyramid_fusion.py
"""

import numpy as np
import torch

from affordkit.decoder import DecoderConfig, FeaturePyramidDecoder
from affordkit.encoders import EncoderConfig, build_dual_encoder

encoder = build_dual_encoder(EncoderConfig(backbone="stub", seed=0))
rng = np.random.default_rng(1)
image = rng.uniform(size=(1, 128, 128, 3)).astype(np.float32)
feats = encoder.encode_image(encoder.prepare_images(image))

print("=== default configuration ===")
cfg = DecoderConfig()  # common width 64, output width 512, all three levels
decoder = FeaturePyramidDecoder(cfg).eval()
print(f"trainable parameters: {decoder.count_trainable_parameters():,} "
      f"(published budget: 2.71 M; bracket [2.2 M, 3.0 M])")

with torch.no_grad():
    projected = decoder.project(feats)
    print("projected widths:",
          {k: tuple(v.shape) for k, v in projected.items()})
    fused = decoder.fuse(projected)
    print(f"fused (stride 8): {tuple(fused.shape)}")
    dense = decoder.decode(fused)
    print(f"pixel embeddings: {tuple(dense.grid.shape)}  "
          f"<- one 512-d vector per stride-8 cell")

print()
print("=== the fusion walk, in words ===")
print("broadcast f_s over the coarsest active grid, add that lateral,")
print("then upsample x2 and add the next finer lateral until stride 8.")

print()
print("=== pyramid-depth ablation configs ===")
for levels in [(1,), (1, 2), (1, 2, 3)]:
    d = FeaturePyramidDecoder(DecoderConfig(active_levels=levels))
    print(f"  levels {levels}: {d.count_trainable_parameters():,} parameters")
print("disabled levels are never constructed; the chain still ends at stride 8.")

print()
print("=== upsampling modes ===")
for mode in ("bilinear", "nearest"):
    d = FeaturePyramidDecoder(DecoderConfig(upsample_mode=mode)).eval()
    with torch.no_grad():
        grid = d(feats).grid
    print(f"  {mode:9s}: output {tuple(grid.shape)}")
