"""Desk-scale training: overfit the decoder on 16 synthetic referring scenes.

The loss is per-pixel binary cross-entropy between sigmoid(dot(f_q, pixel
embedding)) and the target object's mask: pixels inside the mask are pulled
toward the query embedding, everything else is pushed away. With the stub
backbone this runs in well under a minute on a laptop CPU and lands around
loss 0.02 / IoU 0.94.

Run:  python demos/03_train_on_synthetic_shapes.py
"""

import numpy as np
import torch

from affordkit.data import build_suite
from affordkit.encoders import EncoderConfig, build_dual_encoder
from affordkit.evaluation import evaluate_iou
from affordkit.metrics import binary_iou
from affordkit.model import load_checkpoint
from affordkit.training import TrainConfig, train

OUT_DIR = "demos/output/synthetic_run"

suite = build_suite(seed=0, n_samples=16, canvas=128)
dataset = [(img, expr, mask) for _, img, expr, mask in suite]
print("expressions in the suite:")
for _, _, expr, _ in suite[:6]:
    print(f"  {expr}")
print(f"  ... ({len(suite)} scenes total)")

enc_cfg = EncoderConfig(backbone="stub", seed=0)
encoder = build_dual_encoder(enc_cfg)

cfg = TrainConfig(
    learning_rate=5e-3,   # desk-scale override; the paper-scale default is 1e-4
    batch_size=8,
    max_steps=400,
    input_size=128,
    seed=0,
    checkpoint_dir=OUT_DIR,
)
torch.manual_seed(cfg.seed)
print(f"\ntraining: {cfg.max_steps} steps, batch {cfg.batch_size} ...")
result = train(cfg, dataset, encoder, enc_cfg)

curve = dict(result.loss_curve)
marks = [0, 50, 100, 200, 399]
print("loss curve:", "  ".join(f"step {s}: {curve[s]:.3f}" for s in marks))
print(f"final loss {result.final_loss:.4f}, encoder hash unchanged: "
      f"{result.encoder_hash == encoder.state_hash()}")

model, _ = load_checkpoint(result.checkpoint_path)
ious = evaluate_iou(model, dataset)
print(f"mean IoU@0.5 over the suite: {np.mean(ious):.3f} (min {np.min(ious):.3f})")
print(f"checkpoint: {result.checkpoint_path}")
print(f"loss curve CSV + resolved config sit next to it in {OUT_DIR}/")
