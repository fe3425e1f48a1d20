"""Open-vocabulary querying: any prompt, no label set, no retraining.

Loads the checkpoint from demo 03 (trains one quickly if absent) and queries
one scene with prompts the training data never contained. Nothing on the
inference path validates prompts against a vocabulary; unseen text simply
lands wherever the embedding space puts it.

Run:  python demos/04_zero_shot_prompts.py
"""

from pathlib import Path

import numpy as np
import torch

from affordkit.data import build_suite
from affordkit.encoders import EncoderConfig, build_dual_encoder
from affordkit.evaluation import render_overlay
from affordkit.model import load_checkpoint
from affordkit.training import TrainConfig, train

CHECKPOINT = Path("demos/output/synthetic_run/final.pt")

suite = build_suite(seed=0, n_samples=16, canvas=128)

if not CHECKPOINT.exists():
    print("no checkpoint from demo 03 yet; training a quick one ...")
    enc_cfg = EncoderConfig(backbone="stub", seed=0)
    encoder = build_dual_encoder(enc_cfg)
    cfg = TrainConfig(learning_rate=5e-3, batch_size=8, max_steps=400,
                      input_size=128, seed=0,
                      checkpoint_dir=str(CHECKPOINT.parent))
    torch.manual_seed(cfg.seed)
    train(cfg, [(i, e, m) for _, i, e, m in suite], encoder, enc_cfg)

model, payload = load_checkpoint(CHECKPOINT)
print(f"loaded checkpoint (step {payload['train_meta']['step']})")

image, trained_expr = suite[0][1], suite[0][2]
print(f"\nscene 0's training expression was: {trained_expr!r}")

prompts = [
    trained_expr,          # in-distribution
    "the green thing",     # paraphrase never seen in training
    "draw on",             # action-style prompt, nothing like the train set
    "lock",
]
out_dir = Path("demos/output/prompts")
for prompt in prompts:
    amap = model.predict(image, prompt)
    logits = amap.logits[0].numpy()
    peak = np.unravel_index(logits.argmax(), logits.shape)
    print(f"  {prompt!r}: logits in [{logits.min():+.2f}, {logits.max():+.2f}], "
          f"peak at (y={peak[0]}, x={peak[1]})")
    render_overlay(image, logits, out_dir / f"{prompt.replace(' ', '_')}.png",
                   prompt=prompt)

print(f"\noverlays written to {out_dir}/")
print("with the stub backbone only the trained expressions localize")
print("meaningfully; point the encoder config at pretrained weights and the")
print("same code answers genuinely open-vocabulary action prompts.")
