"""Detect an object class the detector never saw a box for.

The detector is finetuned on boxes of 8 base categories only.  Novel
categories get their classifier weights from the text tower, and the frozen
pretrained backbone adds its own region score.  This script renders fresh
images, each with one novel object, and prints what the detector finds.

Run after a full pipeline:
    dito gen-data && dito pretrain-clip && dito pretrain-dop && dito finetune
    python demos/detect_novel.py runs/desk
"""
import sys
from pathlib import Path

import numpy as np

from dito import config as C
from dito.boxes import iou
from dito.data import image_to_tensor, render_image
from dito.pipeline import load_detector
from dito.detector import detect

run = Path(sys.argv[1] if len(sys.argv) > 1 else "runs/desk")
cfg = C.load_config(run / "resolved_config.yaml")
model, frozen, table, st, _, _ = load_detector(cfg, run / "detector.ckpt")
spec = C.data_spec(cfg)
rng = np.random.default_rng(123)

hits = 0
for name in spec.novel_names:
    img, [(box, _)] = render_image(rng, spec, [name])
    dets = detect(image_to_tensor(img), model, frozen, table, st)
    if not dets:
        print(f"{name:>14}: nothing above threshold")
        continue
    top = dets[0]
    overlap = iou(top.box.as_tuple(), box.as_tuple())
    hits += top.label == name and overlap >= 0.5
    print(f"{name:>14}: top-1 {top.label!r} IoU {overlap:.2f}  p={top.p:.3f} z={top.z:.3f} score={top.s_ens:.3f}")
print(f"{hits}/{len(spec.novel_names)} novel objects found with the right label")
