"""Where does a text query land in the image?

Compares two ways of scoring image positions against a category phrase:
the backbone's own tokens projected into the joint space, and windows
embedded by the region head trained with region-level contrastive
pretraining.  Prints both maps as text and the pointing-game hit rate
over the eval split.

Run after `dito pretrain-dop`:
    python demos/region_heatmaps.py runs/desk
An ablation seed directory works too; its towers live in ../clip.
"""
import sys
from pathlib import Path

import torch

from dito import config as C
from dito.data import load_split
from dito.detector import encode_phrase
from dito.evaluation import normalize_heatmap, similarity_cosines
from dito.pipeline import data_dir, load_clip, load_dop, pointing_metrics

run = Path(sys.argv[1] if len(sys.argv) > 1 else "runs/desk")
cfg = C.load_config(run / "resolved_config.yaml")
clip_path = run / "clip.ckpt" if (run / "clip.ckpt").exists() else run.parent / "clip" / "clip.ckpt"
vit, text, vocab, _ = load_clip(cfg, clip_path)
fpn, head = load_dop(cfg)
for m in (vit, text, fpn, head):
    m.eval()
split = load_split(data_dir(cfg), "eval")
record = next(r for r in split.records if len(r.annotations) == 2)
i = split.records.index(record)
box, name = record.annotations[0]
with torch.no_grad():
    phrase = encode_phrase(name, cfg["finetune"]["templates"], text, vocab)
print(f"eval image {i}: query {name!r}, true box {tuple(round(v, 2) for v in box.as_tuple())}")
shades = " .:-=+*#%@"
for mode in ("backbone", "dop"):
    cos = similarity_cosines(split.images[i], phrase, mode, vit, fpn, head, cfg["heatmap"]["window"],
                             cfg["clip"]["grid"])
    heat = normalize_heatmap(cos, cfg["heatmap"]["guard"])
    print(f"\n{mode} map")
    for row in heat:
        print("  " + "".join(shades[min(int(v * len(shades)), len(shades) - 1)] * 2 for v in row.tolist()))
m = pointing_metrics(cfg, clip_path)
print(f"\npointing game over {m['pointing_n']} targets: backbone {100 * m['pointing_backbone']:.1f}%, "
      f"region head {100 * m['pointing_dop']:.1f}%")
