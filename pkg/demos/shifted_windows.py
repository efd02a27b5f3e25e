"""Why averaging a shifted copy helps a windowed backbone.

A backbone whose attention is confined to fixed windows treats a token
differently depending on where the window borders fall.  Rolling the input
by half a window moves every border, so the plain backbone's output does
not simply roll along.  Averaging the plain pass with a rolled-and-unrolled
pass through the same weights removes that dependence for half-window rolls.

Run: python demos/shifted_windows.py
"""
import torch

from dito.swl import compute_shift_size, swl_forward
from dito.tensor import roll2d
from dito.vit import ViTConfig, VisionTransformer

torch.manual_seed(0)
vit = VisionTransformer(ViTConfig(global_layers=0)).double()
with torch.no_grad():
    vit.pos_embed.zero_()  # position-free blocks, so only the window layout breaks symmetry

tokens = torch.randn(1, 8, 8, 64, dtype=torch.float64)
m, s = compute_shift_size(64, 8, grid=2, q=0.5)
print(f"token grid 8x8, 2x2 windows of M={m} tokens, shift s={s}")


def roll_error(f):
    return (f(roll2d(tokens, s, s)) - roll2d(f(tokens), s, s)).abs().max().item()


plain = roll_error(vit.forward_blocks)
shifted = roll_error(lambda t: swl_forward(t, vit.forward_blocks, s))
print(f"roll by {s}: plain backbone error {plain:.3e}, shifted-window average error {shifted:.3e}")

# a shift of a whole window maps the layout onto itself, so the average is just the plain pass
_, full = compute_shift_size(64, 8, grid=2, q=1.0)
same = (swl_forward(tokens, vit.forward_blocks, full) - vit.forward_blocks(tokens)).abs().max().item()
print(f"shift by a whole window (s={full}): difference from plain backbone {same:.3e}")
