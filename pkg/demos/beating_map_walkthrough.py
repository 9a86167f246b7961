"""End-to-end walkthrough for a single parameter set: simulate the rephasing
beating map of a homodimer with uncorrelated site noise, quantify how much of
the diagonal-peak beating is genuine (rather than cross-peak tail overlap),
and write grid files that the TypeScript renderer in frontend/ can turn into
annotated heatmaps.

Run:  python3 demos/beating_map_walkthrough.py
Then: node frontend/dist/cli.js --in demos/out/beating_map.grid \
          --slice omega2=193 --out demos/out/beating_map.png
"""

import os

import numpy as np

from exciton2des.bath import BathSpec
from exciton2des.beating import beating_map, overlap_diagnostic, peak_trace
from exciton2des.gridfile import GridFile, write_grid
from exciton2des.liouville import build_generator
from exciton2des.model import DimerParams, exciton_basis
from exciton2des.response import DipoleConfig

out_dir = os.path.join(os.path.dirname(__file__), "out")
os.makedirs(out_dir, exist_ok=True)

params = DimerParams(omega1=12500.0, omega2=12500.0, coupling=100.0)
bath = BathSpec(reorg_energy=50.0, relaxation_rate=0.02, shift=200.0,
                temperature=77.0, corr_length=1e-3)
basis = exciton_basis(params)
gen = build_generator(basis, bath)
cfg = DipoleConfig()

w1 = np.linspace(12200.0, 12800.0, 121)
w2 = np.linspace(-400.0, 400.0, 321)
bmap = beating_map(basis, gen, cfg, w1, w2, w1)

print("peak beating-trace maxima (map normalized to 1):")
for label in ("R11", "R12", "R21", "R22"):
    tr = peak_trace(bmap, label, basis)
    print(f"  {label}: {tr.max():.4f} at omega2 = {bmap.w2[np.argmax(tr)]:+.0f} cm^-1")

diag = overlap_diagnostic(bmap, basis.splitting, basis)
print(f"\ndiagonal-peak value {diag['R11']:.4f} vs cross-peak tails "
      f"{diag['A'] + diag['B']:.4f} (ratio {diag['ratio']:.2f})")
print("a ratio well above 1 means the diagonal-peak oscillation is a real")
print("non-secular effect, not just overlap with the nearby cross-peaks")

grid = GridFile(
    "rephasing_beating_map", "normalized",
    (("omega1", "cm^-1", w1), ("omega2", "cm^-1", bmap.w2), ("omega3", "cm^-1", w1)),
    bmap.values,
    meta={"normalization": f"{bmap.normalization:.17g}",
          "display_exponent": "0.1",
          "eps1": f"{basis.eps1:.17g}", "eps2": f"{basis.eps2:.17g}"},
)
write_grid(os.path.join(out_dir, "beating_map.grid"), grid)
print(f"\nwrote {os.path.join(out_dir, 'beating_map.grid')}")
