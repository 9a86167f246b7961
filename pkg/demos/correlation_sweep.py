"""Sweep the spatial correlation length of the bath and watch the coherence
physics change: the inter-excitonic coherence lives longer, the diagonal-peak
beating amplitude collapses, and the cross-peak lineshape becomes symmetric.

Run:  python3 demos/correlation_sweep.py
"""

import numpy as np

from exciton2des.bath import BathSpec
from exciton2des.beating import beating_map, peak_asymmetry
from exciton2des.liouville import build_generator
from exciton2des.model import DimerParams, exciton_basis
from exciton2des.pathways import build_X, build_Y, pathway_decomposition
from exciton2des.response import DipoleConfig
from exciton2des.units import KAPPA

params = DimerParams(omega1=12500.0, omega2=12500.0, coupling=100.0)
basis = exciton_basis(params)
cfg = DipoleConfig()
w1 = np.linspace(12200.0, 12800.0, 121)
w2 = np.linspace(-400.0, 400.0, 161)

print(f"homodimer: splitting {basis.splitting:.1f} cm^-1, peaks at "
      f"{basis.eps1:.0f} / {basis.eps2:.0f} cm^-1")
print(f"{'xi/d':>8} {'|Re v1| cm^-1':>14} {'R11/R21 beat':>13} {'R21 asym':>9}")
for xi in (1e-3, 1.0, 3.0, 1e3):
    bath = BathSpec(50.0, 0.02, 200.0, 77.0, corr_length=xi)
    y = build_Y(basis, bath)
    decay = abs(y.values[0].real) / KAPPA

    # non-secular diagonal beating relative to the allowed cross-peak beating
    pws = pathway_decomposition(build_X(basis, bath), y, cfg, basis)
    amp = lambda k, m: sum(abs(p.strength) for p in pws
                           if p.oscillatory and p.k == k and p.m == m)
    ratio = amp(1, 1) / amp(2, 1)

    bmap = beating_map(basis, build_generator(basis, bath), cfg, w1, w2, w1)
    asym = peak_asymmetry(bmap, "R21", basis, basis.splitting)["ratio"]
    print(f"{xi:8g} {decay:14.2f} {ratio:13.4f} {asym:9.2f}")

print()
print("As xi grows past the inter-site distance, the coherence decay rate")
print("drops by three orders of magnitude, the diagonal-peak oscillation is")
print("suppressed, and the cross-peak lineshape turns symmetric: all three")
print("are observable fingerprints of spatially correlated noise.")
