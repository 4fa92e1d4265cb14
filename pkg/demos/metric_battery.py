"""The cryptanalytic battery, metric by metric, on three instructive boxes.

The identity permutation is maximally weak on every axis, AES is the
strong anchor, and the shipped published box sits in between; seeing all
three side by side is the quickest way to understand what each number
measures.

Run:  python demos/metric_battery.py
"""

import numpy as np

from sboxkit import (
    component_bits,
    difference_distribution,
    full_report,
    get_entry,
    nonlinearity,
    walsh_spectrum,
)

aes = get_entry("aes").table
proposed = get_entry("paper-proposed").table
identity = np.arange(256)

print("=" * 70)
print("Walsh spectrum of one component function (AES output bit 0)")
print("=" * 70)
f = component_bits(aes, 1)
w = walsh_spectrum(f)
print(f"  max |W(a)| = {np.abs(w).max()}  ->  NL = (256 - {np.abs(w).max()})/2"
      f" = {nonlinearity(f)}")
print(f"  Parseval check: sum W^2 = {int((w.astype(np.int64)**2).sum())} = 2^16")
print()

print("=" * 70)
print("Difference distribution (how often an input xor maps to an output xor)")
print("=" * 70)
for name, box in (("identity", identity), ("AES", aes)):
    ddt = difference_distribution(box)
    print(f"  {name:9s} max count over dc != 0: {ddt[1:].max():3d}"
          f"   (row sums all {int(ddt[1].sum())})")
print()

print("=" * 70)
print("Full battery")
print("=" * 70)
header = f"{'box':<10} {'NL min/max/avg':<17} {'SAC':<8} {'BIC-NL':<8} " \
         f"{'LP':<8} {'DU':<4} {'DP':<9} {'FP':<4}"
print(header)
print("-" * len(header))
for name, box in (("identity", identity), ("proposed", proposed), ("AES", aes)):
    r = full_report(box)
    print(f"{name:<10} {f'{r.nl_min}/{r.nl_max}/{r.nl_avg:g}':<17} "
          f"{r.sac_avg:<8.4f} {r.bic_nl_avg:<8.2f} {r.lp:<8.4f} "
          f"{r.du:<4d} {r.dp:<9.5f} {r.fixed_point_count:<4d}")
print()
print("Reading the table: NL toward 112 and LP/DP toward 0 resist linear and")
print("differential attacks; SAC near 0.5 means single-bit input flips")
print("scramble half the output bits; zero fixed points avoids structural")
print("leakage.  The identity row is what 'no confusion at all' looks like.")
