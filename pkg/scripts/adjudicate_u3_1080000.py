"""Three-way comparison for U^3(Z_1080000): published value, closed form, iteration, oracle.

    python scripts/adjudicate_u3_1080000.py [--bound 10000000]
"""
import argparse
import time

from genphi.oracle import oracle_uk
from genphi.phik import phi_k
from genphi.units import uk_closed_form, uk_decomposition

PUBLISHED = "Z2 x Z2 x Z2 x Z2 x Z4 x Z5"
PUBLISHED_ORDER = 320

parser = argparse.ArgumentParser()
parser.add_argument("--bound", type=int, default=10**7)
args = parser.parse_args()

t0 = time.perf_counter()
oracle = oracle_uk(1080000, 3, args.bound)
elapsed = time.perf_counter() - t0
rows = [
    ("published", PUBLISHED, PUBLISHED_ORDER),
    ("closed form", str(uk_closed_form(1080000, 3)), phi_k(1080000, 3)),
    ("iteration", str(uk_decomposition(1080000, 3)), uk_decomposition(1080000, 3).order),
    ("oracle", str(oracle), oracle.order),
]
for name, group, order in rows:
    print(f"{name:<12} {group:<32} order {order}")
print(f"oracle time {elapsed:.3f}s")
