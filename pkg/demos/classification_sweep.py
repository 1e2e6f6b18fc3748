"""Classify every small weighted triangulation quiver, then sample larger ones."""

from gdq.classify import random_sweep, exhaustive_sweep

report = exhaustive_sweep(4, weights=(1, 2), borders=(0, 1))
print("exhaustive, up to 4 vertices:", report.summary())
strict = sorted({rec for _, rec in report.records if "strict=true" in rec})
print(f"{len(strict)} distinct non-singular records, for example:")
for rec in strict[:6]:
    print("  " + rec)
print("polynomial growth:", ", ".join(sorted(set(report.polynomial))))

sample = random_sweep(40, seed=1, min_vertices=4, max_vertices=7)
print("\nrandom, 4 to 7 vertices:", sample.summary())
for exc in report.exceptions + sample.exceptions:
    print("EXCEPTION", exc)
