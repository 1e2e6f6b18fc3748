"""A walk through the built-in examples: orbits, dimensions, Cartan data, tubes."""

from gdq import catalog
from gdq.algebra import cartan_matrix, dimension
from gdq.classify import classify
from gdq.homology import tube_census
from gdq.quiver_core import f_orbit_census

EXAMPLES = {
    "single triangle": catalog.triangle_algebra(),
    "sphere from two triangles": catalog.markov_algebra(),
    "two-vertex Lambda(1,1)": catalog.lambda_algebra(1, 1),
    "Lambda(2,3)": catalog.lambda_algebra(2, 3),
    "two 2-triangle disks": catalog.two_disk_algebra(),
}

for title, p in EXAMPLES.items():
    print(f"== {title}")
    fixed, _, triangles = f_orbit_census(p.triangulation_quiver())
    print(f"   {len(p.quiver.vertices)} vertices, {len(p.quiver.arrows)} arrows, "
          f"{triangles} f-triangles, {fixed} fixed loops")
    print(f"   g-orbit lengths {[len(o) for o in p.orbits]}, algebra dimension {dimension(p)}")
    C = cartan_matrix(p)
    print("   Cartan matrix:")
    for line in str(C).splitlines():
        print("     " + line)
    tubes = tube_census(p)
    print(f"   rank-3 tubes {tubes.rank3_count}, rank-1 arrows {tubes.rank1_arrow_count}")
    print(f"   {classify(p).record()}")
    print()
