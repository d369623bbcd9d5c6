"""From center-annotated source images to a per-class patch pool.

Walks the ingestion half of the pipeline: draw a demo source corpus (a
stand-in for real microscope FOVs), parse and validate its manifest,
split it at the urine-sample level, and cut the per-object patch pool.

Run: python3 demos/01_source_to_patches.py
"""

from pathlib import Path

from microsynth import (
    build_patch_pool,
    parse_manifest,
    render_table,
    split_by_sample,
    validate_manifest,
)
from microsynth.demo import generate_demo_source
from microsynth.patches import SizeTable
from microsynth.stats import ClassHistogram

OUT = Path(__file__).parent / "output" / "01"
OUT.mkdir(parents=True, exist_ok=True)

# 1. A source corpus. Real runs point at microscope captures plus expert
#    center annotations; here we draw blobs with known centers.
manifest_path = generate_demo_source(OUT / "source", samples=4, fovs_per_sample=3)
manifest = parse_manifest(manifest_path.read_bytes(), "json")
print(f"source: {len(manifest.records)} FOVs across {len(manifest.sample_ids())} samples, "
      f"{len(manifest.center_annotations)} center annotations")

# 2. Validation never raises; it reports every violation with a locus.
report = validate_manifest(manifest)
print(f"validation: {'clean' if report.ok() else report.findings}")

# 3. Train/test split happens at sample level so one patient's FOVs never
#    straddle the boundary.
train, test = split_by_sample(manifest, test_fraction=0.25, seed=11)
print(f"split: train={train.sample_ids()} test={test.sample_ids()}")
assert not set(r.image_id for r in train.records) & set(r.image_id for r in test.records)

# 4. Patch extraction crops each annotated object at its class-nominal
#    size, shrunk by a random 0-10% so object borders vary.
sizes = SizeTable.example()
pool = build_patch_pool(train, sizes, seed=42, base_dir=manifest_path.parent)
hist = ClassHistogram()
for cls, n in pool.counts().items():
    hist.add(cls, n)
print("\npatch pool (train side):")
print(render_table({"patches": hist}))

us = [p.jitter_u for patches in pool.by_class.values() for p in patches]
print(f"\njitter draws: min={min(us):.4f} max={max(us):.4f} (always within [0, 0.1])")
