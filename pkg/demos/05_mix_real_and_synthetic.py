"""Blending a slice of real annotated data into a synthetic training set.

Detection models train well on synthetic data alone, but mixing in a
small fraction of real images (the headline recipe is 10%) can beat
real-only training. The mixer selects a seeded, fixed subset of real
entries and records provenance per entry so the blend is auditable.

Run: python3 demos/05_mix_real_and_synthetic.py
"""

import json
from pathlib import Path

from microsynth import (
    DatasetLayout,
    MixSpec,
    batch,
    build_patch_pool,
    mix_datasets,
    parse_manifest,
    write_dataset,
)
from microsynth.compose import preset_config
from microsynth.demo import generate_demo_source
from microsynth.emit import achieved_real_fraction, write_mixed_manifest
from microsynth.errors import InsufficientRealError
from microsynth.patches import SizeTable
from microsynth.stream import GeneratorSpec

OUT = Path(__file__).parent / "output" / "05"
OUT.mkdir(parents=True, exist_ok=True)

manifest_path = generate_demo_source(OUT / "source")
manifest = parse_manifest(manifest_path.read_bytes(), "json")
pool = build_patch_pool(manifest, SizeTable.example(), seed=42, base_dir=manifest_path.parent)

# Stand-ins: a 90-image synthetic set and a 100-image "real" set (here
# just another seeded run; in production this is expert-annotated data).
cfg = preset_config("detect-416")
synth = DatasetLayout(root=OUT / "synthetic", format="yolo_txt")
write_dataset(batch(GeneratorSpec(cfg, pool, 1), 0, 90), synth)
real = DatasetLayout(root=OUT / "real", format="yolo_txt")
write_dataset(batch(GeneratorSpec(cfg, pool, 2), 0, 100), real)

merged = mix_datasets(synth, real, MixSpec(real_fraction=0.1, seed=7))
write_mixed_manifest(merged, OUT / "mixed" / "manifest.json")
real_entries = [e for e in merged.entries if e.provenance == "real"]
print(f"mixed manifest: {len(merged.entries)} entries, {len(real_entries)} real "
      f"(achieved fraction {achieved_real_fraction(merged):.3f})")
print(f"first real entry: {json.dumps(real_entries[0].__dict__, default=str)}")

# Asking for more real data than exists fails with the achievable maximum.
try:
    mix_datasets(synth, real, MixSpec(real_fraction=0.9, seed=7))
except InsufficientRealError as e:
    print(f"\nrequesting 90% real fails as expected: max achievable {e.max_achievable:.3f}")
