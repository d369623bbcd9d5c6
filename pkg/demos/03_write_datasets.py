"""Emitting training datasets: YOLO text, COCO JSON, multi-label CSV.

Writes the same rendered samples in all three formats, shows the exact
label text, and audits the trees. Re-running produces byte-identical
files, which is what makes dataset diffs and caching trustworthy.

Run: python3 demos/03_write_datasets.py
"""

import json
from pathlib import Path

from microsynth import (
    DatasetLayout,
    audit_labels,
    batch,
    build_patch_pool,
    histogram,
    parse_manifest,
    render_table,
    write_dataset,
)
from microsynth.compose import preset_config
from microsynth.demo import generate_demo_source
from microsynth.patches import SizeTable
from microsynth.stream import GeneratorSpec

OUT = Path(__file__).parent / "output" / "03"
OUT.mkdir(parents=True, exist_ok=True)

manifest_path = generate_demo_source(OUT / "source")
manifest = parse_manifest(manifest_path.read_bytes(), "json")
pool = build_patch_pool(manifest, SizeTable.example(), seed=42, base_dir=manifest_path.parent)
spec = GeneratorSpec(preset_config("weak-384"), pool, master_seed=33)
samples = batch(spec, start=0, n=12)

for fmt in ("yolo_txt", "coco_json", "multilabel_csv"):
    layout = DatasetLayout(root=OUT / fmt, format=fmt)
    write_dataset(samples, layout)
    audit = audit_labels(layout)
    print(f"{fmt}: wrote {len(samples)} images -> {layout.root}  audit={'clean' if audit.ok() else audit.findings}")

print("\nfirst YOLO label file:")
print((OUT / "yolo_txt" / "labels" / "img_000000.txt").read_text().rstrip() or "(no boxes)")

print("\nmulti-label CSV head:")
print("\n".join((OUT / "multilabel_csv" / "labels" / "labels.csv").read_text().splitlines()[:4]))

coco = json.loads((OUT / "coco_json" / "labels" / "annotations.json").read_text())
print(f"\nCOCO: {len(coco['images'])} images, {len(coco['annotations'])} annotations, "
      f"categories {[c['name'] for c in coco['categories']]}")

print("\nper-class instance counts recovered from the YOLO tree:")
print(render_table({"yolo_txt": histogram(OUT / "yolo_txt")}))
