"""Composition plans and rendering: the cut-extract-compose core.

Shows how a plan fully determines one synthetic image (same plan, same
bytes), how the overlap policy and artifact distractors behave, and saves
a small contact sheet of rendered samples with their exact boxes burned in.

Run: python3 demos/02_compose_and_render.py
"""

from pathlib import Path

import numpy as np
from PIL import Image, ImageDraw

from microsynth import (
    BackgroundModel,
    CompositionConfig,
    CountSampler,
    OverlapPolicy,
    build_patch_pool,
    pairwise_iou,
    parse_manifest,
    render,
    sample_plan,
    substream,
)
from microsynth.demo import generate_demo_source
from microsynth.patches import SizeTable

OUT = Path(__file__).parent / "output" / "02"
OUT.mkdir(parents=True, exist_ok=True)

manifest_path = generate_demo_source(OUT / "source")
manifest = parse_manifest(manifest_path.read_bytes(), "json")
pool = build_patch_pool(manifest, SizeTable.example(), seed=42, base_dir=manifest_path.parent)

config = CompositionConfig(
    canvas=(416, 416),
    count_sampler=CountSampler.uniform_range(6, 12),
    artifact_rate=2.0,                      # unlabeled distractors per image (Poisson mean)
    overlap=OverlapPolicy(max_iou=0.1, max_attempts=50),
    background=BackgroundModel("sampled_constant", lo=210, hi=235),
)

# A plan is the full recipe; rendering it twice is bit-identical.
plan = sample_plan(config, pool, substream(2024, 0), plan_seed=0)
a = render(plan, pool)
b = render(plan, pool)
assert np.array_equal(a.image, b.image)
print(f"plan 0: {len(plan.placements)} placements "
      f"({sum(p.is_artifact for p in plan.placements)} artifacts), "
      f"{len(plan.dropped)} dropped, background gray {plan.background.value}")
print(f"boxes: {[(str(c), x, y, w, h) for c, x, y, w, h in a.boxes]}")
print(f"multilabel (BACTERIA,CRYSTAL,RBC,WBC,YEAST): {a.multilabel}")

worst = max(
    (pairwise_iou(p.rect, q.rect) for i, p in enumerate(plan.placements) for q in plan.placements[i + 1:]),
    default=0.0,
)
print(f"worst pairwise paste IoU: {worst:.3f} (policy max {config.overlap.max_iou})")

# Contact sheet: 3x3 rendered samples with boxes drawn on.
tiles = []
for i in range(9):
    sample = render(sample_plan(config, pool, substream(2024, i), plan_seed=i), pool)
    img = Image.fromarray(sample.image)
    draw = ImageDraw.Draw(img)
    for cls, x, y, w, h in sample.boxes:
        draw.rectangle([x, y, x + w - 1, y + h - 1], outline=(220, 40, 40))
        draw.text((x + 2, y + 1), cls.value[:3], fill=(220, 40, 40))
    tiles.append(img)
sheet = Image.new("RGB", (3 * 416 + 8, 3 * 416 + 8), (255, 255, 255))
for i, tile in enumerate(tiles):
    sheet.paste(tile, ((i % 3) * (416 + 4), (i // 3) * (416 + 4)))
sheet_path = OUT / "contact_sheet.png"
sheet.save(sheet_path)
print(f"\nwrote {sheet_path}")
