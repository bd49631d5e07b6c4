"""Plans for any tap count: block tilings, product counts, JSON documents.

Every filter length m >= 1 gets a plan built from three block templates:
wino3 covers 3 taps with 4 products, pair2 covers 2 taps with 3, and pass1
covers 1 tap with 2.  The 7-tap layout is special: its lone leftover tap
sits between the two 3-tap groups instead of at the end.
"""

from minfilt import decompose, generate_plan, plan_from_json, plan_to_json

print("m   products  direct  blocks")
for m in range(1, 13):
    plan = generate_plan(m)
    blocks = " + ".join(f"{b.kind.value}@{b.tap_offset}" for b in plan.blocks)
    print(f"{m:<3} {plan.p:<9} {2 * m:<7} {blocks}")
print()
print("Products grow as 4 per three taps; the direct method needs 2 per tap.")
print()

print("Plans serialize to a canonical one-line JSON document:")
text = plan_to_json(generate_plan(5))
print(text)
print()

loaded = plan_from_json(text)
print(f"Round trip is byte-identical: {plan_to_json(loaded) == text}")
print("Canonical bytes make plan files diffable and safe to cache.")
