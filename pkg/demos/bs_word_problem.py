"""Word problem in BS(1,2) by Britton reduction, checked against the affine model."""

import random

from ogroup.hnn import HnnSequence, affine_image, baumslag_solitar_spec, is_trivial, normal_form

spec = baumslag_solitar_spec(2)

# t^-1 a t = a^2, so t^-1 a t a^-2 is the identity
relator = ["T", 1, "t", -2]
print("t^-1 a t a^-2 trivial:", is_trivial(HnnSequence.from_items(relator, spec), spec))

s = HnnSequence.from_items([1, "t", 3, "T", 5], spec)
print("normal form of a t a^3 t^-1 a^5:", normal_form(s, spec))

rng = random.Random(0)
agree = 0
for _ in range(200):
    items = [rng.choice(("t", "T", 1, -1)) for _ in range(rng.randint(0, 20))]
    agree += is_trivial(HnnSequence.from_items(items, spec), spec) == (affine_image(items) == (1, 0))
print(f"agreement with x -> 2x+1 style affine maps: {agree}/200")
