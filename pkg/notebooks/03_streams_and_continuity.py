# %% [markdown]
# # Rationals, streams and how many digits you need
#
# A rational with denominator prime to p has an eventually periodic digit
# expansion.  The homeomorphism sends such a stream to another eventually
# periodic stream, and a fixed number of input digits always pins down a
# fixed number of output digits.

# %%
from fractions import Fraction

from padictile import (
    apply,
    apply_stream,
    explicit_homeo,
    rational_to_stream,
    required_input_precision,
    truncate,
    worked_example_homeo,
)

# %%
s = rational_to_stream(-1, 4, 3)
print(s, s.to_fraction())

h = worked_example_homeo()
image = apply_stream(h, s)
print(image, image.to_fraction())

# %%
for k in range(1, 8):
    print(k, required_input_precision(h, k))

# %% [markdown]
# Every truncation to 8 digits gives at least 4 settled output digits.

# %%
import itertools

from padictile import Word

short = min(len(apply(h, Word(3, w))[0]) for w in itertools.product(range(3), repeat=8))
print(short)

# %%
g = explicit_homeo(2, 7)
for r in [Fraction(1, 3), Fraction(-5, 9), Fraction(22, 7)]:
    t = rational_to_stream(r.numerator, r.denominator, 2)
    print(r, "->", apply_stream(g, t).to_fraction())
