import logging

import piecewise_rsk
from piecewise_rsk import (
    ContentWeights,
    NTableau,
    Partition,
    build_arrays,
    classical_hat,
    gk_value,
    iter_toggle_rsk,
    render_levels,
    rpp_gf,
    toggle_rsk,
    toggle_rsk_inverse,
)
from piecewise_rsk.hooks import whlf_sides

logging.basicConfig(level=logging.INFO)


# The running 3×3 example: the toggle image equals classical RSK followed by gluing.

matrix = NTableau.from_rows([[1, 0, 2], [0, 2, 0], [1, 1, 0]])
image = toggle_rsk(matrix)
print(image, end='\n\n')
assert image == classical_hat(matrix)
assert toggle_rsk_inverse(image) == matrix

# Every intermediate stage is a reverse plane partition of the boxes inserted so far.
for box, partial in iter_toggle_rsk(matrix):
    print('after %s:' % (box,))
    print(partial, end='\n\n')

########################################################################################################################


# The same map on a shape that is not a rectangle.

tableau = NTableau.from_rows([[2, 0, 1], [1, 3], [0]])
print(toggle_rsk(tableau), end='\n\n')

# Paths from the first row collect the partial sums stored in the middle array.
u, ubar, utilde = build_arrays(matrix)
print(render_levels(ubar), end='\n\n')
for k in (1, 2, 3):
    print('k=%s paths: %s, partial sum: %s' % (k, gk_value(matrix, (3, 3), k), ubar[(3, 3, k)]))

########################################################################################################################


# Hook lengths: the generating function of reverse plane partitions and the weighted hook-length formula.

shape = Partition((3, 2))
print(rpp_gf(shape, 10))

weights = ContentWeights({-1: 1, 0: 2, 1: 3, 2: 5})
total, product = whlf_sides(shape, weights)
print('sum over standard tableaux: %s, hook product: %s' % (total, product))
print('piecewise-rsk v%s' % piecewise_rsk.__version__)
