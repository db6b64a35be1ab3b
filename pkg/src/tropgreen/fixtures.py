"""Matrices from the worked examples, entered exactly as printed."""

from .core import NEG_INF as N
from .core import Flavor
from .linalg import TropMatrix

A61 = TropMatrix.of([
    [0, 1, 2, 3],
    [0, -1, -2, -3],
    [0, 0, 0, 0],
    [0, 0, 0, 0],
], Flavor.FT)

B61 = TropMatrix.of([
    [0, 0, 1, 3],
    [0, 0, -2, -3],
    [0, 0, 0, 0],
    [0, 0, 0, 0],
], Flavor.FT)

X61 = TropMatrix.of([
    [0, -1, -2, -3],
    [0, -1, -2, -3],
    [-1, 0, 0, -1],
    [-3, -3, -1, 0],
], Flavor.FT)

A62 = TropMatrix.of([
    [N, 0, 1, 1],
    [N, N, 1, 1],
    [0, 0, 0, 0],
    [N, N, N, N],
], Flavor.T)

B62 = TropMatrix.of([
    [N, 0, 1, 1],
    [N, N, 1, 0],
    [0, 0, 0, 0],
    [N, N, N, N],
], Flavor.T)

# (x, y, z, t) -> (x, y, z + 1, t)
MU62 = TropMatrix.of([
    [0, N, N, N],
    [N, 0, N, N],
    [N, N, 1, N],
    [N, N, N, 0],
], Flavor.T)

A63 = TropMatrix.of([
    [0, 0, 0],
    [1, 5, 0],
    [3, 2, 0],
], Flavor.FT)

G27 = TropMatrix.of([
    [0, 0],
    [0, 1],
], Flavor.T)

FIXTURES = {
    "A61": A61, "B61": B61, "X61": X61,
    "A62": A62, "B62": B62, "MU62": MU62,
    "A63": A63, "G27": G27,
}
