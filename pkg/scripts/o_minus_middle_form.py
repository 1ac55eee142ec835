"""Which 2x2 middle form gives an O-minus group for odd q.

The middle block must carry an anisotropic quadratic form so that the whole
space has Witt index m.  With a chosen so that X^2 + X + a is irreducible,
y1^2 + y1 y2 + a y2^2 is anisotropic and its Gram matrix is [[2, 1], [1, 2a]].
The matrix [[a, 1], [1, 2a]] is also tried; for q = 5 it is isotropic, so it
would give an O-plus type group.
"""
import itertools

from sylow_inv.field import field_of_order, nonsquare_quadratic_param


def isotropic(F, G):
    for y1, y2 in itertools.product(range(F.r), repeat=2):
        if (y1, y2) == (0, 0):
            continue
        v = F.add(F.add(F.mul(G[0][0], F.mul(y1, y1)), F.mul(F.add(G[0][1], G[1][0]), F.mul(y1, y2))),
                  F.mul(G[1][1], F.mul(y2, y2)))
        if v == 0:
            return (y1, y2)
    return None


for q in (3, 5, 7, 9, 11):
    F = field_of_order(q)
    a = nonsquare_quadratic_param(F)
    two = F.from_int(2)
    used = ((two, 1), (1, F.mul(two, a)))
    alt = ((a, 1), (1, F.mul(two, a)))
    print(f"q={q:>2} a={F.fmt(a)}  [[2,1],[1,2a]] isotropic vector: {isotropic(F, used)}"
          f"   [[a,1],[1,2a]] isotropic vector: {isotropic(F, alt)}")
