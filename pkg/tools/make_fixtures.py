"""Regenerate the curve documents in fixtures/.

Run from the repository root:

    python3 tools/make_fixtures.py

Every fixture is built through the package API and written in canonical
form, so the files double as serializer golden files.
"""

import pathlib
import sys

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parent.parent / "src"))

from c5cone import curve_from_exponents, write_curve
from c5cone.scalar import zeta

FIXTURES = pathlib.Path(__file__).resolve().parent.parent / "fixtures"


def main() -> None:
    FIXTURES.mkdir(exist_ok=True)
    t1, t2 = zeta(3, 1), zeta(3, 2)
    curves = {
        # one singular space branch, two cone planes
        "space_cusp": [[4, 6, 7]],
        # four branches: a tangent pair, a smooth transversal, a branch
        # whose special coordinate is not the first
        "four_branches": [
            [[(4, 1)], [(6, 1)], [(9, 1)]],
            [[(6, 1)], [(11, 1), (9, -1)], [(11, 1), (9, 1)]],
            [[(1, 1)], [(1, 2)], [(1, 1)]],
            [[(4, 1)], [(3, 1)], [(5, 1)]],
        ],
        # four bi-Lipschitz equivalent germs with 1, 2, 3, 4 cone planes
        "m16_one_plane": [
            [[(16, 1)], [(57, 1)], [(24, 1), (36, 1), (54, 1), (55, 1)]]
        ],
        "m16_two_planes": [
            [[(16, 1)], [(24, 1), (57, 1)], [(36, 1), (54, 1), (55, 1)]]
        ],
        "m16_three_planes": [
            [[(16, 1)], [(24, 1), (36, 1), (57, 1)], [(36, 1), (54, 1), (55, 1)]]
        ],
        "m16_four_planes": [
            [
                [(16, 1)],
                [(24, 1), (36, 1), (54, -1), (57, 1)],
                [(36, 1), (54, 1), (55, 1)],
            ]
        ],
        # two tangent plane pairs with equal contact-multiplicity sets but
        # (classically reported) different ordered sequences
        "tangent_pair_a": [
            [[(4, 1)], [(6, 1), (7, 1)]],
            [[(4, 1)], [(6, 1), (9, 1)]],
        ],
        "tangent_pair_b": [
            [[(4, 1)], [(6, 1), (7, 2)]],
            [[(4, 1)], [(6, -1), (9, 3)]],
        ],
        # tangent plane pair exercising the contact-sequence structure
        # (common scaled exponents 36, 66; intersection multiplicity 192)
        "contact_structure_pair": [
            [[(8, 1)], [(12, 1), (20, 1), (22, 2), (23, 1)]],
            [[(12, 1)], [(18, 1), (33, 1), (34, 1)]],
        ],
        # tangent pair in C^5 where same-order roots give distinct planes
        "same_order_contact": [
            [[(3, 1)], [(4, t1)], [(4, t2)], [(4, 1)], [(5, 1)]],
            [[(3, 1)], [(4, 1)], [(4, 1)], [(4, 1)], [(7, 1)]],
        ],
        # family fibers: equal ChAM, different plane counts
        "family_fiber_0": [[[(6, 1)], [(9, 1), (10, 1)], [(11, 1)]]],
        "family_fiber_1": [[[(6, 1)], [(9, 1), (10, 1)], [(11, 1), (10, 1)]]],
        # smooth germs: the cone degenerates to the tangent line
        "smooth_plane": [[1, 2]],
        "smooth_space": [[1, 2, 3]],
        # prime multiplicity in C^200: a single plane via the
        # order-class shortcut
        "prime_multiplicity": [list(range(2017, 2217))],
    }
    for name, spec in curves.items():
        path = FIXTURES / f"{name}.json"
        write_curve(path, curve_from_exponents(spec))
        print(f"wrote {path}")


if __name__ == "__main__":
    main()
