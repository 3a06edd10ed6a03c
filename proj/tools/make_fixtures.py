#!/usr/bin/env python3
"""Write offline OEIS b-file fixtures into data/oeis/.

Each sequence is produced from its OEIS definition (own offset and own
initial values, independent of the catalog), then checked against the
leading terms as listed on its OEIS page. Run `tribsum oeis-check
--network` instead to refresh these from oeis.org when online.
"""

import argparse
import pathlib

# id: (name, definition, initial values a(0..2), (c1, c2, c3) for
#      a(n) = c1 a(n-1) + c2 a(n-2) + c3 a(n-3), published leading terms)
SEQUENCES = {
    "A000073": ("Tribonacci numbers", "a(n) = a(n-1) + a(n-2) + a(n-3), a(0)=a(1)=0, a(2)=1",
                (0, 0, 1), (1, 1, 1),
                [0, 0, 1, 1, 2, 4, 7, 13, 24, 44, 81, 149, 274, 504, 927, 1705, 3136]),
    "A001644": ("Tribonacci-Lucas numbers", "a(n) = a(n-1) + a(n-2) + a(n-3), a(0)=3, a(1)=1, a(2)=3",
                (3, 1, 3), (1, 1, 1),
                [3, 1, 3, 7, 11, 21, 39, 71, 131, 241, 443, 815, 1499, 2757]),
    "A000931": ("Padovan sequence", "a(n) = a(n-2) + a(n-3), a(0)=1, a(1)=a(2)=0",
                (1, 0, 0), (0, 1, 1),
                [1, 0, 0, 1, 0, 1, 1, 1, 2, 2, 3, 4, 5, 7, 9, 12, 16, 21, 28, 37, 49, 65, 86]),
    "A001608": ("Perrin sequence", "a(n) = a(n-2) + a(n-3), a(0)=3, a(1)=0, a(2)=2",
                (3, 0, 2), (0, 1, 1),
                [3, 0, 2, 3, 2, 5, 5, 7, 10, 12, 17, 22, 29, 39, 51, 68, 90, 119, 158]),
    "A078012": ("Narayana-type sequence", "a(n) = a(n-1) + a(n-3), a(0)=1, a(1)=a(2)=0",
                (1, 0, 0), (1, 0, 1),
                [1, 0, 0, 1, 1, 1, 2, 3, 4, 6, 9, 13, 19, 28, 41, 60, 88, 129]),
}


def terms(initial, coeffs, count):
    out = list(initial)
    c1, c2, c3 = coeffs
    while len(out) < count:
        out.append(c1 * out[-1] + c2 * out[-2] + c3 * out[-3])
    return out[:count]


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--out", default=pathlib.Path(__file__).resolve().parent.parent / "data" / "oeis",
                        type=pathlib.Path)
    parser.add_argument("--count", type=int, default=301)
    args = parser.parse_args()
    args.out.mkdir(parents=True, exist_ok=True)
    for oeis_id, (name, definition, initial, coeffs, published) in SEQUENCES.items():
        values = terms(initial, coeffs, args.count)
        assert values[:len(published)] == published, oeis_id
        path = args.out / f"b{oeis_id[1:]}.txt"
        with path.open("w") as fh:
            fh.write(f"# {oeis_id} {name}\n")
            fh.write(f"# {definition}; offset 0\n")
            fh.write("# Generated offline from the OEIS definition (see tools/make_fixtures.py).\n")
            for i, v in enumerate(values):
                fh.write(f"{i} {v}\n")
        print(f"wrote {path} ({len(values)} terms)")


if __name__ == "__main__":
    main()
