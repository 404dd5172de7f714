"""Print, for each (b, c), the roots -e of det Delta' with their multiplicities.

Each multiplicity is read off the product formula and checked against the
determinant itself by exact division.

    python scripts/multiplicity_table.py --b-max 6
"""

import argparse

from bhpdet.closed_form import vanishes_by_parity
from bhpdet.det import det_poly_interp
from bhpdet.lemmas import divides_power, multiplicity_support, product_multiplicity
from bhpdet.matrices import build_delta_prime


def main() -> None:
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--b-max", type=int, default=6)
    args = p.parse_args()
    for b in range(args.b_max + 1):
        for c in range(b + 1):
            if vanishes_by_parity(b, c):
                print(f"b={b} c={c}: determinant vanishes identically")
                continue
            d = det_poly_interp(build_delta_prime(b, c))
            cells = []
            for e in multiplicity_support(b, c):
                m = product_multiplicity(b, c, e)
                mark = "" if divides_power(d, e, m) else "!"
                cells.append(f"{e}^{m}{mark}")
            total = sum(product_multiplicity(b, c, e) for e in multiplicity_support(b, c))
            print(f"b={b} c={c}: sum m {total:>2}, c(b-c) {c * (b - c):>2}, e^m: {' '.join(cells) or '-'}")


if __name__ == "__main__":
    main()
