#!/usr/bin/env python3
"""Regenerate the class-data file for the order-168 simple group.

Enumerates the 2x2 projective special linear group over F_7 by brute force,
derives the conjugacy-class sizes and element orders, attaches the values of
1 + (the degree-8 irreducible character), and prints the result in the
two-column format accepted by `cyclochar scheck finite --file`.
"""

import sys

sys.path.insert(0, "tests")

from groups import psl2_classes

# 1 + psi, with psi the degree-8 irreducible: psi takes 8, 0, -1, 0, 1 on
# the classes of element order 1, 2, 3, 4, 7.
VALUE_BY_ORDER = {1: 9, 2: 1, 3: 0, 4: 1, 7: 2}


def main():
    classes = psl2_classes(7)
    total = sum(size for _, size in classes)
    print(f"# Class data for the simple group of order {total} "
          "(2x2 projective special")
    print("# linear group over the field with 7 elements).")
    print("# Values: 1 + (the degree-8 irreducible character).")
    print("# Columns: class size, exact value.  Classes ordered by element order")
    orders = ", ".join(str(order) for order, _ in classes)
    print(f"# ({orders}); sizes derived by brute-force conjugacy enumeration.")
    for order, size in classes:
        print(f"{size:<3} {VALUE_BY_ORDER[order]}")


if __name__ == "__main__":
    main()
