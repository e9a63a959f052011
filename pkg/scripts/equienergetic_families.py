#!/usr/bin/env python3
"""Generate certified equienergetic, non-cospectral graph pairs.

Walks the built-in table of regular graph pairs, wraps each in a K_2 join
and prints the two graph6 strings with their shared line-graph energy.
"""

import json

from spectra_rho.cli import REGULAR_PAIR_TABLE, equi_pair

if __name__ == "__main__":
    for order, degree in sorted(REGULAR_PAIR_TABLE):
        (g1, g2), certificate = equi_pair(order, degree)
        print(json.dumps({
            "part_order": order,
            "part_degree": degree,
            "graphs": [g1, g2],
            "shared_line_energy": certificate["line_energies"][0],
            "spectra_differ": certificate["spectra_differ"],
        }))
