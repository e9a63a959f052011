#!/usr/bin/env python3
"""Reproduce the small-graph characterization results.

Prints the 13 connected graphs of order <= 6 whose line graphs have all
negative eigenvalues equal to -2, then the unique order-7 graph that also
has a connected complement.
"""

import sys

from spectra_rho.cli import main

if __name__ == "__main__":
    print("# connected graphs (order <= 6) with the -2 line-graph property")
    rc = main(["census", "--line-rho", "--max-order", "6"])
    print("# least order with a connected complement")
    rc |= main(["census", "--min-complement"])
    sys.exit(rc)
