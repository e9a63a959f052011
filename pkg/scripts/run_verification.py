#!/usr/bin/env python3
"""Run the full theorem verification suite and stream JSON reports.

Exit code 0 means every applicable check passed.
"""

import sys

from spectra_rho.cli import main

if __name__ == "__main__":
    sys.exit(main(["verify", "--all", "--format", "json", *sys.argv[1:]]))
