"""Run the golden verification suite and print the failing checks, if any."""

import sys

from g2contractions.cli import main

if __name__ == "__main__":
    sys.exit(main(["verify-paper", "--timings", *sys.argv[1:]]))
