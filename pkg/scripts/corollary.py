"""Print the full Brieskorn-pair report for (2, 51, 102) vs (12, 15, 20)."""
from wsing.cli import main

if __name__ == "__main__":
    raise SystemExit(main(["corollary"]))
