"""
Entry point for running hyperck as a module.

Usage:
    python -m hyperck algebra-info --setting octonion,m=7,p=4
    python -m hyperck ck-extend --setting clifford:n=3 --input samples/seed_x0_squared.json
    python -m hyperck verify-theorems --suite diagrams --q 3
"""

from hyperck.cli.main import cli

if __name__ == "__main__":
    cli()
