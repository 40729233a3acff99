#!/usr/bin/env python3
"""Compare truncated l(l+1) expansions with the closed-form spectra.

Example:
    python scripts/expansion_convergence.py --family ito --tau 0.00623 --ell 18
"""

import argparse
import sys
from pathlib import Path

# Add src to path for development
sys.path.insert(0, str(Path(__file__).parent.parent / "src"))

from qrotor.core.types import DeformedParams, ModelKind
from qrotor.series import (
    ito_approx_expansion,
    ito_exact_expansion,
    suq2_approx_expansion,
    suq2_exact_expansion,
)
from qrotor.spectra import energy

EXPANSIONS = {
    "suq2": (suq2_exact_expansion, suq2_approx_expansion, ModelKind.I, ModelKind.IPRIME),
    "ito": (ito_exact_expansion, ito_approx_expansion, ModelKind.II, ModelKind.IIPRIME),
}


def main():
    parser = argparse.ArgumentParser(description="Truncation error of the l(l+1) expansions")
    parser.add_argument("--family", "-f", choices=sorted(EXPANSIONS), default="suq2")
    parser.add_argument("--tau", "-t", type=float, default=0.01742, help="Deformation")
    parser.add_argument("--A", type=float, default=1.0, help="Rotational constant in cm^-1")
    parser.add_argument("--ell", "-l", type=int, default=18, help="Spin to evaluate at")
    parser.add_argument("--max-terms", "-n", type=int, default=12, help="Largest truncation to show")
    args = parser.parse_args()

    exact_builder, approx_builder, exact_kind, approx_kind = EXPANSIONS[args.family]
    params = DeformedParams(A=args.A, tau=args.tau)
    targets = {
        "exact": energy(exact_kind, params, args.ell),
        "approx": energy(approx_kind, params, args.ell),
    }

    print(f"Family {args.family}, tau={args.tau}, l={args.ell}")
    print(f"  closed form (model {exact_kind.label}):  {targets['exact']:.10f}")
    print(f"  closed form (model {approx_kind.label}): {targets['approx']:.10f}")
    print()
    print(f"{'terms':>6} {'exact series error':>20} {'approx series error':>20}")
    print("-" * 48)
    for n_terms in range(1, args.max_terms + 1):
        exact = exact_builder(args.tau, n_terms).evaluate(args.ell, args.A)
        approx = approx_builder(args.tau, n_terms).evaluate(args.ell, args.A)
        print(f"{n_terms:>6} {exact - targets['exact']:>20.3e} {approx - targets['approx']:>20.3e}")


if __name__ == "__main__":
    main()
