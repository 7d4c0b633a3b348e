#!/usr/bin/env python3
"""Hunt for inputs where the alternative Moebius operand orderings fail.

The canonical right-coefficient action intertwines the rotation-type local
unitaries exactly; this script searches random (state, transform) pairs for
concrete failures of the other orderings, prints the worst witnesses found,
and reports the empirical deviation of the one candidate that turns out to
intertwine after all (the left-coefficient map on the su2xso2 family).
"""

import argparse
import sys

from qgeo.diagrams import (
    FailureSearch,
    find_variant_failure_witness,
    left_coefficient_candidate_deviation,
)
from qgeo.local_unitary import Variant, random_local_unitary
from qgeo.states import haar_random_state


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--trials", type=int, default=200)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()

    for which in FailureSearch:
        w = find_variant_failure_witness(which, args.trials, args.seed)
        print(f"search: {which.value}")
        if w is None:
            print(f"  no witness found in {args.trials} trials")
            continue
        print(f"  worst deviation {w.deviation:.6f}")
        print(f"  state amplitudes: {[w.state.alpha, w.state.beta, w.state.gamma, w.state.delta]}")
        print(
            f"  transform: variant={w.transform.variant.value} theta={w.transform.rot.theta:.6f} "
            f"a={w.transform.su2.a:.6f} b={w.transform.su2.b:.6f}"
        )

    worst = 0.0
    for trial in range(args.trials):
        psi = haar_random_state([args.seed, 999, trial])
        u = random_local_unitary(Variant.SU2_X_SO2, [args.seed, 998, trial])
        worst = max(worst, left_coefficient_candidate_deviation(psi, u))
    print("candidate: left_coefficient_variant_on_su2xso2")
    print(f"  max deviation over {args.trials} trials: {worst:.3e} (it intertwines)")
    return 0


if __name__ == "__main__":
    sys.exit(main())
