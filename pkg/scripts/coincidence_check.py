"""Monte Carlo check of the accidental-coincidence law p(n) = K^(-n).

Draws paired symbol strings from the geometric Schmidt weights and
compares the observed full-match rate with the closed-form prediction for
a range of string lengths, reporting the deviation in standard errors.

Usage: python3 scripts/coincidence_check.py --rho 0.9 --trials 1000000
"""

import argparse

from cvschmidt import (
    run_coincidence_experiment,
    schmidt_number_from_rho,
    truncated_weights,
)


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--rho", type=float, default=0.9)
    parser.add_argument("--trials", type=int, default=1_000_000)
    parser.add_argument("--max-symbols", type=int, default=5)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()

    K = schmidt_number_from_rho(args.rho)
    weights = truncated_weights(K)
    print(f"K = {K!r}, {len(weights)} spectrum symbols, {args.trials} trials per row")
    print("    n      p_theory         p_hat      deviation/std_err")
    for n in range(1, args.max_symbols + 1):
        report = run_coincidence_experiment(weights, n, args.trials, args.seed + n)
        sigmas = (0.0 if report.std_err == 0.0
                  else (report.p_hat - report.p_theory) / report.std_err)
        print(f"{n:5d}   {report.p_theory:12.6e}  {report.p_hat:12.6e}   {sigmas:+7.2f}")


if __name__ == "__main__":
    main()
