#!/usr/bin/env python3
"""Recover the two-point closed forms from sampled class computations.

For each q = 1, 2, 3 the raw degree of the two-ordinary-point stratum is
computed symbolically in d at consecutive p, the family is interpolated in
the shifted basis binomial(p - p0, i) * (d-p)^j, and the recovered grid is
compared against the transcription of the published closed form.
"""

import sys

from bistrata.degrees import closed_form_in_p, gysin_degree, reference_two_omp
from bistrata.strata import two_omp_stratum


def run():
    status = 0
    for q in (1, 2, 3):
        p_lo, p_hi = q, q + 7
        fam = lambda p: gysin_degree(two_omp_stratum(p, q)).degree
        form = closed_form_in_p(fam, p_lo, p_hi)
        printed = closed_form_in_p(lambda p: reference_two_omp(p, q), p_lo, p_hi)
        same = form.grid == printed.grid
        status |= 0 if same else 1
        print(f"q={q}: sampled p={p_lo}..{p_hi}, held out p={p_hi + 1}; "
              f"p-degree {form.p_degree()}; matches printed form: {same}")
        for i, row in enumerate(form.grid):
            if any(row):
                terms = ", ".join(f"{c}*z^{j}" for j, c in enumerate(row) if c)
                print(f"    C(p-{form.p_base},{i}) * ({terms})")
    return status


if __name__ == "__main__":
    sys.exit(run())
