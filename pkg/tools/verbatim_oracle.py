#!/usr/bin/env python3
"""Independent cross-check oracle for the decision formulas.

This script deliberately avoids importing the package. Every quantity is
recomputed from scratch with plain month loops and single-expression
substitution, using different arithmetic structure than the library
(pow-based discount factors instead of iterative accumulation), so that
agreement between the two is evidence rather than tautology.

Usage:
    python3 tools/verbatim_oracle.py --write-golden
        regenerates tests/golden/*.json from scenarios/*.json

The test suite also imports this module directly for randomized
equivalence checks.
"""

import argparse
import json
import os

# Continuous scalar fields, mirrored independently from the library's list.
SCALAR_FIELDS = (
    "sale_price",
    "loan_principal",
    "monthly_rent",
    "implicit_lease_rate",
    "borrow_cost_before",
    "borrow_cost_after",
    "firm_borrow_cost",
    "tax_rate_seller_lessee",
    "tax_rate_buyer_lessor",
    "txn_cost_slb",
    "txn_cost_loan",
    "leverage_benefit",
    "leverage_penalty_rate",
    "debt_to_capital",
    "total_capital",
    "terminal_value_pv",
    "p_bankrupt_slb",
    "p_bankrupt_borrow",
    "p_lessor_bankrupt_slb",
    "p_lessor_bankrupt_borrow",
    "p_taxable_income",
    "depreciation_basis",
    "discount_rate",
)
PROBABILITY_FIELDS = (
    "p_bankrupt_slb",
    "p_bankrupt_borrow",
    "p_lessor_bankrupt_slb",
    "p_lessor_bankrupt_borrow",
    "p_taxable_income",
)


def resolved(deal):
    out = dict(deal)
    if out.get("depreciation_basis") is None:
        out["depreciation_basis"] = out["sale_price"]
    if out.get("depreciation_life_months") is None:
        out["depreciation_life_months"] = out["term_months"]
    if out.get("discount_rate") is None:
        out["discount_rate"] = out["borrow_cost_after"]
    return out


def level_pv(payment, annual_discount, n):
    d = annual_discount / 12.0
    return sum(payment * (1.0 + d) ** (-k) for k in range(1, n + 1))


def annuity_payment(principal, annual_rate, n):
    r = annual_rate / 12.0
    if r == 0.0:
        return principal / n
    return principal * r / (1.0 - (1.0 + r) ** (-n))


def interest_pv(principal, annual_rate, annual_discount, n):
    r = annual_rate / 12.0
    d = annual_discount / 12.0
    pay = annuity_payment(principal, annual_rate, n)
    balance = principal
    total = 0.0
    for k in range(1, n + 1):
        interest = balance * r
        balance -= pay - interest
        total += interest * (1.0 + d) ** (-k)
    return total


def depreciation_pv(basis, life, annual_discount, term):
    d = annual_discount / 12.0
    per_month = basis / life
    return sum(per_month * (1.0 + d) ** (-k) for k in range(1, min(life, term) + 1))


def cashflows(deal):
    deal = resolved(deal)
    return {
        "L_s": level_pv(deal["monthly_rent"], deal["discount_rate"], deal["term_months"]),
        "I": interest_pv(
            deal["loan_principal"],
            deal["firm_borrow_cost"],
            deal["discount_rate"],
            deal["term_months"],
        ),
        "D": depreciation_pv(
            deal["depreciation_basis"],
            deal["depreciation_life_months"],
            deal["discount_rate"],
            deal["term_months"],
        ),
        "TV": deal["terminal_value_pv"],
    }


def n_sl(deal, cf):
    """Literal substitution for the seller-lessee's sale-leaseback net position."""
    S = deal["sale_price"]
    R_sl = deal["txn_cost_slb"]
    R_ts = deal["tax_rate_seller_lessee"]
    R_a = deal["leverage_benefit"]
    P_dss = deal["p_bankrupt_slb"]
    P_t = deal["p_taxable_income"]
    L_s, D, TV = cf["L_s"], cf["D"], cf["TV"]
    if deal["classification"] == "capital":
        return S * (1.0 - R_sl) + (
            (L_s * R_ts) + (D * R_ts * P_t) - L_s + R_a + TV
        ) * (1.0 - P_dss)
    return S * (1.0 - R_sl) + ((L_s * R_ts) - L_s + R_a) * (1.0 - P_dss)


def n_b(deal, cf):
    """Literal substitution for the borrowing net position."""
    P = deal["loan_principal"]
    R_ltc = deal["txn_cost_loan"]
    R_ts = deal["tax_rate_seller_lessee"]
    R_dlev = deal["leverage_penalty_rate"]
    DC = deal["debt_to_capital"]
    TC = deal["total_capital"]
    P_dsb = deal["p_bankrupt_borrow"]
    I = cf["I"]
    return P * (1.0 - R_ltc) + (
        (I * R_ts) - (R_dlev * DC * TC) + (R_ts * R_dlev * DC * TC) - I * (1.0 - R_ts)
    ) * (1.0 - P_dsb)


def net_positions(deal):
    deal = resolved(deal)
    cf = cashflows(deal)
    return n_sl(deal, cf), n_b(deal, cf)


def breakeven_s(deal, lo, hi, tol_scale=1e-9, max_iterations=400):
    """Bisect N_sl(S) - N_b over [lo, hi] to a tighter tolerance than the library."""
    deal = resolved(deal)

    def g(s):
        probe = dict(deal)
        probe["sale_price"] = s
        sl, b = net_positions(probe)
        return sl - b, b

    g_lo, _ = g(lo)
    g_hi, _ = g(hi)
    if g_lo == 0.0:
        return lo
    if g_hi == 0.0:
        return hi
    if (g_lo > 0.0) == (g_hi > 0.0):
        raise ValueError(f"no sign change: g({lo})={g_lo}, g({hi})={g_hi}")
    mid = lo
    for _ in range(max_iterations):
        mid = 0.5 * (lo + hi)
        g_mid, b_mid = g(mid)
        if abs(g_mid) < tol_scale * max(1.0, abs(b_mid)):
            break
        if (g_mid > 0.0) == (g_lo > 0.0):
            lo, g_lo = mid, g_mid
        else:
            hi = mid
    return mid


def tornado(deal, perturbation=0.10):
    deal = resolved(deal)
    base_sl, base_b = net_positions(deal)
    base_gap = base_sl - base_b
    rows = []
    for name in SCALAR_FIELDS:
        value = deal[name]
        x_down = value * (1.0 - perturbation)
        x_up = value * (1.0 + perturbation)
        if name in PROBABILITY_FIELDS:
            x_down = min(max(x_down, 0.0), 1.0)
            x_up = min(max(x_up, 0.0), 1.0)
        down = dict(deal)
        down[name] = x_down
        up = dict(deal)
        up[name] = x_up
        sl_dn, b_dn = net_positions(down)
        sl_up, b_up = net_positions(up)
        rows.append(
            {
                "parameter": name,
                "delta_n_sl_down": sl_dn - base_sl,
                "delta_n_sl_up": sl_up - base_sl,
                "delta_n_b_down": b_dn - base_b,
                "delta_n_b_up": b_up - base_b,
                "delta_gap_down": (sl_dn - b_dn) - base_gap,
                "delta_gap_up": (sl_up - b_up) - base_gap,
            }
        )
    rows.sort(
        key=lambda r: (
            -max(abs(r["delta_gap_down"]), abs(r["delta_gap_up"])),
            r["parameter"],
        )
    )
    return rows


def expected_for(scenario_path, breakeven_bracket):
    with open(scenario_path, "r", encoding="utf-8") as fh:
        scenario = json.load(fh)
    deal = resolved(scenario["deal"])
    cf = cashflows(deal)
    sl, b = n_sl(deal, cf), n_b(deal, cf)
    lo, hi = breakeven_bracket
    return {
        "scenario_name": scenario.get("meta", {}).get("name", "unnamed"),
        "cashflows": cf,
        "N_sl": sl,
        "N_b": b,
        "breakeven_S": breakeven_s(deal, lo, hi),
        "breakeven_bracket": [lo, hi],
        "tornado": tornado(deal),
    }


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--write-golden", action="store_true")
    parser.add_argument(
        "--root", default=os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
    )
    args = parser.parse_args()
    if not args.write_golden:
        parser.error("nothing to do; pass --write-golden")
    jobs = [
        ("scenarios/DESK-1.json", "tests/golden/desk1_expected.json", (0.0, 2.0e7)),
        ("scenarios/mini-linear.json", "tests/golden/mini_expected.json", (0.0, 1.0e3)),
    ]
    for src, dst, bracket in jobs:
        expected = expected_for(os.path.join(args.root, src), bracket)
        out_path = os.path.join(args.root, dst)
        os.makedirs(os.path.dirname(out_path), exist_ok=True)
        with open(out_path, "w", encoding="utf-8") as fh:
            json.dump(expected, fh, indent=2)
            fh.write("\n")
        print(f"wrote {dst} (N_sl={expected['N_sl']!r}, N_b={expected['N_b']!r})")


if __name__ == "__main__":
    main()
