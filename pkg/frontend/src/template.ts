/**
 * Built-in DESK-1 template scenario.
 *
 * This is the reference desk scenario shipped with the decision service,
 * embedded verbatim so the UI can start without a file. Callers get a fresh
 * deep copy each time; the template itself is never mutated.
 */

import type { Scenario } from "./types.js";

const DESK1: Scenario = {
  "schema_version": "1",
  "meta": {
    "name": "DESK-1",
    "lifecycle_stage": "decision to lease",
    "notes": "reference desk scenario: 15-year retail property, capital lease, full curve set"
  },
  "deal": {
    "sale_price": 10000000.0,
    "loan_principal": 10000000.0,
    "monthly_rent": 95000.0,
    "term_months": 180,
    "implicit_lease_rate": 0.082,
    "borrow_cost_before": 0.078,
    "borrow_cost_after": 0.074,
    "firm_borrow_cost": 0.079,
    "tax_rate_seller_lessee": 0.35,
    "tax_rate_buyer_lessor": 0.3,
    "txn_cost_slb": 0.025,
    "txn_cost_loan": 0.015,
    "leverage_benefit": 150000.0,
    "leverage_penalty_rate": 0.012,
    "debt_to_capital": 0.45,
    "total_capital": 40000000.0,
    "terminal_value_pv": 2500000.0,
    "p_bankrupt_slb": 0.06,
    "p_bankrupt_borrow": 0.09,
    "p_lessor_bankrupt_slb": 0.03,
    "p_lessor_bankrupt_borrow": 0.04,
    "p_taxable_income": 0.8,
    "classification": "capital",
    "depreciation_basis": 10000000.0,
    "depreciation_life_months": 180,
    "discount_rate": 0.074
  },
  "curves": {
    "P_dss_of_DC": {
      "interpolation": "cubic",
      "xs": [
        0.1,
        0.1875,
        0.275,
        0.36250000000000004,
        0.45000000000000007,
        0.5375000000000001,
        0.625,
        0.7125,
        0.8
      ],
      "ys": [
        0.020200000000000003,
        0.030068359375000006,
        0.041659375000000005,
        0.055776953125000014,
        0.07322500000000003,
        0.09480742187500003,
        0.121328125,
        0.153591015625,
        0.19240000000000004
      ]
    },
    "P_dss_of_Rbb": {
      "interpolation": "cubic",
      "xs": [
        0.02,
        0.035,
        0.05,
        0.065,
        0.08,
        0.09500000000000001,
        0.11000000000000001,
        0.125,
        0.14
      ],
      "ys": [
        0.018240000000000003,
        0.02528625,
        0.03375000000000001,
        0.04423875000000001,
        0.05736000000000001,
        0.07372125000000002,
        0.09393000000000004,
        0.11859375,
        0.14832
      ]
    },
    "P_dss_of_Rf": {
      "interpolation": "cubic",
      "xs": [
        0.02,
        0.035,
        0.05,
        0.065,
        0.08,
        0.09500000000000001,
        0.11000000000000001,
        0.125,
        0.14
      ],
      "ys": [
        0.018320000000000003,
        0.027215000000000003,
        0.038000000000000006,
        0.051485,
        0.06848000000000001,
        0.08979500000000001,
        0.11624000000000002,
        0.148625,
        0.18776000000000004
      ]
    },
    "R_ba_of_DC": {
      "interpolation": "cubic",
      "xs": [
        0.1,
        0.1875,
        0.275,
        0.36250000000000004,
        0.45000000000000007,
        0.5375000000000001,
        0.625,
        0.7125,
        0.8
      ],
      "ys": [
        0.04055999999999999,
        0.0448330078125,
        0.0496228125,
        0.0551705859375,
        0.061717499999999995,
        0.06950472656250001,
        0.07877343749999999,
        0.0897648046875,
        0.10272
      ]
    },
    "R_bb_of_DC": {
      "interpolation": "cubic",
      "xs": [
        0.1,
        0.1875,
        0.275,
        0.36250000000000004,
        0.45000000000000007,
        0.5375000000000001,
        0.625,
        0.7125,
        0.8
      ],
      "ys": [
        0.045079999999999995,
        0.04990234375,
        0.055413750000000005,
        0.06193578125,
        0.06979,
        0.07929796875,
        0.09078125000000001,
        0.10456140625,
        0.12096000000000003
      ]
    },
    "R_dlev_of_DC": {
      "interpolation": "cubic",
      "xs": [
        0.1,
        0.1875,
        0.275,
        0.36250000000000004,
        0.45000000000000007,
        0.5375000000000001,
        0.625,
        0.7125,
        0.8
      ],
      "ys": [
        0.007209999999999999,
        0.008315917968750001,
        0.009507968750000002,
        0.010826347656250002,
        0.012311250000000001,
        0.014002871093750001,
        0.015941406249999998,
        0.01816705078125,
        0.020720000000000002
      ]
    },
    "R_f_of_DC": {
      "interpolation": "cubic",
      "xs": [
        0.1,
        0.1875,
        0.275,
        0.36250000000000004,
        0.45000000000000007,
        0.5375000000000001,
        0.625,
        0.7125,
        0.8
      ],
      "ys": [
        0.056100000000000004,
        0.061909179687499996,
        0.0685796875,
        0.07651347656250002,
        0.08611250000000002,
        0.09777871093750001,
        0.1119140625,
        0.1289205078125,
        0.14920000000000003
      ]
    },
    "R_f_of_P": {
      "interpolation": "cubic",
      "xs": [
        5000000.0,
        6250000.0,
        7500000.0,
        8750000.0,
        10000000.0,
        11250000.0,
        12500000.0,
        13750000.0,
        15000000.0
      ],
      "ys": [
        0.07250000000000001,
        0.074375,
        0.07625,
        0.078125,
        0.08,
        0.081875,
        0.08375,
        0.085625,
        0.0875
      ]
    },
    "R_s_of_S": {
      "interpolation": "cubic",
      "xs": [
        5000000.0,
        6250000.0,
        7500000.0,
        8750000.0,
        10000000.0,
        11250000.0,
        12500000.0,
        13750000.0,
        15000000.0
      ],
      "ys": [
        0.06999999999999999,
        0.0725,
        0.075,
        0.0775,
        0.08,
        0.0825,
        0.08499999999999999,
        0.0875,
        0.09
      ]
    },
    "r_a_of_DC": {
      "interpolation": "cubic",
      "xs": [
        0.1,
        0.1875,
        0.275,
        0.36250000000000004,
        0.45000000000000007,
        0.5375000000000001,
        0.625,
        0.7125,
        0.8
      ],
      "ys": [
        0.002804,
        0.0035263671875,
        0.0042831875000000005,
        0.0050905390625,
        0.005964500000000001,
        0.006921148437500001,
        0.0079765625,
        0.0091468203125,
        0.010448000000000002
      ]
    }
  },
  "options": {
    "mode": "verbatim",
    "fd_step_fraction": null,
    "breakeven_tol": 1e-06,
    "breakeven_max_iterations": 200
  }
};

export function desk1Template(): Scenario {
  return structuredClone(DESK1);
}

export const TEMPLATE_NAMES = ["DESK-1"] as const;

export function templateByName(name: string): Scenario | null {
  return name === "DESK-1" ? desk1Template() : null;
}
