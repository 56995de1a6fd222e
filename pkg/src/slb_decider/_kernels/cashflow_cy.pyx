# cython: boundscheck=False, wraparound=False, cdivision=False
"""Compiled cashflow kernels.

Operation-for-operation identical to cashflow_py so results match the
pure-Python backend bit for bit (no fast-math, IEEE doubles throughout).
"""

import numpy as np

BACKEND = "compiled"


cpdef double annuity_payment(double principal, double rate, int n):
    # Rates below one ulp of 1.0 make the closed-form denominator vanish.
    if 1.0 + rate == 1.0:
        return principal / n
    return principal * rate / (1.0 - (1.0 + rate) ** (-n))


def amortization_columns(double principal, double rate, int n):
    payments_arr = np.empty(n)
    interest_arr = np.empty(n)
    principal_arr = np.empty(n)
    balance_arr = np.empty(n)
    cdef double[::1] payments = payments_arr
    cdef double[::1] interest = interest_arr
    cdef double[::1] principal_part = principal_arr
    cdef double[::1] balance_after = balance_arr
    cdef double pay = annuity_payment(principal, rate, n)
    cdef double balance = principal
    cdef double i_k, p_k
    cdef int k
    for k in range(n):
        i_k = balance * rate
        p_k = pay - i_k
        balance = balance - p_k
        payments[k] = pay
        interest[k] = i_k
        principal_part[k] = p_k
        balance_after[k] = balance
    return payments_arr, interest_arr, principal_arr, balance_arr


cpdef double interest_pv(double principal, double rate, int n, double discount):
    cdef double pay = annuity_payment(principal, rate, n)
    cdef double inv = 1.0 / (1.0 + discount)
    cdef double df = 1.0
    cdef double balance = principal
    cdef double total = 0.0
    cdef double i_k
    cdef int k
    for k in range(n):
        i_k = balance * rate
        balance = balance - (pay - i_k)
        df = df * inv
        total = total + i_k * df
    return total


cpdef double level_pv(double payment, double discount, int n):
    if 1.0 + discount == 1.0:
        return payment * n
    return payment * (1.0 - (1.0 + discount) ** (-n)) / discount


def stream_pv(indices, amounts, double discount):
    cdef long[::1] idx_view = np.ascontiguousarray(indices, dtype=np.int64)
    cdef double[::1] amt_view = np.ascontiguousarray(amounts, dtype=np.float64)
    cdef double inv = 1.0 / (1.0 + discount)
    cdef double df = 1.0
    cdef long k = 0
    cdef double total = 0.0
    cdef Py_ssize_t i
    for i in range(idx_view.shape[0]):
        while k < idx_view[i]:
            df = df * inv
            k += 1
        total = total + amt_view[i] * df
    return total
