"""Self-reciprocal factors of x^n +- 1 and LCD negacyclic codes over odd-characteristic finite fields.

Fields are given as (p, e) with q = p^e. Hermitian mode takes the base field
and works over F_{q^2}. Polynomials use the text format "c0,c1,...,cd" with
extension-field coefficients written "[a0 a1 ...]".
"""

import json

from . import _negacycl as _core

is_good = _core.is_good
is_oddly_good = _core.is_oddly_good
mult_ord = _core.mult_ord
euler_phi = _core.euler_phi
count_srim_cyclic_recursive = _core.count_srim_cyclic_recursive
count_srim_negacyclic_recursive = _core.count_srim_negacyclic_recursive
count_scrim_cyclic_recursive = _core.count_scrim_cyclic_recursive
count_scrim_negacyclic_recursive = _core.count_scrim_negacyclic_recursive
count_srim_cyclic_as_printed = _core.count_srim_cyclic_as_printed
count_srim_negacyclic_as_printed = _core.count_srim_negacyclic_as_printed
count_two_prime_srim = _core.count_two_prime_srim
count_two_prime_scrim = _core.count_two_prime_scrim
classify_extreme = _core.classify_extreme
dual_generator = _core.dual_generator
brute_dual_generator = _core.brute_dual_generator
is_lcd = _core.is_lcd


def factor(p, e, n, sign=-1, mode="euclidean"):
    """Tagged factorization of x^n - 1 (sign=+1) or x^n + 1 (sign=-1) as a dict."""
    return json.loads(_core.factor_json(p, e, n, sign, mode))


def verify(report):
    """Re-check a report dict; returns (ok, detail)."""
    return _core.verify_json(json.dumps(report))


def count_srim_cyclic(q, n):
    return json.loads(_core.count_srim_cyclic_json(q, n))


def count_scrim_cyclic(q, n):
    return json.loads(_core.count_scrim_cyclic_json(q, n))


def count_srim_negacyclic(q, m, n_prime):
    return json.loads(_core.count_srim_negacyclic_json(q, m, n_prime))


def count_scrim_negacyclic(q, m, n_prime):
    return json.loads(_core.count_scrim_negacyclic_json(q, m, n_prime))


def count_lcd(q, n, mode="euclidean"):
    return json.loads(_core.count_lcd_json(q, n, mode))


def enumerate_lcd(p, e, n, mode="euclidean"):
    return json.loads(_core.enumerate_lcd_json(p, e, n, mode))


def selftest(q_max=9, n_max=50, code_n_max=12):
    """Run criteria 1-7 on a reduced grid; returns one dict per criterion."""
    return json.loads(_core.selftest_json(q_max, n_max, code_n_max))
