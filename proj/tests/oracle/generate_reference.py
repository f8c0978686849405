#!/usr/bin/env python3
"""Reference values computed independently of the C++ code (mpmath, exact
fractions). Writes tests/reference_values.hpp; rerun after changing the list."""

import math
from fractions import Fraction
from pathlib import Path

import mpmath as mp

mp.mp.dps = 40


def ref_log_gamma():
    return {x: mp.loggamma(x) for x in ["0.5", "1", "1.5", "2.5", "10", "33.3", "1000", "1000000"]}


def ref_zeta():
    return {s: mp.zeta(mp.mpf(s)) for s in ["1.5", "2", "3", "4", "10.5", "40"]}


def zeta_series(b):
    s = 1 / mp.mpf(b)
    # the default acceleration is unreliable for the slow k^(-1-s) decay
    return mp.nsum(lambda k: mp.log(1 + 1 / k) * k ** (-s), [1, mp.inf], method="euler-maclaurin") / mp.log(2)


def gamma_factor(p):
    if p == "inf":
        return mp.mpf(1), mp.mpf(0)
    p = mp.mpf(p)
    return mp.gamma(1 / p + 1) * p ** (1 / p), 1 / p


def gamma_pq(p, q):
    np_, rp = gamma_factor(p)
    nq, rq = gamma_factor(q)
    return np_ / (nq * mp.e ** (rq - rp))


def log_ball(p, d):
    if p == "inf":
        return d * mp.log(2)
    p = mp.mpf(p)
    return d * mp.log(2 * mp.gamma(1 + 1 / p)) - mp.loggamma(1 + d / p)


def volume_ratio(p, q, d):
    return mp.e ** ((log_ball(p, d) - log_ball(q, d)) / d)


def exact_canonical_entropy(eps_num, eps_den):
    """log2 prod ceil(n^-1 / eps) for mu_n = 1/n, eps = eps_num/eps_den exactly."""
    eps = Fraction(eps_num, eps_den)
    prod = 1
    n = 1
    while Fraction(1, n) > eps:
        q = Fraction(1, n) / eps
        prod *= -(-q.numerator // q.denominator)
        n += 1
    return mp.log(prod, 2), n - 1


def estimator(b, c, eps):
    b, c, eps = mp.mpf(b), mp.mpf(c), mp.mpf(eps)
    d = int(mp.floor((c / eps) ** (1 / b)))
    while c * mp.mpf(d + 1) ** (-b) > eps:
        d += 1
    while d > 0 and not c * mp.mpf(d) ** (-b) > eps:
        d -= 1
    # sum log2(c n^-b / eps) = d log2(c/eps) - b log2(d!)
    return d * mp.log(c / eps, 2) - b * mp.loggamma(d + 1) / mp.log(2), d


def cesaro(b, N):
    # (1/N) sum log2(n^-b / N^-b) = b (N log2 N - log2 N!) / N
    return b * (N * mp.log(N, 2) - mp.loggamma(N + 1) / mp.log(2)) / N


def main():
    out = ["#pragma once", "", "// Generated by tests/oracle/generate_reference.py (mpmath, exact fractions).", "",
           "namespace ref {", ""]

    def emit(name, value, digits=20):
        out.append(f"inline constexpr double {name} = {mp.nstr(value, digits)};")

    for x, v in ref_log_gamma().items():
        emit("log_gamma_" + x.replace(".", "_"), v)
    for s, v in ref_zeta().items():
        emit("zeta_" + s.replace(".", "_"), v)
    for b in ["0.1", "0.5", "1", "2", "3"]:
        emit("zeta_series_" + b.replace(".", "_"), zeta_series(b))
    names = {"1": "1", "1.5": "1_5", "2": "2", "3": "3", "inf": "inf"}
    for p in names:
        for q in names:
            emit(f"gamma_pq_{names[p]}_{names[q]}", gamma_pq(p, q))
    for p, q, d in [("inf", "2", 2), ("1", "2", 5), ("1.5", "3", 7), ("inf", "1", 50), ("2", "inf", 10000)]:
        emit(f"volume_ratio_{names[p]}_{names[q]}_{d}", volume_ratio(p, q, d))
    for num, den, tag in [(1, 100, "1e_2"), (1, 1000, "1e_3")]:
        v, d = exact_canonical_entropy(num, den)
        emit(f"canonical_entropy_rational_eps_{tag}", v)
        out.append(f"inline constexpr unsigned long canonical_entropy_dim_{tag} = {d};")
    for b, c, tag in [("1", "1", "1_1"), ("2", "1", "2_1"), ("1", "3", "1_3")]:
        v, d = estimator(b, c, "1e-4")
        emit(f"estimator_{tag}_eps_1e_4", v)
        out.append(f"inline constexpr unsigned long estimator_dim_{tag} = {d};")
    for b in ["0.5", "1", "3"]:
        for N in [1000, 100000]:
            emit(f"cesaro_{b.replace('.', '_')}_{N}", cesaro(mp.mpf(b), N))
    emit("tail_zeta2_after_10", mp.zeta(2) - sum(mp.mpf(1) / n ** 2 for n in range(1, 11)))
    emit("tail_n_pow_m1_5_after_100", mp.zeta(mp.mpf("1.5"), 101))
    emit("tail_two_term_sq_after_50", mp.nsum(lambda n: (n ** -1 + n ** mp.mpf("-1.25")) ** 2, [51, mp.inf], method="euler-maclaurin"))
    emit("unit_ball_log_volume_1_5_d3", log_ball("1.5", 3))
    emit("unit_ball_log_volume_3_d2", log_ball("3", 2))
    out += ["", "}  // namespace ref", ""]
    Path(__file__).resolve().parent.parent.joinpath("reference_values.hpp").write_text("\n".join(out))


if __name__ == "__main__":
    main()
