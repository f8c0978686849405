#pragma once

// Generated by tests/oracle/generate_reference.py (mpmath, exact fractions).

namespace ref {

inline constexpr double log_gamma_0_5 = 0.57236494292470008707;
inline constexpr double log_gamma_1 = 0.0;
inline constexpr double log_gamma_1_5 = -0.12078223763524522235;
inline constexpr double log_gamma_2_5 = 0.28468287047291915963;
inline constexpr double log_gamma_10 = 12.801827480081469611;
inline constexpr double log_gamma_33_3 = 82.603723581654952928;
inline constexpr double log_gamma_1000 = 5905.2204232091812118;
inline constexpr double log_gamma_1000000 = 12815504.56914761166;
inline constexpr double zeta_1_5 = 2.6123753486854883433;
inline constexpr double zeta_2 = 1.6449340668482264365;
inline constexpr double zeta_3 = 1.2020569031595942854;
inline constexpr double zeta_4 = 1.0823232337111381915;
inline constexpr double zeta_10_5 = 1.0007008426417361552;
inline constexpr double zeta_40 = 1.0000000000009094948;
inline constexpr double zeta_series_0_1 = 1.00057861967159404;
inline constexpr double zeta_series_0_5 = 1.2453441720589768684;
inline constexpr double zeta_series_1 = 1.8145451964881737794;
inline constexpr double zeta_series_2 = 3.126277171282786206;
inline constexpr double zeta_series_3 = 4.5071258746653873573;
inline constexpr double gamma_pq_1_1 = 1.0;
inline constexpr double gamma_pq_1_1_5 = 1.1797919321245900854;
inline constexpr double gamma_pq_1_2 = 1.3154892469589138281;
inline constexpr double gamma_pq_1_3 = 1.5123340897581764544;
inline constexpr double gamma_pq_1_inf = 2.7182818284590452354;
inline constexpr double gamma_pq_1_5_1 = 0.84760708458073822542;
inline constexpr double gamma_pq_1_5_1_5 = 1.0;
inline constexpr double gamma_pq_1_5_2 = 1.1150180054121557085;
inline constexpr double gamma_pq_1_5_3 = 1.2818650887319924252;
inline constexpr double gamma_pq_1_5_inf = 2.3040349356889697106;
inline constexpr double gamma_pq_2_1 = 0.76017345053314040281;
inline constexpr double gamma_pq_2_1_5 = 0.89684650395431022097;
inline constexpr double gamma_pq_2_2 = 1.0;
inline constexpr double gamma_pq_2_3 = 1.1496362233703690669;
inline constexpr double gamma_pq_2_inf = 2.0663656770612464692;
inline constexpr double gamma_pq_3_1 = 0.66122955686325954332;
inline constexpr double gamma_pq_3_1_5 = 0.78011329646959148338;
inline constexpr double gamma_pq_3_2 = 0.8698403718250255874;
inline constexpr double gamma_pq_3_3 = 1.0;
inline constexpr double gamma_pq_3_inf = 1.797408288861425375;
inline constexpr double gamma_pq_inf_1 = 0.3678794411714423216;
inline constexpr double gamma_pq_inf_1_5 = 0.43402119668857041081;
inline constexpr double gamma_pq_inf_2 = 0.4839414490382866996;
inline constexpr double gamma_pq_inf_3 = 0.55635661980475984661;
inline constexpr double gamma_pq_inf_inf = 1.0;
inline constexpr double volume_ratio_inf_2_2 = 1.1283791670955125739;
inline constexpr double volume_ratio_1_2_5 = 0.55072406185431162069;
inline constexpr double volume_ratio_1_5_3_7 = 0.6393482271522029433;
inline constexpr double volume_ratio_inf_1_50 = 19.483254226981281425;
inline constexpr double volume_ratio_2_inf_10000 = 0.020652960824470569041;
inline constexpr double canonical_entropy_rational_eps_1e_2 = 175.77313418465400658;
inline constexpr unsigned long canonical_entropy_dim_1e_2 = 99;
inline constexpr double canonical_entropy_rational_eps_1e_3 = 1806.7971558997580259;
inline constexpr unsigned long canonical_entropy_dim_1e_3 = 999;
inline constexpr double estimator_1_1_eps_1e_4 = 14418.980792612664519;
inline constexpr unsigned long estimator_dim_1_1 = 9999;
inline constexpr double estimator_2_1_eps_1e_4 = 279.24125137482556651;
inline constexpr unsigned long estimator_dim_2_1 = 99;
inline constexpr double estimator_1_3_eps_1e_4 = 43272.089137156544534;
inline constexpr unsigned long estimator_dim_1_3 = 30000;
inline constexpr double cesaro_0_5_1000 = 0.71819314022865673559;
inline constexpr double cesaro_0_5_100000 = 0.72129936759696070152;
inline constexpr double cesaro_1_1000 = 1.4363862804573134712;
inline constexpr double cesaro_1_100000 = 1.442598735193921403;
inline constexpr double cesaro_3_1000 = 4.3091588413719404135;
inline constexpr double cesaro_3_100000 = 4.3277962055817642091;
inline constexpr double tail_zeta2_after_10 = 0.095166335681685746122;
inline constexpr double tail_n_pow_m1_5_after_100 = 0.19950124998177190742;
inline constexpr double tail_two_term_sq_after_50 = 0.033543536567360584129;
inline constexpr double unit_ball_log_volume_1_5_d3 = 1.0793498622379681789;
inline constexpr double unit_ball_log_volume_3_d2 = 1.2622259105998461877;

}  // namespace ref
