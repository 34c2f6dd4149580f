//! Fairness-degrading data poisoning for k-median clustering.
//!
//! The library answers one question: given a dataset with protected-group
//! labels, how few injected points does an adversary need so that k-median
//! clustering on the poisoned data lands on centers with the worst possible
//! group balance?
//!
//! The pieces:
//!
//! * [`dataset`] — CSV loading, protected groups, metrics, scaling.
//! * [`fairness`] — nearest-center assignment and the balance measure
//!   (min over clusters and groups of min(ρ, 1/ρ)).
//! * [`clustering`] — weighted point pools, the k-median cost Ω, a PAM
//!   solver, and the phantom-center transform Θ that turns cost
//!   minimization into monotone submodular maximization.
//! * [`attack`] — the balance-minimizing center search and the injection
//!   loop that realizes those centers, plus the analytic budget bound.
//! * [`oracle`] — exhaustive ground truth for small instances, used by the
//!   test suites to verify the approximation and budget guarantees.
//! * [`cli`] — the experiment harness behind the `medoid-poison` binary.

pub mod attack;
pub mod cli;
pub mod clustering;
pub mod dataset;
pub mod fairness;
pub mod oracle;

pub use attack::{
    attack_cost, epsilon_upper_bound, epsilon_upper_bound_for_partitions,
    find_adversarial_centroids, run_attack, AdversarialSet, AttackError, AttackOutcome,
    AttackParams, AttackStatus, EpsilonBound,
};
pub use clustering::{
    greedy_centers, make_phantom, omega, pam_kmedian, theta, Center, CenterSet, ClusterError,
    PhantomCenter, Pool, CACHE_THRESHOLD,
};
pub use dataset::{
    diameter, distance, load_csv, minmax_scale, subsample, write_csv, DataError, Dataset, Metric,
    ProtectedGroups,
};
pub use fairness::{
    assign, balance, balance_from_assignment, Assignment, BalanceResult, FairnessError, Rho,
};
pub use oracle::{
    brute_force_kmedian, brute_force_min_balance, check_approximation_ratio, is_well_separated,
    ExhaustiveResult, OracleError,
};
