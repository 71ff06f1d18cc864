//! The projection formulas against the brute-force fiber-sum oracle, in
//! exact rational arithmetic: for every shape of size up to 6 and every
//! shift cycle structure of size up to 3, the formula output agrees
//! pointwise on all of S_n with direct enumeration of S_N.

use splitmerge_core::character::{
    brute_force_shifted_projection, matches_brute_force, project_char_general,
    project_char_shifted, tail_cycles_permutation, tau_q_class_function,
};
use splitmerge_core::partition::{partitions, Partition};

#[test]
fn projections_match_fiber_sums() {
    for big_n in 1..=6u32 {
        for lambda in partitions(big_n) {
            for k in 1..=big_n.min(3) {
                let n = big_n - k;
                let single_cycle = Partition::new(vec![k]).unwrap();
                let g = tail_cycles_permutation(n, &single_cycle, big_n).unwrap();
                let oracle = brute_force_shifted_projection(&lambda, &g, n).unwrap();

                let shifted = project_char_shifted(&lambda, k).unwrap();
                assert!(
                    matches_brute_force(&shifted, &oracle).unwrap(),
                    "shifted projection disagrees at lambda={lambda}, k={k}"
                );

                for nu in partitions(k) {
                    let g = tail_cycles_permutation(n, &nu, big_n).unwrap();
                    let oracle = brute_force_shifted_projection(&lambda, &g, n).unwrap();
                    let general = project_char_general(&lambda, &nu).unwrap();
                    assert!(
                        matches_brute_force(&general, &oracle).unwrap(),
                        "general projection disagrees at lambda={lambda}, nu={nu}"
                    );
                }
            }
        }
    }
}

#[test]
fn projected_chain_measures_are_probabilities() {
    for n in 2..=5u32 {
        for q in 0..=8u32 {
            let tau_q = tau_q_class_function(n, q).unwrap();
            assert!(
                tau_q.is_probability_measure().unwrap(),
                "tau^{q}_{n} fails the probability check"
            );
        }
    }
}
