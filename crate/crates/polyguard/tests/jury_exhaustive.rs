//! Exhaustive jury-vote correctness: every label vector for jury sizes 3, 4
//! and 5 (56 cases) must produce label = (unsafe votes >= 2), and category
//! aggregation must be invariant under permutation of the opinion list.

use std::collections::BTreeSet;

use polyguard::jury::{aggregate, select_assessment, JudgeOpinion};
use polyguard::taxonomy::{CategoryCode, SafetyLabel};

use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};

fn opinion(id: usize, label: SafetyLabel, codes: &[u8]) -> JudgeOpinion {
    JudgeOpinion::new(
        format!("judge-{id}"),
        label,
        codes.iter().map(|&i| CategoryCode::new(i).unwrap()),
        format!("assessment from judge-{id}"),
    )
}

#[test]
fn all_label_vectors_for_sizes_three_to_five() {
    let mut cases = 0usize;
    for n in [3usize, 4, 5] {
        for mask in 0u32..(1 << n) {
            let opinions: Vec<JudgeOpinion> = (0..n)
                .map(|i| {
                    let label = if mask & (1 << i) != 0 {
                        SafetyLabel::Unsafe
                    } else {
                        SafetyLabel::Safe
                    };
                    opinion(i, label, &[(i as u8 % 12) + 1])
                })
                .collect();
            let unsafe_votes = mask.count_ones() as usize;
            let verdict = aggregate(&opinions, 2).unwrap();
            let expected = if unsafe_votes >= 2 { SafetyLabel::Unsafe } else { SafetyLabel::Safe };
            assert_eq!(verdict.label, expected, "n={n} mask={mask:05b}");
            assert_eq!(verdict.unsafe_votes, unsafe_votes);
            assert_eq!(verdict.total_votes, n);
            if verdict.label == SafetyLabel::Safe {
                assert!(verdict.categories.is_empty());
            }
            cases += 1;
        }
    }
    assert_eq!(cases, 56);
}

#[test]
fn aggregation_is_permutation_invariant() {
    let mut rng = StdRng::seed_from_u64(0xda7a);
    for round in 0..1_000 {
        let n = rng.random_range(3..=7usize);
        let baseline: Vec<JudgeOpinion> = (0..n)
            .map(|i| {
                let label = if rng.random_bool(0.5) { SafetyLabel::Unsafe } else { SafetyLabel::Safe };
                let codes: Vec<u8> = (0..rng.random_range(0..=3)).map(|_| rng.random_range(1..=12)).collect();
                opinion(i, label, &codes)
            })
            .collect();
        let reference = aggregate(&baseline, 2).unwrap();

        let mut shuffled = baseline.clone();
        shuffled.shuffle(&mut rng);
        let permuted = aggregate(&shuffled, 2).unwrap();

        assert_eq!(reference.label, permuted.label, "round {round}");
        assert_eq!(reference.categories, permuted.categories, "round {round}");
        assert_eq!(reference.per_code_counts, permuted.per_code_counts, "round {round}");
        assert_eq!(reference.unsafe_votes, permuted.unsafe_votes, "round {round}");

        // Assessment selection depends on the priority list, not input order.
        let priority: Vec<String> = (0..n).map(|i| format!("judge-{i}")).collect();
        let a = select_assessment(&baseline, reference.label, &priority).unwrap();
        let b = select_assessment(&shuffled, permuted.label, &priority).unwrap();
        assert_eq!(a, b, "round {round}");
    }
}

#[test]
fn categories_are_a_subset_of_unsafe_judges_union() {
    let mut rng = StdRng::seed_from_u64(0xf00d);
    for _ in 0..500 {
        let n = rng.random_range(3..=6usize);
        let opinions: Vec<JudgeOpinion> = (0..n)
            .map(|i| {
                let label = if rng.random_bool(0.6) { SafetyLabel::Unsafe } else { SafetyLabel::Safe };
                let codes: Vec<u8> = (0..rng.random_range(0..=4)).map(|_| rng.random_range(1..=12)).collect();
                opinion(i, label, &codes)
            })
            .collect();
        let verdict = aggregate(&opinions, 2).unwrap();
        let union: BTreeSet<CategoryCode> = opinions
            .iter()
            .filter(|o| o.label == SafetyLabel::Unsafe)
            .flat_map(|o| o.categories.iter().copied())
            .collect();
        assert!(verdict.categories.is_subset(&union));
        assert_eq!(verdict.categories.is_empty(), verdict.label == SafetyLabel::Safe || union.is_empty());
    }
}
