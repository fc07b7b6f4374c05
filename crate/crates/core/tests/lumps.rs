mod common;

use std::collections::BTreeSet;

use autocomplexity::search::{admissible_extensions, build_lump_tree};
use autocomplexity::{Error, Nfa, StateSequence, Word};
use num_traits::One;

use common::words_of_len;

fn prefix(x: &Word, k: usize) -> Word {
    Word::from_bits(x.iter().take(k))
}

/// A run rejected by the lump rule already has a second walk to the
/// offending state, so nothing built on it can accept uniquely.
#[test]
fn rejected_runs_have_a_second_walk() {
    for n in 1..=6 {
        for x in words_of_len(n) {
            for run in StateSequence::enumerate(n + 1, 4) {
                if let Err(Error::LumpViolation { position, .. }) = build_lump_tree(&run, Some(&x))
                {
                    let m =
                        Nfa::from_run(&run.states()[..=position], &prefix(&x, position)).unwrap();
                    assert!(
                        m.count_accepting_paths(position) >= 2u32.into(),
                        "{x} {run}"
                    );
                    let full = Nfa::from_run(run.states(), &x).unwrap();
                    assert!(!full.count_accepting_paths(n).is_one(), "{x} {run}");
                }
            }
        }
    }
}

/// `admissible_extensions` is exactly the set of next states the lump rule
/// lets through.
#[test]
fn extensions_match_the_lump_rule() {
    let max_states = 4;
    for n in 1..=5 {
        for x in words_of_len(n) {
            for len in 1..=n {
                for run in StateSequence::enumerate(len, max_states) {
                    let xs = prefix(&x, len - 1);
                    let Ok(tree) = build_lump_tree(&run, Some(&xs)) else {
                        continue;
                    };
                    let expected: BTreeSet<usize> = (0..=run.state_count().min(max_states - 1))
                        .filter(|&s| {
                            let mut next = run.states().to_vec();
                            next.push(s);
                            let next = StateSequence::new(next).unwrap();
                            build_lump_tree(&next, Some(&prefix(&x, len))).is_ok()
                        })
                        .collect();
                    assert_eq!(
                        admissible_extensions(&x, &run, &tree, max_states),
                        expected,
                        "{x} {run}"
                    );
                }
            }
        }
    }
}
