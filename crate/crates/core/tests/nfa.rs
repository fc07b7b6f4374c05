use autocomplexity::nfa::PathClass;
use autocomplexity::oracle::naive_walk_count;
use autocomplexity::search::{classify_structure, StateSequence};
use autocomplexity::{Nfa, Transition, WitnessResult, Word};
use num_bigint::BigUint;
use num_traits::One;
use proptest::prelude::*;

fn arb_nfa() -> impl Strategy<Value = Nfa> {
    (1usize..=4).prop_flat_map(|q| {
        (
            Just(q),
            0..q,
            0..q,
            proptest::collection::vec((0..q, 0u8..2, 0..q), 0..10),
        )
            .prop_map(|(q, i, a, ts)| {
                Nfa::new(
                    q,
                    i,
                    a,
                    ts.into_iter().map(|(f, b, t)| Transition::new(f, b, t)),
                )
                .unwrap()
            })
    })
}

proptest! {
    #[test]
    fn reversal_keeps_every_count(m in arb_nfa(), n in 0usize..8) {
        prop_assert_eq!(m.reverse().count_accepting_paths(n), m.count_accepting_paths(n));
    }

    #[test]
    fn adding_a_transition_never_lowers_a_count(m in arb_nfa(), f in 0usize..4, b in 0u8..2, t in 0usize..4, n in 0usize..8) {
        let q = m.state_count();
        let extra = Transition::new(f % q, b, t % q);
        let bigger = Nfa::new(q, m.initial(), m.accepting(), m.transitions().iter().copied().chain([extra])).unwrap();
        let before = m.path_profile(n);
        let after = bigger.path_profile(n);
        for s in 0..q {
            prop_assert!(after.counts_by_state[s] >= before.counts_by_state[s]);
        }
    }

    #[test]
    fn unique_word_exactly_when_one_walk(m in arb_nfa(), n in 0usize..8) {
        let count = m.count_accepting_paths(n);
        match m.unique_word(n) {
            Some(w) => {
                prop_assert!(count.is_one());
                prop_assert_eq!(w.len(), n);
                prop_assert!(m.accepts(&w));
            }
            None => prop_assert!(!count.is_one()),
        }
        let class = m.accepting_path_class(n);
        prop_assert_eq!(class == PathClass::Unique, count.is_one());
        prop_assert_eq!(class == PathClass::None, count == BigUint::from(0u32));
    }

    #[test]
    fn complement_is_an_involution(m in arb_nfa()) {
        prop_assert_eq!(m.complement().complement(), m);
    }
}

/// The 11-state automaton for 0^5 1 0^5 1^6 0 1 0^3.
#[test]
fn example_automaton_by_walk_enumeration() {
    let edges = [
        (0, 0, 1),
        (1, 0, 2),
        (2, 0, 3),
        (3, 0, 4),
        (4, 0, 5),
        (5, 1, 6),
        (6, 0, 7),
        (7, 0, 10),
        (10, 0, 6),
        (7, 0, 8),
        (5, 1, 0),
        (8, 1, 9),
        (9, 1, 8),
        (9, 1, 4),
    ];
    let m = Nfa::new(
        11,
        0,
        3,
        edges.iter().map(|&(f, b, t)| Transition::new(f, b, t)),
    )
    .unwrap();
    let pairs: Vec<(usize, usize)> = edges.iter().map(|&(f, _, t)| (f, t)).collect();
    assert_eq!(naive_walk_count(&pairs, 0, 3, 22, 100), 1);
    assert!(m.count_accepting_paths(22).is_one());
    let x: Word = "0000010000011111101000".parse().unwrap();
    assert_eq!(m.unique_word(22), Some(x));
}

#[test]
fn chain_witness_has_no_detours() {
    let x: Word = "01".parse().unwrap();
    let run = StateSequence::new(vec![0, 1, 2]).unwrap();
    let witness = Nfa::from_run(run.states(), &x).unwrap();
    let w = WitnessResult {
        word: x,
        complexity: 3,
        witness,
        run,
    };
    let s = classify_structure(&w).unwrap();
    assert_eq!(s.minimal_detours, 0);
    assert!(s.pairs.is_empty());
}
