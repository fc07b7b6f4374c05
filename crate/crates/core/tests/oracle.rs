mod common;

use std::collections::HashMap;

use autocomplexity::nfa::PathClass;
use autocomplexity::oracle::brute_force_complexity;
use autocomplexity::search::complexity_value;
use autocomplexity::{Nfa, Transition, Word};

use common::{words_of_len, words_up_to};

#[test]
fn search_agrees_with_unpruned_runs() {
    for x in words_up_to(8) {
        assert_eq!(
            complexity_value(&x).unwrap(),
            brute_force_complexity(&x),
            "{x:?}"
        );
    }
}

/// Smallest state count of any automaton over at most `max_states` states
/// whose unique accepted word of length `|x|` is `x`, found by trying every
/// transition set. Relabeling makes state 0 initial without loss.
fn literal_minima(max_states: usize, max_len: usize) -> HashMap<Word, usize> {
    let mut best = HashMap::new();
    for q in 1..=max_states {
        let all: Vec<Transition> = (0..q)
            .flat_map(|f| (0..2u8).flat_map(move |b| (0..q).map(move |t| Transition::new(f, b, t))))
            .collect();
        for mask in 0u64..1 << all.len() {
            let edges = all
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, t)| *t);
            let edges: Vec<Transition> = edges.collect();
            for accepting in 0..q {
                let m = Nfa::new(q, 0, accepting, edges.iter().copied()).unwrap();
                for n in 0..=max_len {
                    if m.accepting_path_class(n) == PathClass::Unique {
                        let x = m.unique_word(n).unwrap();
                        best.entry(x).or_insert(q);
                    }
                }
            }
        }
    }
    best
}

#[test]
fn search_agrees_with_every_small_automaton() {
    let max_len = 5;
    let minima = literal_minima(3, max_len);
    for n in 0..=max_len {
        for x in words_of_len(n) {
            let q = complexity_value(&x).unwrap();
            match minima.get(&x) {
                Some(&m) => assert_eq!(q, m, "{x:?}"),
                None => assert!(q > 3, "{x:?}: search found {q} states"),
            }
        }
    }
}
