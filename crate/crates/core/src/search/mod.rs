//! Exact nondeterministic automatic complexity.
//!
//! Any automaton with a unique accepting walk of length `|x|` can be cut
//! down to the edges of that walk, and states can be renamed in order of
//! first visit. So `A_N(x)` is the least `q` for which some restricted
//! growth sequence `s_0..s_n` over `q` states, with edges
//! `s_i --x_i--> s_{i+1}`, has exactly one walk of length `n` from `s_0`
//! to `s_n`. [`complexity`] finds it by iterative deepening on `q`.

mod engine;
mod lumps;
mod structure;

use std::fmt;
use std::str::FromStr;

use std::collections::BTreeSet;

use crate::{Error, Nfa, Result, Word};

pub use engine::SearchStats;
pub use lumps::{build_lump_tree, Lump, LumpEdge, LumpTree};
pub use structure::{classify_structure, PairReport, PairShape, StructureReport, UsageCategory};

/// Longest word the search accepts; the chain fallback then needs 64 states.
pub const MAX_WORD_LEN: usize = 63;

/// A restricted growth sequence: starts at 0 and never jumps more than one
/// past the running maximum.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StateSequence(Vec<usize>);

impl StateSequence {
    pub fn new(states: Vec<usize>) -> Result<Self> {
        if states.first() != Some(&0) {
            return Err(Error::InvalidStateSequence(
                "a state sequence starts at state 0".into(),
            ));
        }
        let mut max = 0;
        for (i, &s) in states.iter().enumerate() {
            if s > max + 1 {
                return Err(Error::InvalidStateSequence(format!(
                    "state {s} at position {i} skips past {}",
                    max + 1
                )));
            }
            max = max.max(s);
        }
        Ok(StateSequence(states))
    }

    pub fn states(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn state_count(&self) -> usize {
        self.0.iter().max().map_or(0, |m| m + 1)
    }

    /// All sequences of `len` states using at most `max_states` states, in
    /// lexicographic order.
    pub fn enumerate(len: usize, max_states: usize) -> Vec<StateSequence> {
        fn go(
            cur: &mut Vec<usize>,
            max: usize,
            len: usize,
            cap: usize,
            out: &mut Vec<StateSequence>,
        ) {
            if cur.len() == len {
                out.push(StateSequence(cur.clone()));
                return;
            }
            for s in 0..=(max + 1).min(cap - 1) {
                cur.push(s);
                go(cur, max.max(s), len, cap, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        if len > 0 && max_states > 0 {
            go(&mut vec![0], 0, len, max_states, &mut out);
        }
        out
    }
}

impl fmt::Display for StateSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let compact = self.0.iter().all(|&s| s < 10);
        for (i, s) in self.0.iter().enumerate() {
            if i > 0 && !compact {
                f.write_str(",")?;
            }
            write!(f, "{s}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for StateSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "StateSequence({self})")
    }
}

/// Either compact digits (`0120`) or comma separated (`0,1,10,2`).
impl FromStr for StateSequence {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidStateSequence(format!("cannot parse {s:?}"));
        let states: Vec<usize> = if s.contains(',') {
            s.split(',')
                .map(|p| p.trim().parse().map_err(|_| bad()))
                .collect::<Result<_>>()?
        } else {
            s.chars()
                .map(|c| c.to_digit(10).map(|d| d as usize).ok_or_else(bad))
                .collect::<Result<_>>()?
        };
        StateSequence::new(states)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WitnessResult {
    pub word: Word,
    pub complexity: usize,
    pub witness: Nfa,
    pub run: StateSequence,
}

/// Legal next states after the partial `run` (which has read the first
/// `run.len() - 1` symbols of `word`): the fresh state if the budget allows,
/// any state the next symbol already leads to, and any visited state
/// outside every lump of `tree`.
pub fn admissible_extensions(
    word: &Word,
    run: &StateSequence,
    tree: &LumpTree,
    max_states: usize,
) -> BTreeSet<usize> {
    let states = run.states();
    let step = states.len() - 1;
    let Some(bit) = word.bit(step) else {
        return BTreeSet::new();
    };
    let from = states[step];
    let used = run.state_count();
    let existing: BTreeSet<usize> = (1..states.len())
        .filter(|&i| states[i - 1] == from && word.bit(i - 1) == Some(bit))
        .map(|i| states[i])
        .collect();
    let mut out: BTreeSet<usize> = (0..used)
        .filter(|s| existing.contains(s) || !tree.in_any_lump(*s))
        .collect();
    if used < max_states {
        out.insert(used);
    }
    out
}

fn check_len(x: &Word) -> Result<()> {
    if x.len() > MAX_WORD_LEN {
        return Err(Error::WordTooLong(x.len()));
    }
    Ok(())
}

/// Search the runs over at most `max_states` states; `None` if no run
/// uniquely accepts `x`.
pub fn search_level(x: &Word, max_states: usize) -> Result<(Option<StateSequence>, SearchStats)> {
    check_len(x)?;
    let bits = x.to_vec();
    let (run, stats) = engine::Engine::new(&bits, max_states.clamp(1, 64)).find();
    Ok((run.map(StateSequence), stats))
}

/// `A_N(x)` with a witness, searching `q = 1, 2, ...` up to `upper_bound`
/// (default: the chain bound `|x| + 1`).
pub fn complexity(x: &Word, upper_bound: Option<usize>) -> Result<WitnessResult> {
    check_len(x)?;
    let limit = upper_bound.unwrap_or(x.len() + 1).min(x.len() + 1);
    let bits = x.to_vec();
    for q in 1..=limit {
        let (run, _) = engine::Engine::new(&bits, q).find();
        if let Some(run) = run {
            let witness = Nfa::from_run(&run, x)?;
            debug_assert_eq!(witness.state_count(), q);
            // The engine's counts are saturated bitmasks; confirm independently.
            assert_eq!(
                witness.accepting_path_class(x.len()),
                crate::nfa::PathClass::Unique,
                "search returned a run that is not uniquely accepting: {run:?}"
            );
            return Ok(WitnessResult {
                word: x.clone(),
                complexity: q,
                witness,
                run: StateSequence(run),
            });
        }
    }
    Err(Error::NoWitness(limit))
}

/// Just the number, for censuses.
pub fn complexity_value(x: &Word) -> Result<usize> {
    complexity(x, None).map(|w| w.complexity)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::nfa::Transition;
    use num_traits::One;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    #[test]
    fn restricted_growth_validation() {
        assert!(StateSequence::new(vec![0, 1, 3]).is_err());
        assert!(StateSequence::new(vec![1]).is_err());
        assert!(StateSequence::new(vec![]).is_err());
        assert!("0,1,2,1,10".parse::<StateSequence>().is_err());
        let s: StateSequence = "0120".parse().unwrap();
        assert_eq!(s.states(), &[0, 1, 2, 0]);
        assert_eq!(s.to_string(), "0120");
    }

    #[test]
    fn length_three_sequences() {
        let all: Vec<String> = StateSequence::enumerate(3, 3)
            .iter()
            .map(|s| s.to_string())
            .collect();
        assert_eq!(all, ["000", "001", "010", "011", "012"]);
    }

    #[test]
    fn small_complexities() {
        assert_eq!(complexity(&w("00000"), None).unwrap().complexity, 1);
        assert_eq!(complexity(&w("01"), None).unwrap().complexity, 2);
        assert_eq!(complexity(&w(""), None).unwrap().complexity, 1);
        assert_eq!(complexity(&w("0"), None).unwrap().complexity, 1);
    }

    #[test]
    fn no_one_state_automaton_accepts_01_uniquely() {
        // All 16 subsets of the four one-state transitions.
        for mask in 0u32..16 {
            let edges = (0..4)
                .filter(|b| mask >> b & 1 == 1)
                .map(|b| Transition::new(0, (b & 1) as u8, 0));
            let m = Nfa::new(1, 0, 0, edges).unwrap();
            assert_ne!(m.unique_word(2), Some(w("01")));
        }
    }

    #[test]
    fn witness_invariants() {
        for x in ["0110", "0010111", "0000010000011111101000", "1010101", ""] {
            let r = complexity(&w(x), None).unwrap();
            assert_eq!(r.witness.state_count(), r.complexity);
            assert!(r.witness.count_accepting_paths(x.len()).is_one());
            assert_eq!(r.witness.unique_word(x.len()), Some(w(x)));
            assert_eq!(r.run.len(), x.len() + 1);
        }
    }

    #[test]
    fn example_word_needs_at_most_eleven_states() {
        let r = complexity(&w("0000010000011111101000"), None).unwrap();
        assert!(r.complexity <= 11, "got {}", r.complexity);
        let tree = build_lump_tree(&r.run, Some(&r.word)).unwrap();
        assert!(tree.only_leaves_repeat());
    }

    #[test]
    fn upper_bound_errors() {
        assert!(matches!(
            complexity(&w("0110"), Some(1)),
            Err(Error::NoWitness(1))
        ));
        assert!(complexity(&w("0110"), Some(3)).is_ok());
        let long = Word::from_bits(std::iter::repeat(0).take(64));
        assert!(matches!(
            complexity(&long, None),
            Err(Error::WordTooLong(64))
        ));
    }

    #[test]
    fn extensions_from_fresh_runs() {
        let x = w("0000");
        let tree = LumpTree::default();
        let ext = admissible_extensions(&x, &"0".parse().unwrap(), &tree, 3);
        assert_eq!(ext.into_iter().collect::<Vec<_>>(), [0, 1]);
        let ext = admissible_extensions(&x, &"012".parse().unwrap(), &tree, 3);
        assert_eq!(ext.into_iter().collect::<Vec<_>>(), [0, 1, 2]);
    }

    #[test]
    fn extensions_after_a_lump() {
        let run: StateSequence = "0120".parse().unwrap();
        let reuse = w("0000");
        let tree = build_lump_tree(&run, Some(&Word::from_bits([0, 0, 0]))).unwrap();
        // Next symbol 0: 0 -0-> 1 exists, so 1 is allowed; 2 and 0 are in the lump.
        let ext = admissible_extensions(&reuse, &run, &tree, 4);
        assert_eq!(ext.into_iter().collect::<Vec<_>>(), [1, 3]);
        // Next symbol 1: 0 -1-> 1 would be a new edge into the lump.
        let fresh = w("0001");
        let ext = admissible_extensions(&fresh, &run, &tree, 4);
        assert_eq!(ext.into_iter().collect::<Vec<_>>(), [3]);
    }
}
