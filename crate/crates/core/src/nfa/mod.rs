//! Nondeterministic automata with one initial and one accepting state.
//!
//! Walks are the unit of identity throughout: two walks differ as soon as
//! they differ in one `(state, symbol, state)` step, even when they spell
//! the same word. A word is *uniquely accepted* at length `n` when the
//! automaton has exactly one accepting walk of length `n` in total.

mod dot;
mod routes;

use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::{Error, Result, Word};

pub use dot::export_dot;
pub use routes::{
    find_alternate_routes, Direction, Route, RouteAnalysis, RouteOrder, RouteRelation,
};

/// A labeled edge `from --symbol--> to`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Transition {
    pub from: usize,
    pub symbol: u8,
    pub to: usize,
}

impl Transition {
    pub const fn new(from: usize, symbol: u8, to: usize) -> Self {
        Transition { from, symbol, to }
    }
}

impl fmt::Display for Transition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} -{}-> {}", self.from, self.symbol, self.to)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Nfa {
    state_count: usize,
    initial: usize,
    accepting: usize,
    /// Sorted, no duplicates.
    transitions: Vec<Transition>,
}

/// Number of accepting walks, saturated at two.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum PathClass {
    None,
    Unique,
    Many,
}

/// Number of length-`length` walks from the initial state to every state.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PathCountProfile {
    pub length: usize,
    pub counts_by_state: Vec<BigUint>,
}

impl Nfa {
    pub fn new<I>(
        state_count: usize,
        initial: usize,
        accepting: usize,
        transitions: I,
    ) -> Result<Self>
    where
        I: IntoIterator<Item = Transition>,
    {
        if state_count == 0 {
            return Err(Error::InvalidNfa(
                "an automaton needs at least one state".into(),
            ));
        }
        if initial >= state_count || accepting >= state_count {
            return Err(Error::InvalidNfa(format!(
                "initial {initial} / accepting {accepting} out of range for {state_count} states"
            )));
        }
        let mut transitions: Vec<Transition> = transitions.into_iter().collect();
        for t in &transitions {
            if t.from >= state_count || t.to >= state_count {
                return Err(Error::InvalidNfa(format!("transition {t} out of range")));
            }
            if t.symbol > 1 {
                return Err(Error::InvalidNfa(format!(
                    "transition {t} has a non-binary symbol"
                )));
            }
        }
        transitions.sort_unstable();
        transitions.dedup();
        Ok(Nfa {
            state_count,
            initial,
            accepting,
            transitions,
        })
    }

    /// The automaton whose edges are exactly the steps of `run` reading `word`:
    /// step `i` is `run[i] --word[i]--> run[i+1]`.
    pub fn from_run(run: &[usize], word: &Word) -> Result<Self> {
        if run.len() != word.len() + 1 {
            return Err(Error::InvalidStateSequence(format!(
                "run of {} states cannot read a word of length {}",
                run.len(),
                word.len()
            )));
        }
        let states = run.iter().max().map_or(1, |m| m + 1);
        let edges = run
            .windows(2)
            .zip(word.iter())
            .map(|(w, b)| Transition::new(w[0], b, w[1]));
        Nfa::new(states, run[0], run[run.len() - 1], edges)
    }

    pub fn state_count(&self) -> usize {
        self.state_count
    }

    pub fn initial(&self) -> usize {
        self.initial
    }

    pub fn accepting(&self) -> usize {
        self.accepting
    }

    pub fn transitions(&self) -> &[Transition] {
        &self.transitions
    }

    pub fn has_transition(&self, t: &Transition) -> bool {
        self.transitions.binary_search(t).is_ok()
    }

    /// Swap initial and accepting states and turn every edge around.
    pub fn reverse(&self) -> Nfa {
        let edges = self
            .transitions
            .iter()
            .map(|t| Transition::new(t.to, t.symbol, t.from));
        Nfa::new(self.state_count, self.accepting, self.initial, edges).expect("same state set")
    }

    /// Flip the symbol on every edge.
    pub fn complement(&self) -> Nfa {
        let edges = self
            .transitions
            .iter()
            .map(|t| Transition::new(t.from, 1 - t.symbol, t.to));
        Nfa::new(self.state_count, self.initial, self.accepting, edges).expect("same state set")
    }

    /// Profiles for lengths `0..=n`.
    pub fn path_profiles(&self, n: usize) -> Vec<PathCountProfile> {
        let mut current = vec![BigUint::zero(); self.state_count];
        current[self.initial] = BigUint::one();
        let mut out = Vec::with_capacity(n + 1);
        for length in 0..=n {
            if length > 0 {
                let mut next = vec![BigUint::zero(); self.state_count];
                for t in &self.transitions {
                    if !current[t.from].is_zero() {
                        let add = current[t.from].clone();
                        next[t.to] += add;
                    }
                }
                current = next;
            }
            out.push(PathCountProfile {
                length,
                counts_by_state: current.clone(),
            });
        }
        out
    }

    pub fn path_profile(&self, n: usize) -> PathCountProfile {
        self.path_profiles(n)
            .pop()
            .expect("at least the length-0 profile")
    }

    /// Exact number of length-`n` walks from the initial to the accepting state.
    pub fn count_accepting_paths(&self, n: usize) -> BigUint {
        self.path_profile(n)
            .counts_by_state
            .swap_remove(self.accepting)
    }

    /// Same question as [`Nfa::count_accepting_paths`] with every count
    /// capped at 2, which is all that uniqueness needs.
    pub fn accepting_path_class(&self, n: usize) -> PathClass {
        let mut current = vec![0u8; self.state_count];
        current[self.initial] = 1;
        let mut next = vec![0u8; self.state_count];
        for _ in 0..n {
            next.iter_mut().for_each(|c| *c = 0);
            for t in &self.transitions {
                next[t.to] = (next[t.to] + current[t.from]).min(2);
            }
            std::mem::swap(&mut current, &mut next);
        }
        match current[self.accepting] {
            0 => PathClass::None,
            1 => PathClass::Unique,
            _ => PathClass::Many,
        }
    }

    /// The state sequence and word of the single accepting walk of length
    /// `n`, if there is exactly one.
    pub fn unique_run(&self, n: usize) -> Option<(Vec<usize>, Word)> {
        let profiles = self.path_profiles(n);
        if !profiles[n].counts_by_state[self.accepting].is_one() {
            return None;
        }
        let mut states = vec![self.accepting];
        let mut symbols = Vec::with_capacity(n);
        let mut at = self.accepting;
        for step in (1..=n).rev() {
            // With a total of one walk into `at`, exactly one incoming edge
            // starts from a state reached by a single walk.
            let prev = &profiles[step - 1].counts_by_state;
            let t = self
                .transitions
                .iter()
                .find(|t| t.to == at && !prev[t.from].is_zero())
                .expect("a unique walk has a predecessor at every step");
            symbols.push(t.symbol);
            states.push(t.from);
            at = t.from;
        }
        debug_assert_eq!(at, self.initial);
        states.reverse();
        symbols.reverse();
        Some((states, Word::from_bits(symbols)))
    }

    /// The word spelled by the only accepting walk of length `n`.
    pub fn unique_word(&self, n: usize) -> Option<Word> {
        self.unique_run(n).map(|(_, w)| w)
    }

    /// Subset simulation: does some walk spelling `word` end in the accepting state?
    pub fn accepts(&self, word: &Word) -> bool {
        let mut current = vec![false; self.state_count];
        current[self.initial] = true;
        for b in word.iter() {
            let mut next = vec![false; self.state_count];
            for t in self
                .transitions
                .iter()
                .filter(|t| t.symbol == b && current[t.from])
            {
                next[t.to] = true;
            }
            current = next;
        }
        current[self.accepting]
    }
}

/// Two distinct state sequences with common endpoints.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Detour {
    alpha: Vec<usize>,
    beta: Vec<usize>,
}

impl Detour {
    pub fn new(alpha: Vec<usize>, beta: Vec<usize>) -> Result<Self> {
        let ok = !alpha.is_empty()
            && !beta.is_empty()
            && alpha[0] == beta[0]
            && alpha.last() == beta.last()
            && alpha != beta;
        if !ok {
            return Err(Error::Domain(format!(
                "{alpha:?} / {beta:?} is not a detour"
            )));
        }
        Ok(Detour { alpha, beta })
    }

    pub fn alpha(&self) -> &[usize] {
        &self.alpha
    }

    pub fn beta(&self) -> &[usize] {
        &self.beta
    }

    /// Interiors are disjoint.
    pub fn is_minimal(&self) -> bool {
        let interior = |s: &[usize]| s.get(1..s.len().saturating_sub(1)).unwrap_or(&[]).to_vec();
        let a = interior(&self.alpha);
        interior(&self.beta).iter().all(|s| !a.contains(s))
    }
}
