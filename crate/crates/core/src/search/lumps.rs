//! Trees of lumps.
//!
//! Reading a run left to right, every step that adds a *new* edge into an
//! already visited state closes a cycle; the edges of that cycle form a
//! lump. A state that lies on a closed lump can never again be entered by
//! a new edge: the two cycle segments could be swapped to give a second
//! walk of the same length. So a new closing edge always returns to a state
//! visited exactly once, and the new lump either sits beside the previous
//! top-level lump or becomes the parent of a final run of top-level lumps.
//! Re-traversing existing edges never creates a lump, which is why a
//! repeated cycle yields the same lump as its primitive root.

use std::collections::{BTreeMap, BTreeSet};

use crate::{Error, Result, Word};

use super::StateSequence;

/// `(from, symbol, to)`; the symbol is `None` when the tree was built from
/// states alone.
pub type LumpEdge = (usize, Option<u8>, usize);

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Lump {
    /// Run positions of the closing cycle, inclusive at both ends.
    pub span: (usize, usize),
    pub states: BTreeSet<usize>,
    pub edges: BTreeSet<LumpEdge>,
    /// The new edge that closed the cycle.
    pub closing_edge: LumpEdge,
    pub children: Vec<usize>,
    pub parent: Option<usize>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LumpTree {
    lumps: Vec<Lump>,
    top_level: Vec<usize>,
    membership: BTreeMap<usize, BTreeSet<usize>>,
    /// Times each lump's closing edge is taken by the run.
    traversals: Vec<usize>,
}

impl LumpTree {
    pub fn lumps(&self) -> &[Lump] {
        &self.lumps
    }

    pub fn top_level(&self) -> &[usize] {
        &self.top_level
    }

    pub fn is_empty(&self) -> bool {
        self.lumps.is_empty()
    }

    /// Lumps containing `state`.
    pub fn lumps_of(&self, state: usize) -> impl Iterator<Item = usize> + '_ {
        self.membership.get(&state).into_iter().flatten().copied()
    }

    pub fn in_any_lump(&self, state: usize) -> bool {
        self.membership.get(&state).is_some_and(|s| !s.is_empty())
    }

    /// Is `a` a (not necessarily direct) descendant of `b`?
    pub fn is_descendant(&self, a: usize, b: usize) -> bool {
        let mut at = self.lumps[a].parent;
        while let Some(p) = at {
            if p == b {
                return true;
            }
            at = self.lumps[p].parent;
        }
        false
    }

    pub fn traversals(&self, lump: usize) -> usize {
        self.traversals[lump]
    }

    /// Only leaf lumps are taken more than once.
    pub fn only_leaves_repeat(&self) -> bool {
        self.lumps
            .iter()
            .zip(&self.traversals)
            .all(|(l, &n)| l.children.is_empty() || n == 1)
    }
}

fn edge_of(run: &[usize], labels: Option<&[u8]>, step: usize) -> LumpEdge {
    (run[step - 1], labels.map(|l| l[step - 1]), run[step])
}

/// Build the tree of lumps of `run`, optionally labeling step `i` with
/// `word[i]`. Fails if a new edge enters a state already on a closed lump.
pub fn build_lump_tree(run: &StateSequence, word: Option<&Word>) -> Result<LumpTree> {
    let states = run.states();
    let labels = word.map(|w| w.to_vec());
    if let Some(l) = &labels {
        if l.len() + 1 != states.len() {
            return Err(Error::InvalidStateSequence(format!(
                "run of {} states cannot read a word of length {}",
                states.len(),
                l.len()
            )));
        }
    }
    let labels = labels.as_deref();

    let mut tree = LumpTree::default();
    let mut seen_edges: BTreeSet<LumpEdge> = BTreeSet::new();
    let mut first_visit: BTreeMap<usize, usize> = BTreeMap::new();
    first_visit.insert(states[0], 0);

    for step in 1..states.len() {
        let edge = edge_of(states, labels, step);
        let to = states[step];
        let is_new = seen_edges.insert(edge);

        if let Some(id) = tree.lumps.iter().position(|l| l.closing_edge == edge) {
            tree.traversals[id] += 1;
        }

        match first_visit.get(&to).copied() {
            None => {
                first_visit.insert(to, step);
            }
            Some(_) if !is_new => {}
            Some(start) => {
                if tree.in_any_lump(to) {
                    return Err(Error::LumpViolation {
                        position: step,
                        from: edge.0,
                        to,
                    });
                }
                let id = tree.lumps.len();
                let split = tree
                    .top_level
                    .iter()
                    .position(|&l| tree.lumps[l].span.0 >= start)
                    .unwrap_or(tree.top_level.len());
                let children = tree.top_level.split_off(split);
                for &c in &children {
                    tree.lumps[c].parent = Some(id);
                }
                let lump = Lump {
                    span: (start, step),
                    states: states[start..=step].iter().copied().collect(),
                    edges: (start + 1..=step)
                        .map(|s| edge_of(states, labels, s))
                        .collect(),
                    closing_edge: edge,
                    children,
                    parent: None,
                };
                for &s in &lump.states {
                    tree.membership.entry(s).or_default().insert(id);
                }
                tree.lumps.push(lump);
                tree.traversals.push(1);
                tree.top_level.push(id);
            }
        }
    }
    Ok(tree)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn seq(s: &str) -> StateSequence {
        s.parse().unwrap()
    }

    #[test]
    fn no_revisits_no_lumps() {
        let tree = build_lump_tree(&seq("0123"), None).unwrap();
        assert!(tree.is_empty());
    }

    #[test]
    fn nested_chain_of_three_lumps() {
        let run = seq("01234567345673456720");
        let tree = build_lump_tree(&run, None).unwrap();
        assert_eq!(tree.lumps().len(), 3);
        let [l1, l2, l3] = [&tree.lumps()[0], &tree.lumps()[1], &tree.lumps()[2]];
        assert_eq!(l1.span, (3, 8));
        assert_eq!(run.states()[3..=8], [3, 4, 5, 6, 7, 3]);
        assert_eq!(l2.span, (2, 18));
        assert_eq!(l3.span, (0, 19));
        assert_eq!(l1.parent, Some(1));
        assert_eq!(l2.parent, Some(2));
        assert_eq!(l3.parent, None);
        assert_eq!(tree.top_level(), &[2]);
        assert!(tree.is_descendant(0, 2));
        assert!(l1.edges.is_subset(&l2.edges) && l2.edges.is_subset(&l3.edges));
        assert_eq!(tree.traversals(0), 2);
        assert!(tree.only_leaves_repeat());
    }

    #[test]
    fn repeated_cycle_is_one_lump() {
        let tree = build_lump_tree(&seq("0123456734567345673"), None).unwrap();
        assert_eq!(tree.lumps().len(), 1);
        assert_eq!(tree.lumps()[0].edges.len(), 5);
        assert_eq!(tree.traversals(0), 3);
    }

    #[test]
    fn siblings_then_common_parent() {
        // lumps on 1-1 and 3-3, then 4 -> 0 wraps both
        let tree = build_lump_tree(&seq("0112334 0".replace(' ', "").as_str()), None).unwrap();
        assert_eq!(tree.lumps().len(), 3);
        assert_eq!(tree.lumps()[2].children, vec![0, 1]);
        assert_eq!(tree.top_level(), &[2]);

        let tree = build_lump_tree(&seq("011233"), None).unwrap();
        assert_eq!(tree.top_level(), &[0, 1]);
    }

    #[test]
    fn new_edge_into_lump_is_rejected() {
        // 0 -0-> 1 -> 2 -> 0 closes a lump containing 1; then 0 -1-> 1 is new.
        let run = seq("01201");
        let word: Word = "0001".parse().unwrap();
        let err = build_lump_tree(&run, Some(&word)).unwrap_err();
        assert!(matches!(
            err,
            Error::LumpViolation {
                position: 4,
                from: 0,
                to: 1
            }
        ));

        // Reusing the same labeled edge is fine.
        let word: Word = "0000".parse().unwrap();
        assert!(build_lump_tree(&run, Some(&word)).is_ok());
    }

    #[test]
    fn rejected_run_really_has_two_walks() {
        use crate::Nfa;
        let run = seq("01201");
        let word: Word = "0001".parse().unwrap();
        let m = Nfa::from_run(run.states(), &word).unwrap();
        assert!(m.count_accepting_paths(4) >= 2u32.into());
    }
}
