//! Slow reference computations that share no code with [`crate::search`].
//!
//! [`brute_force_complexity`] tries every restricted growth run with no
//! pruning at all and decides uniqueness by explicitly enumerating walks.
//! It is exponential and only meant for short words.

use crate::Word;

fn walks_at_least(
    edges: &[(usize, usize)],
    at: usize,
    target: usize,
    remaining: usize,
    cap: u32,
) -> u32 {
    if remaining == 0 {
        return (at == target) as u32;
    }
    let mut total = 0;
    for &(from, to) in edges {
        if from == at {
            total += walks_at_least(edges, to, target, remaining - 1, cap - total);
            if total >= cap {
                break;
            }
        }
    }
    total
}

/// Number of length-`n` walks from `start` to `end`, counted one by one and
/// capped at `cap`. Parallel edges count separately.
pub fn naive_walk_count(
    edges: &[(usize, usize)],
    start: usize,
    end: usize,
    n: usize,
    cap: u32,
) -> u32 {
    walks_at_least(edges, start, end, n, cap)
}

fn uniquely_accepts(run: &[usize], bits: &[u8]) -> bool {
    let mut labeled: Vec<(usize, u8, usize)> = run
        .windows(2)
        .zip(bits)
        .map(|(w, &b)| (w[0], b, w[1]))
        .collect();
    labeled.sort_unstable();
    labeled.dedup();
    let edges: Vec<(usize, usize)> = labeled.iter().map(|&(f, _, t)| (f, t)).collect();
    naive_walk_count(&edges, run[0], run[run.len() - 1], bits.len(), 2) == 1
}

fn exists_run(bits: &[u8], run: &mut Vec<usize>, max: usize, states: usize) -> bool {
    if run.len() == bits.len() + 1 {
        return max + 1 == states && uniquely_accepts(run, bits);
    }
    for s in 0..=(max + 1).min(states - 1) {
        run.push(s);
        let found = exists_run(bits, run, max.max(s), states);
        run.pop();
        if found {
            return true;
        }
    }
    false
}

/// `A_N(x)` by exhaustive enumeration of runs using exactly `q` states for
/// `q = 1, 2, ...`.
pub fn brute_force_complexity(x: &Word) -> usize {
    let bits = x.to_vec();
    (1..=bits.len() + 1)
        .find(|&q| exists_run(&bits, &mut vec![0], 0, q))
        .expect("the chain over |x|+1 states always works")
}
