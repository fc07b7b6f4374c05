//! The depth-first search behind [`super::complexity`].
//!
//! States are bits of a `u64`, so a level may use at most 64 states. Walk
//! counts from the initial state are tracked saturated at two as a pair of
//! masks (`ge1`: at least one walk, `ge2`: at least two).
//!
//! Two prunes apply at every step `i -> i+1`:
//!
//! * lump rule: a new edge may not enter a state that already lies on a
//!   closed cycle of the run;
//! * prefix uniqueness: the number of length-`i+1` walks from the initial
//!   state to `s_{i+1}` must be exactly one. Any second walk would extend by
//!   the rest of the run to a second accepting walk, and later edges only
//!   add walks.
//!
//! At full length the second condition is exactly unique acceptance.

#[derive(Clone, Copy, Default)]
struct Counts {
    ge1: u64,
    ge2: u64,
}

impl Counts {
    fn start() -> Self {
        Counts { ge1: 1, ge2: 0 }
    }

    fn is_unique(&self, state: usize) -> bool {
        (self.ge1 >> state) & 1 == 1 && (self.ge2 >> state) & 1 == 0
    }
}

/// Search statistics, mostly for benchmarks.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SearchStats {
    pub nodes: u64,
}

pub(crate) struct Engine<'a> {
    bits: &'a [u8],
    max_states: usize,
    run: Vec<usize>,
    /// `succ[2*s + b]`: targets of edges `s --b--> t`.
    succ: [u64; 128],
    /// Per depth: states lying on a closed cycle of the run so far.
    lump_mask: Vec<u64>,
    /// Per depth: walk counts of length `depth` under that depth's edge set.
    counts: Vec<Counts>,
    last_seen: [usize; 64],
    used: usize,
    pub stats: SearchStats,
}

impl<'a> Engine<'a> {
    pub fn new(bits: &'a [u8], max_states: usize) -> Self {
        assert!((1..=64).contains(&max_states));
        let n = bits.len();
        let mut run = Vec::with_capacity(n + 1);
        run.push(0);
        let mut lump_mask = Vec::with_capacity(n + 1);
        lump_mask.push(0);
        let mut counts = Vec::with_capacity(n + 1);
        counts.push(Counts::start());
        let mut last_seen = [usize::MAX; 64];
        last_seen[0] = 0;
        Engine {
            bits,
            max_states,
            run,
            succ: [0; 128],
            lump_mask,
            counts,
            last_seen,
            used: 1,
            stats: SearchStats::default(),
        }
    }

    /// The first run in search order that uniquely accepts the word, if any.
    pub fn find(mut self) -> (Option<Vec<usize>>, SearchStats) {
        let found = self.dfs();
        let stats = self.stats;
        (found.then_some(self.run), stats)
    }

    fn step(&self, from: Counts) -> Counts {
        let (mut acc1, mut acc2) = (0u64, 0u64);
        let mut rest = from.ge1;
        while rest != 0 {
            let s = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let (zero, one) = (self.succ[2 * s], self.succ[2 * s + 1]);
            let out = zero | one;
            if (from.ge2 >> s) & 1 == 1 {
                acc2 |= out;
            }
            acc2 |= zero & one;
            acc2 |= acc1 & out;
            acc1 |= out;
        }
        Counts {
            ge1: acc1,
            ge2: acc2,
        }
    }

    fn recount(&self, length: usize) -> Counts {
        (0..length).fold(Counts::start(), |c, _| self.step(c))
    }

    fn dfs(&mut self) -> bool {
        self.stats.nodes += 1;
        let depth = self.run.len() - 1;
        if depth == self.bits.len() {
            return true;
        }
        let from = self.run[depth];
        let bit = self.bits[depth] as usize;
        let existing = self.succ[2 * from + bit];
        let lumps = self.lump_mask[depth];

        let fresh = (self.used < self.max_states).then_some(self.used);
        for to in (0..self.used).chain(fresh) {
            let reuse = (existing >> to) & 1 == 1;
            let revisit = to < self.used;
            if revisit && !reuse && (lumps >> to) & 1 == 1 {
                continue;
            }

            if !reuse {
                self.succ[2 * from + bit] |= 1 << to;
            }
            let counts = if reuse {
                self.step(self.counts[depth])
            } else {
                self.recount(depth + 1)
            };
            if counts.is_unique(to) {
                let mut mask = lumps;
                if revisit {
                    for &s in &self.run[self.last_seen[to]..] {
                        mask |= 1 << s;
                    }
                    mask |= 1 << to;
                }
                let previous_seen = self.last_seen[to];
                self.last_seen[to] = depth + 1;
                if !revisit {
                    self.used += 1;
                }
                self.run.push(to);
                self.lump_mask.push(mask);
                self.counts.push(counts);

                if self.dfs() {
                    return true;
                }

                self.run.pop();
                self.lump_mask.pop();
                self.counts.pop();
                if !revisit {
                    self.used -= 1;
                }
                self.last_seen[to] = previous_seen;
            }
            if !reuse {
                self.succ[2 * from + bit] &= !(1 << to);
            }
        }
        false
    }
}
