//! Fixed inputs shared by the benchmarks.

use autocomplexity::Word;

/// Deterministic pseudo-random words of length `n` (xorshift), so runs are
/// comparable across machines.
pub fn sample_words(n: usize, count: usize, seed: u64) -> Vec<Word> {
    let mut state = seed.max(1);
    (0..count)
        .map(|_| {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            Word::from_index(state & ((1u64 << n) - 1), n)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn samples_are_reproducible() {
        assert_eq!(sample_words(12, 5, 7), sample_words(12, 5, 7));
        assert!(sample_words(12, 5, 7).iter().all(|w| w.len() == 12));
    }
}
