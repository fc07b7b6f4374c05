#![allow(dead_code)]

use autocomplexity::Word;

/// Every binary word of length `n`.
pub fn words_of_len(n: usize) -> impl Iterator<Item = Word> {
    (0..1u64 << n).map(move |v| Word::from_index(v, n))
}

/// Every binary word of length at most `max`.
pub fn words_up_to(max: usize) -> impl Iterator<Item = Word> {
    (0..=max).flat_map(words_of_len)
}
