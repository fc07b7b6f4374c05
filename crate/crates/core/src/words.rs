//! Binary words and the number-theoretic counts built on them.
//!
//! A [`Word`] keeps its bits packed into `u64` blocks; words of length at
//! most 64 live inline without allocating, which matters because a census
//! walks through `2^n` of them.

use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use smallvec::SmallVec;

use crate::{Error, Result};

const BLOCK: usize = 64;

/// An immutable word over `{0, 1}`.
///
/// Bits outside `0..len` are always zero so that the derived equality and
/// hashing are positionwise.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Word {
    len: usize,
    blocks: SmallVec<[u64; 1]>,
}

impl Word {
    pub fn empty() -> Self {
        Self::default()
    }

    /// Build a word from an iterator of symbols; anything nonzero counts as 1.
    pub fn from_bits<I: IntoIterator<Item = u8>>(bits: I) -> Self {
        let mut w = Word::empty();
        for b in bits {
            w.push(b);
        }
        w
    }

    /// The word of length `len` whose bits, read left to right, are the
    /// binary digits of `value` (most significant first).
    ///
    /// Enumerating `value` over `0..2^len` therefore lists words in
    /// lexicographic order, and `value < 2^(len-1)` means "starts with 0".
    pub fn from_index(value: u64, len: usize) -> Self {
        assert!(len <= 64, "from_index supports lengths up to 64");
        assert!(
            len == 64 || value >> len == 0,
            "value {value} does not fit in {len} bits"
        );
        Word::from_bits((0..len).map(|i| ((value >> (len - 1 - i)) & 1) as u8))
    }

    /// Inverse of [`Word::from_index`]; `None` for words longer than 64.
    pub fn index(&self) -> Option<u64> {
        if self.len > 64 {
            return None;
        }
        Some(self.iter().fold(0u64, |acc, b| (acc << 1) | b as u64))
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    /// The symbol at position `i`, or `None` past the end.
    pub fn bit(&self, i: usize) -> Option<u8> {
        (i < self.len).then(|| ((self.blocks[i / BLOCK] >> (i % BLOCK)) & 1) as u8)
    }

    pub fn iter(&self) -> impl DoubleEndedIterator<Item = u8> + ExactSizeIterator + '_ {
        (0..self.len).map(move |i| ((self.blocks[i / BLOCK] >> (i % BLOCK)) & 1) as u8)
    }

    pub fn to_vec(&self) -> Vec<u8> {
        self.iter().collect()
    }

    pub fn push(&mut self, bit: u8) {
        if self.len % BLOCK == 0 {
            self.blocks.push(0);
        }
        if bit != 0 {
            self.blocks[self.len / BLOCK] |= 1 << (self.len % BLOCK);
        }
        self.len += 1;
    }

    /// `self` followed by `bit`.
    pub fn with_appended(&self, bit: u8) -> Self {
        let mut w = self.clone();
        w.push(bit);
        w
    }

    /// Flip every symbol.
    pub fn complement(&self) -> Self {
        let mut blocks = self.blocks.clone();
        for b in blocks.iter_mut() {
            *b = !*b;
        }
        let mut w = Word {
            len: self.len,
            blocks,
        };
        w.clear_tail();
        w
    }

    pub fn reverse(&self) -> Self {
        Word::from_bits(self.iter().rev())
    }

    fn clear_tail(&mut self) {
        let used = self.len % BLOCK;
        if used != 0 {
            if let Some(last) = self.blocks.last_mut() {
                *last &= (1u64 << used) - 1;
            }
        }
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for b in self.iter() {
            f.write_str(if b == 0 { "0" } else { "1" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word({self})")
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut w = Word::empty();
        for c in s.chars() {
            match c {
                '0' => w.push(0),
                '1' => w.push(1),
                _ => {
                    return Err(Error::InvalidWord {
                        literal: s.to_string(),
                        reason: "only the symbols 0 and 1 are allowed",
                    })
                }
            }
        }
        Ok(w)
    }
}

/// Prime-factor counts of a positive integer.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PrimeSignature {
    pub n: u64,
    /// Distinct prime factors, ω(n).
    pub omega: u32,
    /// Prime factors with multiplicity, Ω(n).
    pub big_omega: u32,
}

impl PrimeSignature {
    /// Factor `n` by trial division.
    pub fn of(n: u64) -> Result<Self> {
        if n == 0 {
            return Err(Error::Domain("prime signature of 0".into()));
        }
        let (mut m, mut omega, mut big_omega) = (n, 0, 0);
        let mut p = 2u64;
        while p * p <= m {
            if m % p == 0 {
                omega += 1;
                while m % p == 0 {
                    m /= p;
                    big_omega += 1;
                }
            }
            p += if p == 2 { 1 } else { 2 };
        }
        if m > 1 {
            omega += 1;
            big_omega += 1;
        }
        Ok(PrimeSignature {
            n,
            omega,
            big_omega,
        })
    }

    pub fn is_squarefree(&self) -> bool {
        self.omega == self.big_omega
    }
}

/// The Möbius function μ(n).
pub fn mobius(n: i64) -> Result<i8> {
    if n <= 0 {
        return Err(Error::Domain(format!(
            "mobius({n}) is undefined; n must be positive"
        )));
    }
    let sig = PrimeSignature::of(n as u64)?;
    Ok(match (sig.is_squarefree(), sig.omega % 2) {
        (false, _) => 0,
        (true, 0) => 1,
        (true, _) => -1,
    })
}

fn divisors(n: u32) -> impl Iterator<Item = u32> {
    (1..=n).filter(move |d| n % d == 0)
}

/// Σ_{d | n} μ(n/d)·2^d, i.e. the number of primitive (non-periodic)
/// binary words of length `n`.
fn primitive_sum(n: u32) -> BigInt {
    divisors(n)
        .map(|d| {
            let mu = mobius((n / d) as i64).expect("n/d is positive");
            BigInt::from(mu) * (BigInt::one() << d as usize)
        })
        .sum()
}

/// `Z(n)`: the number of periodic binary words of length `n`.
///
/// `Z(0) = 0`; otherwise `Z(n) = 2^n − Σ_{d|n} μ(n/d)·2^d`.
pub fn periodic_count(n: u32) -> BigUint {
    if n == 0 {
        return BigUint::zero();
    }
    let total = BigInt::one() << n as usize;
    (total - primitive_sum(n))
        .to_biguint()
        .expect("primitive words never outnumber all words")
}

/// The number of binary necklaces of primitive words of length `n`
/// (Witt's formula).
pub fn necklace_count(n: u32) -> Result<BigUint> {
    if n == 0 {
        return Err(Error::Domain("necklace_count needs n >= 1".into()));
    }
    let (q, r) = primitive_sum(n).div_rem(&BigInt::from(n));
    if !r.is_zero() || q.is_negative() {
        return Err(Error::NonIntegralNecklaceCount(n));
    }
    Ok(q.to_biguint().expect("checked nonnegative"))
}

/// `true` iff `x = y^k` for some proper prefix `y` and `k ≥ 2`.
pub fn is_periodic(x: &Word) -> Result<bool> {
    let n = x.len();
    if n == 0 {
        return Err(Error::Domain("is_periodic of the empty word".into()));
    }
    let bits = x.to_vec();
    Ok((1..n)
        .filter(|d| n % d == 0)
        .any(|d| (d..n).all(|i| bits[i] == bits[i % d])))
}
