//! Eventual values of `s_q(n)` and `r_q(n)` as `n` grows.
//!
//! For large `n` every optimal witness is a chain of `i` states, one cycle
//! of `k = q − (i + ℓ)` states and a chain of `ℓ` states. The cycle must
//! spell a primitive word (`2^k − Z(k)` choices), and the bit entering the
//! cycle must differ from the bit closing it (likewise on exit), which
//! leaves `2^{(i−1)^+}` heads and `2^{(ℓ−1)^+}` tails.

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::words::periodic_count;
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct OneCycleShape {
    pub head_length: usize,
    pub cycle_length: usize,
    pub tail_length: usize,
}

fn pow2(e: usize) -> BigUint {
    BigUint::one() << e
}

fn primitive_cycles(k: usize) -> BigUint {
    pow2(k) - periodic_count(k as u32)
}

impl OneCycleShape {
    pub fn new(q: usize, head_length: usize, tail_length: usize) -> Result<Self> {
        if head_length + tail_length >= q {
            return Err(Error::Domain(format!(
                "head {head_length} + tail {tail_length} leaves no cycle among {q} states"
            )));
        }
        Ok(OneCycleShape {
            head_length,
            cycle_length: q - head_length - tail_length,
            tail_length,
        })
    }

    /// All shapes with `q` states, by head length then tail length.
    pub fn all(q: usize) -> impl Iterator<Item = OneCycleShape> {
        (0..q).flat_map(move |i| {
            (0..q - i).map(move |l| OneCycleShape::new(q, i, l).expect("i + l < q"))
        })
    }

    pub fn states(&self) -> usize {
        self.head_length + self.cycle_length + self.tail_length
    }

    /// `2^{(i−1)^+} · (2^k − Z(k)) · 2^{(ℓ−1)^+}`.
    pub fn word_count(&self) -> BigUint {
        pow2(self.head_length.saturating_sub(1))
            * primitive_cycles(self.cycle_length)
            * pow2(self.tail_length.saturating_sub(1))
    }
}

/// `lim_n s_q(n)`, exactly.
pub fn limit_s(q: usize) -> BigUint {
    OneCycleShape::all(q).map(|s| s.word_count()).sum()
}

/// What the undefined exponent `a` in the right-inextendible limit stands for.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum ExponentReading {
    /// `a = i`, mirroring the head factor of [`limit_s`].
    #[default]
    HeadLength,
    /// `a = ℓ`.
    TailLength,
    /// `a = 0`: the head contributes a factor of one.
    Zero,
}

impl std::str::FromStr for ExponentReading {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "head" | "i" => Ok(ExponentReading::HeadLength),
            "tail" | "l" => Ok(ExponentReading::TailLength),
            "zero" | "0" => Ok(ExponentReading::Zero),
            _ => Err(Error::Domain(format!(
                "unknown exponent reading {s:?} (head, tail, zero)"
            ))),
        }
    }
}

/// Candidate `lim_n r_q(n)`: shapes with a nonempty tail, tail factor
/// `2^{ℓ−1}`, head factor `2^{(a−1)^+}` with `a` chosen by `reading`.
/// Provisional; the empirical tail of `r_q(n)` decides.
pub fn limit_r(q: usize, reading: ExponentReading) -> BigUint {
    OneCycleShape::all(q)
        .filter(|s| s.tail_length > 0)
        .map(|s| {
            let a = match reading {
                ExponentReading::HeadLength => s.head_length,
                ExponentReading::TailLength => s.tail_length,
                ExponentReading::Zero => 0,
            };
            pow2(a.saturating_sub(1)) * primitive_cycles(s.cycle_length) * pow2(s.tail_length - 1)
        })
        .fold(BigUint::zero(), |acc, x| acc + x)
}

/// `2^{q−2} · (q(q+5)/2 + 1)`, an eventual upper bound on `s_q(n)`.
pub fn eventual_upper_bound(q: usize) -> Result<BigUint> {
    if q < 2 {
        return Err(Error::Domain(format!("the bound needs q >= 2, got {q}")));
    }
    Ok(pow2(q - 2) * BigUint::from(q * (q + 5) / 2 + 1))
}
