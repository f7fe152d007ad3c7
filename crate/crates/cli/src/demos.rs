//! Built-in maps `ℕ∞ → A + ℕ∞` for `decide-sum`.

use clap::ValueEnum;
use omnisearch::{CoNat, FuelExhausted, Sum, SumElem};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Demo {
    /// x ↦ inr(x); never reaches A
    AllRight,
    /// 0̄ ↦ inl, succ(x) ↦ inr(x); the inverse of the embedding g
    LeftAtZero,
    /// 4̄ ↦ inl, everything else x ↦ inr(x)
    #[value(name = "left-at-4bar")]
    LeftAt4Bar,
}

impl Demo {
    pub fn as_str(self) -> &'static str {
        match self {
            Demo::AllRight => "all-right",
            Demo::LeftAtZero => "left-at-zero",
            Demo::LeftAt4Bar => "left-at-4bar",
        }
    }

    pub fn map(self) -> fn(&CoNat) -> Result<SumElem, FuelExhausted> {
        match self {
            Demo::AllRight => all_right,
            Demo::LeftAtZero => left_at_zero,
            Demo::LeftAt4Bar => left_at_4bar,
        }
    }
}

fn all_right(x: &CoNat) -> Result<SumElem, FuelExhausted> {
    Ok(Sum::Right(x.clone()))
}

fn left_at_zero(x: &CoNat) -> Result<SumElem, FuelExhausted> {
    Ok(if x.bit_at(0)? {
        Sum::Right(x.tail())
    } else {
        Sum::Left
    })
}

fn left_at_4bar(x: &CoNat) -> Result<SumElem, FuelExhausted> {
    Ok(if x.bit_at(3)? && !x.bit_at(4)? {
        Sum::Left
    } else {
        Sum::Right(x.clone())
    })
}
