use crate::error::{Error, Result};
use crate::rational::{int, Rational};
use crate::weight::Weight;

use num_traits::One;

/// `∏_{i<j} (μ_i - μ_j + j - i) / (j - i)` for dominant integral `μ`.
pub fn weyl_dimension(mu: &Weight) -> Result<u64> {
    if !mu.is_dominant_integral() {
        return Err(Error::domain(format!("{mu} is not dominant integral")));
    }
    let m = mu.len();
    let mut acc = Rational::one();
    for i in 1..=m {
        for j in i + 1..=m {
            let gap = int((j - i) as i64);
            acc *= (mu.get(i) - mu.get(j) + &gap) / gap;
        }
    }
    crate::rational::as_natural(&acc)
        .ok_or_else(|| Error::consistency("dimension formula returned a non-natural value"))
}
