//! Exact terminating `₃F₂(−j, −i, j+1; 1, −ℓ; 1)` in rational arithmetic.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::{Error, Result};

/// Rising factorial of a rational number.
pub fn pochhammer_rational(a: &BigRational, k: u32) -> BigRational {
    let mut acc = BigRational::one();
    let mut x = a.clone();
    for _ in 0..k {
        acc *= &x;
        x += BigRational::one();
    }
    acc
}

fn int(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// `Σ_{k ≤ min(i,j)} (−j)_k (−i)_k (j+1)_k / ((1)_k (−ℓ)_k k!)` exactly.
pub fn hyp3f2_terminating_exact(j: i64, i: i64, ell: i64) -> Result<BigRational> {
    if ell < 0 {
        return Err(Error::DomainError("ell must be nonnegative"));
    }
    if !(0..=ell).contains(&i) || !(0..=ell).contains(&j) {
        return Err(Error::DomainError("indices must lie in [0, ell]"));
    }
    let mut term = BigRational::one();
    let mut sum = BigRational::zero();
    for k in 0..=i.min(j) {
        sum += &term;
        // term_{k+1}/term_k = (k−j)(k−i)(j+1+k) / ((1+k)(k−ℓ)(k+1))
        let num = int(k - j) * int(k - i) * int(j + 1 + k);
        let den = int(1 + k) * int(k - ell) * int(k + 1);
        if den.is_zero() {
            break;
        }
        term = term * num / den;
    }
    Ok(sum)
}

/// Floating point value of [`hyp3f2_terminating_exact`].
pub fn hyp3f2_terminating(j: i64, i: i64, ell: i64) -> Result<f64> {
    hyp3f2_terminating_exact(j, i, ell)?
        .to_f64()
        .ok_or(Error::DomainError("value not representable"))
}
