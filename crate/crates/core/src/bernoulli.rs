//! Bernoulli numbers from the explicit double sum
//! `B_n = sum_{k=0}^{n} 1/(k+1) sum_{j=0}^{k} (-1)^j C(k,j) j^n`.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::CoreError;
use crate::rational::Rational;

pub fn bernoulli(n: u32) -> Result<Rational, CoreError> {
    if n % 2 == 1 {
        return Err(CoreError::OddBernoulli(n));
    }
    let mut total = Rational::zero();
    for k in 0..=n {
        let mut inner = BigInt::zero();
        let mut binom = BigInt::one();
        for j in 0..=k {
            let term = &binom * num_traits::pow(BigInt::from(j), n as usize);
            if j % 2 == 0 {
                inner += term;
            } else {
                inner -= term;
            }
            binom = binom * BigInt::from(k - j) / BigInt::from(j + 1);
        }
        total += Rational::new(inner, BigInt::from(k + 1));
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat;

    #[test]
    fn small_values() {
        assert_eq!(bernoulli(0).unwrap(), rat(1, 1));
        assert_eq!(bernoulli(2).unwrap(), rat(1, 6));
        assert_eq!(bernoulli(4).unwrap(), rat(-1, 30));
        assert_eq!(bernoulli(6).unwrap(), rat(1, 42));
        assert_eq!(bernoulli(3), Err(CoreError::OddBernoulli(3)));
    }
}
