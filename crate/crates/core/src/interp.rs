//! Exact polynomial interpolation in the monomial basis.

use crate::error::CoreError;
use crate::linalg::{solve, Solution};
use crate::poly::{monomials, MultivariatePolynomial};
use crate::rational::Rational;
use crate::vector::RationalVector;

/// Fits the unique polynomial of total degree at most `degree` through the data.
///
/// Extra points act as consistency checks: if they disagree with the fit the
/// data cannot come from one polynomial and `Inconsistent` is returned.
pub fn interpolate(
    points: &[RationalVector],
    values: &[Rational],
    degree: u32,
) -> Result<MultivariatePolynomial, CoreError> {
    if points.len() != values.len() {
        return Err(CoreError::Dimension { expected: points.len(), got: values.len() });
    }
    let nvars = points.first().map_or(0, RationalVector::len);
    if let Some(bad) = points.iter().find(|p| p.len() != nvars) {
        return Err(CoreError::Dimension { expected: nvars, got: bad.len() });
    }
    let basis = monomials(nvars, degree);
    let rows: Vec<Vec<Rational>> = points
        .iter()
        .map(|p| {
            basis
                .iter()
                .map(|e| MultivariatePolynomial::monomial(e.clone(), Rational::from_integer(1.into())).eval(&p.coords))
                .collect()
        })
        .collect();
    match solve(&rows, values) {
        Solution::Unique(c) => Ok(MultivariatePolynomial::from_terms(nvars, basis.into_iter().zip(c))),
        Solution::Underdetermined { rank, .. } => Err(CoreError::Underdetermined { rank, unknowns: basis.len() }),
        Solution::Inconsistent => Err(CoreError::Inconsistent { degree }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{rat, rat_int};

    #[test]
    fn constant_data() {
        let pts: Vec<RationalVector> = (0..4).map(|i| RationalVector::from_ints(&[i, 2 * i + 1])).collect();
        let vals = vec![rat(3, 7); 4];
        let p = interpolate(&pts, &vals, 0).unwrap();
        assert_eq!(p, MultivariatePolynomial::constant(2, rat(3, 7)));
    }

    #[test]
    fn recovers_square() {
        let pts: Vec<RationalVector> = [[0, 0], [1, 0], [0, 1], [2, 1], [1, 3], [3, 2]]
            .iter()
            .map(|p| RationalVector::from_ints(p))
            .collect();
        let vals: Vec<Rational> = pts.iter().map(|p| &p[0] * &p[0]).collect();
        let p = interpolate(&pts, &vals, 2).unwrap();
        assert_eq!(p, MultivariatePolynomial::monomial(vec![2, 0], rat_int(1)));
    }

    #[test]
    fn reports_failures() {
        let line: Vec<RationalVector> = (0..6).map(|i| RationalVector::from_ints(&[i, i])).collect();
        let vals: Vec<Rational> = (0..6).map(rat_int).collect();
        assert!(matches!(interpolate(&line, &vals, 2), Err(CoreError::Underdetermined { .. })));
        let pts: Vec<RationalVector> = (0..3).map(|i| RationalVector::from_ints(&[i])).collect();
        let bad = vec![rat_int(0), rat_int(1), rat_int(5)];
        assert_eq!(interpolate(&pts, &bad, 1), Err(CoreError::Inconsistent { degree: 1 }));
    }
}
