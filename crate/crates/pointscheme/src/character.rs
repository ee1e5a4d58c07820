use crate::error::PointSchemeError;
use crate::hilbert::{h0_ideal, hilbert, monomial_count};
use crate::points::PointSet;
use serde::Serialize;
use std::fmt;

/// The numerical character (n_0, …, n_{σ−1}) of a point set: a nonincreasing
/// integer sequence with n_{σ−1} ≥ σ that encodes the whole Hilbert function.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NumericalCharacter {
    entries: Vec<i64>,
}

impl NumericalCharacter {
    pub fn new(entries: Vec<i64>) -> Result<NumericalCharacter, PointSchemeError> {
        let sigma = entries.len() as i64;
        let nonincreasing = entries.windows(2).all(|w| w[0] >= w[1]);
        let last_ok = entries.last().is_none_or(|&n| n >= sigma);
        if sigma == 0 || !nonincreasing || !last_ok {
            return Err(PointSchemeError::InvalidCharacter { entries });
        }
        Ok(NumericalCharacter { entries })
    }

    pub fn entries(&self) -> &[i64] {
        &self.entries
    }

    /// σ: the length of the character, which equals the minimal curve degree.
    pub fn sigma(&self) -> i64 {
        self.entries.len() as i64
    }

    /// Σ (n_i − i): the degree of any point set carrying this character.
    pub fn degree(&self) -> i64 {
        self.entries
            .iter()
            .enumerate()
            .map(|(i, &n)| n - i as i64)
            .sum()
    }

    /// Connected means consecutive entries drop by at most 1.
    pub fn is_connected(&self) -> bool {
        self.gap_indices().is_empty()
    }

    /// Indices r ≥ 1 with n_{r−1} > n_r + 1 (the disconnection positions).
    pub fn gap_indices(&self) -> Vec<usize> {
        self.entries
            .windows(2)
            .enumerate()
            .filter(|(_, w)| w[0] > w[1] + 1)
            .map(|(i, _)| i + 1)
            .collect()
    }

    /// Failure of independence in degree n read off the character alone:
    /// Σ [n_i − n − 1]_+ − [i − n − 1]_+. Cross-checked against matrix ranks
    /// at construction time.
    pub fn predicted_h1(&self, n: i64) -> i64 {
        self.entries
            .iter()
            .enumerate()
            .map(|(i, &ni)| (ni - n - 1).max(0) - (i as i64 - n - 1).max(0))
            .sum()
    }
}

impl fmt::Display for NumericalCharacter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, n) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{n}")?;
        }
        write!(f, ")")
    }
}

/// Computes the character of a nonempty point set from its Hilbert function:
/// n_i = min {t ≥ i | Δ(t) ≤ i}, where Δ is the first difference of H.
///
/// Before returning, every claim the character makes is re-verified against
/// rank computations: the invariants, the degree identity, and the h¹ values
/// it predicts for all n ≤ n_0 + 1.
pub fn numerical_character(z: &PointSet) -> Result<NumericalCharacter, PointSchemeError> {
    if z.is_empty() {
        return Err(PointSchemeError::EmptyPointSet);
    }
    let deg = z.degree() as i64;
    let h: Vec<i64> = (0..=deg).map(|n| hilbert(z, n) as i64).collect();
    let delta = |t: i64| -> i64 {
        if t < 0 || t > deg {
            0
        } else if t == 0 {
            h[0]
        } else {
            h[t as usize] - h[t as usize - 1]
        }
    };
    let sigma = (1..=deg)
        .find(|&n| monomial_count(n) as i64 - h[n as usize] > 0)
        .expect("a curve of degree deg Z always exists");
    debug_assert!(h0_ideal(z, sigma) > 0 && (sigma == 1 || h0_ideal(z, sigma - 1) == 0));

    let mut entries = Vec::with_capacity(sigma as usize);
    for i in 0..sigma {
        let n_i = (i..=deg + 1)
            .find(|&t| delta(t) <= i)
            .expect("differences vanish beyond the degree");
        assert!(n_i <= deg, "character entry exceeded the degree bound");
        entries.push(n_i);
    }
    let ch = NumericalCharacter::new(entries)?;

    assert_eq!(ch.degree(), deg, "character degree identity failed");
    for n in 0..=ch.entries[0] + 1 {
        let by_rank = deg - h[n.min(deg) as usize];
        assert_eq!(
            ch.predicted_h1(n),
            by_rank,
            "character prediction disagreed with rank at degree {n}"
        );
    }
    Ok(ch)
}

#[cfg(test)]
mod tests {
    use super::*;
    use exact_linalg::FieldSpec;

    #[test]
    fn collinear_points_have_singleton_character() {
        let f = FieldSpec::prime(101).unwrap();
        let z =
            PointSet::from_ints(f, &[[1, 0, 0], [1, 1, 0], [1, 2, 0], [1, 3, 0], [1, 4, 0]])
                .unwrap();
        let ch = numerical_character(&z).unwrap();
        assert_eq!(ch.entries(), &[5]);
        assert_eq!(ch.to_string(), "(5)");
        assert!(ch.is_connected());
        assert!(ch.gap_indices().is_empty());
    }

    #[test]
    fn four_collinear_plus_one_is_disconnected() {
        let f = FieldSpec::prime(101).unwrap();
        let z =
            PointSet::from_ints(f, &[[1, 0, 0], [1, 1, 0], [1, 2, 0], [1, 3, 0], [1, 0, 1]])
                .unwrap();
        let ch = numerical_character(&z).unwrap();
        assert_eq!(ch.entries(), &[4, 2]);
        assert!(!ch.is_connected());
        assert_eq!(ch.gap_indices(), vec![1]);
    }

    #[test]
    fn character_predicts_h1_everywhere() {
        let ch = NumericalCharacter::new(vec![4, 2]).unwrap();
        // H = 1,3,4,5,5 for the set above: h¹ = 4,2,1,0,0.
        assert_eq!(ch.degree(), 5);
        assert_eq!(ch.predicted_h1(0), 4);
        assert_eq!(ch.predicted_h1(1), 2);
        assert_eq!(ch.predicted_h1(2), 1);
        assert_eq!(ch.predicted_h1(3), 0);
    }

    #[test]
    fn invalid_characters_are_rejected() {
        assert!(NumericalCharacter::new(vec![]).is_err());
        assert!(NumericalCharacter::new(vec![2, 3]).is_err()); // increasing
        assert!(NumericalCharacter::new(vec![3, 1]).is_err()); // last < length
        assert!(NumericalCharacter::new(vec![3, 2]).is_ok());
    }

    #[test]
    fn empty_set_has_no_character() {
        let q = FieldSpec::rational();
        let z = PointSet::new(q, vec![]).unwrap();
        assert_eq!(
            numerical_character(&z),
            Err(PointSchemeError::EmptyPointSet)
        );
    }
}
