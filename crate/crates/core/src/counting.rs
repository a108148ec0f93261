//! Counting identities used as independent oracles: double factorials,
//! unsigned Stirling numbers of the first kind, and Sylvester's sequence
//! `v_n` for distinct terms of skew-symmetric determinants.

use serde::Serialize;

use crate::matrices::{antisymmetric_matrix, leibniz_determinant};
use crate::{Error, Result};

/// `m (m-2) ... 1` for odd `m`, with `(-1)!! = 1`.
pub fn double_factorial(m: i64) -> Result<u128> {
    if m < -1 || m % 2 == 0 {
        return Err(Error::EvenDoubleFactorial(m));
    }
    let mut acc: u128 = 1;
    let mut k = m;
    while k > 1 {
        acc = acc
            .checked_mul(k as u128)
            .ok_or(Error::Overflow("double_factorial"))?;
        k -= 2;
    }
    Ok(acc)
}

/// Row `s(n, 0..=n)` of the unsigned Stirling numbers of the first kind,
/// from `s(n+1, k) = n·s(n, k) + s(n, k-1)`.
pub fn stirling_row(n: usize) -> Result<Vec<u128>> {
    let mut row = vec![1u128];
    for m in 0..n {
        let mut next = vec![0u128; m + 2];
        for k in 0..=m + 1 {
            let keep = if k <= m {
                row[k]
                    .checked_mul(m as u128)
                    .ok_or(Error::Overflow("stirling_row"))?
            } else {
                0
            };
            let grow = if k > 0 { row[k - 1] } else { 0 };
            next[k] = keep
                .checked_add(grow)
                .ok_or(Error::Overflow("stirling_row"))?;
        }
        row = next;
    }
    Ok(row)
}

/// Number of permutations of `n` letters with exactly `k` cycles.
pub fn stirling_first_unsigned(n: usize, k: usize) -> Result<u128> {
    if k > n {
        return Err(Error::SizeOutOfRange {
            n: k,
            reason: format!("cycle count exceeds {n}"),
        });
    }
    Ok(stirling_row(n)?[k])
}

/// `Σ_k s(n,k) x^(n-k)`.
pub fn stirling_weighted_sum(n: usize, x: u128) -> Result<u128> {
    let row = stirling_row(n)?;
    let mut acc: u128 = 0;
    for (k, s) in row.iter().enumerate() {
        let pow = x
            .checked_pow((n - k) as u32)
            .ok_or(Error::Overflow("stirling_weighted_sum"))?;
        acc = s
            .checked_mul(pow)
            .and_then(|t| acc.checked_add(t))
            .ok_or(Error::Overflow("stirling_weighted_sum"))?;
    }
    Ok(acc)
}

/// Leibniz terms of an `n x n` matrix `M_F` surviving cancellation:
/// `Σ_k s(n,k) 2^(n-k)`.
pub fn surviving_term_count(n: usize) -> Result<u128> {
    stirling_weighted_sum(n, 2)
}

/// `v_n = (2n-1) v_(n-1) - (n-1) v_(n-2)`, `v_0 = v_1 = 1`.
pub fn sylvester_v(n: usize) -> Result<u128> {
    let (mut prev, mut cur) = (1u128, 1u128);
    for m in 2..=n as u128 {
        let next = (2 * m - 1)
            .checked_mul(cur)
            .and_then(|x| x.checked_sub((m - 1).checked_mul(prev)?))
            .ok_or(Error::Overflow("sylvester_v"))?;
        prev = cur;
        cur = next;
    }
    Ok(cur)
}

/// Largest matrix size for which [`distinct_skew_terms`] is computed.
pub const MAX_SKEW_SIZE: usize = 8;

/// Distinct monomials in the determinant of the generic `m x m`
/// antisymmetric matrix, `m` even and at most [`MAX_SKEW_SIZE`].
pub fn distinct_skew_terms(m: usize) -> Result<usize> {
    if m % 2 == 1 || m == 0 || m > MAX_SKEW_SIZE {
        return Err(Error::SizeOutOfRange {
            n: m,
            reason: format!("expected an even size in 2..={MAX_SKEW_SIZE}"),
        });
    }
    Ok(leibniz_determinant(&antisymmetric_matrix(m)).count_distinct_terms())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CountTable {
    pub n: usize,
    /// `(2n-1)!!`
    pub double_factorial: u128,
    /// `s(n, 1..=n)`
    pub stirling_row: Vec<u128>,
    /// `Σ_k s(n,k) 2^(n-k)`
    pub weighted_sum: u128,
    pub sylvester_v: u128,
}

pub fn count_table(n: usize) -> Result<CountTable> {
    let row = stirling_row(n)?;
    Ok(CountTable {
        n,
        double_factorial: double_factorial(2 * n as i64 - 1)?,
        stirling_row: row.into_iter().skip(1).collect(),
        weighted_sum: surviving_term_count(n)?,
        sylvester_v: sylvester_v(n)?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn double_factorials() {
        assert_eq!(double_factorial(5).unwrap(), 15);
        assert_eq!(double_factorial(-1).unwrap(), 1);
        assert_eq!(double_factorial(9).unwrap(), 945);
        assert!(double_factorial(4).is_err());
        assert!(double_factorial(-3).is_err());
    }

    #[test]
    fn stirling_values() {
        assert_eq!(stirling_first_unsigned(3, 1).unwrap(), 2);
        assert_eq!(stirling_first_unsigned(4, 2).unwrap(), 11);
        for n in 0..10 {
            assert_eq!(stirling_first_unsigned(n, n).unwrap(), 1);
        }
        assert!(stirling_first_unsigned(2, 3).is_err());
    }

    #[test]
    fn surviving_counts() {
        assert_eq!(surviving_term_count(1).unwrap(), 1);
        assert_eq!(surviving_term_count(3).unwrap(), 15);
        assert_eq!(surviving_term_count(6).unwrap(), 10395);
    }

    #[test]
    fn sylvester_sequence() {
        assert_eq!(sylvester_v(0).unwrap(), 1);
        assert_eq!(sylvester_v(1).unwrap(), 1);
        assert_eq!(sylvester_v(2).unwrap(), 2);
        assert_eq!(sylvester_v(3).unwrap(), 8);
    }

    #[test]
    fn skew_term_counts() {
        assert_eq!(distinct_skew_terms(2).unwrap(), 1);
        assert_eq!(distinct_skew_terms(4).unwrap(), 6);
        assert!(distinct_skew_terms(3).is_err());
        assert!(distinct_skew_terms(10).is_err());
    }

    #[test]
    fn table_for_one() {
        let t = count_table(1).unwrap();
        assert_eq!(t.double_factorial, 1);
        assert_eq!(t.weighted_sum, 1);
        assert_eq!(t.stirling_row, vec![1]);
    }
}
