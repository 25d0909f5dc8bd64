//! Exact Gaussian elimination over complex rationals.

use crate::qcomplex::QComplex;

/// Rank of the matrix whose rows are `rows`.
pub fn rank(rows: &[Vec<QComplex>]) -> usize {
    let mut m: Vec<Vec<QComplex>> = rows.to_vec();
    let cols = m.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let pivot_inv = m[r][c].inv().expect("pivot is nonzero");
        let (top, rest) = m.split_at_mut(r + 1);
        let pivot_row = &top[r];
        for row in rest {
            if row[c].is_zero() {
                continue;
            }
            let factor = &row[c] * &pivot_inv;
            for (x, p) in row[c..cols].iter_mut().zip(&pivot_row[c..cols]) {
                *x = &*x - &(&factor * p);
            }
        }
        r += 1;
        if r == m.len() {
            break;
        }
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;

    fn row(v: &[i64]) -> Vec<QComplex> {
        v.iter().map(|&x| QComplex::int(x)).collect()
    }

    #[test]
    fn ranks() {
        assert_eq!(rank(&[]), 0);
        assert_eq!(rank(&[row(&[0, 0])]), 0);
        assert_eq!(rank(&[row(&[1, 2]), row(&[2, 4])]), 1);
        assert_eq!(rank(&[row(&[1, 0, 1]), row(&[0, 1, 1]), row(&[1, 1, 2])]), 2);
        assert_eq!(rank(&[row(&[1, 0]), row(&[0, 1]), row(&[1, 1])]), 2);
    }
}
