use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use super::poly::ExactPoly;
use crate::error::{AnalysisError, Result};

/// Dense matrix of integer polynomials.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExactMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<ExactPoly>,
}

impl ExactMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            entries: vec![ExactPoly::zero(); rows * cols],
        }
    }

    pub fn from_rows(rows: Vec<Vec<ExactPoly>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Self {
            rows: r,
            cols: c,
            entries: rows.into_iter().flatten().collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &ExactPoly {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: ExactPoly) {
        self.entries[i * self.cols + j] = value;
    }

    fn check_selection(&self, row_set: &[usize], col_set: &[usize]) -> Result<()> {
        if row_set.len() != col_set.len() {
            return Err(AnalysisError::Dimension(format!(
                "{} rows selected against {} columns",
                row_set.len(),
                col_set.len()
            )));
        }
        if row_set.iter().any(|&i| i >= self.rows) || col_set.iter().any(|&j| j >= self.cols) {
            return Err(AnalysisError::Dimension(format!(
                "selection outside {}x{} matrix",
                self.rows, self.cols
            )));
        }
        if col_set.len() > 20 {
            return Err(AnalysisError::GuardExceeded {
                what: "minor size",
                actual: col_set.len(),
                limit: 20,
            });
        }
        Ok(())
    }
}

/// Determinant of the submatrix on `row_set x col_set`, by Laplace
/// expansion memoised over column subsets.
pub fn minor_determinant(m: &ExactMatrix, row_set: &[usize], col_set: &[usize]) -> Result<ExactPoly> {
    m.check_selection(row_set, col_set)?;
    let k = col_set.len();
    // det[mask]: determinant of the first popcount(mask) selected rows
    // against the selected columns in `mask`.
    let mut det = vec![ExactPoly::zero(); 1 << k];
    det[0] = ExactPoly::one();
    let mut masks: Vec<usize> = (1..1usize << k).collect();
    masks.sort_by_key(|m| m.count_ones());
    for mask in masks {
        let t = mask.count_ones() as usize;
        let row = row_set[t - 1];
        let mut acc = ExactPoly::zero();
        let mut position = 0;
        for (bit, &col) in col_set.iter().enumerate() {
            if mask >> bit & 1 == 0 {
                continue;
            }
            let entry = m.get(row, col);
            let sub = &det[mask & !(1 << bit)];
            if !entry.is_zero() && !sub.is_zero() {
                let term = entry * sub;
                acc = if (t - 1 + position).is_multiple_of(2) {
                    &acc + &term
                } else {
                    &acc - &term
                };
            }
            position += 1;
        }
        det[mask] = acc;
    }
    Ok(det.pop().unwrap())
}

/// Determinant of the selected submatrix by fraction-free (Bareiss)
/// elimination with exact polynomial division.
pub fn bareiss_determinant(m: &ExactMatrix, row_set: &[usize], col_set: &[usize]) -> Result<ExactPoly> {
    m.check_selection(row_set, col_set)?;
    let k = row_set.len();
    if k == 0 {
        return Ok(ExactPoly::one());
    }
    let mut a: Vec<Vec<ExactPoly>> = row_set
        .iter()
        .map(|&i| col_set.iter().map(|&j| m.get(i, j).clone()).collect())
        .collect();
    let mut negate = false;
    let mut prev = ExactPoly::one();
    for i in 0..k - 1 {
        if a[i][i].is_zero() {
            let Some(swap) = (i + 1..k).find(|&r| !a[r][i].is_zero()) else {
                return Ok(ExactPoly::zero());
            };
            a.swap(i, swap);
            negate = !negate;
        }
        for r in i + 1..k {
            for c in i + 1..k {
                let num = &(&a[r][c] * &a[i][i]) - &(&a[r][i] * &a[i][c]);
                a[r][c] = num
                    .exact_div(&prev)
                    .expect("Bareiss step divides exactly");
            }
            a[r][i] = ExactPoly::zero();
        }
        prev = a[i][i].clone();
    }
    let d = a[k - 1][k - 1].clone();
    Ok(if negate { -&d } else { d })
}

/// Rank of an integer matrix by fraction-free row reduction.
pub fn integer_rank(rows: &[Vec<BigInt>]) -> usize {
    let mut a: Vec<Vec<BigInt>> = rows.to_vec();
    let ncols = a.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..ncols {
        let Some(p) = (rank..a.len()).find(|&r| !a[r][col].is_zero()) else {
            continue;
        };
        a.swap(rank, p);
        let pivot_row = a[rank].clone();
        for row in a.iter_mut().skip(rank + 1) {
            if row[col].is_zero() {
                continue;
            }
            let factor = row[col].clone();
            let piv = &pivot_row[col];
            let mut g = BigInt::zero();
            for c in col..ncols {
                let v = &row[c] * piv - &factor * &pivot_row[c];
                g = g.gcd(&v);
                row[c] = v;
            }
            if g > BigInt::from(1) {
                for v in &mut row[col..] {
                    *v = &*v / &g;
                }
            }
            debug_assert!(row[col].is_zero());
        }
        rank += 1;
        if rank == a.len() {
            break;
        }
    }
    rank
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(c: &[i64]) -> ExactPoly {
        ExactPoly::from_i64s(c)
    }

    /// Plain recursive cofactor expansion along the first row.
    fn cofactor(a: &[Vec<ExactPoly>]) -> ExactPoly {
        let n = a.len();
        if n == 0 {
            return ExactPoly::one();
        }
        let mut acc = ExactPoly::zero();
        for j in 0..n {
            let sub: Vec<Vec<ExactPoly>> = a[1..]
                .iter()
                .map(|row| row.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, v)| v.clone()).collect())
                .collect();
            let term = &a[0][j] * &cofactor(&sub);
            acc = if j % 2 == 0 { &acc + &term } else { &acc - &term };
        }
        acc
    }

    #[test]
    fn small_determinants() {
        let m = ExactMatrix::from_rows(vec![vec![p(&[1, 3])]]);
        assert_eq!(minor_determinant(&m, &[0], &[0]).unwrap(), p(&[1, 3]));

        let m = ExactMatrix::from_rows(vec![
            vec![p(&[0, 1]), ExactPoly::zero()],
            vec![ExactPoly::zero(), p(&[-2, 1])],
        ]);
        assert_eq!(minor_determinant(&m, &[0, 1], &[0, 1]).unwrap(), p(&[0, -2, 1]));
        assert_eq!(bareiss_determinant(&m, &[0, 1], &[0, 1]).unwrap(), p(&[0, -2, 1]));

        assert!(matches!(
            minor_determinant(&m, &[0], &[0, 1]),
            Err(AnalysisError::Dimension(_))
        ));
        assert!(minor_determinant(&m, &[0, 2], &[0, 1]).is_err());
    }

    #[test]
    fn swaps_rows_on_zero_pivot() {
        let m = ExactMatrix::from_rows(vec![
            vec![ExactPoly::zero(), p(&[1])],
            vec![p(&[1]), ExactPoly::zero()],
        ]);
        assert_eq!(bareiss_determinant(&m, &[0, 1], &[0, 1]).unwrap(), p(&[-1]));
        assert_eq!(minor_determinant(&m, &[0, 1], &[0, 1]).unwrap(), p(&[-1]));
    }

    #[test]
    fn integer_rank_examples() {
        let i = |v: &[i64]| v.iter().map(|&x| BigInt::from(x)).collect::<Vec<_>>();
        assert_eq!(integer_rank(&[i(&[1, 2]), i(&[2, 4])]), 1);
        assert_eq!(integer_rank(&[i(&[0, 1, 0]), i(&[1, 0, 0]), i(&[3, 5, 0])]), 2);
        assert_eq!(integer_rank(&[i(&[0, 0]), i(&[0, 0])]), 0);
    }

    fn arb_matrix(n: usize) -> impl Strategy<Value = Vec<Vec<ExactPoly>>> {
        proptest::collection::vec(
            proptest::collection::vec(
                proptest::collection::vec(-9i64..=9, 0..=3).prop_map(|c| ExactPoly::from_i64s(&c)),
                n,
            ),
            n,
        )
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]
        #[test]
        fn three_determinant_routes_agree(rows in arb_matrix(4)) {
            let m = ExactMatrix::from_rows(rows.clone());
            let all = [0, 1, 2, 3];
            let expected = cofactor(&rows);
            prop_assert_eq!(minor_determinant(&m, &all, &all).unwrap(), expected.clone());
            prop_assert_eq!(bareiss_determinant(&m, &all, &all).unwrap(), expected);
        }
    }
}
