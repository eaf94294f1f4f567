//! Dense matrices over an exact field with Gauss-Jordan elimination.

use thiserror::Error;

use crate::field::Field;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LinalgError {
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("system matrix is singular")]
    Singular,
}

/// Row-major dense matrix.
#[derive(Clone, PartialEq, Eq, Debug, Hash)]
pub struct Matrix<E> {
    rows: usize,
    cols: usize,
    data: Vec<E>,
}

impl<E: Clone> Matrix<E> {
    /// Panics if the rows have unequal lengths.
    pub fn from_rows(rows: Vec<Vec<E>>) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == cols), "ragged matrix");
        let n = rows.len();
        Matrix { rows: n, cols, data: rows.into_iter().flatten().collect() }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> E) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn zeros<F: Field<Elem = E>>(field: &F, rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![field.zero(); rows * cols] }
    }

    pub fn identity<F: Field<Elem = E>>(field: &F, n: usize) -> Self {
        Self::from_fn(n, n, |i, j| if i == j { field.one() } else { field.zero() })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &E {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: E) {
        self.data[i * self.cols + j] = value;
    }

    pub fn row(&self, i: usize) -> &[E] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<E> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<E>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    /// Rows `start..end` as a new matrix.
    pub fn row_range(&self, start: usize, end: usize) -> Self {
        Matrix {
            rows: end - start,
            cols: self.cols,
            data: self.data[start * self.cols..end * self.cols].to_vec(),
        }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    /// `[[a, b], [c, d]]` using the field's element printer.
    pub fn format<F: Field<Elem = E>>(&self, field: &F) -> String {
        let rows: Vec<String> = (0..self.rows)
            .map(|i| {
                let cells: Vec<String> = self.row(i).iter().map(|x| field.format(x)).collect();
                format!("[{}]", cells.join(", "))
            })
            .collect();
        format!("[{}]", rows.join(", "))
    }
}

pub fn mul<F: Field>(
    field: &F,
    a: &Matrix<F::Elem>,
    b: &Matrix<F::Elem>,
) -> Result<Matrix<F::Elem>, LinalgError> {
    if a.cols != b.rows {
        return Err(LinalgError::Dimension(format!(
            "{}x{} times {}x{}",
            a.rows, a.cols, b.rows, b.cols
        )));
    }
    Ok(Matrix::from_fn(a.rows, b.cols, |i, j| {
        (0..a.cols).fold(field.zero(), |acc, k| {
            let x = a.get(i, k);
            if field.is_zero(x) {
                acc
            } else {
                field.add(&acc, &field.mul(x, b.get(k, j)))
            }
        })
    }))
}

/// Row vector times matrix, `v·A`.
pub fn vec_mul<F: Field>(
    field: &F,
    v: &[F::Elem],
    a: &Matrix<F::Elem>,
) -> Result<Vec<F::Elem>, LinalgError> {
    if v.len() != a.rows {
        return Err(LinalgError::Dimension(format!(
            "vector of length {} times {}x{}",
            v.len(),
            a.rows,
            a.cols
        )));
    }
    let row = Matrix { rows: 1, cols: v.len(), data: v.to_vec() };
    Ok(mul(field, &row, a)?.data)
}

/// Reduced row echelon form and the pivot column of each nonzero row.
/// Pivot choice is the first nonzero entry in the column, which keeps the
/// result canonical in every backend.
pub fn rref<F: Field>(field: &F, a: &Matrix<F::Elem>) -> (Matrix<F::Elem>, Vec<usize>) {
    let mut m = a.clone();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..m.cols {
        if r == m.rows {
            break;
        }
        let Some(p) = (r..m.rows).find(|&i| !field.is_zero(m.get(i, c))) else {
            continue;
        };
        m.swap_rows(r, p);
        let inv = field.inv(m.get(r, c)).expect("nonzero pivot");
        for j in c..m.cols {
            let v = field.mul(m.get(r, j), &inv);
            m.set(r, j, v);
        }
        for i in 0..m.rows {
            if i == r || field.is_zero(m.get(i, c)) {
                continue;
            }
            let factor = m.get(i, c).clone();
            for j in c..m.cols {
                let v = field.sub(m.get(i, j), &field.mul(&factor, m.get(r, j)));
                m.set(i, j, v);
            }
        }
        pivots.push(c);
        r += 1;
    }
    (m, pivots)
}

/// Reduced column echelon form, `rref(Aᵀ)ᵀ`, with the pivot row of each
/// nonzero column.
pub fn rcef<F: Field>(field: &F, a: &Matrix<F::Elem>) -> (Matrix<F::Elem>, Vec<usize>) {
    let (r, pivots) = rref(field, &a.transpose());
    (r.transpose(), pivots)
}

pub fn rank<F: Field>(field: &F, a: &Matrix<F::Elem>) -> usize {
    rref(field, a).1.len()
}

/// Solve `x·A = b` for square nonsingular `A`.
pub fn solve_row_system<F: Field>(
    field: &F,
    a: &Matrix<F::Elem>,
    b: &[F::Elem],
) -> Result<Vec<F::Elem>, LinalgError> {
    let n = a.rows;
    if a.cols != n || b.len() != n {
        return Err(LinalgError::Dimension(format!(
            "{}x{} system with right-hand side of length {}",
            a.rows,
            a.cols,
            b.len()
        )));
    }
    // x·A = b  ⇔  Aᵀ·xᵀ = bᵀ; eliminate on [Aᵀ | b]
    let at = a.transpose();
    let aug = Matrix::from_fn(n, n + 1, |i, j| if j < n { at.get(i, j).clone() } else { b[i].clone() });
    let (red, pivots) = rref(field, &aug);
    if pivots.len() < n || pivots[n - 1] >= n {
        return Err(LinalgError::Singular);
    }
    Ok((0..n).map(|i| red.get(i, n).clone()).collect())
}

/// A basis of `{v : v·A = 0}`.
pub fn left_kernel<F: Field>(field: &F, a: &Matrix<F::Elem>) -> Vec<Vec<F::Elem>> {
    let (red, pivots) = rref(field, &a.transpose());
    let free: Vec<usize> = (0..red.cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![field.zero(); red.cols];
            v[f] = field.one();
            for (r, &p) in pivots.iter().enumerate() {
                v[p] = field.neg(red.get(r, f));
            }
            v
        })
        .collect()
}

/// If `row` is a standard basis vector ε_i, returns `i`.
pub fn canonical_index<F: Field>(field: &F, row: &[F::Elem]) -> Option<usize> {
    let mut found = None;
    for (i, x) in row.iter().enumerate() {
        if field.is_zero(x) {
            continue;
        }
        if found.is_some() || !field.is_one(x) {
            return None;
        }
        found = Some(i);
    }
    found
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{Cyclotomic, FiniteField, SkewField};
    use num_rational::BigRational;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn gf16() -> FiniteField {
        FiniteField::new(2, 4, None, "a", 1).unwrap()
    }

    fn random_matrix<F: Field>(field: &F, rng: &mut ChaCha8Rng, r: usize, c: usize) -> Matrix<F::Elem> {
        Matrix::from_fn(r, c, |_, _| field.random(rng))
    }

    #[test]
    fn rref_is_idempotent_and_preserves_row_space() {
        let f = gf16();
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..200 {
            let a = random_matrix(&f, &mut rng, 4, 6);
            let (r, piv) = rref(&f, &a);
            assert_eq!(rref(&f, &r).0, r);
            // each original row is in the row space: rank unchanged when stacked
            let mut stacked = r.to_rows();
            stacked.extend(a.to_rows());
            assert_eq!(rank(&f, &Matrix::from_rows(stacked)), piv.len());
            for (i, &c) in piv.iter().enumerate() {
                assert!(f.is_one(r.get(i, c)));
                for k in 0..r.rows() {
                    if k != i {
                        assert!(f.is_zero(r.get(k, c)));
                    }
                }
            }
        }
    }

    #[test]
    fn solve_and_kernel() {
        let f = gf16();
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        let mut solved = 0;
        while solved < 100 {
            let a = random_matrix(&f, &mut rng, 4, 4);
            let x: Vec<_> = (0..4).map(|_| f.random(&mut rng)).collect();
            let b = vec_mul(&f, &x, &a).unwrap();
            match solve_row_system(&f, &a, &b) {
                Ok(sol) => {
                    assert_eq!(sol, x);
                    solved += 1;
                }
                Err(LinalgError::Singular) => {
                    assert!(rank(&f, &a) < 4);
                    for v in left_kernel(&f, &a) {
                        assert!(vec_mul(&f, &v, &a).unwrap().iter().all(|e| f.is_zero(e)));
                    }
                    assert_eq!(left_kernel(&f, &a).len(), 4 - rank(&f, &a));
                }
                Err(e) => panic!("{e}"),
            }
        }
    }

    #[test]
    fn column_echelon_over_rationals() {
        let q: Cyclotomic<BigRational> = Cyclotomic::new(7, 3, "chi").unwrap();
        let p = |s: &str| q.parse(s).unwrap();
        let a = Matrix::from_rows(vec![
            vec![p("chi^3"), p("1")],
            vec![p("1"), p("chi^4")],
            vec![p("chi^5"), p("chi^2")],
        ]);
        let (c, piv) = rcef(&q, &a);
        assert_eq!(piv, vec![0]);
        assert_eq!(
            c,
            Matrix::from_rows(vec![
                vec![p("1"), p("0")],
                vec![p("chi^4"), p("0")],
                vec![p("chi^2"), p("0")],
            ])
        );
        assert_eq!(c.format(&q), "[[1, 0], [chi^4, 0], [chi^2, 0]]");
    }

    #[test]
    fn canonical_rows() {
        let f = gf16();
        assert_eq!(canonical_index(&f, &[f.zero(), f.one(), f.zero()]), Some(1));
        assert_eq!(canonical_index(&f, &[f.one(), f.one()]), None);
        assert_eq!(canonical_index(&f, &[f.zero(), f.generator()]), None);
        assert_eq!(canonical_index(&f, &[f.zero()]), None);
    }

    #[test]
    fn dimension_errors() {
        let f = gf16();
        let a = Matrix::zeros(&f, 2, 3);
        assert!(matches!(mul(&f, &a, &a), Err(LinalgError::Dimension(_))));
        assert!(matches!(solve_row_system(&f, &a, &[f.one()]), Err(LinalgError::Dimension(_))));
        assert_eq!(mul(&f, &Matrix::identity(&f, 2), &a).unwrap(), a);
    }
}
