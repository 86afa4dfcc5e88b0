//! Dense matrices with exact Gaussian elimination.

use super::field::Field;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix<E> {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<Vec<E>>,
}

impl<E: Clone> Matrix<E> {
    pub fn zeros<F: Field<Elem = E>>(k: &F, rows: usize, cols: usize) -> Self {
        Self { rows, cols, data: vec![vec![k.zero(); cols]; rows] }
    }

    pub fn from_rows(cols: usize, data: Vec<Vec<E>>) -> Self {
        assert!(data.iter().all(|r| r.len() == cols), "ragged matrix");
        Self { rows: data.len(), cols, data }
    }

    pub fn push_row(&mut self, row: Vec<E>) {
        assert_eq!(row.len(), self.cols);
        self.data.push(row);
        self.rows += 1;
    }
}

/// In-place reduced row echelon form; returns the pivot columns.
pub fn rref<F: Field>(k: &F, m: &mut Matrix<F::Elem>) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..m.cols {
        if r == m.rows {
            break;
        }
        let Some(p) = (r..m.rows).find(|&i| !k.is_zero(&m.data[i][c])) else { continue };
        m.data.swap(r, p);
        let inv = k.inv(&m.data[r][c]).unwrap();
        for x in m.data[r].iter_mut().skip(c) {
            *x = k.mul(x, &inv);
        }
        let pivot_row = m.data[r].clone();
        for (i, row) in m.data.iter_mut().enumerate() {
            if i == r || k.is_zero(&row[c]) {
                continue;
            }
            let f = row[c].clone();
            for (x, y) in row.iter_mut().zip(&pivot_row).skip(c) {
                if !k.is_zero(y) {
                    *x = k.sub(x, &k.mul(&f, y));
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank<F: Field>(k: &F, m: &Matrix<F::Elem>) -> usize {
    let mut c = m.clone();
    rref(k, &mut c).len()
}

/// Basis of the right kernel `{x : M x = 0}`, one vector per free column,
/// normalized to 1 at that column.
pub fn kernel<F: Field>(k: &F, m: &Matrix<F::Elem>) -> Vec<Vec<F::Elem>> {
    let mut r = m.clone();
    let pivots = rref(k, &mut r);
    let mut is_pivot = vec![false; m.cols];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    let mut basis = Vec::new();
    for free in (0..m.cols).filter(|&c| !is_pivot[c]) {
        let mut v = vec![k.zero(); m.cols];
        v[free] = k.one();
        for (row, &p) in pivots.iter().enumerate() {
            v[p] = k.neg(&r.data[row][free]);
        }
        basis.push(v);
    }
    basis
}

pub fn mul_vec<F: Field>(k: &F, m: &Matrix<F::Elem>, v: &[F::Elem]) -> Vec<F::Elem> {
    m.data.iter().map(|row| row.iter().zip(v).fold(k.zero(), |acc, (a, b)| k.add(&acc, &k.mul(a, b)))).collect()
}

/// One solution of `M x = b`, if consistent.
pub fn solve<F: Field>(k: &F, m: &Matrix<F::Elem>, b: &[F::Elem]) -> Option<Vec<F::Elem>> {
    let mut aug = Matrix::from_rows(
        m.cols + 1,
        m.data
            .iter()
            .zip(b)
            .map(|(row, bi)| {
                let mut r = row.clone();
                r.push(bi.clone());
                r
            })
            .collect(),
    );
    let pivots = rref(k, &mut aug);
    if pivots.last() == Some(&m.cols) {
        return None;
    }
    let mut x = vec![k.zero(); m.cols];
    for (row, &p) in pivots.iter().enumerate() {
        x[p] = aug.data[row][m.cols].clone();
    }
    Some(x)
}
