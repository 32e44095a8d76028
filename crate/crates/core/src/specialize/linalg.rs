//! Dense exact linear algebra over a [`Field`].

use super::field::Field;

/// Row-major dense matrix.
pub type Matrix<E> = Vec<Vec<E>>;

/// Reduced row echelon form in place; returns the pivot columns.
pub fn rref<F: Field>(field: &F, rows: &mut Matrix<F::Elem>) -> Vec<usize> {
    let n_rows = rows.len();
    let n_cols = rows.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..n_cols {
        if r == n_rows {
            break;
        }
        let Some(p) = (r..n_rows).find(|&i| !field.is_zero(&rows[i][c])) else {
            continue;
        };
        rows.swap(r, p);
        let inv = field.inv(&rows[r][c]).expect("pivot is non-zero");
        for x in rows[r].iter_mut() {
            *x = field.mul(x, &inv);
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || field.is_zero(&row[c]) {
                continue;
            }
            let factor = row[c].clone();
            for (x, p) in row.iter_mut().zip(&pivot_row).skip(c) {
                *x = field.sub(x, &field.mul(&factor, p));
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank<F: Field>(field: &F, matrix: &Matrix<F::Elem>) -> usize {
    let mut m = matrix.clone();
    rref(field, &mut m).len()
}

/// A basis of `{x : A x = 0}`, one vector per free column.
pub fn nullspace<F: Field>(
    field: &F,
    matrix: &Matrix<F::Elem>,
    n_cols: usize,
) -> Vec<Vec<F::Elem>> {
    let mut m = matrix.clone();
    let pivots = rref(field, &mut m);
    let free = (0..n_cols).filter(|c| !pivots.contains(c));
    free.map(|fc| {
        let mut v = vec![field.zero(); n_cols];
        v[fc] = field.one();
        for (r, &pc) in pivots.iter().enumerate() {
            v[pc] = field.neg(&m[r][fc]);
        }
        v
    })
    .collect()
}

pub fn mat_vec<F: Field>(field: &F, a: &Matrix<F::Elem>, v: &[F::Elem]) -> Vec<F::Elem> {
    a.iter()
        .map(|row| {
            row.iter().zip(v).fold(field.zero(), |acc, (x, y)| {
                field.add(&acc, &field.mul(x, y))
            })
        })
        .collect()
}

pub fn mat_mul<F: Field>(field: &F, a: &Matrix<F::Elem>, b: &Matrix<F::Elem>) -> Matrix<F::Elem> {
    let n = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|row| {
            (0..n)
                .map(|j| {
                    row.iter().zip(b).fold(field.zero(), |acc, (x, brow)| {
                        field.add(&acc, &field.mul(x, &brow[j]))
                    })
                })
                .collect()
        })
        .collect()
}

pub fn identity<F: Field>(field: &F, n: usize) -> Matrix<F::Elem> {
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { field.one() } else { field.zero() })
                .collect()
        })
        .collect()
}

/// Incrementally maintained echelon basis of a subspace.
#[derive(Debug, Clone)]
pub struct Span<F: Field> {
    field: F,
    /// Each row is normalized to 1 at its pivot, and no other stored row has
    /// a non-zero entry in that column.
    rows: Vec<(usize, Vec<F::Elem>)>,
}

impl<F: Field> Span<F> {
    pub fn new(field: F) -> Self {
        Span {
            field,
            rows: Vec::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    /// Reduces `v` against the stored basis; the zero vector means `v` was
    /// already in the span.
    pub fn reduce(&self, v: &[F::Elem]) -> Vec<F::Elem> {
        let f = &self.field;
        let mut v = v.to_vec();
        for (pc, row) in &self.rows {
            if f.is_zero(&v[*pc]) {
                continue;
            }
            let factor = v[*pc].clone();
            for (x, r) in v.iter_mut().zip(row) {
                *x = f.sub(x, &f.mul(&factor, r));
            }
        }
        v
    }

    pub fn contains(&self, v: &[F::Elem]) -> bool {
        self.reduce(v).iter().all(|x| self.field.is_zero(x))
    }

    /// Adds `v`; returns whether the dimension grew.
    pub fn insert(&mut self, v: &[F::Elem]) -> bool {
        let f = self.field.clone();
        let mut v = self.reduce(v);
        let Some(pc) = v.iter().position(|x| !f.is_zero(x)) else {
            return false;
        };
        let inv = f.inv(&v[pc]).expect("non-zero");
        for x in v.iter_mut() {
            *x = f.mul(x, &inv);
        }
        for (_, row) in self.rows.iter_mut() {
            if f.is_zero(&row[pc]) {
                continue;
            }
            let factor = row[pc].clone();
            for (x, r) in row.iter_mut().zip(&v) {
                *x = f.sub(x, &f.mul(&factor, r));
            }
        }
        self.rows.push((pc, v));
        true
    }

    pub fn basis(&self) -> impl Iterator<Item = &Vec<F::Elem>> {
        self.rows.iter().map(|(_, r)| r)
    }
}
