//! Exact determinants and ranks: fraction-free elimination over Q, plain
//! Gaussian elimination over F_p.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::scalars::{Field, FieldValue};

/// A dense square or rectangular matrix over one field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<FieldValue>,
}

impl Matrix {
    pub fn zeros(field: Field, rows: usize, cols: usize) -> Self {
        Matrix {
            field,
            rows,
            cols,
            data: vec![field.zero(); rows * cols],
        }
    }

    pub fn from_rows(field: Field, rows: Vec<Vec<FieldValue>>) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        let n = rows.len();
        let mut data = Vec::with_capacity(n * cols);
        for row in rows {
            if row.len() != cols {
                return Err(Error::domain("ragged matrix rows"));
            }
            for v in row {
                if v.field() != field {
                    return Err(Error::domain(format!("entry over {} in a matrix over {field}", v.field())));
                }
                data.push(v);
            }
        }
        Ok(Matrix {
            field,
            rows: n,
            cols,
            data,
        })
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &FieldValue {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: FieldValue) {
        debug_assert_eq!(v.field(), self.field);
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[FieldValue] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(FieldValue::is_zero)
    }

    pub fn is_symmetric(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    pub fn identity(field: Field, n: usize) -> Self {
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    pub fn determinant(&self) -> Result<FieldValue> {
        if self.rows != self.cols {
            return Err(Error::domain(format!(
                "determinant of a {}x{} matrix",
                self.rows, self.cols
            )));
        }
        match self.field {
            Field::Prime(p) => Ok(FieldValue::Residue {
                p,
                value: eliminate_mod_p(self.residues(p), self.cols, p).1,
            }),
            Field::Rationals => {
                let (ints, scale) = self.cleared();
                let (_, det) = bareiss(ints, self.cols);
                Ok(FieldValue::Rational(BigRational::new(det, scale)))
            }
        }
    }

    pub fn rank(&self) -> usize {
        match self.field {
            Field::Prime(p) => eliminate_mod_p(self.residues(p), self.cols, p).0,
            Field::Rationals => bareiss(self.cleared().0, self.cols).0,
        }
    }

    fn residues(&self, p: u64) -> Vec<Vec<u64>> {
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .map(|v| match v {
                        FieldValue::Residue { value, .. } => *value,
                        FieldValue::Rational(_) => unreachable!("matrix field is F_{p}"),
                    })
                    .collect()
            })
            .collect()
    }

    /// Rows scaled to integers, with the product of the row scales.
    fn cleared(&self) -> (Vec<Vec<BigInt>>, BigInt) {
        let mut scale = BigInt::one();
        let rows = (0..self.rows)
            .map(|i| {
                let row: Vec<&BigRational> = self
                    .row(i)
                    .iter()
                    .map(|v| v.as_rational().expect("matrix field is Q"))
                    .collect();
                let l = row.iter().fold(BigInt::one(), |acc, r| acc.lcm(r.denom()));
                scale *= &l;
                row.iter()
                    .map(|r| r.numer() * (&l / r.denom()))
                    .collect()
            })
            .collect();
        (rows, scale)
    }
}

/// Returns `(rank, det)`; `det` is meaningful only for square input.
fn eliminate_mod_p(mut a: Vec<Vec<u64>>, cols: usize, p: u64) -> (usize, u64) {
    let mulm = |x: u64, y: u64| ((x as u128 * y as u128) % p as u128) as u64;
    let inv = |x: u64| {
        let (mut base, mut e, mut acc) = (x, p - 2, 1u64);
        while e > 0 {
            if e & 1 == 1 {
                acc = mulm(acc, base);
            }
            base = mulm(base, base);
            e >>= 1;
        }
        acc
    };
    let n = a.len();
    let mut det = 1 % p;
    let mut rank = 0;
    for col in 0..cols {
        let Some(piv) = (rank..n).find(|&r| a[r][col] != 0) else {
            det = 0;
            continue;
        };
        if piv != rank {
            a.swap(piv, rank);
            det = (p - det) % p;
        }
        let pv = a[rank][col];
        det = mulm(det, pv);
        let pinv = inv(pv);
        for r in rank + 1..n {
            if a[r][col] == 0 {
                continue;
            }
            let f = mulm(a[r][col], pinv);
            for c in col..cols {
                let sub = mulm(f, a[rank][c]);
                a[r][c] = (a[r][c] + p - sub) % p;
            }
        }
        rank += 1;
    }
    if rank < n {
        det = 0;
    }
    (rank, det)
}

/// Fraction-free Bareiss elimination; returns `(rank, det)`.
fn bareiss(mut a: Vec<Vec<BigInt>>, cols: usize) -> (usize, BigInt) {
    let n = a.len();
    let mut sign = 1i32;
    let mut prev = BigInt::one();
    let mut rank = 0;
    for col in 0..cols {
        let Some(piv) = (rank..n).find(|&r| !a[r][col].is_zero()) else {
            continue;
        };
        if piv != rank {
            a.swap(piv, rank);
            sign = -sign;
        }
        for r in rank + 1..n {
            for c in col + 1..cols {
                let v = &a[rank][col] * &a[r][c] - &a[r][col] * &a[rank][c];
                a[r][c] = v / &prev;
            }
            a[r][col] = BigInt::zero();
        }
        prev = a[rank][col].clone();
        rank += 1;
    }
    let det = if rank == n && n == cols {
        if n == 0 {
            BigInt::one()
        } else {
            prev * sign
        }
    } else {
        BigInt::zero()
    };
    (rank, det)
}
