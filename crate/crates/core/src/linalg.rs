//! Dense exact linear algebra over `Q` or `F_p`.
//!
//! Gauss-Jordan elimination; in characteristic zero the pivot in each column
//! is the candidate entry with the fewest numerator plus denominator bits.

use crate::scalar::{Characteristic, Coefficient};

pub type Vector = Vec<Coefficient>;

/// Reduced row echelon form of a row list.
#[derive(Debug, Clone)]
pub struct Echelon {
    pub rows: Vec<Vector>,
    /// Pivot column of each row of `rows`.
    pub pivots: Vec<usize>,
    pub cols: usize,
}

impl Echelon {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }
}

/// Gauss-Jordan elimination; zero rows are dropped and pivots normalized to 1.
pub fn rref(mut rows: Vec<Vector>, cols: usize) -> Echelon {
    let mut pivots = Vec::new();
    let mut top = 0;
    for col in 0..cols {
        if top == rows.len() {
            break;
        }
        let pick = (top..rows.len())
            .filter(|&r| !rows[r][col].is_zero())
            .min_by_key(|&r| rows[r][col].bit_size());
        let Some(pick) = pick else { continue };
        rows.swap(top, pick);
        let inv = rows[top][col].inv().expect("nonzero pivot");
        for v in rows[top].iter_mut() {
            if !v.is_zero() {
                *v = &*v * &inv;
            }
        }
        let pivot_row = rows[top].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r == top || row[col].is_zero() {
                continue;
            }
            let factor = row[col].clone();
            for (k, pv) in pivot_row.iter().enumerate().skip(col) {
                if !pv.is_zero() {
                    row[k] = &row[k] - &(&factor * pv);
                }
            }
        }
        pivots.push(col);
        top += 1;
    }
    rows.truncate(top);
    Echelon { rows, pivots, cols }
}

pub fn rank(rows: Vec<Vector>, cols: usize) -> usize {
    rref(rows, cols).rank()
}

/// Basis of `{v : A v = 0}` for `A` given by rows.
pub fn nullspace(rows: Vec<Vector>, cols: usize, ch: Characteristic) -> Vec<Vector> {
    let ech = rref(rows, cols);
    let mut is_pivot = vec![false; cols];
    for &p in &ech.pivots {
        is_pivot[p] = true;
    }
    let mut basis = Vec::new();
    for free in (0..cols).filter(|&c| !is_pivot[c]) {
        let mut v = vec![Coefficient::zero(ch); cols];
        v[free] = Coefficient::one(ch);
        for (row, &p) in ech.rows.iter().zip(&ech.pivots) {
            v[p] = -&row[free];
        }
        basis.push(v);
    }
    basis
}

/// One solution of `Σ_k c_k columns[k] = target`, free variables set to zero.
pub fn solve_columns(columns: &[Vector], target: &Vector, ch: Characteristic) -> Option<Vector> {
    let nrows = target.len();
    let ncols = columns.len();
    let rows: Vec<Vector> = (0..nrows)
        .map(|r| {
            let mut row: Vector = columns.iter().map(|c| c[r].clone()).collect();
            row.push(target[r].clone());
            row
        })
        .collect();
    let ech = rref(rows, ncols + 1);
    if ech.pivots.last() == Some(&ncols) {
        return None;
    }
    let mut sol = vec![Coefficient::zero(ch); ncols];
    for (row, &p) in ech.rows.iter().zip(&ech.pivots) {
        sol[p] = row[ncols].clone();
    }
    Some(sol)
}

/// Row space kept in reduced echelon form, for repeated membership queries.
#[derive(Debug, Clone)]
pub struct RowSpace {
    echelon: Echelon,
}

impl RowSpace {
    pub fn new(rows: Vec<Vector>, cols: usize) -> Self {
        RowSpace {
            echelon: rref(rows, cols),
        }
    }

    pub fn dim(&self) -> usize {
        self.echelon.rank()
    }

    /// Reduces `v` against the basis; zero remainder means membership.
    pub fn remainder(&self, v: &Vector) -> Vector {
        let mut v = v.clone();
        for (row, &p) in self.echelon.rows.iter().zip(&self.echelon.pivots) {
            if v[p].is_zero() {
                continue;
            }
            let factor = v[p].clone();
            for (k, rv) in row.iter().enumerate().skip(p) {
                if !rv.is_zero() {
                    v[k] = &v[k] - &(&factor * rv);
                }
            }
        }
        v
    }

    pub fn contains(&self, v: &Vector) -> bool {
        self.remainder(v).iter().all(Coefficient::is_zero)
    }
}
