//! Exact integer matrices and Smith normal form.
//!
//! Everything here is over arbitrary-precision integers: the class matrices
//! whose rank certifies independence are small but their entries come from
//! products of relator exponents, and intermediate elimination entries grow
//! quickly even when the inputs are tame.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Dense row-major integer matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> IntMatrix {
        IntMatrix { rows, cols, data: vec![BigInt::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> IntMatrix {
        let mut m = IntMatrix::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = BigInt::one();
        }
        m
    }

    /// Builds from explicit rows; `rows`/`cols` make the shape unambiguous
    /// even when the row list is empty.
    pub fn from_rows(rows: usize, cols: usize, entries: Vec<Vec<BigInt>>) -> IntMatrix {
        assert_eq!(entries.len(), rows, "row count mismatch");
        let mut data = Vec::with_capacity(rows * cols);
        for row in entries {
            assert_eq!(row.len(), cols, "column count mismatch");
            data.extend(row);
        }
        IntMatrix { rows, cols, data }
    }

    pub fn from_i64_rows(entries: &[Vec<i64>]) -> IntMatrix {
        let rows = entries.len();
        let cols = entries.first().map_or(0, Vec::len);
        IntMatrix::from_rows(
            rows,
            cols,
            entries.iter().map(|r| r.iter().map(|&v| BigInt::from(v)).collect()).collect(),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &BigInt {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: BigInt) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[BigInt] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.rows, "shape mismatch");
        let mut out = IntMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        out.data[i * other.cols + j] += a * b;
                    }
                }
            }
        }
        out
    }

    fn swap_rows(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(i * self.cols + c, j * self.cols + c);
        }
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        for r in 0..self.rows {
            self.data.swap(r * self.cols + i, r * self.cols + j);
        }
    }

    /// row_i -= q * row_j
    fn row_sub_mul(&mut self, i: usize, j: usize, q: &BigInt) {
        if q.is_zero() {
            return;
        }
        for c in 0..self.cols {
            let delta = q * self.get(j, c);
            self.data[i * self.cols + c] -= delta;
        }
    }

    /// col_i -= q * col_j
    fn col_sub_mul(&mut self, i: usize, j: usize, q: &BigInt) {
        if q.is_zero() {
            return;
        }
        for r in 0..self.rows {
            let delta = q * self.get(r, j);
            self.data[r * self.cols + i] -= delta;
        }
    }

    /// rows (i, j) <- (p*row_i + q*row_j, r*row_i + s*row_j)
    fn row_pair_transform(
        &mut self,
        i: usize,
        j: usize,
        p: &BigInt,
        q: &BigInt,
        r: &BigInt,
        s: &BigInt,
    ) {
        for c in 0..self.cols {
            let a = self.get(i, c).clone();
            let b = self.get(j, c).clone();
            self.data[i * self.cols + c] = p * &a + q * &b;
            self.data[j * self.cols + c] = r * &a + s * &b;
        }
    }

    /// cols (i, j) <- (p*col_i + r*col_j, q*col_i + s*col_j), i.e. column
    /// right-multiplication by [[p, q], [r, s]].
    fn col_pair_transform(
        &mut self,
        i: usize,
        j: usize,
        p: &BigInt,
        q: &BigInt,
        r: &BigInt,
        s: &BigInt,
    ) {
        for row in 0..self.rows {
            let a = self.get(row, i).clone();
            let b = self.get(row, j).clone();
            self.data[row * self.cols + i] = &a * p + &b * r;
            self.data[row * self.cols + j] = &a * q + &b * s;
        }
    }

    fn negate_row(&mut self, i: usize) {
        for c in 0..self.cols {
            let v = std::mem::take(&mut self.data[i * self.cols + c]);
            self.data[i * self.cols + c] = -v;
        }
    }
}

/// Smith normal form `U * M * V = D` with `U`, `V` unimodular and `D`
/// diagonal, entries positive, each dividing the next.
#[derive(Clone, Debug)]
pub struct SmithDecomposition {
    /// The nonzero diagonal of `D`: positive, divisibility-chained.
    pub invariant_factors: Vec<BigInt>,
    /// Unimodular row transform (rows x rows).
    pub u: IntMatrix,
    /// Unimodular column transform (cols x cols).
    pub v: IntMatrix,
}

impl SmithDecomposition {
    pub fn rank(&self) -> usize {
        self.invariant_factors.len()
    }

    /// The diagonal matrix `D` in the original shape.
    pub fn diagonal_matrix(&self, rows: usize, cols: usize) -> IntMatrix {
        let mut d = IntMatrix::zeros(rows, cols);
        for (i, f) in self.invariant_factors.iter().enumerate() {
            d.set(i, i, f.clone());
        }
        d
    }

    /// Rows spanning the left kernel of the original matrix: the rows of `U`
    /// past the rank, since those rows of `U * M` vanish.
    pub fn left_kernel_rows(&self) -> Vec<Vec<BigInt>> {
        (self.rank()..self.u.rows()).map(|i| self.u.row(i).to_vec()).collect()
    }
}

/// Finds the entry of minimum nonzero absolute value in the trailing
/// submatrix starting at `(t, t)`.
fn min_abs_pivot(a: &IntMatrix, t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for i in t..a.rows() {
        for j in t..a.cols() {
            let v = a.get(i, j);
            if v.is_zero() {
                continue;
            }
            match best {
                Some((bi, bj)) if a.get(bi, bj).abs() <= v.abs() => {}
                _ => best = Some((i, j)),
            }
        }
    }
    best
}

/// Diagonalizes `a` in place by unimodular row/column operations, mirroring
/// every operation into `u` and `v`.
///
/// Each pass re-selects the smallest surviving entry as the pivot and clears
/// the pivot row before the pivot column. The order matters for keeping
/// intermediate entries small: once the pivot row is zero outside the pivot,
/// the row operations that clear the column leave the trailing block
/// untouched instead of compounding its entries.
fn diagonalize(a: &mut IntMatrix, u: &mut IntMatrix, v: &mut IntMatrix) {
    let limit = a.rows().min(a.cols());
    for t in 0..limit {
        loop {
            // Floor division leaves remainders strictly smaller than the
            // pivot in absolute value, so every retry selects a strictly
            // smaller pivot and the loop terminates.
            let Some((pi, pj)) = min_abs_pivot(a, t) else { return };
            a.swap_rows(t, pi);
            u.swap_rows(t, pi);
            a.swap_cols(t, pj);
            v.swap_cols(t, pj);
            let mut dirty = false;
            for j in t + 1..a.cols() {
                if a.get(t, j).is_zero() {
                    continue;
                }
                let q = a.get(t, j).div_floor(a.get(t, t));
                a.col_sub_mul(j, t, &q);
                v.col_sub_mul(j, t, &q);
                dirty |= !a.get(t, j).is_zero();
            }
            if dirty {
                continue;
            }
            for i in t + 1..a.rows() {
                if a.get(i, t).is_zero() {
                    continue;
                }
                let q = a.get(i, t).div_floor(a.get(t, t));
                a.row_sub_mul(i, t, &q);
                u.row_sub_mul(i, t, &q);
                dirty |= !a.get(i, t).is_zero();
            }
            if !dirty {
                break;
            }
        }
    }
}

/// Computes the Smith normal form of `m`.
pub fn smith_normal_form(m: &IntMatrix) -> SmithDecomposition {
    let mut a = m.clone();
    let mut u = IntMatrix::identity(m.rows());
    let mut v = IntMatrix::identity(m.cols());
    diagonalize(&mut a, &mut u, &mut v);
    // Pivoting leaves the nonzero diagonal entries in a prefix; make them
    // positive before repairing divisibility.
    let limit = a.rows().min(a.cols());
    let mut nonzero = 0usize;
    for i in 0..limit {
        if a.get(i, i).is_zero() {
            break;
        }
        if a.get(i, i).is_negative() {
            a.negate_row(i);
            u.negate_row(i);
        }
        nonzero += 1;
    }
    // Repair divisibility pairwise: replace adjacent (d, e) with
    // (gcd, lcm) through determinant-one 2x2 transforms,
    //   [[s, t], [-e/g, d/g]] * diag(d, e) * [[1, -t*e/g], [1, s*d/g]]
    //     = diag(g, d*e/g)   where g = s*d + t*e.
    // Each repair moves prime powers toward the tail, so sweeping until
    // clean terminates.
    loop {
        let mut changed = false;
        for k in 0..nonzero.saturating_sub(1) {
            let d = a.get(k, k).clone();
            let e = a.get(k + 1, k + 1).clone();
            if e.mod_floor(&d).is_zero() {
                continue;
            }
            let ext = d.extended_gcd(&e);
            let dg = &d / &ext.gcd;
            let eg = &e / &ext.gcd;
            a.row_pair_transform(k, k + 1, &ext.x, &ext.y, &(-&eg), &dg);
            u.row_pair_transform(k, k + 1, &ext.x, &ext.y, &(-&eg), &dg);
            let one = BigInt::one();
            let q = -(&ext.y * &eg);
            let s = &ext.x * &dg;
            a.col_pair_transform(k, k + 1, &one, &q, &one, &s);
            v.col_pair_transform(k, k + 1, &one, &q, &one, &s);
            changed = true;
        }
        if !changed {
            break;
        }
    }
    let invariant_factors = (0..nonzero).map(|i| a.get(i, i).clone()).collect();
    SmithDecomposition { invariant_factors, u, v }
}

/// Rank of an integer matrix (number of invariant factors).
pub fn rank(m: &IntMatrix) -> usize {
    smith_normal_form(m).rank()
}

/// Whether the rows are linearly independent over the integers (equivalently
/// over the rationals).
pub fn rows_independent(m: &IntMatrix) -> bool {
    rank(m) == m.rows()
}

/// A nonzero integer row vector `x` with `x * M = 0`, if the rows are
/// dependent.
pub fn row_dependency(m: &IntMatrix) -> Option<Vec<BigInt>> {
    let s = smith_normal_form(m);
    s.left_kernel_rows().into_iter().next()
}

/// Solves `x * M = target` over the integers, if possible.
///
/// Writing `U M V = D`, the substitution `y = x U^{-1}` turns the system
/// into `y D = target V`, which splits into one divisibility condition per
/// invariant factor plus exact-zero conditions past the rank.
pub fn solve_left(m: &IntMatrix, target: &[BigInt]) -> Option<Vec<BigInt>> {
    assert_eq!(target.len(), m.cols(), "target length mismatch");
    let s = smith_normal_form(m);
    let mut tv = vec![BigInt::zero(); m.cols()];
    for (j, out) in tv.iter_mut().enumerate() {
        for (i, t) in target.iter().enumerate() {
            if !t.is_zero() {
                *out += t * s.v.get(i, j);
            }
        }
    }
    let r = s.rank();
    let mut y = vec![BigInt::zero(); m.rows()];
    for (j, val) in tv.iter().enumerate() {
        if j < r {
            let (q, rem) = val.div_rem(&s.invariant_factors[j]);
            if !rem.is_zero() {
                return None;
            }
            y[j] = q;
        } else if !val.is_zero() {
            return None;
        }
    }
    let mut x = vec![BigInt::zero(); m.rows()];
    for (j, out) in x.iter_mut().enumerate() {
        for (i, yi) in y.iter().enumerate() {
            if !yi.is_zero() {
                *out += yi * s.u.get(i, j);
            }
        }
    }
    Some(x)
}
